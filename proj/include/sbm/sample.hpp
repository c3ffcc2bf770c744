#pragma once

#include <cstdint>

#include "sbm/graph.hpp"
#include "sbm/params.hpp"

namespace sbm {

// Samples a graph from the planted-partition ensemble: every within-group
// pair {i,j} is an edge independently with probability cin/n, every
// between-group pair with probability cout/n. Expected O(m + n) time via
// geometric skipping over pair indices; each block pair draws from its own
// substream, so identical (params, partition, seed) triples give
// bit-identical graphs regardless of thread count.
Graph sample_graph(const BlockParams& params, const Partition& partition,
                   std::uint64_t seed);

}  // namespace sbm
