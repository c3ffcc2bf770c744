#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sbm {

// Undirected simple graph in compressed sparse row form. Each undirected
// edge appears in both endpoints' neighbor lists; rows are sorted.
// Immutable after construction and safe for concurrent reads.
struct Graph {
  std::int64_t n = 0;
  std::int64_t m = 0;  // undirected edge count; neighbors.size() == 2m
  std::vector<std::int64_t> offsets;    // length n+1
  std::vector<std::int32_t> neighbors;  // length 2m, sorted within each row
  std::vector<std::int32_t> degrees;    // length n

  std::span<const std::int32_t> row(std::int64_t i) const {
    return {neighbors.data() + offsets[i],
            static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }

  // Structural invariants: symmetry, no self-loops, no duplicates, degree
  // bookkeeping. Throws std::runtime_error on violation.
  void validate() const;
};

// Builds a Graph from unique undirected edges (self-loops and duplicates
// rejected). Edge orientation in the input does not matter.
Graph build_graph(std::int64_t n, const std::vector<std::pair<std::int32_t, std::int32_t>>& edges);

}  // namespace sbm
