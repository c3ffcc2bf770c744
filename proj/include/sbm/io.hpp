#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbm/graph.hpp"
#include "sbm/lanczos.hpp"
#include "sbm/params.hpp"

namespace sbm::io {

// Shortest round-trip decimal for a double ("nan"/"inf" spelled out).
// All text output goes through this so reruns are byte-identical.
std::string format_double(double value);

// Edge-list text format: header "# n=<n> q=<q> seed=<seed>", then one
// "i j" line per edge with i < j, 0-indexed, ascending.
void write_edge_list(std::ostream& out, const Graph& g, int q, std::uint64_t seed);

struct EdgeListFile {
  Graph graph;
  int q = 2;
  std::uint64_t seed = 0;
};
EdgeListFile read_edge_list(std::istream& in);

// Partition file: one label per line.
void write_partition(std::ostream& out, const Partition& partition);
// q = 0 infers the group count as max label + 1 (at least 2).
Partition read_partition(std::istream& in, int q = 0);

// Eigenvector matrix: 8-byte little-endian count header (number of
// vectors), then count x n doubles, row-major, little-endian.
void write_eigenvectors(std::ostream& out,
                        const std::vector<std::vector<double>>& vectors);
std::vector<std::vector<double>> read_eigenvectors(std::istream& in);

// {"eigenvalues": [...], "residuals": [...], "iterations": n,
//  "converged": bool} as a compact JSON line.
std::string spectrum_to_json(const SpectrumResult& result);

}  // namespace sbm::io
