#include "sbm/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sbm {

void Graph::validate() const {
  if (static_cast<std::int64_t>(offsets.size()) != n + 1 ||
      static_cast<std::int64_t>(degrees.size()) != n) {
    throw std::runtime_error("graph: inconsistent array sizes");
  }
  if (offsets[0] != 0 || offsets[n] != static_cast<std::int64_t>(neighbors.size()) ||
      offsets[n] != 2 * m) {
    throw std::runtime_error("graph: offset bookkeeping broken");
  }
  std::int64_t degree_sum = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto nbrs = row(i);
    if (degrees[i] != static_cast<std::int32_t>(nbrs.size())) {
      throw std::runtime_error("graph: degree mismatch at vertex " + std::to_string(i));
    }
    degree_sum += degrees[i];
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const std::int32_t j = nbrs[k];
      if (j < 0 || j >= n) {
        throw std::runtime_error("graph: neighbor out of range");
      }
      if (j == i) {
        throw std::runtime_error("graph: self-loop at vertex " + std::to_string(i));
      }
      if (k > 0 && nbrs[k - 1] >= j) {
        throw std::runtime_error("graph: row not strictly sorted at vertex " +
                                 std::to_string(i));
      }
      // Symmetry: i must appear in j's row.
      const auto back = row(j);
      if (!std::binary_search(back.begin(), back.end(), static_cast<std::int32_t>(i))) {
        throw std::runtime_error("graph: asymmetric edge " + std::to_string(i) + "-" +
                                 std::to_string(j));
      }
    }
  }
  if (degree_sum != 2 * m) {
    throw std::runtime_error("graph: degree sum != 2m");
  }
}

Graph build_graph(std::int64_t n,
                  const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
  if (n < 0) {
    throw std::invalid_argument("build_graph: negative vertex count");
  }
  Graph g;
  g.n = n;
  g.m = static_cast<std::int64_t>(edges.size());
  g.degrees.assign(n, 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("build_graph: endpoint out of range");
    }
    if (a == b) {
      throw std::invalid_argument("build_graph: self-loop rejected");
    }
    g.degrees[a]++;
    g.degrees[b]++;
  }
  g.offsets.assign(n + 1, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    g.offsets[i + 1] = g.offsets[i] + g.degrees[i];
  }
  g.neighbors.resize(2 * g.m);
  std::vector<std::int64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [a, b] : edges) {
    g.neighbors[cursor[a]++] = b;
    g.neighbors[cursor[b]++] = a;
  }
  for (std::int64_t i = 0; i < n; ++i) {
    auto begin = g.neighbors.begin() + g.offsets[i];
    auto end = g.neighbors.begin() + g.offsets[i + 1];
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end) {
      throw std::invalid_argument("build_graph: duplicate edge at vertex " +
                                  std::to_string(i));
    }
  }
  return g;
}

}  // namespace sbm
