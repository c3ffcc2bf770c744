#include "sbm/sample.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbm/rng.hpp"

namespace sbm {
namespace {

using Edge = std::pair<std::int32_t, std::int32_t>;

// Number of Bernoulli failures before the next success. log1m_p = log(1-p).
std::int64_t geometric_gap(Xoshiro256pp& rng, double log1m_p) {
  const double g = std::floor(std::log1p(-rng.uniform01()) / log1m_p);
  if (!(g < 9.0e18)) {
    return std::numeric_limits<std::int64_t>::max() / 2;
  }
  return static_cast<std::int64_t>(g);
}

// Decodes pair index t in [0, g*(g-1)/2) to local indices a < b.
void decode_within(std::int64_t t, std::int64_t g, std::int64_t& a, std::int64_t& b) {
  // Row a starts at offset a*g - a*(a+1)/2.
  const double gd = static_cast<double>(g);
  std::int64_t row = static_cast<std::int64_t>(
      std::floor(gd - 0.5 - std::sqrt((gd - 0.5) * (gd - 0.5) - 2.0 * static_cast<double>(t))));
  auto row_start = [g](std::int64_t r) { return r * g - r * (r + 1) / 2; };
  while (row > 0 && row_start(row) > t) {
    --row;
  }
  while (row_start(row + 1) <= t) {
    ++row;
  }
  a = row;
  b = a + 1 + (t - row_start(row));
}

// Emits every sampled pair index in [0, total) with probability p each.
template <typename Fn>
void sample_pair_indices(double p, std::int64_t total, Xoshiro256pp rng, Fn&& emit) {
  if (p <= 0.0 || total <= 0) {
    return;
  }
  if (p >= 1.0) {
    for (std::int64_t t = 0; t < total; ++t) {
      emit(t);
    }
    return;
  }
  const double log1m_p = std::log1p(-p);
  std::int64_t idx = -1;
  for (;;) {
    const std::int64_t gap = geometric_gap(rng, log1m_p);
    if (idx >= total - 1 - gap) {  // idx + 1 + gap >= total, without overflow
      return;
    }
    idx += 1 + gap;
    emit(idx);
  }
}

}  // namespace

Graph sample_graph(const BlockParams& params, const Partition& partition,
                   std::uint64_t seed) {
  const std::int64_t n = params.n;
  if (partition.size() != n) {
    throw std::invalid_argument("sample_graph: partition size does not match n");
  }
  partition.validate();
  if (partition.q != params.q) {
    throw std::invalid_argument("sample_graph: partition q does not match params");
  }
  if (params.pin() > 1.0 || params.pout() > 1.0 || params.cin < 0.0 || params.cout < 0.0) {
    throw std::invalid_argument("sample_graph: edge probabilities outside [0, 1]");
  }

  const int q = params.q;
  std::vector<std::vector<std::int32_t>> members(q);
  for (std::int64_t i = 0; i < n; ++i) {
    members[partition.labels[i]].push_back(static_cast<std::int32_t>(i));
  }

  // One task per unordered block pair (r <= s); each owns a derived stream.
  struct BlockPair {
    int r, s;
  };
  std::vector<BlockPair> pairs;
  for (int r = 0; r < q; ++r) {
    for (int s = r; s < q; ++s) {
      pairs.push_back({r, s});
    }
  }
  std::vector<std::vector<Edge>> per_pair(pairs.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(pairs.size()); ++pi) {
    const auto [r, s] = pairs[pi];
    const auto& mr = members[r];
    const auto& ms = members[s];
    auto rng = substream(seed, stream_tag::kSampler +
                         static_cast<std::uint64_t>(r) * q + s);
    auto& out = per_pair[pi];
    if (r == s) {
      const std::int64_t g = static_cast<std::int64_t>(mr.size());
      const std::int64_t total = g * (g - 1) / 2;
      out.reserve(static_cast<std::size_t>(params.pin() * static_cast<double>(total) * 1.1) + 16);
      sample_pair_indices(params.pin(), total, rng, [&](std::int64_t t) {
        std::int64_t a, b;
        decode_within(t, g, a, b);
        out.emplace_back(mr[a], mr[b]);
      });
    } else {
      const std::int64_t gr = static_cast<std::int64_t>(mr.size());
      const std::int64_t gs = static_cast<std::int64_t>(ms.size());
      const std::int64_t total = gr * gs;
      out.reserve(static_cast<std::size_t>(params.pout() * static_cast<double>(total) * 1.1) + 16);
      sample_pair_indices(params.pout(), total, rng, [&](std::int64_t t) {
        out.emplace_back(mr[t / gs], ms[t % gs]);
      });
    }
  }

  // Single-owner assembly in fixed block-pair order.
  std::vector<Edge> edges;
  std::size_t total_edges = 0;
  for (const auto& chunk : per_pair) {
    total_edges += chunk.size();
  }
  edges.reserve(total_edges);
  for (const auto& chunk : per_pair) {
    edges.insert(edges.end(), chunk.begin(), chunk.end());
  }
  return build_graph(n, edges);
}

}  // namespace sbm
