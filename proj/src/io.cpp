#include "sbm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sbm::io {

std::string format_double(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const Graph& g, int q, std::uint64_t seed) {
  out << "# n=" << g.n << " q=" << q << " seed=" << seed << "\n";
  for (std::int64_t i = 0; i < g.n; ++i) {
    for (std::int32_t j : g.row(i)) {
      if (j > i) {
        out << i << " " << j << "\n";
      }
    }
  }
}

EdgeListFile read_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error("edge list: missing header");
  }
  EdgeListFile file;
  std::int64_t n = -1;
  {
    std::istringstream hs(header);
    std::string hash, token;
    hs >> hash;
    if (hash != "#") {
      throw std::runtime_error("edge list: header must start with '#'");
    }
    while (hs >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("edge list: malformed header token '" + token + "'");
      }
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "n") {
        n = std::stoll(value);
      } else if (key == "q") {
        file.q = std::stoi(value);
      } else if (key == "seed") {
        file.seed = std::stoull(value);
      } else {
        throw std::runtime_error("edge list: unknown header key '" + key + "'");
      }
    }
  }
  if (n < 0) {
    throw std::runtime_error("edge list: header missing n");
  }
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream ls(line);
    std::int64_t a, b;
    if (!(ls >> a >> b)) {
      throw std::runtime_error("edge list: malformed edge line '" + line + "'");
    }
    if (a >= b) {
      throw std::runtime_error("edge list: edges must satisfy i < j");
    }
    edges.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b));
  }
  file.graph = build_graph(n, edges);
  return file;
}

void write_partition(std::ostream& out, const Partition& partition) {
  for (std::int32_t label : partition.labels) {
    out << label << "\n";
  }
}

Partition read_partition(std::istream& in, int q) {
  Partition partition;
  std::string line;
  std::int32_t max_label = 0;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const std::int32_t label = std::stoi(line);
    if (label < 0) {
      throw std::runtime_error("partition: negative label");
    }
    max_label = std::max(max_label, label);
    partition.labels.push_back(label);
  }
  partition.q = q > 0 ? q : std::max(max_label + 1, 2);
  partition.validate();
  return partition;
}

void write_eigenvectors(std::ostream& out,
                        const std::vector<std::vector<double>>& vectors) {
  const std::uint64_t count = vectors.size();
  out.write(reinterpret_cast<const char*>(&count), sizeof(count));
  for (const auto& v : vectors) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(double)));
  }
}

std::vector<std::vector<double>> read_eigenvectors(std::istream& in) {
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&count), sizeof(count));
  if (!in) {
    throw std::runtime_error("eigenvectors: missing count header");
  }
  // Row length is (file size - 8) / (8 * count); read what remains.
  const auto data_start = in.tellg();
  in.seekg(0, std::ios::end);
  const auto data_end = in.tellg();
  in.seekg(data_start);
  const std::uint64_t bytes = static_cast<std::uint64_t>(data_end - data_start);
  if (count == 0) {
    return {};
  }
  if (bytes % (count * sizeof(double)) != 0) {
    throw std::runtime_error("eigenvectors: payload not divisible by count");
  }
  const std::uint64_t n = bytes / (count * sizeof(double));
  std::vector<std::vector<double>> vectors(count, std::vector<double>(n));
  for (auto& v : vectors) {
    in.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) {
      throw std::runtime_error("eigenvectors: truncated payload");
    }
  }
  return vectors;
}

std::string spectrum_to_json(const SpectrumResult& result) {
  nlohmann::json j;
  j["eigenvalues"] = result.eigenvalues;
  j["residuals"] = result.residuals;
  j["iterations"] = result.iterations;
  j["converged"] = result.converged;
  return j.dump();
}

}  // namespace sbm::io
