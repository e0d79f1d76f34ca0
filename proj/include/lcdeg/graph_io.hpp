// Copyright 2026 The lcdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text formats: edge list ("n m" header then m lines "u v"), graph6, DOT.

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "lcdeg/error.hpp"
#include "lcdeg/graph.hpp"

namespace lcdeg {

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw InputError("edge list: expected header \"n m\" with nonnegative integers");
  if (static_cast<std::size_t>(n) > Graph::kMaxVertices)
    throw InputError("edge list: order " + std::to_string(n) + " exceeds supported maximum");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v))
      throw InputError("edge list: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge list: edge " + std::to_string(u) + " " + std::to_string(v) +
                       " out of range");
    if (u == v) throw InputError("edge list: self-loop at " + std::to_string(u));
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw InputError("edge list: duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw InputError("edge list: trailing content after " + std::to_string(m) + " edges");
  return g;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

/// Upper triangle in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per
/// printable byte, most significant bit first.
inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw InputError("graph6 export supports n <= 62, got " + std::to_string(n));
  std::string s(1, static_cast<char>(63 + n));
  int filled = 0;
  unsigned char acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>((acc << 1) | (g.has_edge(i, j) ? 1 : 0));
      if (++filled == 6) {
        s.push_back(static_cast<char>(63 + acc));
        filled = 0;
        acc = 0;
      }
    }
  }
  if (filled > 0) s.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return s;
}

inline Graph from_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("graph6: empty input");
  const int head = static_cast<unsigned char>(text[0]) - 63;
  if (head < 0 || head > static_cast<int>(kGraph6MaxOrder))
    throw InputError("graph6: only orders 0..62 are supported");
  const auto n = static_cast<std::size_t>(head);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes)
    throw InputError("graph6: expected " + std::to_string(1 + bytes) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) throw InputError("graph6: byte outside printable range");
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t b = 1; b < text.size(); ++b) {
    const int byte = static_cast<unsigned char>(text[b]) - 63;
    if (byte < 0 || byte > 63) throw InputError("graph6: byte outside printable range");
  }
  return g;
}

inline void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G") {
  out << "graph " << name << " {\n";
  const auto& part = g.bipartition();
  for (Vertex u = 0; u < g.order(); ++u) {
    out << "  " << u;
    if (part) out << (part->left.test(u) ? " [shape=box]" : " [shape=ellipse]");
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream os;
  write_dot(os, g, name);
  return os.str();
}

/// Loads a file as graph6 when it ends in ".g6", otherwise as an edge list.
inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  if (path.ends_with(".g6")) {
    std::string line;
    std::getline(in, line);
    return from_graph6(line);
  }
  return read_edge_list(in);
}

}  // namespace lcdeg
