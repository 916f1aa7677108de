// Copyright 2026 The snarkmeasures Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snark/graph6.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace snark {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorKind::kMalformedGraph6, why);
}

int six_bits(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) malformed("truncated graph6 string");
  int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    malformed(fmt::format("byte {} at offset {} is outside [63, 126]", c, pos));
  }
  return c - 63;
}

}  // namespace

MultiGraph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
  }
  if (text.empty()) malformed("empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = six_bits(text, 0);
    pos = 1;
  } else if (text.size() > 1 && text[1] != '~') {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | six_bits(text, i);
    pos = 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | six_bits(text, i);
    pos = 8;
  }
  if (n > (1 << 24)) malformed("vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    malformed(fmt::format("expected {} bytes for {} vertices, got {}", expected,
                          n, text.size()));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int word = six_bits(text, pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero in a canonical encoding.
  for (; k % 6 != 0; ++k) {
    int word = six_bits(text, pos + k / 6);
    if ((word >> (5 - k % 6)) & 1) malformed("nonzero padding bits");
  }
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const MultiGraph& g) {
  if (!g.is_simple()) {
    throw Error(
        ErrorKind::kNotSimple,
        "graph6 cannot encode parallel edges; use the edge-list format");
  }
  const long long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<unsigned char> words((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    long long i = std::min(e.u, e.v);
    long long j = std::max(e.u, e.v);
    long long k = j * (j - 1) / 2 + i;
    words[k / 6] |= static_cast<unsigned char>(1 << (5 - k % 6));
  }
  for (unsigned char w : words) out.push_back(static_cast<char>(w + 63));
  return out;
}

std::vector<MultiGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("cannot open '{}'", path));
  }
  std::vector<MultiGraph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace snark
