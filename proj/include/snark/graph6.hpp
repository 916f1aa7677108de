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

#ifndef SNARK_GRAPH6_HPP_
#define SNARK_GRAPH6_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

// Parses one graph6 line (trailing newline and an optional ">>graph6<<"
// header are accepted). Edges come out in graph6 bit order: (0,1), (0,2),
// (1,2), (0,3), ... which is column-major over the upper triangle.
MultiGraph parse_graph6(std::string_view text);

// Encodes a simple graph. Throws Error(kNotSimple) on parallel edges.
std::string write_graph6(const MultiGraph& g);

// Reads every non-empty line of a graph6 file.
std::vector<MultiGraph> read_graph6_file(const std::string& path);

}  // namespace snark

#endif  // SNARK_GRAPH6_HPP_
