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

#ifndef SNARK_KLEIN_HPP_
#define SNARK_KLEIN_HPP_

#include <cstdint>
#include <string>

namespace snark {

// Boole colours {0, 1_1, 1_2, 1_3}. The encoding makes the Klein group
// operation a bitwise xor: 1_1 = 01, 1_2 = 10, 1_3 = 11.
enum class BooleColor : std::uint8_t {
  kZero = 0,
  kOne1 = 1,
  kOne2 = 2,
  kOne3 = 3
};

constexpr BooleColor klein_add(BooleColor a, BooleColor b) {
  return static_cast<BooleColor>(static_cast<int>(a) ^ static_cast<int>(b));
}

// Boole colour of a single edge with Tait colour c in {1, 2, 3}; colour 0
// (the fourth colour of a proper 4-edge-colouring) maps to 0.
constexpr BooleColor boole_of_color(int c) {
  return static_cast<BooleColor>(c);
}

constexpr int index_of(BooleColor b) { return static_cast<int>(b); }

// "0", "1_1", "1_2", "1_3".
std::string to_string(BooleColor b);

}  // namespace snark

#endif  // SNARK_KLEIN_HPP_
