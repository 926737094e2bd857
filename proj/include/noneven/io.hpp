// Copyright 2026 The Authors.
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

#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "noneven/digraph.hpp"
#include "noneven/exact_linalg.hpp"

namespace noneven {

// "rows cols" followed by `rows` lines of entries in {-1, 0, 1}; text after
// '#' is ignored. Throws ParseError.
TUMatrix parse_tu_matrix(std::istream& in);
TUMatrix parse_tu_matrix_string(const std::string& text);
void write_tu_matrix(std::ostream& out, const TUMatrix& m);

// "digraph" header, then "tail head [id]" edge lines and "vertex v" lines;
// text after '#' is ignored. Throws ParseError.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_string(const std::string& text);
void write_digraph(std::ostream& out, const Digraph& d);

}  // namespace noneven
