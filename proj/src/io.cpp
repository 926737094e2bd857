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

#include "noneven/io.hpp"

#include <sstream>
#include <vector>

#include "noneven/errors.hpp"

namespace noneven {

namespace {

// Non-empty lines with comments stripped, split into tokens.
std::vector<std::pair<int, std::vector<std::string>>> tokenized_lines(
    std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int to_int(int line, const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) fail(line, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

TUMatrix parse_tu_matrix(std::istream& in) {
  const auto lines = tokenized_lines(in);
  if (lines.empty()) throw ParseError("empty matrix input");
  const auto& [first, header] = lines.front();
  if (header.size() != 2) fail(first, "expected 'rows cols'");
  const int rows = to_int(first, header[0]);
  const int cols = to_int(first, header[1]);
  if (rows < 0 || cols < 0) fail(first, "negative dimension");
  if (cols > kMaxElements) {
    fail(first, "at most " + std::to_string(kMaxElements) + " columns supported");
  }
  if (int(lines.size()) - 1 != rows) {
    throw ParseError("expected " + std::to_string(rows) + " matrix rows, got " +
                     std::to_string(lines.size() - 1));
  }
  TUMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& [number, tokens] = lines[r + 1];
    if (int(tokens.size()) != cols) {
      fail(number, "expected " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      const int v = to_int(number, tokens[c]);
      if (v < -1 || v > 1) fail(number, "entry outside {-1, 0, 1}");
      m.set(r, c, v);
    }
  }
  return m;
}

TUMatrix parse_tu_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_tu_matrix(in);
}

void write_tu_matrix(std::ostream& out, const TUMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c);
    out << '\n';
  }
}

Digraph parse_digraph(std::istream& in) {
  const auto lines = tokenized_lines(in);
  if (lines.empty() || lines.front().second != std::vector<std::string>{"digraph"}) {
    throw ParseError("digraph input must start with a 'digraph' line");
  }
  Digraph d;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, tokens] = lines[k];
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      d.add_vertex(tokens[1]);
    } else if (tokens.size() == 2 || tokens.size() == 3) {
      try {
        d.add_edge(tokens[0], tokens[1], tokens.size() == 3 ? tokens[2] : "");
      } catch (const std::exception& e) {
        fail(number, e.what());
      }
    } else {
      fail(number, "expected 'tail head [id]' or 'vertex v'");
    }
  }
  return d;
}

Digraph parse_digraph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << "digraph\n";
  // Listing every vertex keeps the vertex order on re-reading.
  for (const auto& v : d.vertices()) out << "vertex " << v << '\n';
  for (const Edge& e : d.edges()) {
    out << d.vertices()[e.tail] << ' ' << d.vertices()[e.head] << ' ' << e.id << '\n';
  }
}

}  // namespace noneven
