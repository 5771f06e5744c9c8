// Copyright 2026 The permsynth authors
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

#include "permsynth/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace permsynth {

int hamming(Letter i, Letter j) { return std::popcount(i ^ j); }

namespace {

std::size_t domain_size(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
  }
  return std::size_t{1} << n;
}

void check_bijection(std::size_t size, const std::vector<Letter>& image) {
  if (image.size() != size) {
    throw std::invalid_argument("image table has " +
                                std::to_string(image.size()) +
                                " entries, expected " + std::to_string(size));
  }
  std::vector<bool> seen(size, false);
  for (Letter v : image) {
    if (v >= size || seen[v]) {
      throw std::invalid_argument("image table is not a bijection of [[" +
                                  std::to_string(size) + "]]");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(int n) : n_(n), image_(domain_size(n)) {
  std::iota(image_.begin(), image_.end(), Letter{0});
}

Permutation::Permutation(int n, std::vector<Letter> image)
    : n_(n), image_(std::move(image)) {
  check_bijection(domain_size(n), image_);
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != x) return false;
  }
  return true;
}

Transposition::Transposition(Letter x, Letter y) : a(x), b(y) {
  if (a == b) {
    throw std::invalid_argument("transposition letters must differ");
  }
  if (a > b) std::swap(a, b);
}

Permutation Transposition::as_permutation(int n) const {
  Permutation p(n);
  if (b >= p.size()) {
    throw std::invalid_argument("transposition letter out of range");
  }
  std::vector<Letter> image = p.image();
  std::swap(image[a], image[b]);
  return Permutation(n, std::move(image));
}

Cycle::Cycle(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.size() < 2) {
    throw std::invalid_argument("a cycle needs at least two letters");
  }
  auto smallest = std::min_element(letters_.begin(), letters_.end());
  std::rotate(letters_.begin(), smallest, letters_.end());
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (letters_[i] == letters_[j]) {
        throw std::invalid_argument("cycle letters must be distinct");
      }
    }
  }
}

Cycle::Cycle(std::initializer_list<Letter> letters)
    : Cycle(std::vector<Letter>(letters)) {}

bool Cycle::contains(Letter x) const {
  return std::find(letters_.begin(), letters_.end(), x) != letters_.end();
}

Cycle Cycle::rotated_to(Letter anchor) const {
  auto pos = std::find(letters_.begin(), letters_.end(), anchor);
  if (pos == letters_.end()) {
    throw std::invalid_argument("anchor is not a letter of the cycle");
  }
  Cycle c;
  c.letters_.assign(pos, letters_.end());
  c.letters_.insert(c.letters_.end(), letters_.begin(), pos);
  return c;
}

Permutation Cycle::as_permutation(int n) const {
  Permutation id(n);
  std::vector<Letter> image = id.image();
  for (Letter s : letters_) {
    if (s >= image.size()) {
      throw std::invalid_argument("cycle letter out of range");
    }
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    image[letters_[i]] = letters_[(i + 1) % letters_.size()];
  }
  return Permutation(n, std::move(image));
}

Permutation TranspositionProduct::evaluate() const {
  Permutation id(n);
  std::vector<Letter> image = id.image();
  std::vector<Letter> pos = image;  // pos[v] = index currently holding value v
  // Rightmost factor applies first; composing (a,b) on the left swaps the
  // values a and b wherever they sit in the table.
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->b >= image.size()) {
      throw std::invalid_argument("factor letter out of range");
    }
    const Letter pa = pos[it->a];
    const Letter pb = pos[it->b];
    std::swap(image[pa], image[pb]);
    std::swap(pos[it->a], pos[it->b]);
  }
  return Permutation(n, std::move(image));
}

std::string TranspositionProduct::str() const {
  if (factors.empty()) return "()";
  std::string out;
  for (const Transposition& t : factors) {
    out += "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Letter number(std::size_t limit) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a number at position " + std::to_string(pos));
    }
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > 0xffffffffu) throw ParseError("number too large");
      ++pos;
    }
    if (v >= limit) {
      throw ParseError("letter " + std::to_string(v) + " is out of range for [[" +
                       std::to_string(limit) + "]]");
    }
    return static_cast<Letter>(v);
  }
};

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  const std::size_t size = domain_size(n);
  Cursor cur{text};

  if (cur.done()) return Permutation(n);

  if (cur.peek() == '[') {
    cur.eat('[');
    std::vector<Letter> image;
    if (!cur.eat(']')) {
      image.push_back(cur.number(size));
      while (cur.eat(',')) image.push_back(cur.number(size));
      if (!cur.eat(']')) throw ParseError("expected ',' or ']' in one-line notation");
    }
    if (!cur.done()) throw ParseError("trailing input after one-line table");
    try {
      return Permutation(n, std::move(image));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  if (cur.peek() != '(') {
    throw ParseError("expected '(' or '[' at start of permutation");
  }

  // Groups are listed left to right and the rightmost applies first, so
  // each newly parsed group composes on the right of the accumulator.
  Permutation result(n);
  bool saw_group = false;
  while (cur.eat('(')) {
    saw_group = true;
    std::vector<Letter> letters;
    if (!cur.eat(')')) {
      letters.push_back(cur.number(size));
      while (cur.eat(',')) letters.push_back(cur.number(size));
      if (!cur.eat(')')) throw ParseError("expected ',' or ')' in cycle");
    }
    for (std::size_t i = 1; i < letters.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (letters[i] == letters[j]) {
          throw ParseError("letter " + std::to_string(letters[i]) +
                           " repeated within one cycle");
        }
      }
    }
    if (letters.size() >= 2) {
      result = compose(result, Cycle(letters).as_permutation(n));
    }
    // Zero- or one-letter groups are identity contributions.
  }
  if (!saw_group || !cur.done()) {
    throw ParseError("malformed cycle notation");
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.qubits() != q.qubits()) {
    throw std::invalid_argument("cannot compose permutations of different size");
  }
  std::vector<Letter> image(p.size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    image[x] = p(q(static_cast<Letter>(x)));
  }
  return Permutation(p.qubits(), std::move(image));
}

Permutation inverse(const Permutation& p) {
  std::vector<Letter> image(p.size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    image[p(static_cast<Letter>(x))] = static_cast<Letter>(x);
  }
  return Permutation(p.qubits(), std::move(image));
}

std::vector<Cycle> disjoint_cycles(const Permutation& p) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(p.size(), false);
  for (Letter start = 0; start < p.size(); ++start) {
    if (seen[start] || p(start) == start) continue;
    std::vector<Letter> letters;
    Letter x = start;
    do {
      seen[x] = true;
      letters.push_back(x);
      x = p(x);
    } while (x != start);
    cycles.emplace_back(std::move(letters));
  }
  // Scanning from the smallest start letter already yields canonical order.
  return cycles;
}

TranspositionProduct cycle_to_transpositions(const Cycle& c, int n) {
  const auto& s = c.letters();
  TranspositionProduct product{n, {}};
  product.factors.reserve(s.size() - 1);
  for (std::size_t i = s.size() - 1; i >= 1; --i) {
    product.factors.emplace_back(s[0], s[i]);
  }
  return product;
}

TranspositionProduct chain_transpositions(const Cycle& c, int n) {
  const auto& s = c.letters();
  TranspositionProduct product{n, {}};
  product.factors.reserve(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    product.factors.emplace_back(s[i], s[i + 1]);
  }
  return product;
}

TranspositionProduct chain_transpositions(const Permutation& p) {
  TranspositionProduct product{p.qubits(), {}};
  for (const Cycle& c : disjoint_cycles(p)) {
    TranspositionProduct part = chain_transpositions(c, p.qubits());
    product.factors.insert(product.factors.end(), part.factors.begin(),
                           part.factors.end());
  }
  return product;
}

Parity parity(const Permutation& p) {
  std::size_t flips = 0;
  for (const Cycle& c : disjoint_cycles(p)) {
    flips += c.length() - 1;
  }
  return flips % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<std::vector<std::uint8_t>> matrix_view(const Permutation& p) {
  if (p.qubits() > 6) {
    throw std::invalid_argument("matrix_view is a display helper, capped at n <= 6");
  }
  std::vector<std::vector<std::uint8_t>> m(p.size(),
                                           std::vector<std::uint8_t>(p.size(), 0));
  for (Letter c = 0; c < p.size(); ++c) {
    m[p(c)][c] = 1;
  }
  return m;
}

std::string to_cycle_string(const Permutation& p) {
  auto cycles = disjoint_cycles(p);
  if (cycles.empty()) return "()";
  std::string out;
  for (const Cycle& c : cycles) {
    out += "(";
    for (std::size_t i = 0; i < c.length(); ++i) {
      if (i) out += ",";
      out += std::to_string(c.letters()[i]);
    }
    out += ")";
  }
  return out;
}

std::string to_one_line_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (x) out += ",";
    out += std::to_string(p(static_cast<Letter>(x)));
  }
  return out + "]";
}

}  // namespace permsynth
