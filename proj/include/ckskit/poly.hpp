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

#ifndef CKSKIT_POLY_HPP_
#define CKSKIT_POLY_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ckskit/bigint.hpp"
#include <nlohmann/json.hpp>

namespace ckskit {

namespace internal {

// Appends "c*mono" to out with the sign handled as a binary operator.
inline void append_term(std::string& out, const BigInt& c,
                        const std::string& mono) {
  BigInt mag = abs(c);
  if (out.empty()) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.get_str() + "*" + mono;
  }
}

inline std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace internal

// Univariate integer polynomial in q.
class Poly1 {
 public:
  Poly1() = default;
  Poly1(long constant) { add(0, constant); }

  static Poly1 monomial(int e, const BigInt& c = 1) {
    Poly1 p;
    p.add(e, c);
    return p;
  }

  void add(int e, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  BigInt coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }

  BigInt evaluate(const BigInt& q) const {
    BigInt out = 0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      // Horner over sparse exponents.
      int next = std::next(it) == terms_.rend() ? 0 : std::next(it)->first;
      out += it->second;
      for (int k = next; k < it->first; ++k) out *= q;
    }
    return out;
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 out = a;
    for (const auto& [e, c] : b.terms_) out.add(e, c);
    return out;
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) {
    Poly1 out = a;
    for (const auto& [e, c] : b.terms_) out.add(e, -c);
    return out;
  }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 out;
    for (const auto& [e1, c1] : a.terms_) {
      for (const auto& [e2, c2] : b.terms_) out.add(e1 + e2, c1 * c2);
    }
    return out;
  }
  friend bool operator==(const Poly1& a, const Poly1& b) {
    return a.terms_ == b.terms_;
  }

  // "1 + q + q^2", increasing degree.
  std::string to_string() const {
    std::string out;
    for (const auto& [e, c] : terms_) internal::append_term(out, c, internal::power("q", e));
    return out.empty() ? "0" : out;
  }

  // Dense coefficient list, index = exponent.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (int e = 0; e <= degree(); ++e) arr.push_back(to_json_value(coefficient(e)));
    return arr;
  }

 private:
  std::map<int, BigInt> terms_;
};

// Bivariate integer polynomial in x, y.
class Poly2 {
 public:
  using Key = std::pair<int, int>;

  Poly2() = default;
  Poly2(long constant) { add(0, 0, constant); }

  static Poly2 x() { return monomial(1, 0); }
  static Poly2 y() { return monomial(0, 1); }
  static Poly2 monomial(int i, int j, const BigInt& c = 1) {
    Poly2 p;
    p.add(i, j, c);
    return p;
  }

  void add(int i, int j, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
  }

  BigInt coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, BigInt>& terms() const { return terms_; }

  BigInt evaluate(const BigInt& x, const BigInt& y) const {
    BigInt out = 0;
    for (const auto& [k, c] : terms_) {
      BigInt xp;
      BigInt yp;
      mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k.first));
      mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(k.second));
      out += c * xp * yp;
    }
    return out;
  }

  Poly2 pow(int e) const {
    Poly2 out(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  // Substitutes x <- a, y <- b.
  Poly2 substitute(const Poly2& a, const Poly2& b) const {
    int max_i = 0;
    int max_j = 0;
    for (const auto& [k, c] : terms_) {
      max_i = std::max(max_i, k.first);
      max_j = std::max(max_j, k.second);
    }
    std::vector<Poly2> ap(max_i + 1);
    std::vector<Poly2> bp(max_j + 1);
    ap[0] = Poly2(1);
    bp[0] = Poly2(1);
    for (int i = 1; i <= max_i; ++i) ap[i] = ap[i - 1] * a;
    for (int j = 1; j <= max_j; ++j) bp[j] = bp[j - 1] * b;
    Poly2 out;
    for (const auto& [k, c] : terms_) {
      out = out + Poly2::monomial(0, 0, c) * ap[k.first] * bp[k.second];
    }
    return out;
  }

  // p(1, q) as a polynomial in q.
  Poly1 at_x_one() const {
    Poly1 out;
    for (const auto& [k, c] : terms_) out.add(k.second, c);
    return out;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, c);
    return out;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, -c);
    return out;
  }
  friend Poly2 operator-(const Poly2& a) { return Poly2() - a; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [k1, c1] : a.terms_) {
      for (const auto& [k2, c2] : b.terms_) {
        out.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
      }
    }
    return out;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) {
    return a.terms_ == b.terms_;
  }

  // Terms by total degree, then by decreasing power of x:
  // "x + y + y^2", "1 - x - y - x*y".
  std::string to_string() const {
    std::vector<std::pair<Key, BigInt>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
      int da = a.first.first + a.first.second;
      int db = b.first.first + b.first.second;
      if (da != db) return da < db;
      return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [k, c] : items) {
      std::string mono = internal::power("x", k.first);
      std::string ym = internal::power("y", k.second);
      if (!mono.empty() && !ym.empty()) mono += "*";
      mono += ym;
      internal::append_term(out, c, mono);
    }
    return out.empty() ? "0" : out;
  }

  // [[i, j, c], ...] sorted by (i, j).
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_) arr.push_back({k.first, k.second, to_json_value(c)});
    return arr;
  }

 private:
  std::map<Key, BigInt> terms_;
};

}  // namespace ckskit

#endif  // CKSKIT_POLY_HPP_
