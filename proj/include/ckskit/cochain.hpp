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

#ifndef CKSKIT_COCHAIN_HPP_
#define CKSKIT_COCHAIN_HPP_

#include <string>
#include <vector>

#include "ckskit/bigint.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/matrix.hpp"
#include "ckskit/smith.hpp"
#include <nlohmann/json.hpp>

namespace ckskit {

// Bounded cochain complex of finitely generated free abelian groups.
// Degree i of the vectors corresponds to cohomological degree
// first_degree + i. differentials[i] maps C^i to C^{i+1} and has shape
// dims[i+1] x dims[i].
struct CochainComplex {
  int first_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> differentials;
  std::vector<std::vector<std::string>> labels;

  std::size_t length() const { return dims.size(); }

  // Throws DimensionMismatch when shapes are inconsistent.
  void check_shapes() const {
    if (dims.empty()) {
      if (!differentials.empty()) throw DimensionMismatch("no degrees");
      return;
    }
    if (differentials.size() + 1 != dims.size()) {
      throw DimensionMismatch("need one differential between each degree");
    }
    for (std::size_t i = 0; i < differentials.size(); ++i) {
      if (differentials[i].rows() != dims[i + 1] ||
          differentials[i].cols() != dims[i]) {
        throw DimensionMismatch("differential " + std::to_string(i) +
                                " has the wrong shape");
      }
    }
    if (!labels.empty() && labels.size() != dims.size()) {
      throw DimensionMismatch("labels per degree");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].size() != dims[i]) {
        throw DimensionMismatch("labels in degree " + std::to_string(i));
      }
    }
  }

  // Index of the first degree where d_{i+1} d_i != 0, or -1.
  int first_nonzero_square() const {
    for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
      if (!(differentials[i + 1] * differentials[i]).is_zero()) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }
};

// Free rank and torsion invariant factors (> 1) of one cohomology group.
struct DegreeCohomology {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool operator==(const DegreeCohomology&) const = default;
};

struct GradedCohomology {
  int first_degree = 0;
  std::vector<DegreeCohomology> degrees;

  const DegreeCohomology& at(int degree) const {
    return degrees.at(static_cast<std::size_t>(degree - first_degree));
  }
  bool torsion_free() const {
    for (const auto& d : degrees) {
      if (!d.torsion.empty()) return false;
    }
    return true;
  }
};

// Integral cohomology. Rank is dim ker d_n - rank d_{n-1}; torsion is read
// from the invariant factors of d_{n-1}, since ker d_n is saturated.
inline GradedCohomology cohomology(const CochainComplex& c) {
  c.check_shapes();
  int bad = c.first_nonzero_square();
  if (bad >= 0) {
    throw NotAComplex("d*d != 0 starting at degree " +
                      std::to_string(c.first_degree + bad));
  }
  const std::size_t len = c.length();
  std::vector<std::size_t> ranks(len > 0 ? len - 1 : 0);
  std::vector<std::vector<BigInt>> factors(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    factors[i] = invariant_factors(c.differentials[i]);
    ranks[i] = factors[i].size();
  }
  GradedCohomology out;
  out.first_degree = c.first_degree;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t out_rank = i < ranks.size() ? ranks[i] : 0;
    std::size_t in_rank = i > 0 ? ranks[i - 1] : 0;
    DegreeCohomology h;
    h.rank = c.dims[i] - out_rank - in_rank;
    if (i > 0) {
      for (const BigInt& f : factors[i - 1]) {
        if (f != 1) h.torsion.push_back(f);
      }
    }
    out.degrees.push_back(std::move(h));
  }
  return out;
}

// True iff the column lattices of `image_generators` and
// `complement_basis` give Z^ambient = L1 (+) L2: the joint columns span
// Z^ambient with all invariant factors 1, and ranks add up. The complement
// columns must also be linearly independent.
inline bool verify_direct_sum(std::size_t ambient,
                              const IntMatrix& image_generators,
                              const IntMatrix& complement_basis) {
  if (image_generators.rows() != ambient ||
      complement_basis.rows() != ambient) {
    throw DimensionMismatch("columns must live in the ambient lattice");
  }
  IntMatrix joint = IntMatrix::hstack(image_generators, complement_basis);
  std::vector<BigInt> f = invariant_factors(joint);
  if (f.size() != ambient) return false;
  for (const BigInt& x : f) {
    if (x != 1) return false;
  }
  std::size_t r1 = rank(image_generators);
  std::size_t r2 = rank(complement_basis);
  return r2 == complement_basis.cols() && r1 + r2 == ambient;
}

inline nlohmann::json to_json(const DegreeCohomology& h) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const BigInt& t : h.torsion) torsion.push_back(to_json_value(t));
  return {{"rank", h.rank}, {"torsion", torsion}};
}

}  // namespace ckskit

#endif  // CKSKIT_COCHAIN_HPP_
