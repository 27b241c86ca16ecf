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

#ifndef CKSKIT_BIGINT_HPP_
#define CKSKIT_BIGINT_HPP_

#include <gmpxx.h>

#include <string>

#include <nlohmann/json.hpp>

namespace ckskit {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline bool is_zero(const BigInt& value) { return sgn(value) == 0; }

// JSON numbers when the value fits in 64 bits, decimal strings otherwise.
inline nlohmann::json to_json_value(const BigInt& value) {
  if (value.fits_slong_p()) {
    return static_cast<long long>(value.get_si());
  }
  return value.get_str();
}

}  // namespace ckskit

#endif  // CKSKIT_BIGINT_HPP_
