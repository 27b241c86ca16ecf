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

#ifndef CKSKIT_ERRORS_HPP_
#define CKSKIT_ERRORS_HPP_

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ckskit {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  // Short machine-readable error name, e.g. "BondDeletion".
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define CKSKIT_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

CKSKIT_DEFINE_ERROR(EmptyGraph);
CKSKIT_DEFINE_ERROR(DisconnectedGraph);
CKSKIT_DEFINE_ERROR(InvalidGraph);
CKSKIT_DEFINE_ERROR(BondDeletion);
CKSKIT_DEFINE_ERROR(NotACotree);
CKSKIT_DEFINE_ERROR(NotASpanningTree);
CKSKIT_DEFINE_ERROR(FaceNotInComplex);
CKSKIT_DEFINE_ERROR(InvalidCoherentCotree);
CKSKIT_DEFINE_ERROR(NotAComplex);
CKSKIT_DEFINE_ERROR(MismatchedGraph);
CKSKIT_DEFINE_ERROR(SupportContainsBond);
CKSKIT_DEFINE_ERROR(ChoiceOutsideIn);
CKSKIT_DEFINE_ERROR(EdgeIsBondOrLoop);
CKSKIT_DEFINE_ERROR(ResourceGuard);
CKSKIT_DEFINE_ERROR(ParseError);
CKSKIT_DEFINE_ERROR(DimensionMismatch);

#undef CKSKIT_DEFINE_ERROR

// Upper bound on the number of cells (faces, basis elements or subsets)
// any single computation may materialize. Read from CKSKIT_MAX_CELLS.
inline std::size_t max_cells() {
  static const std::size_t limit = [] {
    const char* env = std::getenv("CKSKIT_MAX_CELLS");
    if (env != nullptr && *env != '\0') {
      char* end = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && value > 0) {
        return static_cast<std::size_t>(value);
      }
    }
    return static_cast<std::size_t>(4'000'000);
  }();
  return limit;
}

// Throws ResourceGuard when `count` exceeds the configured ceiling.
inline void guard_cells(std::size_t count, const std::string& what) {
  if (count > max_cells()) {
    throw ResourceGuard(what + " needs " + std::to_string(count) +
                        " cells, above the limit of " +
                        std::to_string(max_cells()) +
                        " (set CKSKIT_MAX_CELLS to raise it)");
  }
}

}  // namespace ckskit

#endif  // CKSKIT_ERRORS_HPP_
