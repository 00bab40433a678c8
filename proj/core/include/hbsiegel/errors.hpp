// Copyright 2026 The hbsiegel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef HBSIEGEL_ERRORS_HPP
#define HBSIEGEL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbsiegel {

enum class Errc {
  InvalidInput,
  RepeatedRoots,
  NotTotallyReal,
  NotAnOrder,
  SingularBasis,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  OddDimension,
  NonSquare,
  SingularMatrix,
  LevelTooSmall,
  NotInGPrime,
  NotUpperHalf,
  SingularDenominator,
  InvalidAction,
  DegreeMismatch,
  DegreeZero,
  WrongLength,
  NotInLatticeGroup,
  InvalidTorsion,
  BudgetExceeded,
  InvariantViolation,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const char* what) {
  if (!cond) throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace hbsiegel

#endif  // HBSIEGEL_ERRORS_HPP
