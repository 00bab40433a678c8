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
#ifndef HBSIEGEL_LATTICE_HPP
#define HBSIEGEL_LATTICE_HPP

#include <vector>

#include "hbsiegel/matrix.hpp"
#include "hbsiegel/rational.hpp"

namespace hbsiegel {

using IntMatrix = Matrix<Integer>;

/// Row Hermite normal form; zero rows are dropped. Rows of the result are a
/// Z-basis of the row lattice.
IntMatrix hermite_normal_form(IntMatrix m);

/// A Z-basis of the Z-span of rational vectors of a common length.
std::vector<RatVector> zspan_basis(const std::vector<RatVector>& generators);

}  // namespace hbsiegel

#endif  // HBSIEGEL_LATTICE_HPP
