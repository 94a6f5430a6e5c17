// Copyright 2026 The QKR-OTOC Authors
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


#include "qkr/lattice.h"

#include <cmath>
#include <string>

#include "qkr/error.h"

namespace qkr {

MomentumLattice::MomentumLattice(int size, double hbar) : size_(size), hbar_(hbar) {
    if (size < 4 || size % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument, "lattice size must be even and >= 4, got " + std::to_string(size));
    }
    if (!(hbar > 0) || !std::isfinite(hbar)) {
        throw Error(ErrorCode::kInvalidArgument, "hbar must be positive and finite");
    }
}

size_t MomentumLattice::edge_width() const {
    return static_cast<size_t>((size_ + 19) / 20);
}

MomentumLattice make_lattice(int size, double hbar) {
    return MomentumLattice(size, hbar);
}

}  // namespace qkr
