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


#pragma once

#include <cstddef>
#include <numbers>

namespace qkr {

/// The resonant effective Planck constant. Resonance is decided by bit
/// equality with this value, never by a tolerance.
inline constexpr double kResonantHbar = 4 * std::numbers::pi;

/// Truncated integer momentum grid n = -N/2 .. N/2-1 with p_n = n * hbar.
///
/// Storage index i maps to n = i - N/2, so amplitudes are kept in increasing
/// momentum order.
class MomentumLattice {
   public:
    MomentumLattice(int size, double hbar);

    int size() const {
        return size_;
    }
    double hbar() const {
        return hbar_;
    }
    int min_index() const {
        return -size_ / 2;
    }
    int max_index() const {
        return size_ / 2 - 1;
    }
    int index_at(size_t i) const {
        return static_cast<int>(i) - size_ / 2;
    }
    size_t slot_of(int n) const {
        return static_cast<size_t>(n + size_ / 2);
    }
    bool contains(int n) const {
        return n >= min_index() && n <= max_index();
    }
    double momentum_at(size_t i) const {
        return index_at(i) * hbar_;
    }
    /// Number of slots on each edge that form the outer 10% leakage band.
    size_t edge_width() const;

    bool operator==(const MomentumLattice &other) const {
        return size_ == other.size_ && hbar_ == other.hbar_;
    }

   private:
    int size_;
    double hbar_;
};

MomentumLattice make_lattice(int size, double hbar);

}  // namespace qkr
