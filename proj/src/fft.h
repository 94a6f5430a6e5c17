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

#include <span>

#include "qkr/wavefunction.h"

namespace qkr::detail {

/// Unnormalized complex DFT of length in.size():
///   out[j] = sum_k in[k] exp(sign * 2 pi i j k / M), sign = -1 or +1.
/// `in` and `out` must not alias. Plans are cached per (size, sign) and are
/// safe to use from multiple threads.
void dft(std::span<const Complex> in, std::span<Complex> out, int sign);

}  // namespace qkr::detail
