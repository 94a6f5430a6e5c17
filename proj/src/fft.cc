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


#include "fft.h"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qkr::detail {

namespace {

class PlanCache {
   public:
    ~PlanCache() {
        for (auto &[key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(int size, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(size, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) {
            return it->second;
        }
        // FFTW_ESTIMATE keeps planning deterministic, so repeated runs are bitwise reproducible.
        std::vector<Complex> a(size), b(size);
        fftw_plan plan = fftw_plan_dft_1d(
            size, reinterpret_cast<fftw_complex *>(a.data()), reinterpret_cast<fftw_complex *>(b.data()),
            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

   private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache &plan_cache() {
    static PlanCache cache;
    return cache;
}

}  // namespace

void dft(std::span<const Complex> in, std::span<Complex> out, int sign) {
    fftw_plan plan = plan_cache().get(static_cast<int>(in.size()), sign);
    fftw_execute_dft(
        plan, reinterpret_cast<fftw_complex *>(const_cast<Complex *>(in.data())),
        reinterpret_cast<fftw_complex *>(out.data()));
}

}  // namespace qkr::detail
