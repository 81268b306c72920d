// Copyright 2026 The OGM Authors
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

#include <cstdlib>

#include "ogm/kernels.h"

namespace ogm::kernels {

const KernelTable &active_kernels() {
    static const KernelTable &table = []() -> const KernelTable & {
        const char *force = std::getenv("OGM_FORCE_SCALAR");
        if (force != nullptr && *force != '\0') {
            return scalar_kernels();
        }
        const KernelTable *simd = avx2_kernels();
        return simd != nullptr ? *simd : scalar_kernels();
    }();
    return table;
}

}  // namespace ogm::kernels
