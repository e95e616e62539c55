// Copyright 2026 The truncg Authors
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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "truncg/error.hpp"
#include "truncg/kernels.hpp"

namespace truncg::kernels {

namespace {

constexpr KernelTable kScalar{&scalar::cdotc, &scalar::wcdotc, &scalar::abs2_sum};
#if defined(TRUNCG_HAVE_AVX2)
constexpr KernelTable kAvx2{&avx2::cdotc, &avx2::wcdotc, &avx2::abs2_sum};
#endif

bool cpu_has_avx2() {
#if defined(TRUNCG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char *env = std::getenv("TRUNCG_SIMD")) {
    const std::string_view v(env);
    if (v == "scalar") return Isa::Scalar;
    if (v == "avx2" && cpu_has_avx2()) return Isa::Avx2;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<const KernelTable *> g_active{nullptr};
std::atomic<Isa> g_isa{Isa::Scalar};

}  // namespace

const char *to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

const KernelTable &table(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("instruction set not available: ") + to_string(isa));
  }
#if defined(TRUNCG_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

void set_active_isa(Isa isa) {
  g_active.store(&table(isa));
  g_isa.store(isa);
}

Isa active_isa() {
  active();
  return g_isa.load();
}

const KernelTable &active() {
  const KernelTable *t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    const Isa isa = initial_isa();
    const KernelTable *expected = nullptr;
    if (g_active.compare_exchange_strong(expected, &table(isa))) g_isa.store(isa);
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

}  // namespace truncg::kernels
