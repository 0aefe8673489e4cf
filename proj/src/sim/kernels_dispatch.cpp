// Copyright 2026 The QVC Authors
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

#include "qvc/sim/kernels.hpp"

namespace qvc::sim::kernels {

#if defined(QVC_HAVE_AVX2)
const KernelSet& avx2_kernel_table() noexcept;
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(QVC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelSet* resolve_default() noexcept {
  if (const char* env = std::getenv("QVC_SIMD"); env && std::string_view(env) == "scalar") {
    return &scalar_kernels();
  }
  if (const KernelSet* vec = avx2_kernels()) return vec;
  return &scalar_kernels();
}

std::atomic<const KernelSet*>& active_slot() noexcept {
  static std::atomic<const KernelSet*> slot{resolve_default()};
  return slot;
}

}  // namespace

const KernelSet* avx2_kernels() noexcept {
#if defined(QVC_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() noexcept {
  return *active_slot().load(std::memory_order_acquire);
}

bool select_backend(Backend backend) noexcept {
  const KernelSet* set = backend == Backend::Scalar ? &scalar_kernels() : avx2_kernels();
  if (set == nullptr) return false;
  active_slot().store(set, std::memory_order_release);
  return true;
}

}  // namespace qvc::sim::kernels
