// Copyright 2026 The jlcs Authors.
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

#include "jlcs/parallel.h"

#include <atomic>
#include <cstdlib>
#include <string>

namespace jlcs::parallel {
namespace {

std::atomic<unsigned> override_count{0};

}  // namespace

unsigned thread_count() {
  if (unsigned o = override_count.load()) return o;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("JLCS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

uint64_t tuple_count(uint64_t radix, uint32_t dims, uint64_t cap) {
  uint64_t n = 1;
  for (uint32_t i = 0; i < dims; ++i) {
    if (radix != 0 && n > cap / radix) return cap + 1;
    n *= radix;
  }
  return n;
}

void set_thread_count(unsigned n) { override_count.store(n); }

}  // namespace jlcs::parallel
