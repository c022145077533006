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

#ifndef JLCS_PARALLEL_H_
#define JLCS_PARALLEL_H_

// Chunked range reduction over worker threads. The range is cut into
// fixed chunks independent of the thread count and partial results are
// merged in chunk order, so an associative merge gives the same result
// for any thread count.

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace jlcs::parallel {

// Mixed-radix cursor over [0, radix)^dims, last coordinate fastest.
class TupleCursor {
 public:
  TupleCursor(uint32_t radix, uint32_t dims, uint64_t start) : radix_(radix), digits_(dims, 0) {
    for (uint32_t i = dims; i-- > 0;) {
      digits_[i] = static_cast<uint32_t>(start % radix);
      start /= radix;
    }
  }
  const std::vector<uint32_t>& digits() const { return digits_; }
  // Advances and returns the lowest position that changed.
  uint32_t next() {
    uint32_t i = static_cast<uint32_t>(digits_.size());
    while (i-- > 0) {
      if (++digits_[i] < radix_) return i;
      digits_[i] = 0;
    }
    return 0;
  }

 private:
  uint32_t radix_;
  std::vector<uint32_t> digits_;
};

// Checked radix^dims.
uint64_t tuple_count(uint64_t radix, uint32_t dims, uint64_t cap);

// min(JLCS_THREADS if set, hardware concurrency), at least 1.
unsigned thread_count();
void set_thread_count(unsigned n);  // 0 restores the default

// Calls body(begin, end, acc) on chunks of [0, n) with acc = make(), then
// folds the partials left to right with merge(into, from).
template <class Acc, class Make, class Body, class Merge>
Acc reduce_range(uint64_t n, Make make, Body body, Merge merge, uint64_t chunk = 4096) {
  if (chunk == 0) chunk = 1;
  const uint64_t chunks = (n + chunk - 1) / chunk;
  const unsigned workers = static_cast<unsigned>(std::min<uint64_t>(thread_count(), chunks));
  if (workers <= 1) {
    Acc acc = make();
    if (n > 0) body(uint64_t{0}, n, acc);
    return acc;
  }
  std::vector<Acc> partial;
  partial.reserve(chunks);
  for (uint64_t c = 0; c < chunks; ++c) partial.push_back(make());
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (uint64_t c = w; c < chunks; c += workers) {
          body(c * chunk, std::min(n, (c + 1) * chunk), partial[c]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc acc = std::move(partial[0]);
  for (uint64_t c = 1; c < chunks; ++c) merge(acc, partial[c]);
  return acc;
}

}  // namespace jlcs::parallel

#endif  // JLCS_PARALLEL_H_
