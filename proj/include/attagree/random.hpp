// Copyright 2026 The attagree Authors.
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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

// Reproducible randomness. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; bounded integers and shuffles are done
// here rather than with <random> distributions, which are
// implementation-defined.

namespace attagree {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed for one instance, independent of corpus order.
inline constexpr std::uint64_t instance_seed(std::uint64_t seed,
                                             std::string_view instance_id) noexcept {
  return splitmix64(seed ^ fnv1a64(instance_id));
}

// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // 2^64 mod bound; the 2^64 - skip accepted values split evenly.
  const std::uint64_t skip = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < skip);
  return x % bound;
}

// Fisher-Yates, each of the n! orders equally likely.
template <typename T>
void shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(values[i - 1], values[j]);
  }
}

}  // namespace attagree
