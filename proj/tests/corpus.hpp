#pragma once

// Test corpus: exhaustive labeled-poset enumeration (every poset on [n]
// exactly once, by choosing the new element's down-set and up-set) and
// seeded random structures.

#include "godel/core.hpp"
#include "godel/poset.hpp"

#include <cstdint>
#include <functional>

namespace corpus {

inline void for_each_poset(int n, const std::function<void(const godel::Poset&)>& fn) {
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> down(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (up[static_cast<std::size_t>(x)] >> y & 1) leq[static_cast<std::size_t>(x) * n + y] = true;
      fn(godel::Poset::from_leq(n, leq));
      return;
    }
    for (std::uint64_t d = 0; d < (1ull << k); ++d) {
      bool d_is_downset = true;
      for (int x = 0; x < k && d_is_downset; ++x)
        if (d >> x & 1)
          if ((down[static_cast<std::size_t>(x)] & ~d) != 0) d_is_downset = false;
      if (!d_is_downset) continue;
      std::uint64_t rest = ((1ull << k) - 1) & ~d;
      for (std::uint64_t u = rest;; u = (u - 1) & rest) {
        bool u_is_upset = true;
        for (int x = 0; x < k && u_is_upset; ++x)
          if (u >> x & 1)
            if ((up[static_cast<std::size_t>(x)] & ~u) != 0) u_is_upset = false;
        if (u_is_upset) {
          bool transitive = true;
          for (int x = 0; x < k && transitive; ++x)
            if (d >> x & 1)
              if ((u & ~up[static_cast<std::size_t>(x)]) != 0) transitive = false;
          if (transitive) {
            for (int x = 0; x < k; ++x) {
              if (d >> x & 1) up[static_cast<std::size_t>(x)] |= 1ull << k;
              if (u >> x & 1) down[static_cast<std::size_t>(x)] |= 1ull << k;
            }
            up[static_cast<std::size_t>(k)] = (1ull << k) | u;
            down[static_cast<std::size_t>(k)] = (1ull << k) | d;
            rec(k + 1);
            for (int x = 0; x < k; ++x) {
              up[static_cast<std::size_t>(x)] &= ~(1ull << k);
              down[static_cast<std::size_t>(x)] &= ~(1ull << k);
            }
          }
        }
        if (u == 0) break;
      }
    }
  };
  rec(0);
}

inline void for_each_poset_up_to(int n, const std::function<void(const godel::Poset&)>& fn) {
  for (int k = 0; k <= n; ++k) for_each_poset(k, fn);
}

inline void for_each_root_system(int n, const std::function<void(const godel::Poset&)>& fn) {
  for_each_poset(n, [&](const godel::Poset& p) {
    if (p.is_root_system()) fn(p);
  });
}

/// Nonempty random root system (a forest with parents above), 1..max_n
/// elements.
inline godel::Poset random_root_system(godel::Rng& rng, int max_n) {
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < n; ++i) {
    std::uint64_t pick = rng.below(static_cast<std::uint64_t>(i) + 1);
    if (pick < static_cast<std::uint64_t>(i)) covers.emplace_back(i, static_cast<int>(pick));
  }
  return godel::Poset::from_covers(n, covers);
}

inline godel::Bits random_subset(godel::Rng& rng, int n) {
  godel::Bits b(n);
  for (int i = 0; i < n; ++i)
    if (rng.next() & 1) b.set(i);
  return b;
}

}  // namespace corpus
