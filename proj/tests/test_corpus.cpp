// Exhaustive sweeps over every labeled poset with at most six elements:
// the up-closure laws, the prelinearity/root-system equivalence, both
// Birkhoff round trips, and the bounded-depth characterization.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "godel/lattice.hpp"

using namespace godel;

namespace {

const RunConfig cfg;

}  // namespace

TEST_CASE("the poset enumerator hits the known labeled counts") {
  const std::size_t expected[] = {1, 1, 3, 19, 219, 4231, 130023};
  for (int n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    corpus::for_each_poset(n, [&](const Poset&) { ++count; });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("up-closure is idempotent and monotone on every poset up to six elements") {
  for (int n = 0; n <= 6; ++n)
    corpus::for_each_poset(n, [&](const Poset& p) {
      std::size_t subsets = static_cast<std::size_t>(1) << n;
      std::vector<Bits> ups;
      ups.reserve(subsets);
      for (std::size_t m = 0; m < subsets; ++m) {
        Bits a(n);
        for (int i = 0; i < n; ++i)
          if (m & (static_cast<std::size_t>(1) << i)) a.set(i);
        Bits up = p.up_set(a);
        if (p.up_set(up) != up) FAIL("up_set not idempotent");
        ups.push_back(std::move(up));
      }
      for (std::size_t a = 0; a < subsets; ++a)
        for (std::size_t b = a;; b = (b + 1) | a) {
          // a is a submask of b here
          if (!ups[a].is_subset_of(ups[b])) FAIL("up_set not monotone");
          if (b == subsets - 1) break;
        }
    });
}

TEST_CASE("prelinearity of the upset algebra matches the root-system test") {
  for (int n = 0; n <= 6; ++n)
    corpus::for_each_poset(n, [&](const Poset& p) {
      // prelinearity over upset masks, without building tables:
      // U -> V = X \ down(U \ V)
      Bits full = Bits::full(n);
      auto impl = [&](const Bits& u, const Bits& v) { return full - p.down_set(u - v); };
      if (p.is_root_system()) {
        for (const Bits& u : enumerate_upsets(p, cfg.upset_cap))
          for (const Bits& v : enumerate_upsets(p, cfg.upset_cap))
            if ((impl(u, v) | impl(v, u)) != full) FAIL("prelinearity fails on a root system");
      } else {
        // locate incomparable b, c above some a; the pair (up b, up c) violates it
        bool found = false;
        for (int a = 0; a < n && !found; ++a) {
          std::vector<int> up = p.up_row(a).to_list();
          for (std::size_t i = 0; i < up.size() && !found; ++i)
            for (std::size_t j = i + 1; j < up.size() && !found; ++j)
              if (!p.comparable(up[i], up[j])) {
                Bits ub = p.up_row(up[i]), uc = p.up_row(up[j]);
                if ((impl(ub, uc) | impl(uc, ub)) != full) found = true;
              }
        }
        if (!found) FAIL("no prelinearity counterexample on a non-root-system");
      }
    });
}

TEST_CASE("Birkhoff round trip: lattice side") {
  // upset_lattice(dual_poset(L)) is isomorphic to L via sigma, for every
  // upset lattice of a poset with up to five elements (lattices up to 32
  // elements)
  for (int n = 0; n <= 5; ++n)
    corpus::for_each_poset(n, [&](const Poset& p) {
      DistLattice l = upset_lattice(p, cfg).alg.base;
      SigmaIso s = sigma(l, cfg);
      if (!is_lattice_hom(s.hom.map, l, s.algebra.alg.base)) FAIL("sigma not a hom");
      std::vector<bool> hit(static_cast<std::size_t>(s.algebra.size()), false);
      for (int v : s.hom.map) hit[static_cast<std::size_t>(v)] = true;
      if (s.algebra.size() != l.size) FAIL("sigma target size differs");
      for (bool b : hit)
        if (!b) FAIL("sigma not onto");
    });
}

TEST_CASE("Birkhoff round trip: poset side") {
  for (int n = 0; n <= 6; ++n)
    corpus::for_each_poset(n, [&](const Poset& p) {
      BirkhoffDual d = dual_poset(upset_lattice(p, cfg).alg.base, false);
      if (!posets_isomorphic(d.poset, p)) FAIL("dual round trip broke");
    });
}

TEST_CASE("bounded depth matches dual depth on every small root system") {
  for (int n = 0; n <= 6; ++n)
    corpus::for_each_root_system(n, [&](const Poset& p) {
      HeytingAlgebra h = upset_lattice(p, cfg).alg;
      int d = p.depth_of();
      if (!is_in_gan(h, d)) FAIL("algebra rejected its own depth");
      if (d > 0 && is_in_gan(h, d - 1)) FAIL("algebra accepted a smaller depth");
      if (algebra_depth(h) != d) FAIL("algebra depth differs from the dual depth");
    });
}

TEST_CASE("residuation holds for every constructed upset algebra up to five elements") {
  for (int n = 0; n <= 5; ++n)
    corpus::for_each_poset(n, [&](const Poset& p) {
      if (!residuation_ok(upset_lattice(p, cfg).alg)) FAIL("residuation broke");
    });
}
