#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "godel/lattice.hpp"
#include "oracles.hpp"

using namespace godel;

namespace {

const RunConfig cfg;

// the five-element non-distributive diamond M3
DistLattice m3() {
  int n = 5;  // 0 = bot, 4 = top, 1..3 atoms
  std::vector<int> meet(25), join(25);
  auto mt = [&](int a, int b) -> int {
    if (a == b) return a;
    if (a == 0 || b == 0) return 0;
    if (a == 4) return b;
    if (b == 4) return a;
    return 0;
  };
  auto jn = [&](int a, int b) -> int {
    if (a == b) return a;
    if (a == 4 || b == 4) return 4;
    if (a == 0) return b;
    if (b == 0) return a;
    return 4;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[a * n + b] = mt(a, b);
      join[a * n + b] = jn(a, b);
    }
  return make_dist_lattice(n, std::move(meet), std::move(join), false);
}

}  // namespace

TEST_CASE("upset lattices of small posets") {
  UpsetAlgebra trivial = upset_lattice(Poset::empty(), cfg);
  CHECK(trivial.size() == 1);
  CHECK(trivial.alg.base.bot == trivial.alg.base.top);

  UpsetAlgebra boolean4 = upset_lattice(Poset::antichain(2), cfg);
  CHECK(boolean4.size() == 4);
  CHECK(boolean4.alg.godel);

  UpsetAlgebra chain3 = upset_lattice(Poset::chain(2), cfg);
  CHECK(chain3.size() == 3);
  CHECK(chain3.alg.godel);
  CHECK(prelinearity_holds(chain3.alg));
  CHECK(residuation_ok(chain3.alg));
}

TEST_CASE("algebra cap raises a resource error") {
  RunConfig tiny = cfg;
  tiny.algebra_cap = 4;
  CHECK_THROWS_WITH_AS(upset_lattice(Poset::antichain(3), tiny), doctest::Contains("algebra cap"),
                       error);
}

TEST_CASE("non-distributive tables are rejected") {
  DistLattice bad = m3();  // constructed with the cubic sweep disabled
  CHECK_THROWS_WITH_AS(dual_poset(bad), doctest::Contains("not distributive"), error);
  CHECK_THROWS_WITH_AS(make_dist_lattice(5, bad.meet, bad.join, true),
                       doctest::Contains("distributivity"), error);
}

TEST_CASE("Birkhoff duals of the named examples") {
  // 3-element chain lattice -> 2-element chain poset
  DistLattice chain3 = upset_lattice(Poset::chain(2), cfg).alg.base;
  BirkhoffDual d = dual_poset(chain3);
  CHECK(d.poset.size() == 2);
  CHECK(posets_isomorphic(d.poset, Poset::chain(2)));
  // 4-element Boolean algebra -> 2-element antichain
  DistLattice boolean4 = upset_lattice(Poset::antichain(2), cfg).alg.base;
  CHECK(posets_isomorphic(dual_poset(boolean4).poset, Poset::antichain(2)));
  // trivial lattice -> empty poset
  DistLattice trivial = upset_lattice(Poset::empty(), cfg).alg.base;
  CHECK(dual_poset(trivial).poset.size() == 0);
}

TEST_CASE("sigma is an isomorphism onto the double dual") {
  DistLattice chain3 = upset_lattice(Poset::chain(2), cfg).alg.base;
  SigmaIso s = sigma(chain3, cfg);
  CHECK(s.hom.map[static_cast<std::size_t>(chain3.bot)] == s.algebra.alg.base.bot);
  CHECK(s.hom.map[static_cast<std::size_t>(chain3.top)] == s.algebra.alg.base.top);
  CHECK(is_lattice_hom(s.hom.map, chain3, s.algebra.alg.base));
  // the middle of the 3-chain lands on the singleton upset of the dual's top
  int middle = -1;
  for (int a = 0; a < chain3.size; ++a)
    if (a != chain3.bot && a != chain3.top) middle = a;
  CHECK(s.algebra.elements[static_cast<std::size_t>(s.hom.map[static_cast<std::size_t>(middle)])].count() == 1);
}

TEST_CASE("bd terms and bounded depth") {
  HeytingAlgebra trivial = upset_lattice(Poset::empty(), cfg).alg;
  HeytingAlgebra boolean4 = upset_lattice(Poset::antichain(2), cfg).alg;
  HeytingAlgebra chain3 = upset_lattice(Poset::chain(2), cfg).alg;
  // bd over the empty assignment is bot, so GA_0 is trivial
  CHECK(bd_value(chain3, {}) == chain3.base.bot);
  CHECK(is_in_gan(trivial, 0));
  CHECK_FALSE(is_in_gan(chain3, 0));
  CHECK(is_in_gan(boolean4, 1));
  CHECK(is_in_gan(chain3, 2));
  CHECK_FALSE(is_in_gan(chain3, 1));
  CHECK(algebra_depth(chain3) == 2);
  CHECK(algebra_depth(trivial) == 0);
  CHECK_THROWS_AS(bd_value(chain3, {99}), error);
}

TEST_CASE("hom enumeration") {
  DistLattice trivial = upset_lattice(Poset::empty(), cfg).alg.base;
  DistLattice two = upset_lattice(Poset::point(), cfg).alg.base;
  DistLattice chain3 = upset_lattice(Poset::chain(2), cfg).alg.base;
  // bounds are fixed, so maps into the trivial lattice collapse to one
  CHECK(enumerate_homs(chain3, trivial, HomFlavor::lattice, cfg.hom_cap).size() == 1);
  CHECK(enumerate_homs(trivial, trivial, HomFlavor::lattice, cfg.hom_cap).size() == 1);
  // and there are none from the trivial lattice into a larger one
  CHECK(enumerate_homs(trivial, two, HomFlavor::lattice, cfg.hom_cap).empty());
  CHECK(enumerate_homs(two, two, HomFlavor::lattice, cfg.hom_cap).size() == 1);
  auto homs = enumerate_homs(chain3, chain3, HomFlavor::lattice, cfg.hom_cap);
  CHECK(homs.size() == 3);
  for (const LatticeHom& h : homs) CHECK(is_lattice_hom(h.map, chain3, chain3));
  // heyting flavor agrees with filtering lattice homs by implication
  HeytingAlgebra h3 = upset_lattice(Poset::chain(2), cfg).alg;
  auto hey = enumerate_homs(chain3, chain3, HomFlavor::heyting, cfg.hom_cap, &h3, &h3);
  std::size_t expect = 0;
  for (const LatticeHom& h : homs)
    if (is_heyting_hom(h.map, h3, h3)) ++expect;
  CHECK(hey.size() == expect);
}

TEST_CASE("hom cap raises a resource error") {
  DistLattice boolean16 = upset_lattice(Poset::antichain(4), cfg).alg.base;
  CHECK_THROWS_WITH_AS(enumerate_homs(boolean16, boolean16, HomFlavor::lattice, 2),
                       doctest::Contains("hom cap"), error);
}

TEST_CASE("upset counting routes agree") {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    Poset p = corpus::random_root_system(rng, 7);
    unsigned __int128 forest = count_upsets_forest(p);
    unsigned __int128 memo = oracles::count_upsets_memo(p);
    CHECK(u128_to_string(forest) == u128_to_string(memo));
    if (forest <= 4096) {
      CHECK(static_cast<std::size_t>(forest) == enumerate_upsets(p, cfg.upset_cap).size());
    }
  }
  CHECK_THROWS_AS(count_upsets_forest(Poset::diamond()), error);
}

TEST_CASE("heyting structure from explicit tables") {
  DistLattice chain3 = upset_lattice(Poset::chain(2), cfg).alg.base;
  HeytingAlgebra direct = heyting_from_lattice(chain3);
  HeytingAlgebra via_upsets = upset_lattice(Poset::chain(2), cfg).alg;
  CHECK(direct.impl == via_upsets.impl);
  CHECK(direct.godel);
  CHECK(co_residuation_ok(chain3));
}

TEST_CASE("lattice isomorphism distinguishes shapes") {
  DistLattice boolean4 = upset_lattice(Poset::antichain(2), cfg).alg.base;
  DistLattice chain4 = upset_lattice(Poset::chain(3), cfg).alg.base;
  CHECK(lattices_isomorphic(boolean4, boolean4));
  CHECK_FALSE(lattices_isomorphic(boolean4, chain4));
  DistLattice boolean4_again = upset_lattice(Poset::antichain(2), cfg).alg.base;
  CHECK(lattices_isomorphic(boolean4, boolean4_again));
}
