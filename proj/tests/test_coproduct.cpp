#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "godel/coproduct.hpp"
#include "oracles.hpp"

#include <set>

using namespace godel;

namespace {

const RunConfig cfg;

HeytingAlgebra upsets_of(const Poset& p) { return upset_lattice(p, cfg).alg; }

std::set<std::vector<int>> chain_set(const ChainPoset& cp) {
  std::set<std::vector<int>> out;
  for (const Chain& c : cp.chains()) out.insert(c.elems);
  return out;
}

}  // namespace

TEST_CASE("products of posets") {
  ProductSpace d4 = product_poset({Poset::chain(2), Poset::chain(2)});
  CHECK(posets_isomorphic(*d4.poset, Poset::diamond()));
  ProductSpace same = product_poset({Poset::chain(3), Poset::point()});
  CHECK(posets_isomorphic(*same.poset, Poset::chain(3)));
  // a chain times a k-antichain is k incomparable copies of the chain
  ProductSpace four = product_poset({Poset::chain(2), Poset::antichain(2)});
  CHECK(four.poset->size() == 4);
  CHECK(posets_isomorphic(*four.poset,
                          Poset::disjoint_union(Poset::chain(2), Poset::chain(2))));
  ProductSpace six = product_poset({Poset::chain(3), Poset::antichain(2)});
  CHECK(six.poset->size() == 6);
  CHECK(posets_isomorphic(*six.poset,
                          Poset::disjoint_union(Poset::chain(3), Poset::chain(3))));
  ProductSpace unit = product_poset({});
  CHECK(unit.poset->size() == 1);
  // projections are monotone
  for (int x = 0; x < six.poset->size(); ++x)
    for (int y = 0; y < six.poset->size(); ++y)
      if (six.poset->leq(x, y)) {
        CHECK(six.factors[0]->leq(six.coord(x, 0), six.coord(y, 0)));
        CHECK(six.factors[1]->leq(six.coord(x, 1), six.coord(y, 1)));
      }
}

TEST_CASE("tensor of two 2-chains") {
  TensorSpace t = tensor({Poset::chain(2), Poset::chain(2)}, cfg);
  CHECK(t.space.size() == 6);
  CHECK(t.space.depth() == 3);
  auto e = [&](std::initializer_list<std::pair<int, int>> pts) {
    std::vector<int> idx;
    for (auto [a, b] : pts) idx.push_back(t.prod.tuple_index({a, b}));
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  std::set<std::vector<int>> expect = {
      e({{1, 1}}),
      e({{0, 0}, {1, 1}}),
      e({{0, 1}, {1, 1}}),
      e({{1, 0}, {1, 1}}),
      e({{0, 0}, {0, 1}, {1, 1}}),
      e({{0, 0}, {1, 0}, {1, 1}}),
  };
  CHECK(chain_set(t.space) == expect);
  // the excluded chain of the worked example: {(0,0),(0,1)} projects onto {0}
  CHECK(t.space.index_of(chain_mask(*t.prod.poset, Chain{e({{0, 0}, {0, 1}})})) == -1);
}

TEST_CASE("tensor with a single factor and with an empty factor") {
  Poset y = Poset::from_covers(3, {{0, 2}, {1, 2}});  // two elements under a top
  CHECK(y.is_root_system());
  TensorSpace t = tensor({y}, cfg);
  // chains with an upset image are exactly the principal upsets
  CHECK(t.space.size() == y.size());
  CHECK(posets_isomorphic(t.space.order(), y));
  TensorSpace z = tensor({Poset::chain(2), Poset::empty()}, cfg);
  CHECK(z.space.size() == 0);
}

TEST_CASE("tensor rejects non-root-system factors") {
  CHECK_THROWS_WITH_AS(tensor({Poset::diamond()}, cfg), doctest::Contains("root system"), error);
}

TEST_CASE("filter route and generator route agree") {
  std::vector<std::vector<Poset>> families = {
      {Poset::chain(4), Poset::chain(4)},
      {Poset::chain(3), Poset::antichain(2)},
      {Poset::chain(2), Poset::chain(2), Poset::chain(3)},
  };
  Rng rng(71);
  for (int t = 0; t < 10; ++t)
    families.push_back({corpus::random_root_system(rng, 4), corpus::random_root_system(rng, 4)});
  for (const auto& factors : families) {
    TensorSpace by_filter = tensor(factors, cfg);  // full cap: filter route
    std::size_t product_chains =
        enumerate_chains(*by_filter.prod.poset, cfg.chain_cap).size();
    if (by_filter.space.size() >= static_cast<int>(product_chains)) continue;
    RunConfig small = cfg;
    small.chain_cap = product_chains - 1;  // forces the direct generator
    TensorSpace by_generator = tensor(factors, small);
    CHECK(by_filter.space.chains() == by_generator.space.chains());
  }
}

TEST_CASE("tensor is an up-closed subset of the product chain space") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    std::vector<Poset> factors = {corpus::random_root_system(rng, 3),
                                  corpus::random_root_system(rng, 3)};
    if (factors[0].size() * factors[1].size() > 12) continue;
    TensorSpace ts = tensor(factors, cfg);
    ChainPoset full = cc(ts.prod.poset, cfg);
    Bits members(full.size());
    for (const Chain& c : ts.space.chains())
      members.set(full.index_of(chain_mask(*ts.prod.poset, c)));
    CHECK(full.up_closure(members) == members);
    CHECK(ts.space.order().is_root_system());
  }
}

TEST_CASE("tensor projections are p-morphisms") {
  TensorSpace t = tensor({Poset::chain(2), Poset::chain(2)}, cfg);
  PMorph p0 = tensor_projection(t, 0);
  PMorph p1 = tensor_projection(t, 1);
  CHECK(is_p_morphism(p0));
  CHECK(is_p_morphism(p1));
  // p1 of the staircase 3-chain is 0 (the least element is (0,0))
  std::vector<int> stair = {t.prod.tuple_index({0, 0}), t.prod.tuple_index({0, 1}),
                            t.prod.tuple_index({1, 1})};
  std::sort(stair.begin(), stair.end());
  int i = t.space.index_of(chain_mask(*t.prod.poset, Chain{stair}));
  REQUIRE(i >= 0);
  CHECK(p0.map[static_cast<std::size_t>(i)] == 0);
  // the tuple of maxima maps to each factor's maximum
  int top = t.space.index_of(Bits::single(t.prod.poset->size(), t.prod.tuple_index({1, 1})));
  CHECK(p0.map[static_cast<std::size_t>(top)] == 1);
  CHECK(p1.map[static_cast<std::size_t>(top)] == 1);
  CHECK_THROWS_AS(tensor_projection(t, 2), error);
  // exhaustive for small root-system factors
  Rng rng(29);
  for (int k = 0; k < 15; ++k) {
    std::vector<Poset> factors = {corpus::random_root_system(rng, 3),
                                  corpus::random_root_system(rng, 3)};
    TensorSpace ts = tensor(factors, cfg);
    for (std::size_t f = 0; f < factors.size(); ++f)
      CHECK(is_p_morphism(tensor_projection(ts, static_cast<int>(f))));
  }
}

TEST_CASE("product universal property") {
  TensorSpace t = tensor({Poset::chain(2), Poset::chain(2)}, cfg);
  // one point picks the singleton chain of its image tuple
  ProductCertificate c1 =
      verify_product_universal(t, Poset::point(), {{1}, {1}}, cfg);
  CHECK(c1.ok);
  CHECK(t.space.mask(c1.mediating[0]) ==
        Bits::single(t.prod.poset->size(), t.prod.tuple_index({1, 1})));
  // identity pair on the 2-chain: g(0) = {(0,0),(1,1)}, g(1) = {(1,1)}
  ProductCertificate c2 =
      verify_product_universal(t, Poset::chain(2), {{0, 1}, {0, 1}}, cfg);
  CHECK(c2.ok);
  Bits g0(t.prod.poset->size());
  g0.set(t.prod.tuple_index({0, 0}));
  g0.set(t.prod.tuple_index({1, 1}));
  CHECK(t.space.mask(c2.mediating[0]) == g0);
  CHECK(t.space.mask(c2.mediating[1]) ==
        Bits::single(t.prod.poset->size(), t.prod.tuple_index({1, 1})));
  // non-p-morphism factor maps are rejected
  CHECK_THROWS_AS(verify_product_universal(t, Poset::chain(2), {{0, 0}, {0, 0}}, cfg), error);
}

TEST_CASE("mediating maps are unique for every small source") {
  TensorSpace t = tensor({Poset::chain(2), Poset::chain(2)}, cfg);
  corpus::for_each_poset_up_to(3, [&](const Poset& z) {
    if (!z.is_root_system() || z.size() == 0) return;
    auto zp = std::make_shared<const Poset>(z);
    std::vector<std::vector<int>> pmorphs;
    for (std::vector<int>& m : enumerate_monotone_maps(z, *t.prod.factors[0], cfg.hom_cap))
      if (is_p_morphism(make_map(zp, t.prod.factors[0], m))) pmorphs.push_back(std::move(m));
    for (const auto& f0 : pmorphs)
      for (const auto& f1 : pmorphs) CHECK(verify_product_universal(t, z, {f0, f1}, cfg).ok);
  });
}

TEST_CASE("coproducts of Godel algebras") {
  HeytingAlgebra three = upsets_of(Poset::chain(2));
  HeytingAlgebra two = upsets_of(Poset::point());

  // a single factor reproduces the algebra
  Coproduct one = coproduct_godel({three}, cfg);
  CHECK(lattices_isomorphic(one.algebra.alg.base, three.base));

  // the 2-element Boolean algebra is a unit
  Coproduct with_unit = coproduct_godel({two, three}, cfg);
  CHECK(lattices_isomorphic(with_unit.algebra.alg.base, three.base));

  // two 3-chains: the upset algebra of the 6-element tensor
  Coproduct co = coproduct_godel({three, three}, cfg);
  CHECK(co.space.space.size() == 6);
  CHECK(u128_to_string(oracles::count_upsets_memo(co.space.space.order())) ==
        std::to_string(co.algebra.size()));
  REQUIRE(co.injections.size() == 2);
  for (const LatticeHom& inj : co.injections) {
    CHECK(is_heyting_hom(inj.map, three, co.algebra.alg));
    std::set<int> image(inj.map.begin(), inj.map.end());
    CHECK(image.size() == 3);
  }
  CHECK_THROWS_AS(coproduct_godel({upsets_of(Poset::diamond())}, cfg), error);
}

TEST_CASE("coproducts of Boolean algebras are Boolean") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      if (a * b > 8) continue;
      Coproduct co = coproduct_godel({upsets_of(Poset::antichain(a)), upsets_of(Poset::antichain(b))}, cfg);
      CHECK(posets_isomorphic(co.space.space.order(), Poset::antichain(a * b)));
      CHECK(lattices_isomorphic(co.algebra.alg.base, upsets_of(Poset::antichain(a * b)).base));
    }
}

TEST_CASE("depth formula") {
  CHECK(depth_of_coproduct({1, 1, 1}) == 1);
  CHECK(depth_of_coproduct({2, 2}) == 3);
  CHECK(depth_of_coproduct({2, 3}) == 4);
  CHECK(depth_of_coproduct({}) == 1);
  CHECK_THROWS_WITH_AS(depth_of_coproduct({2, 0}), doctest::Contains("trivial factor"), error);

  HeytingAlgebra three = upsets_of(Poset::chain(2));
  HeytingAlgebra four = upsets_of(Poset::chain(3));
  DepthCertificate c22 = depth_check({three, three}, cfg);
  CHECK(c22.formula == 3);
  CHECK(c22.computed == 3);
  CHECK(c22.ok);
  DepthCertificate c23 = depth_check({three, four}, cfg);
  CHECK(c23.formula == 4);
  CHECK(c23.ok);
}

TEST_CASE("every tensor chain respects the depth bound") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    std::vector<Poset> factors;
    int k = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < k; ++i) factors.push_back(corpus::random_root_system(rng, 4));
    int bound = 1;
    for (const Poset& f : factors) bound += f.depth_of() - 1;
    TensorSpace ts = tensor(factors, cfg);
    for (const Chain& c : ts.space.chains()) CHECK(c.size() <= bound);
    CHECK(ts.space.depth() == bound);
  }
}

TEST_CASE("witness chains") {
  std::vector<Poset> factors = {Poset::chain(2), Poset::chain(2)};
  ProductSpace prod = product_poset(factors);
  // no z entries: the singleton of the maxima
  Chain w0 = witness_chain(prod, {1, 1}, {});
  CHECK(w0.elems == std::vector<int>{prod.tuple_index({1, 1})});
  // z at each bottom: the staircase 3-chain
  Chain w2 = witness_chain(prod, {1, 1}, {{0, 0}, {1, 0}});
  CHECK(w2.size() == 3);
  TensorSpace ts = tensor(factors, cfg);
  CHECK(ts.space.index_of(chain_mask(*prod.poset, w2)) >= 0);

  CHECK_THROWS_WITH_AS(witness_chain(prod, {0, 1}, {}), doctest::Contains("maximal"), error);
  CHECK_THROWS_WITH_AS(witness_chain(prod, {1, 1}, {{0, 0}, {0, 0}}),
                       doctest::Contains("distinct"), error);

  // property run: 200 random instances land in the tensor with the stated size
  Rng rng(97);
  int done = 0;
  while (done < 200) {
    std::vector<Poset> fs;
    int k = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < k; ++i) fs.push_back(corpus::random_root_system(rng, 4));
    ProductSpace ps = product_poset(fs);
    // choose z in a random subset of factors, w above z (or any maximal)
    std::vector<int> ws(fs.size(), -1);
    std::vector<std::pair<int, int>> zs;
    int expected = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (rng.next() & 1) {
        int z = static_cast<int>(rng.below(static_cast<std::uint64_t>(fs[i].size())));
        zs.emplace_back(static_cast<int>(i), z);
        ws[i] = chain_greatest(fs[i], chain_from_mask(fs[i], fs[i].up_row(z)));
        expected += fs[i].depth(z) - 1;
      } else {
        ws[i] = fs[i].maximal_elements().first();
      }
    }
    Chain c = witness_chain(ps, ws, zs);
    CHECK(c.size() == expected);
    TensorSpace full = tensor(fs, cfg);
    CHECK(full.space.index_of(chain_mask(*ps.poset, c)) >= 0);
    ++done;
  }
}

TEST_CASE("bounded-depth coproducts and coincidence") {
  HeytingAlgebra three = upsets_of(Poset::chain(2));
  // depth-2 restriction of the two-3-chain tensor drops to 4 chains
  Coproduct c2 = coproduct_gan({three, three}, 2, cfg);
  CHECK(c2.space.space.size() == 4);
  Coproduct c3 = coproduct_gan({three, three}, 3, cfg);
  CHECK(c3.space.space.size() == 6);
  for (const LatticeHom& inj : c2.injections)
    CHECK(is_heyting_hom(inj.map, three, c2.algebra.alg));
  CHECK(is_in_gan(c2.algebra.alg, 2));

  CHECK(gan_coincidence({three, three}, 3, cfg));
  CHECK_FALSE(gan_coincidence({three, three}, 2, cfg));
  // a single factor coincides once n reaches its depth
  CHECK(gan_coincidence({three}, 2, cfg));
  CHECK(gan_coincidence({three}, 5, cfg));
  CHECK_THROWS_WITH_AS(gan_coincidence({three}, 1, cfg), doctest::Contains("GA_n"), error);
  HeytingAlgebra trivial = upsets_of(Poset::empty());
  CHECK_THROWS_WITH_AS(gan_coincidence({trivial}, 1, cfg), doctest::Contains("trivial"), error);
}
