#include "godel/freealg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace godel {

unsigned __int128 count_upsets_of_chain_order(const ChainPoset& cp) {
  int n = cp.size();
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    if (cp.chain(i).size() == 1) {
      roots.push_back(i);
      continue;
    }
    Bits parent = cp.mask(i);
    parent.reset(cp.least(i));
    int j = cp.index_of(parent);
    if (j < 0) fail_validation("chain list not closed under upset subchains");
    children[static_cast<std::size_t>(j)].push_back(i);
  }
  std::vector<unsigned __int128> memo(static_cast<std::size_t>(n), 0);
  std::function<unsigned __int128(int)> eval = [&](int i) -> unsigned __int128 {
    if (memo[static_cast<std::size_t>(i)] != 0) return memo[static_cast<std::size_t>(i)];
    unsigned __int128 prod = 1;
    for (int c : children[static_cast<std::size_t>(i)]) {
      unsigned __int128 v = eval(c);
      if (prod != 0 && v > (~static_cast<unsigned __int128>(0)) / prod)
        throw error(errc::resource, "upset count overflow", "exceeds 128-bit range");
      prod *= v;
    }
    return memo[static_cast<std::size_t>(i)] = prod + 1;
  };
  unsigned __int128 total = 1;
  for (int r : roots) {
    unsigned __int128 v = eval(r);
    if (v > (~static_cast<unsigned __int128>(0)) / total)
      throw error(errc::resource, "upset count overflow", "exceeds 128-bit range");
    total *= v;
  }
  return total;
}

namespace {

void finish(FreeAlgebraResult& f, const RunConfig& cfg) {
  f.algebra_size = count_upsets_of_chain_order(f.dual);
  if (f.algebra_size <= cfg.algebra_cap) {
    f.algebra = upset_lattice(f.dual.order(), cfg);
    LatticeHom hom;
    hom.flavor = HomFlavor::lattice;
    for (const Bits& u : f.unit) hom.map.push_back(f.algebra->index_of(u));
    f.unit_hom = std::move(hom);
  }
}

}  // namespace

FreeAlgebraResult free_godel_over_lattice(const DistLattice& l, const RunConfig& cfg) {
  BirkhoffDual d = dual_poset(l);
  FreeAlgebraResult f;
  f.dual = cc(std::make_shared<const Poset>(d.poset), cfg);
  for (int a = 0; a < l.size; ++a) {
    Bits sig(d.poset.size());
    for (int j = 0; j < d.poset.size(); ++j)
      if (l.leq(d.irreducibles[static_cast<std::size_t>(j)], a)) sig.set(j);
    f.unit.push_back(f.dual.box(sig));
  }
  finish(f, cfg);
  return f;
}

FreeAlgebraResult free_godel(int k, const RunConfig& cfg) {
  if (k < 0) fail_dimension("negative generator count");
  if (k > cfg.generator_cap)
    fail_resource("generator cap", static_cast<std::size_t>(cfg.generator_cap),
                  static_cast<std::size_t>(k));
  Poset cube = Poset::cube(k);
  FreeAlgebraResult f;
  f.over_set = true;
  f.dual = cc(std::make_shared<const Poset>(cube), cfg);
  for (int s = 0; s < k; ++s) {
    Bits us(cube.size());
    for (int a = 0; a < cube.size(); ++a)
      if ((a >> s) & 1) us.set(a);
    f.unit.push_back(f.dual.box(us));
  }
  finish(f, cfg);
  return f;
}

FreeAlgebraResult free_gan_over_lattice(const DistLattice& l, int n, const RunConfig& cfg) {
  if (n < 0) fail_dimension("negative depth bound");
  BirkhoffDual d = dual_poset(l);
  FreeAlgebraResult f;
  f.dual = cc_n(std::make_shared<const Poset>(d.poset), n, cfg);
  for (int a = 0; a < l.size; ++a) {
    Bits sig(d.poset.size());
    for (int j = 0; j < d.poset.size(); ++j)
      if (l.leq(d.irreducibles[static_cast<std::size_t>(j)], a)) sig.set(j);
    f.unit.push_back(f.dual.box(sig));
  }
  finish(f, cfg);
  return f;
}

FreeAlgebraResult free_gan(int k, int n, const RunConfig& cfg) {
  if (k < 0) fail_dimension("negative generator count");
  if (n < 0) fail_dimension("negative depth bound");
  if (k > cfg.generator_cap)
    fail_resource("generator cap", static_cast<std::size_t>(cfg.generator_cap),
                  static_cast<std::size_t>(k));
  Poset cube = Poset::cube(k);
  FreeAlgebraResult f;
  f.over_set = true;
  f.dual = cc_n(std::make_shared<const Poset>(cube), n, cfg);
  for (int s = 0; s < k; ++s) {
    Bits us(cube.size());
    for (int a = 0; a < cube.size(); ++a)
      if ((a >> s) & 1) us.set(a);
    f.unit.push_back(f.dual.box(us));
  }
  finish(f, cfg);
  return f;
}

FreeCertificate certify_free(const FreeAlgebraResult& f, const DistLattice& l,
                             const HeytingAlgebra& h, const RunConfig& cfg,
                             const char* force_route) {
  if (!h.godel) fail_precondition("certification target must be a Godel algebra");
  if (f.over_set) fail_precondition("certify_free applies to the free-over-lattice form");
  if (static_cast<int>(f.unit.size()) != l.size) fail_dimension("unit arity mismatch");
  std::vector<LatticeHom> homs = enumerate_homs(l, h.base, HomFlavor::lattice, cfg.hom_cap);
  FreeCertificate cert;
  cert.hom_count = homs.size();

  BirkhoffDual hd = dual_poset(h.base, false);
  double direct_cost = f.algebra ? f.algebra->size() * std::log2(static_cast<double>(h.size()) + 1)
                                 : std::numeric_limits<double>::infinity();
  double dual_cost = hd.poset.size() * std::log2(static_cast<double>(f.dual.size()) + 1);
  bool direct = f.algebra && f.unit_hom && direct_cost <= dual_cost;
  if (force_route) {
    direct = std::string(force_route) == "direct";
    if (direct && (!f.algebra || !f.unit_hom))
      fail_precondition("direct route needs a materialized algebra");
  }
  cert.route = direct ? "direct" : "dual";

  if (direct) {
    HeytingAlgebra target = h;
    const UpsetAlgebra& g = *f.algebra;
    for (const LatticeHom& hom : homs) {
      std::vector<int> pinned(static_cast<std::size_t>(g.size()), -1);
      bool consistent = true;
      for (int a = 0; a < l.size; ++a) {
        int ea = f.unit_hom->map[static_cast<std::size_t>(a)];
        int want = hom.map[static_cast<std::size_t>(a)];
        if (pinned[static_cast<std::size_t>(ea)] >= 0 && pinned[static_cast<std::size_t>(ea)] != want)
          consistent = false;
        pinned[static_cast<std::size_t>(ea)] = want;
      }
      if (!consistent) {
        cert.extensions.push_back(0);
        continue;
      }
      std::vector<LatticeHom> exts = enumerate_homs(g.alg.base, target.base, HomFlavor::heyting,
                                                    cfg.hom_cap, &g.alg, &target, &pinned);
      cert.extensions.push_back(exts.size());
    }
  } else {
    // dual search: p-morphisms H_* -> cc(L_*) over the dualized hom
    BirkhoffDual ld = dual_poset(l, false);
    if (ld.poset.size() != f.dual.base().size())
      fail_dimension("free algebra does not match the given lattice");
    for (const LatticeHom& hom : homs) {
      // phi(j) = the join-irreducible generating f^{-1}[up(h_j)]
      std::vector<int> phi(static_cast<std::size_t>(hd.poset.size()), -1);
      for (int j = 0; j < hd.poset.size(); ++j) {
        int hj = hd.irreducibles[static_cast<std::size_t>(j)];
        int gen = -1;
        for (int x = 0; x < l.size; ++x)
          if (h.base.leq(hj, hom.map[static_cast<std::size_t>(x)]))
            gen = gen < 0 ? x : l.meet_of(gen, x);
        // gen is join-irreducible because the preimage filter is prime
        int idx = -1;
        for (int t = 0; t < ld.poset.size(); ++t)
          if (ld.irreducibles[static_cast<std::size_t>(t)] == gen) idx = t;
        if (idx < 0) fail_validation("dualized hom misses the irreducible carrier");
        phi[static_cast<std::size_t>(j)] = idx;
      }
      cert.extensions.push_back(
          count_p_morphisms_with_least(hd.poset, f.dual, phi, cfg.hom_cap));
    }
  }
  cert.ok = true;
  for (std::size_t e : cert.extensions)
    if (e != 1) cert.ok = false;
  return cert;
}

}  // namespace godel
