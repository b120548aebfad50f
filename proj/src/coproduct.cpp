#include "godel/coproduct.hpp"

#include <algorithm>
#include <functional>

namespace godel {

int ProductSpace::tuple_index(const std::vector<int>& coords) const {
  if (coords.size() != factors.size()) fail_dimension("tuple arity mismatch");
  long long e = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors[i]->size())
      fail_dimension("tuple coordinate out of range");
    e += coords[i] * strides[i];
  }
  return static_cast<int>(e);
}

ProductSpace product_poset(const std::vector<Poset>& factors) {
  ProductSpace ps;
  long long n = 1;
  for (const Poset& f : factors) {
    ps.strides.push_back(n);
    n *= f.size();
    if (n > (1 << 22)) fail_resource("product cap", 1 << 22, static_cast<std::size_t>(n));
    ps.factors.push_back(std::make_shared<const Poset>(f));
  }
  int size = static_cast<int>(n);
  std::vector<Bits> up(static_cast<std::size_t>(size), Bits(size));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      bool le = true;
      for (std::size_t i = 0; i < ps.factors.size() && le; ++i)
        if (!ps.factors[i]->leq(ps.coord(x, i), ps.coord(y, i))) le = false;
      if (le) up[static_cast<std::size_t>(x)].set(y);
    }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) {
    std::string s = "(";
    for (std::size_t i = 0; i < ps.factors.size(); ++i) {
      if (i) s += ",";
      s += ps.factors[i]->label(ps.coord(x, i));
    }
    s += ")";
    labels.push_back(std::move(s));
  }
  // direct construction: reflexivity/antisymmetry/transitivity hold
  // componentwise, the constructor re-checks
  Poset p = Poset::from_leq(
      size,
      [&] {
        std::vector<bool> leq(static_cast<std::size_t>(size) * size, false);
        for (int x = 0; x < size; ++x)
          up[static_cast<std::size_t>(x)].for_each(
              [&](int y) { leq[static_cast<std::size_t>(x) * size + y] = true; });
        return leq;
      }(),
      std::move(labels));
  ps.poset = std::make_shared<const Poset>(std::move(p));
  return ps;
}

namespace {

// Exact chain count of p: f(x) = 1 + sum_{y < x} f(y), summed. Saturates at
// `limit` so the route choice never overflows.
unsigned __int128 chain_count(const Poset& p, unsigned __int128 limit) {
  int n = p.size();
  std::vector<unsigned __int128> f(static_cast<std::size_t>(n), 0);
  // evaluate in a linear extension: sort indices by upset size descending
  std::vector<int> ord(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ord[static_cast<std::size_t>(i)] = i;
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    int da = p.down_row(a).count(), db = p.down_row(b).count();
    return da != db ? da < db : a < b;
  });
  unsigned __int128 total = 0;
  for (int x : ord) {
    unsigned __int128 v = 1;
    p.down_row(x).for_each([&](int y) {
      if (y != x) v += f[static_cast<std::size_t>(y)];
    });
    if (v > limit) v = limit;
    f[static_cast<std::size_t>(x)] = v;
    total += v;
    if (total > limit) total = limit;
  }
  return total;
}

bool chain_is_admissible(const ProductSpace& ps, const Bits& mask) {
  for (std::size_t i = 0; i < ps.factors.size(); ++i) {
    Bits image(ps.factors[i]->size());
    mask.for_each([&](int e) { image.set(ps.coord(e, i)); });
    if (!ps.factors[i]->is_upset(image)) return false;
  }
  return true;
}

// Direct admissible-chain generator: grows chains upward from each minimum,
// never skipping a value of any factor's required principal upset.
std::vector<Chain> generate_admissible(const ProductSpace& ps, std::size_t cap) {
  const Poset& p = *ps.poset;
  std::size_t k = ps.factors.size();
  std::vector<Chain> out;
  std::vector<int> cur;
  std::vector<Bits> covered(k), target(k);
  std::function<void(int)> grow = [&](int top) {
    bool complete = true;
    for (std::size_t i = 0; i < k; ++i)
      if (covered[i] != target[i]) complete = false;
    if (complete) {
      if (out.size() >= cap) fail_resource("chain cap", cap, out.size() + 1);
      Chain c;
      c.elems = cur;
      std::sort(c.elems.begin(), c.elems.end());
      out.push_back(std::move(c));
    }
    p.up_row(top).for_each([&](int u) {
      if (u == top) return;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        int cu = ps.coord(u, i);
        // every required value strictly below cu must already be covered
        Bits need = target[i] & ps.factors[i]->down_row(cu);
        need.reset(cu);
        if (!need.is_subset_of(covered[i])) ok = false;
      }
      if (!ok) return;
      std::vector<int> added;
      for (std::size_t i = 0; i < k; ++i) {
        int cu = ps.coord(u, i);
        if (!covered[i].test(cu)) {
          covered[i].set(cu);
          added.push_back(static_cast<int>(i));
        } else {
          added.push_back(-1);
        }
      }
      cur.push_back(u);
      grow(u);
      cur.pop_back();
      for (std::size_t i = 0; i < k; ++i)
        if (added[i] >= 0) covered[i].reset(ps.coord(u, static_cast<int>(i)));
    });
  };
  for (int z = 0; z < p.size(); ++z) {
    for (std::size_t i = 0; i < k; ++i) {
      int zi = ps.coord(z, i);
      target[i] = ps.factors[i]->up_row(zi);
      covered[i] = Bits::single(ps.factors[i]->size(), zi);
    }
    cur.assign(1, z);
    grow(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TensorSpace tensor(const std::vector<Poset>& factors, const RunConfig& cfg) {
  for (const Poset& f : factors)
    if (!f.is_root_system()) fail_precondition("tensor factors must be root systems");
  TensorSpace t;
  t.prod = product_poset(factors);
  std::vector<Chain> admissible;
  if (chain_count(*t.prod.poset, cfg.chain_cap + 1) <= cfg.chain_cap) {
    // the filter of cc(product) is the reference route
    for (Chain& c : enumerate_chains(*t.prod.poset, cfg.chain_cap))
      if (chain_is_admissible(t.prod, chain_mask(*t.prod.poset, c)))
        admissible.push_back(std::move(c));
  } else {
    admissible = generate_admissible(t.prod, cfg.chain_cap);
  }
  t.space = ChainPoset::make(t.prod.poset, std::move(admissible), ChainVariant::tensor, cfg);
  return t;
}

PMorph tensor_projection(const TensorSpace& t, int i) {
  if (i < 0 || i >= static_cast<int>(t.prod.factors.size()))
    fail_dimension("factor index out of range");
  std::vector<int> m(static_cast<std::size_t>(t.space.size()));
  for (int c = 0; c < t.space.size(); ++c)
    m[static_cast<std::size_t>(c)] = t.prod.coord(t.space.least(c), static_cast<std::size_t>(i));
  return make_map(t.space.order_ptr(), t.prod.factors[static_cast<std::size_t>(i)], std::move(m));
}

ProductCertificate verify_product_universal(const TensorSpace& t, const Poset& z,
                                            const std::vector<std::vector<int>>& fs,
                                            const RunConfig& cfg) {
  std::size_t k = t.prod.factors.size();
  if (fs.size() != k) fail_dimension("one map per factor required");
  PosetPtr zp = std::make_shared<const Poset>(z);
  for (std::size_t i = 0; i < k; ++i) {
    PMorph fi = make_map(zp, t.prod.factors[i], fs[i]);
    if (!is_p_morphism(fi)) fail_precondition("factor maps must be p-morphisms");
  }
  if (!z.is_root_system()) fail_precondition("Z must be a root system");
  ProductCertificate cert;
  // q(w) = tuple of images; g(v) = q[up(v)]
  std::vector<int> q(static_cast<std::size_t>(z.size()));
  for (int w = 0; w < z.size(); ++w) {
    std::vector<int> coords(k);
    for (std::size_t i = 0; i < k; ++i) coords[i] = fs[i][static_cast<std::size_t>(w)];
    q[static_cast<std::size_t>(w)] = t.prod.tuple_index(coords);
  }
  cert.mediating.assign(static_cast<std::size_t>(z.size()), -1);
  cert.mediating_in_space = true;
  cert.projections_commute = true;
  for (int v = 0; v < z.size(); ++v) {
    Bits img(t.prod.poset->size());
    z.up_row(v).for_each([&](int w) { img.set(q[static_cast<std::size_t>(w)]); });
    int c = t.space.index_of(img);
    if (c < 0) {
      cert.mediating_in_space = false;
      continue;
    }
    cert.mediating[static_cast<std::size_t>(v)] = c;
    for (std::size_t i = 0; i < k; ++i)
      if (t.prod.coord(t.space.least(c), i) != fs[i][static_cast<std::size_t>(v)])
        cert.projections_commute = false;
  }
  cert.p_morphism_count = count_p_morphisms_with_least(z, t.space, q, cfg.hom_cap);
  cert.unique = cert.p_morphism_count == 1;
  cert.ok = cert.mediating_in_space && cert.projections_commute && cert.unique;
  return cert;
}

Coproduct coproduct_godel(const std::vector<HeytingAlgebra>& gs, const RunConfig& cfg) {
  std::vector<Poset> duals;
  std::vector<BirkhoffDual> bd;
  for (const HeytingAlgebra& g : gs) {
    if (!g.godel) fail_precondition("coproduct factors must be Godel algebras");
    bd.push_back(dual_poset(g.base, false));
    duals.push_back(bd.back().poset);
  }
  Coproduct co;
  co.space = tensor(duals, cfg);
  co.algebra = upset_lattice(co.space.space.order(), cfg);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    LatticeHom inj;
    inj.flavor = HomFlavor::heyting;
    inj.map.resize(static_cast<std::size_t>(gs[i].size()));
    for (int a = 0; a < gs[i].size(); ++a) {
      // sigma_i(a) over the dual carrier, lifted through pi_i
      Bits lifted(co.space.prod.poset->size());
      for (int e = 0; e < co.space.prod.poset->size(); ++e) {
        int j = co.space.prod.coord(e, i);
        if (gs[i].base.leq(bd[i].irreducibles[static_cast<std::size_t>(j)], a)) lifted.set(e);
      }
      inj.map[static_cast<std::size_t>(a)] = co.algebra.index_of(co.space.space.box(lifted));
    }
    co.injections.push_back(std::move(inj));
  }
  return co;
}

int depth_of_coproduct(const std::vector<int>& ds) {
  int total = 1;
  for (int d : ds) {
    if (d < 1) fail_precondition("trivial factor", "coproduct depth needs depth >= 1");
    total += d - 1;
  }
  return total;
}

DepthCertificate depth_check(const std::vector<HeytingAlgebra>& gs, const RunConfig& cfg) {
  std::vector<int> ds;
  std::vector<Poset> duals;
  for (const HeytingAlgebra& g : gs) {
    if (!g.godel) fail_precondition("depth check needs Godel algebras");
    duals.push_back(dual_poset(g.base, false).poset);
    ds.push_back(duals.back().depth_of());
  }
  DepthCertificate cert;
  cert.formula = depth_of_coproduct(ds);
  cert.computed = tensor(duals, cfg).space.depth();
  cert.ok = cert.formula == cert.computed;
  return cert;
}

Chain witness_chain(const ProductSpace& prod, const std::vector<int>& ws,
                    const std::vector<std::pair<int, int>>& zs) {
  std::size_t k = prod.factors.size();
  if (ws.size() != k) fail_dimension("one maximal element per factor required");
  for (std::size_t i = 0; i < k; ++i) {
    if (ws[i] < 0 || ws[i] >= prod.factors[i]->size()) fail_dimension("w index out of range");
    if (prod.factors[i]->up_row(ws[i]).count() != 1)
      fail_precondition("w must be maximal in its factor");
  }
  std::vector<bool> seen(k, false);
  for (auto [i, zi] : zs) {
    if (i < 0 || i >= static_cast<int>(k)) fail_dimension("factor index out of range");
    if (seen[static_cast<std::size_t>(i)]) fail_precondition("factor indices must be distinct");
    seen[static_cast<std::size_t>(i)] = true;
    if (zi < 0 || zi >= prod.factors[static_cast<std::size_t>(i)]->size())
      fail_dimension("z index out of range");
    if (!prod.factors[static_cast<std::size_t>(i)]->leq(zi, ws[static_cast<std::size_t>(i)]))
      fail_precondition("z must lie below the chosen maximal element");
  }
  std::vector<int> elems;
  if (zs.empty()) {
    elems.push_back(prod.tuple_index(ws));
  } else {
    for (std::size_t j = 0; j < zs.size(); ++j) {
      auto [ij, zj] = zs[j];
      std::vector<int> coords(k);
      for (std::size_t i = 0; i < k; ++i) coords[i] = ws[i];
      for (std::size_t jj = 0; jj < j; ++jj) coords[static_cast<std::size_t>(zs[jj].first)] = zs[jj].second;
      prod.factors[static_cast<std::size_t>(ij)]->up_row(zj).for_each([&](int y) {
        coords[static_cast<std::size_t>(ij)] = y;
        elems.push_back(prod.tuple_index(coords));
      });
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Chain c{std::move(elems)};
  validate_chain(*prod.poset, c);
  return c;
}

Coproduct coproduct_gan(const std::vector<HeytingAlgebra>& gs, int n, const RunConfig& cfg) {
  if (n < 1) fail_precondition("GA_n coproduct needs n >= 1");
  std::vector<Poset> duals;
  std::vector<BirkhoffDual> bd;
  for (const HeytingAlgebra& g : gs) {
    if (!g.godel) fail_precondition("coproduct factors must be Godel algebras");
    bd.push_back(dual_poset(g.base, false));
    duals.push_back(bd.back().poset);
    if (duals.back().depth_of() > n)
      fail_precondition("factor not in GA_n", "depth exceeds " + std::to_string(n));
  }
  Coproduct co;
  co.space = tensor(duals, cfg);
  co.space.space = restrict_chains_to_depth(co.space.space, n, cfg);
  co.depth_bound = n;
  co.algebra = upset_lattice(co.space.space.order(), cfg);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    LatticeHom inj;
    inj.flavor = HomFlavor::heyting;
    inj.map.resize(static_cast<std::size_t>(gs[i].size()));
    for (int a = 0; a < gs[i].size(); ++a) {
      Bits lifted(co.space.prod.poset->size());
      for (int e = 0; e < co.space.prod.poset->size(); ++e) {
        int j = co.space.prod.coord(e, i);
        if (gs[i].base.leq(bd[i].irreducibles[static_cast<std::size_t>(j)], a)) lifted.set(e);
      }
      inj.map[static_cast<std::size_t>(a)] = co.algebra.index_of(co.space.space.box(lifted));
    }
    co.injections.push_back(std::move(inj));
  }
  return co;
}

bool gan_coincidence(const std::vector<HeytingAlgebra>& gs, int n, const RunConfig& cfg) {
  if (n < 1) fail_precondition("GA_n coincidence needs n >= 1");
  std::vector<Poset> duals;
  for (const HeytingAlgebra& g : gs) {
    if (!g.godel) fail_precondition("coincidence factors must be Godel algebras");
    duals.push_back(dual_poset(g.base, false).poset);
    int d = duals.back().depth_of();
    if (d < 1) fail_precondition("trivial factor", "coincidence needs nontrivial factors");
    if (d > n) fail_precondition("factor not in GA_n", "depth exceeds " + std::to_string(n));
  }
  TensorSpace t = tensor(duals, cfg);
  ChainPoset tn = restrict_chains_to_depth(t.space, n, cfg);
  return posets_isomorphic(t.space.order(), tn.order());
}

}  // namespace godel
