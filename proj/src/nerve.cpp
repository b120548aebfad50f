#include "godel/nerve.hpp"

#include "godel/lattice.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace godel {

namespace {

constexpr int kTwoheadCap = 6;

// One memo table per evaluation: rec[s] for every subfamily mask s.
std::vector<Bits> twohead_table(const Poset& x, const std::vector<Bits>& as) {
  int n = static_cast<int>(as.size());
  if (n > kTwoheadCap)
    fail_resource("twohead cap", static_cast<std::size_t>(kTwoheadCap), as.size());
  for (const Bits& a : as)
    if (a.size() != x.size()) fail_dimension("mask size mismatch");
  std::vector<Bits> table(static_cast<std::size_t>(1) << n);
  table[0] = Bits::full(x.size());
  for (unsigned s = 1; s < table.size(); ++s) {
    Bits r(x.size());
    for (int i = 0; i < n; ++i)
      if (s & (1u << i))
        r |= x.up_set(table[s & ~(1u << i)] & as[static_cast<std::size_t>(i)]);
    table[s] = std::move(r);
  }
  return table;
}

}  // namespace

Bits twohead_up(const Poset& x, const std::vector<Bits>& as) {
  return twohead_table(x, as).back();
}

Bits twohead_up_by_chains(const Poset& x, const std::vector<Bits>& as, const RunConfig& cfg) {
  for (const Bits& a : as)
    if (a.size() != x.size()) fail_dimension("mask size mismatch");
  if (as.empty()) return Bits::full(x.size());
  std::vector<Chain> chains = enumerate_chains(x, cfg.chain_cap);
  Bits r(x.size());
  for (const Chain& c : chains) {
    Bits m = chain_mask(x, c);
    bool meets_all = true;
    for (const Bits& a : as)
      if (!m.intersects(a)) {
        meets_all = false;
        break;
      }
    if (!meets_all) continue;
    // every x with the chain inside its downset
    for (int e = 0; e < x.size(); ++e)
      if (!r.test(e) && m.is_subset_of(x.down_row(e))) r.set(e);
  }
  return r;
}

TwoheadCertificate twohead_check(const Poset& x, int max_family_size, const RunConfig& cfg) {
  TwoheadCertificate cert;
  int n = x.size();
  if (n > 20) fail_resource("twohead sweep cap", 20, static_cast<std::size_t>(n));
  std::size_t subsets = static_cast<std::size_t>(1) << n;
  std::vector<Bits> all;
  all.reserve(subsets);
  for (std::size_t m = 0; m < subsets; ++m) {
    Bits b(n);
    for (int i = 0; i < n; ++i)
      if (m & (static_cast<std::size_t>(1) << i)) b.set(i);
    all.push_back(std::move(b));
  }
  std::vector<Bits> family;
  std::function<void(int)> rec = [&](int k) {
    Bits lhs = twohead_up(x, family);
    Bits rhs = twohead_up_by_chains(x, family, cfg);
    ++cert.families;
    if (lhs != rhs) ++cert.mismatches;
    if (k == max_family_size) return;
    for (const Bits& a : all) {
      family.push_back(a);
      rec(k + 1);
      family.pop_back();
    }
  };
  rec(0);
  cert.ok = cert.mismatches == 0;
  return cert;
}

Bits upset_of_basic(const ChainPoset& ccx, const Bits& v, const std::vector<Bits>& ws) {
  const Poset& x = ccx.base();
  if (v.size() != x.size()) fail_dimension("mask size mismatch");
  for (const Bits& w : ws)
    if (!w.is_subset_of(v)) fail_precondition("each W must be contained in V");
  std::vector<Bits> table = twohead_table(x, ws);
  int n = static_cast<int>(ws.size());
  std::vector<Bits> diamonds;
  diamonds.reserve(ws.size());
  for (const Bits& w : ws) diamonds.push_back(ccx.diamond(w));
  Bits out(ccx.size());
  for (unsigned s = 0; s < table.size(); ++s) {
    Bits term = ccx.box(v & table[s]);
    for (int j = 0; j < n; ++j)
      if (!(s & (1u << j))) term &= diamonds[static_cast<std::size_t>(j)];
    out |= term;
  }
  return out;
}

BasicUpsetCertificate basic_upset_check(const Poset& x, int max_family_size,
                                        const RunConfig& cfg) {
  BasicUpsetCertificate cert;
  if (x.size() > 20) fail_resource("basic upset sweep cap", 20, static_cast<std::size_t>(x.size()));
  ChainPoset ccx = cc(std::make_shared<const Poset>(x), cfg);
  std::size_t subsets = static_cast<std::size_t>(1) << x.size();
  std::vector<Bits> all;
  for (std::size_t m = 0; m < subsets; ++m) {
    Bits b(x.size());
    for (int i = 0; i < x.size(); ++i)
      if (m & (static_cast<std::size_t>(1) << i)) b.set(i);
    all.push_back(std::move(b));
  }
  std::vector<Bits> ws;
  std::function<void(const Bits&, int)> rec = [&](const Bits& v, int k) {
    Bits direct(ccx.size());
    {
      Bits basic = ccx.box(v);
      for (const Bits& w : ws) basic &= ccx.diamond(w);
      direct = ccx.up_closure(basic);
    }
    Bits formula = upset_of_basic(ccx, v, ws);
    ++cert.instances;
    if (direct != formula) ++cert.mismatches;
    if (k == max_family_size) return;
    for (const Bits& w : all) {
      if (!w.is_subset_of(v)) continue;
      ws.push_back(w);
      rec(v, k + 1);
      ws.pop_back();
    }
  };
  for (const Bits& v : all) rec(v, 0);
  cert.ok = cert.mismatches == 0;
  return cert;
}

MaxCcIso max_cc_iso(const ChainPoset& ccx) {
  MaxCcIso iso;
  const Poset& x = ccx.base();
  iso.chain_of.assign(static_cast<std::size_t>(x.size()), -1);
  Bits singletons(ccx.size());
  for (int i = 0; i < ccx.size(); ++i)
    if (ccx.chain(i).size() == 1) {
      singletons.set(i);
      iso.chain_of[static_cast<std::size_t>(ccx.chain(i).elems[0])] = i;
    }
  bool total = true;
  for (int v : iso.chain_of)
    if (v < 0) total = false;
  iso.ok = total && ccx.order().maximal_elements() == singletons;
  return iso;
}

bool is_forest(const Poset& p) {
  for (int x = 0; x < p.size(); ++x) {
    bool chain = true;
    p.down_row(x).for_each([&](int y) {
      if (!(p.down_row(x) - p.down_row(y)).is_subset_of(p.up_row(y))) chain = false;
    });
    if (!chain) return false;
  }
  return true;
}

UnravelResult unravel(PosetPtr x, const RunConfig& cfg) {
  UnravelResult r;
  std::vector<Chain> chains = enumerate_chains(*x, cfg.chain_cap);
  r.space = ChainPoset::make(std::move(x), std::move(chains), ChainVariant::unravel, cfg);
  std::vector<int> m(static_cast<std::size_t>(r.space.size()));
  for (int i = 0; i < r.space.size(); ++i) m[static_cast<std::size_t>(i)] = r.space.greatest(i);
  r.to_base = make_map(r.space.order_ptr(), r.space.base_ptr(), std::move(m));
  return r;
}

ChainPoset nerve(PosetPtr x, const RunConfig& cfg) {
  std::vector<Chain> chains = enumerate_chains(*x, cfg.chain_cap);
  return ChainPoset::make(std::move(x), std::move(chains), ChainVariant::nerve, cfg);
}

bool is_m_open(const ChainPoset& nerve_cp, const ChainOfChains& coc) {
  if (coc.members.empty()) fail_validation("chain of chains must be nonempty");
  for (std::size_t a = 0; a < coc.members.size(); ++a) {
    int i = coc.members[a];
    if (i < 0 || i >= nerve_cp.size()) fail_dimension("member index out of range");
    for (std::size_t b = a + 1; b < coc.members.size(); ++b) {
      int j = coc.members[b];
      if (!nerve_cp.mask(i).is_subset_of(nerve_cp.mask(j)) &&
          !nerve_cp.mask(j).is_subset_of(nerve_cp.mask(i)))
        fail_validation("members must be pairwise nested");
    }
  }
  for (int c1 : coc.members) {
    for (int c2 = 0; c2 < nerve_cp.size(); ++c2) {
      if (!nerve_cp.mask(c2).is_subset_of(nerve_cp.mask(c1))) continue;
      bool witness = false;
      for (int c3 : coc.members)
        if (nerve_cp.mask(c3).is_subset_of(nerve_cp.mask(c1)) &&
            nerve_cp.least(c3) == nerve_cp.least(c2)) {
          witness = true;
          break;
        }
      if (!witness) return false;
    }
  }
  return true;
}

ZSpaceResult z_space(PosetPtr x, const RunConfig& cfg) {
  ZSpaceResult r;
  r.nerve_cp = nerve(std::move(x), cfg);
  PosetPtr n = r.nerve_cp.order_ptr();
  std::vector<Chain> m_open;
  for (Chain& c : enumerate_chains(*n, cfg.chain_cap))
    if (is_m_open(r.nerve_cp, ChainOfChains{c.elems})) m_open.push_back(std::move(c));
  r.z = ChainPoset::make(std::move(n), std::move(m_open), ChainVariant::zspace, cfg);
  return r;
}

ZIsoCertificate z_iso_check(PosetPtr x, const RunConfig& cfg) {
  ZIsoCertificate cert;
  ChainPoset ccx = cc(x, cfg);
  ZSpaceResult zs = z_space(std::move(x), cfg);
  cert.cc_size = ccx.size();
  cert.z_size = zs.z.size();
  cert.images_m_open = true;
  std::vector<int> image(static_cast<std::size_t>(ccx.size()), -1);
  std::vector<bool> hit(static_cast<std::size_t>(zs.z.size()), false);
  bool injective = true;
  for (int i = 0; i < ccx.size(); ++i) {
    Bits up = ccx.up_closure(Bits::single(ccx.size(), i));
    if (!is_m_open(zs.nerve_cp, ChainOfChains{up.to_list()})) cert.images_m_open = false;
    int zi = zs.z.index_of(up);
    image[static_cast<std::size_t>(i)] = zi;
    if (zi >= 0) {
      if (hit[static_cast<std::size_t>(zi)]) injective = false;
      hit[static_cast<std::size_t>(zi)] = true;
    }
  }
  bool total = true;
  for (int v : image)
    if (v < 0) total = false;
  cert.bijective = total && injective && cert.cc_size == cert.z_size;
  cert.order_iso = cert.bijective;
  if (cert.bijective)
    for (int i = 0; i < ccx.size() && cert.order_iso; ++i)
      for (int j = 0; j < ccx.size(); ++j)
        if (ccx.leq(i, j) !=
            zs.z.leq(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)])) {
          cert.order_iso = false;
          break;
        }
  cert.ok = cert.images_m_open && cert.bijective && cert.order_iso;
  return cert;
}

ImplicationCertificate implication_box_formula_check(PosetPtr x, const RunConfig& cfg) {
  ImplicationCertificate cert;
  ChainPoset ccx = cc(x, cfg);
  const Poset& base = ccx.base();
  std::vector<Bits> upsets = enumerate_upsets(base, cfg.upset_cap);
  Bits all = Bits::full(ccx.size());
  for (const Bits& u1 : upsets)
    for (const Bits& u2 : upsets) {
      ++cert.pairs;
      Bits impl = all - ccx.down_closure(ccx.box(u1) - ccx.box(u2));
      Bits rhs = ccx.box(~u1 | u2);
      if (impl != rhs) ++cert.mismatches;
    }
  cert.ok = cert.mismatches == 0;
  return cert;
}

NerveUpsetCertificate nerve_upset_characterization_check(PosetPtr x, const RunConfig& cfg) {
  NerveUpsetCertificate cert;
  if (x->size() > 20) fail_resource("nerve sweep cap", 20, static_cast<std::size_t>(x->size()));
  ChainPoset nv = nerve(x, cfg);
  const Poset& order = nv.order();
  std::vector<Bits> nerve_upsets = enumerate_upsets(order, cfg.upset_cap);
  std::unordered_set<Bits, BitsHash> upset_family(nerve_upsets.begin(), nerve_upsets.end());
  cert.nerve_upsets = nerve_upsets.size();

  std::vector<Bits> boxes;
  std::size_t subsets = static_cast<std::size_t>(1) << x->size();
  cert.boxes_are_upsets = true;
  for (std::size_t m = 0; m < subsets; ++m) {
    Bits v(x->size());
    for (int i = 0; i < x->size(); ++i)
      if (m & (static_cast<std::size_t>(1) << i)) v.set(i);
    Bits bx = nv.box(v);
    if (!order.is_upset(bx)) cert.boxes_are_upsets = false;
    boxes.push_back(std::move(bx));
  }
  // union closure as a fixpoint
  std::unordered_set<Bits, BitsHash> unions(boxes.begin(), boxes.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bits> current(unions.begin(), unions.end());
    for (const Bits& a : current)
      for (const Bits& b : boxes) {
        Bits u = a | b;
        if (unions.insert(u).second) grew = true;
      }
  }
  cert.box_unions = unions.size();
  cert.ok = cert.boxes_are_upsets && unions == upset_family;
  return cert;
}

}  // namespace godel
