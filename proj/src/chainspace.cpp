#include "godel/chainspace.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace godel {

struct ChainPoset::OrderCell {
  std::once_flag flag;
  PosetPtr poset;
};

ChainPoset ChainPoset::make(PosetPtr base, std::vector<Chain> chains, ChainVariant variant,
                            const RunConfig& cfg, int depth_bound) {
  if (!base) fail_dimension("missing base poset");
  ChainPoset cp;
  cp.base_ = std::move(base);
  cp.chains_ = std::move(chains);
  cp.variant_ = variant;
  cp.depth_bound_ = depth_bound;
  cp.order_cap_ = cfg.order_cap;
  cp.order_cell_ = std::make_shared<OrderCell>();
  cp.masks_.reserve(cp.chains_.size());
  cp.least_.reserve(cp.chains_.size());
  cp.greatest_.reserve(cp.chains_.size());
  for (std::size_t i = 0; i < cp.chains_.size(); ++i) {
    const Chain& c = cp.chains_[i];
    validate_chain(*cp.base_, c);
    cp.masks_.push_back(chain_mask(*cp.base_, c));
    cp.least_.push_back(chain_least(*cp.base_, c));
    cp.greatest_.push_back(chain_greatest(*cp.base_, c));
    auto [it, fresh] = cp.index_.emplace(cp.masks_.back(), static_cast<int>(i));
    if (!fresh) fail_validation("duplicate chain in chain list");
  }
  // closure under C |-> up(x) /\ C for the canonical-order variants
  if (variant == ChainVariant::full || variant == ChainVariant::depth_bounded ||
      variant == ChainVariant::tensor) {
    for (std::size_t i = 0; i < cp.chains_.size(); ++i)
      for (int x : cp.chains_[i].elems) {
        Bits sub = cp.base_->up_row(x) & cp.masks_[i];
        if (cp.index_.find(sub) == cp.index_.end())
          fail_validation("chain list not closed under upset subchains");
      }
  }
  return cp;
}

int ChainPoset::index_of(const Bits& mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

bool ChainPoset::leq(int i, int j) const {
  const Bits& mi = masks_[static_cast<std::size_t>(i)];
  const Bits& mj = masks_[static_cast<std::size_t>(j)];
  switch (variant_) {
    case ChainVariant::full:
    case ChainVariant::depth_bounded:
    case ChainVariant::tensor:
      // C_j = up(min C_j) /\ C_i
      return mj == (base_->up_row(least_[static_cast<std::size_t>(j)]) & mi);
    case ChainVariant::nerve:
    case ChainVariant::zspace:
      return mj.is_subset_of(mi);  // reverse inclusion
    case ChainVariant::unravel:
      // C_i = down(max C_i) /\ C_j
      return mi == (base_->down_row(greatest_[static_cast<std::size_t>(i)]) & mj);
  }
  return false;
}

const Poset& ChainPoset::order() const {
  std::call_once(order_cell_->flag, [&] {
    std::size_t n = chains_.size();
    if (n > order_cap_) fail_resource("order cap", order_cap_, n);
    std::vector<bool> leq_table(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        leq_table[i * n + j] = leq(static_cast<int>(i), static_cast<int>(j));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const Chain& c : chains_) {
      std::string s = "{";
      for (std::size_t k = 0; k < c.elems.size(); ++k) {
        if (k) s += ",";
        s += base_->label(c.elems[k]);
      }
      s += "}";
      labels.push_back(std::move(s));
    }
    Poset p = Poset::from_leq(static_cast<int>(n), leq_table, std::move(labels));
    if ((variant_ == ChainVariant::full || variant_ == ChainVariant::depth_bounded ||
         variant_ == ChainVariant::tensor || variant_ == ChainVariant::zspace) &&
        !p.is_root_system())
      fail_validation("chain order is not a root system");
    order_cell_->poset = std::make_shared<const Poset>(std::move(p));
  });
  return *order_cell_->poset;
}

PosetPtr ChainPoset::order_ptr() const {
  order();
  return order_cell_->poset;
}

int ChainPoset::depth() const {
  int d = 0;
  for (const Chain& c : chains_) d = std::max(d, c.size());
  return d;
}

Bits ChainPoset::box(const Bits& a) const {
  if (a.size() != base_->size()) fail_dimension("mask size mismatch");
  Bits r(size());
  for (int i = 0; i < size(); ++i)
    if (masks_[static_cast<std::size_t>(i)].is_subset_of(a)) r.set(i);
  return r;
}

Bits ChainPoset::diamond(const Bits& a) const {
  if (a.size() != base_->size()) fail_dimension("mask size mismatch");
  Bits r(size());
  for (int i = 0; i < size(); ++i)
    if (masks_[static_cast<std::size_t>(i)].intersects(a)) r.set(i);
  return r;
}

Bits ChainPoset::up_closure(const Bits& s) const {
  check_chain_set(s);
  return order().up_set(s);
}

Bits ChainPoset::down_closure(const Bits& s) const {
  check_chain_set(s);
  return order().down_set(s);
}

// ---------------------------------------------------------------------------

bool leq_cc(const Poset& x, const Chain& c1, const Chain& c2) {
  validate_chain(x, c1);
  validate_chain(x, c2);
  Bits m1 = chain_mask(x, c1), m2 = chain_mask(x, c2);
  return m2 == (x.up_row(chain_least(x, c2)) & m1);
}

ChainPoset cc(PosetPtr x, const RunConfig& cfg) {
  std::vector<Chain> chains = enumerate_chains(*x, cfg.chain_cap);
  return ChainPoset::make(std::move(x), std::move(chains), ChainVariant::full, cfg);
}

ChainPoset restrict_chains_to_depth(const ChainPoset& cp, int n, const RunConfig& cfg,
                                    std::vector<int>* kept_out) {
  std::vector<Chain> kept;
  std::vector<int> idx;
  for (int i = 0; i < cp.size(); ++i)
    if (cp.chain(i).size() <= n) {
      kept.push_back(cp.chain(i));
      idx.push_back(i);
    }
  if (kept_out) *kept_out = std::move(idx);
  ChainVariant v = cp.variant() == ChainVariant::tensor ? ChainVariant::tensor
                                                        : ChainVariant::depth_bounded;
  return ChainPoset::make(cp.base_ptr(), std::move(kept), v, cfg, n);
}

ChainPoset cc_n(PosetPtr x, int n, const RunConfig& cfg) {
  if (n < 0) fail_dimension("negative depth bound");
  return restrict_chains_to_depth(cc(std::move(x), cfg), n, cfg);
}

Bits minv_up(const ChainPoset& cp, const Bits& u) {
  if (!cp.base().is_upset(u)) fail_precondition("minv_up needs an upset");
  Bits r(cp.size());
  for (int i = 0; i < cp.size(); ++i)
    if (u.test(cp.least(i))) r.set(i);
  return r;
}

Bits minv_down(const ChainPoset& cp, const Bits& d) {
  if (!cp.base().is_downset(d)) fail_precondition("minv_down needs a downset");
  Bits r(cp.size());
  for (int i = 0; i < cp.size(); ++i)
    if (d.test(cp.least(i))) r.set(i);
  return r;
}

PMorph least_map(const ChainPoset& cp) {
  std::vector<int> m(static_cast<std::size_t>(cp.size()));
  for (int i = 0; i < cp.size(); ++i) m[static_cast<std::size_t>(i)] = cp.least(i);
  return make_map(cp.order_ptr(), cp.base_ptr(), std::move(m));
}

CcMap cc_map(const PMorph& f, const ChainPoset& cc1, const ChainPoset& cc2) {
  if (!is_monotone(f)) fail_precondition("cc_map needs a monotone map");
  if (f.source->size() != cc1.base().size() || f.target->size() != cc2.base().size())
    fail_dimension("map endpoints mismatch");
  CcMap out;
  out.chain_map.resize(static_cast<std::size_t>(cc1.size()));
  for (int i = 0; i < cc1.size(); ++i) {
    Bits img = image_mask(f, cc1.mask(i));
    int j = cc2.index_of(img);
    if (j < 0) fail_validation("image chain missing from the target space");
    out.chain_map[static_cast<std::size_t>(i)] = j;
  }
  out.order_map = make_map(cc1.order_ptr(), cc2.order_ptr(), out.chain_map);
  return out;
}

std::vector<int> universal_extension(const PMorph& f, const ChainPoset& ccx) {
  if (!f.source->is_root_system()) fail_precondition("universal extension needs a root system");
  if (!is_monotone(f)) fail_precondition("universal extension needs a monotone map");
  if (f.target->size() != ccx.base().size()) fail_dimension("map endpoints mismatch");
  std::vector<int> g(static_cast<std::size_t>(f.source->size()));
  for (int y = 0; y < f.source->size(); ++y) {
    Bits img = image_mask(f, f.source->up_row(y));
    int j = ccx.index_of(img);
    if (j < 0) fail_validation("image chain missing from the target space");
    g[static_cast<std::size_t>(y)] = j;
  }
  return g;
}

std::size_t count_p_morphisms_with_least(const Poset& y, const ChainPoset& target,
                                         const std::vector<int>& pinned_least,
                                         std::size_t cap) {
  if (static_cast<int>(pinned_least.size()) != y.size()) fail_dimension("map size mismatch");
  int n = y.size();
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < target.size(); ++c)
      if (target.least(c) == pinned_least[static_cast<std::size_t>(v)])
        candidates[static_cast<std::size_t>(v)].push_back(c);
  std::vector<int> h(static_cast<std::size_t>(n), -1);
  std::size_t count = 0, nodes = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      // full p-morphism check
      for (int a = 0; a < n; ++a) {
        Bits img(target.size());
        y.up_row(a).for_each([&](int b) { img.set(h[static_cast<std::size_t>(b)]); });
        if (img != target.order().up_row(h[static_cast<std::size_t>(a)])) return;
      }
      ++count;
      return;
    }
    for (int c : candidates[static_cast<std::size_t>(v)]) {
      if (++nodes > cap) fail_resource("hom cap", cap, nodes);
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (y.leq(u, v) && !target.leq(h[static_cast<std::size_t>(u)], c)) ok = false;
        if (y.leq(v, u) && !target.leq(c, h[static_cast<std::size_t>(u)])) ok = false;
      }
      if (!ok) continue;
      h[static_cast<std::size_t>(v)] = c;
      rec(v + 1);
      h[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(0);
  return count;
}

UniquenessCertificate universal_uniqueness(const PMorph& f, const ChainPoset& ccx,
                                           std::size_t cap) {
  UniquenessCertificate cert;
  cert.count = count_p_morphisms_with_least(*f.source, ccx, f.map, cap);
  cert.unique = cert.count == 1;
  return cert;
}

BoxDiamondCertificate box_diamond_check(PosetPtr x, const RunConfig& cfg) {
  BoxDiamondCertificate cert;
  ChainPoset ccx = cc(x, cfg);
  const Poset& base = ccx.base();
  int n = base.size();
  Bits all_chains = Bits::full(ccx.size());

  std::vector<Bits> subsets;
  bool exhaustive = n <= 4;
  if (exhaustive) {
    for (std::size_t m = 0; m < (static_cast<std::size_t>(1) << n); ++m) {
      Bits b(n);
      for (int i = 0; i < n; ++i)
        if (m & (static_cast<std::size_t>(1) << i)) b.set(i);
      subsets.push_back(std::move(b));
    }
  } else {
    Rng rng(cfg.seed);
    for (int k = 0; k < 500; ++k) {
      Bits b(n);
      for (int i = 0; i < n; ++i)
        if (rng.next() & 1) b.set(i);
      subsets.push_back(std::move(b));
    }
  }
  std::vector<Bits> upsets, downsets;
  for (const Bits& a : subsets) {
    if (base.is_upset(a)) upsets.push_back(a);
    if (base.is_downset(a)) downsets.push_back(a);
  }

  auto record = [&](bool equal) {
    ++cert.instances;
    if (!equal) ++cert.mismatches;
  };

  for (const Bits& a : subsets) {
    // complement laws and closedness
    record((all_chains - ccx.box(a)) == ccx.diamond(~a));
    record((all_chains - ccx.diamond(a)) == ccx.box(~a));
    record(ccx.up_closure(ccx.box(a)) == ccx.box(a));
    record(ccx.down_closure(ccx.diamond(a)) == ccx.diamond(a));
  }
  for (const Bits& a : subsets)
    for (const Bits& b : subsets) {
      record(ccx.box(a & b) == (ccx.box(a) & ccx.box(b)));
      record(ccx.diamond(a | b) == (ccx.diamond(a) | ccx.diamond(b)));
    }
  // down-closure distributes over the diamond conjuncts (up to three)
  {
    std::size_t budget = exhaustive ? subsets.size() : 8;
    for (std::size_t ia = 0; ia < budget; ++ia)
      for (std::size_t i1 = 0; i1 < budget; ++i1)
        for (std::size_t i2 = 0; i2 < budget; ++i2)
          for (std::size_t i3 = 0; i3 < budget; ++i3) {
            const Bits &a = subsets[ia], &b1 = subsets[i1], &b2 = subsets[i2], &b3 = subsets[i3];
            Bits lhs = ccx.down_closure(ccx.box(a) & ccx.diamond(b1) & ccx.diamond(b2) &
                                        ccx.diamond(b3));
            Bits rhs = ccx.down_closure(ccx.box(a) & ccx.diamond(b1)) &
                       ccx.down_closure(ccx.box(a) & ccx.diamond(b2)) &
                       ccx.down_closure(ccx.box(a) & ccx.diamond(b3));
            record(lhs == rhs);
          }
  }
  for (const Bits& d : downsets) {
    record(ccx.down_closure(ccx.box(d)) == ccx.box(d));
    record(minv_down(ccx, d) == ccx.diamond(d));
  }
  for (const Bits& u : upsets) {
    record(ccx.up_closure(ccx.diamond(u)) == ccx.diamond(u));
    record(minv_up(ccx, u) == ccx.box(u));
  }
  // down-closure of box A /\ diamond(U /\ D), qualified by U /\ D <= A
  for (const Bits& u : upsets)
    for (const Bits& d : downsets) {
      Bits ud = u & d;
      for (const Bits& a : subsets) {
        Bits lhs = ccx.down_closure(ccx.box(a) & ccx.diamond(ud));
        Bits rhs = ccx.box(a | d) & ccx.diamond(ud);
        if (ud.is_subset_of(a)) {
          record(lhs == rhs);
          // special case: box A /\ diamond D is a downset when D <= A
          if (u == Bits::full(n))
            record(ccx.down_closure(ccx.box(a) & ccx.diamond(d)) ==
                   (ccx.box(a) & ccx.diamond(d)));
        } else {
          ++cert.unqualified_total;
          if (lhs == rhs) ++cert.unqualified_equal;
        }
      }
    }
  cert.ok = cert.mismatches == 0;
  return cert;
}

}  // namespace godel
