#include "godel/poset.hpp"

#include <algorithm>
#include <functional>

namespace godel {

Poset::Poset(int n, std::vector<Bits> up, std::vector<std::string> labels)
    : n_(n), up_(std::move(up)), labels_(std::move(labels)) {
  validate();
  down_.assign(static_cast<std::size_t>(n_), Bits(n_));
  for (int x = 0; x < n_; ++x)
    up_[x].for_each([&](int y) { down_[y].set(x); });
  root_system_ = true;
  for (int x = 0; x < n_ && root_system_; ++x) {
    // up(x) is a chain iff every member's upset covers the rest of up(x)
    up_[x].for_each([&](int y) {
      if (!(up_[x] - up_[y]).is_subset_of(down_[y])) root_system_ = false;
    });
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    fail_dimension("label table size mismatch");
}

void Poset::validate() const {
  for (int x = 0; x < n_; ++x)
    if (!up_[x].test(x)) fail_validation("reflexivity violated", "element " + std::to_string(x));
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (up_[x].test(y) && up_[y].test(x))
        fail_validation("antisymmetry violated",
                        std::to_string(x) + " and " + std::to_string(y) + " are equivalent");
  for (int x = 0; x < n_; ++x) {
    Bits closure(n_);
    up_[x].for_each([&](int y) { closure |= up_[y]; });
    if (closure != up_[x])
      fail_validation("transitivity violated", "at element " + std::to_string(x));
  }
}

Poset Poset::from_leq(int n, const std::vector<bool>& leq, std::vector<std::string> labels) {
  if (n < 0 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != leq.size())
    fail_dimension("relation table size mismatch");
  std::vector<Bits> up(static_cast<std::size_t>(n), Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[static_cast<std::size_t>(x) * n + y]) up[x].set(y);
  return Poset(n, std::move(up), std::move(labels));
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                         std::vector<std::string> labels) {
  if (n < 0) fail_dimension("negative size");
  std::vector<Bits> up(static_cast<std::size_t>(n), Bits(n));
  for (int x = 0; x < n; ++x) up[x].set(x);
  for (auto [i, j] : covers) {
    if (i < 0 || i >= n || j < 0 || j >= n) fail_validation("cover index out of range");
    up[i].set(j);
  }
  // reflexive-transitive closure (Warshall over bit rows)
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (up[x].test(k)) up[x] |= up[k];
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (up[x].test(y) && up[y].test(x)) fail_validation("antisymmetry violated", "cover cycle");
  return Poset(n, std::move(up), std::move(labels));
}

Poset Poset::chain(int k) {
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < k; ++i) cov.emplace_back(i, i + 1);
  return from_covers(k, cov);
}

Poset Poset::antichain(int k) { return from_covers(k, {}); }

Poset Poset::diamond() {
  return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Poset Poset::cube(int k) {
  if (k < 0 || k > 20) fail_dimension("cube dimension out of range");
  int n = 1 << k;
  std::vector<Bits> up(static_cast<std::size_t>(n), Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((x & y) == x) up[x].set(y);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::string s;
    for (int b = 0; b < k; ++b) s.push_back((x >> b) & 1 ? '1' : '0');
    labels.push_back(k == 0 ? "()" : s);
  }
  return Poset(n, std::move(up), std::move(labels));
}

Bits Poset::up_set(const Bits& a) const {
  if (a.size() != n_) fail_dimension("mask size mismatch");
  Bits r(n_);
  a.for_each([&](int y) { r |= up_[y]; });
  return r;
}

Bits Poset::down_set(const Bits& a) const {
  if (a.size() != n_) fail_dimension("mask size mismatch");
  Bits r(n_);
  a.for_each([&](int y) { r |= down_[y]; });
  return r;
}

bool Poset::is_upset(const Bits& a) const { return up_set(a) == a; }
bool Poset::is_downset(const Bits& a) const { return down_set(a) == a; }

Bits Poset::maximal_elements() const {
  Bits r(n_);
  for (int x = 0; x < n_; ++x)
    if (up_[x].count() == 1) r.set(x);
  return r;
}

Bits Poset::minimal_elements() const {
  Bits r(n_);
  for (int x = 0; x < n_; ++x)
    if (down_[x].count() == 1) r.set(x);
  return r;
}

int Poset::depth(int x) const {
  if (!root_system_) fail_precondition("depth requires a root system");
  return up_[x].count();
}

int Poset::depth_of() const {
  if (!root_system_) fail_precondition("depth requires a root system");
  int d = 0;
  for (int x = 0; x < n_; ++x) d = std::max(d, up_[x].count());
  return d;
}

Poset Poset::restrict(const Bits& keep, std::vector<int>* kept_out) const {
  if (keep.size() != n_) fail_dimension("mask size mismatch");
  std::vector<int> kept = keep.to_list();
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) pos[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  int m = static_cast<int>(kept.size());
  std::vector<Bits> up(static_cast<std::size_t>(m), Bits(m));
  for (int i = 0; i < m; ++i)
    (up_[kept[static_cast<std::size_t>(i)]] & keep).for_each([&](int y) { up[static_cast<std::size_t>(i)].set(pos[static_cast<std::size_t>(y)]); });
  std::vector<std::string> labels;
  if (!labels_.empty())
    for (int k : kept) labels.push_back(labels_[static_cast<std::size_t>(k)]);
  if (kept_out) *kept_out = std::move(kept);
  return Poset(m, std::move(up), std::move(labels));
}

Poset Poset::restrict_to_depth(int n, std::vector<int>* kept_out) const {
  if (!root_system_) fail_precondition("restrict_to_depth requires a root system");
  Bits keep(n_);
  for (int x = 0; x < n_; ++x)
    if (up_[x].count() <= n) keep.set(x);
  return restrict(keep, kept_out);
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x) {
    Bits strict = up_[x];
    strict.reset(x);
    strict.for_each([&](int y) {
      // y covers x iff nothing lies strictly between
      bool cover = true;
      strict.for_each([&](int z) {
        if (z != y && up_[z].test(y)) cover = false;
      });
      if (cover) out.emplace_back(x, y);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Poset::label(int x) const {
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  Poset p = *this;
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    fail_dimension("label table size mismatch");
  p.labels_ = std::move(labels);
  return p;
}

Poset Poset::disjoint_union(const Poset& a, const Poset& b) {
  int n = a.n_ + b.n_;
  std::vector<Bits> up(static_cast<std::size_t>(n), Bits(n));
  for (int x = 0; x < a.n_; ++x)
    a.up_[x].for_each([&](int y) { up[static_cast<std::size_t>(x)].set(y); });
  for (int x = 0; x < b.n_; ++x)
    b.up_[x].for_each([&](int y) { up[static_cast<std::size_t>(a.n_ + x)].set(a.n_ + y); });
  return Poset(n, std::move(up), {});
}

// ---------------------------------------------------------------------------

void validate_chain(const Poset& p, const Chain& c) {
  if (c.elems.empty()) fail_validation("chain must be nonempty");
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    int e = c.elems[i];
    if (e < 0 || e >= p.size()) fail_dimension("chain element out of range");
    if (i > 0 && c.elems[i - 1] >= e) fail_validation("chain indices not strictly increasing");
  }
  for (std::size_t i = 0; i < c.elems.size(); ++i)
    for (std::size_t j = i + 1; j < c.elems.size(); ++j)
      if (!p.comparable(c.elems[i], c.elems[j]))
        fail_validation("chain not totally ordered",
                        std::to_string(c.elems[i]) + " and " + std::to_string(c.elems[j]));
}

Bits chain_mask(const Poset& p, const Chain& c) {
  Bits m(p.size());
  for (int e : c.elems) m.set(e);
  return m;
}

Chain chain_from_mask(const Poset& p, const Bits& mask) {
  Chain c{mask.to_list()};
  validate_chain(p, c);
  return c;
}

int chain_least(const Poset& p, const Chain& c) {
  int m = c.elems.front();
  for (int e : c.elems)
    if (p.leq(e, m)) m = e;
  return m;
}

int chain_greatest(const Poset& p, const Chain& c) {
  int m = c.elems.front();
  for (int e : c.elems)
    if (p.leq(m, e)) m = e;
  return m;
}

std::vector<Chain> enumerate_chains(const Poset& p, std::size_t chain_cap) {
  std::vector<Chain> out;
  std::vector<int> cur;
  // Extends by elements strictly above the current maximum, so each chain is
  // produced exactly once, in its parent-order sequence.
  std::function<void(int)> grow = [&](int top) {
    if (out.size() >= chain_cap) fail_resource("chain cap", chain_cap, out.size() + 1);
    Chain c;
    c.elems = cur;
    std::sort(c.elems.begin(), c.elems.end());
    out.push_back(std::move(c));
    Bits above = p.up_row(top);
    above.for_each([&](int y) {
      if (y == top) return;
      cur.push_back(y);
      grow(y);
      cur.pop_back();
    });
  };
  for (int x = 0; x < p.size(); ++x) {
    cur.assign(1, x);
    grow(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

PMorph make_map(PosetPtr source, PosetPtr target, std::vector<int> map) {
  if (!source || !target) fail_dimension("map endpoints missing");
  if (static_cast<int>(map.size()) != source->size()) fail_dimension("map size mismatch");
  for (int v : map)
    if (v < 0 || v >= target->size()) fail_dimension("map value out of range");
  return PMorph{std::move(source), std::move(target), std::move(map)};
}

bool is_monotone(const PMorph& f) {
  const Poset& s = *f.source;
  const Poset& t = *f.target;
  for (int x = 0; x < s.size(); ++x) {
    bool ok = true;
    s.up_row(x).for_each([&](int y) {
      if (!t.leq(f.map[static_cast<std::size_t>(x)], f.map[static_cast<std::size_t>(y)])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Bits image_mask(const PMorph& f, const Bits& a) {
  if (a.size() != f.source->size()) fail_dimension("mask size mismatch");
  Bits r(f.target->size());
  a.for_each([&](int x) { r.set(f.map[static_cast<std::size_t>(x)]); });
  return r;
}

bool is_p_morphism(const PMorph& f) {
  if (!is_monotone(f)) return false;
  const Poset& s = *f.source;
  const Poset& t = *f.target;
  for (int x = 0; x < s.size(); ++x)
    if (image_mask(f, s.up_row(x)) != t.up_row(f.map[static_cast<std::size_t>(x)])) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_monotone_maps(const Poset& src, const Poset& dst,
                                                      std::size_t cap) {
  std::vector<std::vector<int>> out;
  if (src.size() == 0) {
    out.push_back({});
    return out;
  }
  if (dst.size() == 0) return out;  // no maps from a nonempty source
  std::vector<int> map(static_cast<std::size_t>(src.size()), -1);
  std::size_t nodes = 0;
  std::function<void(int)> rec = [&](int x) {
    if (x == src.size()) {
      if (out.size() >= cap) fail_resource("hom cap", cap, out.size() + 1);
      out.push_back(map);
      return;
    }
    for (int v = 0; v < dst.size(); ++v) {
      if (++nodes > cap * 64) fail_resource("hom cap", cap * 64, nodes);
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (src.leq(y, x) && !dst.leq(map[static_cast<std::size_t>(y)], v)) ok = false;
        if (src.leq(x, y) && !dst.leq(v, map[static_cast<std::size_t>(y)])) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(x)] = v;
      rec(x + 1);
      map[static_cast<std::size_t>(x)] = -1;
    }
  };
  rec(0);
  return out;
}

namespace {

struct IsoProfile {
  int up, down, updeg, downdeg;
  bool operator==(const IsoProfile& o) const {
    return up == o.up && down == o.down && updeg == o.updeg && downdeg == o.downdeg;
  }
};

std::vector<IsoProfile> profiles(const Poset& p) {
  auto cov = p.covers();
  std::vector<int> updeg(static_cast<std::size_t>(p.size()), 0), downdeg(static_cast<std::size_t>(p.size()), 0);
  for (auto [a, b] : cov) {
    updeg[static_cast<std::size_t>(a)]++;
    downdeg[static_cast<std::size_t>(b)]++;
  }
  std::vector<IsoProfile> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x)
    out.push_back({p.up_row(x).count(), p.down_row(x).count(), updeg[static_cast<std::size_t>(x)],
                   downdeg[static_cast<std::size_t>(x)]});
  return out;
}

}  // namespace

bool posets_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  int n = a.size();
  if (n == 0) return true;
  auto pa = profiles(a), pb = profiles(b);
  {
    auto key = [](const IsoProfile& p) {
      return (static_cast<long long>(p.up) << 48) | (static_cast<long long>(p.down) << 32) |
             (static_cast<long long>(p.updeg) << 16) | p.downdeg;
    };
    std::vector<long long> ka, kb;
    for (auto& p : pa) ka.push_back(key(p));
    for (auto& p : pb) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return false;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || !(pa[static_cast<std::size_t>(x)] == pb[static_cast<std::size_t>(v)])) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (a.leq(y, x) != b.leq(map[static_cast<std::size_t>(y)], v)) ok = false;
        if (a.leq(x, y) != b.leq(v, map[static_cast<std::size_t>(y)])) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(x)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (rec(x + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
      map[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace godel
