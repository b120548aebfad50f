#include "godel/lattice.hpp"

#include <algorithm>
#include <functional>

namespace godel {

namespace {

void check_tables(int n, const std::vector<int>& meet, const std::vector<int>& join) {
  if (n < 1) fail_validation("lattice must be nonempty");
  if (meet.size() != static_cast<std::size_t>(n) * n || join.size() != static_cast<std::size_t>(n) * n)
    fail_dimension("operation table size mismatch");
  for (int v : meet)
    if (v < 0 || v >= n) fail_validation("meet table entry out of range");
  for (int v : join)
    if (v < 0 || v >= n) fail_validation("join table entry out of range");
}

}  // namespace

DistLattice make_dist_lattice(int size, std::vector<int> meet, std::vector<int> join,
                              bool full_check) {
  check_tables(size, meet, join);
  DistLattice l;
  l.size = size;
  l.meet = std::move(meet);
  l.join = std::move(join);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (l.meet_of(a, b) != l.meet_of(b, a) || l.join_of(a, b) != l.join_of(b, a))
        fail_validation("commutativity violated");
      if (l.meet_of(a, l.join_of(a, b)) != a || l.join_of(a, l.meet_of(a, b)) != a)
        fail_validation("absorption violated");
    }
  for (int a = 0; a < size; ++a)
    if (l.meet_of(a, a) != a || l.join_of(a, a) != a) fail_validation("idempotence violated");
  if (full_check) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        for (int c = 0; c < size; ++c) {
          if (l.meet_of(a, l.meet_of(b, c)) != l.meet_of(l.meet_of(a, b), c) ||
              l.join_of(a, l.join_of(b, c)) != l.join_of(l.join_of(a, b), c))
            fail_validation("associativity violated");
          if (l.meet_of(a, l.join_of(b, c)) != l.join_of(l.meet_of(a, b), l.meet_of(a, c)))
            fail_validation("distributivity violated");
        }
  }
  // bounds: the meet/join of everything
  int bot = 0, top = 0;
  for (int a = 1; a < size; ++a) {
    bot = l.meet_of(bot, a);
    top = l.join_of(top, a);
  }
  for (int a = 0; a < size; ++a)
    if (l.meet_of(bot, a) != bot || l.join_of(top, a) != top)
      fail_validation("bounds violated");
  l.bot = bot;
  l.top = top;
  return l;
}

HeytingAlgebra heyting_from_lattice(const DistLattice& l) {
  HeytingAlgebra h;
  h.base = l;
  h.impl.assign(static_cast<std::size_t>(l.size) * l.size, l.top);
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      int r = l.bot;
      for (int c = 0; c < l.size; ++c)
        if (l.leq(l.meet_of(a, c), b)) r = l.join_of(r, c);
      h.impl[static_cast<std::size_t>(a) * l.size + b] = r;
    }
  if (!residuation_ok(h)) fail_validation("not a Heyting algebra", "residuation fails");
  h.godel = prelinearity_holds(h);
  return h;
}

bool residuation_ok(const HeytingAlgebra& h) {
  const DistLattice& l = h.base;
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      for (int c = 0; c < l.size; ++c)
        if (l.leq(l.meet_of(a, b), c) != l.leq(a, h.impl_of(b, c))) return false;
  return true;
}

bool prelinearity_holds(const HeytingAlgebra& h) {
  const DistLattice& l = h.base;
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      if (l.join_of(h.impl_of(a, b), h.impl_of(b, a)) != l.top) return false;
  return true;
}

bool co_residuation_ok(const DistLattice& l) {
  // a <- b = min{c | a <= b \/ c}
  std::vector<int> coimpl(static_cast<std::size_t>(l.size) * l.size, l.bot);
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      int r = l.top;
      for (int c = 0; c < l.size; ++c)
        if (l.leq(a, l.join_of(b, c))) r = l.meet_of(r, c);
      coimpl[static_cast<std::size_t>(a) * l.size + b] = r;
    }
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      for (int c = 0; c < l.size; ++c)
        if (l.leq(coimpl[static_cast<std::size_t>(a) * l.size + b], c) != l.leq(a, l.join_of(b, c)))
          return false;
  return true;
}

bool is_lattice_hom(const std::vector<int>& map, const DistLattice& src, const DistLattice& dst) {
  if (static_cast<int>(map.size()) != src.size) return false;
  if (map[static_cast<std::size_t>(src.bot)] != dst.bot || map[static_cast<std::size_t>(src.top)] != dst.top) return false;
  for (int a = 0; a < src.size; ++a)
    for (int b = 0; b < src.size; ++b) {
      if (map[static_cast<std::size_t>(src.meet_of(a, b))] != dst.meet_of(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) return false;
      if (map[static_cast<std::size_t>(src.join_of(a, b))] != dst.join_of(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) return false;
    }
  return true;
}

bool is_heyting_hom(const std::vector<int>& map, const HeytingAlgebra& src,
                    const HeytingAlgebra& dst) {
  if (!is_lattice_hom(map, src.base, dst.base)) return false;
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (map[static_cast<std::size_t>(src.impl_of(a, b))] != dst.impl_of(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) return false;
  return true;
}

std::vector<LatticeHom> enumerate_homs(const DistLattice& src, const DistLattice& dst,
                                       HomFlavor flavor, std::size_t hom_cap,
                                       const HeytingAlgebra* src_heyting,
                                       const HeytingAlgebra* dst_heyting,
                                       const std::vector<int>* pinned) {
  if (flavor == HomFlavor::heyting && (!src_heyting || !dst_heyting))
    fail_precondition("heyting flavor needs implication tables");
  int n = src.size;
  // pairs whose operands and results all lie within 0..k once k is assigned
  std::vector<std::vector<std::pair<int, int>>> due(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int last = std::max({a, b, src.meet_of(a, b), src.join_of(a, b)});
      if (flavor == HomFlavor::heyting)
        last = std::max({last, src_heyting->impl_of(a, b), src_heyting->impl_of(b, a)});
      due[static_cast<std::size_t>(last)].emplace_back(a, b);
    }
  std::vector<LatticeHom> out;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::size_t nodes = 0;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (out.size() >= hom_cap) fail_resource("hom cap", hom_cap, out.size() + 1);
      out.push_back(LatticeHom{flavor, map});
      return;
    }
    for (int v = 0; v < dst.size; ++v) {
      if (++nodes > hom_cap * 256) fail_resource("hom cap", hom_cap * 256, nodes);
      if (pinned && (*pinned)[static_cast<std::size_t>(k)] >= 0 && (*pinned)[static_cast<std::size_t>(k)] != v) continue;
      if (k == src.bot && v != dst.bot) continue;
      if (k == src.top && v != dst.top) continue;
      map[static_cast<std::size_t>(k)] = v;
      bool ok = true;
      for (auto [a, b] : due[static_cast<std::size_t>(k)]) {
        if (map[static_cast<std::size_t>(src.meet_of(a, b))] != dst.meet_of(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) ||
            map[static_cast<std::size_t>(src.join_of(a, b))] != dst.join_of(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) {
          ok = false;
          break;
        }
        if (flavor == HomFlavor::heyting &&
            (map[static_cast<std::size_t>(src_heyting->impl_of(a, b))] != dst_heyting->impl_of(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) ||
             map[static_cast<std::size_t>(src_heyting->impl_of(b, a))] != dst_heyting->impl_of(map[static_cast<std::size_t>(b)], map[static_cast<std::size_t>(a)]))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(k + 1);
      map[static_cast<std::size_t>(k)] = -1;
    }
  };
  rec(0);
  return out;
}

namespace {

std::vector<int> lower_covers(const DistLattice& l, int a) {
  std::vector<int> strictly_below;
  for (int b = 0; b < l.size; ++b)
    if (b != a && l.leq(b, a)) strictly_below.push_back(b);
  std::vector<int> covers;
  for (int b : strictly_below) {
    bool maximal = true;
    for (int c : strictly_below)
      if (c != b && l.leq(b, c)) maximal = false;
    if (maximal) covers.push_back(b);
  }
  return covers;
}

std::vector<int> join_irreducibles(const DistLattice& l) {
  std::vector<int> out;
  for (int a = 0; a < l.size; ++a) {
    if (a == l.bot) continue;
    if (lower_covers(l, a).size() == 1) out.push_back(a);
  }
  return out;
}

}  // namespace

bool lattices_isomorphic(const DistLattice& a, const DistLattice& b) {
  if (a.size != b.size) return false;
  int n = a.size;
  if (n == 0) return true;
  auto ja = join_irreducibles(a), jb = join_irreducibles(b);
  if (ja.size() != jb.size()) return false;
  // profile: (join-irreducible?, |down|, |up|)
  auto profile = [&](const DistLattice& l, const std::vector<int>& ji, int x) {
    int down = 0, up = 0;
    for (int y = 0; y < l.size; ++y) {
      if (l.leq(y, x)) ++down;
      if (l.leq(x, y)) ++up;
    }
    bool is_ji = std::find(ji.begin(), ji.end(), x) != ji.end();
    return (static_cast<long long>(is_ji) << 40) | (static_cast<long long>(down) << 20) | up;
  };
  std::vector<long long> pa(static_cast<std::size_t>(n)), pb(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) pa[static_cast<std::size_t>(x)] = profile(a, ja, x);
  for (int x = 0; x < n; ++x) pb[static_cast<std::size_t>(x)] = profile(b, jb, x);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // An order isomorphism between finite lattices is a lattice isomorphism;
  // search order bijections with profile pruning, verify the winner fully.
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == n) return is_lattice_hom(map, a, b);
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || pa[static_cast<std::size_t>(x)] != pb[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (a.leq(x, y) != b.leq(v, map[static_cast<std::size_t>(y)])) ok = false;
        if (a.leq(y, x) != b.leq(map[static_cast<std::size_t>(y)], v)) ok = false;
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

// ---------------------------------------------------------------------------

int UpsetAlgebra::index_of(const Bits& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) fail_validation("not an upset of the carrier");
  return it->second;
}

std::vector<Bits> enumerate_upsets(const Poset& p, std::size_t cap, const char* cap_name) {
  std::vector<Bits> out;
  int n = p.size();
  // include/exclude one element at a time; including x forces up(x),
  // excluding forces out down(x)
  std::function<void(int, Bits, Bits)> rec = [&](int x, Bits in, Bits outb) {
    if (x == n) {
      if (out.size() >= cap) fail_resource(cap_name, cap, out.size() + 1);
      out.push_back(in);
      return;
    }
    if (in.test(x)) {
      rec(x + 1, in, outb);
      return;
    }
    if (outb.test(x)) {
      rec(x + 1, in, outb);
      return;
    }
    rec(x + 1, in, outb | p.down_row(x));
    rec(x + 1, in | p.up_row(x), outb);
  };
  rec(0, Bits(n), Bits(n));
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) { return a.numeric_less(b); });
  return out;
}

UpsetAlgebra upset_lattice(const Poset& p, const RunConfig& cfg) {
  UpsetAlgebra ua;
  ua.elements = enumerate_upsets(p, cfg.algebra_cap, "algebra cap");
  int n = static_cast<int>(ua.elements.size());
  for (int i = 0; i < n; ++i) ua.index_[ua.elements[static_cast<std::size_t>(i)]] = i;
  DistLattice l;
  l.size = n;
  l.meet.assign(static_cast<std::size_t>(n) * n, 0);
  l.join.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int m = ua.index_of(ua.elements[static_cast<std::size_t>(i)] & ua.elements[static_cast<std::size_t>(j)]);
      int jn = ua.index_of(ua.elements[static_cast<std::size_t>(i)] | ua.elements[static_cast<std::size_t>(j)]);
      l.meet[static_cast<std::size_t>(i) * n + j] = l.meet[static_cast<std::size_t>(j) * n + i] = m;
      l.join[static_cast<std::size_t>(i) * n + j] = l.join[static_cast<std::size_t>(j) * n + i] = jn;
    }
  l.bot = ua.index_of(Bits(p.size()));
  l.top = ua.index_of(Bits::full(p.size()));
  ua.alg.base = make_dist_lattice(n, std::move(l.meet), std::move(l.join), n <= 512);
  if (ua.alg.base.bot != l.bot || ua.alg.base.top != l.top)
    fail_validation("bounds violated");
  ua.alg.impl.assign(static_cast<std::size_t>(n) * n, 0);
  Bits full = Bits::full(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Bits diff = ua.elements[static_cast<std::size_t>(i)] - ua.elements[static_cast<std::size_t>(j)];
      ua.alg.impl[static_cast<std::size_t>(i) * n + j] = ua.index_of(full - p.down_set(diff));
    }
  ua.alg.godel = p.is_root_system();
  return ua;
}

unsigned __int128 count_upsets_forest(const Poset& p) {
  if (!p.is_root_system()) fail_precondition("forest count requires a root system");
  int n = p.size();
  // u(x) = 1 + product of u over the covers below x, within the tree of x
  std::vector<unsigned __int128> u(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> below(static_cast<std::size_t>(n));
  for (auto [a, b] : p.covers()) below[static_cast<std::size_t>(b)].push_back(a);
  std::function<unsigned __int128(int)> eval = [&](int x) -> unsigned __int128 {
    if (u[static_cast<std::size_t>(x)] != 0) return u[static_cast<std::size_t>(x)];
    unsigned __int128 prod = 1;
    for (int c : below[static_cast<std::size_t>(x)]) {
      unsigned __int128 v = eval(c);
      if (prod != 0 && v > (~static_cast<unsigned __int128>(0)) / prod)
        fail_resource("upset count overflow", 0, 0);
      prod *= v;
    }
    return u[static_cast<std::size_t>(x)] = prod + 1;
  };
  unsigned __int128 total = 1;
  Bits maxes = p.maximal_elements();
  maxes.for_each([&](int r) {
    unsigned __int128 v = eval(r);
    if (total != 0 && v > (~static_cast<unsigned __int128>(0)) / total)
      fail_resource("upset count overflow", 0, 0);
    total *= v;
  });
  return total;
}

// ---------------------------------------------------------------------------

namespace {

bool is_distributive(const DistLattice& l) {
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      for (int c = 0; c < l.size; ++c)
        if (l.meet_of(a, l.join_of(b, c)) != l.join_of(l.meet_of(a, b), l.meet_of(a, c)))
          return false;
  return true;
}

}  // namespace

BirkhoffDual dual_poset(const DistLattice& l, bool check_distributive) {
  if (check_distributive && !is_distributive(l))
    fail_precondition("lattice not distributive");
  BirkhoffDual d;
  d.irreducibles = join_irreducibles(l);
  int m = static_cast<int>(d.irreducibles.size());
  std::vector<bool> leq(static_cast<std::size_t>(m) * m, false);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      // filter inclusion: up(j_i) <= up(j_k) iff j_k <=_L j_i
      leq[static_cast<std::size_t>(i) * m + j] = l.leq(d.irreducibles[static_cast<std::size_t>(j)], d.irreducibles[static_cast<std::size_t>(i)]);
  std::vector<std::string> labels;
  if (!l.labels.empty())
    for (int a : d.irreducibles) labels.push_back(l.labels[static_cast<std::size_t>(a)]);
  d.poset = Poset::from_leq(m, leq, std::move(labels));
  return d;
}

SigmaIso sigma(const DistLattice& l, const RunConfig& cfg) {
  SigmaIso s;
  s.dual = dual_poset(l);
  s.algebra = upset_lattice(s.dual.poset, cfg);
  s.hom.flavor = HomFlavor::lattice;
  s.hom.map.resize(static_cast<std::size_t>(l.size));
  int m = s.dual.poset.size();
  for (int a = 0; a < l.size; ++a) {
    Bits u(m);
    for (int i = 0; i < m; ++i)
      if (l.leq(s.dual.irreducibles[static_cast<std::size_t>(i)], a)) u.set(i);
    s.hom.map[static_cast<std::size_t>(a)] = s.algebra.index_of(u);
  }
  return s;
}

// ---------------------------------------------------------------------------

int bd_value(const HeytingAlgebra& h, const std::vector<int>& xs) {
  if (!h.godel) fail_precondition("bd terms are evaluated in Godel algebras");
  for (int x : xs)
    if (x < 0 || x >= h.size()) fail_dimension("assignment value out of range");
  int bd = h.base.bot;
  for (int x : xs) bd = h.base.join_of(x, h.impl_of(x, bd));
  return bd;
}

bool is_in_gan(const HeytingAlgebra& h, int n) {
  if (n < 0) fail_dimension("negative depth bound");
  std::vector<int> xs(static_cast<std::size_t>(n), 0);
  while (true) {
    if (bd_value(h, xs) != h.base.top) return false;
    int i = 0;
    while (i < n && ++xs[static_cast<std::size_t>(i)] == h.size()) xs[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return true;
  }
}

int algebra_depth(const HeytingAlgebra& h) {
  return dual_poset(h.base, false).poset.depth_of();
}

}  // namespace godel
