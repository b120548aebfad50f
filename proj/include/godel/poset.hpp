#pragma once

#include "godel/core.hpp"

#include <memory>
#include <utility>

namespace godel {

/// A nonempty chain of a poset: strictly increasing element indices,
/// pairwise comparable in the parent order. Sorting by index (not by the
/// parent order) gives the canonical dedup key.
struct Chain {
  std::vector<int> elems;

  bool operator==(const Chain& o) const { return elems == o.elems; }
  bool operator<(const Chain& o) const { return elems < o.elems; }  // lexicographic
  int size() const { return static_cast<int>(elems.size()); }
};

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

/// Finite poset over dense indices 0..size-1. Immutable after construction;
/// safe to share across threads.
class Poset {
public:
  Poset() = default;

  /// From a full relation table (row-major size*size). Checks reflexivity,
  /// antisymmetry, transitivity.
  static Poset from_leq(int n, const std::vector<bool>& leq,
                        std::vector<std::string> labels = {});

  /// From cover pairs (i, j) meaning i is covered by j; leq is the
  /// reflexive-transitive closure. Rejects closures violating antisymmetry.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> labels = {});

  // Built-in shapes.
  static Poset empty() { return Poset(); }
  static Poset point() { return chain(1); }
  static Poset chain(int k);
  static Poset antichain(int k);
  static Poset diamond();  // 2x2: bot < a, b < top
  static Poset cube(int k);  // k-fold product of 2-chains; element = k-bit mask

  int size() const { return n_; }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  const Bits& up_row(int x) const { return up_[x]; }
  const Bits& down_row(int x) const { return down_[x]; }

  /// {x | exists y in A with y <= x}; idempotent, monotone in A.
  Bits up_set(const Bits& a) const;
  /// {x | exists y in A with x <= y}.
  Bits down_set(const Bits& a) const;

  bool is_upset(const Bits& a) const;
  bool is_downset(const Bits& a) const;

  Bits maximal_elements() const;
  Bits minimal_elements() const;

  /// Every principal upset is a chain.
  bool is_root_system() const { return root_system_; }

  /// d(x) = |up(x)|; requires a root system.
  int depth(int x) const;
  /// max over elements, 0 for the empty poset; requires a root system.
  int depth_of() const;

  /// Induced subposet on the kept elements; kept_out (optional) receives the
  /// original indices in ascending order.
  Poset restrict(const Bits& keep, std::vector<int>* kept_out = nullptr) const;

  /// Induced subposet on {y | d(y) <= n}; an upset of this poset.
  Poset restrict_to_depth(int n, std::vector<int>* kept_out = nullptr) const;

  /// Cover pairs (i, j), i covered by j, sorted.
  std::vector<std::pair<int, int>> covers() const;

  std::string label(int x) const;
  bool has_labels() const { return !labels_.empty(); }
  Poset with_labels(std::vector<std::string> labels) const;

  static Poset disjoint_union(const Poset& a, const Poset& b);

private:
  Poset(int n, std::vector<Bits> up, std::vector<std::string> labels);
  void validate() const;

  int n_ = 0;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::string> labels_;
  bool root_system_ = true;
};

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

/// Checks the Chain invariants against p (nonempty, strictly increasing
/// indices in range, pairwise comparable).
void validate_chain(const Poset& p, const Chain& c);

Bits chain_mask(const Poset& p, const Chain& c);
Chain chain_from_mask(const Poset& p, const Bits& mask);

/// Least element of the chain under the parent order (the map m), and the
/// greatest.
int chain_least(const Poset& p, const Chain& c);
int chain_greatest(const Poset& p, const Chain& c);

/// All nonempty chains in canonical form, lexicographically ordered on the
/// element lists. Exceeding the cap raises a resource error naming it.
std::vector<Chain> enumerate_chains(const Poset& p, std::size_t chain_cap);

// ---------------------------------------------------------------------------
// Maps between posets
// ---------------------------------------------------------------------------

/// Total map between posets; map[x] is the image of x.
struct PMorph {
  PosetPtr source;
  PosetPtr target;
  std::vector<int> map;
};

PMorph make_map(PosetPtr source, PosetPtr target, std::vector<int> map);

bool is_monotone(const PMorph& f);
/// Order-preserving with f[up(x)] = up(f(x)) for every x.
bool is_p_morphism(const PMorph& f);

Bits image_mask(const PMorph& f, const Bits& a);

/// All monotone maps src -> dst, lexicographic on the map vector.
std::vector<std::vector<int>> enumerate_monotone_maps(const Poset& src, const Poset& dst,
                                                      std::size_t cap);

/// Brute-force isomorphism test with degree-profile pruning.
bool posets_isomorphic(const Poset& a, const Poset& b);

}  // namespace godel
