#pragma once

#include "godel/core.hpp"
#include "godel/poset.hpp"

#include <unordered_map>

namespace godel {

enum class ChainVariant { full, depth_bounded, tensor, nerve, unravel, zspace };

/// CC(X) (or a sub-collection) with an order over chain indices.
/// Variants full / depth_bounded / tensor carry the canonical order
/// (C1 <= C2 iff C2 is an up-closed subchain of C1); nerve and zspace carry
/// reverse inclusion; unravel carries the down-closed-subchain order.
/// Chain indices follow the deterministic enumeration order, so serialized
/// output is reproducible byte for byte.
class ChainPoset {
public:
  ChainPoset() = default;

  int size() const { return static_cast<int>(chains_.size()); }
  const Poset& base() const { return *base_; }
  PosetPtr base_ptr() const { return base_; }
  const std::vector<Chain>& chains() const { return chains_; }
  const Chain& chain(int i) const { return chains_[static_cast<std::size_t>(i)]; }
  const Bits& mask(int i) const { return masks_[static_cast<std::size_t>(i)]; }
  int least(int i) const { return least_[static_cast<std::size_t>(i)]; }
  int greatest(int i) const { return greatest_[static_cast<std::size_t>(i)]; }
  ChainVariant variant() const { return variant_; }
  int depth_bound() const { return depth_bound_; }

  /// -1 when the mask is not a chain of this collection.
  int index_of(const Bits& mask) const;

  /// The order relation, computed without the table.
  bool leq(int i, int j) const;

  /// The order as a Poset over chain indices; materialized on first use
  /// (resource error past the order cap). Safe under concurrent reads.
  const Poset& order() const;
  PosetPtr order_ptr() const;

  /// Depth of the space. For the canonical order this is the maximal chain
  /// size (depth of a chain equals its cardinality).
  int depth() const;

  /// box A = {C | C subset of A}; diamond A = {C | C meets A}. A is a subset
  /// of the base carrier.
  Bits box(const Bits& a) const;
  Bits diamond(const Bits& a) const;

  /// Up/down closure of a set of chains, computed through the order table.
  Bits up_closure(const Bits& set_of_chains) const;
  Bits down_closure(const Bits& set_of_chains) const;

  static ChainPoset make(PosetPtr base, std::vector<Chain> chains, ChainVariant variant,
                         const RunConfig& cfg, int depth_bound = -1);

private:
  void check_chain_set(const Bits& s) const {
    if (s.size() != size()) fail_dimension("mask size mismatch");
  }

  PosetPtr base_;
  std::vector<Chain> chains_;
  std::vector<Bits> masks_;
  std::vector<int> least_, greatest_;
  std::unordered_map<Bits, int, BitsHash> index_;
  ChainVariant variant_ = ChainVariant::full;
  int depth_bound_ = -1;
  std::size_t order_cap_ = 20'000;

  struct OrderCell;
  std::shared_ptr<OrderCell> order_cell_;
};

/// C1 <= C2 iff C2 = up(min C2) /\ C1 with min C2 in C1; agrees with the
/// definitional form (C2 subset of C1 and C2 an upset in C1).
bool leq_cc(const Poset& x, const Chain& c1, const Chain& c2);

/// All nonempty chains of X with the canonical order; asserts the
/// duplicate-free and upset-closure invariants.
ChainPoset cc(PosetPtr x, const RunConfig& cfg);

/// Chains of size <= n; the induced sub-root-system (equals
/// restrict_to_depth of the full order).
ChainPoset cc_n(PosetPtr x, int n, const RunConfig& cfg);

/// Keep the chains of size <= n (variant depth_bounded).
ChainPoset restrict_chains_to_depth(const ChainPoset& cp, int n, const RunConfig& cfg,
                                    std::vector<int>* kept_out = nullptr);

/// m^{-1}[U] for an upset U (must equal box U); precondition error otherwise.
Bits minv_up(const ChainPoset& cp, const Bits& u);
/// m^{-1}[D] for a downset D (must equal diamond D).
Bits minv_down(const ChainPoset& cp, const Bits& d);

/// m : chains -> base, sending a chain to its least element. Order preserving;
/// in general not a p-morphism.
PMorph least_map(const ChainPoset& cp);

/// The action of a monotone map f : X1 -> X2 on chains, C |-> f[C].
struct CcMap {
  std::vector<int> chain_map;  // index in cc1 -> index in cc2
  PMorph order_map;            // between the materialized orders
};
CcMap cc_map(const PMorph& f, const ChainPoset& cc1, const ChainPoset& cc2);

/// g(y) = f[up(y)] for monotone f : Y -> X with Y a root system; the unique
/// p-morphism with least o g = f. Returns the chain index per element of Y.
std::vector<int> universal_extension(const PMorph& f, const ChainPoset& ccx);

/// Counts p-morphisms h : Y -> target order with least(h(y)) = pinned_least[y],
/// up to `cap` search nodes.
std::size_t count_p_morphisms_with_least(const Poset& y, const ChainPoset& target,
                                         const std::vector<int>& pinned_least, std::size_t cap);

struct UniquenessCertificate {
  std::size_t count = 0;
  bool unique = false;
};

/// Verifies on demand that universal_extension is the unique factorization
/// (expensive; separate from the constructor).
UniquenessCertificate universal_uniqueness(const PMorph& f, const ChainPoset& ccx,
                                           std::size_t cap);

struct BoxDiamondCertificate {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  // the down-closure identity for box /\ diamond(U /\ D) without its
  // hypothesis U /\ D <= A: recorded, never asserted
  std::size_t unqualified_total = 0;
  std::size_t unqualified_equal = 0;
  bool ok = false;
};

/// The box/diamond laws over cc(x): distribution over intersection/union,
/// complementation, up/down-closedness, the down-closure identities, and the
/// least-map preimage characterizations. Exhaustive for small carriers,
/// seeded sampling (>= 500 cases) beyond that.
BoxDiamondCertificate box_diamond_check(PosetPtr x, const RunConfig& cfg);

}  // namespace godel
