#pragma once

#include "godel/chainspace.hpp"
#include "godel/core.hpp"
#include "godel/poset.hpp"

namespace godel {

/// Recursive generalization of up-closure to finite families:
/// twohead({}) = X, twohead({A_1..A_n}) = union_i up(twohead(family minus A_i) /\ A_i).
/// Memoized over subfamilies; family size capped at 6.
Bits twohead_up(const Poset& x, const std::vector<Bits>& as);

/// The chain characterization: x belongs iff some chain below x meets every
/// A_i. Computed by chain enumeration; the independent route for twohead_up.
Bits twohead_up_by_chains(const Poset& x, const std::vector<Bits>& as, const RunConfig& cfg);

struct TwoheadCertificate {
  std::size_t families = 0;
  std::size_t mismatches = 0;
  bool ok = false;
};

/// Exhaustive equivalence sweep over all families of at most max_family_size
/// subsets of x (resource-guarded through cfg).
TwoheadCertificate twohead_check(const Poset& x, int max_family_size, const RunConfig& cfg);

/// The up-closure of a basic set, by the subfamily-union formula
///   union over I of box(V /\ twohead{W_i | i in I}) /\ intersection of
///   diamond W_j for j outside I.
/// Precondition: every W_i is contained in V.
Bits upset_of_basic(const ChainPoset& ccx, const Bits& v, const std::vector<Bits>& ws);

struct BasicUpsetCertificate {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  bool ok = false;
};

/// Compares upset_of_basic against the direct up-closure for all qualified
/// (V, W_1..W_n) with n <= max_family_size (exhaustive; resource-guarded).
BasicUpsetCertificate basic_upset_check(const Poset& x, int max_family_size,
                                        const RunConfig& cfg);

struct MaxCcIso {
  std::vector<int> chain_of;  // x -> index of the singleton chain {x}
  bool ok = false;            // bijection onto exactly the maximal chains
};

/// x |-> {x} is a bijection from X onto the maximal elements of cc(X).
MaxCcIso max_cc_iso(const ChainPoset& ccx);

struct UnravelResult {
  ChainPoset space;  // (CC(X), down-closed-subchain order); a forest
  PMorph to_base;    // M = greatest element map; a p-morphism
};

UnravelResult unravel(PosetPtr x, const RunConfig& cfg);

/// Every principal downset is a chain (the disjoint-union-of-trees shape).
bool is_forest(const Poset& p);

/// (CC(X), reverse inclusion): same chain list as cc(X), generally not a
/// root system.
ChainPoset nerve(PosetPtr x, const RunConfig& cfg);

/// A chain of the nerve: pairwise nested chains, listed by ascending index.
struct ChainOfChains {
  std::vector<int> members;
};

/// For every C1 in the collection and every chain C2 contained in C1, some
/// member C3 contained in C1 has the same least element as C2.
bool is_m_open(const ChainPoset& nerve_cp, const ChainOfChains& coc);

struct ZSpaceResult {
  ChainPoset nerve_cp;
  ChainPoset z;  // m-open nonempty chains of the nerve, reverse inclusion
};

ZSpaceResult z_space(PosetPtr x, const RunConfig& cfg);

struct ZIsoCertificate {
  int cc_size = 0;
  int z_size = 0;
  bool images_m_open = false;  // every up-closure of a chain is m-open
  bool bijective = false;
  bool order_iso = false;
  bool ok = false;
};

/// C |-> up-closure(C) as an order isomorphism (CC(X), canonical order) ->
/// (Z, reverse inclusion).
ZIsoCertificate z_iso_check(PosetPtr x, const RunConfig& cfg);

struct ImplicationCertificate {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  bool ok = false;
};

/// box U1 -> box U2 = box((X \ U1) u U2) over all pairs of upsets of X,
/// with -> the Heyting implication of the chain-space upset algebra.
ImplicationCertificate implication_box_formula_check(PosetPtr x, const RunConfig& cfg);

struct NerveUpsetCertificate {
  std::size_t nerve_upsets = 0;
  std::size_t box_unions = 0;
  bool boxes_are_upsets = false;
  bool ok = false;  // set equality of the two families
};

/// Upsets of the nerve are exactly the finite unions of box V, V a subset
/// of X (union closure computed as a fixpoint).
NerveUpsetCertificate nerve_upset_characterization_check(PosetPtr x, const RunConfig& cfg);

}  // namespace godel
