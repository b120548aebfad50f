#pragma once

#include "godel/core.hpp"
#include "godel/poset.hpp"

#include <unordered_map>

namespace godel {

/// Finite bounded distributive lattice as operation tables.
struct DistLattice {
  int size = 0;
  std::vector<int> meet;  // row-major size*size
  std::vector<int> join;
  int bot = 0, top = 0;
  std::vector<std::string> labels;  // optional

  int meet_of(int a, int b) const { return meet[static_cast<std::size_t>(a) * size + b]; }
  int join_of(int a, int b) const { return join[static_cast<std::size_t>(a) * size + b]; }
  bool leq(int a, int b) const { return meet_of(a, b) == a; }
};

/// Validates the lattice axioms, bounds, and (optionally) distributivity.
/// full=false skips the cubic sweeps; used for large internally constructed
/// tables that are correct by set-algebra construction.
DistLattice make_dist_lattice(int size, std::vector<int> meet, std::vector<int> join,
                              bool full_check = true);

struct HeytingAlgebra {
  DistLattice base;
  std::vector<int> impl;  // row-major
  bool godel = false;

  int size() const { return base.size; }
  int impl_of(int a, int b) const { return impl[static_cast<std::size_t>(a) * base.size + b]; }
};

/// The unique Heyting implication on a finite distributive lattice:
/// a -> b = max{c | a /\ c <= b}. Sets the godel flag from prelinearity.
HeytingAlgebra heyting_from_lattice(const DistLattice& l);

/// residuation: a /\ b <= c iff a <= b -> c, all triples.
bool residuation_ok(const HeytingAlgebra& h);
/// (a -> b) \/ (b -> a) = top, all pairs.
bool prelinearity_holds(const HeytingAlgebra& h);
/// a <- b = min{c | a <= b \/ c} exists for every pair (always, finitely);
/// checks co-residuation of the computed table.
bool co_residuation_ok(const DistLattice& l);

enum class HomFlavor { lattice, heyting };

struct LatticeHom {
  HomFlavor flavor = HomFlavor::lattice;
  std::vector<int> map;
};

bool is_lattice_hom(const std::vector<int>& map, const DistLattice& src, const DistLattice& dst);
bool is_heyting_hom(const std::vector<int>& map, const HeytingAlgebra& src,
                    const HeytingAlgebra& dst);

/// All bound-preserving homs src -> dst of the given flavor, lexicographic on
/// the map vector. `pinned` (optional, -1 = free) fixes part of the map.
std::vector<LatticeHom> enumerate_homs(const DistLattice& src, const DistLattice& dst,
                                       HomFlavor flavor, std::size_t hom_cap,
                                       const HeytingAlgebra* src_heyting = nullptr,
                                       const HeytingAlgebra* dst_heyting = nullptr,
                                       const std::vector<int>* pinned = nullptr);

/// Brute-force lattice isomorphism with join-irreducible-profile pruning.
bool lattices_isomorphic(const DistLattice& a, const DistLattice& b);

// ---------------------------------------------------------------------------
// Upset algebras (the dual algebra X^* of a finite poset)
// ---------------------------------------------------------------------------

/// HeytingAlgebra together with its concrete upsets: elements[i] is the upset
/// realizing algebra element i. Canonical element order is numeric on masks,
/// so bot (empty) is element 0 and top (full) is the last.
struct UpsetAlgebra {
  HeytingAlgebra alg;
  std::vector<Bits> elements;

  int size() const { return alg.size(); }
  int index_of(const Bits& u) const;  // validation error if absent

private:
  friend UpsetAlgebra upset_lattice(const Poset&, const RunConfig&);
  std::unordered_map<Bits, int, BitsHash> index_;
};

/// All upsets of p, numerically sorted masks. Resource error past the cap.
std::vector<Bits> enumerate_upsets(const Poset& p, std::size_t cap,
                                   const char* cap_name = "upset cap");

/// The dual algebra: meet/join are intersection/union, implication is
/// U -> V = X \ down(U \ V), godel flag = is_root_system(p).
UpsetAlgebra upset_lattice(const Poset& p, const RunConfig& cfg);

/// Number of upsets of a root system (forest product over trees).
unsigned __int128 count_upsets_forest(const Poset& p);

// ---------------------------------------------------------------------------
// Birkhoff duality
// ---------------------------------------------------------------------------

struct BirkhoffDual {
  Poset poset;                     // join-irreducibles, j <= k iff k <=_L j
  std::vector<int> irreducibles;   // poset index -> element of L
};

/// Requires a distributive table (precondition error otherwise).
BirkhoffDual dual_poset(const DistLattice& l, bool check_distributive = true);

struct SigmaIso {
  BirkhoffDual dual;
  UpsetAlgebra algebra;  // upset_lattice(dual.poset)
  LatticeHom hom;        // a |-> {j join-irreducible | j <= a}
};

/// sigma_L : L -> (L_*)^*; an isomorphism for distributive L.
SigmaIso sigma(const DistLattice& l, const RunConfig& cfg);

// ---------------------------------------------------------------------------
// Bounded-depth terms
// ---------------------------------------------------------------------------

/// bd_0 = bot, bd_n = x_n \/ (x_n -> bd_{n-1}); xs lists x_1..x_n.
int bd_value(const HeytingAlgebra& h, const std::vector<int>& xs);

/// bd_n = top under every assignment of n variables.
bool is_in_gan(const HeytingAlgebra& h, int n);

/// Depth of the dual root system; 0 exactly for the trivial algebra.
int algebra_depth(const HeytingAlgebra& h);

}  // namespace godel
