#pragma once

#include "godel/chainspace.hpp"
#include "godel/core.hpp"
#include "godel/lattice.hpp"

#include <optional>

namespace godel {

/// A free Godel (or GA_n) algebra, materialized as the upset algebra of its
/// dual chain space. The operation tables are only built when the upset count
/// fits the algebra cap; the exact size is always available.
struct FreeAlgebraResult {
  ChainPoset dual;
  std::vector<Bits> unit;  // e(a) per lattice element, or r(s) per generator
  bool over_set = false;
  unsigned __int128 algebra_size = 0;
  std::optional<UpsetAlgebra> algebra;
  std::optional<LatticeHom> unit_hom;  // unit as a map into the algebra
};

/// Number of upsets of the chain order, via the parent-chain forest
/// (the cover above a chain is the chain minus its least element).
unsigned __int128 count_upsets_of_chain_order(const ChainPoset& cp);

/// Free Godel algebra over a distributive lattice: dual = cc(dual_poset(L)),
/// e(a) = box(sigma(a)).
FreeAlgebraResult free_godel_over_lattice(const DistLattice& l, const RunConfig& cfg);

/// Free Godel algebra over k generators: dual = cc(2^k), r(s) = box(U_s).
FreeAlgebraResult free_godel(int k, const RunConfig& cfg);

/// GA_n analogues: dual = cc_n, units cut down to the depth-n carrier.
FreeAlgebraResult free_gan_over_lattice(const DistLattice& l, int n, const RunConfig& cfg);
FreeAlgebraResult free_gan(int k, int n, const RunConfig& cfg);

struct FreeCertificate {
  std::string route;  // "direct" or "dual"
  std::size_t hom_count = 0;
  std::vector<std::size_t> extensions;  // one count per lattice hom
  bool ok = false;                      // every hom extends exactly once
};

/// For every lattice hom f : L -> H, counts the Heyting homs g with
/// g o e = f; the universal property demands exactly one each. Uses the dual
/// search (p-morphisms H_* -> cc(L_*)) when the algebra side is larger;
/// force_route ("direct" / "dual") overrides the cost model.
FreeCertificate certify_free(const FreeAlgebraResult& f, const DistLattice& l,
                             const HeytingAlgebra& h, const RunConfig& cfg,
                             const char* force_route = nullptr);

}  // namespace godel
