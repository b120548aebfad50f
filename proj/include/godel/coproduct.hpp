#pragma once

#include "godel/chainspace.hpp"
#include "godel/core.hpp"
#include "godel/lattice.hpp"
#include "godel/poset.hpp"

namespace godel {

/// Cartesian product of posets with componentwise order and mixed-radix
/// tuple addressing. The empty product is the one-point poset.
struct ProductSpace {
  PosetPtr poset;
  std::vector<PosetPtr> factors;
  std::vector<long long> strides;

  int coord(int element, std::size_t i) const {
    return static_cast<int>((element / strides[i]) % factors[i]->size());
  }
  int tuple_index(const std::vector<int>& coords) const;
};

ProductSpace product_poset(const std::vector<Poset>& factors);

/// Chains of the product whose projections are all upsets of their factors;
/// the product in the category of finite Esakia root systems.
struct TensorSpace {
  ProductSpace prod;
  ChainPoset space;  // variant tensor
};

/// Computed by filtering cc(product) when the chain count fits the cap, by
/// the direct admissible-chain generator otherwise; both produce the same
/// canonical list (cross-checked in tests).
TensorSpace tensor(const std::vector<Poset>& factors, const RunConfig& cfg);

/// p_i(C) = pi_i(least C); a p-morphism onto factor i.
PMorph tensor_projection(const TensorSpace& t, int i);

struct ProductCertificate {
  bool mediating_in_space = false;
  bool projections_commute = false;
  std::size_t p_morphism_count = 0;
  bool unique = false;
  bool ok = false;
  std::vector<int> mediating;  // chain index per element of Z
};

/// Builds g(z) = {(f_i(w))_i | w in up(z)}, checks it lands in the space with
/// p_i o g = f_i, and verifies uniqueness by enumeration under the cap.
/// fs[i] maps Z into factor i and must be a p-morphism.
ProductCertificate verify_product_universal(const TensorSpace& t, const Poset& z,
                                            const std::vector<std::vector<int>>& fs,
                                            const RunConfig& cfg);

struct Coproduct {
  TensorSpace space;
  UpsetAlgebra algebra;
  std::vector<LatticeHom> injections;  // heyting flavor
  int depth_bound = -1;                // set by coproduct_gan
};

/// Coproduct of Godel algebras: the upset algebra of the tensor of the duals;
/// injection i sends a to box(pi_i^{-1}[sigma_i(a)]).
Coproduct coproduct_godel(const std::vector<HeytingAlgebra>& gs, const RunConfig& cfg);

/// 1 + sum (d_i - 1); precondition error on a depth-0 (trivial) factor.
int depth_of_coproduct(const std::vector<int>& ds);

struct DepthCertificate {
  int formula = 0;
  int computed = 0;
  bool ok = false;
};

DepthCertificate depth_check(const std::vector<HeytingAlgebra>& gs, const RunConfig& cfg);

/// The chain C_1 u ... u C_n of the depth witness construction. ws picks one
/// maximal element per factor; zs lists (factor, element) pairs in the order
/// the construction consumes them (distinct factors, z <= w in each). The
/// result lies in the tensor space and has size 1 + sum (d(z) - 1).
Chain witness_chain(const ProductSpace& prod, const std::vector<int>& ws,
                    const std::vector<std::pair<int, int>>& zs);

/// Coproduct in GA_n: the upset algebra of the depth-n part of the tensor.
Coproduct coproduct_gan(const std::vector<HeytingAlgebra>& gs, int n, const RunConfig& cfg);

/// Whether the GA and GA_n coproducts are isomorphic, decided structurally
/// (poset isomorphism between the tensor space and its depth-n part).
bool gan_coincidence(const std::vector<HeytingAlgebra>& gs, int n, const RunConfig& cfg);

}  // namespace godel
