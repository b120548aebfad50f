#pragma once

#include "godel/chainspace.hpp"
#include "godel/core.hpp"
#include "godel/lattice.hpp"
#include "godel/poset.hpp"

#include "json.hpp"

#include <optional>

namespace godel {

using Json = nlohmann::ordered_json;

// Poset text format: {"size": n, "covers": [[i,j],...]} with i covered by j;
// leq is the reflexive-transitive closure. Optional "labels".
Poset parse_poset_json(const Json& j);
Json poset_to_json(const Poset& p);

// Lattice text format: {"poset": <poset>} meaning its upset lattice, or
// explicit {"size": n, "meet": [[..]], "join": [[..]]}.
DistLattice parse_lattice_json(const Json& j, const RunConfig& cfg);
Json lattice_to_json(const DistLattice& l);

HeytingAlgebra parse_algebra_json(const Json& j, const RunConfig& cfg);

// ChainPoset serialization: {"base": <poset>, "chains": [[indices]...],
// "order": <poset over chain indices>}.
Json chainposet_to_json(const ChainPoset& cp);

// DOT export with stable node ordering; chain posets label nodes "{x1,...,xk}"
// through their order poset labels.
std::string poset_to_dot(const Poset& p, const std::string& name = "poset");

// Built-in structures: point, chain-K, antichain-K, d4, cube-K.
std::optional<Poset> builtin_poset(const std::string& name);
// trivial, chain-K (K-element chain algebra), boolean-K, upsets:<poset name>.
std::optional<HeytingAlgebra> builtin_algebra(const std::string& name, const RunConfig& cfg);

// Name or file path.
Poset load_poset(const std::string& arg);
DistLattice load_lattice(const std::string& arg, const RunConfig& cfg);
HeytingAlgebra load_algebra(const std::string& arg, const RunConfig& cfg);

}  // namespace godel
