#include "godel/io.hpp"

#include <fstream>

namespace godel {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail_validation("poset format", std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<std::string> optional_labels(const Json& j, int n) {
  if (!j.contains("labels")) return {};
  if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
    fail_validation("label table size mismatch");
  std::vector<std::string> labels;
  for (const auto& s : j["labels"]) labels.push_back(s.get<std::string>());
  return labels;
}

}  // namespace

Poset parse_poset_json(const Json& j) {
  if (!j.is_object()) fail_validation("poset format", "expected an object");
  int n = require_int(j, "size");
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) fail_validation("poset format", "'covers' must be an array");
    for (const auto& e : j["covers"]) {
      if (!e.is_array() || e.size() != 2) fail_validation("poset format", "cover must be a pair");
      covers.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Poset::from_covers(n, covers, optional_labels(j, n));
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["size"] = p.size();
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
  j["covers"] = std::move(covers);
  if (p.has_labels()) {
    Json labels = Json::array();
    for (int i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
    j["labels"] = std::move(labels);
  }
  return j;
}

DistLattice parse_lattice_json(const Json& j, const RunConfig& cfg) {
  if (!j.is_object()) fail_validation("lattice format", "expected an object");
  if (j.contains("poset")) return upset_lattice(parse_poset_json(j["poset"]), cfg).alg.base;
  int n = require_int(j, "size");
  auto table = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
      fail_validation("lattice format", std::string("bad table '") + key + "'");
    std::vector<int> t;
    for (const auto& row : j[key]) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        fail_validation("lattice format", std::string("bad table row in '") + key + "'");
      for (const auto& v : row) t.push_back(v.get<int>());
    }
    return t;
  };
  return make_dist_lattice(n, table("meet"), table("join"), true);
}

Json lattice_to_json(const DistLattice& l) {
  Json j;
  j["size"] = l.size;
  j["bot"] = l.bot;
  j["top"] = l.top;
  auto table = [&](const std::vector<int>& t) {
    Json rows = Json::array();
    for (int a = 0; a < l.size; ++a) {
      Json row = Json::array();
      for (int b = 0; b < l.size; ++b) row.push_back(t[static_cast<std::size_t>(a) * l.size + b]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["meet"] = table(l.meet);
  j["join"] = table(l.join);
  return j;
}

HeytingAlgebra parse_algebra_json(const Json& j, const RunConfig& cfg) {
  if (j.is_object() && j.contains("poset"))
    return upset_lattice(parse_poset_json(j["poset"]), cfg).alg;
  return heyting_from_lattice(parse_lattice_json(j, cfg));
}

Json chainposet_to_json(const ChainPoset& cp) {
  Json j;
  j["base"] = poset_to_json(cp.base());
  Json chains = Json::array();
  for (const Chain& c : cp.chains()) {
    Json e = Json::array();
    for (int x : c.elems) e.push_back(x);
    chains.push_back(std::move(e));
  }
  j["chains"] = std::move(chains);
  j["order"] = poset_to_json(cp.order());
  return j;
}

std::string poset_to_dot(const Poset& p, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + p.label(i) + "\"];\n";
  for (auto [a, b] : p.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

namespace {

std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  int v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    char c = name[i];
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
    if (v > 1'000'000) return std::nullopt;
  }
  return v;
}

}  // namespace

std::optional<Poset> builtin_poset(const std::string& name) {
  if (name == "point") return Poset::point();
  if (name == "d4") return Poset::diamond();
  if (name == "empty") return Poset::empty();
  if (auto k = suffix_number(name, "chain-")) return Poset::chain(*k);
  if (auto k = suffix_number(name, "antichain-")) return Poset::antichain(*k);
  if (auto k = suffix_number(name, "cube-")) {
    if (*k > 16) fail_resource("cube cap", 16, static_cast<std::size_t>(*k));
    return Poset::cube(*k);
  }
  return std::nullopt;
}

std::optional<HeytingAlgebra> builtin_algebra(const std::string& name, const RunConfig& cfg) {
  if (name == "trivial") return upset_lattice(Poset::empty(), cfg).alg;
  if (auto k = suffix_number(name, "chain-")) {
    if (*k < 1) fail_validation("chain algebra needs at least one element");
    return upset_lattice(Poset::chain(*k - 1), cfg).alg;
  }
  if (auto k = suffix_number(name, "boolean-")) return upset_lattice(Poset::antichain(*k), cfg).alg;
  if (name.rfind("upsets:", 0) == 0) {
    std::string inner = name.substr(7);
    if (auto p = builtin_poset(inner)) return upset_lattice(*p, cfg).alg;
    fail_validation("unknown poset name", inner);
  }
  return std::nullopt;
}

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_validation("cannot read file", path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail_validation("malformed json", std::string(e.what()));
  }
  return j;
}

}  // namespace

Poset load_poset(const std::string& arg) {
  if (auto p = builtin_poset(arg)) return *p;
  return parse_poset_json(read_json_file(arg));
}

DistLattice load_lattice(const std::string& arg, const RunConfig& cfg) {
  // lattice names follow the algebra vocabulary: trivial, chain-K,
  // boolean-K, upsets:<poset>
  if (auto a = builtin_algebra(arg, cfg)) return a->base;
  return parse_lattice_json(read_json_file(arg), cfg);
}

HeytingAlgebra load_algebra(const std::string& arg, const RunConfig& cfg) {
  if (auto a = builtin_algebra(arg, cfg)) return *a;
  return parse_algebra_json(read_json_file(arg), cfg);
}

}  // namespace godel
