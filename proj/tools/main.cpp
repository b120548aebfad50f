// godel: finite-duality calculator for Godel algebras.
//
// Subcommands build free (bounded-depth) Godel algebras and coproducts from
// the chain spaces of finite posets, print Birkhoff duals, and run the named
// verification certificates. Identical inputs and seed produce byte-identical
// output.

#include "godel/coproduct.hpp"
#include "godel/freealg.hpp"
#include "godel/io.hpp"
#include "godel/nerve.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace godel;

namespace {

enum ExitCode {
  exit_ok = 0,
  exit_usage = 1,
  exit_validation = 2,
  exit_resource = 3,
  exit_precondition = 4,
  exit_dimension = 5,
  exit_check_failed = 10,
};

int code_for(errc k) {
  switch (k) {
    case errc::validation: return exit_validation;
    case errc::resource: return exit_resource;
    case errc::precondition: return exit_precondition;
    case errc::dimension: return exit_dimension;
  }
  return exit_validation;
}

struct Options {
  std::string command;
  std::vector<std::string> posets;
  std::string lattice;
  std::vector<std::string> algebras;
  std::string zposet;
  int generators = -1;
  int depth = -1;
  std::string suite;
  std::string format = "text";
  std::string output;
  RunConfig cfg;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
  if (opt.output.empty()) return std::cout;
  file.open(opt.output);
  if (!file) fail_validation("cannot write file", opt.output);
  return file;
}

Json inputs_json(const Options& opt) {
  Json in = Json::object();
  if (!opt.posets.empty()) in["posets"] = opt.posets;
  if (!opt.lattice.empty()) in["lattice"] = opt.lattice;
  if (!opt.algebras.empty()) in["algebras"] = opt.algebras;
  if (opt.generators >= 0) in["generators"] = opt.generators;
  if (opt.depth >= 0) in["depth"] = opt.depth;
  if (!opt.suite.empty()) in["suite"] = opt.suite;
  in["seed"] = opt.cfg.seed;
  return in;
}

void emit(const Options& opt, const std::string& text, const Json& result,
          const Json& certificates = Json::object()) {
  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "structured") {
    Json j;
    j["command"] = opt.command;
    j["inputs"] = inputs_json(opt);
    j["result"] = result;
    j["certificates"] = certificates;
    os << j.dump(2) << "\n";
  } else {
    os << text;
  }
}

// ---- dual -------------------------------------------------------------

int cmd_dual(const Options& opt) {
  if (!opt.lattice.empty()) {
    DistLattice l = load_lattice(opt.lattice, opt.cfg);
    BirkhoffDual d = dual_poset(l);
    std::ostringstream text;
    if (d.poset.size() == 0)
      text << "empty poset\n";
    else {
      text << "dual poset: " << d.poset.size() << " elements\n";
      for (auto [a, b] : d.poset.covers())
        text << "  " << d.poset.label(a) << " < " << d.poset.label(b) << "\n";
    }
    if (opt.format == "graph") {
      std::ofstream file;
      open_output(opt, file) << poset_to_dot(d.poset, "dual");
      return exit_ok;
    }
    emit(opt, text.str(), poset_to_json(d.poset));
    return exit_ok;
  }
  std::string arg = opt.posets.empty() ? "d4" : opt.posets.front();
  Poset p = load_poset(arg);
  UpsetAlgebra ua = upset_lattice(p, opt.cfg);
  std::ostringstream text;
  text << "dual algebra: " << ua.size() << " elements"
       << (ua.alg.godel ? " (Godel)" : "") << "\n";
  if (opt.format == "graph") {
    std::ofstream file;
    open_output(opt, file) << poset_to_dot(p, "poset");
    return exit_ok;
  }
  emit(opt, text.str(), lattice_to_json(ua.alg.base));
  return exit_ok;
}

// ---- free -------------------------------------------------------------

Json free_result_json(const FreeAlgebraResult& f) {
  Json r;
  r["dual_size"] = f.dual.size();
  r["algebra_size"] = u128_to_string(f.algebra_size);
  r["dual"] = chainposet_to_json(f.dual);
  Json units = Json::array();
  for (const Bits& u : f.unit) units.push_back(u.to_list());
  r[f.over_set ? "generator_images" : "unit_images"] = std::move(units);
  return r;
}

int cmd_free(const Options& opt) {
  FreeAlgebraResult f;
  if (opt.generators >= 0 && !opt.lattice.empty())
    fail_validation("choose either --generators or --lattice");
  if (opt.generators >= 0)
    f = opt.depth >= 0 ? free_gan(opt.generators, opt.depth, opt.cfg)
                       : free_godel(opt.generators, opt.cfg);
  else if (!opt.lattice.empty()) {
    DistLattice l = load_lattice(opt.lattice, opt.cfg);
    f = opt.depth >= 0 ? free_gan_over_lattice(l, opt.depth, opt.cfg)
                       : free_godel_over_lattice(l, opt.cfg);
  } else {
    fail_validation("free needs --generators or --lattice");
  }
  if (opt.format == "graph") {
    std::ofstream file;
    open_output(opt, file) << poset_to_dot(f.dual.order(), "dual");
    return exit_ok;
  }
  std::ostringstream text;
  text << "dual: " << f.dual.size() << " elements; algebra: " << u128_to_string(f.algebra_size)
       << " elements\n";
  for (std::size_t s = 0; s < f.unit.size(); ++s) {
    text << (f.over_set ? "r(" : "e(") << s << ") = {";
    std::vector<int> members = f.unit[s].to_list();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) text << ", ";
      text << f.dual.order().label(members[i]);
    }
    text << "}\n";
  }
  emit(opt, text.str(), free_result_json(f));
  return exit_ok;
}

// ---- coproduct / depth --------------------------------------------------

std::vector<HeytingAlgebra> load_algebras(const Options& opt) {
  if (opt.algebras.empty()) fail_validation("at least one --alg required");
  std::vector<HeytingAlgebra> gs;
  for (const std::string& a : opt.algebras) gs.push_back(load_algebra(a, opt.cfg));
  return gs;
}

int cmd_coproduct(const Options& opt) {
  std::vector<HeytingAlgebra> gs = load_algebras(opt);
  Coproduct co =
      opt.depth >= 0 ? coproduct_gan(gs, opt.depth, opt.cfg) : coproduct_godel(gs, opt.cfg);
  if (opt.format == "graph") {
    std::ofstream file;
    open_output(opt, file) << poset_to_dot(co.space.space.order(), "tensor");
    return exit_ok;
  }
  std::ostringstream text;
  text << "tensor space: " << co.space.space.size() << " chains; algebra: " << co.algebra.size()
       << " elements; depth: " << co.space.space.depth() << "\n";
  for (std::size_t i = 0; i < co.injections.size(); ++i)
    text << "injection " << i << ": " << gs[i].size() << " -> " << co.algebra.size() << "\n";
  Json r;
  r["tensor_chains"] = co.space.space.size();
  r["algebra_size"] = co.algebra.size();
  r["depth"] = co.space.space.depth();
  Json inj = Json::array();
  for (const LatticeHom& h : co.injections) inj.push_back(h.map);
  r["injections"] = std::move(inj);
  emit(opt, text.str(), r);
  return exit_ok;
}

int cmd_depth(const Options& opt) {
  std::vector<HeytingAlgebra> gs = load_algebras(opt);
  DepthCertificate cert = depth_check(gs, opt.cfg);
  std::ostringstream text;
  text << "formula " << cert.formula << ", computed " << cert.computed << "\n";
  Json r;
  r["formula"] = cert.formula;
  r["computed"] = cert.computed;
  r["ok"] = cert.ok;
  emit(opt, text.str(), r);
  return cert.ok ? exit_ok : exit_check_failed;
}

// ---- check ----------------------------------------------------------------

int finish_check(const Options& opt, bool ok, const std::string& text, const Json& cert) {
  std::ostringstream out;
  if (!ok) out << "ERROR check " << opt.suite << "\n";
  out << text;
  Json r;
  r["ok"] = ok;
  emit(opt, out.str(), r, cert);
  return ok ? exit_ok : exit_check_failed;
}

int cmd_check(const Options& opt) {
  const std::string& suite = opt.suite;
  RunConfig cfg = opt.cfg;
  auto poset_arg = [&](const char* fallback) {
    return std::make_shared<const Poset>(
        load_poset(opt.posets.empty() ? fallback : opt.posets.front()));
  };
  if (suite == "z-iso") {
    ZIsoCertificate c = z_iso_check(poset_arg("d4"), cfg);
    std::ostringstream text;
    text << "z-iso: " << c.cc_size << " <-> " << c.z_size << ", "
         << (c.ok ? "isomorphism verified" : "isomorphism FAILED") << "\n";
    Json j;
    j["cc_size"] = c.cc_size;
    j["z_size"] = c.z_size;
    j["images_m_open"] = c.images_m_open;
    j["bijective"] = c.bijective;
    j["order_iso"] = c.order_iso;
    return finish_check(opt, c.ok, text.str(), j);
  }
  if (suite == "implication") {
    ImplicationCertificate c = implication_box_formula_check(poset_arg("d4"), cfg);
    std::ostringstream text;
    text << "implication: " << c.pairs << " upset pairs, " << c.mismatches << " mismatches\n";
    Json j;
    j["pairs"] = c.pairs;
    j["mismatches"] = c.mismatches;
    return finish_check(opt, c.ok, text.str(), j);
  }
  if (suite == "upsets") {
    NerveUpsetCertificate c = nerve_upset_characterization_check(poset_arg("d4"), cfg);
    std::ostringstream text;
    text << "upsets: " << c.nerve_upsets << " nerve upsets, " << c.box_unions
         << " box unions, " << (c.ok ? "families coincide" : "families DIFFER") << "\n";
    Json j;
    j["nerve_upsets"] = c.nerve_upsets;
    j["box_unions"] = c.box_unions;
    j["boxes_are_upsets"] = c.boxes_are_upsets;
    return finish_check(opt, c.ok, text.str(), j);
  }
  if (suite == "twohead") {
    auto p = poset_arg("d4");
    TwoheadCertificate c = twohead_check(*p, 3, cfg);
    std::ostringstream text;
    text << "twohead: " << c.families << " families, " << c.mismatches << " mismatches\n";
    Json j;
    j["families"] = c.families;
    j["mismatches"] = c.mismatches;
    return finish_check(opt, c.ok, text.str(), j);
  }
  if (suite == "box-diamond") {
    BoxDiamondCertificate c = box_diamond_check(poset_arg("d4"), cfg);
    std::ostringstream text;
    text << "box-diamond: " << c.instances << " instances, " << c.mismatches << " mismatches"
         << " (unqualified identity held in " << c.unqualified_equal << "/"
         << c.unqualified_total << " cases)\n";
    Json j;
    j["instances"] = c.instances;
    j["mismatches"] = c.mismatches;
    j["unqualified_equal"] = c.unqualified_equal;
    j["unqualified_total"] = c.unqualified_total;
    return finish_check(opt, c.ok, text.str(), j);
  }
  if (suite == "free") {
    DistLattice l = opt.lattice.empty() ? upset_lattice(Poset::diamond(), cfg).alg.base
                                        : load_lattice(opt.lattice, cfg);
    HeytingAlgebra h = opt.algebras.empty() ? load_algebra("chain-3", cfg)
                                            : load_algebra(opt.algebras.front(), cfg);
    FreeAlgebraResult f = free_godel_over_lattice(l, cfg);
    FreeCertificate c = certify_free(f, l, h, cfg);
    std::ostringstream text;
    text << "free: " << c.hom_count << " lattice homs via " << c.route << " route, ";
    std::size_t unique = 0;
    for (std::size_t e : c.extensions)
      if (e == 1) ++unique;
    text << unique << " extend uniquely\n";
    Json j;
    j["route"] = c.route;
    j["hom_count"] = c.hom_count;
    j["extensions"] = c.extensions;
    return finish_check(opt, c.ok, text.str(), j);
  }
  if (suite == "product") {
    std::vector<Poset> factors;
    if (opt.posets.empty())
      factors = {Poset::chain(2), Poset::chain(2)};
    else
      for (const std::string& a : opt.posets) factors.push_back(load_poset(a));
    TensorSpace t = tensor(factors, cfg);
    bool projections_ok = true;
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (!is_p_morphism(tensor_projection(t, static_cast<int>(i)))) projections_ok = false;
    Poset z = opt.zposet.empty() ? Poset::chain(2) : load_poset(opt.zposet);
    // all tuples of p-morphisms Z -> factor_i
    std::vector<std::vector<std::vector<int>>> pmaps;
    for (const Poset& f : factors) {
      std::vector<std::vector<int>> ms;
      PosetPtr zp = std::make_shared<const Poset>(z);
      PosetPtr fp = std::make_shared<const Poset>(f);
      for (std::vector<int>& m : enumerate_monotone_maps(z, f, cfg.hom_cap))
        if (is_p_morphism(make_map(zp, fp, m))) ms.push_back(std::move(m));
      pmaps.push_back(std::move(ms));
    }
    std::size_t tuples = 0, verified = 0;
    std::vector<std::vector<int>> fs(factors.size());
    std::function<void(std::size_t)> sweep = [&](std::size_t i) {
      if (i == factors.size()) {
        ++tuples;
        if (verify_product_universal(t, z, fs, cfg).ok) ++verified;
        return;
      }
      for (const std::vector<int>& m : pmaps[i]) {
        fs[i] = m;
        sweep(i + 1);
      }
    };
    sweep(0);
    bool ok = projections_ok && tuples == verified && tuples > 0;
    std::ostringstream text;
    text << "product: " << t.space.size() << " chains, projections "
         << (projections_ok ? "pass" : "FAIL") << ", " << verified << "/" << tuples
         << " mediating maps unique\n";
    Json j;
    j["tensor_chains"] = t.space.size();
    j["projections_ok"] = projections_ok;
    j["tuples"] = tuples;
    j["verified"] = verified;
    return finish_check(opt, ok, text.str(), j);
  }
  if (suite == "depth") {
    std::vector<HeytingAlgebra> gs;
    if (opt.algebras.empty())
      gs = {load_algebra("chain-3", cfg), load_algebra("chain-3", cfg)};
    else
      for (const std::string& a : opt.algebras) gs.push_back(load_algebra(a, cfg));
    DepthCertificate c = depth_check(gs, cfg);
    std::ostringstream text;
    text << "depth: formula " << c.formula << ", computed " << c.computed << "\n";
    Json j;
    j["formula"] = c.formula;
    j["computed"] = c.computed;
    return finish_check(opt, c.ok, text.str(), j);
  }
  fail_validation("unknown check suite", suite);
}

int cmd_nerve(const Options& opt) {
  if (!opt.suite.empty()) return cmd_check(opt);
  auto p = std::make_shared<const Poset>(
      load_poset(opt.posets.empty() ? "d4" : opt.posets.front()));
  ChainPoset nv = nerve(p, opt.cfg);
  if (opt.format == "graph") {
    std::ofstream file;
    open_output(opt, file) << poset_to_dot(nv.order(), "nerve");
    return exit_ok;
  }
  std::ostringstream text;
  text << "nerve: " << nv.size() << " chains\n";
  emit(opt, text.str(), chainposet_to_json(nv));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"finite-duality calculator for Godel algebras"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format)->check(CLI::IsMember({"text", "structured", "graph"}));
    sub->add_option("--output", opt.output);
    sub->add_option("--cap-chains", opt.cfg.chain_cap);
    sub->add_option("--cap-homs", opt.cfg.hom_cap);
    sub->add_option("--seed", opt.cfg.seed);
  };

  CLI::App* dual = app.add_subcommand("dual", "print the Birkhoff dual");
  dual->add_option("--poset", opt.posets);
  dual->add_option("--lattice", opt.lattice);
  add_common(dual);

  CLI::App* fr = app.add_subcommand("free", "free (bounded-depth) Godel algebra");
  fr->add_option("--generators", opt.generators);
  fr->add_option("--lattice", opt.lattice);
  fr->add_option("--depth", opt.depth);
  add_common(fr);

  CLI::App* cop = app.add_subcommand("coproduct", "coproduct of Godel algebras");
  cop->add_option("--alg", opt.algebras);
  cop->add_option("--depth", opt.depth);
  add_common(cop);

  CLI::App* dep = app.add_subcommand("depth", "depth formula vs computed depth");
  dep->add_option("--alg", opt.algebras);
  add_common(dep);

  CLI::App* chk = app.add_subcommand("check", "run a named certificate");
  chk->add_option("suite", opt.suite)
      ->required()
      ->check(CLI::IsMember({"free", "product", "depth", "z-iso", "implication", "upsets",
                             "twohead", "box-diamond"}));
  chk->add_option("--poset", opt.posets);
  chk->add_option("--lattice", opt.lattice);
  chk->add_option("--alg", opt.algebras);
  chk->add_option("--zposet", opt.zposet);
  add_common(chk);

  CLI::App* nv = app.add_subcommand("nerve", "reverse-inclusion chain space");
  nv->add_option("--poset", opt.posets);
  nv->add_option("--check", opt.suite)
      ->check(CLI::IsMember({"z-iso", "implication", "upsets", "twohead", "box-diamond"}));
  add_common(nv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cout << "ERROR usage " << e.what() << "\n";
    return exit_usage;
  }

  try {
    opt.cfg.validate();
    if (dual->parsed()) return (opt.command = "dual", cmd_dual(opt));
    if (fr->parsed()) return (opt.command = "free", cmd_free(opt));
    if (cop->parsed()) return (opt.command = "coproduct", cmd_coproduct(opt));
    if (dep->parsed()) return (opt.command = "depth", cmd_depth(opt));
    if (chk->parsed()) return (opt.command = "check", cmd_check(opt));
    if (nv->parsed()) return (opt.command = "nerve", cmd_nerve(opt));
  } catch (const error& e) {
    std::cout << "ERROR " << errc_name(e.kind()) << " " << e.subject() << "\n";
    std::cout << e.what() << "\n";
    return code_for(e.kind());
  } catch (const std::exception& e) {
    std::cout << "ERROR internal " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
