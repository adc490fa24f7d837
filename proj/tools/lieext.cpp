// Command-line surface: build / verify / decompose / scan / branch /
// classify / report. All machine output is deterministic ordered JSON;
// timing appears only in text mode.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieext/abelian.hpp"
#include "lieext/branching.hpp"
#include "lieext/decompose.hpp"
#include "lieext/verify.hpp"

using json = nlohmann::ordered_json;
using namespace lieext;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "V(";
  bool zero = true;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0) {
      if (!zero) os << "+";
      if (w[k] != 1) os << w[k];
      os << "L" << (k + 1);
      zero = false;
    }
  if (zero) os << "0";
  os << ")";
  return os.str();
}

json weight_json(const Weight& w) { return json(w); }

Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (...) {
    throw ConfigError("not a rational number: '" + s + "'");
  }
}

Elem named_element(const LieAlgebra& g, const std::string& name) {
  NamedElements ne = g.named_elements();
  if (name == "X'") return ne.Xp;
  if (name == "X''") return ne.Xpp;
  if (name == "H") return ne.H_special;
  if (name == "Y1") return g.gen_y(0);
  if (name == "X'''" && ne.Xppp) return *ne.Xppp;
  if (name == "Y'" && ne.Yp) return *ne.Yp;
  if (name == "Y''" && ne.Ypp) return *ne.Ypp;
  throw ConfigError("unknown named element '" + name + "' for this ambient");
}

/// Parsed spec file: {ambient, source, variant, module?, lift?}.
struct Config {
  std::string ambient;
  bool twisted = false;
  bool module_adjoint = true;
  Weight module_hw;
  bool has_lift = false;
  Weight lift_hw;
  Elem lift_image;
  std::string lift_label;
  bool lift_parametrized = false;
};

Config load_config(const std::string& path, const LieAlgebra*& out_alg,
                   std::map<std::string, LieAlgebra>& store) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  Config cfg;
  if (!j.contains("ambient") || !j["ambient"].is_string())
    throw ConfigError("field 'ambient' (string) is required");
  cfg.ambient = j["ambient"].get<std::string>();
  SimpleType at;
  try {
    at = SimpleType::parse(cfg.ambient);
  } catch (const std::exception& e) {
    throw ConfigError("field 'ambient': " + std::string(e.what()));
  }
  if (at.family != 'E')
    throw ConfigError("field 'ambient' must be E6, E7 or E8");
  auto it = store.find(cfg.ambient);
  if (it == store.end())
    it = store.emplace(cfg.ambient, LieAlgebra(RootSystem(at))).first;
  const LieAlgebra& g = it->second;
  out_alg = &g;
  int srank = g.rank() - 1;

  if (j.contains("source")) {
    std::string s = j["source"].get<std::string>();
    if (s != "D" + std::to_string(srank))
      throw ConfigError("field 'source' must be D" + std::to_string(srank) +
                        " for ambient " + cfg.ambient);
  }
  if (j.contains("variant")) {
    std::string v = j["variant"].get<std::string>();
    if (v == "twisted")
      cfg.twisted = true;
    else if (v != "natural")
      throw ConfigError("field 'variant' must be 'natural' or 'twisted'");
  }
  if (j.contains("module")) {
    const json& m = j["module"];
    if (m.is_string() && m.get<std::string>() == "adjoint") {
      cfg.module_adjoint = true;
    } else if (m.is_array()) {
      cfg.module_adjoint = false;
      cfg.module_hw = m.get<Weight>();
      if (int(cfg.module_hw.size()) != g.rank())
        throw ConfigError("field 'module' weight needs rank " +
                          std::to_string(g.rank()));
    } else {
      throw ConfigError("field 'module' must be 'adjoint' or a weight array");
    }
  }
  if (j.contains("lift")) {
    const json& l = j["lift"];
    cfg.has_lift = true;
    if (!l.contains("weight") || !l["weight"].is_array())
      throw ConfigError("field 'lift.weight' (array) is required");
    cfg.lift_hw = l["weight"].get<Weight>();
    if (int(cfg.lift_hw.size()) != srank)
      throw ConfigError("field 'lift.weight' needs rank " +
                        std::to_string(srank));
    if (!l.contains("element"))
      throw ConfigError("field 'lift.element' is required");
    std::map<std::string, Rat> params;
    if (l.contains("params")) {
      for (auto& [k, v] : l["params"].items())
        params[k] = parse_rat(v.get<std::string>());
      cfg.lift_parametrized = true;
    }
    const json& el = l["element"];
    std::ostringstream label;
    if (el.is_string()) {
      cfg.lift_image = named_element(g, el.get<std::string>());
      label << el.get<std::string>();
    } else if (el.is_array()) {
      // linear combination: [["alpha", "Y'"], ["1/2", "H"], ...]
      cfg.lift_image = zero_vec(g.dim());
      bool first = true;
      for (const json& term : el) {
        if (!term.is_array() || term.size() != 2)
          throw ConfigError("field 'lift.element' terms must be "
                            "[coefficient, name] pairs");
        std::string cs = term[0].get<std::string>();
        Rat coef = params.count(cs) ? params.at(cs) : parse_rat(cs);
        axpy(cfg.lift_image, coef,
             named_element(g, term[1].get<std::string>()));
        if (!first) label << " + ";
        label << cs << "*" << term[1].get<std::string>();
        first = false;
      }
    } else {
      throw ConfigError("field 'lift.element' must be a name or term list");
    }
    cfg.lift_label = label.str();
  }
  return cfg;
}

EmbeddingMap config_embedding(const Config& cfg, const LieAlgebra& g) {
  EmbeddingMap emb =
      cfg.twisted ? EmbeddingMap::twisted(g) : EmbeddingMap::natural(g);
  if (!cfg.has_lift) return emb;
  try {
    return lift_embedding(emb, cfg.lift_hw, cfg.lift_image, cfg.lift_label,
                          cfg.lift_parametrized);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("field 'lift': ") + e.what());
  }
}

json decomposition_json(const IsotypicDecomposition& d,
                        const RootSystem& src) {
  json out = json::array();
  for (const auto& [w, mult] : d.constituents)
    out.push_back({{"weight", weight_json(w)},
                   {"multiplicity", mult},
                   {"dim", weyl_dim(src, w).get_str()}});
  return out;
}

json catalog_json(const AbelianExtensionCatalog& cat) {
  json out;
  out["ambient"] = cat.ambient.name();
  out["variant"] = cat.twisted ? "twisted" : "natural";
  out["entries"] = json::array();
  for (const auto& e : cat.entries)
    out["entries"].push_back({{"radical_hw", weight_json(e.radical_hw)},
                              {"label", e.label},
                              {"is_sum", e.is_sum},
                              {"is_pencil", e.is_pencil},
                              {"dim", e.dim},
                              {"abelian", e.abelian},
                              {"note", e.note}});
  return out;
}

json classes_json(const std::vector<LiftClass>& classes) {
  json out = json::array();
  for (const auto& lc : classes)
    out.push_back({{"family", lc.family},
                   {"radical", lc.radical},
                   {"image", lc.image},
                   {"orbit", lc.orbit},
                   {"verified", lc.verified},
                   {"certificates", lc.certificates}});
  return out;
}

json branch_json(const BranchingReport& rep, const RootSystem& src) {
  json out;
  out["constituents"] = decomposition_json(rep.decomposition, src);
  out["copies"] = json::array();
  for (const auto& c : rep.copies)
    out["copies"].push_back(weight_json(c.hw));
  out["linkage_edges"] = json::array();
  for (const auto& [i, j] : rep.linkage_edges)
    out["linkage_edges"].push_back({i, j});
  out["blocks"] = json::array();
  for (const auto& b : rep.blocks) out["blocks"].push_back(b);
  out["indecomposability_criterion"] = rep.all_positive_roots_contained;
  out["parameter_dependent"] = rep.parameter_dependent;
  return out;
}

/// Human block notation: constituents joined by "+" inside a block and
/// blocks joined by " (+) ".
std::string block_notation(const BranchingReport& rep) {
  std::ostringstream os;
  for (std::size_t bi = 0; bi < rep.blocks.size(); ++bi) {
    if (bi) os << " \xE2\x8A\x95 ";  // direct-sum sign between blocks
    os << "{";
    for (std::size_t k = 0; k < rep.blocks[bi].size(); ++k) {
      if (k) os << " + ";
      os << weight_str(rep.copies[rep.blocks[bi][k]].hw);
    }
    os << "}";
  }
  return os.str();
}

int cmd_build(const std::string& type, bool as_json) {
  SimpleType t;
  try {
    t = SimpleType::parse(type);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  LieAlgebra g{RootSystem(t)};
  std::ostringstream table;
  g.serialize(table);

  std::string cache_note = "cache disabled";
  if (const char* dir = std::getenv("LIEEXT_CACHE_DIR")) {
    std::string path = std::string(dir) + "/" + type + ".table";
    std::ifstream existing(path);
    if (existing) {
      std::stringstream prev;
      prev << existing.rdbuf();
      if (prev.str() != table.str()) {
        std::cerr << "error: cached structure table " << path
                  << " disagrees with the fresh build\n";
        return 1;
      }
      cache_note = "cache hit (verified): " + path;
    } else {
      std::ofstream out(path);
      if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 2;
      }
      out << table.str();
      cache_note = "cached: " + path;
    }
  }
  if (as_json) {
    json out;
    out["type"] = type;
    out["dim"] = g.dim();
    out["positive_roots"] = g.num_positive();
    out["rank"] = g.rank();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << type << ": dim " << g.dim() << ", " << g.num_positive()
              << " positive roots, rank " << g.rank() << " (" << cache_note
              << ")\n";
  }
  return 0;
}

int cmd_verify(const std::string& selector, bool as_json, bool mutate) {
  VerifyOptions opts;
  opts.mutate_fixture = mutate;
  VerificationSuite suite;
  try {
    suite = run_verification(selector, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (as_json) {
    std::cout << suite_to_json(suite) << "\n";
  } else {
    for (const auto& c : suite.checks) {
      std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  ("
                << c.seconds << "s)\n       " << c.claim << "\n";
      if (!c.detail.empty()) std::cout << "       " << c.detail << "\n";
    }
    std::cout << (suite.all_passed() ? "all checks passed"
                                     : "CHECK FAILURES PRESENT")
              << "\n";
  }
  return suite.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computational verifier for D_n inside E_{n+1}"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable deterministic output");

  std::string build_type;
  auto* build = app.add_subcommand("build", "construct a Chevalley basis");
  build->add_option("type", build_type, "D5..D7 or E6..E8")->required();

  std::string selector = "all";
  bool mutate = false;
  auto* verify = app.add_subcommand("verify", "run paper-claim checks");
  verify->add_option("selector", selector, "check group (default: all)");
  verify->add_flag("--mutate-fixture", mutate,
                   "test fixture: corrupt one structure constant")
      ->group("");  // hidden

  std::string spec_path;
  auto* dec = app.add_subcommand("decompose", "restrict a module");
  dec->add_option("spec", spec_path, "JSON spec file")->required();
  auto* scan = app.add_subcommand("scan", "abelian-extension catalog");
  scan->add_option("spec", spec_path, "JSON spec file")->required();
  auto* branch = app.add_subcommand("branch", "branch with radical linkage");
  branch->add_option("spec", spec_path, "JSON spec file")->required();

  std::string classify_type;
  auto* classify = app.add_subcommand("classify", "lift classification");
  classify->add_option("type", classify_type, "E6, E7 or E8")->required();

  auto* report =
      app.add_subcommand("report", "full catalogs and classifications");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(build_type, as_json);
    if (verify->parsed()) return cmd_verify(selector, as_json, mutate);

    if (classify->parsed()) {
      SimpleType t;
      try {
        t = SimpleType::parse(classify_type);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      if (t.family != 'E') {
        std::cerr << "error: classification is defined for E6/E7/E8\n";
        return 2;
      }
      LieAlgebra g{RootSystem(t)};
      auto classes = classify_lifts(g);
      bool ok = true;
      if (as_json) {
        std::cout << classes_json(classes).dump(2) << "\n";
        for (const auto& lc : classes) ok = ok && lc.verified;
      } else {
        for (const auto& lc : classes) {
          ok = ok && lc.verified;
          std::cout << (lc.verified ? "[ok] " : "[FAIL] ") << lc.family
                    << "  radical " << lc.radical << "  " << lc.image
                    << "\n     orbit: " << lc.orbit << "\n";
          for (const auto& c : lc.certificates)
            std::cout << "     - " << c << "\n";
        }
      }
      return ok ? 0 : 1;
    }

    if (dec->parsed() || scan->parsed() || branch->parsed()) {
      std::map<std::string, LieAlgebra> store;
      const LieAlgebra* g = nullptr;
      Config cfg;
      try {
        cfg = load_config(spec_path, g, store);
      } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }

      if (scan->parsed()) {
        EmbeddingMap emb = cfg.twisted ? EmbeddingMap::twisted(*g)
                                       : EmbeddingMap::natural(*g);
        auto cat = scan_invariant_abelian(*g, emb);
        if (as_json)
          std::cout << catalog_json(cat).dump(2) << "\n";
        else
          std::cout << cat.str();
        return 0;
      }

      EmbeddingMap emb = [&] {
        try {
          return config_embedding(cfg, *g);
        } catch (const ConfigError& e) {
          std::cerr << "error: " << e.what() << "\n";
          std::exit(2);
        }
      }();

      if (dec->parsed()) {
        WeightModule m = cfg.module_adjoint
                             ? WeightModule::adjoint_module(*g)
                             : WeightModule::construct_irrep(*g,
                                                             cfg.module_hw);
        auto d = decompose_under(m, emb);
        if (as_json) {
          json out;
          out["ambient"] = cfg.ambient;
          out["module"] = cfg.module_adjoint ? json("adjoint")
                                             : weight_json(cfg.module_hw);
          out["embedding"] = emb.name();
          out["constituents"] =
              decomposition_json(d, emb.source().roots());
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << d.str() << "\n";
        }
        return 0;
      }

      // branch
      auto rep = branch_with_linkage(*g, emb);
      if (as_json)
        std::cout << branch_json(rep, emb.source().roots()).dump(2) << "\n";
      else
        std::cout << rep.str() << "blocks (weights): "
                  << block_notation(rep) << "\n";
      return 0;
    }

    if (report->parsed()) {
      json out;
      bool ok = true;
      for (std::string t : {"E6", "E7", "E8"}) {
        LieAlgebra g{RootSystem(SimpleType::parse(t))};
        json sec;
        sec["dim"] = g.dim();
        for (bool tw : {false, true}) {
          EmbeddingMap emb =
              tw ? EmbeddingMap::twisted(g) : EmbeddingMap::natural(g);
          std::string key = tw ? "twisted" : "natural";
          auto d = decompose_under(WeightModule::adjoint_module(g), emb);
          sec["adjoint_decomposition"][key] = d.str();
          sec["catalog"][key] = catalog_json(scan_invariant_abelian(g, emb));
        }
        auto classes = classify_lifts(g);
        for (const auto& lc : classes) ok = ok && lc.verified;
        sec["classification"] = classes_json(classes);
        out[t] = std::move(sec);
      }
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        for (auto& [t, sec] : out.items()) {
          std::cout << "== " << t << " (dim " << sec["dim"] << ") ==\n";
          std::cout << "adjoint, natural: "
                    << sec["adjoint_decomposition"]["natural"]
                           .get<std::string>()
                    << "\n";
          std::cout << "adjoint, twisted: "
                    << sec["adjoint_decomposition"]["twisted"]
                           .get<std::string>()
                    << "\n";
          for (auto& lc : sec["classification"])
            std::cout << "  " << (lc["verified"].get<bool>() ? "[ok] "
                                                             : "[FAIL] ")
                      << lc["family"].get<std::string>() << "  "
                      << lc["image"].get<std::string>() << "\n";
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
