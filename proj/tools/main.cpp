// smt-kit: command-line front end. JSON on stdout by default, --tsv for
// tab-separated output. Exit codes: 0 success, 1 computational error or a
// failed check, 2 usage error.

#include "io.hpp"
#include "verify.hpp"

#include "smtkit/extend.hpp"
#include "smtkit/involutions.hpp"
#include "smtkit/quadlat.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace smtkit;
using io::json;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<verify::Check> checks;
};

struct Globals {
  bool tsv = false;
  bool timing = false;
  unsigned long long seed = 20240611;
  EnumerationOptions caps;
};

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

int emit(const Report& r, const Globals& g, double elapsed_ms) {
  bool ok = true;
  for (const auto& c : r.checks) ok = ok && c.pass;
  if (g.tsv) {
    if (!r.checks.empty()) {
      std::cout << "check\tpass\texpected\tactual\n";
      for (const auto& c : r.checks)
        std::cout << c.name << '\t' << (c.pass ? "PASS" : "FAIL") << '\t' << c.expected << '\t' << c.actual << '\n';
    } else {
      flatten(r.outputs, "", std::cout);
    }
  } else {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    json j{{"command", r.command}, {"inputs", r.inputs}, {"outputs", r.outputs}, {"checks", checks}};
    if (g.timing) j["elapsed_ms"] = static_cast<long long>(elapsed_ms);
    std::cout << j.dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

// Malformed type names and ranks are usage errors (exit 2).
FinTypeLabel label_of(const std::string& family, int rank) {
  FinTypeLabel l;
  try {
    l = FinTypeLabel{FinTypeLabel::parse_family(family), rank};
  } catch (const std::exception& e) {
    throw CLI::ValidationError(e.what());
  }
  if (!is_valid(l)) throw CLI::ValidationError("invalid rank " + std::to_string(rank) + " for family " + family);
  return l;
}

FinTypeLabel label_of(const std::string& text) {
  try {
    return label_of(family_name(FinTypeLabel::parse(text).family), FinTypeLabel::parse(text).rank);
  } catch (const CLI::ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(e.what());
  }
}

json gcm_report(const GCM& m) {
  json j = io::to_json(m);
  j["class"] = to_string(classify(m));
  j["label"] = identify_label(m);
  if (auto d = symmetrizer(m)) j["symmetrizer"] = io::to_json(*d);
  return j;
}

json lattice_row(const ClassificationRow& r) {
  json gens = json::array();
  for (const auto& g : r.lattice.generators) gens.push_back(io::to_json(g.coords));
  json basis = json::array();
  for (const auto& b : r.verdict.basis) basis.push_back(io::to_json(b.coords));
  json j{{"lattice", r.lattice.name},
         {"index_in_P", r.lattice.index_in_weight_lattice()},
         {"generators", gens},
         {"quadratic", r.verdict.quadratic},
         {"certificate", r.verdict.certificate},
         {"basis", basis},
         {"height_bound", r.verdict.bound}};
  if (r.verdict.negative_root) j["negative_root"] = *r.verdict.negative_root;
  return j;
}

json record_json(const InvolutionRecord& r) {
  auto form = [](const RestrictedForm& f) { return json{{"type", f.type.name()}, {"isogeny", to_string(f.isogeny)}}; };
  json alts = json::array();
  for (const auto& a : r.alternatives) alts.push_back(form(a));
  json j{{"name", r.name},
         {"pattern", r.pattern},
         {"ambient", r.ambient},
         {"fixed_algebra", r.fixed_algebra},
         {"params", r.params},
         {"restricted", form(r.restricted)},
         {"alternatives", alts},
         {"implemented", r.implemented()}};
  if (r.restricted.type.rank <= 5) {
    j["quadratic_verdict"] = quadratic_verdict(r.restricted);
    j["quadratic_rule"] = quadratic_rule(r.restricted);
  }
  if (r.implemented()) {
    json wm = json::array();
    for (const auto& w : weight_map(r)) wm.push_back(io::to_json(w.coords));
    j["weight_map"] = wm;
    AmbientModel m = ambient_model(r);
    j["ambient_extended"] = identify_label(m.ambient().extended);
    j["restricted_extended"] = identify_label(m.restricted().extended);
  }
  return j;
}

// "tau2", "tauhat2" or a word "0,1,2"
Word parse_top(const AmbientModel& m, const std::string& top) {
  if (top.rfind("tauhat", 0) == 0) return m.tau_hat(std::stoi(top.substr(6)));
  if (top.rfind("tau", 0) == 0) return m.tau(std::stoi(top.substr(3)));
  return parse_word(top);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smt-kit: Cartan data, quadratic lattices, extended diagrams, Weyl groups, LS-paths and standard monomials"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_flag("--tsv", g.tsv, "Tab-separated output instead of JSON");
  app.add_flag("--timing", g.timing, "Include wall time in JSON output");
  app.add_option("--seed", g.seed, "Seed for randomized samples");
  if (const char* cap = std::getenv("SMT_KIT_CAP")) {
    try {
      const auto v = std::stoull(cap);
      g.caps.path_cap = v;
      g.caps.interval_cap = v;
    } catch (const std::exception&) {
      std::cerr << "SMT_KIT_CAP must be a positive integer\n";
      return 2;
    }
  }

  Report rep;
  std::function<void()> action;
  bool json_flag = false;  // accepted for symmetry; JSON is the default

  // cartan
  auto* c_cartan = app.add_subcommand("cartan", "Cartan matrix of a finite or affine type");
  std::string family;
  int rank = 0;
  std::string affine;
  c_cartan->add_option("--type", family, "Family: A B C D E F G BC");
  c_cartan->add_option("--rank", rank, "Rank");
  c_cartan->add_option("--affine", affine, "Affine label such as C_2^{(1)}");
  c_cartan->add_flag("--json", json_flag);
  c_cartan->callback([&] {
    action = [&] {
      rep.command = "cartan";
      GCM m = affine.empty() ? build_cartan(label_of(family, rank)) : build_affine_cartan(affine);
      rep.inputs = json{{"type", family}, {"rank", rank}, {"affine", affine}};
      rep.outputs = gcm_report(m);
    };
  });

  // quadlat classify
  auto* c_quad = app.add_subcommand("quadlat", "Quadratic lattices");
  auto* c_classify = c_quad->add_subcommand("classify", "Classify every lattice Q <= L <= P");
  int bound = 0;
  c_classify->add_option("--type", family)->required();
  c_classify->add_option("--rank", rank)->required();
  c_classify->add_option("--bound", bound, "Height bound for the monoid search (0 = default)");
  c_classify->add_flag("--json", json_flag);
  c_quad->require_subcommand(1);
  c_classify->callback([&] {
    action = [&] {
      rep.command = "quadlat classify";
      FinTypeLabel l = label_of(family, rank);
      rep.inputs = json{{"type", l.name()}, {"bound", bound}};
      json rows = json::array();
      for (const auto& r : classify_quadratic(l, bound)) rows.push_back(lattice_row(r));
      rep.outputs = json{{"type", l.name()}, {"lattices", rows}};
    };
  });

  // extend
  auto* c_extend = app.add_subcommand("extend", "Extended diagram of a restricted or ambient datum");
  std::string restricted, ambient_family, eps_text;
  c_extend->add_option("--restricted", restricted, "Restricted family: A B C D BC");
  c_extend->add_option("--ambient", ambient_family, "Ambient finite family, used with --eps");
  c_extend->add_option("--eps", eps_text, "Spherical weight over the fundamental weights, e.g. 1,0,1");
  c_extend->add_option("--rank", rank)->required();
  c_extend->add_flag("--json", json_flag);
  c_extend->callback([&] {
    action = [&] {
      rep.command = "extend";
      ExtendedDatum d;
      if (!restricted.empty()) {
        d = extend_restricted(label_of(restricted, rank));
      } else if (!ambient_family.empty()) {
        GCM base = build_cartan(label_of(ambient_family, rank));
        auto e = io::parse_int_list(eps_text);
        if (static_cast<int>(e.size()) != base.rank()) throw std::invalid_argument("--eps needs one entry per node");
        d = extend_ambient(base, WeightVec::from_ints(base.id(), e));
      } else {
        throw CLI::ValidationError("--restricted or --ambient is required");
      }
      rep.inputs = json{{"restricted", restricted}, {"ambient", ambient_family}, {"rank", rank}, {"eps", eps_text}};
      rep.outputs = gcm_report(d.extended);
      rep.outputs["tier"] = d.tier == Tier::Restricted ? "restricted" : "ambient";
      rep.outputs["root_delta"] = io::to_json(d.root_delta);
      if (d.tier == Tier::Restricted && d.kind != GcmClass::Indefinite) rep.outputs["n0"] = io::to_json(n0(d));
    };
  });

  // weyl
  auto* c_weyl = app.add_subcommand("weyl", "Weyl group computations");
  c_weyl->require_subcommand(1);
  auto* c_tau = c_weyl->add_subcommand("tau-hat", "The elements tau^_m on a restricted extended diagram");
  int m_index = 0;
  c_tau->add_option("--restricted", restricted)->required();
  c_tau->add_option("--rank", rank)->required();
  c_tau->add_option("--m", m_index)->required();
  c_tau->add_flag("--json", json_flag);
  c_tau->callback([&] {
    action = [&] {
      rep.command = "weyl tau-hat";
      ExtendedDatum d = extend_restricted(label_of(restricted, rank));
      Realization r = Realization::of(d);
      Word t = tau_hat(m_index, d);
      rep.inputs = json{{"restricted", restricted}, {"rank", rank}, {"m", m_index}};
      rep.outputs = json{{"extended", identify_label(d.extended)},
                         {"word", t},
                         {"length", length(r, t)},
                         {"alpha0_letters", std::count(t.begin(), t.end(), 0)},
                         {"image_of_eomega0", io::to_json(act(r, t, eomega0(d)))},
                         {"tau_word", restricted_tau(d, m_index)},
                         {"tau_image_of_eomega0", io::to_json(act(r, restricted_tau(d, m_index), eomega0(d)))}};
    };
  });
  auto* c_dem = c_weyl->add_subcommand("demazure", "Demazure character of a word on a dominant weight");
  std::string gcm_file, gcm_type, word_text, weight_text;
  c_dem->add_option("--gcm", gcm_file, "GCM JSON file");
  c_dem->add_option("--type", gcm_type, "Finite type such as C2 (instead of --gcm)");
  c_dem->add_option("--word", word_text, "Word, leftmost letter applied last, e.g. 0,1,0");
  c_dem->add_option("--weight", weight_text, "Dominant weight over fundamental weights")->required();
  c_dem->add_flag("--json", json_flag);
  c_dem->callback([&] {
    action = [&] {
      rep.command = "weyl demazure";
      io::GcmInput input;
      if (!gcm_file.empty()) {
        std::ifstream in(gcm_file);
        if (!in) throw std::runtime_error("cannot open " + gcm_file);
        input = io::gcm_from_json(json::parse(in));
      } else if (!gcm_type.empty()) {
        input.gcm = build_cartan(label_of(gcm_type));
      } else {
        throw CLI::ValidationError("--gcm or --type is required");
      }
      Realization r(input.gcm, input.root_delta);
      Word w = parse_word(word_text);
      auto lam = io::parse_int_list(weight_text);
      if (static_cast<int>(lam.size()) != r.rank()) throw std::invalid_argument("--weight needs one entry per node");
      Character ch = demazure_character(r, w, WeightVec::from_ints(r.gcm().id(), lam));
      rep.inputs = json{{"gcm", gcm_file.empty() ? gcm_type : gcm_file}, {"word", w}, {"weight", lam}};
      rep.outputs = json{{"reduced_word", reduce(r, w)}, {"dimension", io::to_json(total_multiplicity(ch))},
                         {"character", io::to_json(ch)}};
    };
  });

  // lspath
  auto* c_ls = app.add_subcommand("lspath", "LS-paths");
  c_ls->require_subcommand(1);
  auto* c_enum = c_ls->add_subcommand("enumerate", "Paths of shape n omega_0 below a coset of an ambient model");
  std::string case_name, top = "tau1";
  int degree = 1;
  bool richardson = false;
  std::size_t limit = 50;
  c_enum->add_option("--case", case_name, "Involution id with an ambient model, e.g. flip-sp4")->required();
  c_enum->add_option("--top", top, "tau<m>, tauhat<m> or a word");
  c_enum->add_option("--degree", degree, "Shape multiple of omega_0");
  c_enum->add_flag("--richardson", richardson, "Drop paths ending in the identity coset");
  c_enum->add_option("--limit", limit, "Maximum number of paths printed");
  c_enum->add_flag("--json", json_flag);
  c_enum->callback([&] {
    action = [&] {
      rep.command = "lspath enumerate";
      AmbientModel model = ambient_model(InvolutionCatalog::builtin().lookup(case_name));
      Realization ar = Realization::of(model.ambient());
      const WeightVec shape = Rational(degree) * WeightVec::fundamental(model.ambient().extended.id(), ar.rank(), 0);
      PathModel pm(ar, shape, act(ar, parse_top(model, top), shape), g.caps);
      json paths = json::array();
      std::map<std::string, long long> by_degree;
      std::size_t count = 0;
      for (const auto& p : pm.enumerate()) {
        if (richardson && p.min_dir() == shape) continue;
        ++count;
        by_degree[to_string(d_degree(ar, p))]++;
        if (paths.size() < limit) paths.push_back(io::to_json(ar, p));
      }
      rep.inputs = json{{"case", case_name}, {"top", top}, {"degree", degree}, {"richardson", richardson}};
      rep.outputs = json{{"ambient", identify_label(model.ambient().extended)},
                         {"count", count},
                         {"by_d_degree", by_degree},
                         {"paths", paths},
                         {"truncated", count > paths.size()}};
    };
  });

  // smt
  auto* c_smt = app.add_subcommand("smt", "Straightening and standard monomial counts");
  c_smt->require_subcommand(1);
  auto* c_str = c_smt->add_subcommand("straighten", "Normal form of a monomial");
  std::string system_file, monomial_text, choice = "first";
  c_str->add_option("--system", system_file, "Relation file (JSON)")->required();
  c_str->add_option("--monomial", monomial_text, "Comma-separated generator ids")->required();
  c_str->add_option("--choice", choice, "first|last incomparable pair")->check(CLI::IsMember({"first", "last"}));
  c_str->add_flag("--json", json_flag);
  c_str->callback([&] {
    action = [&] {
      rep.command = "smt straighten";
      std::ifstream in(system_file);
      if (!in) throw std::runtime_error("cannot open " + system_file);
      StraighteningSystem sys = io::system_from_json(json::parse(in));
      std::vector<std::string> ids;
      std::stringstream ss(monomial_text);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) ids.push_back(item);
      Monomial mono = sys.monomial(ids);
      Poly nf = sys.straighten(mono, choice == "last" ? PairChoice::Last : PairChoice::First);
      rep.inputs = json{{"system", system_file}, {"monomial", ids}, {"choice", choice}};
      rep.outputs = json{{"standard_input", sys.is_standard(mono)},
                         {"normal_form", io::to_json(sys, nf)},
                         {"text", to_string(sys, nf)}};
    };
  });
  auto* c_exp = c_smt->add_subcommand("export-e7", "Write the E_7 relation file");
  std::string out_file;
  c_exp->add_option("--out", out_file, "Output path (stdout JSON report otherwise)");
  c_exp->callback([&] {
    action = [&] {
      rep.command = "smt export-e7";
      json sys = io::to_json(e7_system(e7_data()));
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot write " + out_file);
        out << sys.dump(2) << '\n';
        rep.outputs = json{{"written", out_file}, {"generators", sys["generators"].size()}};
      } else {
        rep.outputs = sys;
      }
      rep.inputs = json{{"out", out_file}};
    };
  });
  auto* c_min = c_smt->add_subcommand("minuscule", "Minuscule weight poset and pair counts");
  int node = 0;
  std::string min_type;
  c_min->add_option("--type", min_type, "Finite type, e.g. E7 or C3")->required();
  c_min->add_option("--node", node, "0-based node of the minuscule fundamental weight")->required();
  c_min->add_flag("--json", json_flag);
  c_min->callback([&] {
    action = [&] {
      rep.command = "smt minuscule";
      MinusculePoset p = minuscule_poset(label_of(min_type), node);
      PairCounts pc = count_standard_pairs(p);
      json ws = json::array();
      for (const auto& w : p.weights) ws.push_back(io::to_json(w.coords));
      rep.inputs = json{{"type", min_type}, {"node", node}};
      rep.outputs = json{{"size", p.size()}, {"comparable", pc.comparable}, {"incomparable", pc.incomparable},
                         {"weights", ws}};
    };
  });
  auto* c_cnt = c_smt->add_subcommand("counts", "Graded counts against the Weyl dimension sums");
  c_cnt->add_option("--case", case_name)->required();
  c_cnt->add_option("--m", m_index)->required();
  c_cnt->add_option("--degree", degree)->required();
  c_cnt->add_flag("--richardson", richardson);
  c_cnt->add_flag("--json", json_flag);
  c_cnt->callback([&] {
    action = [&] {
      rep.command = "smt counts";
      AmbientModel model = ambient_model(InvolutionCatalog::builtin().lookup(case_name));
      const auto got = graded_count(model, m_index, degree, richardson, g.caps);
      const Integer want = expected_count(model, m_index, degree, richardson);
      rep.inputs = json{{"case", case_name}, {"m", m_index}, {"degree", degree}, {"richardson", richardson}};
      rep.outputs = json{{"paths", got}, {"expected", io::to_json(want)}};
      rep.checks.push_back({"path count = Weyl dimension sum", Integer(got) == want, to_string(want), std::to_string(got)});
    };
  });

  // inv
  auto* c_inv = app.add_subcommand("inv", "Involution catalog");
  c_inv->require_subcommand(1);
  auto* c_look = c_inv->add_subcommand("lookup", "Look up a catalog row instance");
  std::string inv_name;
  c_look->add_option("name", inv_name, "Row id such as flip-sp4")->required();
  c_look->add_flag("--json", json_flag);
  c_look->callback([&] {
    action = [&] {
      rep.command = "inv lookup";
      rep.inputs = json{{"name", inv_name}};
      rep.outputs = record_json(InvolutionCatalog::builtin().lookup(inv_name));
    };
  });
  auto* c_list = c_inv->add_subcommand("list", "List the catalog patterns");
  c_list->add_flag("--json", json_flag);
  c_list->callback([&] {
    action = [&] {
      rep.command = "inv list";
      json rows = json::array();
      for (const auto& r : InvolutionCatalog::builtin().rows())
        rows.push_back(json{{"pattern", r.pattern}, {"requires", r.requires_expr}, {"ambient", r.ambient},
                            {"fixed_algebra", r.fixed_algebra}, {"model", r.model_kind}});
      rep.outputs = json{{"rows", rows}};
    };
  });

  // verify
  auto* c_ver = app.add_subcommand("verify", "Run acceptance checks");
  std::string target;
  std::vector<std::string> keys{"all"};
  for (const auto& c : verify::criteria()) keys.push_back(c.key);
  int max_rank = 4;
  c_ver->add_option("target", target, "all or one of the check names")->required()->check(CLI::IsMember(keys));
  c_ver->add_option("--max-rank", max_rank, "Rank bound for the lattice sweep")->check(CLI::Range(1, 5));
  c_ver->add_flag("--json", json_flag);
  c_ver->callback([&] {
    action = [&] {
      rep.command = "verify " + target;
      verify::Options o;
      o.seed = g.seed;
      o.max_rank = max_rank;
      o.caps = g.caps;
      rep.inputs = json{{"target", target}, {"max_rank", max_rank}, {"seed", g.seed}};
      json results = json::array();
      for (const auto& c : verify::criteria()) {
        if (target != "all" && target != c.key) continue;
        verify::CriterionResult r = verify::run(c.id, o);
        for (auto ch : r.checks) {
          ch.name = r.key + ": " + ch.name;
          rep.checks.push_back(std::move(ch));
        }
        results.push_back(verify::to_json(r, g.timing));
      }
      rep.outputs = json{{"criteria", results}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (!action) throw std::logic_error("no command selected");
    action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", {{"command", rep.command}, {"message", e.what()}}}};
    std::cout << err.dump(2) << '\n';
    return 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return emit(rep, g, ms);
}
