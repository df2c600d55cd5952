// coxrig: command-line front end for the Coxeter-system toolkit.
//
// Exit codes: 0 success / affirmative verdict, 1 negative verdict,
// 2 usage or input error, 3 cap exhaustion (retry with larger caps).

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cox/davis.hpp"
#include "cox/presentation.hpp"
#include "cox/rigidity.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct RunConfig {
  std::size_t word_cap = cox::kDefaultWordCap;
  int enum_radius = cox::kDefaultEnumRadius;
  int enum_size_cap = cox::kDefaultEnumSizeCap;
  int search_radius = cox::kDefaultSearchRadius;
  bool json_output = false;
};

struct Report {
  int exit_code = kExitOk;
  std::string text;               // plain-text body
  json result;                    // JSON-mode "result"
  std::vector<std::string> warnings;
};

void emit(const RunConfig& cfg, const Report& r) {
  if (cfg.json_output) {
    json j;
    j["ok"] = r.exit_code == kExitOk || r.exit_code == kExitNegative;
    j["result"] = r.result;
    j["warnings"] = r.warnings;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.text;
    if (!r.text.empty() && r.text.back() != '\n') std::cout << "\n";
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  }
}

void emit_error(const RunConfig& cfg, const std::string& type,
                const std::string& message) {
  if (cfg.json_output) {
    json j;
    j["ok"] = false;
    j["result"] = nullptr;
    j["error"] = {{"type", type}, {"message", message}};
    j["warnings"] = json::array();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

std::string format_subset(const cox::CoxeterMatrix& m, cox::ParabolicSubset t) {
  return "{" + subset_names(m, t) + "}";
}

json word_json(const cox::CoxeterMatrix& m, const cox::Word& w) {
  std::vector<std::string> letters;
  for (char c : w) letters.push_back(m.label(static_cast<unsigned char>(c)));
  return letters;
}

json invariants_json(const cox::DiagramInvariants& inv) {
  json j;
  j["vertices"] = inv.vertex_count;
  j["edges"] = inv.edge_count;
  j["labels"] = inv.labels;
  return j;
}

std::string invariants_text(const cox::DiagramInvariants& inv) {
  std::string s = "(" + std::to_string(inv.vertex_count) + ", " +
                  std::to_string(inv.edge_count) + ", {";
  for (std::size_t i = 0; i < inv.labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(inv.labels[i]);
  }
  return s + "})";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxrig: exact computations with Coxeter systems"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_flag("--json", cfg.json_output, "machine-readable output");
  app.add_option("--word-cap", cfg.word_cap, "reduction input length cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-radius", cfg.enum_radius, "enumeration radius cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-size-cap", cfg.enum_size_cap, "enumeration size cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-radius", cfg.search_radius, "ball search radius")
      ->check(CLI::PositiveNumber);

  std::string m_path, a_path, b_path, map_path;
  std::string word_text, a_word, b_word, subset_text;
  std::string s_name, t_name;
  std::string format = "json", part = "hasse";
  int radius = -1;

  auto* validate = app.add_subcommand("validate", "check a presentation file");
  validate->add_option("--m", m_path, "presentation file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "canonical form of a word");
  reduce_cmd->add_option("--m", m_path)->required();
  reduce_cmd->add_option("--word", word_text, "comma-separated generators")->required();

  auto* equal_cmd = app.add_subcommand("equal", "do two words represent the same element?");
  equal_cmd->add_option("--m", m_path)->required();
  equal_cmd->add_option("--a", a_word)->required();
  equal_cmd->add_option("--b", b_word)->required();

  auto* order_cmd = app.add_subcommand("order", "group order by enumeration");
  order_cmd->add_option("--m", m_path)->required();

  auto* spherical_cmd = app.add_subcommand("spherical", "is a subset spherical?");
  spherical_cmd->add_option("--m", m_path)->required();
  spherical_cmd->add_option("--subset", subset_text, "comma-separated generators (default: all)");

  auto* dimension_cmd = app.add_subcommand("dimension", "dimension of the coset complex");
  dimension_cmd->add_option("--m", m_path)->required();

  auto* davis_cmd = app.add_subcommand("davis", "spherical coset complex");
  auto* davis_build = davis_cmd->add_subcommand("build", "build a radius-R truncation");
  davis_build->add_option("--m", m_path)->required();
  davis_build->add_option("--radius", radius, "truncation radius (default: enum radius)");
  davis_build->add_option("--format", format, "dot|json");
  davis_build->add_option("--part", part, "hasse|skeleton (dot only)");

  auto* isrefl_cmd = app.add_subcommand("is-reflection", "is the element a reflection?");
  isrefl_cmd->add_option("--m", m_path)->required();
  isrefl_cmd->add_option("--word", word_text)->required();

  auto* nf_cmd = app.add_subcommand("normal-form", "involution normal form v w0 v^-1");
  nf_cmd->add_option("--m", m_path)->required();
  nf_cmd->add_option("--word", word_text)->required();

  auto* twist_cmd = app.add_subcommand("twist", "replace s by st (m(s,t)=2, rest infinite)");
  twist_cmd->add_option("--m", m_path)->required();
  twist_cmd->add_option("--s", s_name)->required();
  twist_cmd->add_option("--t", t_name)->required();

  auto* align_cmd = app.add_subcommand("align", "align a generating set onto reflections");
  align_cmd->add_option("--map", map_path, "generator-map JSON file")->required();
  align_cmd->add_option("--radius", radius, "search radius (default: search-radius)");

  auto* inv_cmd = app.add_subcommand("invariants", "diagram vertex/edge/label counts");
  inv_cmd->add_option("--m", m_path)->required();

  auto* compare_cmd = app.add_subcommand("compare", "compare diagram invariants");
  compare_cmd->add_option("--a", a_path)->required();
  compare_cmd->add_option("--b", b_path)->required();

  auto* table_cmd = app.add_subcommand("table", "Cayley-ball enumeration table");
  auto* table_export = table_cmd->add_subcommand("export", "emit the Cayley graph");
  table_export->add_option("--m", m_path)->required();
  table_export->add_option("--format", format, "dot|json");
  table_export->add_option("--radius", radius, "ball radius (default: enum radius)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  Report r;
  try {
    if (*validate) {
      auto m = cox::load_presentation(m_path);
      r.text = "ok: rank " + std::to_string(m->rank()) + ", generators";
      for (const auto& l : m->labels()) r.text += " " + l;
      r.result = {{"rank", m->rank()}, {"generators", m->labels()}};
    } else if (*reduce_cmd) {
      auto m = cox::load_presentation(m_path);
      auto g = cox::reduce(m, cox::parse_word(*m, word_text), cfg.word_cap);
      r.text = cox::format_word(*m, g.word());
      r.result = {{"word", word_json(*m, g.word())},
                  {"length", g.length()},
                  {"parity", g.parity() == cox::Parity::Even ? "even" : "odd"}};
    } else if (*equal_cmd) {
      auto m = cox::load_presentation(m_path);
      auto ga = cox::reduce(m, cox::parse_word(*m, a_word), cfg.word_cap);
      auto gb = cox::reduce(m, cox::parse_word(*m, b_word), cfg.word_cap);
      const bool eq = cox::equal(ga, gb);
      r.text = eq ? "equal" : "not equal";
      r.result = {{"equal", eq}};
      r.exit_code = eq ? kExitOk : kExitNegative;
    } else if (*order_cmd) {
      auto m = cox::load_presentation(m_path);
      auto o = cox::group_order(m, cfg.enum_size_cap, cfg.enum_radius);
      if (o) {
        r.text = std::to_string(*o);
        r.result = {{"order", *o}, {"exact", true}};
      } else {
        r.text = "exceeds cap (no closure within radius " +
                 std::to_string(cfg.enum_radius) + ", size " +
                 std::to_string(cfg.enum_size_cap) + ")";
        r.result = {{"order", nullptr}, {"exact", false}};
        r.exit_code = kExitCap;
      }
    } else if (*spherical_cmd) {
      auto m = cox::load_presentation(m_path);
      cox::ParabolicSubset t;
      if (spherical_cmd->count("--subset")) {
        for (char c : cox::parse_word(*m, subset_text))
          t = t.with(static_cast<unsigned char>(c));
      } else {
        t = cox::ParabolicSubset::full(m->rank());
      }
      const auto v = cox::is_spherical(*m, t);
      r.text = format_subset(*m, t) + ": " + v.describe();
      std::vector<std::string> names;
      for (int i : t.indices()) names.push_back(m->label(i));
      r.result = {{"subset", names},
                  {"finite", v.finite},
                  {"witness", v.describe()}};
      if (v.finite) {
        r.result["order"] = v.order;
        json comps = json::array();
        for (const auto& c : v.components) {
          std::vector<std::string> mem;
          for (int i : c.members) mem.push_back(m->label(i));
          comps.push_back({{"type", c.name}, {"members", mem}, {"order", c.order}});
        }
        r.result["components"] = comps;
      } else {
        std::vector<std::string> wit;
        for (int i : v.witness) wit.push_back(m->label(i));
        r.result["witness_members"] = wit;
      }
      r.exit_code = v.finite ? kExitOk : kExitNegative;
    } else if (*dimension_cmd) {
      auto m = cox::load_presentation(m_path);
      const int dim = cox::davis_dimension(*m);
      r.text = std::to_string(dim);
      r.result = {{"dimension", dim}, {"two_dimensional", dim == 2}};
    } else if (*davis_build) {
      auto m = cox::load_presentation(m_path);
      const int rad = radius >= 0 ? radius : cfg.enum_radius;
      auto cx = cox::build_complex(m, rad, cfg.enum_size_cap, cfg.word_cap);
      if (format == "dot")
        r.text = part == "skeleton" ? cx.skeleton_dot() : cx.hasse_dot();
      else
        r.text = cx.to_json();
      r.result = json::parse(cx.to_json());
    } else if (*isrefl_cmd) {
      auto m = cox::load_presentation(m_path);
      auto g = cox::reduce(m, cox::parse_word(*m, word_text), cfg.word_cap);
      const bool refl = cox::is_reflection(g, cox::kDefaultPlateauCap, cfg.word_cap);
      r.text = refl ? "reflection" : "not a reflection";
      r.result = {{"reflection", refl}};
      r.exit_code = refl ? kExitOk : kExitNegative;
    } else if (*nf_cmd) {
      auto m = cox::load_presentation(m_path);
      auto g = cox::reduce(m, cox::parse_word(*m, word_text), cfg.word_cap);
      auto nf = cox::involution_normal_form(g, cox::kDefaultPlateauCap, cfg.word_cap);
      r.text = "conjugator: " + cox::format_word(*m, nf.conjugator.word()) +
               "\ncore: " + cox::format_word(*m, nf.core.word()) +
               "\nsupport: " + format_subset(*m, nf.core_support);
      std::vector<std::string> sup;
      for (int i : nf.core_support.indices()) sup.push_back(m->label(i));
      r.result = {{"conjugator", word_json(*m, nf.conjugator.word())},
                  {"core", word_json(*m, nf.core.word())},
                  {"support", sup}};
    } else if (*twist_cmd) {
      auto m = cox::load_presentation(m_path);
      const int s = m->index_of(s_name), t = m->index_of(t_name);
      if (s < 0 || t < 0)
        throw cox::ParseError("unknown generator in --s/--t");
      auto tw = cox::twist_generating_set(m, s, t);
      r.text = cox::to_dsl(*tw.twisted) + "psi: ";
      for (int i = 0; i < m->rank(); ++i) {
        if (i) r.text += ", ";
        r.text += m->label(i) + " -> " + cox::format_word(*m, tw.map.images[i]);
      }
      r.result = {{"twisted", json::parse(cox::to_json_presentation(*tw.twisted))},
                  {"map", json::parse(cox::to_json_map(tw.map))}};
    } else if (*align_cmd) {
      auto phi = cox::load_generator_map(map_path);
      const int rad = radius >= 0 ? radius : cfg.search_radius;
      auto al = cox::align_generating_sets(phi, rad, cox::kDefaultPlateauCap,
                                           cfg.word_cap);
      r.warnings = al.warnings;
      r.text = "pseudo-transpositions:";
      if (al.pseudo.empty()) r.text += " none";
      for (std::size_t i = 0; i < al.pseudo.size(); ++i) {
        const auto& res = al.resolutions[i];
        r.text += "\n  " + phi.source->label(res.s) + ": partner " +
                  phi.source->label(res.partner_t) + ", target pair (" +
                  phi.target->label(res.s_prime) + "," +
                  phi.target->label(res.t_prime) + "), conjugator " +
                  cox::format_word(*phi.target, res.conjugator_w.word());
      }
      r.text += "\nnew generating set:";
      for (const auto& g : al.new_generators)
        r.text += " " + cox::format_word(*phi.source, g.word());
      const auto inv_s = cox::diagram_invariants(*phi.source);
      const auto inv_t = cox::diagram_invariants(*phi.target);
      r.text += "\ninvariants: source " + invariants_text(inv_s) + ", target " +
                invariants_text(inv_t) +
                (cox::compare_invariants(inv_s, inv_t).all_equal() ? " (equal)"
                                                                   : " (DIFFER)");
      json pseudo = json::array(), gens = json::array(), resol = json::array();
      for (int s : al.pseudo) pseudo.push_back(phi.source->label(s));
      for (const auto& g : al.new_generators)
        gens.push_back(word_json(*phi.source, g.word()));
      for (const auto& res : al.resolutions)
        resol.push_back({{"s", phi.source->label(res.s)},
                         {"partner", phi.source->label(res.partner_t)},
                         {"target_pair", {phi.target->label(res.s_prime),
                                          phi.target->label(res.t_prime)}},
                         {"conjugator", word_json(*phi.target,
                                                  res.conjugator_w.word())}});
      r.result = {{"pseudo", pseudo},
                  {"resolutions", resol},
                  {"new_generators", gens},
                  {"aligned_presentation",
                   json::parse(cox::to_json_presentation(*al.aligned_presentation))},
                  {"invariants_equal",
                   cox::compare_invariants(inv_s, inv_t).all_equal()}};
    } else if (*inv_cmd) {
      auto m = cox::load_presentation(m_path);
      const auto inv = cox::diagram_invariants(*m);
      r.text = invariants_text(inv);
      r.result = invariants_json(inv);
    } else if (*compare_cmd) {
      auto ma = cox::load_presentation(a_path);
      auto mb = cox::load_presentation(b_path);
      const auto ia = cox::diagram_invariants(*ma);
      const auto ib = cox::diagram_invariants(*mb);
      const auto cmp = cox::compare_invariants(ia, ib);
      r.text = (cmp.all_equal() ? "SAME " : "DIFFER ") + invariants_text(ia) +
               " vs " + invariants_text(ib);
      r.result = {{"equal", cmp.all_equal()},
                  {"vertices_equal", cmp.vertices_equal},
                  {"edges_equal", cmp.edges_equal},
                  {"labels_equal", cmp.labels_equal},
                  {"a", invariants_json(ia)},
                  {"b", invariants_json(ib)}};
      r.exit_code = cmp.all_equal() ? kExitOk : kExitNegative;
    } else if (*table_export) {
      auto m = cox::load_presentation(m_path);
      const int rad = radius >= 0 ? radius : cfg.enum_radius;
      auto t = cox::enumerate(m, rad, cfg.enum_size_cap, cfg.word_cap);
      r.text = format == "dot" ? t.to_dot() : t.to_json();
      r.result = json::parse(t.to_json());
    } else {
      emit_error(cfg, "usage", "missing subcommand");
      return kExitInput;
    }
  } catch (const cox::CapExceeded& e) {
    emit_error(cfg, "cap", e.what());
    return kExitCap;
  } catch (const cox::Error& e) {
    emit_error(cfg, "input", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    emit_error(cfg, "internal", e.what());
    return kExitInput;
  }

  emit(cfg, r);
  return r.exit_code;
}
