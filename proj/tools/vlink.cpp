#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/registry.hpp"
#include "vlink/surface.hpp"

namespace {

using nlohmann::json;
using namespace vlink;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Code files: one link per line, '#' starts a comment.
std::vector<std::string> code_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos) continue;
    out.push_back(line.substr(0, end + 1));
  }
  return out;
}

struct CodeInput {
  std::string inline_code;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--code", inline_code, "inline Gauss code text");
    cmd->add_option("file", file, "file with one link per line ('#' comments)");
  }

  std::string text() const {
    if (!inline_code.empty() || file.empty()) return inline_code;
    auto lines = code_lines(read_file(file));
    if (lines.empty()) throw std::runtime_error("no code lines in '" + file + "'");
    return lines[0];
  }

  GaussCode code() const {
    if (inline_code.empty() && file.empty()) {
      throw std::runtime_error("give a code with --code or a file argument");
    }
    return parse_code(text());
  }
};

Presentation presentation_for(const GaussCode& code, Theory theory) {
  switch (theory) {
    case Theory::Group: return wirtinger_group(code);
    case Theory::Quandle: return quandle_presentation(code);
    case Theory::Biquandle: return biquandle_presentation(code);
  }
  throw std::runtime_error("bad theory");
}

Theory theory_from_name(const std::string& name) {
  if (name == "group") return Theory::Group;
  if (name == "quandle") return Theory::Quandle;
  if (name == "biquandle") return Theory::Biquandle;
  throw std::runtime_error("unknown theory '" + name + "'");
}

ColoringTarget target_from_spec(const std::string& spec) {
  if (spec.find(':') != std::string::npos) return builtin_target(spec);
  // Otherwise a table file.
  ParsedTable t = parse_table(read_file(spec));
  switch (t.kind) {
    case TableKind::Group: return ColoringTarget::of(*t.group);
    case TableKind::Quandle: return ColoringTarget::of(*t.quandle);
    case TableKind::Biquandle: return ColoringTarget::of(*t.biquandle);
  }
  throw std::runtime_error("bad table kind");
}

json report_to_json(const InvariantReport& rep) {
  json counts = json::object();
  for (const auto& [name, count] : rep.counts) counts[name] = count;
  return json{{"code", rep.code},
              {"counts", counts},
              {"rank", rep.rank},
              {"genus", rep.genus},
              {"writhe", rep.writhe}};
}

int run_selftest() {
  int mismatches = 0;
  for (const auto& entry : corpus()) {
    GaussCode code = parse_code(entry.text);
    auto check = [&](const std::string& what, long long got, long long want) {
      if (got != want) {
        ++mismatches;
        std::cout << "MISMATCH " << entry.name << " " << what << ": computed " << got
                  << ", recorded " << want << "\n";
      }
    };
    check("genus", carrier_genus(code), entry.record.genus);
    check("writhe", code.writhe(), entry.record.writhe);
    check("rank", abelianization_rank(wirtinger_group(code)), entry.record.rank);
    for (const auto& [target_name, want] : entry.record.counts) {
      ColoringTarget target = builtin_target(target_name);
      Presentation p = presentation_for(code, target.theory);
      check(target_name, static_cast<long long>(count_colorings(p, target)),
            static_cast<long long>(want));
    }
    std::cout << entry.name << ": " << (mismatches ? "checked" : "ok") << "\n";
  }
  if (mismatches) {
    std::cout << mismatches << " mismatches\n";
    return 1;
  }
  std::cout << "all fixture records reproduced\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual links as Gauss codes: presentations, colorings, moves, surfaces"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "parse and validate Gauss codes");
  CodeInput validate_in;
  validate_in.attach(validate);

  // genus
  auto* genus = app.add_subcommand("genus", "carrier genus and realizability");
  CodeInput genus_in;
  genus_in.attach(genus);

  // mirror / reverse
  auto* mirror_cmd = app.add_subcommand("mirror", "mirror image of a code");
  CodeInput mirror_in;
  bool horizontal = false;
  mirror_in.attach(mirror_cmd);
  mirror_cmd->add_flag("--horizontal", horizontal, "flip signs only (keep roles)");

  auto* reverse_cmd = app.add_subcommand("reverse", "reverse orientation of every component");
  CodeInput reverse_in;
  reverse_in.attach(reverse_cmd);

  // present
  auto* present = app.add_subcommand("present", "derive a presentation from a code");
  std::string present_theory;
  bool with_longitude = false, do_simplify = false, do_adconj = false;
  CodeInput present_in;
  present->add_option("theory", present_theory, "group | quandle | biquandle")->required();
  present_in.attach(present);
  present->add_flag("--longitude", with_longitude, "attach the longitude word (knots, group)");
  present->add_flag("--simplify", do_simplify, "eliminate redundant generators");
  present->add_flag("--adconj", do_adconj, "conjugation group of the quandle presentation");

  // color
  auto* color = app.add_subcommand("color", "count colorings into a finite target");
  CodeInput color_in;
  std::string target_spec, color_theory;
  bool surjective = false;
  color_in.attach(color);
  color->add_option("--target", target_spec, "builtin (dihedral:3, alexander:5:2:3, conj:s3, coset:s3:12, group:s3|s4, enum:n:i) or a table file")->required();
  color->add_option("--theory", color_theory, "presentation theory (default: the target's)");
  color->add_flag("--surjective", surjective, "count only surjective colorings");

  // report
  auto* report_cmd = app.add_subcommand("report", "full battery report");
  CodeInput report_in;
  std::string report_format = "text";
  report_in.attach(report_cmd);
  report_cmd->add_option("--format", report_format, "text | json");

  // moves
  auto* moves_cmd = app.add_subcommand("moves", "Reidemeister and forbidden moves");
  moves_cmd->require_subcommand(1);
  auto* sites_cmd = moves_cmd->add_subcommand("sites", "list applicable sites");
  CodeInput sites_in;
  std::string sites_kind;
  sites_in.attach(sites_cmd);
  sites_cmd->add_option("--kind", sites_kind, "R1_add|R1_remove|R2_add|R2_remove|R3|F_forbidden")
      ->required();
  auto* apply_cmd = moves_cmd->add_subcommand("apply", "apply one move");
  CodeInput apply_in;
  std::string site_spec;
  apply_in.attach(apply_cmd);
  apply_cmd->add_option("--site", site_spec, "site spec as printed by 'moves sites'")->required();
  auto* canon_cmd = moves_cmd->add_subcommand("canon", "canonical form of a code");
  CodeInput canon_in;
  canon_in.attach(canon_cmd);
  auto* search_cmd = moves_cmd->add_subcommand("search", "bounded equivalence search");
  std::string code_a, code_b;
  bool welded = false;
  int max_crossings = 6;
  std::uint64_t max_steps = 1000000;
  search_cmd->add_option("codeA", code_a, "first code (inline)")->required();
  search_cmd->add_option("codeB", code_b, "second code (inline)")->required();
  search_cmd->add_flag("--welded", welded, "allow the forbidden move");
  search_cmd->add_option("--max-crossings", max_crossings, "crossing bound (default 6)");
  search_cmd->add_option("--max-steps", max_steps, "generated-code bound (default 1e6)");

  // surface
  auto* surface_cmd = app.add_subcommand("surface", "spun surfaces and marked-curve codes");
  surface_cmd->require_subcommand(1);
  auto* spin_cmd = surface_cmd->add_subcommand("spin", "surface presentation of the spun code");
  CodeInput spin_in;
  spin_in.attach(spin_cmd);
  auto* sgc_cmd = surface_cmd->add_subcommand("sgc", "surface Gauss code of the spun code");
  CodeInput sgc_in;
  sgc_in.attach(sgc_cmd);
  auto* sval_cmd = surface_cmd->add_subcommand("validate", "check a surface Gauss code (JSON)");
  std::string sval_file;
  sval_cmd->add_option("file", sval_file, "surface Gauss code JSON file")->required();
  auto* spres_cmd =
      surface_cmd->add_subcommand("present", "presentation from a surface presentation (JSON)");
  std::string spres_file, spres_theory;
  spres_cmd->add_option("theory", spres_theory, "group | quandle | biquandle")->required();
  spres_cmd->add_option("file", spres_file, "surface presentation JSON file")->required();

  // yoshikawa
  auto* yo_cmd = app.add_subcommand("yoshikawa", "marked diagrams and smoothings");
  yo_cmd->require_subcommand(1);
  auto* smooth_cmd = yo_cmd->add_subcommand("smooth", "A- or B-smooth a marked diagram");
  std::string yo_text, smooth_choice = "A";
  smooth_cmd->add_option("diagram", yo_text, "marked diagram text")->required();
  smooth_cmd->add_option("--choice", smooth_choice, "A | B");
  auto* yval_cmd = yo_cmd->add_subcommand("validate", "screen both smoothings against unlinks");
  std::string yval_text;
  std::uint64_t yval_depth = 20000;
  yval_cmd->add_option("diagram", yval_text, "marked diagram text")->required();
  yval_cmd->add_option("--depth", yval_depth, "search budget per smoothing");
  auto* yscreen_cmd = yo_cmd->add_subcommand("screen", "screen one code against the unlink");
  CodeInput yscreen_in;
  std::uint64_t yscreen_depth = 20000;
  yscreen_in.attach(yscreen_cmd);
  yscreen_cmd->add_option("--depth", yscreen_depth, "search budget");

  // algebra
  auto* alg_cmd = app.add_subcommand("algebra", "finite groups, quandles, biquandles");
  alg_cmd->require_subcommand(1);
  auto* aval_cmd = alg_cmd->add_subcommand("validate", "validate a table file");
  std::string aval_file;
  aval_cmd->add_option("file", aval_file, "table file")->required();
  auto* amake_cmd = alg_cmd->add_subcommand("make", "emit a builtin structure as a table file");
  std::string amake_spec;
  amake_cmd->add_option("spec", amake_spec,
                        "dihedral:n | alexander:n:s:t | conj:s3 | coset:s3:12 | group:s3|s4")
      ->required();
  auto* aenum_cmd = alg_cmd->add_subcommand("enum", "biquandles of order <= 3 up to isomorphism");
  int aenum_order = 2;
  aenum_cmd->add_option("order", aenum_order, "1, 2 or 3")->required();

  // selftest, registry
  app.add_subcommand("selftest", "re-derive every fixture's validation record");
  app.add_subcommand("registry", "print the operation -> subcommand table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      if (!validate_in.file.empty()) {
        for (const auto& line : code_lines(read_file(validate_in.file))) {
          GaussCode c = parse_code(line);
          std::cout << serialize_code(c) << "\n";
        }
      } else {
        std::cout << serialize_code(validate_in.code()) << "\n";
      }
      return 0;
    }
    if (genus->parsed()) {
      GaussCode c = genus_in.code();
      std::cout << carrier_genus(c) << "\n";
      return 0;
    }
    if (mirror_cmd->parsed()) {
      std::cout << serialize_code(mirror(mirror_in.code(), horizontal ? MirrorKind::Horizontal
                                                                      : MirrorKind::Vertical))
                << "\n";
      return 0;
    }
    if (reverse_cmd->parsed()) {
      std::cout << serialize_code(reverse(reverse_in.code())) << "\n";
      return 0;
    }
    if (present->parsed()) {
      GaussCode c = present_in.code();
      Theory th = theory_from_name(present_theory);
      Presentation p = presentation_for(c, th);
      if (do_adconj) {
        if (th != Theory::Quandle) throw std::runtime_error("--adconj needs the quandle theory");
        p = adconj(p);
      }
      if (with_longitude) {
        if (p.theory != Theory::Group) throw std::runtime_error("--longitude needs a group presentation");
        p.longitude = longitude_word(c);
      }
      if (do_simplify) p = simplify(p);
      std::cout << format_presentation(p);
      return 0;
    }
    if (color->parsed()) {
      GaussCode c = color_in.code();
      ColoringTarget target = target_from_spec(target_spec);
      Theory th = color_theory.empty() ? target.theory : theory_from_name(color_theory);
      Presentation p = presentation_for(c, th);
      Count n = surjective ? count_surjective_colorings(p, target) : count_colorings(p, target);
      std::cout << n << "\n";
      return 0;
    }
    if (report_cmd->parsed()) {
      InvariantReport rep = report(report_in.code());
      if (report_format == "json") {
        std::cout << report_to_json(rep).dump(2) << "\n";
      } else if (report_format == "text") {
        std::cout << "code: " << rep.code << "\n";
        for (const auto& [name, count] : rep.counts) std::cout << name << ": " << count << "\n";
        std::cout << "rank: " << rep.rank << "\ngenus: " << rep.genus
                  << "\nwrithe: " << rep.writhe << "\n";
      } else {
        throw std::runtime_error("unknown format '" + report_format + "'");
      }
      return 0;
    }
    if (sites_cmd->parsed()) {
      GaussCode c = sites_in.code();
      for (const auto& site : enumerate_sites(c, move_kind_from_name(sites_kind))) {
        std::cout << format_site(site) << "\n";
      }
      return 0;
    }
    if (apply_cmd->parsed()) {
      GaussCode c = apply_in.code();
      std::cout << serialize_code(apply_move(c, parse_site(site_spec))) << "\n";
      return 0;
    }
    if (canon_cmd->parsed()) {
      std::cout << canonical_string(canon_in.code()) << "\n";
      return 0;
    }
    if (search_cmd->parsed()) {
      auto moves = welded ? welded_moves() : reidemeister_moves();
      SearchResult res =
          search_equivalence(parse_code(code_a), parse_code(code_b), moves, max_crossings, max_steps);
      if (res.found) {
        std::cout << "found path of length " << res.sites.size() << " (steps " << res.steps
                  << ")\n";
        for (size_t i = 0; i < res.sites.size(); ++i) {
          std::cout << format_site(res.sites[i]) << "  ->  " << res.states[i + 1] << "\n";
        }
        return 0;
      }
      std::cout << "exhausted at bounds (steps " << res.steps << ")\n";
      return 0;
    }
    if (spin_cmd->parsed()) {
      std::cout << surface_presentation_to_json(spin(spin_in.code())) << "\n";
      return 0;
    }
    if (sgc_cmd->parsed()) {
      std::cout << surface_gauss_to_json(spin_surface_gauss(sgc_in.code())) << "\n";
      return 0;
    }
    if (sval_cmd->parsed()) {
      SurfaceValidation v = validate_surface_gauss(surface_gauss_from_json(read_file(sval_file)));
      if (v.valid) {
        std::cout << "valid\n";
        return 0;
      }
      for (const auto& viol : v.violations) {
        std::cout << "clause " << viol.clause << ": " << viol.message << "\n";
      }
      return 1;
    }
    if (spres_cmd->parsed()) {
      SurfacePresentation sp = surface_presentation_from_json(read_file(spres_file));
      std::cout << format_presentation(presentation_from_surface(sp, theory_from_name(spres_theory)));
      return 0;
    }
    if (smooth_cmd->parsed()) {
      auto choice = smooth_choice == "B" ? SmoothingChoice::B : SmoothingChoice::A;
      std::cout << serialize_code(smooth(parse_yoshikawa(yo_text), choice)) << "\n";
      return 0;
    }
    if (yval_cmd->parsed()) {
      YoshikawaVerdict v = validate_yoshikawa(parse_yoshikawa(yval_text), yval_depth);
      auto describe = [](const ScreenVerdict& s) -> std::string {
        switch (s.status) {
          case ScreenStatus::CertifiedTrivial:
            return "certified trivial (path length " + std::to_string(s.path.sites.size()) + ")";
          case ScreenStatus::Indistinguishable:
            return "indistinguishable at bounds";
          case ScreenStatus::Separated:
            return "separated: " + s.witness;
        }
        return "?";
      };
      std::cout << "A: " << describe(v.a) << "\nB: " << describe(v.b) << "\n"
                << (v.accepted ? "accepted" : "rejected") << "\n";
      return v.accepted ? 0 : 1;
    }
    if (yscreen_cmd->parsed()) {
      ScreenVerdict s = screen_unlink(yscreen_in.code(), yscreen_depth);
      switch (s.status) {
        case ScreenStatus::CertifiedTrivial:
          std::cout << "certified trivial (path length " << s.path.sites.size() << ")\n";
          break;
        case ScreenStatus::Indistinguishable:
          std::cout << "indistinguishable at bounds\n";
          break;
        case ScreenStatus::Separated:
          std::cout << "separated: " << s.witness << "\n";
          break;
      }
      return 0;
    }
    if (aval_cmd->parsed()) {
      ParsedTable t = parse_table(read_file(aval_file), /*validate=*/false);
      std::vector<AxiomReport> reports;
      switch (t.kind) {
        case TableKind::Group: reports = group_axiom_reports(*t.group); break;
        case TableKind::Quandle: reports = quandle_axiom_reports(t.quandle->star); break;
        case TableKind::Biquandle: reports = biquandle_axiom_reports(*t.biquandle); break;
      }
      bool ok = true;
      for (const auto& r : reports) {
        if (!r.holds) {
          ok = false;
          std::cout << r.axiom << " fails at " << r.detail << "\n";
        }
      }
      std::cout << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }
    if (amake_cmd->parsed()) {
      ColoringTarget t = builtin_target(amake_spec);
      switch (t.theory) {
        case Theory::Group: std::cout << serialize_group(*t.group); break;
        case Theory::Quandle: std::cout << serialize_quandle(*t.quandle); break;
        case Theory::Biquandle: std::cout << serialize_biquandle(*t.biquandle); break;
      }
      return 0;
    }
    if (aenum_cmd->parsed()) {
      auto list = enumerate_biquandles(aenum_order);
      std::cout << list.size() << " biquandles of order " << aenum_order << "\n";
      for (const auto& b : list) std::cout << serialize_biquandle(b);
      return 0;
    }
    if (app.get_subcommand("selftest")->parsed()) return run_selftest();
    if (app.get_subcommand("registry")->parsed()) {
      for (const auto& [op, cmd] : operation_registry()) {
        std::cout << op << " -> " << cmd << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
