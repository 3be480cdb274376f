#include "acm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "acm/classify.hpp"
#include "acm/divcalc.hpp"
#include "acm/error.hpp"
#include "acm/projgeom.hpp"
#include "acm/repro.hpp"
#include "json.hpp"

namespace acm {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ModelPtr resolve_model(const std::string& name, const std::string& file) {
  if (!file.empty()) return model_from_json_text(read_file(file));
  return builtin_model(name.empty() ? "fermat5" : name);
}

// Atlas name such as "L[01|23](0,0)" or a line literal.
Line resolve_line(const std::string& text, const ModelPtr& model) {
  if (auto idx = model->generator_index(text)) {
    if (const AtlasLine* a = model->atlas_line(*idx)) return a->line;
  }
  if (!text.empty() && text[0] == 'L' && text.find('[') != std::string::npos &&
      text.find(';') == std::string::npos) {
    throw ParseError("'" + text + "' is not a standard line of " + model->name);
  }
  return parse_line(text);
}

Decomposition parse_parts(const ModelPtr& model, const std::vector<std::string>& specs) {
  Decomposition d;
  int n = 0;
  for (const auto& s : specs) {
    ++n;
    auto eq = s.find('=');
    std::string label = eq == std::string::npos ? "part" + std::to_string(n) : s.substr(0, eq);
    std::string expr = eq == std::string::npos ? s : s.substr(eq + 1);
    d.parts.push_back({parse_divisor(model, expr), 1, label, std::nullopt});
  }
  return d;
}

std::string default_model_for(PropId p) {
  return witness_spec(p).family == SurfaceFamily::quartic ? "fermat4" : "fermat5";
}

void print_table(const std::string& which, bool json, std::ostream& out) {
  ojson rows = ojson::array();
  std::ostringstream text;
  if (which == "thm1.2" || which == "thm1.3") {
    const auto& table = which == "thm1.2" ? acm_table() : nonacm_table();
    text << std::left << std::setw(4) << "k" << std::setw(5) << "C.D" << std::setw(13) << "rule"
         << (which == "thm1.3" ? "prop" : "") << "\n";
    for (const auto& r : table) {
      text << std::setw(4) << r.k << std::setw(5) << r.degree << std::setw(13) << r.rule
           << (r.prop ? to_string(*r.prop) : "") << "\n";
      rows.push_back({{"k", r.k},
                      {"degree", r.degree},
                      {"rule", r.rule},
                      {"prop", r.prop ? ojson(to_string(*r.prop)) : ojson()}});
    }
  } else if (which == "prop2.1") {
    text << std::left << std::setw(5) << "P_a" << std::setw(5) << "C.D" << std::setw(13) << "status"
         << "rule\n";
    for (int g = 0; g <= 3; ++g) {
      for (int d = 1; d <= 6; ++d) {
        Verdict v = classify_numeric(SurfaceFamily::quartic, d, g);
        if (v.status != Status::acm && v.status != Status::conditional) continue;
        text << std::setw(5) << g << std::setw(5) << d << std::setw(13) << to_string(v.status)
             << v.rule << "\n";
        rows.push_back({{"genus", g}, {"degree", d}, {"status", to_string(v.status)}, {"rule", v.rule}});
      }
    }
  } else {
    throw ParseError("unknown table '" + which + "'; known: thm1.2 thm1.3 prop2.1");
  }
  if (json) {
    out << rows.dump(2) << "\n";
  } else {
    out << text.str();
  }
}

struct Options {
  bool json = false;

  std::string build_kind;
  int degree = 5;
  std::string model_name;
  std::string model_file;

  std::string line_a, line_b;
  std::string expr;

  std::string kind;
  std::int64_t deg = 0;
  std::int64_t genus = 0;
  bool have_deg = false, have_genus = false;
  std::string target;

  std::string prop;
  std::int64_t bound = 10;
  std::vector<std::string> parts;

  std::string example;
  std::string table;
};

int run_verdict(const Verdict& v, bool json, std::ostream& out) {
  out << (json ? render_json(v) + "\n" : render_report(v));
  return v.status == Status::invalid ? kExitFailure : kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor classes and aCM curve classification on surfaces in P^3", "acmtool"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "emit JSON");

  auto* model = app.add_subcommand("model", "build, show or validate a surface model");
  model->require_subcommand(1);
  auto* model_build = model->add_subcommand("build", "build a model and print its summary");
  model_build->add_option("kind", o.build_kind, "fermat or a builtin model name")->required();
  model_build->add_option("--degree", o.degree, "Fermat degree (4 or 5)");
  auto* model_show_cmd = model->add_subcommand("show", "print generators and Gram rows");
  model_show_cmd->add_option("name", o.model_name, "builtin model name");
  model_show_cmd->add_option("--file", o.model_file, "custom model JSON");
  auto* model_validate_cmd = model->add_subcommand("validate", "run the model consistency checks");
  model_validate_cmd->add_option("name", o.model_name, "builtin model name");
  model_validate_cmd->add_option("--file", o.model_file, "custom model JSON");

  auto* lines = app.add_subcommand("lines", "standard lines of a Fermat surface");
  lines->require_subcommand(1);
  auto* lines_list = lines->add_subcommand("list", "list the line atlas");
  lines_list->add_option("--degree", o.degree, "Fermat degree (4 or 5)");

  auto* intersect = app.add_subcommand("intersect", "incidence of two lines");
  intersect->add_option("a", o.line_a, "atlas name or 'line: f ; g'")->required();
  intersect->add_option("b", o.line_b, "atlas name or 'line: f ; g'")->required();
  intersect->add_option("--degree", o.degree, "Fermat degree used to resolve atlas names");

  auto* invariants = app.add_subcommand("invariants", "degree, genus, chi and k of a class");
  invariants->add_option("expr", o.expr, "divisor expression")->required();
  invariants->add_option("--model", o.model_name, "builtin model (default fermat5)");
  invariants->add_option("--model-file", o.model_file, "custom model JSON");

  auto* classify = app.add_subcommand("classify", "classify by degree and genus");
  classify->add_option("--kind", o.kind, "quartic or quintic");
  classify->add_option("--deg", o.deg, "degree C.D")->each([&](const std::string&) { o.have_deg = true; });
  classify->add_option("--genus", o.genus, "arithmetic genus")
      ->each([&](const std::string&) { o.have_genus = true; });
  classify->add_option("--target", o.target, "divisor expression instead of --deg/--genus");
  classify->add_option("--model", o.model_name, "builtin model for --target (default fermat5)");
  classify->add_option("--model-file", o.model_file, "custom model JSON for --target");

  auto* witness = app.add_subcommand("witness", "search for or check a non-aCM witness");
  witness->require_subcommand(1);
  auto* wsearch = witness->add_subcommand("search", "bounded search over H and the line atlas");
  auto* wcheck = witness->add_subcommand("check", "check a given decomposition");
  for (auto* w : {wsearch, wcheck}) {
    w->add_option("--prop", o.prop, "P2.2 P4.4 P4.5 P4.6 P4.7 P4.8 C4.2 C4.3")->required();
    w->add_option("--target", o.target, "divisor expression")->required();
    w->add_option("--model", o.model_name, "builtin model (default by proposition)");
    w->add_option("--model-file", o.model_file, "custom model JSON");
  }
  wsearch->add_option("--bound", o.bound, "degree bound for the twisted class");
  wcheck->add_option("--part", o.parts, "witness part, 'label=expr' or 'expr'")->required();

  auto* repro = app.add_subcommand("repro", "reproduce the worked examples");
  repro->require_subcommand(1);
  auto* repro_run = repro->add_subcommand("run", "run one example");
  repro_run->add_option("id", o.example, "example id, e.g. ex4.4")->required();
  auto* repro_all = repro->add_subcommand("all", "run every example");

  auto* table = app.add_subcommand("table", "print a classification table");
  table->add_option("which", o.table, "thm1.2, thm1.3 or prop2.1")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (model_build->parsed()) {
      ModelPtr m;
      if (o.build_kind == "fermat") {
        m = fermat_model(o.degree);
      } else {
        m = builtin_model(o.build_kind);
      }
      auto report = model_validate(*m);
      if (o.json) {
        out << model_to_json_text(*m) << "\n";
      } else {
        out << "model " << m->name << " kind=" << to_string(m->kind) << " degree=" << m->degree
            << " rank=" << m->rank() << " lines=" << m->lines.size()
            << " planes=" << m->planes.size() << "\n";
        out << "validation: " << report.checks.size() << " checks, "
            << report.violations.size() << " violations\n";
      }
      return report.ok() ? kExitOk : kExitFailure;
    }
    if (model_show_cmd->parsed() || model_validate_cmd->parsed()) {
      if (o.model_name.empty() && o.model_file.empty()) {
        throw ParseError("give a model name or --file");
      }
      ModelPtr m = resolve_model(o.model_name, o.model_file);
      if (model_show_cmd->parsed()) {
        out << (o.json ? model_to_json_text(*m) + "\n" : model_show(*m));
        return kExitOk;
      }
      auto report = model_validate(*m);
      if (o.json) {
        out << ojson{{"ok", report.ok()}, {"checks", report.checks},
                     {"violations", report.violations}}.dump(2)
            << "\n";
      } else {
        for (const auto& c : report.checks) {
          bool bad = std::find(report.violations.begin(), report.violations.end(), c) !=
                     report.violations.end();
          out << "  check " << c << ": " << (bad ? "FAILED" : "ok") << "\n";
        }
        out << (report.ok() ? "VALID" : "INVALID") << "\n";
      }
      return report.ok() ? kExitOk : kExitFailure;
    }
    if (lines_list->parsed()) {
      ModelPtr m = fermat_model(o.degree);
      ojson arr = ojson::array();
      for (const auto& l : m->lines) {
        if (o.json) {
          arr.push_back({{"name", l.name}, {"line", l.line.to_string()}});
        } else {
          out << l.name << "  " << l.line.to_string() << "\n";
        }
      }
      if (o.json) out << arr.dump(2) << "\n";
      return kExitOk;
    }
    if (intersect->parsed()) {
      ModelPtr m = fermat_model(o.degree);
      Line a = resolve_line(o.line_a, m);
      Line b = resolve_line(o.line_b, m);
      Incidence inc = lines_meet(a, b);
      if (o.json) {
        out << ojson{{"incidence", to_string(inc)},
                     {"determinant", stacked_determinant(a, b).to_string()}}
                   .dump(2)
            << "\n";
      } else {
        out << to_string(inc) << "\n";
      }
      return kExitOk;
    }
    if (invariants->parsed()) {
      ModelPtr m = resolve_model(o.model_name, o.model_file);
      DivClass d = parse_divisor(m, o.expr);
      const auto deg = degree(d);
      const auto g = genus(d);
      const auto x = chi(d);
      const auto k = deg + 1 - g;
      if (o.json) {
        out << ojson{{"class", d.to_string()}, {"model", m->name}, {"deg", deg},
                     {"genus", g},           {"chi", x},          {"k", k},
                     {"self", self_intersection(d)}}
                   .dump(2)
            << "\n";
      } else {
        out << "class: " << d.to_string() << "\n"
            << "deg: " << deg << "\n"
            << "P_a: " << g << "\n"
            << "chi: " << x << "\n"
            << "k: " << k << "\n"
            << "D^2: " << self_intersection(d) << "\n";
      }
      return kExitOk;
    }
    if (classify->parsed()) {
      if (!o.target.empty()) {
        ModelPtr m = resolve_model(o.model_name, o.model_file);
        return run_verdict(classify_class(parse_divisor(m, o.target)), o.json, out);
      }
      auto fam = parse_family(o.kind);
      if (!fam) throw ParseError("--kind must be quartic or quintic");
      if (!o.have_deg || !o.have_genus) throw ParseError("--deg and --genus are required");
      return run_verdict(classify_numeric(*fam, o.deg, o.genus), o.json, out);
    }
    if (wsearch->parsed() || wcheck->parsed()) {
      auto prop = parse_prop_id(o.prop);
      if (!prop) throw ParseError("unknown proposition '" + o.prop + "'");
      ModelPtr m = resolve_model(o.model_name.empty() ? default_model_for(*prop) : o.model_name,
                                 o.model_file);
      DivClass target = parse_divisor(m, o.target);
      if (wsearch->parsed()) {
        return run_verdict(search_witness(*prop, target, o.bound).verdict, o.json, out);
      }
      return run_verdict(check_witness(*prop, target, parse_parts(m, o.parts)), o.json, out);
    }
    if (repro_run->parsed()) {
      Report r = run_example(o.example, Fixtures::standard());
      out << (o.json ? render_json(r) + "\n" : render_report(r));
      return r.ok() ? kExitOk : kExitFailure;
    }
    if (repro_all->parsed()) {
      Summary s = verify_all(example_cases(), Fixtures::standard());
      out << (o.json ? render_json(s) + "\n" : render_summary(s));
      return s.ok() ? kExitOk : kExitFailure;
    }
    if (table->parsed()) {
      print_table(o.table, o.json, out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace acm
