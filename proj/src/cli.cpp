#include "tangles/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tangles/json_io.hpp"
#include "tangles/render.hpp"

namespace tangles {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  if (!file) throw UsageError("write failed: " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Polyform for any artifact file, plus the curve when one is available.
struct Loaded {
  FileKind kind;
  DualPolyform polyform;
  std::optional<Tangle> tangle;
};

Loaded load_any(const Json& j) {
  Loaded l{sniff(j), {}, std::nullopt};
  switch (l.kind) {
    case FileKind::Polyform:
      l.polyform = polyform_from_json(j);
      break;
    case FileKind::Tangle:
      l.tangle = tangle_from_json(j);
      l.polyform = dual_polyform(*l.tangle);
      break;
    case FileKind::Ops:
      l.polyform = replay(ops_from_json(j));
      break;
  }
  return l;
}

ValidityReport full_report(const DualPolyform& p) {
  ValidityReport r = validate(p);
  if (r.combinatorially_valid()) {
    try {
      r.simplicity = check_simple(trace_tangle(p)).simple() ? Simplicity::Simple : Simplicity::NotSimple;
    } catch (const std::invalid_argument&) {
      r.simplicity = Simplicity::NotSimple;
    }
  }
  return r;
}

std::string radius_suffix() { return " (r²)"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangles: circle-arc curves on the square, hexagonal and triangular tilings"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Expand all help");

  unsigned threads = 1;
  double radius = 1.0;
  app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
  app.add_option("--radius", radius, "Circle radius for display (rendering scale and area footnote)")
      ->check(CLI::PositiveNumber);

  std::string input;
  std::string output;
  std::string tiling_name;
  std::size_t max_size = 0;
  std::size_t budget = 0;
  bool oracle = false;
  std::string jsonl;
  double scale = 40.0;
  bool show_polyform = false;
  bool show_dual_graph = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a polyform; prints the validity report");
  validate_cmd->add_option("file", input, "Polyform JSON")->required();

  auto* build_cmd = app.add_subcommand("build", "Trace the Tangle of a polyform");
  build_cmd->add_option("file", input, "Polyform JSON")->required();
  build_cmd->add_option("-o,--output", output, "Tangle JSON (default stdout)");

  auto* info_cmd = app.add_subcommand("info", "Metrics and exact area of a polyform, Tangle or op sequence");
  info_cmd->add_option("file", input, "Any artifact JSON")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate Tangles up to a size");
  enumerate_cmd->add_option("--tiling", tiling_name, "square, hexagonal or triangular")->required();
  enumerate_cmd->add_option("--max-size", max_size, "Largest size m")->required();
  enumerate_cmd->add_flag("--oracle", oracle, "Use the brute-force generator");
  enumerate_cmd->add_option("--jsonl", jsonl, "Write one record per Tangle here");
  enumerate_cmd->add_option("--budget", budget, "Abort past this many forms (0 = no limit)");

  auto* deconstruct_cmd = app.add_subcommand("deconstruct", "Find an operation sequence building a polyform");
  deconstruct_cmd->add_option("file", input, "Polyform JSON")->required();
  deconstruct_cmd->add_option("-o,--output", output, "Ops JSON (default stdout)");

  auto* replay_cmd = app.add_subcommand("replay", "Apply an operation sequence to its circle");
  replay_cmd->add_option("file", input, "Ops JSON")->required();
  replay_cmd->add_option("-o,--output", output, "Polyform JSON (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check every length, area and construction identity on an enumeration");
  verify_cmd->add_option("--tiling", tiling_name, "square, hexagonal or triangular")->required();
  verify_cmd->add_option("--max-size", max_size, "Largest size m")->required();
  verify_cmd->add_option("--budget", budget, "Abort past this many forms (0 = no limit)");

  auto* render_cmd = app.add_subcommand("render", "Draw a polyform, Tangle or op sequence as SVG");
  render_cmd->add_option("file", input, "Any artifact JSON")->required();
  render_cmd->add_option("-o,--output", output, "SVG file (default stdout)");
  render_cmd->add_option("--scale", scale, "Pixels per radius")->check(CLI::PositiveNumber);
  render_cmd->add_flag("--show-polyform", show_polyform, "Draw cells and vertex colors under the curve");
  render_cmd->add_flag("--show-dual-graph", show_dual_graph, "Overlay the dual graph (square)");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
    sub->add_option("--radius", radius, "Circle radius for display")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*validate_cmd) {
      const DualPolyform p = polyform_from_json(read_json(input));
      const ValidityReport r = full_report(p);
      out << dump(to_json(r));
      return r.valid() ? kExitOk : kExitDomain;
    }
    if (*build_cmd) {
      const DualPolyform p = polyform_from_json(read_json(input));
      const ValidityReport r = full_report(p);
      if (!r.valid()) {
        err << "error: polyform is not valid\n" << to_json(r).dump(2) << "\n";
        return kExitDomain;
      }
      write_text(output, dump(to_json(trace_tangle(p))), out);
      return kExitOk;
    }
    if (*info_cmd) {
      const Loaded l = load_any(read_json(input));
      const ValidityReport r = full_report(l.polyform);
      if (!r.combinatorially_valid()) {
        err << "error: polyform is not valid\n" << to_json(r).dump(2) << "\n";
        return kExitDomain;
      }
      const Tangle t = l.tangle ? *l.tangle : trace_tangle(l.polyform);
      const TangleMetrics m = metrics(t, l.polyform);
      const AreaValue area = enclosed_area(t);
      Json j{{"tiling", std::string(name(t.tiling))}};
      const Json mj = to_json(m);
      for (const auto& [k, v] : mj.items()) j[k] = v;
      j["gauss_bonnet"] = check_gauss_bonnet(t);
      j["simple"] = check_simple(t).simple();
      j["length_congruence"] = length_congruence_holds(t.tiling, m.length);
      j["area"] = to_json(area);
      j["area_exact"] = to_string(area) + radius_suffix();
      j["area_approx"] = approx(area);
      if (radius != 1.0) {
        const double value = area.alg.to_double() + area.pi.to_double() * std::acos(-1.0);
        j["area_at_radius"] = format_number(value * radius * radius);
      }
      j["area_formula_holds"] = area == area_formula(t.tiling, m.size);
      Json bulbs = Json::array();
      for (auto b : bulb_sizes(t)) bulbs.push_back(b);
      j["bulbs"] = std::move(bulbs);
      out << dump(j);
      return kExitOk;
    }
    if (*enumerate_cmd || *verify_cmd) {
      const Tiling t = parse_tiling(tiling_name);
      const EnumerateOptions options{threads, budget};
      if (*enumerate_cmd) {
        const EnumerationTable table = oracle ? oracle_table(t, max_size, options) : enumerate_by_ops(t, max_size, options);
        std::ostringstream records;
        for (const auto& level : table.by_size) {
          for (const auto& form : level) records << enumeration_record(form).dump() << "\n";
        }
        Json summary = enumeration_summary(table);
        if (!jsonl.empty()) {
          write_text(jsonl, records.str(), out);
          out << dump(summary);
        } else {
          out << records.str() << Json{{"summary", summary}}.dump() << "\n";
        }
        if (!table.complete) {
          err << "error: budget exceeded; the table is partial\n";
          return kExitUsage;
        }
        return kExitOk;
      }
      const EnumerationTable table = enumerate_by_ops(t, max_size, options);
      const VerificationReport report = verify_corollaries(table, threads);
      const Json summary = verification_summary(report, table);
      out << dump(summary);
      if (!table.complete) {
        err << "error: budget exceeded; verification covers a partial table\n";
        return kExitUsage;
      }
      return summary.at("all_pass").get<bool>() ? kExitOk : kExitDomain;
    }
    if (*deconstruct_cmd) {
      const DualPolyform p = polyform_from_json(read_json(input));
      const ValidityReport r = full_report(p);
      if (!r.valid()) {
        err << "error: polyform is not valid\n" << to_json(r).dump(2) << "\n";
        return kExitDomain;
      }
      try {
        write_text(output, dump(to_json(deconstruct(p))), out);
      } catch (const DeconstructionError& e) {
        err << "error: " << e.what() << "\nresidual: " << to_json(e.residual).dump() << "\n";
        return kExitDomain;
      }
      return kExitOk;
    }
    if (*replay_cmd) {
      const OpSequence seq = ops_from_json(read_json(input));
      try {
        write_text(output, dump(to_json(replay(seq))), out);
      } catch (const ReplayError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
      }
      return kExitOk;
    }
    if (*render_cmd) {
      const Loaded l = load_any(read_json(input));
      RenderOptions opts;
      opts.scale = scale * radius;
      opts.show_polyform = show_polyform;
      opts.show_dual_graph = show_dual_graph;
      const ValidityReport r = full_report(l.polyform);
      if (!r.combinatorially_valid()) {
        write_text(output, render_polyform_svg(l.polyform, opts, &r), out);
        err << "error: polyform is not valid; drew the cells only\n";
        return kExitDomain;
      }
      const Tangle t = l.tangle ? *l.tangle : trace_tangle(l.polyform);
      write_text(output, render_svg(t, &l.polyform, opts), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ReplayError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    // unknown tiling names come from parse_tiling before any domain work
    if (std::string(e.what()).find("tiling") != std::string::npos && !tiling_name.empty()) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace tangles
