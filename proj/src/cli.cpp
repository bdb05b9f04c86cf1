#include "primesrc/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "primesrc/catalog.hpp"
#include "primesrc/elements.hpp"
#include "primesrc/expr.hpp"
#include "primesrc/ideals.hpp"
#include "primesrc/primeness.hpp"
#include "primesrc/serialize.hpp"
#include "primesrc/theorems.hpp"

namespace primesrc {

namespace {

struct RingArgs {
  std::string expr;
  std::string file;
};

void add_ring_options(CLI::App* cmd, RingArgs& args) {
  auto* ring = cmd->add_option("--ring", args.expr, "Ring expression, e.g. \"2Z(16)\"");
  auto* file = cmd->add_option("--ring-file", args.file, "Ring file (JSON tables)");
  ring->excludes(file);
  file->excludes(ring);
}

FiniteRing load_ring(const RingArgs& args, const Limits& limits) {
  if (!args.file.empty()) return ring_from_json(load_json_file(args.file), limits);
  if (args.expr.empty()) throw CLI::ValidationError("--ring", "one of --ring or --ring-file is required");
  return ring_from_text(args.expr, limits);
}

Element element_by_label(const FiniteRing& r, const std::string& label) {
  std::string compact;
  for (char c : label) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  auto x = r.find_label(compact);
  if (!x) throw Error("unknown element label '" + label + "' in " + r.descriptor());
  return *x;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_profile(std::ostream& out, const FiniteRing& r, const ElementProfile& p) {
  std::string zd = p.left_zero_divisor && p.right_zero_divisor ? "two-sided"
                   : p.left_zero_divisor                       ? "left"
                   : p.right_zero_divisor                      ? "right"
                                                               : "no";
  out << r.label(p.element) << ": idempotent=" << yes_no(p.idempotent) << " nilpotency_index="
      << (p.nilpotency_index ? std::to_string(*p.nilpotency_index) : std::string("-"))
      << " zero_divisor=" << zd << " unit=" << yes_no(p.unit) << " central=" << yes_no(p.central)
      << '\n';
}

void print_report_text(std::ostream& out, const VerificationReport& report, bool verbose) {
  const Summary s = report.summary();
  out << report.ring << ": pass=" << s.pass << " fail=" << s.fail << " skip=" << s.skip;
  if (report.error) out << " error: " << *report.error;
  out << '\n';
  for (const auto& e : report.entries) {
    if (!verbose && e.status() != Status::fail) continue;
    out << "  [" << to_string(e.status()) << "] " << to_string(e.theorem) << " (" << e.context
        << "): " << e.notes << '\n';
    for (const auto& w : e.witnesses) out << "      witness: " << w << '\n';
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ring toolkit: primeness sources, ideals, and exhaustive theorem checks",
               "primesrc"};
  app.require_subcommand(1);
  Limits limits;
  app.add_option("--cap", limits.max_order, "Maximum ring order")->capture_default_str();

  // compute
  RingArgs compute_ring;
  std::string subset_text = "*";
  std::string a_label;
  std::string kind_text = "p";
  bool compute_json = false;
  auto* compute = app.add_subcommand("compute", "Compute P_R(A), S_R^a(A) or S_R(A)");
  add_ring_options(compute, compute_ring);
  compute->add_option("--subset", subset_text, "Subset A, \"{l1, l2}\" or \"*\"")
      ->capture_default_str();
  compute->add_option("--a", a_label, "Parameter element a (for --kind s)");
  compute->add_option("--kind", kind_text, "p | s | semi")
      ->check(CLI::IsMember({"p", "s", "semi"}))
      ->capture_default_str();
  compute->add_flag("--json", compute_json, "JSON output");
  compute->add_flag("--text", "Text output (default)");

  // classify
  RingArgs classify_ring;
  std::string element_label;
  bool classify_json = false;
  auto* classify = app.add_subcommand("classify", "Classify ring elements");
  add_ring_options(classify, classify_ring);
  classify->add_option("--element", element_label, "Single element label");
  classify->add_flag("--json", classify_json, "JSON output");

  // ideals
  RingArgs ideals_ring;
  bool prime_only = false, radical = false, ideals_json = false;
  auto* ideals = app.add_subcommand("ideals", "Enumerate two-sided ideals");
  add_ring_options(ideals, ideals_ring);
  ideals->add_flag("--prime-only", prime_only, "Only prime ideals");
  ideals->add_flag("--radical", radical, "Also print the prime radical");
  ideals->add_flag("--json", ideals_json, "JSON output");

  // verify
  RingArgs verify_ring_args;
  std::vector<std::string> theorem_names;
  std::string battery_file;
  bool verify_json = false, verbose = false;
  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  add_ring_options(verify, verify_ring_args);
  verify->add_option("--theorem", theorem_names, "Theorem id (repeatable)");
  auto* battery_opt = verify->add_option("--battery", battery_file, "Battery config (JSON)");
  bool default_battery_flag = false;
  auto* default_opt =
      verify->add_flag("--default-battery", default_battery_flag, "Run the built-in battery");
  battery_opt->excludes("--ring")->excludes("--ring-file")->excludes(default_opt);
  default_opt->excludes("--ring")->excludes("--ring-file");
  verify->add_flag("--json", verify_json, "JSON output");
  verify->add_flag("-v,--verbose", verbose, "List every entry, not only failures");

  // catalog
  std::size_t max_order = 0;
  std::string out_path;
  bool dedup = false;
  auto* catalog = app.add_subcommand("catalog", "Write the cyclic-ring catalog (JSON lines)");
  catalog->add_option("--max-order", max_order, "Largest ring order")->required();
  catalog->add_option("--out", out_path, "Output file")->required();
  catalog->add_flag("--dedup-iso", dedup, "Keep one ring per isomorphism class");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const FiniteRing r = load_ring(compute_ring, limits);
      const Subset subset_a = parse_subset(subset_text, r);
      const SourceKind kind = kind_text == "p"   ? SourceKind::primeness
                              : kind_text == "s" ? SourceKind::s_set
                                                 : SourceKind::semiprimeness;
      std::optional<Element> a;
      if (!a_label.empty()) a = element_by_label(r, a_label);
      if (kind == SourceKind::s_set && !a) throw Error("--kind s needs --a LABEL");
      const SourceResult result = compute_source(r, kind, subset_a, a);
      if (compute_json) {
        out << source_to_json(r, result).dump(2) << '\n';
      } else {
        out << format_subset(r, result.members) << '\n';
      }
      return kExitOk;
    }

    if (classify->parsed()) {
      const FiniteRing r = load_ring(classify_ring, limits);
      std::vector<ElementProfile> profiles;
      if (!element_label.empty()) {
        profiles.push_back(classify_element(r, element_by_label(r, element_label)));
      } else {
        profiles = classify_all(r);
      }
      if (classify_json) {
        Json arr = Json::array();
        for (const auto& p : profiles) arr.push_back(profile_to_json(r, p));
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& p : profiles) print_profile(out, r, p);
      }
      return kExitOk;
    }

    if (ideals->parsed()) {
      const FiniteRing r = load_ring(ideals_ring, limits);
      const auto list = prime_only ? enumerate_prime_ideals(r, limits) : enumerate_ideals(r, limits);
      if (ideals_json) {
        Json j;
        Json arr = Json::array();
        for (const auto& i : list) arr.push_back(subset_to_json(r, i));
        j[prime_only ? "prime_ideals" : "ideals"] = std::move(arr);
        if (radical) j["radical"] = subset_to_json(r, prime_radical(r, limits));
        out << j.dump(2) << '\n';
      } else {
        for (const auto& i : list) out << format_subset(r, i) << '\n';
        if (radical) out << "radical: " << format_subset(r, prime_radical(r, limits)) << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      BatteryConfig config;
      if (default_battery_flag) {
        config = default_battery();
        config.limits = limits;
      } else if (!battery_file.empty()) {
        config = battery_from_json(load_json_file(battery_file));
        if (limits.max_order != kDefaultMaxOrder) config.limits.max_order = limits.max_order;
      } else {
        config.limits = limits;
        if (!verify_ring_args.file.empty()) {
          auto spec = custom_spec_from_json(load_json_file(verify_ring_args.file));
          spec.name = verify_ring_args.file;
          config.rings.emplace_back(std::move(spec));
        } else if (!verify_ring_args.expr.empty()) {
          parse_ring_expr(verify_ring_args.expr);  // surface syntax errors as usage errors
          config.rings.emplace_back(verify_ring_args.expr);
        } else {
          throw CLI::ValidationError("verify", "one of --ring, --ring-file or --battery is required");
        }
      }
      for (const auto& name : theorem_names) {
        auto id = theorem_from_string(name);
        if (!id) throw CLI::ValidationError("--theorem", "unknown theorem id '" + name + "'");
        config.theorems.insert(*id);
      }
      const auto reports = run_battery(config);
      bool failed = false;
      if (verify_json) {
        Json arr = Json::array();
        for (const auto& rep : reports) arr.push_back(report_to_json(rep));
        out << arr.dump(2) << '\n';
      }
      Summary total;
      for (const auto& rep : reports) {
        const Summary s = rep.summary();
        total.pass += s.pass;
        total.fail += s.fail;
        total.skip += s.skip;
        failed = failed || s.fail > 0;
        if (!verify_json) print_report_text(out, rep, verbose);
      }
      if (!verify_json) {
        out << "total: pass=" << total.pass << " fail=" << total.fail << " skip=" << total.skip
            << '\n';
      }
      return failed ? kExitVerificationFailed : kExitOk;
    }

    if (catalog->parsed()) {
      const std::size_t n = build_catalog(max_order, out_path, dedup, limits);
      out << "wrote " << n << " entries to " << out_path << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.message() << " (offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace primesrc
