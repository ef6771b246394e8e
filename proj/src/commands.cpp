#include "optpovm/commands.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "optpovm/document.hpp"
#include "optpovm/estimator.hpp"
#include "optpovm/spin1.hpp"
#include "optpovm/verifier.hpp"

namespace optpovm::cli {

namespace {

struct Source {
  std::string target;
  std::string in;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* t = cmd->add_option("--target", src.target, "Built-in target name");
  auto* i = cmd->add_option("--in", src.in, "PovmDocument JSON file");
  t->excludes(i);
  i->excludes(t);
}

std::string target_list() {
  std::ostringstream os;
  const auto& names = build_targets();
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  return os.str();
}

Povm load_povm(const Source& src) {
  if (!src.in.empty()) return io::povm_from_json(io::read_json(src.in));
  if (src.target.empty()) throw io::ParseError("one of --target or --in is required");
  auto art = build_target(src.target);
  if (auto* p = std::get_if<Povm>(&art)) return std::move(*p);
  throw UnsupportedTarget("target '" + src.target + "' is a ray catalog, not a POVM");
}

spin32::RayCatalog load_catalog(const Source& src) {
  if (!src.in.empty()) return io::catalog_from_json(io::read_json(src.in));
  if (src.target.empty()) throw io::ParseError("one of --target or --in is required");
  auto art = build_target(src.target);
  if (auto* c = std::get_if<spin32::RayCatalog>(&art)) return std::move(*c);
  throw UnsupportedTarget("target '" + src.target + "' is a POVM, not a ray catalog");
}

void emit(const io::json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << io::dump(doc);
  } else {
    io::write_json(path, doc);
  }
}

// Expected neighbour counts for the built-in catalogs, keyed by Bloch dot.
const std::map<double, int>* expected_spectrum(const std::string& label) {
  static const std::map<double, int> penrose{{-1.0 / 3.0, 12}, {1.0 / 9.0, 27}};
  static const std::map<double, int> set60{{-1.0 / 3.0, 15}, {0.0, 32}, {1.0 / 3.0, 12}};
  if (label == "penrose40") return &penrose;
  if (label == "set60") return &set60;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& build_targets() {
  static const std::vector<std::string> names = {
      "table1-N2",         "table1-N3",         "table1-N4",     "table1-N5",
      "penrose40",         "set60",             "penrose40-povm-N2", "penrose40-povm-N3",
      "set60-povm-N2",     "set60-povm-N3"};
  return names;
}

Artifact build_target(std::string_view name) {
  for (int n = 2; n <= 5; ++n) {
    if (name == "table1-N" + std::to_string(n)) return spin1::build_table1_povm(n).povm;
  }
  if (name == "penrose40") return spin32::penrose_states();
  if (name == "set60") return spin32::set60_states();
  if (name == "penrose40-povm-N2") return spin32::penrose_povm(2);
  if (name == "penrose40-povm-N3") return spin32::penrose_povm(3);
  if (name == "set60-povm-N2") return spin32::set60_povm(2);
  if (name == "set60-povm-N3") return spin32::set60_povm(3);
  throw UnsupportedTarget("unknown target '" + std::string(name) + "'; valid targets: " +
                          target_list());
}

double parse_angle(std::string_view text) {
  const std::string original(text);
  auto bad = [&] { return std::invalid_argument("cannot parse angle '" + original + "' (expected e.g. 0, pi/8, 3pi/8)"); };
  auto parse_uint = [&](std::string_view s) {
    if (s.empty() || s.size() > 6) throw bad();
    long v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw bad();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    if (parse_uint(text) != 0) throw bad();
    return 0.0;
  }
  std::string_view num = text.substr(0, pi_pos);
  if (!num.empty() && num.back() == '*') num.remove_suffix(1);
  const long numerator = num.empty() ? 1 : parse_uint(num);
  std::string_view rest = text.substr(pi_pos + 2);
  long denominator = 1;
  if (!rest.empty()) {
    if (rest.front() != '/') throw bad();
    denominator = parse_uint(rest.substr(1));
    if (denominator == 0) throw bad();
  }
  return std::numbers::pi * static_cast<double>(numerator) / static_cast<double>(denominator);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal spin-1 and spin-3/2 state-estimation POVMs", "optpovm"};
  app.require_subcommand(1);

  Source src;
  std::string out_path;
  std::string csv_path;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  double tolerance = kAggregateTol;
  std::string polytope_name;
  std::vector<std::string> angle_text;
  int copies = 0;

  auto* build = app.add_subcommand("build", "Write a built-in POVM or ray catalog as JSON");
  build->add_option("--target", src.target, "One of: " + target_list())->required();
  build->add_option("--out", out_path, "Output JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Check completeness, the scalar identity and, for spin-3/2, the moment hierarchy");
  add_source(verify, src);
  verify->add_option("--trials", trials, "Random states for the scalar identity")->default_val(1000);
  verify->add_option("--seed", seed, "Random seed")->required();
  verify->add_option("--tolerance", tolerance, "Residual tolerance")->default_val(kAggregateTol);
  verify->add_option("--out", out_path, "Report JSON file (stdout if omitted)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimation of the average fidelity");
  add_source(sim, src);
  sim->add_option("--trials", trials, "Number of trials")->default_val(100000);
  sim->add_option("--seed", seed, "Random seed")->required();
  sim->add_option("--shards", shards, "Independent random streams run in parallel")->default_val(1);
  sim->add_option("--out", out_path, "Report JSON file (stdout if omitted)");
  sim->add_option("--csv", csv_path, "Per-trial CSV file");

  auto* solve = app.add_subcommand("solve-weights", "Solve shell weights for a list of polar angles");
  solve->add_option("--polytope", polytope_name, "cell24 or cell600")->required();
  solve->add_option("--angles", angle_text, "Comma-separated angles, e.g. pi/4,pi/2,0")
      ->required()
      ->delimiter(',');
  solve->add_option("-N,--copies", copies, "Number of copies")->required();
  solve->add_option("--out", out_path, "Report JSON file (stdout if omitted)");

  auto* spectrum = app.add_subcommand("spectrum", "Histogram of pairwise Bloch dot products of a ray catalog");
  add_source(spectrum, src);
  spectrum->add_option("--out", out_path, "Report JSON file (stdout if omitted)");

  std::vector<const char*> argv{"optpovm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (build->parsed()) {
      auto art = build_target(src.target);
      if (auto* p = std::get_if<Povm>(&art)) {
        io::write_json(out_path, io::povm_to_json(*p));
        out << p->id << ": " << p->elements.size() << " elements, weight sum " << p->weight_sum()
            << "\n";
      } else {
        const auto& c = std::get<spin32::RayCatalog>(art);
        io::write_json(out_path, io::catalog_to_json(c));
        out << c.label << ": " << c.states.size() << " states\n";
      }
      return kPass;
    }

    if (verify->parsed()) {
      if (trials < 1) throw std::invalid_argument("--trials must be positive");
      const Povm povm = load_povm(src);
      const auto rep = verify_povm(povm, static_cast<int>(trials), seed, tolerance);
      emit(io::report_to_json(rep), out_path, out);
      if (!out_path.empty()) {
        out << rep.povm_id << ": " << (rep.pass() ? "PASS" : "FAIL") << " (worst residual "
            << rep.worst() << ")\n";
      }
      return rep.pass() ? kPass : kVerificationFailure;
    }

    if (sim->parsed()) {
      const Povm povm = load_povm(src);
      EstimationConfig cfg;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.shards = shards;
      cfg.record_trials = !csv_path.empty();
      const auto rep = simulate(povm, cfg);
      emit(io::estimation_to_json(rep), out_path, out);
      if (!csv_path.empty()) io::write_trials_csv(csv_path, rep.per_trial);
      return kPass;
    }

    if (solve->parsed()) {
      const auto kind = parse_polytope(polytope_name);
      std::vector<double> angles;
      for (const auto& a : angle_text) angles.push_back(parse_angle(a));
      const auto sol = spin1::solve_weights(kind, angles, copies);
      emit(io::weights_to_json(kind, angle_text, angles, copies, sol), out_path, out);
      return kPass;
    }

    if (spectrum->parsed()) {
      const auto cat = load_catalog(src);
      const auto dots = spin32::overlap_spectrum(cat);
      const auto* want = expected_spectrum(cat.label);
      std::vector<spin32::SpectrumDeviation> devs;
      if (want) devs = spin32::spectrum_deviations(cat, dots, *want);
      emit(io::spectrum_to_json(cat, dots, want ? &devs : nullptr), out_path, out);
      for (const auto& d : devs) err << "deviation: state " << d.name << " (#" << d.index << ")\n";
      return devs.empty() ? kPass : kVerificationFailure;
    }
  } catch (const io::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionMismatch& e) {
    err << "dimension mismatch: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UnsupportedTarget& e) {
    err << e.what() << "\n";
    return kUnsupported;
  } catch (const spin1::AngularDependenceError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::out_of_range& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const spin1::InfeasibleWeightsError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const UnverifiedPovm& e) {
    err << "refused: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace optpovm::cli
