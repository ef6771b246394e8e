// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "optpovm/commands.hpp"
#include "optpovm/estimator.hpp"
#include "optpovm/spin1.hpp"
#include "optpovm/spin32.hpp"
#include "optpovm/verifier.hpp"

using namespace optpovm;

namespace {

constexpr double pi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<Povm> shipped_povms() {
  std::vector<Povm> all;
  for (int n = 2; n <= 5; ++n) all.push_back(spin1::build_table1_povm(n).povm);
  for (int n : {2, 3}) {
    all.push_back(spin32::penrose_povm(n));
    all.push_back(spin32::set60_povm(n));
  }
  return all;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome completeness() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool ok = true;
  for (const auto& p : shipped_povms()) {
    const auto rep = verify_completeness(p.elements, p.copies);
    const double r = rep.find("completeness")->residual;
    worst = std::max(worst, r);
    ok = ok && r < 1e-9;
  }
  const double t = seconds_since(t0);
  return {ok && t < 5.0, "max Frobenius residual " + fmt(worst) + ", " + fmt(t) + " s (limit 5 s)"};
}

Outcome scalar_identity() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool ok = true;
  std::uint64_t seed = 1000;
  for (const auto& p : shipped_povms()) {
    Rng rng(seed++);
    const double r = verify_scalar_identity(p.elements, p.copies, 1000, rng).worst();
    worst = std::max(worst, r);
    ok = ok && r < 1e-9;
  }
  const double t = seconds_since(t0);
  return {ok && t < 10.0, "max deviation " + fmt(worst) + " over 1000 states each, " + fmt(t) + " s (limit 10 s)"};
}

Outcome weight_sums() {
  const std::map<std::string, double> want = {
      {"table1-N2", 6},          {"table1-N3", 10},         {"table1-N4", 15},
      {"table1-N5", 21},         {"penrose40-povm-N2", 10}, {"penrose40-povm-N3", 20},
      {"set60-povm-N2", 10},     {"set60-povm-N3", 20}};
  double worst = 0.0;
  for (const auto& p : shipped_povms()) worst = std::max(worst, std::abs(p.weight_sum() - want.at(p.id)));
  return {worst < 1e-9, "max |sum c - target| " + fmt(worst)};
}

Outcome shell_polynomials() {
  struct Golden {
    double theta;
    std::vector<double> coeffs;
  };
  const Golden cases[] = {{pi / 4, {2, 8, -4}}, {pi / 2, {8, -16, 8}}, {0.0, {0, 0, 1}}};
  double worst = 0.0;
  for (const auto& g : cases) {
    const auto p = spin1::shell_polynomial(PolytopeKind::Cell24, g.theta, 2);
    for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(p.coeffs[i] - g.coeffs[i]));
  }
  return {worst < 1e-10, "max coefficient error " + fmt(worst)};
}

Outcome weight_solving() {
  double worst = 0.0;
  auto compare = [&](const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) {
      worst = INFINITY;
      return;
    }
    for (std::size_t i = 0; i < want.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
  };
  compare(spin1::solve_weights(PolytopeKind::Cell24, {pi / 4, pi / 2, 0.0}, 2).weights, {1.0 / 6, 1.0 / 12, 0.0});
  compare(spin1::solve_weights(PolytopeKind::Cell24, {pi / 6, pi / 4, pi / 3, pi / 2}, 3).weights,
          {2.0 / 27, 1.0 / 18, 2.0 / 9, 7.0 / 108});
  const double r2 = std::sqrt(2.0);
  compare(spin1::solve_weights(PolytopeKind::Cell600, {pi / 6, pi / 4, pi / 3, pi / 2}, 4).weights,
          {1.0 / 45, 1.0 / 60, 1.0 / 15, 7.0 / 360});
  compare(spin1::solve_weights(PolytopeKind::Cell600, {pi / 6, pi / 4, pi / 3, pi / 2, pi / 8, 3 * pi / 8}, 5).weights,
          {2.0 / 225, 17.0 / 300, 2.0 / 75, 29.0 / 1800, (2 - r2) / 60, (2 + r2) / 60});
  bool cell24_rejected = false;
  double deviation = 0.0;
  try {
    spin1::solve_weights(PolytopeKind::Cell24, {pi / 6, pi / 4, pi / 3, pi / 2}, 4);
  } catch (const spin1::AngularDependenceError& e) {
    cell24_rejected = true;
    deviation = e.deviation();
  }
  return {worst < 1e-10 && cell24_rejected,
          "max weight error " + fmt(worst) + "; 24-cell N=4 " +
              (cell24_rejected ? "rejected (angular deviation " + fmt(deviation) + ")" : "NOT rejected")};
}

Outcome spectra() {
  std::ostringstream detail;
  bool ok = true;
  auto check = [&](const spin32::RayCatalog& cat, const std::map<double, int>& want) {
    const auto s = spin32::overlap_spectrum(cat);
    bool values_ok = s.histogram.size() == want.size();
    if (values_ok) {
      auto it = s.histogram.begin();
      for (const auto& [v, c] : want) {
        values_ok = values_ok && std::abs(it->first - v) < 1e-9;
        ++it;
      }
    }
    const auto dev = spin32::spectrum_deviations(cat, s, want);
    for (const auto& d : dev) {
      detail << " [" << cat.label << " state " << d.name << " deviates:";
      for (const auto& [v, c] : d.counts) detail << " " << fmt(v) << "x" << c;
      detail << "]";
    }
    ok = ok && values_ok && dev.empty();
    detail << " " << cat.label << ": " << s.histogram.size() << " dot values, " << dev.size()
           << " deviating states;";
  };
  check(spin32::penrose_states(), {{-1.0 / 3, 12}, {1.0 / 9, 27}});
  check(spin32::set60_states(), {{-1.0 / 3, 15}, {0.0, 32}, {1.0 / 3, 12}});
  return {ok, detail.str()};
}

Outcome hierarchy() {
  double worst = 0.0;
  bool ok = true;
  for (int n : {2, 3}) {
    for (const auto& p : {spin32::penrose_povm(n), spin32::set60_povm(n)}) {
      const auto rep = n == 2 ? spin32::verify_hierarchy_n2(p) : spin32::verify_hierarchy_n3(p);
      worst = std::max(worst, rep.worst());
      ok = ok && rep.pass() && rep.worst() < 1e-9;
    }
  }
  const auto rp = spin32::reduce_n3_to_n2(spin32::penrose_povm(3));
  const auto rs = spin32::reduce_n3_to_n2(spin32::set60_povm(3));
  const bool weights_ok = std::abs(rp.elements.front().weight - 0.25) < 1e-15 &&
                          std::abs(rs.elements.front().weight - 1.0 / 6) < 1e-15;
  const bool reduced_ok = spin32::verify_hierarchy_n2(rp).pass() && spin32::verify_hierarchy_n2(rs).pass();
  return {ok && weights_ok && reduced_ok,
          "max hierarchy residual " + fmt(worst) + "; reduction 1/2->1/4, 1/3->1/6 " +
              (weights_ok && reduced_ok ? "ok" : "FAILED")};
}

Outcome optimal_fidelity() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst_exact = 0.0;
  double worst_z = 0.0;
  std::uint64_t seed = 2000;
  for (const auto& p : shipped_povms()) {
    const double bound = optimal_fidelity_bound(p.copies, p.dim);
    const double exact = exact_average_fidelity(p);
    worst_exact = std::max(worst_exact, std::abs(exact - bound));
    const auto r = simulate(p, {100000, seed++, 1, false});
    const double z = std::abs(r.mean_fidelity - exact) / r.standard_error;
    worst_z = std::max(worst_z, z);
    ok = ok && std::abs(exact - bound) < 1e-12 && z < 5.0;
  }
  const double t = seconds_since(t0);
  return {ok && t < 60.0, "max |exact - (N+1)/(N+D)| " + fmt(worst_exact) + ", max MC deviation " +
                              fmt(worst_z) + " SE (limit 5), " + fmt(t) + " s (limit 60 s)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "optpovm_acceptance";
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> commands = {
      {"build", "--target", "table1-N5"},
      {"build", "--target", "penrose40"},
      {"verify", "--target", "set60-povm-N3", "--seed", "9", "--trials", "500"},
      {"simulate", "--target", "table1-N3", "--seed", "9", "--trials", "20000", "--shards", "4", "--csv"},
      {"solve-weights", "--polytope", "cell600", "--angles", "pi/6,pi/4,pi/3,pi/2", "-N", "4"},
      {"spectrum", "--target", "set60"}};
  int identical = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string bytes[2];
    for (int rep = 0; rep < 2; ++rep) {
      auto args = commands[i];
      const fs::path out = dir / ("cmd" + std::to_string(i) + "_" + std::to_string(rep) + ".json");
      const fs::path csv = dir / ("cmd" + std::to_string(i) + "_" + std::to_string(rep) + ".csv");
      if (args.back() == "--csv") {
        args.push_back(csv.string());
      }
      args.push_back("--out");
      args.push_back(out.string());
      std::ostringstream o, e;
      cli::run(args, o, e);
      bytes[rep] = slurp(out) + (fs::exists(csv) ? slurp(csv) : "");
    }
    if (!bytes[0].empty() && bytes[0] == bytes[1]) ++identical;
  }
  fs::remove_all(dir);
  return {identical == static_cast<int>(commands.size()),
          std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical on rerun"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 completeness on the symmetric subspace", completeness},
      {"2 scalar identity at random states", scalar_identity},
      {"3 weight sums", weight_sums},
      {"4 shell polynomial coefficients (24-cell, N=2)", shell_polynomials},
      {"5 weight solving", weight_solving},
      {"6 Bloch-dot spectra", spectra},
      {"7 moment hierarchies and N=3 -> N=2 reduction", hierarchy},
      {"8 optimal average fidelity", optimal_fidelity},
      {"9 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
