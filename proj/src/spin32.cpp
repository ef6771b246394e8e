#include "optpovm/spin32.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace optpovm::spin32 {

namespace {

// Penrose dodecahedron rays, unnormalized, in the basis (F, B, E, A').
// Entries are copied verbatim from the printed table.
const std::vector<std::string> kPenroseNames = {
    "A",  "F",  "B",  "E",  "L",  "G",  "C",  "D",  "J",  "K",  "R",  "M",  "H",  "I",
    "P",  "Q",  "S",  "N",  "U",  "T",  "A'", "F'", "B'", "E'", "L'", "G'", "C'", "D'",
    "J'", "K'", "R'", "M'", "H'", "I'", "P'", "Q'", "S'", "N'", "U'", "T'"};

const std::vector<PrintedRow> kPenroseRows = {
    {"1", "p", "p^2", "0"},     {"1", "0", "0", "0"},       {"0", "1", "0", "0"},
    {"0", "0", "1", "0"},       {"-1", "0", "p^2", "1"},    {"0", "-1", "p", "1"},
    {"p^2", "1", "0", "1"},     {"p", "0", "1", "1"},       {"0", "p^2", "1", "-1"},
    {"1", "p^-2", "0", "1"},    {"0", "p", "-1", "1"},      {"p^-1", "0", "1", "1"},
    {"1", "0", "p", "-1"},      {"1", "p^2", "0", "1"},     {"p^-2", "1", "0", "1"},
    {"0", "1", "p^2", "-1"},    {"1", "1", "0", "1"},       {"0", "1", "1", "-1"},
    {"-1", "0", "1", "1"},      {"p^2", "p", "1", "0"},     {"0", "0", "0", "1"},
    {"0", "p^2", "1", "p"},     {"p", "0", "1", "p^2"},     {"p^-2", "p^2", "0", "1"},
    {"0", "1", "1", "p"},       {"1", "0", "-1", "p^-1"},   {"1", "0", "-1", "p"},
    {"1", "1", "0", "p^2"},     {"1", "1", "0", "p^-2"},    {"0", "1", "1", "p^-1"},
    {"-1", "1", "p^-1", "0"},   {"-1", "1", "p", "0"},      {"p^2", "-1", "1", "0"},
    {"p", "1", "-1", "0"},      {"1", "p^-1", "1", "0"},    {"1", "p", "1", "0"},
    {"1", "p^2", "0", "p^-2"},  {"0", "1", "p^2", "p"},     {"p", "0", "p^2", "1"},
    {"1", "-1", "1", "0"}};

const std::vector<PrintedRow> kSet60Rows = {
    {"1", "0", "0", "0"},    {"0", "1", "0", "0"},    {"0", "0", "1", "0"},
    {"0", "0", "0", "1"},    {"1", "1", "1", "1"},    {"-1", "1", "-1", "1"},
    {"-1", "-1", "1", "1"},  {"1", "-1", "-1", "1"},  {"1", "1", "1", "-1"},
    {"1", "-1", "-1", "-1"}, {"1", "-1", "1", "1"},   {"1", "1", "-1", "1"},
    {"1", "0", "1", "0"},    {"0", "1", "0", "1"},    {"1", "0", "-1", "0"},
    {"0", "1", "0", "-1"},   {"1", "1", "0", "0"},    {"1", "-1", "0", "0"},
    {"0", "0", "1", "1"},    {"0", "0", "1", "-1"},   {"-1", "0", "0", "-1"},
    {"0", "-1", "-1", "0"},  {"-1", "0", "0", "1"},   {"0", "-1", "1", "0"},
    {"1", "i", "i", "1"},    {"1", "-i", "-i", "1"},  {"1", "-i", "i", "-1"},
    {"1", "i", "-i", "-1"},  {"-1", "1", "-i", "-i"}, {"-1", "-1", "i", "-i"},
    {"-1", "-1", "-i", "i"}, {"-1", "1", "i", "i"},   {"-1", "-i", "1", "-i"},
    {"-1", "i", "-1", "-i"}, {"-1", "-i", "-1", "i"}, {"-1", "i", "1", "i"},
    {"1", "0", "0", "i"},    {"1", "0", "0", "-i"},   {"0", "1", "i", "0"},
    {"0", "1", "-i", "0"},   {"1", "0", "i", "0"},    {"1", "0", "-i", "0"},
    {"0", "1", "0", "i"},    {"0", "1", "0", "-i"},   {"1", "i", "i", "-1"},
    {"1", "-i", "-i", "-1"}, {"1", "i", "-i", "1"},   {"1", "-i", "i", "1"},
    {"1", "i", "0", "0"},    {"1", "-i", "0", "0"},   {"0", "0", "1", "i"},
    {"0", "0", "1", "-i"},   {"1", "i", "1", "i"},    {"1", "-i", "1", "-i"},
    {"1", "i", "-1", "-i"},  {"1", "-i", "-1", "i"},  {"1", "1", "i", "i"},
    {"1", "-1", "i", "-i"},  {"1", "1", "-i", "-i"},  {"1", "-1", "-i", "i"}};

std::vector<std::string> set60_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 60; ++i) names.push_back("Psi" + std::to_string(i));
  return names;
}

double rounded_dot(double d) {
  // +0.0 folds -0.0 into 0.0 so both land on the same map key.
  return std::round(d * 1e9) / 1e9 + 0.0;
}

double spin_of(const Povm& povm) {
  const double j = povm.spin.value_or(0.5 * (povm.dim - 1));
  if (std::abs(2.0 * j + 1.0 - povm.dim) > kExactTol) {
    throw std::invalid_argument("POVM spin does not match its dimension");
  }
  if (j <= 0.0) throw std::invalid_argument("hierarchy checks need J > 0");
  return j;
}

// Max over s of |sum_r c_r d_rs^m - target_m| for each moment m = 1..M.
std::vector<double> moment_residuals(const Povm& povm, double spin,
                                     const std::vector<double>& targets) {
  std::vector<double> worst(targets.size(), 0.0);
  const auto& el = povm.elements;
  for (const auto& s : el) {
    std::vector<double> sums(targets.size(), 0.0);
    for (const auto& r : el) {
      const double d = bloch_dot(r.state, s.state, spin);
      double dp = 1.0;
      for (std::size_t m = 0; m < targets.size(); ++m) {
        dp *= d;
        sums[m] += r.weight * dp;
      }
    }
    for (std::size_t m = 0; m < targets.size(); ++m) {
      worst[m] = std::max(worst[m], std::abs(sums[m] - targets[m]));
    }
  }
  return worst;
}

VerificationReport hierarchy(const Povm& povm, int copies, double weight_target,
                             const std::vector<double>& moment_targets, double tolerance) {
  if (povm.copies != copies) {
    throw std::invalid_argument("hierarchy check called with a POVM for the wrong N");
  }
  const double spin = spin_of(povm);
  VerificationReport rep;
  rep.povm_id = povm.id;
  rep.add("weight_sum", std::abs(povm.weight_sum() - weight_target), tolerance);
  static const char* kNames[] = {"first_moment", "second_moment", "third_moment"};
  const auto res = moment_residuals(povm, spin, moment_targets);
  for (std::size_t m = 0; m < res.size(); ++m) rep.add(kNames[m], res[m], tolerance);
  return rep;
}

}  // namespace

Complex parse_entry(std::string_view entry) {
  const std::string_view original = entry;
  double sign = 1.0;
  if (!entry.empty() && entry.front() == '-') {
    sign = -1.0;
    entry.remove_prefix(1);
  }
  if (entry == "0") return {0.0, 0.0};
  if (entry == "1") return {sign, 0.0};
  if (entry == "i") return {0.0, sign};
  if (!entry.empty() && entry.front() == 'p') {
    entry.remove_prefix(1);
    int power = 1;
    if (!entry.empty()) {
      if (entry.front() != '^') throw std::invalid_argument("bad table entry: " + std::string(original));
      entry.remove_prefix(1);
      if (entry == "2") power = 2;
      else if (entry == "-1") power = -1;
      else if (entry == "-2") power = -2;
      else throw std::invalid_argument("bad table entry: " + std::string(original));
    }
    return sign * std::polar(1.0, power * std::numbers::pi / 3.0);
  }
  throw std::invalid_argument("bad table entry: " + std::string(original));
}

RayCatalog make_catalog(std::string label, const std::vector<std::string>& names,
                        const std::vector<PrintedRow>& rows) {
  if (names.size() != rows.size()) throw std::invalid_argument("catalog: name/row count mismatch");
  RayCatalog cat;
  cat.label = std::move(label);
  cat.names = names;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Complex> amps;
    for (const auto& e : rows[i]) amps.push_back(parse_entry(e));
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    if (n2 == 0.0) {
      throw std::invalid_argument("catalog " + cat.label + ": ray " + names[i] + " is the zero vector");
    }
    cat.states.push_back(PureState::normalized(std::move(amps)));
  }
  return cat;
}

const RayCatalog& penrose_states() {
  static const RayCatalog cat = make_catalog("penrose40", kPenroseNames, kPenroseRows);
  return cat;
}

const RayCatalog& set60_states() {
  static const RayCatalog cat = make_catalog("set60", set60_names(), kSet60Rows);
  return cat;
}

double bloch_dot(const PureState& a, const PureState& b, double spin) {
  if (a.dim() != b.dim()) throw std::invalid_argument("bloch_dot: dimension mismatch");
  if (std::abs(2.0 * spin + 1.0 - a.dim()) > kExactTol) {
    throw std::invalid_argument("bloch_dot: dimension is not 2J+1");
  }
  return ((2.0 * spin + 1.0) * overlap_sq(a, b) - 1.0) / (2.0 * spin);
}

BlochDotSpectrum overlap_spectrum(const RayCatalog& catalog, double spin) {
  const std::size_t n = catalog.states.size();
  BlochDotSpectrum spectrum;
  spectrum.per_state.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = rounded_dot(bloch_dot(catalog.states[i], catalog.states[j], spin));
      ++spectrum.histogram[d];
      ++spectrum.per_state[i][d];
      ++spectrum.per_state[j][d];
    }
  }
  return spectrum;
}

std::vector<SpectrumDeviation> spectrum_deviations(const RayCatalog& catalog,
                                                   const BlochDotSpectrum& spectrum,
                                                   const std::map<double, int>& expected) {
  std::map<double, int> want;
  for (const auto& [v, c] : expected) want[rounded_dot(v)] = c;
  std::vector<SpectrumDeviation> out;
  for (std::size_t i = 0; i < spectrum.per_state.size(); ++i) {
    if (spectrum.per_state[i] != want) {
      out.push_back({static_cast<int>(i), catalog.names[i], spectrum.per_state[i]});
    }
  }
  return out;
}

Povm make_povm(const RayCatalog& catalog, int copies, double weight, std::string id) {
  Povm p;
  p.id = std::move(id);
  p.dim = 4;
  p.copies = copies;
  p.spin = kSpin;
  p.provenance = "spin-3/2 " + catalog.label + " rays, common weight, N=" + std::to_string(copies);
  for (const auto& s : catalog.states) p.elements.push_back({weight, s});
  return p;
}

Povm penrose_povm(int copies) {
  if (copies == 2) return make_povm(penrose_states(), 2, 0.25, "penrose40-povm-N2");
  if (copies == 3) return make_povm(penrose_states(), 3, 0.5, "penrose40-povm-N3");
  throw std::out_of_range("spin-3/2 POVMs are available for N = 2, 3 only");
}

Povm set60_povm(int copies) {
  if (copies == 2) return make_povm(set60_states(), 2, 1.0 / 6.0, "set60-povm-N2");
  if (copies == 3) return make_povm(set60_states(), 3, 1.0 / 3.0, "set60-povm-N3");
  throw std::out_of_range("spin-3/2 POVMs are available for N = 2, 3 only");
}

VerificationReport verify_hierarchy_n2(const Povm& povm, double tolerance) {
  const double j = spin_of(povm);
  return hierarchy(povm, 2, (2 * j + 1) * (j + 1), {0.0, (2 * j + 1) / (4 * j)}, tolerance);
}

VerificationReport verify_hierarchy_n3(const Povm& povm, double tolerance) {
  const double j = spin_of(povm);
  return hierarchy(povm, 3, (2 * j + 3) * (2 * j + 1) * (j + 1) / 3,
                   {0.0, (2 * j + 3) * (2 * j + 1) / (12 * j), (2 * j + 1) * (2 * j - 1) / (12 * j * j)},
                   tolerance);
}

Povm reduce_n3_to_n2(const Povm& povm) {
  const auto rep = verify_hierarchy_n3(povm);
  if (!rep.pass()) {
    throw std::invalid_argument("reduce_n3_to_n2: input fails the N=3 hierarchy (worst residual " +
                                std::to_string(rep.worst()) + ")");
  }
  const double j = spin_of(povm);
  Povm out = povm;
  out.copies = 2;
  const std::string suffix = "-N3";
  if (out.id.size() >= suffix.size() && out.id.ends_with(suffix)) {
    out.id.replace(out.id.size() - suffix.size(), suffix.size(), "-N2");
  }
  out.provenance = povm.provenance + ", weights reduced from N=3";
  for (auto& e : out.elements) e.weight *= 3.0 / (2 * j + 3);
  return out;
}

}  // namespace optpovm::spin32
