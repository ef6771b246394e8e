#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "optpovm/linalg.hpp"
#include "optpovm/povm.hpp"
#include "optpovm/report.hpp"

namespace optpovm::spin32 {

inline constexpr double kSpin = 1.5;

/// A row of a ray table as printed: each entry is one of 0, 1, -1, i, -i,
/// p, p^k (k = -2, -1, 2) with p = exp(i pi/3), optionally negated.
using PrintedRow = std::array<std::string_view, 4>;

/// Value of one printed table entry. Throws std::invalid_argument for
/// anything outside the grammar above.
Complex parse_entry(std::string_view entry);

struct RayCatalog {
  std::string label;
  std::vector<std::string> names;
  std::vector<PureState> states;  // normalized
};

/// Builds a catalog from printed rows. A row that evaluates to the zero
/// vector is a load error.
RayCatalog make_catalog(std::string label, const std::vector<std::string>& names,
                        const std::vector<PrintedRow>& rows);

/// The 40 Penrose dodecahedron rays, explicit rays A..U then implicit rays
/// A'..U'. F, B, E and A' are the coordinate axes.
const RayCatalog& penrose_states();

/// The 60-ray set; the first 24 are Peres' rays.
const RayCatalog& set60_states();

/// Dot product of generalized Bloch vectors from the squared overlap:
/// ((2J+1)|<a|b>|^2 - 1) / (2J).
double bloch_dot(const PureState& a, const PureState& b, double spin);

/// Bloch dots rounded to 1e-9 (negative zero folded into zero).
struct BlochDotSpectrum {
  std::map<double, int> histogram;               // over unordered pairs
  std::vector<std::map<double, int>> per_state;  // neighbours of each state
};

BlochDotSpectrum overlap_spectrum(const RayCatalog& catalog, double spin = kSpin);

struct SpectrumDeviation {
  int index;
  std::string name;
  std::map<double, int> counts;
};

/// States whose neighbour counts differ from `expected`.
std::vector<SpectrumDeviation> spectrum_deviations(const RayCatalog& catalog,
                                                   const BlochDotSpectrum& spectrum,
                                                   const std::map<double, int>& expected);

/// Every catalog state with the same weight.
Povm make_povm(const RayCatalog& catalog, int copies, double weight, std::string id);

/// Built-in spin-3/2 POVMs: Penrose rays with c = 1/4 (N=2) or 1/2 (N=3);
/// 60-ray set with c = 1/6 (N=2) or 1/3 (N=3).
Povm penrose_povm(int copies);
Povm set60_povm(int copies);

/// N = 2 moment hierarchy: sum c = (2J+1)(J+1); for every s,
/// sum_r c_r (n_r.n_s) = 0 and sum_r c_r (n_r.n_s)^2 = (2J+1)/(4J).
VerificationReport verify_hierarchy_n2(const Povm& povm, double tolerance = kAggregateTol);

/// N = 3 moment hierarchy: sum c = (2J+3)(2J+1)(J+1)/3; for every s the
/// first, second and third moments equal 0, (2J+3)(2J+1)/(12J) and
/// (2J+1)(2J-1)/(12J^2).
VerificationReport verify_hierarchy_n3(const Povm& povm, double tolerance = kAggregateTol);

/// Scales every weight by 3/(2J+3). The input must pass verify_hierarchy_n3.
Povm reduce_n3_to_n2(const Povm& povm);

}  // namespace optpovm::spin32
