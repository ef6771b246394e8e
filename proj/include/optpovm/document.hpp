#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "optpovm/estimator.hpp"
#include "optpovm/povm.hpp"
#include "optpovm/report.hpp"
#include "optpovm/spin1.hpp"
#include "optpovm/spin32.hpp"

namespace optpovm::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input file or document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// PovmDocument:
//   {"schema_version": 1, "kind": "povm", "id": ..., "D": 3, "N": 4, "J": 1.0,
//    "provenance": ..., "elements": [{"weight": w, "state": [[re, im], ...]}, ...]}
// A ray catalog uses "kind": "catalog", omits N and the weights, and labels
// each element instead.
json povm_to_json(const Povm& povm);
Povm povm_from_json(const json& doc);

json catalog_to_json(const spin32::RayCatalog& catalog);
spin32::RayCatalog catalog_from_json(const json& doc);

json report_to_json(const VerificationReport& report);
json estimation_to_json(const EstimationReport& report);
json spectrum_to_json(const spin32::RayCatalog& catalog, const spin32::BlochDotSpectrum& spectrum,
                      const std::vector<spin32::SpectrumDeviation>* deviations);
json weights_to_json(PolytopeKind polytope, const std::vector<std::string>& angle_text,
                     const std::vector<double>& angles, int copies,
                     const spin1::WeightSolution& solution);

/// Parses a file into JSON; throws ParseError on I/O or syntax failure.
json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const json& doc);
std::string dump(const json& doc);

/// "trial,fidelity" CSV, one row per trial.
void write_trials_csv(const std::filesystem::path& path, const std::vector<double>& fidelities);

}  // namespace optpovm::io
