#include "optpovm/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "optpovm/verifier.hpp"

namespace optpovm::io {

namespace {

json state_to_json(const PureState& s) {
  json arr = json::array();
  for (const auto& a : s.amplitudes()) arr.push_back({a.real(), a.imag()});
  return arr;
}

PureState state_from_json(const json& j, std::size_t index) {
  const std::string where = "element " + std::to_string(index);
  if (!j.is_array() || j.empty()) throw ParseError(where + ": state must be a non-empty array");
  std::vector<Complex> amps;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError(where + ": amplitudes must be [re, im] number pairs");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  try {
    return PureState(std::move(amps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int require_int(const json& doc, const char* key) {
  const auto& v = require(doc, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

void check_header(const json& doc, const char* kind) {
  if (require_int(doc, "schema_version") != kSchemaVersion) {
    throw ParseError("unsupported schema_version");
  }
  const auto& k = require(doc, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw ParseError(std::string("expected a document of kind '") + kind + "'");
  }
}

std::string optional_string(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  if (!doc.at(key).is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return doc.at(key).get<std::string>();
}

}  // namespace

json povm_to_json(const Povm& povm) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "povm";
  doc["id"] = povm.id;
  doc["D"] = povm.dim;
  doc["N"] = povm.copies;
  if (povm.spin) doc["J"] = *povm.spin;
  doc["provenance"] = povm.provenance;
  json el = json::array();
  for (const auto& e : povm.elements) el.push_back({{"weight", e.weight}, {"state", state_to_json(e.state)}});
  doc["elements"] = std::move(el);
  return doc;
}

Povm povm_from_json(const json& doc) {
  check_header(doc, "povm");
  Povm p;
  p.id = optional_string(doc, "id");
  p.provenance = optional_string(doc, "provenance");
  p.dim = require_int(doc, "D");
  p.copies = require_int(doc, "N");
  if (p.dim < 2) throw ParseError("D must be at least 2");
  if (p.copies < 1) throw ParseError("N must be at least 1");
  if (doc.contains("J")) {
    if (!doc["J"].is_number()) throw ParseError("field 'J' must be a number");
    p.spin = doc["J"].get<double>();
  }
  const auto& el = require(doc, "elements");
  if (!el.is_array() || el.empty()) throw ParseError("'elements' must be a non-empty array");
  for (std::size_t i = 0; i < el.size(); ++i) {
    const auto& w = require(el[i], "weight");
    if (!w.is_number()) throw ParseError("element " + std::to_string(i) + ": weight must be a number");
    const double weight = w.get<double>();
    if (!(weight >= 0.0)) throw ParseError("element " + std::to_string(i) + ": weight must be non-negative");
    PureState s = state_from_json(require(el[i], "state"), i);
    if (s.dim() != p.dim) {
      throw DimensionMismatch("element " + std::to_string(i) + " has dimension " +
                              std::to_string(s.dim()) + ", document declares D=" +
                              std::to_string(p.dim));
    }
    p.elements.push_back({weight, std::move(s)});
  }
  return p;
}

json catalog_to_json(const spin32::RayCatalog& catalog) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "catalog";
  doc["id"] = catalog.label;
  doc["D"] = catalog.states.empty() ? 0 : catalog.states.front().dim();
  doc["J"] = spin32::kSpin;
  doc["provenance"] = "spin-3/2 ray table " + catalog.label + ", normalized";
  json el = json::array();
  for (std::size_t i = 0; i < catalog.states.size(); ++i) {
    el.push_back({{"label", catalog.names[i]}, {"state", state_to_json(catalog.states[i])}});
  }
  doc["elements"] = std::move(el);
  return doc;
}

spin32::RayCatalog catalog_from_json(const json& doc) {
  check_header(doc, "catalog");
  spin32::RayCatalog cat;
  cat.label = optional_string(doc, "id");
  const int d = require_int(doc, "D");
  const auto& el = require(doc, "elements");
  if (!el.is_array() || el.empty()) throw ParseError("'elements' must be a non-empty array");
  for (std::size_t i = 0; i < el.size(); ++i) {
    PureState s = state_from_json(require(el[i], "state"), i);
    if (s.dim() != d) throw DimensionMismatch("element " + std::to_string(i) + " does not match D");
    cat.names.push_back(el[i].contains("label") && el[i]["label"].is_string()
                            ? el[i]["label"].get<std::string>()
                            : std::to_string(i + 1));
    cat.states.push_back(std::move(s));
  }
  return cat;
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  return {{"povm_id", report.povm_id},
          {"pass", report.pass()},
          {"worst", report.worst()},
          {"checks", std::move(checks)}};
}

json estimation_to_json(const EstimationReport& r) {
  return {{"povm_id", r.povm_id},
          {"D", r.dim},
          {"N", r.copies},
          {"trials", r.trials},
          {"seed", r.seed},
          {"shards", r.shards},
          {"mean_fidelity", r.mean_fidelity},
          {"standard_error", r.standard_error},
          {"exact_fidelity", r.exact_fidelity},
          {"optimal_bound", r.optimal_bound}};
}

json spectrum_to_json(const spin32::RayCatalog& catalog, const spin32::BlochDotSpectrum& spectrum,
                      const std::vector<spin32::SpectrumDeviation>* deviations) {
  auto counts = [](const std::map<double, int>& m) {
    json arr = json::array();
    for (const auto& [v, c] : m) arr.push_back({{"dot", v}, {"count", c}});
    return arr;
  };
  json per_state = json::array();
  for (std::size_t i = 0; i < spectrum.per_state.size(); ++i) {
    per_state.push_back({{"label", catalog.names[i]}, {"neighbours", counts(spectrum.per_state[i])}});
  }
  json doc = {{"catalog", catalog.label},
              {"states", catalog.states.size()},
              {"pair_histogram", counts(spectrum.histogram)},
              {"per_state", std::move(per_state)}};
  if (deviations) {
    json dev = json::array();
    for (const auto& d : *deviations) {
      dev.push_back({{"index", d.index}, {"label", d.name}, {"neighbours", counts(d.counts)}});
    }
    doc["deviations"] = std::move(dev);
  }
  return doc;
}

json weights_to_json(PolytopeKind polytope, const std::vector<std::string>& angle_text,
                     const std::vector<double>& angles, int copies,
                     const spin1::WeightSolution& solution) {
  json shells = json::array();
  for (std::size_t i = 0; i < angles.size(); ++i) {
    shells.push_back(
        {{"angle", angle_text[i]}, {"theta", angles[i]}, {"weight", solution.weights[i]}});
  }
  return {{"polytope", std::string(to_string(polytope))},
          {"N", copies},
          {"residual", solution.residual},
          {"shells", std::move(shells)}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(doc);
}

void write_trials_csv(const std::filesystem::path& path, const std::vector<double>& fidelities) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "trial,fidelity\n";
  char buf[64];
  for (std::size_t i = 0; i < fidelities.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, fidelities[i]);
    out << buf;
  }
}

}  // namespace optpovm::io
