#include "qkr/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qkr/errors.hpp"

namespace qkr {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError("malformed JSON document");
  }
  return doc;
}

json complex_to_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex pair_to_complex(const json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    throw ParseError("expected a [re, im] pair");
  }
  return Complex{node[0].get<double>(), node[1].get<double>()};
}

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  return doc[key].get<int>();
}

}  // namespace

std::string state_to_json(const PureState& state) {
  json amps = json::array();
  for (const auto& a : state.amps) {
    amps.push_back(complex_to_pair(a));
  }
  return json{{"n", state.n}, {"m", state.m}, {"amps", std::move(amps)}}.dump();
}

PureState state_from_json(const std::string& text) {
  const json doc = parse(text);
  const int n = require_int(doc, "n");
  const int m = require_int(doc, "m");
  if (!doc.contains("amps") || !doc["amps"].is_array()) {
    throw ParseError("missing array field \"amps\"");
  }
  std::vector<Complex> amps;
  amps.reserve(doc["amps"].size());
  for (const auto& node : doc["amps"]) {
    amps.push_back(pair_to_complex(node));
  }
  return make_state(n, m, std::move(amps));
}

std::string unitary_to_json(const SquareMatrix& u) {
  json rows = json::array();
  for (int r = 0; r < u.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < u.dim(); ++c) {
      row.push_back(complex_to_pair(u(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return json{{"m", u.dim()}, {"entries", std::move(rows)}}.dump();
}

SquareMatrix unitary_from_json(const std::string& text) {
  const json doc = parse(text);
  const int m = require_int(doc, "m");
  if (m < 1) {
    throw ParseError("matrix dimension must be positive");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      doc["entries"].size() != static_cast<std::size_t>(m)) {
    throw ParseError("\"entries\" must hold m rows");
  }
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : doc["entries"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(m)) {
      throw ParseError("each matrix row must hold m entries");
    }
    for (const auto& node : row) {
      entries.push_back(pair_to_complex(node));
    }
  }
  SquareMatrix u(m, std::move(entries));
  if (!u.all_finite()) {
    throw ParseError("matrix contains a non-finite entry");
  }
  return u;
}

std::string params_to_json(const UnitaryParams& params) {
  return json{{"m", params.m}, {"coeffs", params.coeffs}}.dump();
}

UnitaryParams params_from_json(const std::string& text) {
  const json doc = parse(text);
  UnitaryParams params;
  params.m = require_int(doc, "m");
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw ParseError("missing array field \"coeffs\"");
  }
  for (const auto& node : doc["coeffs"]) {
    if (!node.is_number()) {
      throw ParseError("coefficients must be numbers");
    }
    params.coeffs.push_back(node.get<double>());
  }
  const std::size_t expected = static_cast<std::size_t>(params.m) * params.m - 1;
  if (params.m < 2 || params.coeffs.size() != expected) {
    throw ParseError("coefficient count must be m^2-1");
  }
  return params;
}

std::string result_to_json(const OptimizationResult& result) {
  json doc{
      {"params", json::parse(params_to_json(result.best_params))},
      {"unitary", json::parse(unitary_to_json(result.best_unitary))},
      {"payoff", result.payoff},
      {"iterations", result.iterations_used},
      {"restarts", result.restarts_used},
      {"converged", result.converged},
  };
  return doc.dump(2);
}

std::string partition_to_json(const OutcomePartition& partition) {
  ordered_json doc = ordered_json::object();
  for (std::size_t k = 0; k < partition.dim(); ++k) {
    const std::vector<int> choices = decode_index(k, partition.spec.n, partition.spec.m);
    std::string key;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      if (partition.spec.m > 10 && i > 0) {
        key += '.';
      }
      key += std::to_string(choices[i]);
    }
    ordered_json entry;
    if (partition.has_classes()) {
      entry["class"] = to_string(partition.classes[k]);
    }
    entry["winners"] = partition.winners_by_index[k];
    doc[key] = std::move(entry);
  }
  return doc.dump(2);
}

std::string classical_report_json(const GameSpec& spec, int grid_resolution) {
  const double baseline = uniform_baseline(spec);
  const SymmetricClassicalResult best = best_symmetric_classical(spec, grid_resolution);
  json doc{
      {"baseline", baseline},
      {"best_symmetric", {{"probs", best.strategy.probs}, {"value", best.value}}},
  };
  return doc.dump(2);
}

}  // namespace qkr
