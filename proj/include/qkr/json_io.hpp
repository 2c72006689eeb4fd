#ifndef QKR_JSON_IO_HPP
#define QKR_JSON_IO_HPP

#include <string>

#include "qkr/classical.hpp"
#include "qkr/game.hpp"
#include "qkr/optimize.hpp"
#include "qkr/qstate.hpp"
#include "qkr/su_param.hpp"

namespace qkr {

// State document: {"n":3,"m":3,"amps":[[re,im],...]} in index order.
std::string state_to_json(const PureState& state);
PureState state_from_json(const std::string& text);

// Unitary document: {"m":3,"entries":[[[re,im],...],...]} row-major.
std::string unitary_to_json(const SquareMatrix& u);
SquareMatrix unitary_from_json(const std::string& text);

// Params document: {"m":3,"coeffs":[...]}.
std::string params_to_json(const UnitaryParams& params);
UnitaryParams params_from_json(const std::string& text);

std::string result_to_json(const OptimizationResult& result);

// Map from basis string to class label (n=m=3 only) and 1-based winner list.
std::string partition_to_json(const OutcomePartition& partition);

// {"baseline":...,"best_symmetric":{"probs":[...],"value":...}}.
std::string classical_report_json(const GameSpec& spec, int grid_resolution);

}  // namespace qkr

#endif
