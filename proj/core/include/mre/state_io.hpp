#pragma once

#include "mre/states.hpp"

#include <string>
#include <variant>
#include <vector>

namespace mre {

// A state read from disk: either a pure state vector or a density matrix.
// Inputs are accepted through a validation ladder: deviations up to 1e-8 are
// repaired silently, up to 1e-4 repaired with a warning, anything larger is
// rejected as "malformed-input".
struct LoadedState {
  std::variant<StateVector, DensityMatrix> value;
  std::vector<std::string> warnings;

  bool is_pure() const { return std::holds_alternative<StateVector>(value); }
  const StateVector& pure() const { return std::get<StateVector>(value); }
  const DensityMatrix& mixed() const { return std::get<DensityMatrix>(value); }
  int n_qubits() const;
};

// Pure state files:   {"n_qubits": n, "amplitudes": [[re, im], ...]}   (2^n entries)
// Density files:      {"n_qubits": n, "matrix": [[[re, im], ...], ...]} (2^n x 2^n grid)
LoadedState parse_state_json(const std::string& text);
LoadedState load_state_file(const std::string& path);

}  // namespace mre
