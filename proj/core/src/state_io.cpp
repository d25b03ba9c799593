#include "mre/state_io.hpp"

#include "mre/eig.hpp"
#include "mre/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace mre {

namespace {

using nlohmann::json;

// Repairs up to this size are silent; larger ones up to kRejectTol warn.
constexpr double kSilentTol = 1e-8;
constexpr double kRejectTol = 1e-4;

int read_qubit_count(const json& j) {
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
    throw Error("malformed-input", "missing integer field n_qubits");
  }
  const int n = j["n_qubits"].get<int>();
  if (n < 1 || n > 6) {
    throw Error("unsupported-size", "n_qubits " + std::to_string(n) + " outside 1..6");
  }
  return n;
}

Complex read_complex(const json& entry) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw Error("malformed-input", "complex entries must be [re, im] number pairs");
  }
  return Complex{entry[0].get<double>(), entry[1].get<double>()};
}

LoadedState parse_pure(const json& j) {
  const int n = read_qubit_count(j);
  const std::size_t dim = std::size_t{1} << n;
  const json& amps = j["amplitudes"];
  if (!amps.is_array() || amps.size() != dim) {
    throw Error("malformed-input",
                "amplitudes must hold exactly " + std::to_string(dim) + " entries");
  }
  std::vector<Complex> a(dim);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    a[i] = read_complex(amps[i]);
    norm2 += std::norm(a[i]);
  }
  const double deviation = std::abs(norm2 - 1.0);
  if (deviation > kRejectTol || norm2 <= 0.0) {
    throw Error("malformed-input",
                "state norm deviates from 1 by " + std::to_string(deviation));
  }
  LoadedState out{StateVector::normalized(n, std::move(a)), {}};
  if (deviation > kSilentTol) {
    std::ostringstream msg;
    msg << "renormalized input state (squared-norm deviation " << deviation << ")";
    out.warnings.push_back(msg.str());
  }
  return out;
}

LoadedState parse_mixed(const json& j) {
  const int n = read_qubit_count(j);
  const std::size_t dim = std::size_t{1} << n;
  const json& grid = j["matrix"];
  if (!grid.is_array() || grid.size() != dim) {
    throw Error("malformed-input", "matrix must be a " + std::to_string(dim) + "-row grid");
  }
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = grid[i];
    if (!row.is_array() || row.size() != dim) {
      throw Error("malformed-input", "matrix rows must hold " + std::to_string(dim) + " entries");
    }
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = read_complex(row[k]);
  }

  const double herm = m.hermiticity_defect();
  const double trace_dev = std::abs(m.trace() - Complex{1.0});
  if (herm > kRejectTol || trace_dev > kRejectTol) {
    throw Error("malformed-input", "density matrix deviates beyond tolerance (hermiticity " +
                                       std::to_string(herm) + ", trace " +
                                       std::to_string(trace_dev) + ")");
  }

  // Project onto valid density matrices: symmetrize, clip negative
  // eigenvalues, renormalize the trace.
  ComplexMatrix symmetric(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k)
      symmetric(i, k) = 0.5 * (m(i, k) + std::conj(m(k, i)));
  const EigenSystem sys = eig_hermitian(symmetric, 1.0);
  const double negative = std::max(0.0, -sys.eigenvalues.back());
  if (negative > kRejectTol) {
    throw Error("malformed-input",
                "density matrix has eigenvalue " + std::to_string(sys.eigenvalues.back()));
  }
  ComplexMatrix cleaned(dim);
  double total = 0.0;
  std::vector<Complex> v(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (sys.eigenvalues[k] <= 0.0) continue;
    total += sys.eigenvalues[k];
    for (std::size_t i = 0; i < dim; ++i) v[i] = sys.eigenvectors(i, k);
    cleaned.add_scaled_outer(sys.eigenvalues[k], v);
  }
  if (total <= 0.0) throw Error("malformed-input", "density matrix has no positive spectrum");
  cleaned *= 1.0 / total;

  LoadedState out{DensityMatrix(std::move(cleaned)), {}};
  const double deviation = std::max({herm, trace_dev, negative});
  if (deviation > kSilentTol) {
    std::ostringstream msg;
    msg << "repaired input density matrix (max deviation " << deviation << ")";
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace

int LoadedState::n_qubits() const {
  return is_pure() ? pure().n_qubits() : mixed().n_qubits();
}

LoadedState parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("malformed-input", std::string("JSON parse failure: ") + e.what());
  }
  if (!j.is_object()) throw Error("malformed-input", "top-level value must be an object");
  if (j.contains("amplitudes")) return parse_pure(j);
  if (j.contains("matrix")) return parse_mixed(j);
  throw Error("malformed-input", "expected an \"amplitudes\" or \"matrix\" field");
}

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("malformed-input", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str());
}

}  // namespace mre
