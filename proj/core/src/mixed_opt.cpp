#include "mre/mixed_opt.hpp"

#include "detail.hpp"
#include "mre/eig.hpp"
#include "mre/entropy.hpp"
#include "mre/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace mre {

namespace {

constexpr double kGolden = 0.6180339887498949;  // 1/phi

struct Spectral {
  std::vector<double> eigenvalues;      // support eigenvalues, descending
  std::vector<std::vector<Complex>> eigenvectors;
};

Spectral support_spectrum(const DensityMatrix& rho, double rank_tol) {
  const EigenSystem sys = eig_hermitian(rho.matrix());
  Spectral s;
  for (std::size_t k = 0; k < sys.eigenvalues.size(); ++k) {
    if (sys.eigenvalues[k] <= rank_tol) break;
    std::vector<Complex> v(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) v[i] = sys.eigenvectors(i, k);
    s.eigenvalues.push_back(sys.eigenvalues[k]);
    s.eigenvectors.push_back(std::move(v));
  }
  return s;
}

Decomposition decomposition_from_spectrum(int n_qubits, const Spectral& spec, const Isometry& w,
                                          DecompositionSource source) {
  Decomposition d;
  d.source = source;
  const std::size_t dim = spec.eigenvectors.empty() ? 0 : spec.eigenvectors[0].size();
  for (int i = 0; i < w.rows; ++i) {
    std::vector<Complex> member(dim, Complex{});
    for (int j = 0; j < w.cols; ++j) {
      const Complex coeff = w.at(i, j) * std::sqrt(spec.eigenvalues[j]);
      if (coeff == Complex{}) continue;
      for (std::size_t q = 0; q < dim; ++q) member[q] += coeff * spec.eigenvectors[j][q];
    }
    double weight = 0.0;
    for (const auto& c : member) weight += std::norm(c);
    if (weight <= kWeightDropTol) continue;
    const double inv = 1.0 / std::sqrt(weight);
    for (auto& c : member) c *= inv;
    d.terms.push_back({weight, StateVector(n_qubits, std::move(member))});
  }
  return d;
}

struct ObjectiveContext {
  const DensityMatrix* rho;
  double tr_rho_log_rho;  // precomputed once per optimization
};

// S(rho || sum w_i R(psi_i)); infinity when the support is lost.
double objective(const ObjectiveContext& ctx, const Spectral& spec, const Isometry& w,
                 long long& evaluations) {
  ++evaluations;
  const Decomposition d =
      decomposition_from_spectrum(ctx.rho->n_qubits(), spec, w, DecompositionSource::isometry);
  ComplexMatrix mixed_r(ctx.rho->dim());
  for (const auto& term : d.terms) {
    ComplexMatrix r = detail::relative_density_matrix_n(term.pure_state);
    r *= term.weight;
    mixed_r += r;
  }
  return detail::relative_entropy_core(ctx.rho->matrix(), ctx.tr_rho_log_rho, mixed_r,
                                       kDefaultSupportTol)
      .as_double();
}

enum class PlaneGenerator { real_rotation, phase_rotation };

Isometry rotated(const Isometry& w, int r1, int r2, PlaneGenerator generator, double theta) {
  Isometry out = w;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (int j = 0; j < w.cols; ++j) {
    const Complex a = w.at(r1, j);
    const Complex b = w.at(r2, j);
    if (generator == PlaneGenerator::real_rotation) {
      out.at(r1, j) = c * a - s * b;
      out.at(r2, j) = s * a + c * b;
    } else {
      out.at(r1, j) = c * a + Complex{0.0, s} * b;
      out.at(r2, j) = Complex{0.0, s} * a + c * b;
    }
  }
  return out;
}

struct LineSearchResult {
  double theta = 0.0;
  double value = 0.0;
};

LineSearchResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                                double step_tolerance) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > step_tolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? LineSearchResult{x1, f1} : LineSearchResult{x2, f2};
}

struct RefineOutcome {
  Isometry w;
  double value;
};

RefineOutcome refine(const ObjectiveContext& ctx, const Spectral& spec, Isometry w,
                     const OptimizerConfig& config, long long& evaluations) {
  double current = objective(ctx, spec, w, evaluations);
  if (w.rows < 2) return {std::move(w), current};

  constexpr double kHalfPi = std::numbers::pi / 2.0;
  int line_searches = 0;
  while (line_searches < config.max_iters && current > config.value_tolerance) {
    double sweep_gain = 0.0;
    for (int r1 = 0; r1 < w.rows && line_searches < config.max_iters; ++r1) {
      for (int r2 = r1 + 1; r2 < w.rows && line_searches < config.max_iters; ++r2) {
        for (PlaneGenerator gen : {PlaneGenerator::real_rotation, PlaneGenerator::phase_rotation}) {
          if (line_searches >= config.max_iters) break;
          ++line_searches;
          auto slice = [&](double theta) {
            return objective(ctx, spec, rotated(w, r1, r2, gen, theta), evaluations);
          };
          const LineSearchResult best =
              golden_section(slice, -kHalfPi, kHalfPi, config.step_tolerance);
          if (best.value < current) {
            sweep_gain += current - best.value;
            current = best.value;
            w = rotated(w, r1, r2, gen, best.theta);
          }
        }
      }
    }
    if (sweep_gain < config.value_tolerance) break;
  }
  return {std::move(w), current};
}

}  // namespace

Isometry Isometry::identity(int n) {
  Isometry w{n, n, std::vector<Complex>(static_cast<std::size_t>(n) * n)};
  for (int i = 0; i < n; ++i) w.at(i, i) = 1.0;
  return w;
}

double Isometry::orthonormality_defect() const {
  double defect = 0.0;
  for (int a = 0; a < cols; ++a) {
    for (int b = 0; b < cols; ++b) {
      Complex dot = 0.0;
      for (int i = 0; i < rows; ++i) dot += std::conj(at(i, a)) * at(i, b);
      defect = std::max(defect, std::abs(dot - (a == b ? Complex{1.0} : Complex{})));
    }
  }
  return defect;
}

Isometry random_isometry(int rows, int cols, Rng& rng) {
  if (rows < cols || cols < 1) {
    throw Error("not-isometry", "an isometry needs rows >= cols >= 1");
  }
  Isometry w{rows, cols, std::vector<Complex>(static_cast<std::size_t>(rows) * cols)};
  for (auto& e : w.entries) e = rng.complex_gaussian();
  // Modified Gram-Schmidt over columns.
  for (int k = 0; k < cols; ++k) {
    for (int prev = 0; prev < k; ++prev) {
      Complex overlap = 0.0;
      for (int i = 0; i < rows; ++i) overlap += std::conj(w.at(i, prev)) * w.at(i, k);
      for (int i = 0; i < rows; ++i) w.at(i, k) -= overlap * w.at(i, prev);
    }
    double nrm = 0.0;
    for (int i = 0; i < rows; ++i) nrm += std::norm(w.at(i, k));
    nrm = std::sqrt(nrm);
    for (int i = 0; i < rows; ++i) w.at(i, k) /= nrm;
  }
  return w;
}

double Decomposition::weight_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += t.weight;
  return s;
}

ComplexMatrix Decomposition::reconstruct() const {
  if (terms.empty()) throw Error("invalid-dimension", "empty decomposition");
  ComplexMatrix out(terms.front().pure_state.dim());
  for (const auto& t : terms) out.add_scaled_outer(t.weight, t.pure_state.amplitudes());
  return out;
}

Decomposition decomposition_from_isometry(const DensityMatrix& rho, const Isometry& w,
                                          double rank_tol) {
  const Spectral spec = support_spectrum(rho, rank_tol);
  const int rank = static_cast<int>(spec.eigenvalues.size());
  if (w.cols != rank) {
    throw Error("not-isometry", "isometry has " + std::to_string(w.cols) +
                                    " columns but the state has rank " + std::to_string(rank));
  }
  const double defect = w.orthonormality_defect();
  if (defect > 1e-10) {
    throw Error("not-isometry", "orthonormality defect " + std::to_string(defect));
  }
  return decomposition_from_spectrum(rho.n_qubits(), spec, w, DecompositionSource::isometry);
}

MixedResult mre_mixed(const DensityMatrix& rho, const OptimizerConfig& config,
                      Convention convention) {
  const int n = rho.n_qubits();
  if (n < 2 || n > 4) {
    throw Error("unsupported-size",
                "mixed-state measure supports 2..4 qubits, got " + std::to_string(n));
  }

  const Spectral spec = support_spectrum(rho, 1e-10);
  const int rank = static_cast<int>(spec.eigenvalues.size());

  std::vector<int> batch;
  if (config.term_count) {
    batch.push_back(std::max(*config.term_count, rank));
  } else {
    batch = {rank, rank + 1, rank * rank};
    std::sort(batch.begin(), batch.end());
    batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
  }

  MixedResult result;
  Rng rng(config.seed);
  double best = std::numeric_limits<double>::infinity();
  Isometry best_w = Isometry::identity(rank);

  const Rational k = kn(n, convention);
  const ObjectiveContext ctx{&rho, detail::tr_log_self(rho.matrix())};

  for (int restart = 0; restart < std::max(config.restarts, 1); ++restart) {
    for (int m : batch) {
      const bool spectral_start = restart == 0 && m == rank;
      Isometry w = spectral_start ? Isometry::identity(rank) : random_isometry(m, rank, rng);
      if (spectral_start) {
        result.spectral_value = k.value() * objective(ctx, spec, w, result.evaluations);
      }
      RefineOutcome refined = refine(ctx, spec, std::move(w), config, result.evaluations);
      if (refined.value < best) {
        best = refined.value;
        best_w = std::move(refined.w);
        result.best_restart = restart;
      }
    }
    if (best <= config.value_tolerance) break;
  }

  const bool is_spectral =
      best_w.rows == rank && best_w.orthonormality_defect() == 0.0 &&
      [&] {
        for (int i = 0; i < rank; ++i)
          for (int j = 0; j < rank; ++j)
            if (best_w.at(i, j) != (i == j ? Complex{1.0} : Complex{})) return false;
        return true;
      }();
  result.relative_entropy = best;
  result.value = k.value() * best;
  result.best = decomposition_from_spectrum(
      n, spec, best_w, is_spectral ? DecompositionSource::spectral : DecompositionSource::isometry);
  return result;
}

}  // namespace mre
