#pragma once

#include "mre/bounds.hpp"
#include "mre/mixed_opt.hpp"
#include "mre/multi_rdm.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mre {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitMalformedInput = 2;
inline constexpr int kExitUnsupported = 3;

enum class MeasureSelection { mre_only, air_only, all };

struct ComputeOptions {
  std::string state_path;
  Convention convention = Convention::pairing_count;
  SurrogateMode surrogate = SurrogateMode::conditional_decomposition;
  MeasureSelection measure = MeasureSelection::all;
  OptimizerConfig mixed;  // used when the file holds a density matrix
};

int run_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::string family = "eq15";
  double from = 0.0;
  double to = 1.4142135623730951;
  int steps = 50;
  std::string out_path;
  Convention convention = Convention::pairing_count;
};

// The swept three-qubit family, parameterized by x in [0, sqrt(2)].
StateVector sweep_family_state(double x);

// CSV text for the requested grid ("x,mre,e_air" header, %.9g values, LF).
std::string sweep_csv(const SweepOptions& options);

int run_sweep(const SweepOptions& options, std::ostream& err);

// Known-value catalog plus reduced-count invariant sweeps; prints one row
// per check and returns 0 only if everything passes.
int run_verify(std::uint64_t seed, std::ostream& out);

// Full argv interface ("mre compute|sweep|verify ...").
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mre
