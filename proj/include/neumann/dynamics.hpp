#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "neumann/polynomial.hpp"

namespace neumann {

// One point of the reduced phase space in floating point.
struct PhasePoint {
  std::array<double, 3> X{};
  std::array<double, 3> M{};
};

struct SimConfig {
  int n = 1;
  std::array<double, 3> a{1.0, 2.0, 3.0};
  double t_end = 50.0;
  double rtol = 1e-10;
  double atol = 1e-10;
  bool project_every_step = true;
  double sample_interval = 0.1;
  uint64_t seed = 1;
};

struct Sample {
  double t = 0.0;
  PhasePoint p;
  double H = 0.0;
  double I = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
};

// Maxima over all samples, relative to the t = 0 values for H and I (with an
// absolute floor of 1e-12 on the reference magnitude) and absolute for the
// Casimir defects |C1 - 1| and |C2|.
struct DriftLedger {
  double max_rel_dH = 0.0;
  double max_rel_dI = 0.0;
  double max_abs_dC1 = 0.0;
  double max_abs_dC2 = 0.0;
};

struct Trajectory {
  std::vector<Sample> samples;
  DriftLedger drift;
  bool ok = false;
  std::string message;  // diagnostic when !ok (step underflow / non-finite state)
  long accepted_steps = 0;
  long rejected_steps = 0;
};

// A polynomial in (X, M) with numeric parameters folded into the coefficients,
// evaluable at a PhasePoint by term accumulation.
struct CompiledPoly {
  struct Term {
    double c = 0.0;
    std::array<uint8_t, 6> e{};  // exponents of X1..X3, M1..M3
  };
  std::vector<Term> terms;

  static CompiledPoly from(const Polynomial& p, const std::array<double, 3>& a);
  double eval(const PhasePoint& p) const;
};

// The n-th flow with numeric parameters: right-hand side (Xdot, Mdot) of the
// Hamiltonian equations together with compiled observables H, I, and the
// orbit invariants evaluated directly.
struct CompiledSystem {
  int n = 1;
  std::array<double, 3> a{};
  std::array<CompiledPoly, 6> rhs;  // Xdot1..3, Mdot1..3
  CompiledPoly H;
  CompiledPoly I;

  void eval_rhs(const PhasePoint& p, std::array<double, 6>& out) const;
};

CompiledSystem compile_rhs(int n, const std::array<double, 3>& a);

// Orbit restoration: X <- X/|X|, then M <- M - (X.M)X with the projected X.
// Throws std::domain_error when |X| = 0.
PhasePoint project(const PhasePoint& p);

// Adaptive Dormand-Prince 5(4) with PI step-size control. Projection (when
// enabled) is applied after each accepted step only. Samples are recorded at
// t = 0 and at every multiple of sample_interval up to t_end (steps are clamped
// so sample times are hit exactly). direction = -1 integrates the reversed flow,
// used by the time-reversal check.
Trajectory integrate(const CompiledSystem& sys, const SimConfig& cfg, const PhasePoint& p0,
                     int direction = +1);

// Convenience: compile then integrate.
Trajectory integrate(const SimConfig& cfg, const PhasePoint& p0);

// Floating-point image of the exact rational orbit sampler: both invariants hold
// exactly before rounding. The tangent vector components are drawn in [-2, 2].
PhasePoint sample_phase_point(uint64_t seed);

struct DriftThresholds {
  double rel_dH = 1e-8;
  double rel_dI = 1e-8;
  double abs_dC1 = 1e-10;
  double abs_dC2 = 1e-10;
};

struct DriftReport {
  bool pass = false;
  DriftLedger drift;
  DriftThresholds thresholds;
  std::string detail;  // names the first violated threshold
};

DriftReport drift_report(const Trajectory& tr, const DriftThresholds& thresholds = {});

// CSV with the exact column order
//   t,X1,X2,X3,M1,M2,M3,H,I,C1,C2,dH_rel,dI_rel
// and all floats rendered with 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

}  // namespace neumann
