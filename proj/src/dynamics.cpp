#include "neumann/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "neumann/e3.hpp"
#include "neumann/potentials.hpp"

namespace neumann {

namespace {

double ipow(double x, unsigned e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1u) r *= x;
    x *= x;
    e >>= 1u;
  }
  return r;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool finite_state(const std::array<double, 6>& y) {
  for (double v : y) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

PhasePoint to_point(const std::array<double, 6>& y) {
  return PhasePoint{{y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
}

void from_point(const PhasePoint& p, std::array<double, 6>& y) {
  y[0] = p.X[0];
  y[1] = p.X[1];
  y[2] = p.X[2];
  y[3] = p.M[0];
  y[4] = p.M[1];
  y[5] = p.M[2];
}

}  // namespace

CompiledPoly CompiledPoly::from(const Polynomial& p, const std::array<double, 3>& a) {
  CompiledPoly out;
  out.terms.reserve(p.term_count());
  for (const auto& [mono, coeff] : p.terms()) {
    Term t;
    t.c = coeff.to_double();
    for (int i = 0; i < 3; ++i) {
      t.c *= ipow(a[i], mono.e[static_cast<int>(Var::a1) + i]);
    }
    for (int i = 0; i < 6; ++i) {
      t.e[i] = mono.e[i];
    }
    out.terms.push_back(t);
  }
  return out;
}

double CompiledPoly::eval(const PhasePoint& p) const {
  double total = 0.0;
  for (const Term& t : terms) {
    double v = t.c;
    for (int i = 0; i < 3; ++i) {
      if (t.e[i]) v *= ipow(p.X[i], t.e[i]);
      if (t.e[i + 3]) v *= ipow(p.M[i], t.e[i + 3]);
    }
    total += v;
  }
  return total;
}

void CompiledSystem::eval_rhs(const PhasePoint& p, std::array<double, 6>& out) const {
  for (int i = 0; i < 6; ++i) {
    out[i] = rhs[i].eval(p);
  }
}

CompiledSystem compile_rhs(int n, const std::array<double, 3>& a) {
  if (n < 1) throw std::domain_error("compile_rhs: n must be >= 1");
  const IntegrableSystem sys = build_system(n);
  const VectorField vf = hamiltonian_vector_field(sys.H);

  CompiledSystem out;
  out.n = n;
  out.a = a;
  for (int i = 0; i < 3; ++i) {
    out.rhs[i] = CompiledPoly::from(vf.xdot[i], a);
    out.rhs[i + 3] = CompiledPoly::from(vf.mdot[i], a);
  }
  out.H = CompiledPoly::from(sys.H, a);
  out.I = CompiledPoly::from(sys.I, a);
  return out;
}

PhasePoint project(const PhasePoint& p) {
  const double norm = std::sqrt(p.X[0] * p.X[0] + p.X[1] * p.X[1] + p.X[2] * p.X[2]);
  if (norm == 0.0) throw std::domain_error("project: |X| = 0");
  PhasePoint out;
  for (int i = 0; i < 3; ++i) out.X[i] = p.X[i] / norm;
  const double dot = out.X[0] * p.M[0] + out.X[1] * p.M[1] + out.X[2] * p.M[2];
  for (int i = 0; i < 3; ++i) out.M[i] = p.M[i] - dot * out.X[i];
  return out;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 5179.0 / 57600, kE3 = 7571.0 / 16695, kE4 = 393.0 / 640,
                 kE5 = -92097.0 / 339200, kE6 = 187.0 / 2100, kE7 = 1.0 / 40;

struct Stepper {
  const CompiledSystem& sys;
  int direction;
  std::array<double, 6> k1, k2, k3, k4, k5, k6, k7, ytmp, y5, y4;

  void rhs(const std::array<double, 6>& y, std::array<double, 6>& out) {
    sys.eval_rhs(to_point(y), out);
    if (direction < 0) {
      for (double& v : out) v = -v;
    }
  }

  // One trial step of size h from y; fills y5 (order 5) and returns the scaled
  // RMS error estimate against the embedded order-4 solution.
  double attempt(const std::array<double, 6>& y, double h, double rtol, double atol) {
    rhs(y, k1);
    for (int i = 0; i < 6; ++i) ytmp[i] = y[i] + h * kA21 * k1[i];
    rhs(ytmp, k2);
    for (int i = 0; i < 6; ++i) ytmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    rhs(ytmp, k3);
    for (int i = 0; i < 6; ++i) {
      ytmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    }
    rhs(ytmp, k4);
    for (int i = 0; i < 6; ++i) {
      ytmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
    }
    rhs(ytmp, k5);
    for (int i = 0; i < 6; ++i) {
      ytmp[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] +
                            kA65 * k5[i]);
    }
    rhs(ytmp, k6);
    for (int i = 0; i < 6; ++i) {
      y5[i] = y[i] +
              h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] + kB6 * k6[i]);
    }
    rhs(y5, k7);
    for (int i = 0; i < 6; ++i) {
      y4[i] = y[i] + h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                          kE6 * k6[i] + kE7 * k7[i]);
    }
    double sum = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      const double e = (y5[i] - y4[i]) / sc;
      sum += e * e;
    }
    return std::sqrt(sum / 6.0);
  }
};

}  // namespace

Trajectory integrate(const CompiledSystem& sys, const SimConfig& cfg, const PhasePoint& p0,
                     int direction) {
  Trajectory tr;

  const auto record = [&](double t, const PhasePoint& p) {
    Sample s;
    s.t = t;
    s.p = p;
    s.H = sys.H.eval(p);
    s.I = sys.I.eval(p);
    s.C1 = p.X[0] * p.X[0] + p.X[1] * p.X[1] + p.X[2] * p.X[2];
    s.C2 = p.X[0] * p.M[0] + p.X[1] * p.M[1] + p.X[2] * p.M[2];
    tr.samples.push_back(s);
  };

  if (!(cfg.t_end >= 0.0) || !std::isfinite(cfg.t_end)) {
    tr.message = "t_end must be finite and non-negative";
    return tr;
  }
  if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0) || cfg.rtol >= 1.0 || cfg.atol >= 1.0) {
    tr.message = "rtol and atol must lie in (0, 1)";
    return tr;
  }
  if (!(cfg.sample_interval > 0.0)) {
    tr.message = "sample_interval must be positive";
    return tr;
  }

  record(0.0, p0);
  if (cfg.t_end == 0.0) {
    tr.ok = true;
    return tr;
  }

  // Sample targets k * sample_interval, each computed by one multiplication so no
  // accumulation error, with t_end always the final target.
  std::vector<double> targets;
  const double tiny = 1e-12 * std::max(cfg.t_end, 1.0);
  for (long k = 1; static_cast<double>(k) * cfg.sample_interval < cfg.t_end - tiny; ++k) {
    targets.push_back(static_cast<double>(k) * cfg.sample_interval);
  }
  targets.push_back(cfg.t_end);

  Stepper st{sys, direction};
  std::array<double, 6> y;
  from_point(p0, y);

  constexpr double kSafety = 0.9;
  constexpr double kAlpha = 0.14;  // 0.7 / 5
  constexpr double kBeta = 0.08;   // 0.4 / 5
  constexpr double kMinFac = 0.2;
  constexpr double kMaxFac = 5.0;
  const double h_floor = 1e-14 * std::max(cfg.t_end, 1.0);

  double t = 0.0;
  double h = std::min(cfg.sample_interval, cfg.t_end) * 0.1;
  double errold = 1e-4;
  size_t next_target = 0;

  while (next_target < targets.size()) {
    const double target = targets[next_target];
    bool clamped = false;
    double h_step = h;
    if (t + h_step >= target - tiny) {
      h_step = target - t;
      clamped = true;
    }
    if (h_step < h_floor) {
      tr.message = "step size underflow at t = " + format_double(t) +
                   " (h = " + format_double(h_step) + ")";
      return tr;
    }

    const double err = st.attempt(y, h_step, cfg.rtol, cfg.atol);
    if (!std::isfinite(err) || !finite_state(st.y5)) {
      tr.message = "non-finite state at t = " + format_double(t);
      return tr;
    }

    if (err <= 1.0) {
      ++tr.accepted_steps;
      t = clamped ? target : t + h_step;
      y = st.y5;
      if (cfg.project_every_step) {
        from_point(project(to_point(y)), y);
      }
      if (clamped) {
        record(t, to_point(y));
        ++next_target;
      }
      double fac = err == 0.0 ? kMaxFac
                              : kSafety * std::pow(err, -kAlpha) * std::pow(errold, kBeta);
      fac = std::clamp(fac, kMinFac, kMaxFac);
      h = h_step * fac;
      errold = std::max(err, 1e-4);
    } else {
      ++tr.rejected_steps;
      const double fac = std::clamp(kSafety * std::pow(err, -kAlpha), kMinFac, 1.0);
      h = h_step * fac;
    }
  }

  const double ref_H = std::max(std::abs(tr.samples.front().H), 1e-12);
  const double ref_I = std::max(std::abs(tr.samples.front().I), 1e-12);
  for (const Sample& s : tr.samples) {
    tr.drift.max_rel_dH =
        std::max(tr.drift.max_rel_dH, std::abs(s.H - tr.samples.front().H) / ref_H);
    tr.drift.max_rel_dI =
        std::max(tr.drift.max_rel_dI, std::abs(s.I - tr.samples.front().I) / ref_I);
    tr.drift.max_abs_dC1 = std::max(tr.drift.max_abs_dC1, std::abs(s.C1 - 1.0));
    tr.drift.max_abs_dC2 = std::max(tr.drift.max_abs_dC2, std::abs(s.C2));
  }
  tr.ok = true;
  return tr;
}

Trajectory integrate(const SimConfig& cfg, const PhasePoint& p0) {
  return integrate(compile_rhs(cfg.n, cfg.a), cfg, p0, +1);
}

PhasePoint sample_phase_point(uint64_t seed) {
  RationalSampler rng(seed);
  const Rational p = rng.next_rational();
  const Rational q = rng.next_rational();
  const Rational denom = Rational(1) + p * p + q * q;
  const std::array<Rational, 3> X = {Rational(2) * p / denom, Rational(2) * q / denom,
                                     (Rational(1) - p * p - q * q) / denom};
  std::array<Rational, 3> W;
  for (int i = 0; i < 3; ++i) {
    W[i] = Rational(rng.next_int(-200, 200), 100);
  }
  const std::array<Rational, 3> M = {X[1] * W[2] - X[2] * W[1], X[2] * W[0] - X[0] * W[2],
                                     X[0] * W[1] - X[1] * W[0]};
  PhasePoint out;
  for (int i = 0; i < 3; ++i) {
    out.X[i] = X[i].to_double();
    out.M[i] = M[i].to_double();
  }
  return project(out);
}

DriftReport drift_report(const Trajectory& tr, const DriftThresholds& thresholds) {
  DriftReport report;
  report.drift = tr.drift;
  report.thresholds = thresholds;
  if (!tr.ok) {
    report.pass = false;
    report.detail = "integration failed: " + tr.message;
    return report;
  }
  if (tr.drift.max_rel_dH > thresholds.rel_dH) {
    report.detail = "relative H drift " + format_double(tr.drift.max_rel_dH) +
                    " exceeds " + format_double(thresholds.rel_dH);
  } else if (tr.drift.max_rel_dI > thresholds.rel_dI) {
    report.detail = "relative I drift " + format_double(tr.drift.max_rel_dI) +
                    " exceeds " + format_double(thresholds.rel_dI);
  } else if (tr.drift.max_abs_dC1 > thresholds.abs_dC1) {
    report.detail = "|C1 - 1| = " + format_double(tr.drift.max_abs_dC1) + " exceeds " +
                    format_double(thresholds.abs_dC1);
  } else if (tr.drift.max_abs_dC2 > thresholds.abs_dC2) {
    report.detail = "|C2| = " + format_double(tr.drift.max_abs_dC2) + " exceeds " +
                    format_double(thresholds.abs_dC2);
  } else {
    report.pass = true;
    report.detail = "all drift thresholds satisfied";
  }
  return report;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,X1,X2,X3,M1,M2,M3,H,I,C1,C2,dH_rel,dI_rel\n";
  if (tr.samples.empty()) return;
  const double ref_H = std::max(std::abs(tr.samples.front().H), 1e-12);
  const double ref_I = std::max(std::abs(tr.samples.front().I), 1e-12);
  for (const Sample& s : tr.samples) {
    const double dH = std::abs(s.H - tr.samples.front().H) / ref_H;
    const double dI = std::abs(s.I - tr.samples.front().I) / ref_I;
    os << format_double(s.t);
    for (int i = 0; i < 3; ++i) os << ',' << format_double(s.p.X[i]);
    for (int i = 0; i < 3; ++i) os << ',' << format_double(s.p.M[i]);
    os << ',' << format_double(s.H) << ',' << format_double(s.I) << ','
       << format_double(s.C1) << ',' << format_double(s.C2) << ',' << format_double(dH)
       << ',' << format_double(dI) << '\n';
  }
}

}  // namespace neumann
