#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "arrlab/errors.hpp"
#include "arrlab/fan.hpp"

namespace arrlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPenalty = 1e6;
constexpr double kMinCutGap = 1e-9;

// Self-contained generator so solver output does not depend on the standard
// library's distribution implementations.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_bits() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() {  // in (0, 1]
    return (static_cast<double>(next_bits() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::vector<double> random_params(Rng& rng, std::size_t d) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> params(2 * d);
    for (double& v : params) v = rng.gaussian();
    try {
      std::vector<double> u(params.begin(), params.begin() + d);
      std::vector<double> w(params.begin() + d, params.end());
      const FanFrame frame = make_frame(std::move(u), std::move(w));
      std::vector<double> out = frame.u;
      out.insert(out.end(), frame.w.begin(), frame.w.end());
      return out;
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorCode::Internal, "could not draw a random frame");
}

FanFrame frame_from_params(const std::vector<double>& params) {
  const std::size_t d = params.size() / 2;
  return make_frame(std::vector<double>(params.begin(), params.begin() + d),
                    std::vector<double>(params.begin() + d, params.end()));
}

struct Objective {
  SolveKind kind;
  const std::vector<MeasureCloud>* measures;
  const Ration* ration;
  double sigma;
  std::size_t* evals;

  double operator()(const std::vector<double>& params) const {
    ++*evals;
    try {
      const FanFrame frame = frame_from_params(params);
      const Fan fan =
          equipartition_fan(frame, (*measures)[0], ration->n, sigma);
      double prev = 0.0;
      for (std::size_t s = 1; s < fan.n; ++s) {
        if (fan.psi[s] - prev < kMinCutGap) return kPenalty;
        prev = fan.psi[s];
      }
      if (kTwoPi - prev < kMinCutGap) return kPenalty;
      const std::vector<double> r =
          residual_given_fan(kind, fan, *measures, *ration, sigma);
      double f = 0.0;
      for (double v : r) f += v * v;
      return f;
    } catch (const Error&) {
      return kPenalty;
    }
  }
};

std::vector<double> retract_params(const std::vector<double>& params) {
  try {
    const FanFrame frame = frame_from_params(params);
    std::vector<double> out = frame.u;
    out.insert(out.end(), frame.w.begin(), frame.w.end());
    return out;
  } catch (const Error&) {
    return params;  // objective already penalizes degenerate frames
  }
}

double dot_self(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

// Dense BFGS with central finite differences and Armijo backtracking; the
// iterate is re-orthonormalized onto the frame manifold after every step.
template <typename F>
double bfgs_minimize(const F& f, std::vector<double>& x, double f_target,
                     std::size_t max_iterations, std::size_t max_evals,
                     const std::size_t* eval_counter) {
  const std::size_t p = x.size();
  const double h = 1e-5;
  std::vector<double> hess_inv(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) hess_inv[i * p + i] = 1.0;

  auto gradient = [&](const std::vector<double>& at) {
    std::vector<double> g(p);
    std::vector<double> probe = at;
    for (std::size_t i = 0; i < p; ++i) {
      probe[i] = at[i] + h;
      const double fp = f(probe);
      probe[i] = at[i] - h;
      const double fm = f(probe);
      probe[i] = at[i];
      g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
  };

  double fx = f(x);
  std::vector<double> g = gradient(x);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    if (fx <= f_target) break;
    if (*eval_counter >= max_evals) break;
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax < 1e-10) break;

    std::vector<double> direction(p, 0.0);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) direction[i] -= hess_inv[i * p + j] * g[j];
    double slope = 0.0;
    for (std::size_t i = 0; i < p; ++i) slope += direction[i] * g[i];
    if (slope >= 0.0) {  // reset to steepest descent
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) hess_inv[i * p + j] = (i == j) ? 1.0 : 0.0;
        direction[i] = -g[i];
      }
      slope = -dot_self(g);
    }

    double step = 1.0;
    std::vector<double> x_new(p);
    double f_new = fx;
    bool accepted = false;
    for (int halving = 0; halving < 28; ++halving) {
      for (std::size_t i = 0; i < p; ++i) x_new[i] = x[i] + step * direction[i];
      f_new = f(x_new);
      if (f_new <= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
      if (*eval_counter >= max_evals) break;
    }
    if (!accepted) break;

    x_new = retract_params(x_new);
    const std::vector<double> g_new = gradient(x_new);
    std::vector<double> s(p), y(p);
    double sy = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
      sy += s[i] * y[i];
    }
    if (sy > 1e-14) {
      // Sherman-Morrison style BFGS inverse update.
      std::vector<double> hy(p, 0.0);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) hy[i] += hess_inv[i * p + j] * y[j];
      double yhy = 0.0;
      for (std::size_t i = 0; i < p; ++i) yhy += y[i] * hy[i];
      const double c1 = (sy + yhy) / (sy * sy);
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          hess_inv[i * p + j] += c1 * s[i] * s[j] -
                                 (hy[i] * s[j] + s[i] * hy[j]) / sy;
        }
      }
    }
    double move = 0.0;
    for (std::size_t i = 0; i < p; ++i) move = std::max(move, std::abs(s[i]));
    x = std::move(x_new);
    fx = f_new;
    g = g_new;
    if (move < 1e-12) break;
  }
  return fx;

}

// Deterministic compass search for the hard (sigma = 0) residual, whose
// piecewise-constant pieces defeat finite differences.
template <typename F>
double compass_minimize(const F& f, std::vector<double>& x, double fx,
                        double f_target, std::size_t max_evals,
                        const std::size_t* eval_counter) {
  double step = 0.02;
  const std::size_t p = x.size();
  std::vector<double> probe = x;
  while (step > 1e-9 && *eval_counter < max_evals && fx > f_target) {
    bool improved = false;
    for (std::size_t i = 0; i < p && *eval_counter < max_evals; ++i) {
      for (double sign : {1.0, -1.0}) {
        probe = x;
        probe[i] += sign * step;
        if (f(probe) < fx) {
          probe = retract_params(probe);
          const double fp = f(probe);
          if (fp < fx) {
            x = probe;
            fx = fp;
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return fx;
}

}  // namespace

SolveResult solve(SolveKind kind, const std::vector<MeasureCloud>& measures,
                  const Ration& ration, const SolveConfig& config) {
  if (measures.empty()) fail(ErrorCode::BadParam, "need at least one measure");
  if (config.restarts == 0) fail(ErrorCode::BadParam, "need at least one restart");
  if (config.designated >= measures.size())
    fail(ErrorCode::BadParam, "designated measure index out of range");
  const std::size_t d = measures[0].dim;
  for (const MeasureCloud& mu : measures) {
    if (mu.dim != d) fail(ErrorCode::BadParam, "measures have mixed dimensions");
  }

  std::vector<MeasureCloud> work = measures;
  if (config.designated != 0) std::swap(work[0], work[config.designated]);

  SolveResult best;
  best.pass = false;
  bool have_best = false;

  if (config.designated != 0) {
    best.warnings.push_back("measure order in the report: designated measure #" +
                            std::to_string(config.designated) + " first");
  }
  const std::size_t j = measures.size();
  const std::size_t dim_bound = kind == SolveKind::Fan ? ration.k * (j - 1) : ration.k * j;
  if (dim_bound + 1 >= d) {
    best.warnings.push_back(
        "dimension condition fails (" + std::to_string(dim_bound) + " >= d-1 = " +
        std::to_string(d - 1) + "); a partition is not guaranteed to exist");
  }

  std::size_t total_evals = 0;
  for (std::size_t restart = 0; restart < config.restarts; ++restart) {
    Rng rng(config.seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL * (restart + 1));
    std::vector<double> x = random_params(rng, d);
    std::size_t evals = 0;

    for (double sigma : config.sigma_schedule) {
      if (sigma <= 0.0) continue;  // the hard stage runs below
      Objective obj{kind, &work, &ration, sigma, &evals};
      bfgs_minimize(obj, x, 1e-18, 80, config.max_evals, &evals);
      if (evals >= config.max_evals) break;
    }

    Objective hard{kind, &work, &ration, 0.0, &evals};
    double f_hard = hard(x);
    // Angle entries carry no point-mass granularity, so the arrangement kind
    // polishes them essentially to the step floor.
    const double f_target = kind == SolveKind::Arrangement
                                ? 1e-16
                                : 0.0025 * config.tol * config.tol;
    f_hard = compass_minimize(hard, x, f_hard, f_target,
                              std::min(config.max_evals, evals + 3000), &evals);
    total_evals += evals;

    try {
      const FanFrame frame = frame_from_params(x);
      Fan fan = equipartition_fan(frame, work[0], ration.n, 0.0);
      PartitionReport report = verify(fan, work, ration, config.tol);
      if (kind == SolveKind::Arrangement) {
        const std::vector<double> angle_entries =
            residual_given_fan(kind, fan, {work[0]}, ration, 0.0);
        for (std::size_t l = 0; l < ration.k; ++l) {
          report.residual.push_back(angle_entries[l]);
          report.residual_max =
              std::max(report.residual_max, std::abs(angle_entries[l]));
        }
        report.notes.push_back("last " + std::to_string(ration.k) +
                               " residual entries are the cut antipodality gaps");
        report.pass = report.residual_max <= config.tol &&
                      report.equipartition_error <= config.tol;
      }
      const bool better =
          !have_best || (report.pass && !best.report.pass) ||
          (report.pass == best.report.pass &&
           report.residual_max < best.report.residual_max);
      if (better) {
        best.fan = std::move(fan);
        best.report = std::move(report);
        best.pass = best.report.pass;
        best.winning_restart = restart;
        have_best = true;
      }
      if (have_best && best.pass) break;  // first passing restart wins
    } catch (const Error&) {
      continue;  // degenerate final frame: try the next restart
    }
  }
  best.evals_used = total_evals;
  if (!have_best)
    fail(ErrorCode::ImproperMeasure,
         "every restart ended in a degenerate configuration");
  return best;
}

}  // namespace arrlab
