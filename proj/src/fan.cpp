#include "arrlab/fan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kDegenerateProjection = 1e-12;
constexpr double kDegenerateWeightBudget = 1e-9;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

FanFrame make_frame(std::vector<double> u_raw, std::vector<double> w_raw) {
  if (u_raw.size() != w_raw.size() || u_raw.size() < 3)
    fail(ErrorCode::BadParam, "frame needs two vectors of equal dimension >= 3");
  const double nu = norm(u_raw);
  if (nu < 1e-8) fail(ErrorCode::BadParam, "frame u vector is numerically zero");
  for (double& v : u_raw) v /= nu;
  const double uw = dot(u_raw, w_raw);
  for (std::size_t i = 0; i < w_raw.size(); ++i) w_raw[i] -= uw * u_raw[i];
  const double nw = norm(w_raw);
  if (nw < 1e-8) fail(ErrorCode::BadParam, "frame vectors are numerically dependent");
  for (double& v : w_raw) v /= nw;
  return FanFrame{std::move(u_raw), std::move(w_raw)};
}

std::optional<double> sector_angle(const std::vector<double>& p, const FanFrame& frame) {
  if (p.size() != frame.dim()) fail(ErrorCode::BadParam, "point dimension mismatch");
  const double x = dot(p, frame.u);
  const double y = dot(p, frame.w);
  if (std::sqrt(x * x + y * y) < kDegenerateProjection) return std::nullopt;
  double angle = std::atan2(y, x);
  if (angle < 0) angle += kTwoPi;
  if (angle >= kTwoPi) angle = 0.0;
  return angle;
}

namespace {

struct ProjectedMeasure {
  std::vector<double> angles;   // in [0, 2*pi)
  std::vector<double> weights;  // matching, only non-degenerate points
  double valid_weight = 0.0;
};

ProjectedMeasure project_measure(const MeasureCloud& mu, const FanFrame& frame) {
  if (mu.dim != frame.dim())
    fail(ErrorCode::BadParam, "measure and frame dimensions differ");
  ProjectedMeasure out;
  out.angles.reserve(mu.count());
  out.weights.reserve(mu.count());
  double dropped = 0.0;
  const double* u = frame.u.data();
  const double* w = frame.w.data();
  const std::size_t d = mu.dim;
  for (std::size_t i = 0; i < mu.count(); ++i) {
    const double* p = mu.point(i);
    double x = 0.0, y = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      x += p[j] * u[j];
      y += p[j] * w[j];
    }
    if (x * x + y * y < kDegenerateProjection * kDegenerateProjection) {
      dropped += mu.weights[i];
      continue;
    }
    double angle = std::atan2(y, x);
    if (angle < 0) angle += kTwoPi;
    if (angle >= kTwoPi) angle = 0.0;
    out.angles.push_back(angle);
    out.weights.push_back(mu.weights[i]);
    out.valid_weight += mu.weights[i];
  }
  if (dropped > kDegenerateWeightBudget)
    fail(ErrorCode::DegenerateProjection,
         "too much weight projects into the fan axis");
  return out;
}

// Truncated von Mises kernel (concentration 1/sigma^2) sampled on a circular
// grid; grid resolution tracks sigma so the kernel stays resolved.
struct Kernel {
  std::size_t grid = 0;      // power of two
  std::size_t half = 0;      // taps at offsets -half..half
  std::vector<double> taps;  // 2*half + 1 values, summing to 1
};

const Kernel& kernel_for_sigma(double sigma) {
  static std::map<double, Kernel> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(sigma);
  if (it != cache.end()) return it->second;

  Kernel k;
  std::size_t grid = 256;
  while (kTwoPi / static_cast<double>(grid) > sigma / 4.0 && grid < 8192) grid *= 2;
  k.grid = grid;
  const double delta = kTwoPi / static_cast<double>(grid);
  const double kappa = 1.0 / (sigma * sigma);
  // Support where the relative density stays above exp(-45).
  double theta_max = kappa > 22.5 ? std::acos(1.0 - 45.0 / kappa) : kTwoPi;
  std::size_t half = static_cast<std::size_t>(theta_max / delta) + 1;
  half = std::min(half, grid / 2);
  k.half = half;
  k.taps.resize(2 * half + 1);
  double total = 0.0;
  for (std::size_t j = 0; j < k.taps.size(); ++j) {
    const double theta = (static_cast<double>(j) - static_cast<double>(half)) * delta;
    k.taps[j] = std::exp(kappa * (std::cos(theta) - 1.0));
    total += k.taps[j];
  }
  for (double& t : k.taps) t /= total;
  return cache.emplace(sigma, std::move(k)).first->second;
}

// Circular distribution of a projected measure, either smoothed on a grid
// (piecewise-linear CDF between bin edges) or raw (step CDF).
class CircularDistribution {
 public:
  CircularDistribution(const ProjectedMeasure& pm, double sigma) : sigma_(sigma) {
    total_ = pm.valid_weight;
    if (sigma_ > 0.0) {
      build_smoothed(pm);
    } else {
      build_hard(pm);
    }
  }

  double total() const { return total_; }

  // Cumulative mass of [0, t), t in [0, 2*pi].
  double cdf(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= kTwoPi) return total_;
    if (sigma_ > 0.0) {
      const double x = t / delta_;
      std::size_t bin = std::min(static_cast<std::size_t>(x), grid_ - 1);
      const double frac = x - static_cast<double>(bin);
      return edges_[bin] + frac * (edges_[bin + 1] - edges_[bin]);
    }
    const auto it = std::lower_bound(angles_.begin(), angles_.end(), t);
    return prefix_[static_cast<std::size_t>(it - angles_.begin())];
  }

  double mass(double a, double b) const {
    if (b >= a) return cdf(b) - cdf(a);
    return total_ - (cdf(a) - cdf(b));
  }

  // Smallest t with cumulative mass >= q.
  double quantile(double q) const {
    if (q < -1e-12 || q > total_ * (1.0 + 1e-12))
      fail(ErrorCode::BadParam, "quantile target out of range");
    if (sigma_ > 0.0) {
      const auto it = std::lower_bound(edges_.begin(), edges_.end(), q);
      if (it == edges_.begin()) return 0.0;
      if (it == edges_.end()) fail(ErrorCode::ImproperMeasure, "quantile beyond support");
      const std::size_t bin = static_cast<std::size_t>(it - edges_.begin()) - 1;
      const double bin_mass = edges_[bin + 1] - edges_[bin];
      if (bin_mass <= 0.0)
        fail(ErrorCode::ImproperMeasure,
             "smoothed density vanishes at the requested quantile");
      return delta_ * (static_cast<double>(bin) + (q - edges_[bin]) / bin_mass);
    }
    const double eps = 1e-12 * std::max(1.0, total_);
    std::size_t lo = 0, hi = angles_.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (prefix_[mid + 1] >= q - eps)
        hi = mid;
      else
        lo = mid + 1;
    }
    if (lo == angles_.size())
      fail(ErrorCode::ImproperMeasure, "raw quantile beyond support");
    return angles_[lo];
  }

 private:
  void build_smoothed(const ProjectedMeasure& pm) {
    const Kernel& kernel = kernel_for_sigma(sigma_);
    grid_ = kernel.grid;
    delta_ = kTwoPi / static_cast<double>(grid_);
    std::vector<double> bins(grid_, 0.0);
    for (std::size_t i = 0; i < pm.angles.size(); ++i) {
      const double x = pm.angles[i] / delta_;
      std::size_t b = std::min(static_cast<std::size_t>(x), grid_ - 1);
      const double frac = x - static_cast<double>(b);
      bins[b] += pm.weights[i] * (1.0 - frac);
      bins[(b + 1) & (grid_ - 1)] += pm.weights[i] * frac;
    }
    std::vector<double> smoothed(grid_, 0.0);
    const std::size_t half = kernel.half;
    for (std::size_t b = 0; b < grid_; ++b) {
      const double v = bins[b];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < kernel.taps.size(); ++j) {
        const std::size_t target =
            (b + grid_ + j - half) & (grid_ - 1);  // grid_ is a power of two
        smoothed[target] += v * kernel.taps[j];
      }
    }
    edges_.assign(grid_ + 1, 0.0);
    for (std::size_t b = 0; b < grid_; ++b) edges_[b + 1] = edges_[b] + smoothed[b];
    // Pin the exact total so telescoping sums stay consistent.
    edges_[grid_] = total_;
  }

  void build_hard(const ProjectedMeasure& pm) {
    std::vector<std::size_t> order(pm.angles.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pm.angles[a] < pm.angles[b];
    });
    angles_.reserve(order.size());
    prefix_.assign(1, 0.0);
    for (std::size_t idx : order) {
      angles_.push_back(pm.angles[idx]);
      prefix_.push_back(prefix_.back() + pm.weights[idx]);
    }
  }

  double sigma_;
  double total_ = 0.0;
  // smoothed state
  std::size_t grid_ = 0;
  double delta_ = 0.0;
  std::vector<double> edges_;
  // hard state
  std::vector<double> angles_;
  std::vector<double> prefix_;
};

}  // namespace

Fan equipartition_fan(const FanFrame& frame, const MeasureCloud& mu1, std::size_t n,
                      double sigma) {
  if (n < 1) fail(ErrorCode::BadParam, "fan needs at least one cut");
  if (sigma < 0.0) fail(ErrorCode::BadParam, "negative kernel width");
  const ProjectedMeasure pm = project_measure(mu1, frame);
  if (!(pm.valid_weight > 0.0))
    fail(ErrorCode::ImproperMeasure, "no projectable weight");
  const CircularDistribution dist(pm, sigma);
  Fan fan;
  fan.frame = frame;
  fan.n = n;
  fan.psi.assign(n, 0.0);
  for (std::size_t s = 1; s < n; ++s) {
    fan.psi[s] =
        dist.quantile(dist.total() * static_cast<double>(s) / static_cast<double>(n));
  }
  for (std::size_t s = 1; s < n; ++s) {
    if (!(fan.psi[s] > fan.psi[s - 1]))
      fail(ErrorCode::ImproperMeasure, "equipartition cuts are not strictly increasing");
  }
  if (n > 1 && !(fan.psi[n - 1] < kTwoPi))
    fail(ErrorCode::ImproperMeasure, "last cut reached the full circle");
  return fan;
}

std::vector<double> sector_masses(const Fan& fan, const MeasureCloud& mu, double sigma) {
  if (sigma < 0.0) fail(ErrorCode::BadParam, "negative kernel width");
  const ProjectedMeasure pm = project_measure(mu, fan.frame);
  const CircularDistribution dist(pm, sigma);
  std::vector<double> masses(fan.n, 0.0);
  for (std::size_t s = 0; s < fan.n; ++s) {
    const double a = fan.psi[s];
    const double b = s + 1 < fan.n ? fan.psi[s + 1] : kTwoPi;
    masses[s] = dist.cdf(b) - dist.cdf(a);
  }
  return masses;
}

std::vector<double> test_map_fan(const FanFrame& frame,
                                 const std::vector<MeasureCloud>& measures,
                                 std::size_t n, double sigma) {
  if (measures.empty()) fail(ErrorCode::BadParam, "need at least one measure");
  const Fan fan = equipartition_fan(frame, measures[0], n, sigma);
  std::vector<double> out;
  out.reserve((measures.size() - 1) * n);
  for (std::size_t i = 1; i < measures.size(); ++i) {
    const std::vector<double> masses = sector_masses(fan, measures[i], sigma);
    const double baseline =
        std::accumulate(masses.begin(), masses.end(), 0.0) / static_cast<double>(n);
    for (double m : masses) out.push_back(m - baseline);
  }
  return out;
}

std::vector<double> test_map_arrangement(const FanFrame& frame,
                                         const std::vector<MeasureCloud>& measures,
                                         std::size_t n, double sigma) {
  if (measures.empty()) fail(ErrorCode::BadParam, "need at least one measure");
  const Fan fan = equipartition_fan(frame, measures[0], n, sigma);
  std::vector<double> out;
  out.reserve(measures.size() * n);
  for (std::size_t r = 0; r < n; ++r) {
    const double next = r + 1 < n ? fan.psi[r + 1] : fan.psi[0] + kTwoPi;
    out.push_back((next - fan.psi[r]) - kTwoPi / static_cast<double>(n));
  }
  const std::vector<double> mass_blocks = test_map_fan(frame, measures, n, sigma);
  out.insert(out.end(), mass_blocks.begin(), mass_blocks.end());
  return out;
}

namespace {

std::vector<double> grouped_antipodal_differences(const std::vector<double>& x,
                                                  const Ration& ration,
                                                  std::size_t block_count) {
  // x holds block_count groups of n sector values; returns per group the
  // block-t minus block-(k+t) sums.
  std::vector<double> out;
  out.reserve(block_count * ration.k);
  for (std::size_t g = 0; g < block_count; ++g) {
    const double* base = x.data() + g * ration.n;
    for (std::size_t t = 1; t <= ration.k; ++t) {
      const std::size_t beta_t = ration.block_start(t) - 1;      // 0-based sector
      const std::size_t beta_kt = ration.block_start(ration.k + t) - 1;
      double acc = 0.0;
      for (std::size_t s = 0; s < static_cast<std::size_t>(ration.parts[t - 1]); ++s) {
        acc += base[beta_t + s] - base[beta_kt + s];
      }
      out.push_back(acc);
    }
  }
  return out;
}

double wrap_to_pi(double x) {
  while (x > 3.14159265358979323846) x -= kTwoPi;
  while (x <= -3.14159265358979323846) x += kTwoPi;
  return x;
}

}  // namespace

std::vector<double> residual_given_fan(SolveKind kind, const Fan& fan,
                                       const std::vector<MeasureCloud>& measures,
                                       const Ration& ration, double sigma) {
  if (measures.empty()) fail(ErrorCode::BadParam, "need at least one measure");
  if (fan.n != ration.n)
    fail(ErrorCode::BadParam, "fan sector count does not match the ration");
  std::vector<double> out;
  if (kind == SolveKind::Arrangement) {
    for (std::size_t l = 1; l <= ration.k; ++l) {
      const std::size_t beta = ration.block_start(l) - 1;  // 0-based cut index
      out.push_back(wrap_to_pi(fan.psi[beta + ration.n / 2] - fan.psi[beta] -
                               kTwoPi / 2.0));
    }
  }
  if (measures.size() < 2) return out;
  std::vector<double> x;
  x.reserve((measures.size() - 1) * fan.n);
  for (std::size_t i = 1; i < measures.size(); ++i) {
    const std::vector<double> masses = sector_masses(fan, measures[i], sigma);
    const double baseline =
        std::accumulate(masses.begin(), masses.end(), 0.0) / static_cast<double>(fan.n);
    for (double m : masses) x.push_back(m - baseline);
  }
  const std::vector<double> grouped =
      grouped_antipodal_differences(x, ration, measures.size() - 1);
  out.insert(out.end(), grouped.begin(), grouped.end());
  return out;
}

std::vector<double> residual_fan(const FanFrame& frame,
                                 const std::vector<MeasureCloud>& measures,
                                 const Ration& ration, double sigma) {
  if (measures.size() < 2)
    fail(ErrorCode::BadParam, "the fan residual needs at least two measures");
  const Fan fan = equipartition_fan(frame, measures[0], ration.n, sigma);
  return residual_given_fan(SolveKind::Fan, fan, measures, ration, sigma);
}

std::vector<double> residual_arrangement(const FanFrame& frame,
                                         const std::vector<MeasureCloud>& measures,
                                         const Ration& ration, double sigma) {
  if (measures.empty()) fail(ErrorCode::BadParam, "need at least one measure");
  const Fan fan = equipartition_fan(frame, measures[0], ration.n, sigma);
  return residual_given_fan(SolveKind::Arrangement, fan, measures, ration, sigma);
}

FanFrame dihedral_act_on_config(std::size_t eps_power, bool reflect,
                                const FanFrame& frame, const MeasureCloud& mu1,
                                std::size_t n, double sigma) {
  FanFrame current = frame;
  if (reflect) {
    for (double& v : current.w) v = -v;
  }
  eps_power %= n;
  if (eps_power > 0) {
    const Fan fan = equipartition_fan(current, mu1, n, sigma);
    // eps relabels (v_1..v_n) -> (v_n, v_1, ..., v_{n-1}); applying it a
    // times anchors the fan at cut index n - a (0-based).
    const double angle = fan.psi[n - eps_power];
    const double c = std::cos(angle), s = std::sin(angle);
    FanFrame rotated = current;
    for (std::size_t i = 0; i < current.dim(); ++i) {
      rotated.u[i] = c * current.u[i] + s * current.w[i];
      rotated.w[i] = -s * current.u[i] + c * current.w[i];
    }
    current = std::move(rotated);
  }
  return current;
}

PartitionReport verify(const Fan& fan, const std::vector<MeasureCloud>& measures,
                       const Ration& ration, double tol) {
  if (measures.empty()) fail(ErrorCode::BadParam, "need at least one measure");
  if (fan.n != ration.n)
    fail(ErrorCode::BadParam, "fan sector count does not match the ration");
  PartitionReport report;
  report.tol = tol;
  for (const MeasureCloud& mu : measures) {
    report.sector_masses.push_back(sector_masses(fan, mu, 0.0));
  }
  for (const std::vector<double>& masses : report.sector_masses) {
    std::vector<double> groups(2 * ration.k, 0.0);
    for (std::size_t t = 1; t <= 2 * ration.k; ++t) {
      const std::size_t beta = ration.block_start(t) - 1;
      for (std::size_t s = 0; s < static_cast<std::size_t>(ration.parts[t - 1]); ++s)
        groups[t - 1] += masses[beta + s];
    }
    report.group_masses.push_back(std::move(groups));
  }

  // mu_1 receives the exact proportions a_t/n of its projected mass.
  const double total_1 = std::accumulate(report.sector_masses[0].begin(),
                                         report.sector_masses[0].end(), 0.0);
  for (std::size_t t = 1; t <= 2 * ration.k; ++t) {
    report.residual.push_back(report.group_masses[0][t - 1] -
                              total_1 * ration.alpha(t));
  }
  // Every measure balances antipodal blocks.
  for (std::size_t l = 0; l < measures.size(); ++l) {
    for (std::size_t t = 1; t <= ration.k; ++t) {
      report.residual.push_back(report.group_masses[l][t - 1] -
                                report.group_masses[l][ration.k + t - 1]);
    }
  }
  const double per_sector = total_1 / static_cast<double>(fan.n);
  for (double m : report.sector_masses[0]) {
    report.equipartition_error =
        std::max(report.equipartition_error, std::abs(m - per_sector));
  }
  for (double r : report.residual)
    report.residual_max = std::max(report.residual_max, std::abs(r));
  report.pass = report.residual_max <= tol && report.equipartition_error <= tol;
  return report;
}

}  // namespace arrlab
