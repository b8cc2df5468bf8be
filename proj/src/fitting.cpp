#include "braidkc/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace braidkc {

namespace {

double rss_of(std::span<const FitPoint> pts, const std::array<double, 4>& p) {
  double rss = 0;
  for (const auto& [x, y] : pts) {
    double r = y - eval_exp_power(p, x);
    rss += r * r;
  }
  return rss;
}

double r_squared_of(std::span<const FitPoint> pts, double rss) {
  double mean = 0;
  for (const auto& [x, y] : pts) mean += y;
  mean /= static_cast<double>(pts.size());
  double tss = 0;
  for (const auto& [x, y] : pts) tss += (y - mean) * (y - mean);
  return tss > 0 ? 1.0 - rss / tss : 1.0;
}

// Solves A x = b for small dense symmetric A via Gaussian elimination with
// partial pivoting; returns false when a pivot collapses.
template <size_t N>
bool solve_dense(std::array<std::array<double, N>, N> a, std::array<double, N> b,
                 std::array<double, N>& x) {
  for (size_t col = 0; col < N; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < N; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-300) return false;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (size_t r = col + 1; r < N; ++r) {
      double f = a[r][col] / a[col][col];
      for (size_t c = col; c < N; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (size_t i = N; i-- > 0;) {
    double s = b[i];
    for (size_t c = i + 1; c < N; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

double eval_exp_power(const std::array<double, 4>& p, double n) {
  return p[0] + p[1] * std::exp(-p[2] * n) * std::pow(n, p[3]);
}

FitResult fit_inverse_n(std::span<const FitPoint> points) {
  FitResult fr;
  fr.family = FitFamily::inverse_n;
  fr.points_used = points.size();

  bool distinct = false;
  for (size_t i = 1; i < points.size(); ++i) {
    if (points[i].first != points[0].first) distinct = true;
  }
  if (points.size() < 2 || !distinct) {
    throw FitError("fit_inverse_n: need >= 2 points with distinct n", fr);
  }

  // Normal equations for basis {1, 1/n}.
  double s00 = static_cast<double>(points.size());
  double s01 = 0, s11 = 0, t0 = 0, t1 = 0;
  for (const auto& [x, y] : points) {
    double u = 1.0 / x;
    s01 += u;
    s11 += u * u;
    t0 += y;
    t1 += y * u;
  }
  double det = s00 * s11 - s01 * s01;
  if (std::abs(det) < 1e-300) throw FitError("fit_inverse_n: rank-deficient design", fr);
  double a = (s11 * t0 - s01 * t1) / det;
  double b = (s00 * t1 - s01 * t0) / det;
  fr.params = {a, b};

  double rss = 0;
  for (const auto& [x, y] : points) {
    double r = y - (a + b / x);
    rss += r * r;
  }
  fr.rss = rss;
  fr.r_squared = r_squared_of(points, rss);

  if (points.size() > 2) {
    double s2 = rss / static_cast<double>(points.size() - 2);
    fr.std_errors = {std::sqrt(s2 * s11 / det), std::sqrt(s2 * s00 / det)};
  } else {
    fr.std_errors = {0.0, 0.0};
  }
  return fr;
}

std::array<double, 4> default_exp_power_init(std::span<const FitPoint> points) {
  double ymin = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : points) ymin = std::min(ymin, y);
  return {ymin, 1.0, 0.1, 1.0};
}

FitResult fit_exp_power(std::span<const FitPoint> points, std::array<double, 4> init) {
  FitResult fr;
  fr.family = FitFamily::exp_power;
  fr.points_used = points.size();
  fr.params = {init[0], init[1], init[2], init[3]};
  if (points.size() < 5) throw FitError("fit_exp_power: need >= 5 points", fr);

  const size_t m = points.size();
  std::array<double, 4> theta = init;
  double rss = rss_of(points, theta);
  if (!std::isfinite(rss)) throw FitError("fit_exp_power: objective not finite at init", fr);
  fr.rss_trace.push_back(rss);

  std::vector<std::array<double, 4>> jac(m);
  std::vector<double> resid(m);

  auto fill_jacobian = [&](const std::array<double, 4>& p) {
    for (size_t j = 0; j < 4; ++j) {
      double h = 1e-6 * std::max(1.0, std::abs(p[j]));
      std::array<double, 4> lo = p, hi = p;
      hi[j] += h;
      lo[j] -= h;
      for (size_t i = 0; i < m; ++i) {
        jac[i][j] = (eval_exp_power(hi, points[i].first) - eval_exp_power(lo, points[i].first)) /
                    (2 * h);
      }
    }
    for (size_t i = 0; i < m; ++i) resid[i] = points[i].second - eval_exp_power(p, points[i].first);
  };

  const int max_iter = 500;
  bool stalled = false;
  for (int iter = 0; iter < max_iter && !stalled; ++iter) {
    fill_jacobian(theta);

    std::array<std::array<double, 4>, 4> jtj{};
    std::array<double, 4> jtr{};
    for (size_t i = 0; i < m; ++i) {
      for (size_t a = 0; a < 4; ++a) {
        jtr[a] += jac[i][a] * resid[i];
        for (size_t b = a; b < 4; ++b) jtj[a][b] += jac[i][a] * jac[i][b];
      }
    }
    for (size_t a = 0; a < 4; ++a) {
      for (size_t b = 0; b < a; ++b) jtj[a][b] = jtj[b][a];
    }

    std::array<double, 4> delta{};
    auto ridged = jtj;
    double ridge = 0;
    while (!solve_dense<4>(ridged, jtr, delta)) {
      ridge = ridge == 0 ? 1e-12 : ridge * 10;
      if (ridge > 1e3) throw FitError("fit_exp_power: normal equations singular", fr);
      ridged = jtj;
      for (size_t a = 0; a < 4; ++a) ridged[a][a] += ridge * (1 + jtj[a][a]);
    }

    // Step halving on the Gauss-Newton direction.
    double alpha = 1.0;
    bool improved = false;
    for (int half = 0; half < 40; ++half, alpha *= 0.5) {
      std::array<double, 4> cand = theta;
      for (size_t a = 0; a < 4; ++a) cand[a] += alpha * delta[a];
      double cand_rss = rss_of(points, cand);
      if (std::isfinite(cand_rss) && cand_rss < rss) {
        double drop = rss - cand_rss;
        theta = cand;
        rss = cand_rss;
        fr.rss_trace.push_back(rss);
        improved = true;
        if (drop <= 1e-14 * (1 + rss)) stalled = true;
        break;
      }
    }
    if (!improved) stalled = true;
  }

  fr.params = {theta[0], theta[1], theta[2], theta[3]};
  fr.rss = rss;
  fr.r_squared = r_squared_of(points, rss);

  // Relative finite-difference gradient of rss at the solution.
  double gmax = 0;
  for (size_t j = 0; j < 4; ++j) {
    double h = 1e-6 * std::max(1.0, std::abs(theta[j]));
    std::array<double, 4> lo = theta, hi = theta;
    hi[j] += h;
    lo[j] -= h;
    double g = (rss_of(points, hi) - rss_of(points, lo)) / (2 * h);
    gmax = std::max(gmax, std::abs(g));
  }
  fr.grad_norm = gmax / (1 + rss);
  fr.converged = fr.grad_norm <= 1e-6;

  // A parameter whose Jacobian column is negligible does not influence the
  // model at this solution (e.g. c and d when b ~ 0).
  fill_jacobian(theta);
  std::array<double, 4> colnorm{};
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < 4; ++j) colnorm[j] += jac[i][j] * jac[i][j];
  }
  double cmax = *std::max_element(colnorm.begin(), colnorm.end());
  fr.identifiable.resize(4, true);
  for (size_t j = 0; j < 4; ++j) {
    fr.identifiable[j] = cmax == 0 || colnorm[j] > 1e-16 * cmax;
  }

  if (!std::isfinite(rss)) throw FitError("fit_exp_power: diverged", fr);
  return fr;
}

}  // namespace braidkc
