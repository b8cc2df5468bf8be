#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidkc {

enum class FitFamily { inverse_n, exp_power };

struct FitResult {
  FitFamily family = FitFamily::inverse_n;
  std::vector<double> params;      // inverse_n: {a, b}; exp_power: {a, b, c, d}
  double rss = 0;
  double r_squared = 0;
  size_t points_used = 0;

  std::vector<double> std_errors;  // inverse_n only (from normal equations)
  bool converged = true;           // exp_power: gradient test met before iteration cap
  std::vector<bool> identifiable;  // exp_power: per-parameter, from Jacobian column norms
  std::vector<double> rss_trace;   // exp_power: objective after each accepted step
  double grad_norm = 0;            // exp_power: relative finite-difference gradient at solution
};

struct FitError : std::runtime_error {
  FitResult best_so_far;
  FitError(const std::string& what, FitResult best)
      : std::runtime_error(what), best_so_far(std::move(best)) {}
};

using FitPoint = std::pair<double, double>;  // (n, y)

// Closed-form linear least squares on the basis {1, 1/n}: y = a + b/n.
// Throws FitError when fewer than two distinct n values are given.
FitResult fit_inverse_n(std::span<const FitPoint> points);

// Damped Gauss-Newton for y = a + b*exp(-c*n)*n^d with finite-difference
// Jacobian and step halving, at most 500 iterations. Throws FitError
// (carrying best-so-far) on NaN/divergence.
FitResult fit_exp_power(std::span<const FitPoint> points, std::array<double, 4> init);

std::array<double, 4> default_exp_power_init(std::span<const FitPoint> points);

double eval_exp_power(const std::array<double, 4>& p, double n);

}  // namespace braidkc
