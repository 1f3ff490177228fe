#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/structure.hpp"

namespace rainbow {

/// Derived quantities for the near-optimal coloring of G(n, p) at the
/// connectivity threshold. `clamps` names every field raised to its minimum.
struct Thm1Params {
  std::size_t n = 0;
  double epsilon = 0.0;
  double L = 0.0;
  std::size_t k = 1;      // tree depth, ceil(eps * L)
  std::size_t gamma = 1;  // extension depth, ceil((1/2 + eps) * L)
  std::size_t q = 2;      // random palette, ceil((1 + 5 eps) * L)
  double p0 = 0.0;        // ((1 + 3 eps) / (1 + 5 eps))^2
  double branching = 1.0; // log n / 101
  std::vector<std::string> clamps;
};

inline double default_thm1_epsilon(std::size_t n) {
  return 1.0 / std::sqrt(std::log(std::log(static_cast<double>(n))));
}

namespace detail {

inline std::size_t ceil_at_least(double value, std::size_t minimum, const char* name,
                                 std::vector<std::string>& clamps) {
  const double c = std::ceil(value - 1e-12);
  if (!(c >= static_cast<double>(minimum))) {
    clamps.emplace_back(name);
    return minimum;
  }
  return static_cast<std::size_t>(c);
}

}  // namespace detail

inline Thm1Params thm1_params(std::size_t n, std::optional<double> epsilon = std::nullopt) {
  if (n < 16) throw Error(ErrorCode::InvalidArgument, "thm1 parameters need n >= 16, got " + std::to_string(n));
  Thm1Params p;
  p.n = n;
  p.epsilon = epsilon.value_or(default_thm1_epsilon(n));
  if (!(p.epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  p.L = scale_L(n);
  p.k = detail::ceil_at_least(p.epsilon * p.L, 1, "k", p.clamps);
  p.gamma = detail::ceil_at_least((0.5 + p.epsilon) * p.L, 1, "gamma", p.clamps);
  p.q = detail::ceil_at_least((1.0 + 5.0 * p.epsilon) * p.L, 2, "q", p.clamps);
  const double ratio = (1.0 + 3.0 * p.epsilon) / (1.0 + 5.0 * p.epsilon);
  p.p0 = ratio * ratio;
  p.branching = std::log(static_cast<double>(n)) / 101.0;
  if (p.branching < 1.0) {
    p.branching = 1.0;
    p.clamps.emplace_back("branching");
  }
  return p;
}

/// Derived quantities for the coloring of random r-regular graphs.
struct RegularParams {
  std::size_t n = 0;
  std::size_t r = 3;
  std::size_t k = 1;
  double theta_r = 0.0;
  std::uint64_t q = 10;   // 10 (r-1)^(2k)
  std::size_t gamma = 1;  // ceil((1/2 + eps) log_{r-1} n)
  double epsilon = 0.1;
  std::uint64_t sigma = 1;
  std::vector<std::string> clamps;
};

inline RegularParams regular_params(std::size_t n, std::size_t r, double epsilon = 0.1) {
  if (n < 16) throw Error(ErrorCode::InvalidArgument, "regular parameters need n >= 16, got " + std::to_string(n));
  if (r < 3) throw Error(ErrorCode::InvalidArgument, "regular degree r must be >= 3");
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  RegularParams p;
  p.n = n;
  p.r = r;
  p.epsilon = epsilon;
  const double ln = std::log(static_cast<double>(n));
  const double rm1 = static_cast<double>(r - 1);
  if (r >= 4) {
    const double rm2 = static_cast<double>(r - 2);
    p.k = detail::ceil_at_least(std::log(ln) / std::log(rm2), 1, "k", p.clamps);
    p.theta_r = std::log(rm1) / std::log(rm2);
  } else {
    const double l2 = std::log2(ln);
    p.k = detail::ceil_at_least(2.0 * l2 - 2.0 * std::log2(l2), 1, "k", p.clamps);
    // log^4 n written as log^(2 theta) n.
    p.theta_r = 2.0;
  }
  const double q = 10.0 * std::pow(rm1, 2.0 * static_cast<double>(p.k));
  if (q > 1e18) throw Error(ErrorCode::InvalidArgument, "palette 10(r-1)^(2k) overflows");
  p.q = 10;
  for (std::size_t i = 0; i < 2 * p.k; ++i) p.q *= (r - 1);
  p.gamma = detail::ceil_at_least((0.5 + epsilon) * std::log(static_cast<double>(n)) / std::log(rm1), 1, "gamma",
                                  p.clamps);
  if (r >= 4) {
    double sigma0 = std::pow(static_cast<double>(r - 2), static_cast<double>(p.k - 1));
    if (sigma0 - 6.0 < 1.0) {
      p.sigma = 1;
      p.clamps.emplace_back("sigma");
    } else {
      p.sigma = static_cast<std::uint64_t>(sigma0 - 6.0);
    }
  } else {
    p.sigma = std::uint64_t{1} << (p.k / 2);
  }
  return p;
}

}  // namespace rainbow
