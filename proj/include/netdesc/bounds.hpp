#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netdesc/descriptors.hpp"
#include "netdesc/error.hpp"

namespace netdesc {

// Closed forms of the finite sums that appear in the extremal bounds.
// Sums over an empty range are 0.
namespace closed_form {

/// sum_{i=1}^{m} lambda^i = (lambda^{m+1} - lambda) / (lambda - 1)
inline double power_sum(int m, Lambda lam) {
  const double x = lam.value();
  return (std::pow(x, m + 1) - x) / (x - 1.0);
}

/// sum_{i=1}^{m} i lambda^i = lambda [1 - (m+1) lambda^m + m lambda^{m+1}] / (lambda-1)^2
inline double weighted_power_sum(int m, Lambda lam) {
  const double x = lam.value();
  return x * (1.0 - (m + 1) * std::pow(x, m) + m * std::pow(x, m + 1)) / ((x - 1.0) * (x - 1.0));
}

/// Transmission of the starting vertex of broom(n, D).
inline double broom_transmission(int n, int D, Lambda lam) {
  const double x = lam.value();
  const double xd = std::pow(x, D);
  return x * (1.0 - (D + 1) * xd + D * xd * x) / ((x - 1.0) * (x - 1.0)) +
         static_cast<double>(n - D - 1) * D * xd;
}

/// Networkness lower-bound ratio at diameter D (the expression minimized for C_n).
inline double networkness_ratio(int n, int D, Lambda lam) {
  const double x = lam.value();
  const double xd = std::pow(x, D);
  const double share = 1.0 / static_cast<double>(n - D);
  const double num = xd + share * ((xd - x) / (x - 1.0));
  const double den =
      D * xd + share * ((x - D * xd + (D - 1) * xd * x) / ((x - 1.0) * (x - 1.0)));
  return num / den;
}

/// Surplus lower-bound expression at diameter D (the expression minimized for D_n).
inline double surplus_expression(int n, int D, Lambda lam) {
  const double x = lam.value();
  const double xd = std::pow(x, D);
  return x * (D * xd - x - (D - 1) * xd * x) / ((x - 1.0) * (x - 1.0)) +
         static_cast<double>(n - D - 1) * (xd - D * xd);
}

}  // namespace closed_form

// The same quantities by direct summation.
namespace direct_sum {

inline double power_sum(int m, Lambda lam) {
  double s = 0.0, p = 1.0;
  for (int i = 1; i <= m; ++i) s += (p *= lam.value());
  return s;
}

inline double weighted_power_sum(int m, Lambda lam) {
  double s = 0.0, p = 1.0;
  for (int i = 1; i <= m; ++i) s += i * (p *= lam.value());
  return s;
}

inline double broom_transmission(int n, int D, Lambda lam) {
  double p = 1.0;
  for (int i = 0; i < D; ++i) p *= lam.value();
  return weighted_power_sum(D, lam) + static_cast<double>(n - D - 1) * D * p;
}

inline double networkness_ratio(int n, int D, Lambda lam) {
  double p = 1.0;
  for (int i = 0; i < D; ++i) p *= lam.value();
  const double share = 1.0 / static_cast<double>(n - D);
  return (p + share * power_sum(D - 1, lam)) / (D * p + share * weighted_power_sum(D - 1, lam));
}

inline double surplus_expression(int n, int D, Lambda lam) {
  double s = 0.0, p = 1.0;
  for (int i = 1; i <= D; ++i) {
    p *= lam.value();
    s += p - i * p;
  }
  return s + static_cast<double>(n - D - 1) * (p - D * p);
}

}  // namespace direct_sum

namespace detail {

inline void require_diameter(int n, int D) {
  if (D < 1 || D > n - 1) {
    throw Error(ErrorCode::DOutOfRange,
                "D=" + std::to_string(D) + " outside 1.." + std::to_string(n - 1));
  }
}

inline void require_order(int n, int min_n) {
  if (n < min_n) {
    throw Error(ErrorCode::BadParameter,
                "n=" + std::to_string(n) + " below minimum " + std::to_string(min_n));
  }
}

}  // namespace detail

/// f(D) = sum_{i=1}^{D} i lambda^i + (n-D-1) D lambda^D: transmission of the
/// starting vertex of broom(n, D). Evaluated in closed form.
inline double broom_transmission_f(int n, int D, Lambda lam) {
  detail::require_diameter(n, D);
  return closed_form::broom_transmission(n, D, lam);
}

/// f(D+1) - f(D) = (n-D-1) lambda^D ((D+1) lambda - D) for 1 <= D <= n-2.
/// Far smaller than f itself once lambda^D is below the rounding of f, so
/// comparisons of f at distant D should sum these steps instead of
/// subtracting two evaluations of f.
inline double broom_transmission_step(int n, int D, Lambda lam) {
  detail::require_diameter(n, D + 1);
  double p = 1.0;
  for (int i = 0; i < D; ++i) p *= lam.value();
  return (n - D - 1) * p * ((D + 1) * lam.value() - D);
}

/// f'(D) for real D, as lambda^D / (lambda-1)^2 * (A D^2 + B D + C).
inline double broom_transmission_derivative(int n, double D, Lambda lam) {
  const double x = lam.value();
  const double L = std::log(x);
  const double A = 2 * x * L - L - x * x * L;
  const double B = 4 * x - 2 - 2 * x * x + L * (x - 1 + n - 2 * x * n + x * x * n);
  const double C = x + n - 1 - 2 * x * n + x * x * n - x * L;
  return std::pow(x, D) / ((x - 1) * (x - 1)) * (A * D * D + B * D + C);
}

/// f(D) extended to real D via the closed form.
inline double broom_transmission_continuous(int n, double D, Lambda lam) {
  const double x = lam.value();
  const double xd = std::pow(x, D);
  return x * (1.0 - (D + 1) * xd + D * xd * x) / ((x - 1.0) * (x - 1.0)) + (n - D - 1) * D * xd;
}

struct StationaryPoints {
  std::optional<double> D1;  // local minimum of f
  std::optional<double> D2;  // local maximum of f
  double S_lambda = 0.0;
};

/// Real stationary points of f. The discriminant uses (ln lambda)^2; this is
/// the reading under which f'(D1) = f'(D2) = 0.
inline StationaryPoints stationary_points(int n, Lambda lam) {
  detail::require_order(n, 2);
  const double x = lam.value();
  const double L = std::log(x);
  StationaryPoints sp;
  sp.S_lambda = 4 * (x - 1) * (x - 1) +
                ((n - 1.0) * (n - 1.0) + x * x * n * n - 2 * x * (n * n - n + 2.0)) * L * L;
  if (sp.S_lambda >= 0) {
    const double root = std::sqrt(sp.S_lambda);
    const double base = 2 - 2 * x + (1 + (x - 1) * n) * L;
    const double den = 2 * (x - 1) * L;
    sp.D1 = (base + root) / den;
    sp.D2 = (base - root) / den;
  }
  return sp;
}

/// Candidate D set {1, n-1, floor(D*), ceil(D*)} (the last two only when D*
/// is real and inside [1, n-1]).
inline std::vector<int> candidate_diameters(int n, std::optional<double> d_star) {
  std::vector<int> out{1, n - 1};
  if (d_star && *d_star >= 1.0 && *d_star <= n - 1.0) {
    out.push_back(static_cast<int>(std::floor(*d_star)));
    out.push_back(static_cast<int>(std::ceil(*d_star)));
  }
  return out;
}

struct ScanResult {
  double value = 0.0;
  int D = 1;
};

// Extremum of expr(D) over D = 1..n-1; ties keep the smallest D.
template <typename Expr>
ScanResult scan_min(int n, Expr&& expr) {
  ScanResult best{expr(1), 1};
  for (int D = 2; D <= n - 1; ++D) {
    const double v = expr(D);
    if (v < best.value) best = {v, D};
  }
  return best;
}

template <typename Expr>
ScanResult scan_max(int n, Expr&& expr) {
  ScanResult best{expr(1), 1};
  for (int D = 2; D <= n - 1; ++D) {
    const double v = expr(D);
    if (v > best.value) best = {v, D};
  }
  return best;
}

/// Extremum of f restricted to the candidate set.
inline ScanResult shortcut_extremum(int n, Lambda lam, bool minimum) {
  const auto sp = stationary_points(n, lam);
  const auto candidates = candidate_diameters(n, minimum ? sp.D1 : sp.D2);
  ScanResult best{broom_transmission_f(n, candidates[0], lam), candidates[0]};
  for (int D : candidates) {
    const double v = broom_transmission_f(n, D, lam);
    if (minimum ? v < best.value : v > best.value) best = {v, D};
  }
  return best;
}

/// The tabulated closed form of the mc lower bound, (lambda^D - lambda)/(lambda - 1)
/// with D = n-1. It equals sum_{i=1}^{n-2} lambda^i, one term short of the
/// path end-vertex value, so it is not used as the bound.
inline double mc_lower_tabulated(int n, Lambda lam) {
  const double x = lam.value();
  return (std::pow(x, n - 1) - x) / (x - 1.0);
}

/// Extremal bound values for graphs on n vertices at a given lambda.
///
/// Fields ending in `_star` are the exact descriptor values at the centre of
/// the star S_n under the edge-sum betweenness used throughout this library.
/// They differ from Mc_upper / MN_upper / Mnu_upper, the tabulated
/// expressions, which count a pair routed through the centre once instead of
/// once per incident edge.
struct BoundSet {
  int n = 0;
  Lambda lambda{0.5};

  double mt_lower = 0.0;   // A_n
  double Mt_upper = 0.0;   // B_n
  double mc_lower = 0.0;   // sum_{i=1}^{n-1} lambda^i
  double Mc_upper = 0.0;   // (n-1)[lambda + (n-2) lambda^2 / 2]
  double mN_lower = 0.0;   // C_n
  double mN_upper = 1.0;
  double MN_lower = 1.0;
  double MN_upper = 0.0;   // (n-2) lambda / 2 + 1
  double mnu_lower = 0.0;  // D_n
  double mnu_upper = 0.0;
  double Mnu_lower = 0.0;
  double Mnu_upper = 0.0;  // (n-1)(n-2) lambda^2 / 2

  // Complete-graph upper bounds, established for lambda < 1/2 only.
  std::optional<double> mt_upper_halflambda;
  std::optional<double> mc_upper_halflambda;

  double Mc_upper_star = 0.0;   // (n-1) lambda + (n-1)(n-2) lambda^2
  double MN_upper_star = 0.0;   // 1 + (n-2) lambda
  double Mnu_upper_star = 0.0;  // (n-1)(n-2) lambda^2

  double cycle_conjecture_value = 0.0;  // only meaningful for n >= 3

  // Arg-extremal D for A_n, B_n, C_n, D_n.
  std::map<std::string, int> witness_D;

  // The stationary-point shortcut reproduced the A_n / B_n scans.
  bool shortcut_agrees = true;
};

inline double cycle_bound(int n, Lambda lam);

inline BoundSet table1_bounds(int n, Lambda lam) {
  detail::require_order(n, 2);
  const double x = lam.value();
  BoundSet b;
  b.n = n;
  b.lambda = lam;

  const auto f = [&](int D) { return closed_form::broom_transmission(n, D, lam); };
  const auto a = scan_min(n, f);
  const auto bb = scan_max(n, f);
  b.mt_lower = a.value;
  b.Mt_upper = bb.value;
  b.witness_D["A_n"] = a.D;
  b.witness_D["B_n"] = bb.D;
  const auto amin = shortcut_extremum(n, lam, true);
  const auto amax = shortcut_extremum(n, lam, false);
  b.shortcut_agrees = amin.value == a.value && amax.value == bb.value;

  const auto c = scan_min(n, [&](int D) { return closed_form::networkness_ratio(n, D, lam); });
  b.mN_lower = c.value;
  b.witness_D["C_n"] = c.D;
  const auto d = scan_min(n, [&](int D) { return closed_form::surplus_expression(n, D, lam); });
  b.mnu_lower = d.value;
  b.witness_D["D_n"] = d.D;

  b.mc_lower = closed_form::power_sum(n - 1, lam);
  b.Mc_upper = (n - 1) * (x + 0.5 * (n - 2) * x * x);
  b.MN_upper = 0.5 * (n - 2) * x + 1.0;
  b.Mnu_upper = 0.5 * (n - 1) * (n - 2) * x * x;

  b.Mc_upper_star = (n - 1) * x + (n - 1.0) * (n - 2.0) * x * x;
  b.MN_upper_star = 1.0 + (n - 2) * x;
  b.Mnu_upper_star = (n - 1.0) * (n - 2.0) * x * x;

  if (lam.below_half()) {
    b.mt_upper_halflambda = (n - 1) * x;
    b.mc_upper_halflambda = (n - 1) * x;
  }
  if (n >= 3) b.cycle_conjecture_value = cycle_bound(n, lam);
  return b;
}

/// Minimum transmission of a vertex in a 2-connected graph on n vertices
/// for lambda < 1/2, attained on the cycle C_n:
///   2 sum_{i=1}^{(n-1)/2} i lambda^i                         (n odd)
///   2 sum_{i=1}^{(n-2)/2} i lambda^i + (n/2) lambda^{n/2}    (n even)
inline double cycle_bound(int n, Lambda lam) {
  detail::require_order(n, 3);
  if (n % 2 == 1) return 2.0 * direct_sum::weighted_power_sum((n - 1) / 2, lam);
  return 2.0 * direct_sum::weighted_power_sum((n - 2) / 2, lam) +
         (n / 2) * std::pow(lam.value(), n / 2);
}

/// The tabulated closed form of the cycle value. Agrees with cycle_bound for
/// odd n only; the even-n expression reuses the odd-n term.
inline double cycle_bound_tabulated(int n, Lambda lam) {
  detail::require_order(n, 3);
  const double x = lam.value();
  const double r = std::sqrt(x);
  const double half = n / 2.0;
  const double odd = r * (2 * r + (n - 1) * std::pow(x, 1 + half) - (n + 1) * std::pow(x, half)) /
                     ((x - 1) * (x - 1));
  return n % 2 == 1 ? odd : 0.5 * n * std::pow(x, half) + odd;
}

/// Layer-size profile x_1..x_{floor(n/2)} and its value
/// T_n(x) = sum_i x_i * i * lambda^i.
struct LayerProfile {
  std::vector<int> sequence;
  double value = 0.0;
};

inline double t_n_value(const std::vector<int>& x, Lambda lam) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    p *= lam.value();
    s += x[i] * static_cast<double>(i + 1) * p;
  }
  return s;
}

/// Closed-form minimiser: (2,...,2) for odd n, (2,...,2,1) for even n.
inline LayerProfile t_n_lemma_min(int n, Lambda lam) {
  detail::require_order(n, 3);
  if (!lam.below_half()) {
    throw Error(ErrorCode::BadParameter, "layer-profile minimum needs lambda < 1/2");
  }
  LayerProfile out;
  out.sequence.assign(n / 2, 2);
  if (n % 2 == 0) out.sequence.back() = 1;
  out.value = t_n_value(out.sequence, lam);
  return out;
}

/// Exhaustive minimum of T_n over all admissible profiles: some k with
/// x_i >= 2 for i < k, x_k >= 1, x_i = 0 for i > k, summing to n-1. These
/// are exactly the distance-layer sizes seen from a vertex of a 2-connected
/// graph. Ties keep the lexicographically first sequence.
inline LayerProfile t_n_exhaustive_min(int n, Lambda lam) {
  detail::require_order(n, 3);
  if (n > 15) throw Error(ErrorCode::TooLarge, "exhaustive profile search capped at n=15");
  const int slots = n / 2;
  LayerProfile best;
  bool have = false;
  std::vector<int> x;
  // Fill positions left to right; each new position either closes the
  // profile (x_k >= 1, remainder 0) or continues with x_k >= 2.
  auto recurse = [&](auto&& self, int remaining) -> void {
    const int k = static_cast<int>(x.size()) + 1;
    if (k > slots) return;
    if (remaining >= 1) {
      x.push_back(remaining);
      std::vector<int> full = x;
      full.resize(slots, 0);
      const double v = t_n_value(full, lam);
      if (!have || v < best.value) {
        best = {full, v};
        have = true;
      }
      x.pop_back();
    }
    for (int take = 2; take < remaining; ++take) {
      x.push_back(take);
      self(self, remaining - take);
      x.pop_back();
    }
  };
  recurse(recurse, n - 1);
  return best;
}

}  // namespace netdesc
