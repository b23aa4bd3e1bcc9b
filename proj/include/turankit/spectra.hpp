#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "turankit/recurrence.hpp"

namespace turankit {

/// Number of zeros of p_k strictly below x = number of eigenvalues of the
/// k-by-k Jacobi matrix below x, from the pivot recurrence of J_k - xI.
int sturm_count(const RecurrenceSpec& spec, std::size_t k, double x);

struct ZeroEstimate {
  std::size_t k = 0;
  double x_1k = 0.0;
  double x_kk = 0.0;
  double tolerance = 0.0; // achieved absolute tolerance
  int iterations_low = 0;
  int iterations_high = 0;
};

/// Extreme zeros by Sturm-count bisection. The effective tolerance is
/// tol * (1 + |bracket|); tol defaults to 1e-10.
ZeroEstimate extreme_zeros(const RecurrenceSpec& spec, std::size_t k,
                           double tol = 1e-10);

/// The idx-th smallest zero (1-based) of p_k, same bisection machinery.
double zero_by_index(const RecurrenceSpec& spec, std::size_t k, std::size_t idx,
                     double tol = 1e-10);

struct BoundEntry {
  double value = 0.0;
  bool applicable = false;
  bool hypothesis_ok = false;
  std::string note;
  std::optional<double> mirror; // bound on the opposite extreme, when two-sided
};

/// Named bounds on the extreme zeros plus eigensolver ground truth.
/// Inapplicable bounds are flagged, never silently used.
struct BoundReport {
  std::size_t k = 0;
  ZeroEstimate ground_truth;
  BoundEntry lemma4_lower_on_xkk;
  BoundEntry lemma4_upper_on_x1k;
  BoundEntry gershgorin;
  BoundEntry rayleigh_lower;
  BoundEntry thm11_56;
  BoundEntry thm11_57;
  BoundEntry lemma12;
  BoundEntry thm2_eq3;
};

struct BoundOptions {
  std::optional<double> delta; // enables the asymptotic power-law bound
  double tol = 1e-10;
};

BoundReport bound_report(const RecurrenceSpec& spec, std::size_t k,
                         const BoundOptions& opts = {});

/// General Gershgorin bracket [lo, hi] containing every eigenvalue of J_k
/// (no monotonicity assumption; used for bisection brackets and scan grids).
std::pair<double, double> gershgorin_bracket(const RecurrenceSpec& spec,
                                             std::size_t k);

/// gamma k^s + k^r (2 - 2^{-4/3} delta^{2/3} k^{-rho}), the asymptotic
/// upper bound on the largest zero (o-term dropped; not certified per-k).
double thm2_bound(const TestSequenceParams& params, std::size_t k, double delta);

/// Largest admissible delta for the bound's case table. `narrow` applies the
/// tighter s-range required by the G-root machinery (s < r + 1/2 in the
/// third case instead of s < r + 1).
double thm2_delta_cap(const TestSequenceParams& params, bool narrow);

struct GPolyBound {
  std::array<double, 7> g_coeffs{}; // ascending; leading coefficient is -1
  std::vector<double> real_roots;   // sorted
  double xi = 0.0;                  // largest real root
  std::size_t k = 0;
  double n = 0.0; // m + k
};

/// Degree-6 discriminant-style polynomial G = 4 K0 K2 - K1^2 built on the
/// test sequences at index k; its largest real root upper-bounds x_{k,k}.
GPolyBound g_poly_bound(const TestSequenceParams& params, std::size_t k);

struct PerturbationGap {
  double epsilon = 0.0;    // max |a_i - a~_i|, i <= k-1
  double delta = 0.0;      // max |b_i - b~_i|, i <= k-1
  double bound = 0.0;      // 2 epsilon + delta
  double actual_gap = 0.0; // |x_kk - x~_kk|
  bool within_bound = false;
};

/// Weyl-type stability of the largest zero under coefficient perturbation;
/// both specs must be orthonormal.
PerturbationGap perturbation_gap(const RecurrenceSpec& a, const RecurrenceSpec& b,
                                 std::size_t k, double tol = 1e-10);

/// Ai(-x): power series about 0 for |x| <= 6, the standard asymptotic
/// expansion beyond.
double airy_ai_neg(double x);

/// j-th positive zero of Ai(-x), bracketed by integer steps then bisected
/// to 1e-10. j <= 3.
double airy_zero(std::size_t j);

struct AiryPrediction {
  double c = 0.0;
  double r = 0.0;
  std::size_t k = 0;
  std::size_t j = 0;       // zero rank from the top (j = 1 is the largest)
  double airy_root = 0.0;  // i_j
  double predicted = 0.0;  // 2 c k^r (1 - r^{2/3} 6^{-1/3} i_j k^{-2/3})
  double measured = 0.0;   // eigensolver value of the j-th largest zero
};

/// Second-order edge asymptotics for the symmetric monic family a_k = c k^r,
/// compared against the eigensolver.
AiryPrediction airy_validate(double c, double r, std::size_t k, std::size_t j);

} // namespace turankit
