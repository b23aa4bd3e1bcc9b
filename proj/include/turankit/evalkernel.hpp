#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "turankit/recurrence.hpp"
#include "turankit/scaled_real.hpp"

namespace turankit {

enum class TuranOp { T2, T4, S2, S4 };

std::string to_string(TuranOp op);

/// Five consecutive polynomial values around index k, overflow-safe.
/// p[i] holds p_{k-2+i}; at k = 1 the first slot is p_{-1} = 0.
struct PolyWindow {
  std::size_t k = 0;
  double x = 0.0;
  std::array<ScaledReal, 5> p{};

  const ScaledReal& at(int offset) const { return p[std::size_t(offset + 2)]; }
  /// t_k = p_k / p_{k+1}.
  double t() const { return scaled_ratio(at(0), at(1)); }
};

/// Forward recurrence from p_{-1} = 0, p_0 = 1 with periodic renormalization
/// of the rolling values (one shared exponent shift for the whole window).
PolyWindow eval_window(const RecurrenceSpec& spec, std::size_t k, double x);

/// Largest relative residual of the recurrence over the window's three
/// internal triples, evaluated at matched exponents.
double window_residual(const RecurrenceSpec& spec, const PolyWindow& w);

/// Dense monomial coefficients of p_k (ascending), k <= 30. Test-oracle
/// scale only; the leading coefficient is prod_{i<=k} c_i/a_i.
std::vector<double> poly_coeffs_exact(const RecurrenceSpec& spec, std::size_t k);

struct TuranValue {
  ScaledReal value;
  int sign = 0; // exact sign, with |value| < 1e-13 * term scale reported as 0
};

TuranValue turan(const RecurrenceSpec& spec, TuranOp op, std::size_t k, double x);
/// Same operators evaluated on a caller-supplied window (scaling tests).
TuranValue turan_on_window(const RecurrenceSpec& spec, TuranOp op,
                           const PolyWindow& w);

enum class Tail { Upper, Lower };

struct XiResult {
  double xi = 1.0;
  /// Whether xi = 1 is already valid on the tail (x_kk >= b_k for the upper
  /// tail / x_1k <= b_k for the lower), for x beyond `xi_one_threshold`.
  bool xi_one_applies = false;
  double xi_one_threshold = 0.0; // b_k - 2a_k (upper) or b_k + 2a_k (lower)
};

/// Optimal Turan weight xi_k = 4a_k^2 / (4a_k^2 + (z - b_k)^2) with z the
/// extreme zero on the requested tail.
XiResult xi_optimal(const RecurrenceSpec& spec, std::size_t k, double x1k,
                    double xkk, Tail side);

/// p_k^2 - xi (a_{k+1} c_k)/(a_k c_{k+1}) p_{k-1} p_{k+1}; equals the monic
/// weighted determinant q_k^2 - xi q_{k-1} q_{k+1} in monic normalization.
TuranValue turan_xi(const RecurrenceSpec& spec, std::size_t k, double x, double xi);

struct S4Coeffs {
  double mu = 0.0;
  double nu = 0.0;
  bool symmetric_form = false; // dispatched to the a-based coefficients
};

/// Degree-minimizing fourth-order coefficients; the b-based forms are 0/0 in
/// the symmetric limit, where the a-based forms are used instead.
S4Coeffs s4_general_coeffs(const RecurrenceSpec& spec, std::size_t k);
TuranValue turan_s4_general(const RecurrenceSpec& spec, std::size_t k, double x,
                            const S4Coeffs& coeffs);

/// Quadratic-in-t form of a_{k-1} a_k a_{k+2} T4(P_k) / P_{k+1}^2 for the
/// orthonormal family: K2 t^2 + K1 t + K0 with t = P_k / P_{k+1}.
struct QuadraticForms {
  double K2 = 0.0;
  double K1 = 0.0;
  double K0 = 0.0;
  std::optional<double> f; // -K1 / (2 K2); empty when K2 == 0
  double x = 0.0;
  std::size_t k = 0;
};

QuadraticForms quadratic_forms(const RecurrenceSpec& spec, std::size_t k, double x);

/// Relative gap between K2 t^2 + K1 t + K0 and the directly evaluated
/// a_{k-1} a_k a_{k+2} T4(P_k) / P_{k+1}^2 (orthonormal spec required).
double quadratic_forms_residual(const RecurrenceSpec& spec, std::size_t k, double x);

} // namespace turankit
