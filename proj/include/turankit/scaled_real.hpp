#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace turankit {

/**
 * Sign/mantissa/wide-exponent number: value = m * 2^e with |m| in [1,2) or
 * m == 0. The exponent is a 64-bit integer, so forward recurrences whose
 * values grow like q^{-k^2} stay representable long after doubles overflow.
 *
 * Arithmetic is exact in sign and accurate in mantissa to <= 2 ulp per
 * operation (one rounding for the alignment shift, one for the add).
 */
class ScaledReal {
public:
  constexpr ScaledReal() = default;

  static ScaledReal from_double(double v) { return from_parts(v, 0); }

  /// Normalizes an arbitrary (mantissa, exponent) pair.
  static ScaledReal from_parts(double mantissa, std::int64_t exp2) {
    ScaledReal s;
    if (mantissa == 0.0) return s;
    int e = 0;
    const double f = std::frexp(mantissa, &e); // |f| in [0.5, 1)
    s.m_ = 2.0 * f;
    s.e_ = exp2 + e - 1;
    return s;
  }

  int sign() const { return m_ > 0.0 ? 1 : (m_ < 0.0 ? -1 : 0); }
  bool is_zero() const { return m_ == 0.0; }
  double mantissa() const { return std::fabs(m_); }
  double signed_mantissa() const { return m_; }
  std::int64_t exponent2() const { return e_; }

  /// Conversion to double; overflows to +-inf and underflows to 0.
  double to_double() const { return ldexp_clamped(m_, e_); }

  /// m * 2^(e - ref): the value as seen at a reference exponent.
  double to_double_rel(std::int64_t ref_exp2) const {
    return ldexp_clamped(m_, e_ - ref_exp2);
  }

  ScaledReal operator-() const {
    ScaledReal s = *this;
    s.m_ = -s.m_;
    return s;
  }

  ScaledReal operator*(const ScaledReal& o) const {
    if (is_zero() || o.is_zero()) return {};
    return from_parts(m_ * o.m_, e_ + o.e_);
  }

  ScaledReal operator*(double d) const { return from_parts(m_ * d, e_); }

  ScaledReal operator+(const ScaledReal& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const ScaledReal& big = (e_ >= o.e_) ? *this : o;
    const ScaledReal& small = (e_ >= o.e_) ? o : *this;
    const std::int64_t d = big.e_ - small.e_;
    if (d > 1100) return big; // below one ulp of the larger operand
    return from_parts(big.m_ + std::ldexp(small.m_, static_cast<int>(-d)), big.e_);
  }

  ScaledReal operator-(const ScaledReal& o) const { return *this + (-o); }

  /// |*this| < |o|
  bool abs_less(const ScaledReal& o) const {
    if (is_zero()) return !o.is_zero();
    if (o.is_zero()) return false;
    if (e_ != o.e_) return e_ < o.e_;
    return std::fabs(m_) < std::fabs(o.m_);
  }

private:
  static double ldexp_clamped(double m, std::int64_t e) {
    if (m == 0.0) return 0.0;
    if (e > 1100) return m > 0 ? HUGE_VAL : -HUGE_VAL;
    if (e < -1100) return 0.0;
    return std::ldexp(m, static_cast<int>(e));
  }

  double m_ = 0.0;        // signed mantissa, |m_| in [1,2) or 0
  std::int64_t e_ = 0;
};

/// |a - b| / max(|a|, |b|, tiny), evaluated at a common exponent.
inline double rel_diff(const ScaledReal& a, const ScaledReal& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  const std::int64_t ref = a.abs_less(b) ? b.exponent2() : a.exponent2();
  const double da = a.to_double_rel(ref);
  const double db = b.to_double_rel(ref);
  const double scale = std::fmax(std::fmax(std::fabs(da), std::fabs(db)), 1e-300);
  return std::fabs(da - db) / scale;
}

/// a / b as a double (may overflow/underflow if the exponent gap is extreme).
inline double scaled_ratio(const ScaledReal& a, const ScaledReal& b) {
  if (a.is_zero()) return 0.0;
  return ScaledReal::from_parts(a.signed_mantissa() / b.signed_mantissa(),
                                a.exponent2() - b.exponent2())
      .to_double();
}

struct ScaledSum {
  ScaledReal sum;
  double max_abs_term_rel = 0.0; // largest |term| at the reference exponent
  std::int64_t ref_exp2 = 0;
};

/// Sum of terms formed at a matched exponent, with Neumaier compensation.
inline ScaledSum scaled_sum(std::span<const ScaledReal> terms) {
  ScaledSum out;
  std::int64_t ref = INT64_MIN;
  for (const auto& t : terms)
    if (!t.is_zero() && t.exponent2() > ref) ref = t.exponent2();
  if (ref == INT64_MIN) return out; // all zero
  double s = 0.0, comp = 0.0, maxabs = 0.0;
  for (const auto& t : terms) {
    const double v = t.to_double_rel(ref);
    maxabs = std::fmax(maxabs, std::fabs(v));
    const double tmp = s + v;
    if (std::fabs(s) >= std::fabs(v))
      comp += (s - tmp) + v;
    else
      comp += (v - tmp) + s;
    s = tmp;
  }
  out.sum = ScaledReal::from_parts(s + comp, ref);
  out.max_abs_term_rel = maxabs;
  out.ref_exp2 = ref;
  return out;
}

} // namespace turankit
