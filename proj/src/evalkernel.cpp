#include "turankit/evalkernel.hpp"

#include <cmath>

#include "turankit/errors.hpp"

namespace turankit {

namespace {

constexpr double kSignBand = 1e-13;
constexpr int kRescaleExp = 512; // shift the rolling window past this exponent

int banded_sign(const ScaledReal& v, double max_term_rel, std::int64_t ref) {
  if (v.is_zero()) return 0;
  if (std::fabs(v.to_double_rel(ref)) < kSignBand * max_term_rel) return 0;
  return v.sign();
}

TuranValue weighted_sum(std::array<ScaledReal, 3> terms, std::size_t n) {
  const ScaledSum s = scaled_sum(std::span<const ScaledReal>(terms.data(), n));
  TuranValue out;
  out.value = s.sum;
  out.sign = banded_sign(s.sum, s.max_abs_term_rel, s.ref_exp2);
  return out;
}

double s2_weight(const RecurrenceSpec& spec, std::size_t k) {
  return spec.c_ratio(k, k + 1) * spec.a(k + 1) / spec.a(k);
}

} // namespace

std::string to_string(TuranOp op) {
  switch (op) {
    case TuranOp::T2: return "T2";
    case TuranOp::T4: return "T4";
    case TuranOp::S2: return "S2";
    case TuranOp::S4: return "S4";
  }
  return "?";
}

PolyWindow eval_window(const RecurrenceSpec& spec, std::size_t k, double x) {
  if (k < 1) throw DomainError("eval_window requires k >= 1");
  // rolling values share one wide exponent E; v[] are plain doubles
  std::array<double, 5> v{}; // last five, v[4] = newest
  v[3] = 0.0;                // p_{-1}
  v[4] = 1.0;                // p_0
  std::int64_t E = 0;
  for (std::size_t j = 1; j <= k + 2; ++j) {
    const double next = spec.c_over_a(j) *
                        ((x - spec.b(j - 1)) * v[4] - spec.a_times_c(j - 1) * v[3]);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1];
    v[4] = next;
    double big = 0.0;
    for (double e : v) big = std::fmax(big, std::fabs(e));
    int ex = 0;
    std::frexp(big, &ex);
    if (ex > kRescaleExp || ex < -kRescaleExp) {
      for (double& e : v) e = std::ldexp(e, -ex);
      E += ex;
    }
  }
  PolyWindow w;
  w.k = k;
  w.x = x;
  for (std::size_t i = 0; i < 5; ++i) w.p[i] = ScaledReal::from_parts(v[i], E);
  return w;
}

double window_residual(const RecurrenceSpec& spec, const PolyWindow& w) {
  double worst = 0.0;
  for (int off = 0; off <= 2; ++off) {
    const std::size_t j = w.k + std::size_t(off); // triple (j-2, j-1, j)
    const std::array<ScaledReal, 3> terms = {
        w.at(off) * (1.0 / spec.c_over_a(j)),
        -(w.at(off - 1) * (w.x - spec.b(j - 1))),
        w.at(off - 2) * spec.a_times_c(j - 1)};
    const ScaledSum s = scaled_sum(terms);
    if (s.max_abs_term_rel == 0.0) continue;
    const double r = std::fabs(s.sum.to_double_rel(s.ref_exp2)) / s.max_abs_term_rel;
    worst = std::fmax(worst, r);
  }
  return worst;
}

std::vector<double> poly_coeffs_exact(const RecurrenceSpec& spec, std::size_t k) {
  if (k > 30)
    throw DomainError("poly_coeffs_exact is a test oracle, refused for k > 30");
  std::vector<double> prev = {1.0}; // p_0
  if (k == 0) return prev;
  std::vector<double> cur = {spec.c_over_a(1) * -spec.b(0), spec.c_over_a(1)};
  for (std::size_t j = 2; j <= k; ++j) {
    const double cpa = spec.c_over_a(j);
    const double bj = spec.b(j - 1);
    const double ac = spec.a_times_c(j - 1);
    std::vector<double> next(j + 1, 0.0);
    for (std::size_t i = 0; i <= j; ++i) {
      // Neumaier accumulation of the three contributions
      const double t1 = (i > 0) ? cur[i - 1] : 0.0;
      const double t2 = (i < cur.size()) ? -bj * cur[i] : 0.0;
      const double t3 = (i < prev.size()) ? -ac * prev[i] : 0.0;
      double s = t1, comp = 0.0;
      for (double t : {t2, t3}) {
        const double tmp = s + t;
        comp += (std::fabs(s) >= std::fabs(t)) ? (s - tmp) + t : (t - tmp) + s;
        s = tmp;
      }
      next[i] = cpa * (s + comp);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

TuranValue turan_on_window(const RecurrenceSpec& spec, TuranOp op,
                           const PolyWindow& w) {
  const std::size_t k = w.k;
  switch (op) {
    case TuranOp::T2:
      return weighted_sum({w.at(0) * w.at(0), -(w.at(-1) * w.at(1))}, 2);
    case TuranOp::T4:
      return weighted_sum({w.at(0) * w.at(0) * 3.0, -(w.at(-1) * w.at(1)) * 4.0,
                           w.at(-2) * w.at(2)},
                          3);
    case TuranOp::S2:
      return weighted_sum(
          {w.at(0) * w.at(0), -(w.at(-1) * w.at(1)) * s2_weight(spec, k)}, 2);
    case TuranOp::S4: {
      if (k < 2) throw DomainError("S4 requires k >= 2");
      const double ak = spec.a(k), akp1 = spec.a(k + 1), akm1 = spec.a(k - 1),
                   akm2 = spec.a(k - 2), akp2 = spec.a(k + 2);
      const double den = akp1 * akp1 - akm2 * akm2;
      if (den == 0.0)
        throw SingularityError("S4 is undefined when a_{k+1}^2 = a_{k-2}^2");
      const double mu = spec.c_ratio(k, k + 1) * akp1 *
                        (akp1 * akp1 + ak * ak - akm1 * akm1 - akm2 * akm2) /
                        (ak * den);
      const double nu = spec.c_ratio(k, k + 2) * spec.c_ratio(k - 1, k + 1) *
                        akp2 * akp1 * (ak * ak - akm1 * akm1) / (ak * akm1 * den);
      return weighted_sum({w.at(0) * w.at(0), -(w.at(-1) * w.at(1)) * mu,
                           (w.at(-2) * w.at(2)) * nu},
                          3);
    }
  }
  throw DomainError("unknown operator");
}

TuranValue turan(const RecurrenceSpec& spec, TuranOp op, std::size_t k, double x) {
  if (k < 1) throw DomainError("turan requires k >= 1");
  if ((op == TuranOp::S4) && k < 2) throw DomainError("S4 requires k >= 2");
  return turan_on_window(spec, op, eval_window(spec, k, x));
}

XiResult xi_optimal(const RecurrenceSpec& spec, std::size_t k, double x1k,
                    double xkk, Tail side) {
  if (!(x1k < xkk)) throw DomainError("xi_optimal requires x1k < xkk");
  const double ak = spec.a(k), bk = spec.b(k);
  const double z = (side == Tail::Upper) ? xkk : x1k;
  const double h = z - bk;
  XiResult r;
  r.xi = 4.0 * ak * ak / (4.0 * ak * ak + h * h);
  if (side == Tail::Upper) {
    r.xi_one_applies = (xkk >= bk);
    r.xi_one_threshold = bk - 2.0 * ak;
  } else {
    r.xi_one_applies = (x1k <= bk);
    r.xi_one_threshold = bk + 2.0 * ak;
  }
  return r;
}

TuranValue turan_xi(const RecurrenceSpec& spec, std::size_t k, double x, double xi) {
  if (!(xi >= 0.0)) throw DomainError("turan_xi requires xi >= 0");
  const PolyWindow w = eval_window(spec, k, x);
  const double weight = xi * s2_weight(spec, k);
  return weighted_sum({w.at(0) * w.at(0), -(w.at(-1) * w.at(1)) * weight}, 2);
}

S4Coeffs s4_general_coeffs(const RecurrenceSpec& spec, std::size_t k) {
  if (k < 2) throw DomainError("s4_general_coeffs requires k >= 2");
  S4Coeffs out;
  if (spec.symmetric_through(k + 2)) {
    const double ak = spec.a(k), akp1 = spec.a(k + 1), akm1 = spec.a(k - 1),
                 akm2 = spec.a(k - 2), akp2 = spec.a(k + 2);
    const double den = akp1 * akp1 - akm2 * akm2;
    if (den == 0.0)
      throw SingularityError("S4 is undefined when a_{k+1}^2 = a_{k-2}^2");
    out.mu = spec.c_ratio(k, k + 1) * akp1 *
             (akp1 * akp1 + ak * ak - akm1 * akm1 - akm2 * akm2) / (ak * den);
    out.nu = spec.c_ratio(k, k + 2) * spec.c_ratio(k - 1, k + 1) * akp2 * akp1 *
             (ak * ak - akm1 * akm1) / (ak * akm1 * den);
    out.symmetric_form = true;
    return out;
  }
  const double bden = spec.b(k + 1) - spec.b(k - 2);
  if (bden == 0.0)
    throw SingularityError("general S4 coefficients are undefined when "
                           "b_{k+1} = b_{k-2} (non-symmetric spec)");
  out.mu = spec.a(k + 1) * spec.c_ratio(k, k + 1) *
           (spec.b(k + 1) + spec.b(k) - spec.b(k - 1) - spec.b(k - 2)) /
           (spec.a(k) * bden);
  out.nu = spec.a(k + 2) * spec.a(k + 1) * spec.c_ratio(k, k + 2) *
           spec.c_ratio(k - 1, k + 1) * (spec.b(k) - spec.b(k - 1)) /
           (spec.a(k) * spec.a(k - 1) * bden);
  return out;
}

TuranValue turan_s4_general(const RecurrenceSpec& spec, std::size_t k, double x,
                            const S4Coeffs& coeffs) {
  const PolyWindow w = eval_window(spec, k, x);
  return weighted_sum({w.at(0) * w.at(0), -(w.at(-1) * w.at(1)) * coeffs.mu,
                       (w.at(-2) * w.at(2)) * coeffs.nu},
                      3);
}

QuadraticForms quadratic_forms(const RecurrenceSpec& spec, std::size_t k, double x) {
  if (k < 2) throw DomainError("quadratic_forms requires k >= 2");
  const double am1 = spec.a(k - 1), a0 = spec.a(k), a1 = spec.a(k + 1),
               a2 = spec.a(k + 2);
  const double bm1 = spec.b(k - 1), b0 = spec.b(k), b1 = spec.b(k + 1);
  QuadraticForms q;
  q.x = x;
  q.k = k;
  q.K2 = a0 * a0 * a1 + 3.0 * am1 * a0 * a2 - a1 * bm1 * b0 +
         a1 * (b0 + bm1) * x - a1 * x * x;
  q.K1 = 4.0 * am1 * a2 * b0 - a1 * a1 * bm1 + a0 * a0 * b1 - bm1 * b0 * b1 +
         (a1 * a1 - a0 * a0 - 4.0 * am1 * a2 + bm1 * b0 + bm1 * b1 + b0 * b1) * x -
         (bm1 + b0 + b1) * x * x + x * x * x;
  q.K0 = -a1 * (bm1 * b1 - 4.0 * am1 * a2 - (b1 + bm1) * x + x * x);
  if (q.K2 != 0.0) q.f = -q.K1 / (2.0 * q.K2);
  return q;
}

double quadratic_forms_residual(const RecurrenceSpec& spec, std::size_t k, double x) {
  if (spec.normalization() != NormalizationKind::Orthonormal)
    throw WrongHypothesisError("the K-form identity is stated for the "
                               "orthonormal normalization");
  const QuadraticForms q = quadratic_forms(spec, k, x);
  const PolyWindow w = eval_window(spec, k, x);
  const double t = w.t();
  const double lhs = (q.K2 * t + q.K1) * t + q.K0;
  const TuranValue t4 = turan_on_window(spec, TuranOp::T4, w);
  const ScaledReal denom = w.at(1) * w.at(1);
  const double rhs =
      spec.a(k - 1) * spec.a(k) * spec.a(k + 2) * scaled_ratio(t4.value, denom);
  return std::fabs(lhs - rhs) /
         std::fmax(std::fmax(std::fabs(lhs), std::fabs(rhs)), 1e-300);
}

} // namespace turankit
