#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turankit/evalkernel.hpp"
#include "turankit/recurrence.hpp"

namespace turankit {

/// Decision for a finite chain sequence via the greedy minimal-parameter
/// recursion m_0 = 0, m_i = g_i / (1 - m_{i-1}). The sequence is a chain
/// sequence iff every g_i > 0 and every minimal parameter stays below 1.
struct ChainVerdict {
  bool is_chain = false;
  std::vector<double> minimal_params;      // m_1..m_n
  std::optional<std::size_t> failure_index; // 1-based, first violation
};

ChainVerdict chain_sequence_test(std::span<const double> g);

struct CertRow {
  long long index = 0;
  std::string check;   // which condition this row decides
  double margin = 0.0; // signed slack of the checked inequality
  std::vector<std::pair<std::string, double>> quantities;
};

/// Per-index hypothesis checks for one theorem. Every ">= 0" condition
/// passes at margin >= -1e-12 * (scale of the expression).
struct CertReport {
  std::string theorem;
  bool pass = false;
  std::string normalization; // normalization the conclusion applies to
  std::vector<CertRow> rows;
};

enum class T2Mode {
  ExplicitC, // conditions on the spec's own c sequence
  Balanced,  // the running-product c; conditions on a, b alone
  Chain      // chain-sequence form of the same conditions
};

/// Positivity of the plain Turan determinant T2(p_k) for all real x.
CertReport certify_t2_thm5(const RecurrenceSpec& spec, std::size_t k, T2Mode mode);

/// Fourth-order determinant for symmetric monic families: strict increase of
/// a_i plus nonnegative weighted third difference of a_i^2.
CertReport certify_t4_sym_thm7(const RecurrenceSpec& spec, std::size_t k);

/// Normalization-invariant fourth-order operator for symmetric orthonormal
/// families: verdict from the R_i >= 0 battery; the three sufficient growth
/// conditions are reported alongside.
CertReport certify_s4_sym_thm9(const RecurrenceSpec& spec, std::size_t k);

/// Tail positivity of T4 for nondecreasing a, b: quadratic nonnegativity of
/// P_i(t) on t >= 0 decided algebraically, the gap condition
/// a_i >= b_{i+1} - b_i, and the j = 1 starting gate a_2 >= (4/3) a_1.
CertReport certify_t4_thm10(const RecurrenceSpec& spec, std::size_t j,
                            std::size_t k);

/// Direct scan of alpha_i >= beta_{i+1} - beta_i over i <= 10^4; records the
/// minimal margin and its index.
CertReport certify_gamma_lemma7(const TestSequenceParams& params);

enum class IdentityId { I17, I25, I29, I30, I32, SosT2, SosS2 };

std::string to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(const std::string& name);

/// Relative residual |LHS - RHS| / max(|LHS|, |RHS|, tiny) with both sides
/// evaluated independently (sum identities get a fresh window per term).
/// Throws WrongHypothesisError when the spec does not meet the identity's
/// symmetry/normalization hypotheses.
double verify_identity(IdentityId id, const RecurrenceSpec& spec, std::size_t k,
                       double x);

/// Monic family realizing two prescribed interlacing zero sets as its top
/// two polynomials, recovered by peeling the recurrence downward.
struct WendroffTable {
  std::size_t n = 0;
  std::vector<double> a; // a[0] = 0, recovered a_1..a_{N-1}
  std::vector<double> b; // recovered b_0..b_{N-1}
  double residual = 0.0; // relative coefficient error of regenerated q_N
};

WendroffTable wendroff_extend(std::span<const double> xs, std::span<const double> ys);

/// Chain parameters -> explicit c: c_1 = 1 and c_i/c_{i+1} chosen so the
/// explicit-c conditions hold with equality at the given parameters.
std::vector<double> chain_params_to_c(const RecurrenceSpec& spec,
                                      std::span<const double> params);

} // namespace turankit
