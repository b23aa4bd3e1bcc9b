#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "turankit/scaled_real.hpp"

namespace turankit {

/**
 * Coefficient data for the three-term recurrence
 *
 *   (a_k / c_k) p_k = (x - b_{k-1}) p_{k-1} - a_{k-1} c_{k-1} p_{k-2},
 *   p_{-1} = 0, p_0 = 1,
 *
 * with a_k, c_k > 0 for k >= 1 and a_0 = 0. c_k = 1 is the orthonormal
 * normalization, c_k = a_k the monic one.
 */
enum class NormalizationKind { Orthonormal, Monic, Balanced, Custom };

std::string to_string(NormalizationKind kind);

/// a_k = q^{-2k} sqrt(q(1-q^k)), b_k = q^{-2k-1}(1+q-q^{k+1}), 0 < q < 1.
struct StieltjesWigert {
  double q;
};

/// a_k = q^{-k} sqrt(alpha q (1-q^k)), b_k = (alpha+1) q^{-k}.
struct AlSalamCarlitz {
  double q;
  double alpha;
};

/// a_k = sqrt(k(k+2 lambda - 1)) / (2 sin phi), b_k = (k + lambda) cot phi.
/// Construct via meixner_pollaczek() so that phi = pi/2 yields cot phi == 0
/// exactly (the symmetric case must be exact for operator cancellations).
struct MeixnerPollaczek {
  double lambda;
  double sin_phi;
  double cot_phi;
};

/// a_k = scale * k^r, b_k = 0.
struct HermiteLike {
  double scale;
  double r;
};

/// a_k = k^r, b_k = gamma * k^s.
struct PowerLaw {
  double r;
  double s;
  double gamma;
};

/// Parameters of the power-law test sequences
///   alpha_0 = 0, alpha_1 = (m+2)^r / 2, alpha_i = (i+m)^r (i >= 2),
///   beta_i = gamma (i+m)^s,
/// with m = 1/((3/2)^{1/r} - 1) - 2 and rho = (2/3) min{1, r-s+1}.
struct TestSequenceParams {
  double r = 1.0;
  double s = 0.0;
  double gamma = 0.0;
  double m = 0.0;
  double rho = 2.0 / 3.0;
  double gamma_max = 0.0; // +inf when s == 0
  bool gamma_ok = true;   // gamma <= gamma_max (relative tolerance 1e-12)
};

TestSequenceParams make_test_sequence_params(double r, double s, double gamma);

double test_alpha(const TestSequenceParams& p, std::size_t i);
double test_beta(const TestSequenceParams& p, std::size_t i);

struct TestSequences {
  TestSequenceParams params;
};

/// Explicit coefficient tables for indices 0..max_index (contiguous; missing
/// entries are a construction error, never zero-filled).
struct CustomTables {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c; // may be empty when the normalization is not Custom
};

struct Custom {
  std::shared_ptr<const CustomTables> tables;
};

struct Reflected; // b |-> -b wrapper, defined below

using FamilyTag = std::variant<StieltjesWigert, AlSalamCarlitz, MeixnerPollaczek,
                               HermiteLike, PowerLaw, TestSequences, Custom,
                               std::shared_ptr<const Reflected>>;

struct Reflected {
  FamilyTag base;
};

class RecurrenceSpec {
public:
  RecurrenceSpec(FamilyTag family, NormalizationKind norm);
  RecurrenceSpec(FamilyTag family, std::vector<double> custom_c);

  double a(std::size_t k) const;
  double b(std::size_t k) const;
  double c(std::size_t k) const;

  /// ln c_k; robust for Balanced where c_k itself may underflow.
  double log_c(std::size_t k) const;
  /// c_num / c_den computed from logs (accurate for any normalization).
  double c_ratio(std::size_t num, std::size_t den) const;
  /// c_k / a_k, the recurrence step multiplier (1 for monic).
  double c_over_a(std::size_t k) const;
  /// a_k c_k, the trailing-term multiplier (0 at k = 0).
  double a_times_c(std::size_t k) const;

  NormalizationKind normalization() const { return norm_; }
  const FamilyTag& family() const { return family_; }
  std::string family_name() const;

  /// Largest defined index for finite tables; nullopt for closed forms.
  std::optional<std::size_t> max_index() const;

  /// b_i == 0 exactly for all i <= upto.
  bool symmetric_through(std::size_t upto) const;

private:
  struct BalancedCache {
    mutable std::mutex mu;
    mutable std::vector<double> log_c; // log_c[k] = ln c_k; [0] and [1] are 0
  };

  void validate() const;
  double balanced_log_c(std::size_t k) const;

  FamilyTag family_;
  NormalizationKind norm_ = NormalizationKind::Orthonormal;
  std::vector<double> custom_c_;
  std::shared_ptr<BalancedCache> balanced_;
};

/// Factory with parameter-domain validation. Throws DomainError naming the
/// violated constraint.
RecurrenceSpec build_family(FamilyTag family,
                            NormalizationKind norm = NormalizationKind::Orthonormal);

MeixnerPollaczek meixner_pollaczek(double lambda, double phi);
/// Exact symmetric case phi = pi/2 (cot phi = 0, sin phi = 1).
MeixnerPollaczek meixner_pollaczek_half_pi(double lambda);
/// Exact phi = pi/4 (cot phi = 1, sin phi = sqrt(2)/2).
MeixnerPollaczek meixner_pollaczek_quarter_pi(double lambda);

/// Same polynomials up to per-degree positive factors; a and b are unchanged.
RecurrenceSpec renormalize(const RecurrenceSpec& spec, NormalizationKind target);
RecurrenceSpec renormalize_custom(const RecurrenceSpec& spec, std::vector<double> c);

/// d_k with p_to,k = d_k * p_from,k; d_k = prod_{i<=k} c_to(i)/c_from(i).
ScaledReal renorm_factor(const RecurrenceSpec& from, const RecurrenceSpec& to,
                         std::size_t k);

/// b |-> -b; generated values satisfy q_k(x) = (-1)^k p_k(-x).
/// reflect(reflect(spec)) returns the original family object.
RecurrenceSpec reflect(const RecurrenceSpec& spec);

/// Orthonormal spec built on the test sequences together with the derived
/// parameters (m, rho, gamma_max and the gamma <= gamma_max flag).
std::pair<RecurrenceSpec, TestSequenceParams> test_sequences(double r, double s,
                                                             double gamma);

} // namespace turankit
