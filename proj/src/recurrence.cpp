#include "turankit/recurrence.hpp"

#include <algorithm>
#include <cmath>

#include "turankit/errors.hpp"

namespace turankit {

namespace {

constexpr double kGammaRelTol = 1e-12;

double family_a(const FamilyTag& family, std::size_t k);
double family_b(const FamilyTag& family, std::size_t k);

struct AVisitor {
  std::size_t k;
  double operator()(const StieltjesWigert& f) const {
    return std::pow(f.q, -2.0 * double(k)) *
           std::sqrt(f.q * (1.0 - std::pow(f.q, double(k))));
  }
  double operator()(const AlSalamCarlitz& f) const {
    return std::pow(f.q, -double(k)) *
           std::sqrt(f.alpha * f.q * (1.0 - std::pow(f.q, double(k))));
  }
  double operator()(const MeixnerPollaczek& f) const {
    return std::sqrt(double(k) * (double(k) + 2.0 * f.lambda - 1.0)) /
           (2.0 * f.sin_phi);
  }
  double operator()(const HermiteLike& f) const {
    return f.scale * std::pow(double(k), f.r);
  }
  double operator()(const PowerLaw& f) const { return std::pow(double(k), f.r); }
  double operator()(const TestSequences& f) const { return test_alpha(f.params, k); }
  double operator()(const Custom& f) const {
    if (k >= f.tables->a.size())
      throw OutOfRangeError("coefficient a_" + std::to_string(k) +
                            " is beyond the custom table (max index " +
                            std::to_string(f.tables->a.size() - 1) + ")");
    return f.tables->a[k];
  }
  double operator()(const std::shared_ptr<const Reflected>& f) const {
    return family_a(f->base, k);
  }
};

struct BVisitor {
  std::size_t k;
  double operator()(const StieltjesWigert& f) const {
    return std::pow(f.q, -2.0 * double(k) - 1.0) *
           (1.0 + f.q - std::pow(f.q, double(k) + 1.0));
  }
  double operator()(const AlSalamCarlitz& f) const {
    return (f.alpha + 1.0) * std::pow(f.q, -double(k));
  }
  double operator()(const MeixnerPollaczek& f) const {
    return (double(k) + f.lambda) * f.cot_phi;
  }
  double operator()(const HermiteLike&) const { return 0.0; }
  double operator()(const PowerLaw& f) const {
    if (f.gamma == 0.0) return 0.0;
    return f.gamma * std::pow(double(k), f.s);
  }
  double operator()(const TestSequences& f) const { return test_beta(f.params, k); }
  double operator()(const Custom& f) const {
    if (k >= f.tables->b.size())
      throw OutOfRangeError("coefficient b_" + std::to_string(k) +
                            " is beyond the custom table (max index " +
                            std::to_string(f.tables->b.size() - 1) + ")");
    return f.tables->b[k];
  }
  double operator()(const std::shared_ptr<const Reflected>& f) const {
    const double v = family_b(f->base, k);
    return v == 0.0 ? 0.0 : -v;
  }
};

double family_a(const FamilyTag& family, std::size_t k) {
  if (k == 0) return 0.0; // a_0 = 0 for every family
  return std::visit(AVisitor{k}, family);
}

double family_b(const FamilyTag& family, std::size_t k) {
  return std::visit(BVisitor{k}, family);
}

struct NameVisitor {
  std::string operator()(const StieltjesWigert&) const { return "stieltjes-wigert"; }
  std::string operator()(const AlSalamCarlitz&) const { return "al-salam-carlitz"; }
  std::string operator()(const MeixnerPollaczek&) const { return "meixner-pollaczek"; }
  std::string operator()(const HermiteLike&) const { return "hermite-like"; }
  std::string operator()(const PowerLaw&) const { return "power-law"; }
  std::string operator()(const TestSequences&) const { return "test-sequences"; }
  std::string operator()(const Custom&) const { return "custom"; }
  std::string operator()(const std::shared_ptr<const Reflected>& f) const {
    return "reflected(" + std::visit(NameVisitor{}, f->base) + ")";
  }
};

void validate_family(const FamilyTag& family) {
  struct V {
    void operator()(const StieltjesWigert& f) const {
      if (!(f.q > 0.0 && f.q < 1.0))
        throw DomainError("stieltjes-wigert requires 0 < q < 1");
    }
    void operator()(const AlSalamCarlitz& f) const {
      if (!(f.q > 0.0 && f.q < 1.0))
        throw DomainError("al-salam-carlitz requires 0 < q < 1");
      if (!(f.alpha > 0.0))
        throw DomainError("al-salam-carlitz requires alpha > 0");
    }
    void operator()(const MeixnerPollaczek& f) const {
      if (!(f.lambda > 0.0))
        throw DomainError("meixner-pollaczek requires lambda > 0");
      if (!(f.sin_phi > 0.0))
        throw DomainError("meixner-pollaczek requires 0 < phi < pi");
    }
    void operator()(const HermiteLike& f) const {
      if (!(f.scale > 0.0)) throw DomainError("hermite-like requires c > 0");
      if (!(f.r >= 0.0)) throw DomainError("hermite-like requires r >= 0");
    }
    void operator()(const PowerLaw& f) const {
      if (!(f.r >= 0.0)) throw DomainError("power-law requires r >= 0");
      if (!(f.s >= 0.0)) throw DomainError("power-law requires s >= 0");
      if (!(f.gamma >= 0.0)) throw DomainError("power-law requires gamma >= 0");
    }
    void operator()(const TestSequences& f) const {
      make_test_sequence_params(f.params.r, f.params.s, f.params.gamma);
    }
    void operator()(const Custom& f) const {
      const auto& t = *f.tables;
      if (t.a.empty() || t.a.size() != t.b.size())
        throw DomainError("custom tables must supply a and b for indices "
                          "0..max_index contiguously and with equal lengths");
      if (!t.c.empty() && t.c.size() != t.a.size())
        throw DomainError("custom c table must cover the same index range as a");
      if (t.a[0] != 0.0)
        throw DomainError("custom table must have a_0 = 0");
      for (std::size_t k = 1; k < t.a.size(); ++k) {
        if (!(t.a[k] > 0.0))
          throw DomainError("custom table requires a_k > 0 for k >= 1 (violated at k=" +
                            std::to_string(k) + ")");
        if (!t.c.empty() && !(t.c[k] > 0.0))
          throw DomainError("custom table requires c_k > 0 for k >= 1 (violated at k=" +
                            std::to_string(k) + ")");
      }
    }
    void operator()(const std::shared_ptr<const Reflected>& f) const {
      validate_family(f->base);
    }
  };
  std::visit(V{}, family);
}

std::optional<std::size_t> family_max_index(const FamilyTag& family) {
  if (const auto* c = std::get_if<Custom>(&family))
    return c->tables->a.size() - 1;
  if (const auto* r = std::get_if<std::shared_ptr<const Reflected>>(&family))
    return family_max_index((*r)->base);
  return std::nullopt;
}

} // namespace

std::string to_string(NormalizationKind kind) {
  switch (kind) {
    case NormalizationKind::Orthonormal: return "orthonormal";
    case NormalizationKind::Monic: return "monic";
    case NormalizationKind::Balanced: return "balanced";
    case NormalizationKind::Custom: return "custom";
  }
  return "?";
}

TestSequenceParams make_test_sequence_params(double r, double s, double gamma) {
  if (!(r >= 1.0)) throw DomainError("test sequences require r >= 1");
  if (!(s >= 0.0 && s < r + 1.0))
    throw DomainError("test sequences require 0 <= s < r + 1");
  if (!(gamma >= 0.0)) throw DomainError("test sequences require gamma >= 0");
  TestSequenceParams p;
  p.r = r;
  p.s = s;
  p.gamma = gamma;
  p.m = 1.0 / (std::pow(1.5, 1.0 / r) - 1.0) - 2.0;
  p.rho = (2.0 / 3.0) * std::min(1.0, r - s + 1.0);
  if (s == 0.0)
    p.gamma_max = HUGE_VAL; // b is constant, any gamma works
  else if (s < 1.0)
    p.gamma_max = std::pow(p.m + 2.0, r - s + 1.0) / (2.0 * s);
  else
    p.gamma_max = std::pow(p.m + 3.0, r - s + 1.0) / (3.0 * s);
  p.gamma_ok = gamma <= p.gamma_max * (1.0 + kGammaRelTol);
  return p;
}

double test_alpha(const TestSequenceParams& p, std::size_t i) {
  if (i == 0) return 0.0;
  if (i == 1) return std::pow(p.m + 2.0, p.r) / 2.0;
  return std::pow(double(i) + p.m, p.r);
}

double test_beta(const TestSequenceParams& p, std::size_t i) {
  if (p.gamma == 0.0) return 0.0;
  return p.gamma * std::pow(double(i) + p.m, p.s);
}

RecurrenceSpec::RecurrenceSpec(FamilyTag family, NormalizationKind norm)
    : family_(std::move(family)), norm_(norm) {
  if (norm_ == NormalizationKind::Custom)
    throw DomainError("custom normalization requires an explicit c table");
  validate();
  if (norm_ == NormalizationKind::Balanced)
    balanced_ = std::make_shared<BalancedCache>();
}

RecurrenceSpec::RecurrenceSpec(FamilyTag family, std::vector<double> custom_c)
    : family_(std::move(family)),
      norm_(NormalizationKind::Custom),
      custom_c_(std::move(custom_c)) {
  validate();
  if (custom_c_.empty())
    throw DomainError("custom normalization requires an explicit c table");
  for (std::size_t k = 1; k < custom_c_.size(); ++k)
    if (!(custom_c_[k] > 0.0))
      throw DomainError("custom c table requires c_k > 0 for k >= 1 (violated at k=" +
                        std::to_string(k) + ")");
}

void RecurrenceSpec::validate() const { validate_family(family_); }

double RecurrenceSpec::a(std::size_t k) const { return family_a(family_, k); }

double RecurrenceSpec::b(std::size_t k) const {
  if (auto mi = max_index(); mi && k > *mi)
    throw OutOfRangeError("coefficient b_" + std::to_string(k) +
                          " is beyond the custom table");
  return family_b(family_, k);
}

double RecurrenceSpec::balanced_log_c(std::size_t k) const {
  // ln c_k = (k-1) ln 2 - sum_{j=1}^{k-1} ln(a_{j+1}/a_j + a_j/a_{j+1})
  auto& cache = *balanced_;
  std::scoped_lock lock(cache.mu);
  if (cache.log_c.empty()) cache.log_c = {0.0, 0.0};
  while (cache.log_c.size() <= k) {
    const std::size_t j = cache.log_c.size() - 1; // extend to index j+1
    const double rho = a(j + 1) / a(j);
    cache.log_c.push_back(cache.log_c[j] + std::log(2.0) -
                          std::log(rho + 1.0 / rho));
  }
  return cache.log_c[k];
}

double RecurrenceSpec::c(std::size_t k) const {
  switch (norm_) {
    case NormalizationKind::Orthonormal: return 1.0;
    case NormalizationKind::Monic: return a(k);
    case NormalizationKind::Balanced:
      return k <= 1 ? 1.0 : std::exp(balanced_log_c(k));
    case NormalizationKind::Custom:
      if (k >= custom_c_.size())
        throw OutOfRangeError("coefficient c_" + std::to_string(k) +
                              " is beyond the custom table");
      return custom_c_[k];
  }
  return 1.0;
}

double RecurrenceSpec::log_c(std::size_t k) const {
  switch (norm_) {
    case NormalizationKind::Orthonormal: return 0.0;
    case NormalizationKind::Monic: return std::log(a(k));
    case NormalizationKind::Balanced: return k <= 1 ? 0.0 : balanced_log_c(k);
    case NormalizationKind::Custom: return std::log(c(k));
  }
  return 0.0;
}

double RecurrenceSpec::c_ratio(std::size_t num, std::size_t den) const {
  switch (norm_) {
    case NormalizationKind::Orthonormal: return 1.0;
    case NormalizationKind::Monic: return a(num) / a(den);
    case NormalizationKind::Balanced: return std::exp(log_c(num) - log_c(den));
    case NormalizationKind::Custom: return c(num) / c(den);
  }
  return 1.0;
}

double RecurrenceSpec::c_over_a(std::size_t k) const {
  switch (norm_) {
    case NormalizationKind::Orthonormal: return 1.0 / a(k);
    case NormalizationKind::Monic: return 1.0;
    case NormalizationKind::Balanced:
      return std::exp(log_c(k) - std::log(a(k)));
    case NormalizationKind::Custom: return c(k) / a(k);
  }
  return 1.0;
}

double RecurrenceSpec::a_times_c(std::size_t k) const {
  if (k == 0) return 0.0;
  switch (norm_) {
    case NormalizationKind::Orthonormal: return a(k);
    case NormalizationKind::Monic: {
      const double v = a(k);
      return v * v;
    }
    case NormalizationKind::Balanced:
      return std::exp(log_c(k) + std::log(a(k)));
    case NormalizationKind::Custom: return a(k) * c(k);
  }
  return 0.0;
}

std::string RecurrenceSpec::family_name() const {
  return std::visit(NameVisitor{}, family_);
}

std::optional<std::size_t> RecurrenceSpec::max_index() const {
  auto fam = family_max_index(family_);
  if (norm_ == NormalizationKind::Custom) {
    const std::size_t cm = custom_c_.size() - 1;
    if (!fam || cm < *fam) fam = cm;
  }
  return fam;
}

bool RecurrenceSpec::symmetric_through(std::size_t upto) const {
  for (std::size_t i = 0; i <= upto; ++i)
    if (b(i) != 0.0) return false;
  return true;
}

RecurrenceSpec build_family(FamilyTag family, NormalizationKind norm) {
  return RecurrenceSpec(std::move(family), norm);
}

MeixnerPollaczek meixner_pollaczek(double lambda, double phi) {
  if (!(phi > 0.0 && phi < 3.14159265358979323846))
    throw DomainError("meixner-pollaczek requires 0 < phi < pi");
  return MeixnerPollaczek{lambda, std::sin(phi), std::cos(phi) / std::sin(phi)};
}

MeixnerPollaczek meixner_pollaczek_half_pi(double lambda) {
  return MeixnerPollaczek{lambda, 1.0, 0.0};
}

MeixnerPollaczek meixner_pollaczek_quarter_pi(double lambda) {
  return MeixnerPollaczek{lambda, std::sqrt(0.5), 1.0};
}

RecurrenceSpec renormalize(const RecurrenceSpec& spec, NormalizationKind target) {
  return RecurrenceSpec(spec.family(), target);
}

RecurrenceSpec renormalize_custom(const RecurrenceSpec& spec, std::vector<double> c) {
  return RecurrenceSpec(spec.family(), std::move(c));
}

ScaledReal renorm_factor(const RecurrenceSpec& from, const RecurrenceSpec& to,
                         std::size_t k) {
  ScaledReal d = ScaledReal::from_double(1.0);
  for (std::size_t i = 1; i <= k; ++i) {
    // per-index ratio in log space so Balanced stays finite at any k
    const double lr = to.log_c(i) - from.log_c(i);
    const double le = lr / std::log(2.0);
    const double ip = std::floor(le);
    d = d * ScaledReal::from_parts(std::exp2(le - ip), std::int64_t(ip));
  }
  return d;
}

RecurrenceSpec reflect(const RecurrenceSpec& spec) {
  FamilyTag family = spec.family();
  if (const auto* r = std::get_if<std::shared_ptr<const Reflected>>(&family))
    family = (*r)->base; // involution: unwrap instead of double-wrapping
  else
    family = std::make_shared<const Reflected>(Reflected{family});
  if (spec.normalization() == NormalizationKind::Custom) {
    std::vector<double> c;
    if (auto mi = spec.max_index()) {
      c.reserve(*mi + 1);
      for (std::size_t i = 0; i <= *mi; ++i) c.push_back(i == 0 ? 1.0 : spec.c(i));
    }
    return RecurrenceSpec(std::move(family), std::move(c));
  }
  return RecurrenceSpec(std::move(family), spec.normalization());
}

std::pair<RecurrenceSpec, TestSequenceParams> test_sequences(double r, double s,
                                                             double gamma) {
  TestSequenceParams p = make_test_sequence_params(r, s, gamma);
  return {RecurrenceSpec(TestSequences{p}, NormalizationKind::Orthonormal), p};
}

} // namespace turankit
