#include "credal/temporal.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "credal/error.hpp"

namespace credal {

namespace {

void require_positive_time(double t) {
  if (!std::isfinite(t) || t <= 0.0) {
    throw Error(ErrorKind::NonPositiveTime, "time must be positive, got " + std::to_string(t), t);
  }
}

template <typename Entries>
void require_distinct_contexts(const Frame& frame, const Entries& entries) {
  std::set<SubsetMask> seen;
  for (const auto& e : entries) {
    if (!frame.is_valid(e.set)) throw Error(ErrorKind::UnknownLabel, "context bitmask is outside the frame");
    if (e.set.empty()) throw Error(ErrorKind::EmptyContext, "the empty set cannot carry a decay rate");
    if (!seen.insert(e.set).second) {
      throw Error(ErrorKind::DuplicateContext, "context " + frame.format(e.set) + " listed twice");
    }
  }
}

}  // namespace

double lambda_from_half_life(double t_half) {
  require_positive_time(t_half);
  return std::numbers::ln2 / t_half;
}

double lambda_from_fraction_life(double n, double t) {
  if (!std::isfinite(n) || n <= 1.0) {
    throw Error(ErrorKind::InvalidFraction, "fraction denominator must exceed 1, got " + std::to_string(n), n);
  }
  require_positive_time(t);
  if (n == 2.0) return lambda_from_half_life(t);
  return std::log(n) / t;
}

DecaySpec::DecaySpec(Frame frame, std::vector<DecayEntry> entries)
    : frame_(std::move(frame)), entries_(std::move(entries)) {
  require_distinct_contexts(frame_, entries_);
  for (const auto& e : entries_) {
    if (!std::isfinite(e.lambda) || e.lambda <= 0.0) {
      throw Error(ErrorKind::InvalidDecayRate,
                  "decay rate of " + frame_.format(e.set) + " must be finite and positive", e.lambda);
    }
  }
}

DecaySpec DecaySpec::from_half_lives(const Frame& frame, std::span<const double> half_lives) {
  if (half_lives.size() != static_cast<std::size_t>(frame.size())) {
    throw Error(ErrorKind::NotSingletonCover, "expected one half-life per label");
  }
  std::vector<DecayEntry> entries;
  for (int i = 0; i < frame.size(); ++i) {
    entries.push_back({frame.singleton(i), lambda_from_half_life(half_lives[static_cast<std::size_t>(i)])});
  }
  return DecaySpec(frame, std::move(entries));
}

std::vector<double> DecaySpec::lambdas() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.push_back(e.lambda);
  return out;
}

KappaVector::KappaVector(Frame frame, std::vector<KappaEntry> entries, double time)
    : frame_(std::move(frame)), entries_(std::move(entries)), time_(time) {
  require_distinct_contexts(frame_, entries_);
  for (const auto& e : entries_) {
    if (!std::isfinite(e.kappa) || e.kappa <= 0.0 || e.kappa > 1.0) {
      throw Error(ErrorKind::NonPositiveKappa,
                  "retained fraction of " + frame_.format(e.set) + " must lie in (0,1], got " + std::to_string(e.kappa),
                  e.kappa);
    }
  }
}

std::vector<double> KappaVector::kappas() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.push_back(e.kappa);
  return out;
}

KappaVector kappa_at(const DecaySpec& spec, double t) {
  if (!std::isfinite(t) || t < 0.0) throw Error(ErrorKind::NegativeTime, "age must be non-negative", t);
  std::vector<KappaEntry> entries;
  for (const auto& e : spec.entries()) entries.push_back({e.set, std::exp(-e.lambda * t)});
  return KappaVector(spec.frame(), std::move(entries), t);
}

ContextualAlphas contextual_alphas_from_kappa(const KappaVector& kappa) {
  const Frame& frame = kappa.frame();
  const auto& entries = kappa.entries();
  SubsetMask covered;
  for (const auto& e : entries) {
    if (e.set.cardinality() != 1) {
      throw Error(ErrorKind::NotSingletonCover, "context " + frame.format(e.set) + " is not a singleton");
    }
    covered = covered | e.set;
  }
  if (entries.size() != static_cast<std::size_t>(frame.size()) || covered != frame.full_set()) {
    throw Error(ErrorKind::NotSingletonCover, "contexts must be exactly the singletons of the frame");
  }

  ContextualAlphas result;
  const std::size_t k = entries.size();
  if (k == 1) {
    result.raw.push_back(1.0 - entries.front().kappa);
  } else {
    double log_sum = 0.0;
    for (const auto& e : entries) log_sum += std::log(e.kappa);
    const double shared = log_sum / static_cast<double>(k - 1);
    for (const auto& e : entries) result.raw.push_back(-std::expm1(shared - std::log(e.kappa)));
  }

  bool feasible = true;
  for (double a : result.raw) feasible = feasible && a >= 0.0 && a <= 1.0;
  if (feasible) {
    std::vector<Context> contexts;
    for (std::size_t i = 0; i < k; ++i) contexts.push_back({entries[i].set, result.raw[i]});
    result.contexts.emplace(frame, std::move(contexts));
  }
  return result;
}

ContextVector scheme_alphas_from_kappa(const KappaVector& kappa) {
  std::vector<Context> contexts;
  for (const auto& e : kappa.entries()) contexts.push_back({e.set, 1.0 - e.kappa});
  return ContextVector(kappa.frame(), std::move(contexts));
}

AlphaMode parse_alpha_mode(std::string_view name) {
  if (name == "postulate") return AlphaMode::Postulate;
  if (name == "paper-table") return AlphaMode::PaperTable;
  throw Error(ErrorKind::UnknownScheme, "unknown alpha mode '" + std::string(name) + "'");
}

std::string_view to_string(AlphaMode mode) { return mode == AlphaMode::Postulate ? "postulate" : "paper-table"; }

MassFunction temporal_discount(const MassFunction& m, const DecaySpec& spec, double t, Scheme scheme, AlphaMode mode) {
  if (scheme != Scheme::Conservative && scheme != Scheme::Proportional && scheme != Scheme::Optimistic) {
    throw Error(ErrorKind::UnknownScheme, "temporal discounting maps kappa directly only for the three new schemes");
  }
  require_same_frame(m.frame(), spec.frame());
  const KappaVector kappa = kappa_at(spec, t);
  if (mode == AlphaMode::Postulate) return discount(m, scheme_alphas_from_kappa(kappa), scheme);

  std::vector<Context> contexts;
  for (const auto& e : kappa.entries()) contexts.push_back({e.set, e.kappa});
  return discount(m, ContextVector(m.frame(), std::move(contexts)), scheme);
}

}  // namespace credal
