#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "credal/context.hpp"
#include "credal/discounting.hpp"
#include "credal/mass_function.hpp"

namespace credal {

/// ln 2 / t_half. Errors: NonPositiveTime.
double lambda_from_half_life(double t_half);

/// ln N / t, the rate at which mass falls to 1/N of its value after t seconds.
/// Errors: InvalidFraction (N <= 1), NonPositiveTime.
double lambda_from_fraction_life(double n, double t);

struct DecayEntry {
  SubsetMask set;
  double lambda = 0.0;  // 1/s
};

/// Exponential decay rate per context.
class DecaySpec {
 public:
  /// Errors: EmptyContext, DuplicateContext, InvalidDecayRate.
  DecaySpec(Frame frame, std::vector<DecayEntry> entries);

  /// One singleton context per label, rates derived from half-lives.
  static DecaySpec from_half_lives(const Frame& frame, std::span<const double> half_lives);

  const Frame& frame() const { return frame_; }
  const std::vector<DecayEntry>& entries() const { return entries_; }
  std::vector<double> lambdas() const;

 private:
  Frame frame_;
  std::vector<DecayEntry> entries_;
};

struct KappaEntry {
  SubsetMask set;
  double kappa = 1.0;
};

/// Retained fraction per context at a given age; every kappa in (0, 1].
class KappaVector {
 public:
  /// Errors: NonPositiveKappa (kappa outside (0,1]), EmptyContext, DuplicateContext.
  KappaVector(Frame frame, std::vector<KappaEntry> entries, double time = 0.0);

  const Frame& frame() const { return frame_; }
  const std::vector<KappaEntry>& entries() const { return entries_; }
  double time() const { return time_; }
  std::vector<double> kappas() const;

 private:
  Frame frame_;
  std::vector<KappaEntry> entries_;
  double time_;
};

/// kappa = exp(-lambda t). Errors: NegativeTime, NonPositiveKappa on underflow.
KappaVector kappa_at(const DecaySpec& spec, double t);

/// Result of solving for contextual discount rates. `raw` always holds the
/// solved vector; `contexts` is set only when every rate lies in [0,1].
struct ContextualAlphas {
  std::vector<double> raw;
  std::optional<ContextVector> contexts;

  bool feasible() const { return contexts.has_value(); }
};

/// Discount rates for which contextual discounting retains exactly kappa_i of
/// each singleton mass: ln(1 - alpha_i) = (sum_j ln kappa_j) / (K - 1) - ln kappa_i.
/// A one-label frame yields alpha = 1 - kappa.
/// Errors: NotSingletonCover (contexts must be the K singletons).
ContextualAlphas contextual_alphas_from_kappa(const KappaVector& kappa);

/// alpha = 1 - kappa for the conservative / proportional / optimistic schemes.
ContextVector scheme_alphas_from_kappa(const KappaVector& kappa);

enum class AlphaMode {
  Postulate,   // alpha = 1 - kappa: singleton mass retained at kappa
  PaperTable,  // alpha = kappa: reproduces the published case tables
};

AlphaMode parse_alpha_mode(std::string_view name);
std::string_view to_string(AlphaMode mode);

/// kappa_at, then alpha per `mode`, then the scheme (conservative,
/// proportional or optimistic).
MassFunction temporal_discount(const MassFunction& m, const DecaySpec& spec, double t, Scheme scheme,
                               AlphaMode mode = AlphaMode::Postulate);

}  // namespace credal
