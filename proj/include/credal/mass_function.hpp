#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "credal/frame.hpp"

namespace credal {

inline constexpr double kMassTolerance = 1e-9;

/// A basic belief assignment on a frame. Only focal sets (mass > 0) are
/// stored; the empty set may carry mass (subnormal BBAs are allowed).
class MassFunction {
 public:
  using Focal = std::map<SubsetMask, double>;

  /// Builds from subset expressions (see Frame::parse_subset).
  /// Errors: UnknownLabel, DuplicateSubset, MassOutOfRange, MassSumNotOne.
  static MassFunction make(const Frame& frame, std::span<const std::pair<std::string, double>> assignments);
  static MassFunction make(const Frame& frame, std::initializer_list<std::pair<std::string, double>> assignments);

  /// Same checks as make(), keyed by bitmask.
  static MassFunction from_masks(const Frame& frame, std::span<const std::pair<SubsetMask, double>> assignments);
  static MassFunction from_masks(const Frame& frame, const Focal& assignments);

  static MassFunction vacuous(const Frame& frame);

  const Frame& frame() const { return frame_; }
  const Focal& focal() const { return focal_; }

  /// Mass of `a`, zero when it is not focal.
  double at(SubsetMask a) const;

  bool is_normal() const { return !focal_.contains(SubsetMask{}); }
  bool is_vacuous() const;
  double total() const;

  /// Dense copy indexed by bitmask (2^K entries).
  std::vector<double> dense() const;

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  MassFunction(Frame frame, Focal focal) : frame_(std::move(frame)), focal_(std::move(focal)) {}

  Frame frame_;
  Focal focal_;
};

/// bel(A): total mass of non-empty subsets of A.
double belief_of(const MassFunction& m, SubsetMask a);

/// b(A): total mass of subsets of A, the empty set included.
double implicability_of(const MassFunction& m, SubsetMask a);

/// Disjunctive rule of combination by pairwise focal-set enumeration.
MassFunction drc_combine(const MassFunction& m1, const MassFunction& m2);

/// Dense real-valued function on 2^frame whose entries may be negative or
/// exceed one; it closes the disjunctive algebra over generalised simple BBAs.
class SignedMassVector {
 public:
  /// The neutral element of the disjunctive rule, {empty set: 1}.
  static SignedMassVector neutral(const Frame& frame);
  static SignedMassVector from_mass(const MassFunction& m);
  /// Generalised simple component: empty set -> weight, `focal` -> 1 - weight.
  static SignedMassVector simple_component(const Frame& frame, SubsetMask focal, double weight);
  /// Requires 2^K finite entries.
  static SignedMassVector from_values(const Frame& frame, std::vector<double> values);

  const Frame& frame() const { return frame_; }
  std::span<const double> values() const { return values_; }
  double operator[](SubsetMask a) const { return values_[a.bits]; }

  /// Entries in [-tol, 0) are clamped to zero; anything lower, or a sum more
  /// than tol away from one, raises NotAMassFunction.
  MassFunction to_mass_function(double tol = kMassTolerance) const;

 private:
  SignedMassVector(Frame frame, std::vector<double> values) : frame_(std::move(frame)), values_(std::move(values)) {}

  Frame frame_;
  std::vector<double> values_;
};

/// Disjunctive combination extended to signed vectors (dense, through the
/// implicability transform, O(K 2^K)).
SignedMassVector drc_combine(const SignedMassVector& a, const SignedMassVector& b);

/// Throws FrameTooLarge when a dense 2^K sweep over `frame` exceeds `max_k`.
void require_dense_capacity(const Frame& frame, int max_k);

}  // namespace credal
