#include "credal/mass_function.hpp"

#include <cmath>
#include <sstream>

#include "credal/error.hpp"
#include "credal/lattice.hpp"

namespace credal {

namespace {

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

MassFunction MassFunction::make(const Frame& frame, std::span<const std::pair<std::string, double>> assignments) {
  std::vector<std::pair<SubsetMask, double>> masks;
  masks.reserve(assignments.size());
  for (const auto& [expr, mass] : assignments) masks.emplace_back(frame.parse_subset(expr), mass);
  return from_masks(frame, masks);
}

MassFunction MassFunction::make(const Frame& frame, std::initializer_list<std::pair<std::string, double>> assignments) {
  return make(frame, std::span<const std::pair<std::string, double>>(assignments.begin(), assignments.size()));
}

MassFunction MassFunction::from_masks(const Frame& frame, std::span<const std::pair<SubsetMask, double>> assignments) {
  Focal focal;
  std::map<SubsetMask, bool> seen;
  double sum = 0.0;
  for (const auto& [subset, mass] : assignments) {
    if (!frame.is_valid(subset)) {
      throw Error(ErrorKind::UnknownLabel, "subset bitmask " + std::to_string(subset.bits) + " is outside the frame");
    }
    if (!seen.emplace(subset, true).second) {
      throw Error(ErrorKind::DuplicateSubset, "subset " + frame.format(subset) + " assigned twice");
    }
    if (!std::isfinite(mass) || mass < 0.0 || mass > 1.0 + kMassTolerance) {
      throw Error(ErrorKind::MassOutOfRange, "mass of " + frame.format(subset) + " is " + describe(mass), mass);
    }
    sum += mass;
    if (mass > 0.0) focal.emplace(subset, mass);
  }
  const double deviation = std::abs(sum - 1.0);
  if (deviation > kMassTolerance) {
    throw Error(ErrorKind::MassSumNotOne, "masses sum to " + describe(sum) + " (deviation " + describe(deviation) + ")",
                deviation);
  }
  return MassFunction(frame, std::move(focal));
}

MassFunction MassFunction::from_masks(const Frame& frame, const Focal& assignments) {
  std::vector<std::pair<SubsetMask, double>> flat(assignments.begin(), assignments.end());
  return from_masks(frame, flat);
}

MassFunction MassFunction::vacuous(const Frame& frame) { return MassFunction(frame, Focal{{frame.full_set(), 1.0}}); }

double MassFunction::at(SubsetMask a) const {
  const auto it = focal_.find(a);
  return it == focal_.end() ? 0.0 : it->second;
}

bool MassFunction::is_vacuous() const { return focal_.size() == 1 && focal_.begin()->first == frame_.full_set(); }

double MassFunction::total() const {
  double sum = 0.0;
  for (const auto& [subset, mass] : focal_) sum += mass;
  return sum;
}

std::vector<double> MassFunction::dense() const {
  std::vector<double> out(frame_.subset_count(), 0.0);
  for (const auto& [subset, mass] : focal_) out[subset.bits] = mass;
  return out;
}

double belief_of(const MassFunction& m, SubsetMask a) {
  if (!m.frame().is_valid(a)) throw Error(ErrorKind::FrameMismatch, "subset is not valid for the mass function's frame");
  double sum = 0.0;
  for (const auto& [subset, mass] : m.focal()) {
    if (!subset.empty() && subset.is_subset_of(a)) sum += mass;
  }
  return sum;
}

double implicability_of(const MassFunction& m, SubsetMask a) {
  if (!m.frame().is_valid(a)) throw Error(ErrorKind::FrameMismatch, "subset is not valid for the mass function's frame");
  double sum = 0.0;
  for (const auto& [subset, mass] : m.focal()) {
    if (subset.is_subset_of(a)) sum += mass;
  }
  return sum;
}

MassFunction drc_combine(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  MassFunction::Focal result;
  for (const auto& [b, mb] : m1.focal()) {
    for (const auto& [c, mc] : m2.focal()) result[b | c] += mb * mc;
  }
  return MassFunction::from_masks(m1.frame(), result);
}

void require_dense_capacity(const Frame& frame, int max_k) {
  if (frame.size() > max_k) {
    throw Error(ErrorKind::FrameTooLarge, "dense transform limited to frames of " + std::to_string(max_k) +
                                              " labels, got " + std::to_string(frame.size()));
  }
}

SignedMassVector SignedMassVector::neutral(const Frame& frame) {
  std::vector<double> values(frame.subset_count(), 0.0);
  values[0] = 1.0;
  return SignedMassVector(frame, std::move(values));
}

SignedMassVector SignedMassVector::from_mass(const MassFunction& m) { return SignedMassVector(m.frame(), m.dense()); }

SignedMassVector SignedMassVector::simple_component(const Frame& frame, SubsetMask focal, double weight) {
  std::vector<double> values(frame.subset_count(), 0.0);
  values[0] = weight;
  values[focal.bits] += 1.0 - weight;
  return SignedMassVector(frame, std::move(values));
}

SignedMassVector SignedMassVector::from_values(const Frame& frame, std::vector<double> values) {
  if (values.size() != frame.subset_count()) {
    throw Error(ErrorKind::NotAMassFunction, "signed vector needs " + std::to_string(frame.subset_count()) +
                                                 " entries, got " + std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NotAMassFunction, "signed vector entry is not finite");
  }
  return SignedMassVector(frame, std::move(values));
}

MassFunction SignedMassVector::to_mass_function(double tol) const {
  MassFunction::Focal focal;
  double sum = 0.0;
  for (std::size_t a = 0; a < values_.size(); ++a) {
    const double v = values_[a];
    if (v < -tol) {
      throw Error(ErrorKind::NotAMassFunction,
                  "entry " + frame_.format(SubsetMask(static_cast<std::uint32_t>(a))) + " is " + describe(v), v);
    }
    sum += v;
    if (v > 0.0) focal.emplace(SubsetMask(static_cast<std::uint32_t>(a)), v);
  }
  if (std::abs(sum - 1.0) > tol) {
    throw Error(ErrorKind::NotAMassFunction, "entries sum to " + describe(sum), sum - 1.0);
  }
  return MassFunction::from_masks(frame_, focal);
}

SignedMassVector drc_combine(const SignedMassVector& a, const SignedMassVector& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<double> ba(a.values().begin(), a.values().end());
  std::vector<double> bb(b.values().begin(), b.values().end());
  lattice::subset_zeta(ba);
  lattice::subset_zeta(bb);
  for (std::size_t i = 0; i < ba.size(); ++i) ba[i] *= bb[i];
  lattice::subset_mobius(ba);
  return SignedMassVector::from_values(a.frame(), std::move(ba));
}

}  // namespace credal
