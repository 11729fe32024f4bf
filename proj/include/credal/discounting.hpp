#pragma once

#include <span>
#include <string_view>

#include "credal/context.hpp"
#include "credal/mass_function.hpp"

namespace credal {

enum class Scheme { Classical, Contextual, Generalized, Conservative, Proportional, Optimistic };

/// Accepts "classical", "contextual", "generalized", "conservative",
/// "proportional", "optimistic". Throws UnknownScheme.
Scheme parse_scheme(std::string_view name);
std::string_view to_string(Scheme scheme);

/// Shafer's discounting: every proper subset scaled by 1 - alpha, the removed
/// mass moved to the whole frame.
MassFunction classical_discount(const MassFunction& m, double alpha);

/// The discounting mass function m_Theta: disjunctive combination of one
/// {empty: 1 - alpha, theta: alpha} component per context. For pairwise
/// disjoint contexts this equals the closed product form
///   m_Theta(A) = prod_{theta subset of A} alpha * prod_{theta not subset of A} (1 - alpha).
MassFunction contextual_component_mass(const ContextVector& ctx);

/// Contextual discounting: m combined disjunctively with m_Theta.
MassFunction contextual_discount(const MassFunction& m, const ContextVector& ctx);

/// Contextually discounted mass of the singleton `theta` for a normal m,
/// m({theta}) * (m_Theta(empty) + m_Theta({theta})), without the full
/// combination. Errors: NotNormal, NotSingleton.
double contextual_discount_singleton(const MassFunction& m, const ContextVector& ctx, SubsetMask theta);

// The three schemes below share one shape: the empty set is scaled by the
// product of every beta, each proper non-empty subset A by a scheme-specific
// factor, and the whole frame receives m(Omega) plus all removed mass.
//   conservative: prod over contexts meeting A of (1 - alpha)
//   proportional: prod over contexts meeting A of (1 - alpha * |A n theta| / |A|)
//   optimistic:   prod over contexts containing A of (1 - alpha)

MassFunction conservative_discount(const MassFunction& m, const ContextVector& ctx);
MassFunction proportional_discount(const MassFunction& m, const ContextVector& ctx);
MassFunction optimistic_discount(const MassFunction& m, const ContextVector& ctx);

/// Retained fraction of a proper subset's mass under one of the three
/// schemes above. Not defined for the whole frame.
double retention_factor(Scheme scheme, SubsetMask a, const ContextVector& ctx);

/// Dispatches on `scheme`. Classical needs the single context to be the
/// whole frame (UnsupportedContext otherwise).
MassFunction discount(const MassFunction& m, const ContextVector& ctx, Scheme scheme);

/// Applies the parts as one discount on their concatenation, which equals
/// applying them one after another in any order. The parts must not share a
/// context (OverlappingContextSets). Only the three new schemes are accepted.
MassFunction grouped_discount(const MassFunction& m, std::span<const ContextVector> parts, Scheme scheme);

}  // namespace credal
