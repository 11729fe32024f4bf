#include "credal/discounting.hpp"

#include <cmath>
#include <set>

#include "credal/disjunctive.hpp"
#include "credal/error.hpp"

namespace credal {

namespace {

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw Error(ErrorKind::AlphaOutOfRange, "discount rate must lie in [0,1], got " + std::to_string(alpha), alpha);
  }
}

double empty_set_factor(const ContextVector& ctx) {
  double f = 1.0;
  for (const auto& c : ctx) f *= c.beta();
  return f;
}

MassFunction residual_discount(const MassFunction& m, const ContextVector& ctx, Scheme scheme) {
  require_same_frame(m.frame(), ctx.frame());
  const SubsetMask omega = m.frame().full_set();
  MassFunction::Focal out;
  double removed = 0.0;
  for (const auto& [a, mass] : m.focal()) {
    if (a == omega) continue;
    const double kept = mass * (a.empty() ? empty_set_factor(ctx) : retention_factor(scheme, a, ctx));
    removed += mass - kept;
    out[a] = kept;
  }
  out[omega] = m.at(omega) + removed;
  return MassFunction::from_masks(m.frame(), out);
}

}  // namespace

Scheme parse_scheme(std::string_view name) {
  if (name == "classical") return Scheme::Classical;
  if (name == "contextual") return Scheme::Contextual;
  if (name == "generalized") return Scheme::Generalized;
  if (name == "conservative") return Scheme::Conservative;
  if (name == "proportional") return Scheme::Proportional;
  if (name == "optimistic") return Scheme::Optimistic;
  throw Error(ErrorKind::UnknownScheme, "unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Classical: return "classical";
    case Scheme::Contextual: return "contextual";
    case Scheme::Generalized: return "generalized";
    case Scheme::Conservative: return "conservative";
    case Scheme::Proportional: return "proportional";
    case Scheme::Optimistic: return "optimistic";
  }
  return "unknown";
}

MassFunction classical_discount(const MassFunction& m, double alpha) {
  require_alpha(alpha);
  const SubsetMask omega = m.frame().full_set();
  MassFunction::Focal out;
  for (const auto& [a, mass] : m.focal()) {
    if (a != omega) out[a] = (1.0 - alpha) * mass;
  }
  out[omega] = (1.0 - alpha) * m.at(omega) + alpha;
  return MassFunction::from_masks(m.frame(), out);
}

MassFunction contextual_component_mass(const ContextVector& ctx) {
  MassFunction::Focal acc{{SubsetMask{}, 1.0}};
  for (const auto& c : ctx) {
    MassFunction::Focal next;
    for (const auto& [a, mass] : acc) {
      if (c.alpha < 1.0) next[a] += mass * c.beta();
      if (c.alpha > 0.0) next[a | c.set] += mass * c.alpha;
    }
    acc = std::move(next);
  }
  return MassFunction::from_masks(ctx.frame(), acc);
}

MassFunction contextual_discount(const MassFunction& m, const ContextVector& ctx) {
  require_same_frame(m.frame(), ctx.frame());
  return drc_combine(m, contextual_component_mass(ctx));
}

double contextual_discount_singleton(const MassFunction& m, const ContextVector& ctx, SubsetMask theta) {
  require_same_frame(m.frame(), ctx.frame());
  if (!m.is_normal()) throw Error(ErrorKind::NotNormal, "singleton shortcut needs m(empty set) = 0", m.at({}));
  if (!m.frame().is_valid(theta) || theta.cardinality() != 1) {
    throw Error(ErrorKind::NotSingleton, "singleton shortcut needs a one-element subset");
  }
  const double mass = m.at(theta);
  if (mass == 0.0) return 0.0;
  return mass * implicability_of(contextual_component_mass(ctx), theta);
}

double retention_factor(Scheme scheme, SubsetMask a, const ContextVector& ctx) {
  double f = 1.0;
  switch (scheme) {
    case Scheme::Conservative:
      for (const auto& c : ctx) {
        if (a.intersects(c.set)) f *= c.beta();
      }
      return f;
    case Scheme::Proportional: {
      const double card = a.cardinality();
      for (const auto& c : ctx) {
        const int shared = (a & c.set).cardinality();
        if (shared > 0) f *= 1.0 - c.alpha * (shared / card);
      }
      return f;
    }
    case Scheme::Optimistic:
      for (const auto& c : ctx) {
        if (a.is_subset_of(c.set)) f *= c.beta();
      }
      return f;
    default:
      throw Error(ErrorKind::UnknownScheme, "retention factors exist only for conservative, proportional, optimistic");
  }
}

MassFunction conservative_discount(const MassFunction& m, const ContextVector& ctx) {
  return residual_discount(m, ctx, Scheme::Conservative);
}

MassFunction proportional_discount(const MassFunction& m, const ContextVector& ctx) {
  return residual_discount(m, ctx, Scheme::Proportional);
}

MassFunction optimistic_discount(const MassFunction& m, const ContextVector& ctx) {
  return residual_discount(m, ctx, Scheme::Optimistic);
}

MassFunction discount(const MassFunction& m, const ContextVector& ctx, Scheme scheme) {
  switch (scheme) {
    case Scheme::Classical:
      require_same_frame(m.frame(), ctx.frame());
      if (ctx.size() != 1 || ctx.contexts().front().set != m.frame().full_set()) {
        throw Error(ErrorKind::UnsupportedContext, "classical discounting takes a single context spanning the frame");
      }
      return classical_discount(m, ctx.contexts().front().alpha);
    case Scheme::Contextual: return contextual_discount(m, ctx);
    case Scheme::Generalized: return generalized_contextual_discount(m, ctx);
    case Scheme::Conservative: return conservative_discount(m, ctx);
    case Scheme::Proportional: return proportional_discount(m, ctx);
    case Scheme::Optimistic: return optimistic_discount(m, ctx);
  }
  throw Error(ErrorKind::UnknownScheme, "unhandled scheme");
}

MassFunction grouped_discount(const MassFunction& m, std::span<const ContextVector> parts, Scheme scheme) {
  if (scheme != Scheme::Conservative && scheme != Scheme::Proportional && scheme != Scheme::Optimistic) {
    throw Error(ErrorKind::UnknownScheme, "grouping holds for conservative, proportional and optimistic only");
  }
  std::vector<Context> all;
  std::set<SubsetMask> seen;
  for (const auto& part : parts) {
    require_same_frame(m.frame(), part.frame());
    for (const auto& c : part) {
      if (!seen.insert(c.set).second) {
        throw Error(ErrorKind::OverlappingContextSets,
                    "context " + m.frame().format(c.set) + " appears in more than one part");
      }
      all.push_back(c);
    }
  }
  return residual_discount(m, ContextVector(m.frame(), std::move(all)), scheme);
}

}  // namespace credal
