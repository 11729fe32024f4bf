#include <doctest.h>

#include <random>

#include "credal/discounting.hpp"
#include "credal/error.hpp"
#include "test_support.hpp"

using namespace credal;

namespace {

const Frame kTargets = Frame::build({"a", "h", "r"});
const Frame kW = Frame::build({"w1", "w2", "w3"});

void check_masses(const MassFunction& m, std::initializer_list<std::pair<const char*, double>> expected, double tol) {
  double listed = 0.0;
  for (const auto& [set, value] : expected) {
    INFO(set);
    CHECK(std::abs(m.at(m.frame().parse_subset(set)) - value) <= tol);
    listed += value;
  }
  CHECK(std::abs(m.total() - 1.0) <= 1e-9);
  // Everything not listed is zero.
  CHECK(std::abs(listed - m.total()) <= tol * static_cast<double>(expected.size()));
}

MassFunction case_input() {
  return MassFunction::make(kW, {{"w1", 0.3}, {"w2", 0.2}, {"w1,w2", 0.2}, {"w3", 0.2}, {"*", 0.1}});
}

}  // namespace

TEST_CASE("classical_discount") {
  const auto m = MassFunction::make(kTargets, {{"a", 0.5}, {"r", 0.5}});
  CHECK(classical_discount(m, 0.0) == m);
  CHECK(classical_discount(m, 1.0).is_vacuous());
  check_masses(classical_discount(m, 0.4), {{"a", 0.3}, {"r", 0.3}, {"*", 0.4}}, 1e-12);
  CHECK_THROWS_AS(classical_discount(m, 1.2), Error);
}

TEST_CASE("contextual_component_mass") {
  check_masses(contextual_component_mass(ContextVector::make(kTargets, {{"a", 0.4}})), {{"{}", 0.6}, {"a", 0.4}},
               1e-12);
  const std::vector<double> zeros{0, 0, 0};
  check_masses(contextual_component_mass(ContextVector::singletons(kW, zeros)), {{"{}", 1.0}}, 0.0);

  SUBCASE("three singleton components against brute force") {
    const std::vector<double> alpha{0.1493, 0.0228, 0.4122};
    // Oracle: naive combination of the three two-point components.
    std::vector<double> acc(8, 0.0);
    acc[0] = 1.0;
    for (int i = 0; i < 3; ++i) {
      std::vector<double> component(8, 0.0);
      component[0] = 1.0 - alpha[static_cast<std::size_t>(i)];
      component[std::size_t{1} << i] = alpha[static_cast<std::size_t>(i)];
      acc = testing::naive_drc(acc, component);
    }
    const auto m_theta = contextual_component_mass(ContextVector::singletons(kW, alpha));
    CHECK(testing::max_deviation(m_theta.dense(), acc) <= 1e-12);
    check_masses(m_theta,
                 {{"{}", 0.4886}, {"w1", 0.0858}, {"w2", 0.0114}, {"w1,w2", 0.0020},
                  {"w3", 0.3427}, {"w1,w3", 0.0602}, {"w2,w3", 0.0080}, {"*", 0.0014}},
                 5e-4);
  }

  SUBCASE("closed product form on disjoint contexts") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
      const auto ctx = ContextVector::make(kW, {{"w1", u(rng)}, {"w2,w3", u(rng)}});
      const auto m_theta = contextual_component_mass(ctx);
      for (std::uint32_t a = 0; a < 8; ++a) {
        double product = 1.0;
        SubsetMask covered;
        for (const auto& c : ctx) {
          const bool in = c.set.is_subset_of(SubsetMask(a));
          product *= in ? c.alpha : 1.0 - c.alpha;
          if (in) covered = covered | c.set;
        }
        if (covered != SubsetMask(a)) product = 0.0;  // not a union of contexts
        CHECK(std::abs(m_theta.at(SubsetMask(a)) - product) <= 1e-12);
      }
    }
  }
}

TEST_CASE("contextual_discount") {
  const auto m = MassFunction::make(kTargets, {{"a", 0.5}, {"r", 0.5}});
  check_masses(contextual_discount(m, ContextVector::make(kTargets, {{"a", 0.4}})),
               {{"a", 0.5}, {"r", 0.3}, {"a,r", 0.2}}, 1e-12);
  CHECK(contextual_discount(m, ContextVector::make(kTargets, {{"a", 0.0}, {"h", 0.0}})) == m);

  const std::vector<double> alpha_c2{0.1493, 0.0228, 0.4122};
  check_masses(contextual_discount(case_input(), ContextVector::singletons(kW, alpha_c2)),
               {{"w1", 0.1723}, {"w2", 0.1}, {"w1,w2", 0.1391}, {"w3", 0.1662},
                {"w1,w3", 0.15}, {"w2,w3", 0.074}, {"*", 0.1983}},
               5e-4);
  CHECK_THROWS_AS(contextual_discount(m, ContextVector::make(kW, {{"w1", 0.1}})), Error);
}

TEST_CASE("contextual_discount_singleton") {
  const auto ctx = ContextVector::make(kTargets, {{"a", 0.4}});
  CHECK(contextual_discount_singleton(MassFunction::vacuous(kTargets), ctx, kTargets.singleton(0)) == 0.0);
  const auto m = MassFunction::make(kTargets, {{"a", 0.5}, {"r", 0.5}});
  CHECK(contextual_discount_singleton(m, ctx, kTargets.parse_subset("r")) == doctest::Approx(0.3).epsilon(1e-12));

  const auto sub = MassFunction::make(kTargets, {{"{}", 0.1}, {"a", 0.9}});
  try {
    contextual_discount_singleton(sub, ctx, kTargets.singleton(0));
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
  try {
    contextual_discount_singleton(m, ctx, kTargets.parse_subset("a,r"));
    FAIL("expected NotSingleton");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSingleton);
  }

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Frame f = testing::numbered_frame(2 + trial % 4);
    const auto rm = testing::random_mass(rng, f, 8, false, true);
    const auto rctx = testing::random_contexts(rng, f, 4);
    const auto full = contextual_discount(rm, rctx);
    for (int i = 0; i < f.size(); ++i) {
      CHECK(std::abs(contextual_discount_singleton(rm, rctx, f.singleton(i)) - full.at(f.singleton(i))) <= 1e-12);
    }
  }
}

TEST_CASE("conservative_discount") {
  const auto m = MassFunction::make(kTargets, {{"a", 0.5}, {"r", 0.5}});
  const auto hr = ContextVector::make(kTargets, {{"h,r", 0.4}});
  check_masses(conservative_discount(m, hr), {{"a", 0.5}, {"r", 0.3}, {"*", 0.2}}, 1e-12);
  CHECK(conservative_discount(m, ContextVector::make(kTargets, {{"h,r", 0.0}})) == m);

  const std::vector<double> c1{0.0625, 0.5, 0.8312};
  check_masses(conservative_discount(case_input(), ContextVector::singletons(kW, c1)),
               {{"w1", 0.28125}, {"w2", 0.1}, {"w1,w2", 0.09375}, {"w3", 0.03376}, {"*", 0.49124}}, 5e-4);
}

TEST_CASE("optimistic_discount") {
  const std::vector<double> c1{0.0625, 0.5, 0.8312};
  check_masses(optimistic_discount(case_input(), ContextVector::singletons(kW, c1)),
               {{"w1", 0.28125}, {"w2", 0.1}, {"w1,w2", 0.2}, {"w3", 0.03376}, {"*", 0.38499}}, 5e-4);

  const std::vector<double> ones{1, 1, 1};
  const auto singles = MassFunction::make(kW, {{"w1", 0.2}, {"w2", 0.3}, {"w3", 0.5}});
  CHECK(optimistic_discount(singles, ContextVector::singletons(kW, ones)).is_vacuous());

  SUBCASE("subsets of a context are discounted") {
    // {r} lies inside {h,r}; the scheme discounts it like the context itself.
    const auto m = MassFunction::make(kTargets, {{"a", 0.5}, {"r", 0.5}});
    check_masses(optimistic_discount(m, ContextVector::make(kTargets, {{"h,r", 0.4}})),
                 {{"a", 0.5}, {"r", 0.3}, {"*", 0.2}}, 1e-12);
    // Supersets of a context are not.
    const auto wide = MassFunction::make(kTargets, {{"a,r", 0.5}, {"r", 0.5}});
    check_masses(optimistic_discount(wide, ContextVector::make(kTargets, {{"r", 0.4}})),
                 {{"a,r", 0.5}, {"r", 0.3}, {"*", 0.2}}, 1e-12);
  }
}

TEST_CASE("proportional_discount") {
  const std::vector<double> c1{0.0625, 0.5, 0.8312};
  check_masses(proportional_discount(case_input(), ContextVector::singletons(kW, c1)),
               {{"w1", 0.28125}, {"w2", 0.1}, {"w1,w2", 0.1453125}, {"w3", 0.03376}, {"*", 0.4396775}}, 5e-4);
  const std::vector<double> c2{0.5743, 0.5, 0.8312};
  CHECK(proportional_discount(case_input(), ContextVector::singletons(kW, c2)).at(kW.parse_subset("w1,w2")) ==
        doctest::Approx(0.1069275).epsilon(1e-9));

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto singles = testing::random_singleton_mass(rng, kW);
    const auto ctx = testing::random_contexts(rng, kW, 4);
    CHECK(testing::max_deviation(proportional_discount(singles, ctx), conservative_discount(singles, ctx)) <= 1e-15);
  }
}

TEST_CASE("empty-set mass is discounted by every context") {
  const auto m = MassFunction::make(kW, {{"{}", 0.4}, {"w1", 0.6}});
  const auto ctx = ContextVector::make(kW, {{"w2", 0.5}, {"w3", 0.5}});
  for (auto scheme : {Scheme::Conservative, Scheme::Proportional, Scheme::Optimistic}) {
    const auto r = discount(m, ctx, scheme);
    CHECK(r.at({}) == doctest::Approx(0.1));
    CHECK(r.at(kW.parse_subset("w1")) == doctest::Approx(0.6));
    CHECK(r.at(kW.full_set()) == doctest::Approx(0.3));
  }
}

TEST_CASE("grouped_discount") {
  std::mt19937_64 rng(9);
  const auto m = testing::random_mass(rng, kW, 8, true);
  const auto p1 = ContextVector::make(kW, {{"w1", 0.3}});
  const auto p2 = ContextVector::make(kW, {{"w2,w3", 0.6}});
  const auto joined = ContextVector::make(kW, {{"w1", 0.3}, {"w2,w3", 0.6}});
  for (auto scheme : {Scheme::Conservative, Scheme::Proportional, Scheme::Optimistic}) {
    const std::vector<ContextVector> parts{p1, p2};
    const auto grouped = grouped_discount(m, parts, scheme);
    CHECK(testing::max_deviation(grouped, discount(m, joined, scheme)) <= 1e-12);
    CHECK(testing::max_deviation(grouped, discount(discount(m, p1, scheme), p2, scheme)) <= 1e-12);
    CHECK(testing::max_deviation(grouped, discount(discount(m, p2, scheme), p1, scheme)) <= 1e-12);
    const std::vector<ContextVector> single{joined};
    CHECK(testing::max_deviation(grouped_discount(m, single, scheme), discount(m, joined, scheme)) == 0.0);
  }

  const std::vector<ContextVector> overlapping{p1, ContextVector::make(kW, {{"w1", 0.1}})};
  try {
    grouped_discount(m, overlapping, Scheme::Conservative);
    FAIL("expected OverlappingContextSets");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingContextSets);
  }
}

TEST_CASE("context vectors") {
  CHECK_THROWS_AS(ContextVector::make(kW, {{"{}", 0.3}}), Error);
  CHECK_THROWS_AS(ContextVector::make(kW, {{"w1", 0.3}, {"w1", 0.2}}), Error);
  CHECK_THROWS_AS(ContextVector::make(kW, {{"w1", 1.3}}), Error);
  CHECK(ContextVector::make(kW, {{"w1", 0.3}, {"w2,w3", 0}}).is_partition());
  CHECK_FALSE(ContextVector::make(kW, {{"w1", 0.3}}).is_partition());
  CHECK_FALSE(ContextVector::make(kW, {{"w1,w2", 0.3}, {"w2,w3", 0.1}}).is_partition());
}

TEST_CASE("scheme dispatch") {
  CHECK(parse_scheme("optimistic") == Scheme::Optimistic);
  CHECK_THROWS_AS(parse_scheme("pessimistic"), Error);
  const auto m = MassFunction::make(kTargets, {{"a", 0.5}, {"r", 0.5}});
  CHECK(discount(m, ContextVector::make(kTargets, {{"*", 0.4}}), Scheme::Classical) == classical_discount(m, 0.4));
  CHECK_THROWS_AS(discount(m, ContextVector::make(kTargets, {{"a", 0.4}}), Scheme::Classical), Error);
}
