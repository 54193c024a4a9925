#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "relmub/structures.hpp"
#include "test_support.hpp"

using namespace relmub;
using namespace relmub::testing;

namespace {

ClassicalStructure cyclic_structure(int n,
                                    std::vector<std::vector<int>> blocks) {
  return ClassicalStructure::with_cyclic_groups(
      Partition::from_blocks(n, std::move(blocks)));
}

// Categorical composite dagger(delta) . (p (x) id) . unitor, built purely
// from the Rel calculus.
Rel categorical_lambda(const ClassicalStructure& cs, const Point& p) {
  const int n = cs.n();
  const Rel delta = build_delta(cs);
  const Rel unitor = Rel::identity(n);  // I (x) X and X share indices
  return compose(compose(unitor, tensor(point_rel(p), Rel::identity(n))),
                 dagger(delta));
}

Point identities_point(const ClassicalStructure& cs) {
  std::vector<int> members;
  for (const GroupTable& g : cs.groups)
    members.push_back(g.elements[g.identity_index]);
  return Point::of(cs.n(), std::move(members));
}

}  // namespace

TEST_CASE("partition canonical form and enumeration") {
  const Partition p = Partition::from_blocks(4, {{3, 1}, {2, 0}});
  CHECK(p.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 1}, {1}}),
                  std::invalid_argument);

  const int bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n) {
    const auto parts = all_partitions(n);
    CHECK(static_cast<int>(parts.size()) == bell[n]);
    for (const Partition& q : parts) q.validate();
  }
}

TEST_CASE("group tables") {
  const GroupTable z4 = GroupTable::cyclic({0, 1, 2, 3});
  z4.validate();
  const GroupTable klein = klein_table({0, 1, 2, 3});
  klein.validate();
  CHECK(z4.table != klein.table);

  GroupTable broken = z4;
  broken.table[1][1] = 0;  // now 1*1 = 0 = 1*3
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}

TEST_CASE("build_delta examples") {
  // Singleton blocks force the diagonal embedding x -> (x, x).
  const auto singles = cyclic_structure(3, {{0}, {1}, {2}});
  const Rel delta3 = build_delta(singles);
  CHECK(delta3 ==
        Rel::from_pairs(3, 9, {{0, 0 * 3 + 0}, {1, 1 * 3 + 1}, {2, 2 * 3 + 2}}));

  const auto z2 = cyclic_structure(2, {{0, 1}});
  CHECK(build_delta(z2) ==
        Rel::from_pairs(2, 4, {{0, 0}, {0, 3}, {1, 1}, {1, 2}}));

  // The one-block structure on two elements has the whole block as its
  // classical point.
  CHECK(classical_points(z2, PointMode::oracle) ==
        std::vector<Point>{Point::of(2, {0, 1})});
}

TEST_CASE("build_epsilon examples") {
  CHECK(build_epsilon(cyclic_structure(3, {{0}, {1}, {2}})) ==
        Rel::from_pairs(3, 1, {{0, 0}, {1, 0}, {2, 0}}));
  CHECK(build_epsilon(cyclic_structure(2, {{0, 1}})) ==
        Rel::from_pairs(2, 1, {{0, 0}}));
  CHECK(build_epsilon(cyclic_structure(4, {{0, 1, 2}, {3}})) ==
        Rel::from_pairs(4, 1, {{0, 0}, {3, 0}}));
}

TEST_CASE("verify_frobenius holds for every cyclic structure on 4 elements") {
  const auto parts = all_partitions(4);
  CHECK(parts.size() == 15);
  for (const Partition& p : parts)
    CHECK(verify_frobenius(ClassicalStructure::with_cyclic_groups(p)));
}

TEST_CASE("verify_frobenius accepts the Klein group") {
  ClassicalStructure cs;
  cs.partition = Partition::from_blocks(4, {{0, 1, 2, 3}});
  cs.groups = {klein_table({0, 1, 2, 3})};
  cs.validate();
  CHECK(verify_frobenius(cs));
}

TEST_CASE("verify_frobenius rejects corrupted tables") {
  auto cs = cyclic_structure(4, {{0, 1, 2, 3}});
  std::swap(cs.groups[0].table[1][2], cs.groups[0].table[1][1]);
  CHECK_FALSE(verify_frobenius(cs));
}

TEST_CASE("verify_frobenius size limit reports a memory estimate") {
  const auto cs = cyclic_structure(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}});
  CHECK_THROWS_WITH_AS(verify_frobenius(cs, 8),
                       doctest::Contains("n^2 x n^3"), std::invalid_argument);
  CHECK(verify_frobenius(cs, 9));
}

TEST_CASE("is_classical_point examples") {
  const auto cs = cyclic_structure(3, {{0, 2}, {1}});
  CHECK(is_classical_point(cs, Point::of(3, {0, 2})));
  CHECK(is_classical_point(cs, Point::of(3, {1})));
  CHECK_FALSE(is_classical_point(cs, Point::of(3, {0, 1})));
  CHECK_THROWS_AS(is_classical_point(cs, Point::of(3, {})),
                  std::invalid_argument);

  const auto one = cyclic_structure(1, {{0}});
  CHECK(is_classical_point(one, Point::of(1, {0})));
}

TEST_CASE("classical_points examples and mode agreement") {
  const auto cs = cyclic_structure(3, {{0, 1}, {2}});
  const std::vector<Point> expected{Point::of(3, {0, 1}), Point::of(3, {2})};
  CHECK(classical_points(cs, PointMode::fast) == expected);
  CHECK(classical_points(cs, PointMode::oracle) == expected);

  const auto singles = cyclic_structure(4, {{0}, {1}, {2}, {3}});
  CHECK(classical_points(singles, PointMode::fast).size() == 4);

  const auto split = cyclic_structure(2, {{0}, {1}});
  CHECK(classical_points(split, PointMode::oracle) ==
        std::vector<Point>{Point::of(2, {0}), Point::of(2, {1})});
}

TEST_CASE("lambda_map examples") {
  const auto z2 = cyclic_structure(2, {{0, 1}});
  CHECK(lambda_map(z2, identities_point(z2)) == Rel::identity(2));
  CHECK(lambda_map(z2, Point::of(2, {1})) ==
        Rel::from_pairs(2, 2, {{0, 1}, {1, 0}}));

  const auto nonuniform = cyclic_structure(3, {{0, 2}, {1}});
  CHECK_FALSE(is_unitary(lambda_map(nonuniform, Point::of(3, {0, 2}))));
}

TEST_CASE("lambda_map is the transpose of the categorical composite") {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& part : all_partitions(n)) {
      const auto cs = ClassicalStructure::with_cyclic_groups(part);
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int x = 0; x < n; ++x)
          if (mask & (1u << x)) members.push_back(x);
        const Point p = Point::of(n, members);
        const Rel concrete = lambda_map(cs, p);
        const Rel categorical = categorical_lambda(cs, p);
        CHECK(concrete == dagger(categorical));
        CHECK(is_unitary(concrete) == is_unitary(categorical));
      }
    }
  }
}

TEST_CASE("is_unbiased_point examples") {
  const auto split = cyclic_structure(2, {{0}, {1}});
  CHECK(is_unbiased_point(split, Point::of(2, {0, 1})));

  const auto nonuniform = cyclic_structure(3, {{0, 2}, {1}});
  CHECK(is_unbiased_point(nonuniform, Point::of(3, {0, 1})));
  CHECK(is_unbiased_point(nonuniform, Point::of(3, {1, 2})));
  CHECK_FALSE(is_unbiased_point(nonuniform, Point::of(3, {0, 2})));
}

TEST_CASE("unbiased_points examples and mode agreement") {
  const auto quad = cyclic_structure(4, {{0, 1}, {2, 3}});
  const std::vector<Point> expected{
      Point::of(4, {0, 2}), Point::of(4, {0, 3}), Point::of(4, {1, 2}),
      Point::of(4, {1, 3})};
  CHECK(unbiased_points(quad, PointMode::fast) == expected);
  CHECK(unbiased_points(quad, PointMode::oracle) == expected);

  const auto whole = cyclic_structure(4, {{0, 1, 2, 3}});
  CHECK(unbiased_points(whole, PointMode::fast).size() == 4);

  const auto split = cyclic_structure(2, {{0}, {1}});
  CHECK(unbiased_points(split, PointMode::oracle) ==
        std::vector<Point>{Point::of(2, {0, 1})});
}

TEST_CASE("oracle and fast point modes agree for every cyclic structure, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& part : all_partitions(n)) {
      const auto cs = ClassicalStructure::with_cyclic_groups(part);
      CHECK(classical_points(cs, PointMode::fast) ==
            classical_points(cs, PointMode::oracle));
      CHECK(unbiased_points(cs, PointMode::fast) ==
            unbiased_points(cs, PointMode::oracle));
    }
  }
}

TEST_CASE("points do not depend on the group structures chosen") {
  for (int n = 4; n <= 6; ++n) {
    for (const Partition& part : all_partitions(n)) {
      const bool has_size4_block =
          std::any_of(part.blocks.begin(), part.blocks.end(),
                      [](const auto& b) { return b.size() == 4; });
      if (!has_size4_block) continue;
      const auto cyclic = ClassicalStructure::with_cyclic_groups(part);
      const auto klein = with_klein_on_size4(part);
      CHECK(classical_points(cyclic, PointMode::oracle) ==
            classical_points(klein, PointMode::oracle));
      CHECK(unbiased_points(cyclic, PointMode::oracle) ==
            unbiased_points(klein, PointMode::oracle));
    }
  }
}

TEST_CASE("unbiased cardinality equals the block count") {
  CHECK(unbiased_cardinality_check(cyclic_structure(3, {{0, 2}, {1}})));
  CHECK(unbiased_cardinality_check(
      cyclic_structure(6, {{0, 1}, {2, 3}, {4, 5}})));
  for (const Partition& part : all_partitions(5))
    CHECK(unbiased_cardinality_check(
        ClassicalStructure::with_cyclic_groups(part)));
}

TEST_CASE("lambda maps of unbiased points form a group") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& part : all_partitions(n)) {
      const auto cs = ClassicalStructure::with_cyclic_groups(part);
      const auto points = unbiased_points(cs, PointMode::fast);

      std::uint64_t expected_size = 1;
      for (const auto& block : part.blocks) expected_size *= block.size();
      REQUIRE(points.size() == expected_size);

      std::vector<Rel> maps;
      for (const Point& p : points) maps.push_back(lambda_map(cs, p));

      // p -> lambda(p) is injective.
      for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j)
          CHECK(maps[i] != maps[j]);

      const auto in_set = [&](const Rel& r) {
        return std::find(maps.begin(), maps.end(), r) != maps.end();
      };
      CHECK(in_set(Rel::identity(n)));
      CHECK(lambda_map(cs, identities_point(cs)) == Rel::identity(n));

      for (const Rel& a : maps) {
        bool has_inverse = false;
        for (const Rel& b : maps) {
          CHECK(in_set(compose(a, b)));
          if (compose(a, b) == Rel::identity(n)) has_inverse = true;
        }
        CHECK(has_inverse);
      }
    }
  }
}

TEST_CASE("oracle size caps fail loudly") {
  const auto big = ClassicalStructure::with_cyclic_groups(
      Partition::singletons(13));
  CHECK_THROWS_AS(classical_points(big, PointMode::oracle),
                  std::invalid_argument);
  CHECK_THROWS_AS(unbiased_points(big, PointMode::oracle),
                  std::invalid_argument);

  const auto wide = cyclic_structure(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK_THROWS_WITH_AS(
      unbiased_points(wide, PointMode::fast, limits::oracle_max_n, 8),
      doctest::Contains("9"), std::invalid_argument);
}
