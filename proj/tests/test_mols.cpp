#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include "relmub/mols.hpp"
#include "test_support.hpp"

using namespace relmub;
using namespace relmub::testing;

namespace {

const std::vector<std::vector<int>> kCyclic3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
const std::vector<std::vector<int>> kSecond3{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};

MccsFamily family9() {
  MccsFamily f;
  f.n = 9;
  f.partitions = {
      Partition::from_blocks(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
      Partition::from_blocks(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}),
      Partition::from_blocks(9, {{0, 5, 7}, {1, 3, 8}, {2, 4, 6}}),
      Partition::from_blocks(9, {{0, 4, 8}, {1, 5, 6}, {2, 3, 7}})};
  return f;
}

MccsFamily family4() {
  MccsFamily f;
  f.n = 4;
  f.partitions = {Partition::from_blocks(4, {{0, 1}, {2, 3}}),
                  Partition::from_blocks(4, {{0, 2}, {1, 3}}),
                  Partition::from_blocks(4, {{0, 3}, {1, 2}})};
  return f;
}

std::vector<int> random_perm(std::mt19937& rng, int d) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("is_latin examples") {
  CHECK(is_latin(kCyclic3));
  CHECK(is_latin({{0, 1}, {1, 0}}));
  CHECK_FALSE(is_latin({{0, 1}, {0, 1}}));
  CHECK_THROWS_AS(is_latin({{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(is_latin({{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("are_orthogonal examples") {
  const auto a = LatinSquare::from_grid(kCyclic3);
  const auto b = LatinSquare::from_grid(kSecond3);
  CHECK(are_orthogonal(a, b));
  CHECK_FALSE(are_orthogonal(a, a));

  // Exhaust the order-2 case: no orthogonal pair exists.
  const auto twos = all_latin_squares(2);
  REQUIRE(twos.size() == 2);
  for (const auto& x : twos)
    for (const auto& y : twos) CHECK_FALSE(are_orthogonal(x, y));

  CHECK_THROWS_AS(are_orthogonal(a, LatinSquare::from_grid({{0, 1}, {1, 0}})),
                  std::invalid_argument);
}

TEST_CASE("field_ops on the smallest fields") {
  const FieldTables f2 = field_ops(FieldSpec::for_order(2));
  CHECK(f2.add == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(f2.mul == std::vector<std::vector<int>>{{0, 0}, {0, 1}});

  const FieldTables f3 = field_ops(FieldSpec::for_order(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(f3.add[a][b] == (a + b) % 3);
      CHECK(f3.mul[a][b] == (a * b) % 3);
    }

  // GF(4) with modulus x^2 + x + 1: x * x = x + 1, i.e. 2 * 2 = 3.
  const FieldTables f4 = field_ops(FieldSpec::for_order(4));
  CHECK(f4.mul[2][2] == 3);
  CHECK(f4.add[2][3] == 1);  // addition is coefficient-wise xor
}

TEST_CASE("field axioms hold exhaustively through order 16") {
  for (const int d : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const FieldTables f = field_ops(FieldSpec::for_order(d));
    for (int a = 0; a < d; ++a) {
      CHECK(f.add[0][a] == a);
      CHECK(f.mul[1][a] == a);
      CHECK(f.mul[0][a] == 0);
      bool add_inverse = false, mul_inverse = (a == 0);
      for (int b = 0; b < d; ++b) {
        if (f.add[a][b] == 0) add_inverse = true;
        if (a != 0 && f.mul[a][b] == 1) mul_inverse = true;
        CHECK(f.add[a][b] == f.add[b][a]);
        CHECK(f.mul[a][b] == f.mul[b][a]);
        for (int c = 0; c < d; ++c) {
          CHECK(f.add[f.add[a][b]][c] == f.add[a][f.add[b][c]]);
          CHECK(f.mul[f.mul[a][b]][c] == f.mul[a][f.mul[b][c]]);
          CHECK(f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]);
        }
      }
      CHECK(add_inverse);
      CHECK(mul_inverse);
    }
  }
}

TEST_CASE("field spec rejections") {
  CHECK_THROWS_AS(FieldSpec::for_order(6), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::for_order(12), std::invalid_argument);

  FieldSpec composite;
  composite.p = 4;
  composite.k = 1;
  CHECK_THROWS_AS(composite.validate(), std::invalid_argument);

  FieldSpec reducible;
  reducible.p = 2;
  reducible.k = 2;
  reducible.modulus = {1, 0};  // x^2 + 1 = (x + 1)^2 over Z_2
  CHECK_THROWS_AS(reducible.validate(), std::invalid_argument);
}

TEST_CASE("gf_mols counts and orthogonality") {
  CHECK(gf_mols(2) ==
        std::vector<LatinSquare>{LatinSquare::from_grid({{0, 1}, {1, 0}})});
  for (const int d : {2, 3, 4, 5, 7, 8, 9}) {
    const auto squares = gf_mols(d);
    CHECK(static_cast<int>(squares.size()) == d - 1);
    for (const auto& sq : squares) CHECK(is_latin(sq.grid));
    for (std::size_t i = 0; i < squares.size(); ++i)
      for (std::size_t j = i + 1; j < squares.size(); ++j)
        CHECK(are_orthogonal(squares[i], squares[j]));
  }
  CHECK_THROWS_AS(gf_mols(6), std::invalid_argument);
  CHECK_THROWS_AS(gf_mols(17), std::invalid_argument);
}

TEST_CASE("gf_mols(3) matches the worked pair up to relabeling") {
  const auto squares = gf_mols(3);
  const auto canon = [](const LatinSquare& sq) { return canonicalize(sq); };
  std::vector<LatinSquare> ours{canon(squares[0]), canon(squares[1])};
  std::vector<LatinSquare> paper{canon(LatinSquare::from_grid(kCyclic3)),
                                 canon(LatinSquare::from_grid(kSecond3))};
  std::sort(ours.begin(), ours.end());
  std::sort(paper.begin(), paper.end());
  CHECK(ours == paper);
}

TEST_CASE("canonicalize") {
  const auto reduced = LatinSquare::from_grid(kCyclic3);
  CHECK(canonicalize(reduced) == reduced);
  CHECK(canonicalize(canonicalize(reduced)) == canonicalize(reduced));

  const auto second = canonicalize(LatinSquare::from_grid(kSecond3));
  CHECK(second.grid[0] == std::vector<int>{0, 1, 2});
  for (int r = 0; r < 3; ++r) CHECK(second.grid[r][0] == r);

  // Symbol relabelings alone never change the canonical form.
  std::mt19937 rng(21);
  for (const int d : {3, 4, 5}) {
    const auto base = gf_mols(d)[d - 2];
    const std::vector<int> id = [&] {
      std::vector<int> v(d);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }();
    for (int trial = 0; trial < 20; ++trial) {
      const auto relabeled = relabel_square(base, id, id, random_perm(rng, d));
      CHECK(canonicalize(relabeled) == canonicalize(base));
      CHECK(canonicalize(canonicalize(relabeled)) == canonicalize(relabeled));
    }
  }
}

TEST_CASE("mccs_to_mols on the worked families") {
  const MolsConversion nine = mccs_to_mols(family9());
  CHECK(nine.table.cells == natural_table(3).cells);
  REQUIRE(nine.squares.size() == 2);
  CHECK(nine.squares[0].grid == kCyclic3);
  // Canonical block order relabels the second square's symbols.
  CHECK(nine.squares[1].grid ==
        std::vector<std::vector<int>>{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
  CHECK(are_orthogonal(nine.squares[0], nine.squares[1]));

  const MolsConversion four = mccs_to_mols(family4());
  REQUIRE(four.squares.size() == 1);
  CHECK(four.squares[0].grid == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  MccsFamily two_members = family9();
  two_members.partitions.resize(2);
  const MolsConversion table_only = mccs_to_mols(two_members);
  CHECK(table_only.squares.empty());
  CHECK(table_only.table.cells == natural_table(3).cells);
}

TEST_CASE("mccs_to_mols rejections") {
  // Non-square partitions.
  MccsFamily rect;
  rect.n = 6;
  rect.partitions = {
      Partition::from_blocks(6, {{0, 1, 2}, {3, 4, 5}}),
      Partition::from_blocks(6, {{0, 3}, {1, 4}, {2, 5}}),
  };
  CHECK_THROWS_WITH_AS(mccs_to_mols(rect), doctest::Contains("not square"),
                       std::invalid_argument);

  // Non-complementary family.
  MccsFamily broken = family4();
  broken.partitions[2] = broken.partitions[0];
  CHECK_THROWS_WITH_AS(mccs_to_mols(broken),
                       doctest::Contains("not complementary"),
                       std::invalid_argument);

  MccsFamily single;
  single.n = 4;
  single.partitions = {family4().partitions[0]};
  CHECK_THROWS_AS(mccs_to_mols(single), std::invalid_argument);
}

TEST_CASE("mols_to_mccs on the worked examples") {
  const std::vector<LatinSquare> pair{LatinSquare::from_grid(kCyclic3),
                                      LatinSquare::from_grid(kSecond3)};
  CHECK(mols_to_mccs(pair, 3) == family9());

  const MccsFamily base2 = mols_to_mccs({}, 2);
  CHECK(base2.partitions ==
        std::vector<Partition>{Partition::from_blocks(4, {{0, 1}, {2, 3}}),
                               Partition::from_blocks(4, {{0, 2}, {1, 3}})});

  const MccsFamily full2 =
      mols_to_mccs({LatinSquare::from_grid({{0, 1}, {1, 0}})}, 2);
  CHECK(full2 == family4());
}

TEST_CASE("mols_to_mccs rejects non-orthogonal input naming the pair") {
  const auto a = LatinSquare::from_grid(kCyclic3);
  CHECK_THROWS_WITH_AS(mols_to_mccs({a, a}, 3),
                       doctest::Contains("0 and 1"), std::invalid_argument);
  CHECK_THROWS_AS(mols_to_mccs({a}, 2), std::invalid_argument);
}

TEST_CASE("round trip between families and MOLS") {
  // Families born from squares convert back exactly.
  for (const int d : {2, 3, 4}) {
    const auto squares = gf_mols(d);
    const MccsFamily f = mols_to_mccs(squares, d);
    const MolsConversion conv = mccs_to_mols(f);
    CHECK(conv.table.cells == natural_table(d).cells);
    CHECK(mols_to_mccs(conv.squares, d) == f);
  }

  // A relabeled family comes back as the relabeling its own table induces.
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sigma = random_perm(rng, 9);
    MccsFamily shuffled;
    shuffled.n = 9;
    for (const Partition& p : family9().partitions) {
      std::vector<std::vector<int>> blocks;
      for (const auto& block : p.blocks) {
        std::vector<int> b;
        for (int x : block) b.push_back(sigma[x]);
        blocks.push_back(std::move(b));
      }
      shuffled.partitions.push_back(Partition::from_blocks(9, blocks));
    }
    REQUIRE(verify_mccs(shuffled).ok);

    const MolsConversion conv = mccs_to_mols(shuffled);
    std::vector<int> relabel(9, -1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) relabel[conv.table.cells[i][j]] = i * 3 + j;

    MccsFamily expected;
    expected.n = 9;
    for (const Partition& p : shuffled.partitions) {
      std::vector<std::vector<int>> blocks;
      for (const auto& block : p.blocks) {
        std::vector<int> b;
        for (int x : block) b.push_back(relabel[x]);
        blocks.push_back(std::move(b));
      }
      expected.partitions.push_back(Partition::from_blocks(9, blocks));
    }
    CHECK(mols_to_mccs(conv.squares, 3) == expected);
  }
}

TEST_CASE("orthogonality of induced squares matches complementarity") {
  for (const int d : {3, 4}) {
    const GridArrangement table = natural_table(d);
    const Partition rows = table.row_partition();
    const Partition cols = transpose_partition(table);

    std::vector<Partition> candidates;
    for (const Partition& p : complementary_partitions(rows))
      if (are_complementary(p, cols)) candidates.push_back(p);
    CHECK(candidates.size() == (d == 3 ? 2 : 24));

    for (const Partition& sigma : candidates)
      for (const Partition& tau : candidates) {
        const LatinSquare ls = square_from_partition(table, sigma);
        const LatinSquare lt = square_from_partition(table, tau);
        CHECK(are_orthogonal(ls, lt) == are_complementary(sigma, tau));
      }
  }
}
