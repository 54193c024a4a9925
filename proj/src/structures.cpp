#include "relmub/structures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relmub {

GroupTable GroupTable::cyclic(std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  const int m = static_cast<int>(elements.size());
  GroupTable g;
  g.elements = std::move(elements);
  g.table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.table[i][j] = (i + j) % m;
  g.identity_index = 0;
  return g;
}

void GroupTable::validate() const {
  const int m = size();
  if (m == 0) throw std::invalid_argument("GroupTable: empty element list");
  for (int i = 1; i < m; ++i)
    if (elements[i] <= elements[i - 1])
      throw std::invalid_argument("GroupTable: elements not strictly ascending");
  if (static_cast<int>(table.size()) != m)
    throw std::invalid_argument("GroupTable: table is not square");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("GroupTable: table is not square");
    for (int v : row)
      if (v < 0 || v >= m)
        throw std::invalid_argument("GroupTable: table entry out of range");
  }
  // Latin property of Cayley tables.
  for (int i = 0; i < m; ++i) {
    std::vector<char> row_seen(m, 0), col_seen(m, 0);
    for (int j = 0; j < m; ++j) {
      if (row_seen[table[i][j]]++)
        throw std::invalid_argument("GroupTable: repeated entry in a row");
      if (col_seen[table[j][i]]++)
        throw std::invalid_argument("GroupTable: repeated entry in a column");
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (table[i][j] != table[j][i])
        throw std::invalid_argument("GroupTable: operation is not commutative");
      for (int k = 0; k < m; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw std::invalid_argument("GroupTable: operation is not associative");
    }
  if (identity_index < 0 || identity_index >= m)
    throw std::invalid_argument("GroupTable: identity index out of range");
  for (int i = 0; i < m; ++i)
    if (table[identity_index][i] != i)
      throw std::invalid_argument("GroupTable: designated identity is not an identity");
  for (int i = 0; i < m; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < m; ++j)
      if (table[i][j] == identity_index) has_inverse = true;
    if (!has_inverse)
      throw std::invalid_argument("GroupTable: element without inverse");
  }
}

ClassicalStructure ClassicalStructure::with_cyclic_groups(Partition partition) {
  partition.validate();
  ClassicalStructure cs;
  for (const auto& block : partition.blocks)
    cs.groups.push_back(GroupTable::cyclic(block));
  cs.partition = std::move(partition);
  return cs;
}

void ClassicalStructure::validate() const {
  partition.validate();
  if (groups.size() != partition.blocks.size())
    throw std::invalid_argument(
        "ClassicalStructure: one group table per block required");
  for (std::size_t b = 0; b < groups.size(); ++b) {
    groups[b].validate();
    if (groups[b].elements != partition.blocks[b]) {
      std::ostringstream msg;
      msg << "ClassicalStructure: group " << b
          << " does not live on block " << b;
      throw std::invalid_argument(msg.str());
    }
  }
}

Point Point::of(int n, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  Point p{n, std::move(members)};
  p.validate();
  return p;
}

void Point::validate() const {
  if (n < 0) throw std::invalid_argument("Point: negative ambient size");
  int previous = -1;
  for (int x : members) {
    if (x < 0 || x >= n)
      throw std::invalid_argument("Point: member outside the ambient set");
    if (x <= previous)
      throw std::invalid_argument("Point: members not strictly ascending");
    previous = x;
  }
}

Rel point_rel(const Point& p) {
  Rel r(1, p.n);
  for (int x : p.members) r.set(0, x);
  return r;
}

Rel build_delta(const ClassicalStructure& cs) {
  const int n = cs.n();
  Rel delta(n, n * n);
  for (std::size_t b = 0; b < cs.groups.size(); ++b) {
    const GroupTable& g = cs.groups[b];
    const auto& e = g.elements;
    const int m = g.size();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        delta.set(e[g.table[i][j]], e[i] * n + e[j]);
  }
  return delta;
}

Rel build_epsilon(const ClassicalStructure& cs) {
  const int n = cs.n();
  Rel eps(n, 1);
  for (const GroupTable& g : cs.groups) eps.set(g.elements[g.identity_index], 0);
  return eps;
}

bool verify_frobenius(const ClassicalStructure& cs, int max_n) {
  const int n = cs.n();
  if (n > max_n) {
    const double cells = std::pow(static_cast<double>(n), 5);
    std::ostringstream msg;
    msg << "verify_frobenius: n = " << n << " exceeds the limit " << max_n
        << "; the coassociativity check alone needs an n^2 x n^3 matrix ("
        << cells << " cells, ~" << cells / (1024.0 * 1024.0) << " MiB)";
    throw std::invalid_argument(msg.str());
  }
  const Rel delta = build_delta(cs);
  const Rel eps = build_epsilon(cs);
  const Rel id = Rel::identity(n);

  // I (x) X and X (x) I share X's index set, so the counit laws compare
  // against the identity directly.
  if (compose(delta, tensor(delta, id)) != compose(delta, tensor(id, delta)))
    return false;
  if (compose(delta, tensor(eps, id)) != id) return false;
  if (compose(delta, tensor(id, eps)) != id) return false;
  if (compose(delta, Rel::symmetry(n, n)) != delta) return false;
  if (compose(tensor(delta, id), tensor(id, dagger(delta))) !=
      compose(dagger(delta), delta))
    return false;
  if (compose(delta, dagger(delta)) != id) return false;
  return true;
}

bool is_classical_point(const ClassicalStructure& cs, const Point& p) {
  if (p.n != cs.n())
    throw std::invalid_argument("is_classical_point: ambient size mismatch");
  if (p.members.empty())
    throw std::invalid_argument(
        "is_classical_point: the empty point is rejected as degenerate");
  const Rel pr = point_rel(p);
  return compose(pr, build_delta(cs)) == tensor(pr, pr);
}

namespace {

void check_oracle_cap(int n, int max_oracle_n, const char* who) {
  if (n > max_oracle_n) {
    std::ostringstream msg;
    msg << who << ": oracle mode scans 2^" << n
        << " - 1 subsets, over the limit n <= " << max_oracle_n;
    throw std::invalid_argument(msg.str());
  }
}

std::vector<Point> subset_scan(const ClassicalStructure& cs,
                               bool (*pred)(const ClassicalStructure&,
                                            const Point&)) {
  const int n = cs.n();
  std::vector<Point> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    Point p;
    p.n = n;
    for (int x = 0; x < n; ++x)
      if (mask & (1ull << x)) p.members.push_back(x);
    if (pred(cs, p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Point> classical_points(const ClassicalStructure& cs,
                                    PointMode mode, int max_oracle_n) {
  if (mode == PointMode::oracle) {
    check_oracle_cap(cs.n(), max_oracle_n, "classical_points");
    return subset_scan(cs, &is_classical_point);
  }
  std::vector<Point> out;
  for (const auto& block : cs.partition.blocks)
    out.push_back(Point{cs.n(), block});
  std::sort(out.begin(), out.end());
  return out;
}

Rel lambda_map(const ClassicalStructure& cs, const Point& p) {
  if (p.n != cs.n())
    throw std::invalid_argument("lambda_map: ambient size mismatch");
  const int n = cs.n();
  const auto owner = cs.partition.block_of_element();
  // Index of each element within its block.
  std::vector<int> slot(n, -1);
  for (const auto& block : cs.partition.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      slot[block[i]] = static_cast<int>(i);

  Rel lambda(n, n);
  for (int y = 0; y < n; ++y) {
    const int b = owner[y];
    const GroupTable& g = cs.groups[b];
    for (int z : p.members) {
      if (owner[z] != b) continue;
      const int x = g.elements[g.table[slot[y]][slot[z]]];
      lambda.set(x, y);
    }
  }
  return lambda;
}

bool is_unbiased_point(const ClassicalStructure& cs, const Point& p) {
  return is_unitary(lambda_map(cs, p));
}

std::vector<Point> unbiased_points(const ClassicalStructure& cs,
                                   PointMode mode, int max_oracle_n,
                                   std::uint64_t enum_cap) {
  const int n = cs.n();
  if (mode == PointMode::oracle) {
    check_oracle_cap(n, max_oracle_n, "unbiased_points");
    return subset_scan(cs, &is_unbiased_point);
  }
  long double count = 1;
  for (const auto& block : cs.partition.blocks) count *= block.size();
  if (count > static_cast<long double>(enum_cap)) {
    std::ostringstream msg;
    msg << "unbiased_points: transversal enumeration would produce " << count
        << " points, over the cap " << enum_cap;
    throw std::invalid_argument(msg.str());
  }
  std::vector<Point> out;
  if (n == 0) return out;
  std::vector<std::size_t> choice(cs.partition.blocks.size(), 0);
  while (true) {
    Point p;
    p.n = n;
    for (std::size_t b = 0; b < choice.size(); ++b)
      p.members.push_back(cs.partition.blocks[b][choice[b]]);
    std::sort(p.members.begin(), p.members.end());
    out.push_back(std::move(p));
    std::size_t b = choice.size();
    while (b > 0) {
      --b;
      if (++choice[b] < cs.partition.blocks[b].size()) break;
      choice[b] = 0;
      if (b == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

bool unbiased_cardinality_check(const ClassicalStructure& cs) {
  const auto points = unbiased_points(cs, PointMode::fast);
  const std::size_t expected = cs.partition.blocks.size();
  for (const Point& p : points)
    if (p.members.size() != expected) return false;
  return true;
}

}  // namespace relmub
