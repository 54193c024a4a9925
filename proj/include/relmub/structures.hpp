#pragma once

#include <vector>

#include "relmub/config.hpp"
#include "relmub/partition.hpp"
#include "relmub/rel.hpp"

namespace relmub {

/// Abelian group structure on one block of a partition.  table[i][j] is
/// the index *within the block* of the product of the i-th and j-th block
/// elements; identity_index locates the group identity in the block.
struct GroupTable {
  std::vector<int> elements;
  std::vector<std::vector<int>> table;
  int identity_index = 0;

  /// Cyclic group Z_m on the given elements: ascending order is 0..m-1,
  /// the least element is the identity.
  static GroupTable cyclic(std::vector<int> elements);

  int size() const { return static_cast<int>(elements.size()); }

  /// Checks the Cayley-table axioms: rows/columns are permutations,
  /// associativity, commutativity, identity row/column, inverses.
  void validate() const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

/// A classical structure on {0..n-1}: a partition together with an abelian
/// group on each block.  The copying and deleting relations are derived by
/// build_delta / build_epsilon.
struct ClassicalStructure {
  Partition partition;
  std::vector<GroupTable> groups;

  static ClassicalStructure with_cyclic_groups(Partition partition);

  int n() const { return partition.n; }

  /// Structural validation only (partition valid, groups aligned with the
  /// blocks, each table a valid abelian group).  The Frobenius equations
  /// themselves are checked by verify_frobenius.
  void validate() const;

  friend bool operator==(const ClassicalStructure&,
                         const ClassicalStructure&) = default;
};

/// A point I -> X, identified with the subset of {0..n-1} it relates the
/// unit element to.  Members are kept ascending.
struct Point {
  int n = 0;
  std::vector<int> members;

  static Point of(int n, std::vector<int> members);
  void validate() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.members < b.members;
  }
};

enum class PointMode { fast, oracle };

/// The point as a 1 x n relation, ready for the Rel calculus.
Rel point_rel(const Point& p);

/// Copying relation delta : X -> X (x) X.  Element x is related to the
/// pair (y, z) iff y and z lie in the same block as x and x is their
/// product in that block's group.
Rel build_delta(const ClassicalStructure& cs);

/// Deleting relation epsilon : X -> I, relating exactly the identity
/// element of each block.
Rel build_epsilon(const ClassicalStructure& cs);

/// Checks the commutative special Frobenius equations for the derived
/// (delta, epsilon) using the Rel calculus: coassociativity, both counit
/// laws, cocommutativity, the Frobenius law and specialness.  Rejects
/// n > max_n with a memory estimate (the check builds n^2 x n^3 matrices).
bool verify_frobenius(const ClassicalStructure& cs,
                      int max_n = limits::frobenius_max_n);

/// delta . p == p (x) p.  Empty points are rejected as degenerate.
bool is_classical_point(const ClassicalStructure& cs, const Point& p);

/// Classical points; fast mode reads the partition blocks, oracle mode
/// scans all nonempty subsets (n <= max_oracle_n).  Results are sorted
/// lexicographically either way.
std::vector<Point> classical_points(const ClassicalStructure& cs,
                                    PointMode mode,
                                    int max_oracle_n = limits::oracle_max_n);

/// The n x n relation induced by a point: x related to y iff some z in the
/// point has x related by delta to (y, z).  This is the transpose of the
/// composite dagger(delta) . (p (x) id) . unitor, and is unitary exactly
/// when that composite is.
Rel lambda_map(const ClassicalStructure& cs, const Point& p);

/// Unbiasedness: lambda_map(cs, p) is unitary.
bool is_unbiased_point(const ClassicalStructure& cs, const Point& p);

/// Unbiased points; fast mode enumerates the transversals of the partition
/// (one element per block; count capped), oracle mode scans all nonempty
/// subsets.  Results are sorted lexicographically either way.
std::vector<Point> unbiased_points(
    const ClassicalStructure& cs, PointMode mode,
    int max_oracle_n = limits::oracle_max_n,
    std::uint64_t enum_cap = limits::transversal_enum_cap);

/// All unbiased points share one cardinality, the number of blocks.  Kept
/// as a regression tripwire; recomputed honestly from the fast-mode list.
bool unbiased_cardinality_check(const ClassicalStructure& cs);

}  // namespace relmub
