#pragma once

#include <string>
#include <vector>

#include "relmub/partition.hpp"
#include "relmub/structures.hpp"

namespace relmub {

/// A uniform partition laid out as a grid: row i holds block i.  The
/// canonical arrangement (from_partition) orders blocks by least element
/// and lists each row ascending; other valid arrangements (e.g. the
/// intersection table built by the MOLS conversion) only promise that each
/// row equals its block as a set.
struct GridArrangement {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> cells;

  /// Canonical arrangement of a uniform partition; rejects non-uniform input.
  static GridArrangement from_partition(const Partition& p);

  void validate() const;
  Partition row_partition() const;

  friend bool operator==(const GridArrangement&,
                         const GridArrangement&) = default;
};

/// An ordered family of partitions of {0..n-1}, intended to be pairwise
/// complementary (verify_mccs decides whether it actually is).
struct MccsFamily {
  int n = 0;
  std::vector<Partition> partitions;

  int size() const { return static_cast<int>(partitions.size()); }
  void validate() const;

  friend bool operator==(const MccsFamily&, const MccsFamily&) = default;
};

struct MccsReport {
  bool ok = true;
  // First failing pair, when !ok.
  int first = -1;
  int second = -1;
  std::string reason;
};

/// All blocks the same size.
bool is_uniform(const Partition& p);

/// Uniform with block count equal to block size (ground set of size d^2).
bool is_square(const Partition& p);

/// Every block of a meets every block of b in exactly one element.
/// Requires the same ground set.
bool are_complementary(const Partition& a, const Partition& b);

/// Partition formed by the columns of the grid; always complementary to
/// the row partition.
Partition transpose_partition(const GridArrangement& g);

enum class CheckMode { fast, oracle };

/// Complementarity of classical structures.  Fast mode decides on the
/// partitions; oracle mode checks the point-level definition (every
/// classical point of one is unbiased for the other, both ways) through
/// the oracle-mode point scans.
bool are_complementary_structures(const ClassicalStructure& a,
                                  const ClassicalStructure& b, CheckMode mode);

/// True iff the partition is uniform; a witness is then available from
/// complement_witness.
bool has_complement(const ClassicalStructure& cs);

/// Transpose-partition structure with default cyclic groups.  Rejects
/// structures with non-uniform partitions.
ClassicalStructure complement_witness(const ClassicalStructure& cs);

/// Checks every pair; reports the first failing pair on failure.
MccsReport verify_mccs(const MccsFamily& family);

}  // namespace relmub
