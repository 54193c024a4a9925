#pragma once

#include <vector>

namespace relmub {

/// A partition of {0..n-1} into disjoint nonempty blocks covering the
/// whole set.  Canonical form: blocks sorted by least element, elements
/// ascending within each block.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static Partition singletons(int n);
  static Partition single_block(int n);

  /// Canonicalizes (sorts elements and block order) and validates.
  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);

  /// Throws std::invalid_argument unless the blocks are disjoint, cover
  /// {0..n-1} exactly and are stored in canonical form.
  void validate() const;

  int block_count() const { return static_cast<int>(blocks.size()); }

  /// element -> index of the block containing it.
  std::vector<int> block_of_element() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.blocks < b.blocks;
  }
};

/// Every partition of {0..n-1} in canonical form, generated via restricted
/// growth strings (so the output order is deterministic).
std::vector<Partition> all_partitions(int n);

}  // namespace relmub
