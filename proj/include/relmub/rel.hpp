#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace relmub {

/// A finite binary relation between canonically indexed sets {0..dom-1}
/// and {0..cod-1}, stored as a dense boolean matrix.  Values are immutable
/// in practice: all operations below return fresh relations, so they are
/// safe to share across threads.
///
/// The monoidal unit I is the 1-element set; points I -> X are relations
/// with dom_size() == 1.  Product pairs (x, y) of X (x) Y are indexed as
/// x * |Y| + y throughout, which makes the left/right unitors identities.
class Rel {
 public:
  Rel() = default;
  Rel(int dom_size, int cod_size);

  /// n x n diagonal relation.
  static Rel identity(int n);

  /// Monoidal symmetry A (x) B -> B (x) A on sets of sizes m and n:
  /// relates m*n pair (a, b) to n*m pair (b, a).
  static Rel symmetry(int m, int n);

  static Rel from_pairs(int dom_size, int cod_size,
                        const std::vector<std::pair<int, int>>& pairs);

  int dom_size() const { return dom_; }
  int cod_size() const { return cod_; }

  bool at(int x, int y) const;
  void set(int x, int y, bool related = true);

  /// Related pairs in row-major order.
  std::vector<std::pair<int, int>> pairs() const;
  std::size_t pair_count() const;

  friend bool operator==(const Rel&, const Rel&) = default;

 private:
  int dom_ = 0;
  int cod_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Relational composition in diagrammatic order: compose(R, S) applies R
/// first, so (x, z) is related iff some y has x R y and y S z.
/// Requires first.cod_size() == then.dom_size().
Rel compose(const Rel& first, const Rel& then);

/// Transpose relation; dom/cod swapped.  An involution.
Rel dagger(const Rel& r);

/// Cartesian-product relation: ((x, x'), (y, y')) related iff x A y and
/// x' B y', with pairs indexed as described on Rel.
Rel tensor(const Rel& a, const Rel& b);

/// True iff r ; dagger(r) and dagger(r) ; r are both identities, which in
/// Rel holds exactly when r is a bijective function.
bool is_unitary(const Rel& r);

}  // namespace relmub
