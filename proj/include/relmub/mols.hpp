#pragma once

#include <vector>

#include "relmub/complementarity.hpp"
#include "relmub/config.hpp"

namespace relmub {

/// A d x d Latin square over symbols {0..d-1}: every row and column holds
/// each symbol exactly once.
struct LatinSquare {
  int d = 0;
  std::vector<std::vector<int>> grid;

  /// Validates the Latin property (throws on malformed or non-Latin grids).
  static LatinSquare from_grid(std::vector<std::vector<int>> grid);

  int at(int r, int c) const { return grid[r][c]; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
  friend bool operator<(const LatinSquare& a, const LatinSquare& b) {
    return a.grid < b.grid;
  }
};

/// Latin property of a raw grid.  Throws if the grid is not d x d or holds
/// a symbol outside {0..d-1}; returns false on row/column repeats.
bool is_latin(const std::vector<std::vector<int>>& grid);

/// Orthogonality: superimposing yields all d^2 ordered symbol pairs.
/// Requires equal orders.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// GF(p^k) described by a prime p, exponent k and, for k >= 2, the k lower
/// coefficients c_0..c_{k-1} (constant term first) of a monic irreducible
/// modulus x^k + c_{k-1} x^{k-1} + ... + c_0 over Z_p.
struct FieldSpec {
  int p = 0;
  int k = 1;
  std::vector<int> modulus;

  /// Spec for the field of the given prime-power order, with a baked-in
  /// default modulus (exhaustive search fallback for orders without one).
  static FieldSpec for_order(int d);

  int order() const;

  /// Rejects composite p, bad exponents and reducible moduli.  The
  /// irreducibility check is exhaustive trial division, fine at the small
  /// degrees in scope.
  void validate() const;
};

/// Addition and multiplication tables of GF(p^k).  Elements are encoded as
/// radix-p integers of their polynomial coefficients.
struct FieldTables {
  int d = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
};

FieldTables field_ops(const FieldSpec& spec);

/// The classical family of d-1 pairwise orthogonal squares of prime-power
/// order d: L_a(i, j) = a*i + j in GF(d) for each nonzero a.  Output is
/// re-verified internally.
std::vector<LatinSquare> gf_mols(int d, int order_cap = limits::gf_order_cap);

/// Same construction over an explicitly specified field.
std::vector<LatinSquare> gf_mols(const FieldSpec& spec,
                                 int order_cap = limits::gf_order_cap);

/// Reduced form: relabel symbols so row 0 reads 0..d-1, then sort rows so
/// column 0 reads 0..d-1.  Idempotent, and invariant under symbol
/// relabeling of the input.
LatinSquare canonicalize(const LatinSquare& sq);

struct MolsConversion {
  GridArrangement table;
  std::vector<LatinSquare> squares;
};

/// From a mutually complementary family of square partitions, the
/// intersection table of the first two members and one Latin square per
/// remaining member (symbols follow canonical block order).  Requires a
/// verified family of at least two square partitions; the returned squares
/// are pairwise orthogonal.
MolsConversion mccs_to_mols(const MccsFamily& family);

/// From pairwise orthogonal squares of order d (none is fine), the family
/// of k+2 mutually complementary partitions of {0..d^2-1}: rows, columns
/// (element j*d+c sits in cell (j, c)), then one symbol-class partition per
/// square.
MccsFamily mols_to_mccs(const std::vector<LatinSquare>& squares, int d);

}  // namespace relmub
