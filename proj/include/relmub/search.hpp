#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relmub/complementarity.hpp"
#include "relmub/config.hpp"
#include "relmub/mols.hpp"

namespace relmub {

/// d cells of a Latin square, one per row (cols[row] is the column), one
/// per column, all hit symbols distinct.  A square has an orthogonal mate
/// iff its cells decompose into d disjoint transversals.
struct Transversal {
  int d = 0;
  std::vector<int> cols;
  std::vector<int> symbols;

  void validate() const;

  /// Cells as a d*d-bit mask (row-major); fits 64 bits for d <= 7.
  std::uint64_t cell_mask() const;

  friend bool operator==(const Transversal&, const Transversal&) = default;
};

struct SearchStats {
  std::uint64_t enumerated = 0;   // squares enumerated
  std::uint64_t nodes = 0;        // solver nodes
  std::uint64_t transversals = 0; // transversals found
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Outcome of a search, carrying the witnesses needed to re-verify it.
/// Witness payloads always re-check through the mols/complementarity
/// modules before a certificate is returned.
struct SearchCertificate {
  enum class Kind { mate_found, no_mate, max_count };

  Kind kind = Kind::max_count;
  /// Square order; set size when order_is_set_size (MCCS certificates).
  int order = 0;
  bool order_is_set_size = false;
  bool degenerate = false;  // n = 1 MCCS report
  std::uint64_t count = 0;
  std::vector<LatinSquare> witness_squares;
  std::vector<Partition> witness_partitions;
  SearchStats stats;
};

/// Streams every reduced square (first row and first column in natural
/// order) of order d exactly once, in lexicographic order of the row-major
/// grid.  d <= order_cap.
void for_each_reduced(int d, const std::function<void(const LatinSquare&)>& fn,
                      int order_cap = limits::square_order_cap);

/// Number of reduced squares of order d (1, 1, 1, 4, 56, 9408 for d = 1..6).
std::uint64_t count_reduced(int d, int order_cap = limits::square_order_cap);

/// Materialized variant; sensible for d <= 6.
std::vector<LatinSquare> reduced_squares(int d,
                                         int order_cap = limits::square_order_cap);

/// All transversals, in lexicographic order of the column vector.
std::vector<Transversal> transversals(const LatinSquare& sq);

/// Orthogonal-mate decision by exact cover of the cells with d disjoint
/// transversals.  Branches on the most-constrained uncovered cell (lowest
/// index on ties).  Returns a mate-found certificate whose witness is
/// orthogonal to the input, or an exhaustively proven no-mate certificate.
SearchCertificate find_orthogonal_mate(const LatinSquare& sq,
                                       int order_cap = limits::square_order_cap);

/// Classical upper bound on pairwise orthogonal squares of order d >= 2.
int mols_order_upper_bound(int d);

/// Maximum number of pairwise orthogonal squares of order d (2 <= d <= 7),
/// with witnesses.  Prime powers attain the classical bound through the
/// finite-field family; d = 6 is settled by sweeping all 9408 reduced
/// squares through the mate search.
SearchCertificate max_mols(int d);

/// Maximum size of a mutually complementary family on n elements
/// (n <= 49), through the MOLS reduction: max_mols(sqrt(n)) + 2 for
/// perfect squares >= 4, 2 for other n >= 2, degenerate at n = 1.
SearchCertificate max_mccs(int n);

/// Independent maximum-family search over all partitions of {0..n-1}
/// (n <= 9): complementary pairs are scanned directly, and families of
/// three or more are sought only among square partitions, which the
/// cardinality obstruction shows is exhaustive.
SearchCertificate direct_max_mccs(int n);

}  // namespace relmub
