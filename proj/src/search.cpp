#include "relmub/search.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace relmub {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

void check_order_cap(int d, int order_cap, const char* who) {
  if (d < 1 || d > order_cap) {
    std::ostringstream msg;
    msg << who << ": order " << d << " outside the supported range 1.."
        << order_cap;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

void Transversal::validate() const {
  if (static_cast<int>(cols.size()) != d ||
      static_cast<int>(symbols.size()) != d)
    throw std::invalid_argument("Transversal: wrong number of rows");
  std::vector<char> col_seen(d, 0), sym_seen(d, 0);
  for (int r = 0; r < d; ++r) {
    if (cols[r] < 0 || cols[r] >= d || col_seen[cols[r]]++)
      throw std::invalid_argument("Transversal: columns are not a permutation");
    if (symbols[r] < 0 || symbols[r] >= d || sym_seen[symbols[r]]++)
      throw std::invalid_argument("Transversal: repeated symbol");
  }
}

std::uint64_t Transversal::cell_mask() const {
  std::uint64_t mask = 0;
  for (int r = 0; r < d; ++r) mask |= 1ull << (r * d + cols[r]);
  return mask;
}

namespace {

// Cell-by-cell backtracker over reduced squares; row 0 and column 0 are
// forced, remaining cells are filled row-major with ascending symbols, so
// emission order is lexicographic in the row-major grid.
struct ReducedEnumerator {
  int d;
  std::uint32_t full;
  std::vector<std::uint32_t> row_used, col_used;
  std::vector<std::vector<int>> grid;
  const std::function<void(const std::vector<std::vector<int>>&)>& emit;

  ReducedEnumerator(
      int d, const std::function<void(const std::vector<std::vector<int>>&)>& emit)
      : d(d),
        full((d == 32 ? ~0u : (1u << d) - 1)),
        row_used(d, 0),
        col_used(d, 0),
        grid(d, std::vector<int>(d, -1)),
        emit(emit) {
    for (int c = 0; c < d; ++c) {
      grid[0][c] = c;
      col_used[c] = 1u << c;
    }
    row_used[0] = full;
  }

  void fill(int r, int c) {
    if (r == d) {
      emit(grid);
      return;
    }
    const int next_r = (c + 1 == d) ? r + 1 : r;
    const int next_c = (c + 1 == d) ? 0 : c + 1;
    std::uint32_t avail = ~(row_used[r] | col_used[c]) & full;
    if (c == 0) avail &= 1u << r;  // reduced: first column in natural order
    while (avail) {
      const std::uint32_t bit = avail & (~avail + 1);
      avail ^= bit;
      const int s = __builtin_ctz(bit);
      grid[r][c] = s;
      row_used[r] |= bit;
      col_used[c] |= bit;
      fill(next_r, next_c);
      row_used[r] ^= bit;
      col_used[c] ^= bit;
    }
    grid[r][c] = -1;
  }
};

}  // namespace

void for_each_reduced(int d, const std::function<void(const LatinSquare&)>& fn,
                      int order_cap) {
  check_order_cap(d, order_cap, "for_each_reduced");
  const std::function<void(const std::vector<std::vector<int>>&)> emit =
      [&](const std::vector<std::vector<int>>& grid) {
        fn(LatinSquare::from_grid(grid));
      };
  ReducedEnumerator e(d, emit);
  e.fill(1, 0);
}

std::uint64_t count_reduced(int d, int order_cap) {
  check_order_cap(d, order_cap, "count_reduced");
  std::uint64_t count = 0;
  const std::function<void(const std::vector<std::vector<int>>&)> emit =
      [&](const std::vector<std::vector<int>>&) { ++count; };
  ReducedEnumerator e(d, emit);
  e.fill(1, 0);
  return count;
}

std::vector<LatinSquare> reduced_squares(int d, int order_cap) {
  std::vector<LatinSquare> out;
  for_each_reduced(
      d, [&](const LatinSquare& sq) { out.push_back(sq); }, order_cap);
  return out;
}

std::vector<Transversal> transversals(const LatinSquare& sq) {
  const int d = sq.d;
  std::vector<Transversal> out;
  std::vector<int> cols(d), symbols(d);
  std::uint32_t col_mask = 0, sym_mask = 0;

  const std::function<void(int)> extend = [&](int r) {
    if (r == d) {
      Transversal t{d, cols, symbols};
      t.validate();
      out.push_back(std::move(t));
      return;
    }
    for (int c = 0; c < d; ++c) {
      const std::uint32_t cbit = 1u << c;
      if (col_mask & cbit) continue;
      const int s = sq.at(r, c);
      const std::uint32_t sbit = 1u << s;
      if (sym_mask & sbit) continue;
      cols[r] = c;
      symbols[r] = s;
      col_mask |= cbit;
      sym_mask |= sbit;
      extend(r + 1);
      col_mask ^= cbit;
      sym_mask ^= sbit;
    }
  };
  extend(0);
  return out;
}

namespace {

// Exact cover of the d^2 cells by d disjoint transversals, bitmask-based.
struct MateSolver {
  int d;
  int cell_count;
  std::uint64_t full;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<int>> at_cell;  // cell -> transversal indices
  std::uint64_t nodes = 0;

  explicit MateSolver(int d, const std::vector<Transversal>& trans)
      : d(d), cell_count(d * d), full(cell_count == 64 ? ~0ull
                                                       : (1ull << cell_count) - 1),
        at_cell(cell_count) {
    masks.reserve(trans.size());
    for (std::size_t t = 0; t < trans.size(); ++t) {
      masks.push_back(trans[t].cell_mask());
      for (int r = 0; r < d; ++r)
        at_cell[r * d + trans[t].cols[r]].push_back(static_cast<int>(t));
    }
  }

  bool solve(std::uint64_t used, std::vector<int>& chosen) {
    ++nodes;
    if (used == full) return true;
    // Most-constrained uncovered cell, lowest index on ties.
    int best_cell = -1;
    int best_count = cell_count + 1;
    for (int cell = 0; cell < cell_count; ++cell) {
      if (used & (1ull << cell)) continue;
      int count = 0;
      for (int t : at_cell[cell])
        if (!(masks[t] & used)) ++count;
      if (count < best_count) {
        best_count = count;
        best_cell = cell;
        if (count == 0) break;
      }
    }
    if (best_count == 0) return false;
    for (int t : at_cell[best_cell]) {
      if (masks[t] & used) continue;
      chosen.push_back(t);
      if (solve(used | masks[t], chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

SearchCertificate find_orthogonal_mate(const LatinSquare& sq, int order_cap) {
  const auto start = Clock::now();
  check_order_cap(sq.d, order_cap, "find_orthogonal_mate");
  const int d = sq.d;

  SearchCertificate cert;
  cert.order = d;

  const auto trans = transversals(sq);
  cert.stats.transversals = trans.size();

  if (static_cast<int>(trans.size()) >= d) {
    MateSolver solver(d, trans);
    std::vector<int> chosen;
    if (solver.solve(0, chosen)) {
      std::vector<std::vector<int>> grid(d, std::vector<int>(d, -1));
      for (int symbol = 0; symbol < d; ++symbol)
        for (int r = 0; r < d; ++r)
          grid[r][trans[chosen[symbol]].cols[r]] = symbol;
      LatinSquare mate = LatinSquare::from_grid(std::move(grid));
      if (!are_orthogonal(sq, mate))
        throw std::logic_error(
            "find_orthogonal_mate: cover produced a non-orthogonal mate");
      cert.kind = SearchCertificate::Kind::mate_found;
      cert.count = 1;
      cert.witness_squares.push_back(std::move(mate));
      cert.stats.nodes = solver.nodes;
      cert.stats.elapsed_ms = ms_since(start);
      return cert;
    }
    cert.stats.nodes = solver.nodes;
  }
  cert.kind = SearchCertificate::Kind::no_mate;
  cert.count = 0;
  cert.stats.elapsed_ms = ms_since(start);
  return cert;
}

int mols_order_upper_bound(int d) {
  if (d < 2)
    throw std::invalid_argument("mols_order_upper_bound: order must be >= 2");
  return d - 1;
}

namespace {

bool is_prime_power(int d) {
  if (d < 2) return false;
  int p = 2;
  while (d % p != 0) ++p;
  while (d % p == 0) d /= p;
  return d == 1;
}

}  // namespace

SearchCertificate max_mols(int d) {
  const auto start = Clock::now();
  if (d < 2 || d > limits::square_order_cap) {
    std::ostringstream msg;
    msg << "max_mols: order " << d << " outside the supported range 2.."
        << limits::square_order_cap;
    throw std::invalid_argument(msg.str());
  }

  SearchCertificate cert;
  cert.order = d;

  if (d == 6) {
    // Mate existence is invariant under relabeling, so sweeping the
    // reduced squares settles whether any orthogonal pair exists.
    bool have_witness = false;
    for_each_reduced(6, [&](const LatinSquare& sq) {
      ++cert.stats.enumerated;
      if (!have_witness) {
        cert.witness_squares.push_back(sq);
        have_witness = true;
      }
      const SearchCertificate mate = find_orthogonal_mate(sq);
      cert.stats.nodes += mate.stats.nodes;
      cert.stats.transversals += mate.stats.transversals;
      if (mate.kind == SearchCertificate::Kind::mate_found)
        throw std::logic_error(
            "max_mols: an order-6 reduced square produced an orthogonal "
            "mate; the solver is broken");
    });
    cert.count = 1;
    cert.stats.elapsed_ms = ms_since(start);
    return cert;
  }

  if (!is_prime_power(d)) {
    std::ostringstream msg;
    msg << "max_mols: no exhaustive path implemented for non-prime-power "
        << "order " << d;
    throw std::invalid_argument(msg.str());
  }

  cert.witness_squares = gf_mols(d);
  for (const LatinSquare& sq : cert.witness_squares)
    if (!is_latin(sq.grid))
      throw std::logic_error("max_mols: witness is not Latin");
  for (std::size_t i = 0; i < cert.witness_squares.size(); ++i)
    for (std::size_t j = i + 1; j < cert.witness_squares.size(); ++j)
      if (!are_orthogonal(cert.witness_squares[i], cert.witness_squares[j]))
        throw std::logic_error("max_mols: witnesses are not orthogonal");
  if (static_cast<int>(cert.witness_squares.size()) !=
      mols_order_upper_bound(d))
    throw std::logic_error("max_mols: witness count misses the bound");
  cert.count = cert.witness_squares.size();
  cert.stats.elapsed_ms = ms_since(start);
  return cert;
}

SearchCertificate max_mccs(int n) {
  const auto start = Clock::now();
  if (n < 1 || n > limits::mccs_set_size_cap) {
    std::ostringstream msg;
    msg << "max_mccs: set size " << n << " outside the supported range 1.."
        << limits::mccs_set_size_cap;
    throw std::invalid_argument(msg.str());
  }

  SearchCertificate cert;
  cert.order = n;
  cert.order_is_set_size = true;

  if (n == 1) {
    cert.degenerate = true;
    cert.count = 1;
    cert.witness_partitions.push_back(Partition::single_block(1));
    cert.stats.elapsed_ms = ms_since(start);
    return cert;
  }

  int root = 1;
  while ((root + 1) * (root + 1) <= n) ++root;
  if (root * root == n && root >= 2) {
    SearchCertificate inner = max_mols(root);
    const MccsFamily family = mols_to_mccs(inner.witness_squares, root);
    const MccsReport report = verify_mccs(family);
    if (!report.ok)
      throw std::logic_error("max_mccs: witness family failed verification: " +
                             report.reason);
    cert.count = inner.count + 2;
    cert.witness_partitions = family.partitions;
    cert.stats = inner.stats;
    cert.stats.elapsed_ms = ms_since(start);
    return cert;
  }

  // Not a perfect square: a family of three or more forces a square
  // partition shape, so the rows/columns pair of any grid arrangement is
  // already maximal.
  int least_factor = 2;
  while (n % least_factor != 0) ++least_factor;
  const int block_size = n / least_factor;
  std::vector<std::vector<int>> rows(least_factor);
  for (int i = 0; i < least_factor; ++i)
    for (int j = 0; j < block_size; ++j) rows[i].push_back(i * block_size + j);
  const Partition row_partition = Partition::from_blocks(n, rows);
  const Partition col_partition =
      transpose_partition(GridArrangement::from_partition(row_partition));

  MccsFamily family;
  family.n = n;
  family.partitions = {row_partition, col_partition};
  const MccsReport report = verify_mccs(family);
  if (!report.ok)
    throw std::logic_error("max_mccs: rows/columns pair failed verification");
  cert.count = 2;
  cert.witness_partitions = family.partitions;
  cert.stats.elapsed_ms = ms_since(start);
  return cert;
}

namespace {

// Branch-and-bound maximum clique on a small adjacency matrix.
void extend_clique(const std::vector<std::vector<char>>& adjacent,
                   std::vector<int>& current, std::vector<int>& candidates,
                   std::vector<int>& best, std::uint64_t& nodes) {
  ++nodes;
  if (current.size() + candidates.size() <= best.size()) return;
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  while (!candidates.empty()) {
    if (current.size() + candidates.size() <= best.size()) return;
    const int v = candidates.front();
    candidates.erase(candidates.begin());
    current.push_back(v);
    std::vector<int> next;
    for (int u : candidates)
      if (adjacent[v][u]) next.push_back(u);
    extend_clique(adjacent, current, next, best, nodes);
    current.pop_back();
  }
}

}  // namespace

SearchCertificate direct_max_mccs(int n) {
  const auto start = Clock::now();
  if (n < 1 || n > limits::direct_mccs_cap) {
    std::ostringstream msg;
    msg << "direct_max_mccs: set size " << n
        << " outside the supported range 1.." << limits::direct_mccs_cap;
    throw std::invalid_argument(msg.str());
  }

  SearchCertificate cert;
  cert.order = n;
  cert.order_is_set_size = true;

  const std::vector<Partition> parts = all_partitions(n);
  cert.stats.enumerated = parts.size();

  if (n == 1) {
    cert.degenerate = true;
    cert.count = 1;
    cert.witness_partitions.push_back(parts.front());
    cert.stats.elapsed_ms = ms_since(start);
    return cert;
  }

  std::vector<Partition> best = {parts.front()};

  // Complementary pairs can only join uniform partitions.
  std::vector<const Partition*> uniform;
  for (const Partition& p : parts)
    if (is_uniform(p)) uniform.push_back(&p);
  for (std::size_t i = 0; i < uniform.size() && best.size() < 2; ++i)
    for (std::size_t j = i + 1; j < uniform.size(); ++j)
      if (are_complementary(*uniform[i], *uniform[j])) {
        best = {*uniform[i], *uniform[j]};
        break;
      }

  // Families of size >= 3 force every member square (the cardinality
  // obstruction), so clique over the square partitions is exhaustive.
  int root = 1;
  while ((root + 1) * (root + 1) <= n) ++root;
  if (root * root == n && root >= 2) {
    std::vector<const Partition*> square;
    for (const Partition* p : uniform)
      if (is_square(*p)) square.push_back(p);
    const int m = static_cast<int>(square.size());
    std::vector<std::vector<char>> adjacent(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        adjacent[i][j] = adjacent[j][i] =
            are_complementary(*square[i], *square[j]) ? 1 : 0;
    std::vector<int> current, best_idx;
    std::vector<int> candidates(m);
    for (int i = 0; i < m; ++i) candidates[i] = i;
    extend_clique(adjacent, current, candidates, best_idx, cert.stats.nodes);
    if (best_idx.size() > best.size()) {
      best.clear();
      for (int i : best_idx) best.push_back(*square[i]);
    }
  }

  MccsFamily family;
  family.n = n;
  family.partitions = best;
  const MccsReport report = verify_mccs(family);
  if (!report.ok)
    throw std::logic_error("direct_max_mccs: witness family failed verification");
  cert.count = best.size();
  cert.witness_partitions = std::move(family.partitions);
  cert.stats.elapsed_ms = ms_since(start);
  return cert;
}

}  // namespace relmub
