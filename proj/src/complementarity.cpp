#include "relmub/complementarity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relmub {

GridArrangement GridArrangement::from_partition(const Partition& p) {
  p.validate();
  if (!is_uniform(p))
    throw std::invalid_argument(
        "GridArrangement: partition is not uniform, no grid arrangement");
  GridArrangement g;
  g.rows = p.block_count();
  g.cols = g.rows == 0 ? 0 : static_cast<int>(p.blocks.front().size());
  g.cells = p.blocks;
  return g;
}

void GridArrangement::validate() const {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("GridArrangement: negative shape");
  if (static_cast<int>(cells.size()) != rows)
    throw std::invalid_argument("GridArrangement: row count mismatch");
  const int n = rows * cols;
  std::vector<char> seen(n, 0);
  for (const auto& row : cells) {
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("GridArrangement: ragged row");
    for (int x : row) {
      if (x < 0 || x >= n)
        throw std::invalid_argument("GridArrangement: cell outside {0..n-1}");
      if (seen[x]++)
        throw std::invalid_argument("GridArrangement: repeated cell value");
    }
  }
}

Partition GridArrangement::row_partition() const {
  return Partition::from_blocks(rows * cols, cells);
}

void MccsFamily::validate() const {
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (partitions[i].n != n) {
      std::ostringstream msg;
      msg << "MccsFamily: partition " << i << " lives on " << partitions[i].n
          << " elements, family ground set has " << n;
      throw std::invalid_argument(msg.str());
    }
    partitions[i].validate();
  }
}

bool is_uniform(const Partition& p) {
  for (const auto& block : p.blocks)
    if (block.size() != p.blocks.front().size()) return false;
  return true;
}

bool is_square(const Partition& p) {
  if (!is_uniform(p)) return false;
  if (p.blocks.empty()) return true;  // n = 0 degenerate
  return p.blocks.size() == p.blocks.front().size();
}

bool are_complementary(const Partition& a, const Partition& b) {
  if (a.n != b.n) {
    std::ostringstream msg;
    msg << "are_complementary: ground sets differ (" << a.n << " vs " << b.n
        << ")";
    throw std::invalid_argument(msg.str());
  }
  // Each T contributes exactly one element to S, so |S| must equal the
  // block count of b; checking this first keeps mismatched shapes cheap.
  for (const auto& block : a.blocks)
    if (static_cast<int>(block.size()) != b.block_count()) return false;
  // hits[t] counts |S n T_t|; requiring every entry to equal 1 across all
  // blocks S covers every (S, T) pair.
  const auto owner_b = b.block_of_element();
  for (const auto& block : a.blocks) {
    std::vector<int> hits(b.block_count(), 0);
    for (int x : block) ++hits[owner_b[x]];
    for (int h : hits)
      if (h != 1) return false;
  }
  return true;
}

Partition transpose_partition(const GridArrangement& g) {
  g.validate();
  std::vector<std::vector<int>> columns(g.cols);
  for (int j = 0; j < g.cols; ++j) {
    columns[j].reserve(g.rows);
    for (int i = 0; i < g.rows; ++i) columns[j].push_back(g.cells[i][j]);
  }
  return Partition::from_blocks(g.rows * g.cols, std::move(columns));
}

bool are_complementary_structures(const ClassicalStructure& a,
                                  const ClassicalStructure& b,
                                  CheckMode mode) {
  if (a.n() != b.n()) {
    std::ostringstream msg;
    msg << "are_complementary_structures: ground sets differ (" << a.n()
        << " vs " << b.n() << ")";
    throw std::invalid_argument(msg.str());
  }
  if (mode == CheckMode::fast)
    return are_complementary(a.partition, b.partition);

  for (const Point& p : classical_points(a, PointMode::oracle))
    if (!is_unbiased_point(b, p)) return false;
  for (const Point& p : classical_points(b, PointMode::oracle))
    if (!is_unbiased_point(a, p)) return false;
  return true;
}

bool has_complement(const ClassicalStructure& cs) {
  return is_uniform(cs.partition);
}

ClassicalStructure complement_witness(const ClassicalStructure& cs) {
  if (!has_complement(cs))
    throw std::invalid_argument(
        "complement_witness: partition is not uniform, no complement exists");
  const auto grid = GridArrangement::from_partition(cs.partition);
  return ClassicalStructure::with_cyclic_groups(transpose_partition(grid));
}

MccsReport verify_mccs(const MccsFamily& family) {
  family.validate();
  for (int i = 0; i < family.size(); ++i) {
    for (int j = i + 1; j < family.size(); ++j) {
      if (!are_complementary(family.partitions[i], family.partitions[j])) {
        MccsReport report;
        report.ok = false;
        report.first = i;
        report.second = j;
        std::ostringstream msg;
        msg << "partitions " << i << " and " << j << " are not complementary";
        report.reason = msg.str();
        return report;
      }
    }
  }
  return MccsReport{};
}

}  // namespace relmub
