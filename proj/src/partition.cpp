#include "relmub/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relmub {

Partition Partition::singletons(int n) {
  Partition p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.blocks.push_back({i});
  return p;
}

Partition Partition::single_block(int n) {
  Partition p;
  p.n = n;
  if (n > 0) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    p.blocks.push_back(std::move(all));
  }
  return p;
}

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
  Partition p{n, std::move(blocks)};
  p.validate();
  return p;
}

void Partition::validate() const {
  if (n < 0) throw std::invalid_argument("Partition: negative ground-set size");
  std::vector<char> seen(n, 0);
  int covered = 0;
  int previous_least = -1;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (block.empty()) {
      std::ostringstream msg;
      msg << "Partition: block " << b << " is empty";
      throw std::invalid_argument(msg.str());
    }
    if (block.front() <= previous_least) {
      std::ostringstream msg;
      msg << "Partition: blocks not sorted by least element at block " << b;
      throw std::invalid_argument(msg.str());
    }
    previous_least = block.front();
    int previous = -1;
    for (int x : block) {
      if (x < 0 || x >= n) {
        std::ostringstream msg;
        msg << "Partition: element " << x << " outside {0.." << n - 1 << "}";
        throw std::invalid_argument(msg.str());
      }
      if (x <= previous) {
        std::ostringstream msg;
        msg << "Partition: block " << b << " not strictly ascending";
        throw std::invalid_argument(msg.str());
      }
      previous = x;
      if (seen[x]) {
        std::ostringstream msg;
        msg << "Partition: element " << x << " appears in two blocks";
        throw std::invalid_argument(msg.str());
      }
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != n) {
    std::ostringstream msg;
    msg << "Partition: blocks cover " << covered << " of " << n << " elements";
    throw std::invalid_argument(msg.str());
  }
}

std::vector<int> Partition::block_of_element() const {
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) owner[x] = static_cast<int>(b);
  return owner;
}

namespace {

void grow(int n, int next, std::vector<std::vector<int>>& blocks,
          std::vector<Partition>& out) {
  if (next == n) {
    Partition p{n, blocks};
    out.push_back(std::move(p));
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(next);
    grow(n, next + 1, blocks, out);
    blocks[b].pop_back();
  }
  blocks.push_back({next});
  grow(n, next + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("all_partitions: negative size");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{0, {}});
    return out;
  }
  std::vector<std::vector<int>> blocks;
  grow(n, 0, blocks, out);
  return out;
}

}  // namespace relmub
