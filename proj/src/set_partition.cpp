#include "ggp/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggp {

SetPartition::SetPartition(int k, std::vector<std::vector<int>> blocks) : k_(k), blocks_(std::move(blocks)) {
  if (k < 0) throw std::invalid_argument("set partition: negative ground size");
  std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("set partition: empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > k || seen[x]) throw std::invalid_argument("set partition: blocks do not partition {1..k}");
      seen[x] = 1;
    }
  }
  for (int x = 1; x <= k; ++x)
    if (!seen[x]) throw std::invalid_argument("set partition: blocks do not cover {1..k}");
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool SetPartition::is_non_crossing() const {
  // Crossing: a < b < c < d with a, c in one block and b, d in another.
  std::vector<int> owner(static_cast<std::size_t>(k_) + 1, -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int x : blocks_[i]) owner[x] = static_cast<int>(i);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& block = blocks_[i];
    for (std::size_t j = 0; j + 1 < block.size(); ++j) {
      // Everything strictly between consecutive members must form whole blocks
      // that stay inside the gap.
      for (int y = block[j] + 1; y < block[j + 1]; ++y) {
        const auto& other = blocks_[owner[y]];
        if (other.front() < block[j] || other.back() > block[j + 1]) return false;
      }
    }
  }
  return true;
}

bool SetPartition::all_blocks_even() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() % 2 == 0; });
}

std::string SetPartition::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(blocks_[i][j]);
    }
    out += "}";
  }
  return out + "}";
}

}  // namespace ggp
