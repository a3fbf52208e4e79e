#pragma once

#include <string>
#include <vector>

namespace ggp {

/// A partition of {1..k}. Canonical form: each block sorted ascending,
/// blocks ordered by their smallest element.
class SetPartition {
 public:
  SetPartition() = default;

  /// Validates that the blocks partition {1..k} and canonicalizes them.
  /// Throws std::invalid_argument otherwise.
  SetPartition(int k, std::vector<std::vector<int>> blocks);

  int ground_size() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  bool is_non_crossing() const;
  bool all_blocks_even() const;

  std::string str() const;  // e.g. "{{1,2},{3,4,5,6}}"

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int k_ = 0;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace ggp
