#pragma once

#include <cstdint>
#include <vector>

namespace tsgraph {

/// Eventually periodic set of non-negative integers. Membership is explicit
/// on [0, threshold]; above it, x is a member iff x - period is.
class LagSet {
 public:
  LagSet() = default;
  /// `explicit_members[x]` is membership of x for x <= threshold, where
  /// threshold = explicit_members.size() - 1. Requires 1 <= period <= size.
  LagSet(std::vector<bool> explicit_members, int period);

  bool contains(long long x) const;
  int threshold() const { return static_cast<int>(explicit_.size()) - 1; }
  int period() const { return period_; }
  /// Residues r (mod period) whose members above the threshold are present.
  std::vector<int> residues() const;
  /// Sorted members in [0, threshold].
  std::vector<int> explicit_members() const;
  bool empty() const;

  friend bool operator==(const LagSet& a, const LagSet& b);

 private:
  std::vector<bool> explicit_;
  int period_ = 1;
};

}  // namespace tsgraph
