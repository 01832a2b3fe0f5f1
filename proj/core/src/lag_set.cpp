#include "tsgraph/lag_set.hpp"

#include <algorithm>

#include "tsgraph/error.hpp"

namespace tsgraph {

LagSet::LagSet(std::vector<bool> explicit_members, int period)
    : explicit_(std::move(explicit_members)), period_(period) {
  if (explicit_.empty()) throw SemanticError("lag set needs a non-empty explicit range");
  if (period_ < 1 || period_ > static_cast<int>(explicit_.size())) {
    throw SemanticError("lag set period must lie in [1, threshold + 1]");
  }
}

bool LagSet::contains(long long x) const {
  if (x < 0) return false;
  const long long t = threshold();
  if (x <= t) return explicit_[static_cast<std::size_t>(x)];
  const long long base = t - period_ + 1;
  return explicit_[static_cast<std::size_t>(base + (x - base) % period_)];
}

std::vector<int> LagSet::residues() const {
  std::vector<int> out;
  for (int x = threshold() - period_ + 1; x <= threshold(); ++x) {
    if (explicit_[static_cast<std::size_t>(x)]) out.push_back(x % period_);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LagSet::explicit_members() const {
  std::vector<int> out;
  for (int x = 0; x <= threshold(); ++x) {
    if (explicit_[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

bool LagSet::empty() const {
  return std::none_of(explicit_.begin(), explicit_.end(), [](bool b) { return b; });
}

bool operator==(const LagSet& a, const LagSet& b) {
  // Compare as sets: agree on a range covering both thresholds plus a joint period.
  const long long limit = std::max(a.threshold(), b.threshold()) +
                          static_cast<long long>(a.period()) * b.period();
  for (long long x = 0; x <= limit; ++x) {
    if (a.contains(x) != b.contains(x)) return false;
  }
  return true;
}

}  // namespace tsgraph
