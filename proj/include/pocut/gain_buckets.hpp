#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pocut {

// Intrusive doubly-linked bucket lists keyed by integer gain: O(1) insert,
// remove, and update, LIFO order within a bucket. Extreme-key queries walk
// from cached hints, which stay cheap under the +-2 gain updates the local
// search performs.
class GainBuckets {
 public:
  GainBuckets(int n, int max_abs_key)
      : off_(max_abs_key),
        head_(2 * static_cast<std::size_t>(max_abs_key) + 1, -1),
        next_(static_cast<std::size_t>(n), -1),
        prev_(static_cast<std::size_t>(n), -1),
        key_(static_cast<std::size_t>(n), -1) {
    reset_hints();
  }

  void clear() {
    std::fill(head_.begin(), head_.end(), -1);
    std::fill(key_.begin(), key_.end(), -1);
    size_ = 0;
    reset_hints();
  }

  bool contains(int v) const { return key_[v] >= 0; }
  int gain_of(int v) const { return key_[v] - off_; }
  bool empty() const { return size_ == 0; }
  int size() const { return size_; }

  void insert(int v, int gain) {
    const int k = gain + off_;
    key_[v] = k;
    prev_[v] = -1;
    next_[v] = head_[k];
    if (head_[k] >= 0) prev_[head_[k]] = v;
    head_[k] = v;
    ++size_;
    if (k > max_hint_) max_hint_ = k;
    if (k < min_hint_) min_hint_ = k;
  }

  void remove(int v) {
    const int k = key_[v];
    if (k < 0) throw std::logic_error("gain buckets: removing absent vertex");
    if (prev_[v] >= 0)
      next_[prev_[v]] = next_[v];
    else
      head_[k] = next_[v];
    if (next_[v] >= 0) prev_[next_[v]] = prev_[v];
    key_[v] = -1;
    --size_;
  }

  void update(int v, int gain) {
    if (key_[v] == gain + off_) return;
    remove(v);
    insert(v, gain);
  }

  int max_key() const {
    int k = max_hint_;
    while (k >= 0 && head_[k] < 0) --k;
    if (k < 0) throw std::logic_error("gain buckets: empty");
    max_hint_ = k;
    return k - off_;
  }

  int min_key() const {
    int k = min_hint_;
    const int last = static_cast<int>(head_.size()) - 1;
    while (k <= last && head_[k] < 0) ++k;
    if (k > last) throw std::logic_error("gain buckets: empty");
    min_hint_ = k;
    return k - off_;
  }

  int head(int gain) const { return head_[gain + off_]; }
  int next(int v) const { return next_[v]; }

  // First k vertices scanning buckets from the best end.
  void best_k(bool from_max, int k, std::vector<int>& out) const {
    out.clear();
    if (size_ == 0) return;
    int idx = from_max ? max_key() + off_ : min_key() + off_;
    const int step = from_max ? -1 : 1;
    const int last = static_cast<int>(head_.size()) - 1;
    for (; idx >= 0 && idx <= last; idx += step)
      for (int v = head_[idx]; v >= 0; v = next_[v]) {
        out.push_back(v);
        if (static_cast<int>(out.size()) == k) return;
      }
  }

 private:
  void reset_hints() {
    max_hint_ = static_cast<int>(head_.size()) - 1;
    min_hint_ = 0;
  }

  int off_;
  std::vector<int> head_;
  std::vector<int> next_, prev_;
  std::vector<int> key_;
  int size_ = 0;
  mutable int max_hint_ = 0, min_hint_ = 0;
};

}  // namespace pocut
