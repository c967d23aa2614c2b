#pragma once

#include <chrono>

namespace pocut {

// Monotonic stopwatch that can pause, so benchmark loops can exclude setup
// work (generator and initializer time) from the measured budget.
class Stopwatch {
  using clock = std::chrono::steady_clock;

 public:
  void start() {
    if (!running_) {
      t0_ = clock::now();
      running_ = true;
    }
  }
  void stop() {
    if (running_) {
      acc_ += std::chrono::duration<double>(clock::now() - t0_).count();
      running_ = false;
    }
  }
  double seconds() const {
    double s = acc_;
    if (running_) s += std::chrono::duration<double>(clock::now() - t0_).count();
    return s;
  }
  void reset() {
    acc_ = 0.0;
    running_ = false;
  }

 private:
  clock::time_point t0_{};
  double acc_ = 0.0;
  bool running_ = false;
};

}  // namespace pocut
