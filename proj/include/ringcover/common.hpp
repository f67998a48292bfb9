#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringcover {

enum class Side { left, right, two_sided };

std::string to_string(Side s);
/// Accepts "left", "right", "two-sided" (also "two_sided", "both").
Side parse_side(const std::string& s);

/// Desk-scale ceilings applied to exhaustive work.
struct Limits {
  std::uint64_t max_elements = 65536;
  std::size_t max_ideals = 100000;
  double time_budget_s = 300.0;
  std::uint64_t max_search_nodes = 20'000'000;
};

/// Raised when a scan or search would exceed its configured ceiling.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::uint64_t partial = 0)
      : std::runtime_error(what), partial_(partial) {}
  std::uint64_t partial_count() const { return partial_; }

 private:
  std::uint64_t partial_;
};

/// Wall-clock budget checked cooperatively by long searches.
class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(std::chrono::steady_clock::now()),
        end_(start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(seconds))) {}
  bool expired() const { return std::chrono::steady_clock::now() > end_; }
  void check(const char* where) const {
    if (expired()) throw GuardExceeded(std::string("time budget exhausted in ") + where);
  }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point end_;
};

}  // namespace ringcover
