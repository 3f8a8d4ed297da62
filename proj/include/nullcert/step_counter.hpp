#pragma once

#include <cstdint>

#include "nullcert/numeric.hpp"

namespace nullcert {

// Tallies the unit-cost events of a run: assignments of scalar values into
// storage cells, exact scalar arithmetic operations, and comparisons.
// max_bits tracks the largest integer component (numerator or denominator)
// produced while the counter was active; it is reported separately and is
// not part of total().
struct StepCounter {
  std::uint64_t assignments = 0;
  std::uint64_t arith_ops = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t max_bits = 0;

  std::uint64_t total() const { return assignments + arith_ops + comparisons; }

  bool operator==(const StepCounter&) const = default;
};

namespace detail {
inline thread_local StepCounter* t_active_counter = nullptr;
}

// Installs a counter as the active one for the current thread for the
// lifetime of the scope. Scopes nest; the previous counter is restored.
class CountingScope {
 public:
  explicit CountingScope(StepCounter& counter)
      : prev_(detail::t_active_counter) {
    detail::t_active_counter = &counter;
  }
  ~CountingScope() { detail::t_active_counter = prev_; }

  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  StepCounter* prev_;
};

inline StepCounter* active_counter() { return detail::t_active_counter; }

inline void count_assign(std::uint64_t k = 1) {
  if (auto* c = detail::t_active_counter) c->assignments += k;
}

inline void count_arith(std::uint64_t k = 1) {
  if (auto* c = detail::t_active_counter) c->arith_ops += k;
}

inline void count_compare(std::uint64_t k = 1) {
  if (auto* c = detail::t_active_counter) c->comparisons += k;
}

inline void observe_bits(unsigned long bits) {
  if (auto* c = detail::t_active_counter) {
    if (bits > c->max_bits) c->max_bits = bits;
  }
}

}  // namespace nullcert
