#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filmseries {

/// Argument outside the mathematical domain of an operation (ε ≤ 0, y ∉ (0,b), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A denominator that the formulas divide by has collapsed below its floor.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |G(q_n)| fell below the configured floor for the n-th eigenvalue (1-based).
class DegenerateGError : public DegeneracyError {
 public:
  DegenerateGError(std::size_t index, double q, double g)
      : DegeneracyError("|G(q_" + std::to_string(index) + ")| = " + std::to_string(g) +
                        " below floor at q = " + std::to_string(q)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The root scan ran out of window before producing the requested count.
class SearchExhaustedError : public std::runtime_error {
 public:
  SearchExhaustedError(std::size_t found, std::size_t requested)
      : std::runtime_error("root search exhausted: found " + std::to_string(found) + " of " +
                           std::to_string(requested) + " roots"),
        found_(found) {}

  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t found_;
};

/// The Table-1 residual metric divides by tan(q); it has no value at tan(q) = 0 or at a pole.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed configuration or contradictory options.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace filmseries
