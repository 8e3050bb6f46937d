#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cluster_roots {

/// Malformed quiver input: loops, 2-cycles, non-skew-symmetric matrices, bad documents.
class InvalidQuiver : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-width integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
  OverflowError(const std::string& what, std::vector<int> word);

  const std::vector<int>& word() const { return word_; }

 private:
  std::vector<int> word_;
};

/// A seed invariant (duality, unimodularity, sign-coherence) failed.  Always a bug
/// or corrupted state, never a legitimate outcome.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
  InvariantViolation(const std::string& what, std::vector<int> word);

  const std::vector<int>& word() const { return word_; }

 private:
  std::vector<int> word_;
};

/// c-matrix handed to g_from_c was not in GL_n(Z).
class NonUnimodular : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formats a 1-based mutation word as "[1,2,1]".
std::string format_word(const std::vector<int>& word);

}  // namespace cluster_roots
