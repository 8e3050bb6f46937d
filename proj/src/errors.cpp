#include "cluster_roots/errors.hpp"

#include <sstream>

namespace cluster_roots {

std::string format_word(const std::vector<int>& word) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  os << ']';
  return os.str();
}

OverflowError::OverflowError(const std::string& what, std::vector<int> word)
    : std::overflow_error(what + " at mutation word " + format_word(word)), word_(std::move(word)) {}

InvariantViolation::InvariantViolation(const std::string& what, std::vector<int> word)
    : std::logic_error(what + " at mutation word " + format_word(word)), word_(std::move(word)) {}

}  // namespace cluster_roots
