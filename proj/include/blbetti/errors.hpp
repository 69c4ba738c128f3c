#ifndef BLBETTI_ERRORS_HPP_
#define BLBETTI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace blbetti {

// A closed form was asked for outside the hypotheses it is proved under.
class ApplicabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input data that cannot come from any graph (or module) of the expected kind.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force enumeration refused because the input is too large.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace blbetti

#endif  // BLBETTI_ERRORS_HPP_
