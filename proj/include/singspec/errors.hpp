#ifndef SINGSPEC_ERRORS_HPP
#define SINGSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace singspec {

/// An identity that must hold on validated input failed (h^1 anomaly,
/// negative spectral multiplicity, position-dependent h^0, ...). Signals a
/// bug or corrupted data rather than bad user input.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace singspec

#endif  // SINGSPEC_ERRORS_HPP
