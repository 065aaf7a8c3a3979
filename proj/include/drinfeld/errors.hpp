#ifndef DRINFELD_ERRORS_HPP
#define DRINFELD_ERRORS_HPP

#include <stdexcept>

namespace drinfeld {

/// A configured desk-scale limit was exceeded (field size, extension search
/// depth, point count). Recoverable by raising the cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. This never signals bad input; it means a
/// computed identity that must hold did not, so the result cannot be trusted.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace drinfeld

#endif
