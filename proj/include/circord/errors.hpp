#ifndef CIRCORD_ERRORS_HPP_
#define CIRCORD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace circord {

// Malformed or mathematically invalid input (bad tables, non-subgroups,
// cocycles that fail their identities, unparsable files).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size bound was exceeded (group order, radius, ...).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace circord

#endif  // CIRCORD_ERRORS_HPP_
