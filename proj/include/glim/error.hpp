#pragma once

#include <stdexcept>
#include <string>

namespace glim {

/// Raised on invalid input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define GLIM_CHECK(cond, msg)                 \
  do {                                        \
    if (!(cond)) throw ::glim::Error(msg);    \
  } while (0)

#define GLIM_ASSERT(cond, msg)                        \
  do {                                                \
    if (!(cond)) throw ::glim::InternalError(msg);    \
  } while (0)

}  // namespace glim
