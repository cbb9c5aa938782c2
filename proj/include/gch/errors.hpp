#pragma once

#include <stdexcept>

namespace gch {

// A computation that breaks one of its own structural promises: a
// differential landing outside a window that must be closed, boundary
// matrices failing to compose to zero, a twist over an element that does
// not satisfy its structure equation, rank bookkeeping that cannot come
// from a chain complex. Callers map this onto the dedicated integrity
// exit code.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gch
