#pragma once

#include <stdexcept>
#include <string>

namespace rootpoly {

/** Base class for every error thrown by this library. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Mismatched vector or matrix dimensions. */
struct DimensionError : Error {
  using Error::Error;
};

/** An argument outside the operation's domain (unknown label, point that is
 *  not a vertex, root not in the datum, ...). */
struct ArgumentError : Error {
  using Error::Error;
};

/** A stated precondition does not hold (non-dominant weight, character that
 *  is not invariant, ...). */
struct PreconditionError : Error {
  using Error::Error;
};

/** A work cap was exceeded (group enumeration cap, constraint count cap). */
struct ResourceError : Error {
  using Error::Error;
};

/** Input data fails an exact identity that genuine characteristic-zero
 *  character data always satisfies.  This is the designed failure mode for
 *  corrupted or out-of-scope inputs, never a silent wrong answer. */
struct InconsistencyError : Error {
  using Error::Error;
};

/** A required matched irreducible character is absent from the input. */
struct MissingDataError : Error {
  using Error::Error;
};

}  // namespace rootpoly
