#pragma once

#include <stdexcept>
#include <string>

namespace dualcx {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An id that does not name a live vertex or cell.
struct UnknownIdError : Error {
  using Error::Error;
};

// Cell attachment whose facet data contradicts its vertex list.
struct MalformedAttachmentError : Error {
  using Error::Error;
};

// Operation target of the wrong kind, e.g. subdividing a vertex.
struct InvalidTargetError : Error {
  using Error::Error;
};

// Complex fails structural validation.
struct InvalidComplexError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

// Fan fails the smoothness/simpliciality checks.
struct NotSmoothError : Error {
  using Error::Error;
};

// Ray index set that is not a face of the fan.
struct UnknownConeError : Error {
  using Error::Error;
};

// Computed stabilizer data contradicts the geometry it is supposed to model.
struct InconsistentGeometryError : Error {
  using Error::Error;
};

// Action spec rejected by validation.
struct InvalidActionError : Error {
  using Error::Error;
};

// Input JSON does not match the expected schema.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace dualcx
