#pragma once

#include <stdexcept>
#include <string>

namespace obill {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define OBILL_ERROR(Name)                                        \
  struct Name : Error {                                          \
    explicit Name(const std::string& what) : Error(what) {}      \
  }

OBILL_ERROR(UnsupportedField);
OBILL_ERROR(NonRealInput);
OBILL_ERROR(FieldMismatch);
OBILL_ERROR(NotAnIsometry);
OBILL_ERROR(NotARotation);
OBILL_ERROR(AngleMismatch);
OBILL_ERROR(UnsupportedPolygon);
OBILL_ERROR(OnSingularLine);
OBILL_ERROR(InsidePolygon);
OBILL_ERROR(NotInSector);
OBILL_ERROR(NoReturnWithinBound);
OBILL_ERROR(OutOfRange);
OBILL_ERROR(InsufficientDepth);
OBILL_ERROR(InvalidDifference);
OBILL_ERROR(UnknownLetter);
OBILL_ERROR(UnknownSubstitution);
OBILL_ERROR(DivisibilityViolation);

#undef OBILL_ERROR

// carries the index of the first iterate that could not be computed
struct SingularAtStep : Error {
  SingularAtStep(std::size_t step, const std::string& why)
      : Error("singular at step " + std::to_string(step) + ": " + why), step(step) {}
  std::size_t step;
};

}  // namespace obill
