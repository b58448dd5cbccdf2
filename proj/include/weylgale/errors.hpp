#pragma once

#include <stdexcept>
#include <string>

namespace weylgale {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define WEYLGALE_ERROR(Name)         \
  struct Name : Error {              \
    using Error::Error;              \
  }

WEYLGALE_ERROR(DimensionError);
WEYLGALE_ERROR(ContextError);
WEYLGALE_ERROR(RootError);
WEYLGALE_ERROR(IndexError);
WEYLGALE_ERROR(BoundError);
WEYLGALE_ERROR(DomainError);
WEYLGALE_ERROR(DegenerateError);
WEYLGALE_ERROR(UnboundedError);
WEYLGALE_ERROR(HypothesisError);
WEYLGALE_ERROR(BoundaryUndecidable);
WEYLGALE_ERROR(InfiniteWalls);
WEYLGALE_ERROR(RegionError);
WEYLGALE_ERROR(OnWallError);
WEYLGALE_ERROR(MapError);

#undef WEYLGALE_ERROR

}  // namespace weylgale
