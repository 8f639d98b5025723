// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_ERRORS_HPP
#define TILT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tilt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// measure construction / comparison
struct EmptySupport : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct DuplicatePoint : Error { using Error::Error; };
struct SupportMismatch : Error { using Error::Error; };
struct NotAbsolutelyContinuous : Error { using Error::Error; };

// losses
struct NonNumericOutcome : Error { using Error::Error; };
struct UndefinedOutcome : Error { using Error::Error; };
struct ZeroMarginal : Error { using Error::Error; };

// generators
struct InvalidGenerator : Error { using Error::Error; };

// updates / optimization
struct NotIntegrable : Error { using Error::Error; };
struct RootNotBracketed : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };

// file / CLI input
struct InputError : Error { using Error::Error; };

}  // namespace tilt

#endif
