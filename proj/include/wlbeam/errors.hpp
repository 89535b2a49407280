#pragma once

#include <stdexcept>
#include <string>

namespace wlbeam {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define WLBEAM_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                   \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

WLBEAM_DEFINE_ERROR(SingularMatrix);
WLBEAM_DEFINE_ERROR(DimensionMismatch);
WLBEAM_DEFINE_ERROR(InvalidAngle);
WLBEAM_DEFINE_ERROR(ZeroVector);
WLBEAM_DEFINE_ERROR(AssumptionViolated);
WLBEAM_DEFINE_ERROR(InvalidXi);
WLBEAM_DEFINE_ERROR(InvalidRate);
WLBEAM_DEFINE_ERROR(ZeroPower);
WLBEAM_DEFINE_ERROR(DegenerateStatistics);
WLBEAM_DEFINE_ERROR(CaseMismatch);
WLBEAM_DEFINE_ERROR(DomainError);
WLBEAM_DEFINE_ERROR(UnknownPreset);
WLBEAM_DEFINE_ERROR(IoError);
WLBEAM_DEFINE_ERROR(ConfigError);

#undef WLBEAM_DEFINE_ERROR

}  // namespace wlbeam
