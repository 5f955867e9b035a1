#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HQM_DEFINE_ERROR(Name)                      \
    class Name : public Error {                     \
    public:                                         \
        using Error::Error;                         \
    }

HQM_DEFINE_ERROR(NullConeError);
HQM_DEFINE_ERROR(ZeroDivisorError);
HQM_DEFINE_ERROR(DimensionMismatch);
HQM_DEFINE_ERROR(DegenerateError);
HQM_DEFINE_ERROR(UnsupportedCoefficientRing);
HQM_DEFINE_ERROR(ClassMismatch);
HQM_DEFINE_ERROR(UnsupportedPair);
HQM_DEFINE_ERROR(UnsupportedClass);
HQM_DEFINE_ERROR(HyperbolicSingularity);
HQM_DEFINE_ERROR(NonIntegrable);
HQM_DEFINE_ERROR(RingMismatch);
HQM_DEFINE_ERROR(UnitMixError);

#undef HQM_DEFINE_ERROR

/// Parse failure carrying the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace hqm
