#pragma once

#include <stdexcept>
#include <string>

namespace tcz {

// All library failures carry a short stable code (used by the CLI to pick
// exit codes and by tests to pin behaviour) plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define TCZ_DEFINE_ERROR(NAME)                                   \
    class NAME : public Error {                                  \
    public:                                                      \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

TCZ_DEFINE_ERROR(ParseError);
TCZ_DEFINE_ERROR(ClosureOverflow);
TCZ_DEFINE_ERROR(NotAGroup);
TCZ_DEFINE_ERROR(NotAHomomorphism);
TCZ_DEFINE_ERROR(InconsistentClassMap);
TCZ_DEFINE_ERROR(NotASubgroup);
TCZ_DEFINE_ERROR(NotNormal);
TCZ_DEFINE_ERROR(NotInvariant);
TCZ_DEFINE_ERROR(NotEulerForm);
TCZ_DEFINE_ERROR(NoSuitablePrime);
TCZ_DEFINE_ERROR(NoIntertwiner);
TCZ_DEFINE_ERROR(NonSimpleIntertwiner);
TCZ_DEFINE_ERROR(MissingRepresentationData);
TCZ_DEFINE_ERROR(InfiniteReidemeister);
TCZ_DEFINE_ERROR(VerificationFailed);
TCZ_DEFINE_ERROR(BaseMismatch);

#undef TCZ_DEFINE_ERROR

}  // namespace tcz
