#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dyck {

/// Base class for all typed errors thrown by the library. The `name()` is a
/// stable identifier used by the CLI when reporting failures.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define DYCK_DEFINE_ERROR(Type)                                              \
    class Type : public Error {                                              \
    public:                                                                  \
        explicit Type(const std::string& message) : Error(#Type, message) {} \
    }

DYCK_DEFINE_ERROR(UnknownLetter);
DYCK_DEFINE_ERROR(UnbalancedWord);
DYCK_DEFINE_ERROR(EmptyPath);
DYCK_DEFINE_ERROR(InvalidBound);
DYCK_DEFINE_ERROR(NotAFibonacciPath);
DYCK_DEFINE_ERROR(CountOnlySystem);
DYCK_DEFINE_ERROR(WrongColourSystem);
DYCK_DEFINE_ERROR(NotAnNCOTree);
DYCK_DEFINE_ERROR(NotAnNCTree);
DYCK_DEFINE_ERROR(InvalidPartition);
DYCK_DEFINE_ERROR(InvalidDissection);
DYCK_DEFINE_ERROR(NotALittleSchroederPath);
DYCK_DEFINE_ERROR(NotATPath);
DYCK_DEFINE_ERROR(UnmatchedH);
DYCK_DEFINE_ERROR(SizeTooLarge);
DYCK_DEFINE_ERROR(InexactDivision);
DYCK_DEFINE_ERROR(ParseError);

#undef DYCK_DEFINE_ERROR

} // namespace dyck
