#pragma once

#include <stdexcept>
#include <string>

namespace sapp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularForm : Error {
    SingularForm() : Error("bilinear form or map is singular") {}
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

struct NameMismatch : Error {
    using Error::Error;
};

struct NotFactorizable : Error {
    NotFactorizable() : Error("(r + tau(r))^sharp is singular") {}
};

struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct UnknownExample : Error {
    explicit UnknownExample(const std::string& id) : Error("unknown example: " + id) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

}  // namespace sapp
