#pragma once

#include <stdexcept>
#include <string>

namespace cgx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& name)
        : Error("unknown vertex: " + name) {}
};

struct NotAutomorphismError : Error {
    using Error::Error;
};

struct DisconnectedInputError : Error {
    using Error::Error;
};

struct CapExceededError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct IndexMismatchError : Error {
    using Error::Error;
};

struct RibbonInconsistentError : Error {
    using Error::Error;
};

struct NotExceptionalError : Error {
    using Error::Error;
};

struct NotHyperbolicError : Error {
    using Error::Error;
};

struct BadDeterminantError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

}  // namespace cgx
