#pragma once

#include <stdexcept>
#include <string>

namespace condscreen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDataSet : Error { using Error::Error; };
struct ConstantExposure : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct TableMismatch : Error { using Error::Error; };
struct InvalidCutoff : Error { using Error::Error; };
struct EmptyActiveSet : Error { using Error::Error; };
struct InconsistentDimensions : Error { using Error::Error; };
struct UnsupportedScenario : Error { using Error::Error; };

// CSV ingestion errors carry the offending location in the message.
struct ParseError : Error { using Error::Error; };
struct MissingColumn : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };

} // namespace condscreen
