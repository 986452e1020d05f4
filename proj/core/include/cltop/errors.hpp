#ifndef CLTOP_ERRORS_HPP
#define CLTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cltop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad relations, non-topologies, width mismatches, bad files.
struct InvalidInputError : Error {
    using Error::Error;
};

// Formula text rejected; position is 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// An exhaustive check would exceed its enumeration bound.
struct TooLargeError : Error {
    using Error::Error;
};

struct NotScatteredError : Error {
    using Error::Error;
};

struct NotCLSpaceError : Error {
    using Error::Error;
};

// A formula is evaluated against a valuation missing one of its variables,
// or a schema is instantiated without a binding for a schematic variable.
struct UnboundVariableError : Error {
    using Error::Error;
};

}  // namespace cltop

#endif
