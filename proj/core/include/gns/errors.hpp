#ifndef GNS_ERRORS_HPP
#define GNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gns {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotMonic : Error {
    NotMonic() : Error("polynomial is not monic") {}
    explicit NotMonic(const std::string& m) : Error(m) {}
};

// Cheap necessary irreducibility check tripped: f has a rational root.
struct RationalRootFound : Error {
    explicit RationalRootFound(const std::string& m) : Error(m) {}
};

struct EnclosureFailure : Error {
    explicit EnclosureFailure(const std::string& m) : Error(m) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& m) : Error(m) {}
};

struct ZeroModulus : Error {
    ZeroModulus() : Error("modulus has norm zero") {}
};

struct NotTiling : Error {
    explicit NotTiling(const std::string& m) : Error(m) {}
};

struct UnsupportedDomain : Error {
    explicit UnsupportedDomain(const std::string& m) : Error(m) {}
};

// |norm(modulus)| = 1: the digit set collapses to {0}.
struct DegenerateModulus : Error {
    DegenerateModulus() : Error("modulus has unit norm, digit set is {0}") {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& m) : Error(m) {}
};

struct StepCapExceeded : Error {
    explicit StepCapExceeded(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& m, int ln, int col)
        : Error(m + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error(m) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error(m) {}
};

}  // namespace gns

#endif
