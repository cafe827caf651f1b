#pragma once

#include <stdexcept>
#include <string>

namespace bs {

// Base for all domain errors. `kind` is a stable machine-readable tag,
// `cli_exit` the exit code the command line tool maps the error to.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what, int cli_exit = 1)
        : std::runtime_error(what), kind_(std::move(kind)), cli_exit_(cli_exit) {}
    const std::string& kind() const { return kind_; }
    int cli_exit() const { return cli_exit_; }

private:
    std::string kind_;
    int cli_exit_;
};

#define BS_ERROR(Name, exit_code)                                     \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what)                        \
            : Error(#Name, what, exit_code) {}                        \
    }

BS_ERROR(ZeroPolynomial, 1);
BS_ERROR(NotStrictlyIncreasing, 1);
BS_ERROR(NotStrictlyDecreasing, 1);
BS_ERROR(GapInColumns, 1);
BS_ERROR(EmptyTable, 1);
BS_ERROR(EmptyColumn, 1);
BS_ERROR(IncompatibleShapes, 1);
BS_ERROR(WindowTooNarrow, 3);
BS_ERROR(IncompleteTable, 1);
BS_ERROR(NotInCone, 2);
BS_ERROR(MomentsNonzero, 1);
BS_ERROR(HypothesisViolated, 1);
BS_ERROR(InconsistentTable, 1);
BS_ERROR(GapNotTwo, 1);
BS_ERROR(NotAFacet, 1);
BS_ERROR(RegularityViolation, 1);
BS_ERROR(CrossCheckMismatch, 4);
BS_ERROR(ParseError, 1);

#undef BS_ERROR

} // namespace bs
