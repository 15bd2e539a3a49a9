#pragma once

#include <stdexcept>
#include <string>

namespace singeta {

enum class Err {
    SyntaxError,
    NonRationalCoefficient,
    NotQuasihomogeneous,
    WeightsUnderdetermined,
    NonPositiveWeight,
    NonIsolatedSingularity,
    NotSingular,
    ExponentTooSmall,
    SymmetryViolation,
    NonSimpleBlock,
    UnbalancedEigenspaces,
    NotAGraph,
    DimensionMismatch,
    NotIsotropic,
    NotUnitary,
    DimensionTooSmall,
    InternalCheck,
    IoError,
};

const char* err_name(Err e);

// All library failures surface as Error; `code()` gives the machine-readable
// kind and `module_name()` the subsystem that raised it.
class Error : public std::runtime_error {
public:
    Error(Err code, std::string module, const std::string& message)
        : std::runtime_error(module + "/" + err_name(code) + ": " + message),
          code_(code),
          module_(std::move(module)) {}

    Err code() const { return code_; }
    const std::string& module_name() const { return module_; }

private:
    Err code_;
    std::string module_;
};

} // namespace singeta
