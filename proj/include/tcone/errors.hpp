#pragma once

#include <stdexcept>
#include <string>

namespace tcone {

// Error categories. Validation errors map to CLI exit code 2,
// internal/theorem errors to exit code 3.
enum class errc {
    empty_input,
    invalid_input,
    gcd_not_one,
    not_minimal,
    not_member,
    dimension_mismatch,
    dimension_unsupported,
    zero_polynomial,
    order_not_nice,
    structure_mismatch,
    not_applicable,
    shape_mismatch,
    binomial_mismatch,
    precondition_violated,
    cap_exceeded,
    theorem_violation,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "Empty";
        case errc::invalid_input: return "InvalidInput";
        case errc::gcd_not_one: return "GcdNotOne";
        case errc::not_minimal: return "NotMinimal";
        case errc::not_member: return "NotMember";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::dimension_unsupported: return "DimensionUnsupported";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::order_not_nice: return "OrderNotNice";
        case errc::structure_mismatch: return "StructureMismatch";
        case errc::not_applicable: return "NotApplicable";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::binomial_mismatch: return "BinomialMismatch";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::theorem_violation: return "TheoremViolation";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

    // Validation errors are caused by bad user input; everything else
    // signals a bug or a theorem violation.
    bool is_validation() const {
        switch (code_) {
            case errc::theorem_violation:
            case errc::internal:
                return false;
            default:
                return true;
        }
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace tcone
