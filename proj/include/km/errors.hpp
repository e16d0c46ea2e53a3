#ifndef KM_ERRORS_HPP
#define KM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace km {

enum class errc {
    degree_mismatch,
    not_involution,
    not_transitive,
    signature_violation,
    internal_parity,
    internal_classification,
    internal_check,
    not_orientable_closed,
    invalid_parameter,
    not_distinct,
    not_real,
    real_input,
    singular_curve,
    degree_unsupported,
    too_many_nonreal_pairs,
    cap_exceeded,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::degree_mismatch:         return "DegreeMismatch";
        case errc::not_involution:          return "NotInvolution";
        case errc::not_transitive:          return "NotTransitive";
        case errc::signature_violation:     return "SignatureViolation";
        case errc::internal_parity:         return "InternalParity";
        case errc::internal_classification: return "InternalClassification";
        case errc::internal_check:          return "InternalCheck";
        case errc::not_orientable_closed:   return "NotOrientableClosed";
        case errc::invalid_parameter:       return "InvalidParameter";
        case errc::not_distinct:            return "NotDistinct";
        case errc::not_real:                return "NotReal";
        case errc::real_input:              return "RealInput";
        case errc::singular_curve:          return "SingularCurve";
        case errc::degree_unsupported:      return "DegreeUnsupported";
        case errc::too_many_nonreal_pairs:  return "TooManyNonRealPairs";
        case errc::cap_exceeded:            return "CapExceeded";
        case errc::parse_error:             return "ParseError";
    }
    return "Unknown";
}

/// Domain error carrying a stable machine-readable code.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw error(code, msg);
}

} // namespace km

#endif
