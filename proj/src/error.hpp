#ifndef LLG_ERROR_HPP
#define LLG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace llg {

// Domain error codes. Names mirror the conditions reported on stderr by the
// CLI and across the C API.
enum class errc {
    invalid_argument,
    parse_error,
    endpoint_out_of_range,
    self_loop,
    not_locally_linear,
    too_small,
    unsupported_length,
    invalid_star,
    not_cluster_neighborhood,
    too_many_parts,
    gluing_contradiction,
    bijection_failure,
    invalid_param,
    retry_exhausted,
    search_exhausted,
    odd_degree,
    io_error,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::parse_error: return "ParseError";
        case errc::endpoint_out_of_range: return "EndpointOutOfRange";
        case errc::self_loop: return "SelfLoop";
        case errc::not_locally_linear: return "NotLocallyLinear";
        case errc::too_small: return "TooSmall";
        case errc::unsupported_length: return "UnsupportedLength";
        case errc::invalid_star: return "InvalidStar";
        case errc::not_cluster_neighborhood: return "NotClusterNeighborhood";
        case errc::too_many_parts: return "TooManyParts";
        case errc::gluing_contradiction: return "GluingContradiction";
        case errc::bijection_failure: return "BijectionFailure";
        case errc::invalid_param: return "InvalidParam";
        case errc::retry_exhausted: return "RetryExhausted";
        case errc::search_exhausted: return "SearchExhausted";
        case errc::odd_degree: return "OddDegree";
        case errc::io_error: return "IoError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    errc code_;
    std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw Error(code, detail); }

// Internal consistency assertions. These guard identities that must hold by
// theorem; a failure is a bug, not a user error.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw Error(errc::internal, what);
}

}  // namespace llg

#endif
