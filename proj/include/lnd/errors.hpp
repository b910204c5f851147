#ifndef LND_ERRORS_HPP
#define LND_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lnd {

enum class ErrorCode {
    domain,
    singular_point,
    cut_ambiguity,
    no_convergence,
    near_integer_degree,
    internal_inconsistency,
    io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::singular_point: return "SingularPoint";
    case ErrorCode::cut_ambiguity: return "CutAmbiguity";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::near_integer_degree: return "NearIntegerDegree";
    case ErrorCode::internal_inconsistency: return "InternalInconsistency";
    case ErrorCode::io: return "IoError";
    }
    return "Unknown";
}

/// Base of every error raised by the library. `code()` is stable and is what
/// the CLI reports in its machine-readable error field.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define LND_DEFINE_ERROR(Name, Code)                                           \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(ErrorCode::Code, what)  \
        {                                                                      \
        }                                                                      \
    }

LND_DEFINE_ERROR(DomainError, domain);
LND_DEFINE_ERROR(SingularPoint, singular_point);
LND_DEFINE_ERROR(CutAmbiguity, cut_ambiguity);
LND_DEFINE_ERROR(NoConvergence, no_convergence);
LND_DEFINE_ERROR(NearIntegerDegree, near_integer_degree);
LND_DEFINE_ERROR(InternalInconsistency, internal_inconsistency);
LND_DEFINE_ERROR(IoError, io);

#undef LND_DEFINE_ERROR

} // namespace lnd

#endif // LND_ERRORS_HPP
