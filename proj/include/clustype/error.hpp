#ifndef CLUSTYPE_ERROR_HPP
#define CLUSTYPE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace clustype {

// Every failure raised by the library carries one of these kinds. The kind
// name is the prefix of what(), so callers can surface messages verbatim.
enum class ErrorKind {
    // Malformed or inconsistent input values.
    ParseError,
    NonPrimitiveRay,
    NotCyclicallyOrdered,
    NotComplete,
    InvalidGraph,
    InvalidLabel,
    InvalidSpec,
    InconsistentSpec,
    UnknownFixture,
    // Operation preconditions.
    NotSmooth,
    RayAlreadyPresent,
    NotInteriorToCone,
    NoToricMorphism,
    NoSuchIntersection,
    NoSuchVertex,
    NotMinusOneCurve,
    VertexHasNodes,
    VertexOnMarkedPoint,
    MarkedPointNotLC,
    CoefficientOutOfRange,
    NotMinusTwoChain,
    RankTooLarge,
    NotAType,
    WrongRank,
    BoundaryMeetsSingularities,
    PreconditionFailed,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::NotCyclicallyOrdered: return "NotCyclicallyOrdered";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InconsistentSpec: return "InconsistentSpec";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::RayAlreadyPresent: return "RayAlreadyPresent";
    case ErrorKind::NotInteriorToCone: return "NotInteriorToCone";
    case ErrorKind::NoToricMorphism: return "NoToricMorphism";
    case ErrorKind::NoSuchIntersection: return "NoSuchIntersection";
    case ErrorKind::NoSuchVertex: return "NoSuchVertex";
    case ErrorKind::NotMinusOneCurve: return "NotMinusOneCurve";
    case ErrorKind::VertexHasNodes: return "VertexHasNodes";
    case ErrorKind::VertexOnMarkedPoint: return "VertexOnMarkedPoint";
    case ErrorKind::MarkedPointNotLC: return "MarkedPointNotLC";
    case ErrorKind::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorKind::NotMinusTwoChain: return "NotMinusTwoChain";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::NotAType: return "NotAType";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::BoundaryMeetsSingularities: return "BoundaryMeetsSingularities";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    }
    return "Unknown";
}

/// True for kinds that signal bad input data rather than a violated
/// operation precondition. The CLI maps the two groups to different exit
/// codes.
constexpr bool is_input_error(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NonPrimitiveRay:
    case ErrorKind::NotCyclicallyOrdered:
    case ErrorKind::NotComplete:
    case ErrorKind::InvalidGraph:
    case ErrorKind::InvalidLabel:
    case ErrorKind::InvalidSpec:
    case ErrorKind::InconsistentSpec:
    case ErrorKind::UnknownFixture:
        return true;
    default:
        return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace clustype

#endif // CLUSTYPE_ERROR_HPP
