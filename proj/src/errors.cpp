#include "vlab/errors.hpp"

namespace vlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::degenerate_input: return "DegenerateInput";
        case ErrorCode::origin_not_interior: return "OriginNotInterior";
        case ErrorCode::singular_map: return "SingularMap";
        case ErrorCode::empty_or_degenerate_intersection: return "EmptyOrDegenerateIntersection";
        case ErrorCode::non_convex_union: return "NonConvexUnion";
        case ErrorCode::invalid_slab: return "InvalidSlab";
        case ErrorCode::wrong_dimension: return "WrongDimension";
        case ErrorCode::generator_exhausted: return "GeneratorExhausted";
        case ErrorCode::unsupported_exponent: return "UnsupportedExponent";
        case ErrorCode::invalid_configuration: return "InvalidConfiguration";
        case ErrorCode::not_even: return "NotEven";
        case ErrorCode::not_odd: return "NotOdd";
        case ErrorCode::singular_training_set: return "SingularTrainingSet";
        case ErrorCode::fit_impossible: return "FitImpossible";
        case ErrorCode::parse_error: return "ParseError";
    }
    return "UnknownError";
}

} // namespace vlab
