#pragma once

#include <stdexcept>
#include <string>

namespace magma {

// Base for every typed failure the engine can signal. Callers that only
// care about "an engine error" catch this; tests catch the exact type.
struct MagmaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainMismatch : MagmaError { using MagmaError::MagmaError; };
struct EmptyGenerators : MagmaError { using MagmaError::MagmaError; };
struct KindMismatch : MagmaError { using MagmaError::MagmaError; };
struct SeedsUnavailable : MagmaError { using MagmaError::MagmaError; };
struct NotAPair : MagmaError { using MagmaError::MagmaError; };
struct ArityTooSmall : MagmaError { using MagmaError::MagmaError; };
struct KindError : MagmaError { using MagmaError::MagmaError; };
struct EmptyPresentation : MagmaError { using MagmaError::MagmaError; };
struct PresentationTooLarge : MagmaError { using MagmaError::MagmaError; };
struct NotInDomain : MagmaError { using MagmaError::MagmaError; };
struct NoGreatestImage : MagmaError { using MagmaError::MagmaError; };
struct DepthCap : MagmaError { using MagmaError::MagmaError; };
struct VariantMismatch : MagmaError { using MagmaError::MagmaError; };
struct NotRepresentable : MagmaError { using MagmaError::MagmaError; };
struct NoIncomparableSubmagmas : MagmaError { using MagmaError::MagmaError; };
struct BoundExceeded : MagmaError { using MagmaError::MagmaError; };
struct OutOfRange : MagmaError { using MagmaError::MagmaError; };
struct ParseError : MagmaError { using MagmaError::MagmaError; };
struct EvalError : MagmaError { using MagmaError::MagmaError; };
struct UnknownSuite : MagmaError { using MagmaError::MagmaError; };

}  // namespace magma
