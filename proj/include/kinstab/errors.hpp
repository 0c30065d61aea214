#pragma once

#include <stdexcept>
#include <string>

namespace kinstab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ratlin
struct SingularMatrix : Error { using Error::Error; };

// surface
struct NonPositiveIndex : Error { using Error::Error; };
struct NotWellFormed : Error { using Error::Error; };
struct UnsortedWeights : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };

// geometry
struct InadmissibleWeights : Error { using Error::Error; };
struct NonPrimitiveWeights : Error { using Error::Error; };
struct MissingGerm : Error { using Error::Error; };
struct InconsistentGram : Error { using Error::Error; };

// zariski / betaflow
struct NotPseudoeffective : Error { using Error::Error; };
struct DegenerateConfig : Error { using Error::Error; };

// lct
struct NonUnitFirstWeight : Error { using Error::Error; };

// cli / scenario
struct BadParameters : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace kinstab
