#ifndef SQUIGMAP_ERRORS_HPP
#define SQUIGMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace squig {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numeric / pipeline
struct ZeroVariance : Error { using Error::Error; };
struct SignalTooShort : Error { using Error::Error; };
struct NotEnoughEvents : Error { using Error::Error; };

// reference construction
struct MissingKmer : Error { using Error::Error; };
struct MalformedLine : Error { using Error::Error; };
struct InconsistentK : Error { using Error::Error; };
struct InvalidBase : Error { using Error::Error; };
struct SequenceTooShort : Error { using Error::Error; };

// alignment engines
struct EmptyInput : Error { using Error::Error; };
struct QueryLongerThanReference : Error { using Error::Error; };

// PE chain simulator
struct QueryTooLong : Error { using Error::Error; };
struct EmptyReference : Error { using Error::Error; };
struct SimulationFinished : Error { using Error::Error; };

// mapping
struct ParamsMismatch : Error { using Error::Error; };
struct NegativeScore : Error { using Error::Error; };

// file formats
struct BadHeader : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NonNumericSignal : Error { using Error::Error; };
struct EmptySequence : Error { using Error::Error; };
struct NoRecords : Error { using Error::Error; };
struct BadIndexFile : Error { using Error::Error; };

} // namespace squig

#endif
