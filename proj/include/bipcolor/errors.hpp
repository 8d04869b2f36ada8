#pragma once

#include <stdexcept>
#include <string>

namespace bipcolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph_core
struct DuplicateEdge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NonBipartiteEdge : Error { using Error::Error; };
struct InfeasibleDegree : Error { using Error::Error; };
struct RetryExhausted : Error { using Error::Error; };

// list_model / bias / colorer
struct WrongPart : Error { using Error::Error; };
struct PoolTooSmall : Error { using Error::Error; };
struct DeltaTooSmall : Error { using Error::Error; };
struct NotDivisibleBy10 : Error { using Error::Error; };
struct SideAIncomplete : Error { using Error::Error; };
struct NoAvailableColor : Error { using Error::Error; };

// coupon_lab / oracle
struct TooLargeToEnumerate : Error { using Error::Error; };
struct CapViolated : Error { using Error::Error; };
struct EmptySubset : Error { using Error::Error; };

// optimizer
struct SingularAtYOne : Error { using Error::Error; };
struct CertificateFailed : Error { using Error::Error; };

// cli_harness
struct ConfigInvalid : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };
struct SchemaMismatch : Error { using Error::Error; };

}  // namespace bipcolor
