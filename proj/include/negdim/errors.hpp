#pragma once

#include <stdexcept>
#include <string>

namespace negdim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// specfun
struct DenominatorUnsupported : Error { using Error::Error; };
struct IndeterminateRatio : Error { using Error::Error; };
struct MixedPowerAddition : Error { using Error::Error; };
struct PoleValueAccess : Error { using Error::Error; };

// ndim_core
struct NonPositiveBeta : Error { using Error::Error; };
struct NoPreimage : Error { using Error::Error; };
struct NegativeN : Error { using Error::Error; };

// oracles
struct RootNotListed : Error { using Error::Error; };
struct DegreeConditionViolated : Error { using Error::Error; };
struct InvalidIntegrand : Error { using Error::Error; };
struct ToleranceNotReached : Error { using Error::Error; };
struct NonFiniteSample : Error { using Error::Error; };

// resum
struct NotConverged : Error { using Error::Error; };

// cli / corpus
struct CorpusParseError : Error {
    CorpusParseError(const std::string& message, int line)
        : Error("corpus parse error at line " + std::to_string(line) + ": " + message),
          line_number(line) {}
    int line_number;
};
struct ConfigParseError : Error { using Error::Error; };
struct MethodFailure : Error {
    MethodFailure(const std::string& method, const std::string& message)
        : Error("method '" + method + "' failed: " + message), method_name(method) {}
    std::string method_name;
};

} // namespace negdim
