#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterOutOfRange : Error { using Error::Error; };
struct UnknownSpace : Error { using Error::Error; };
struct NonPositiveMetric : Error { using Error::Error; };
struct NonPolynomialResult : Error { using Error::Error; };
struct NotTranscribed : Error { using Error::Error; };
struct ChartDomain : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };
struct StepFailure : Error { using Error::Error; };

}  // namespace ricci
