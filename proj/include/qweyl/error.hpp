#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

// Base of every error raised by the engine. The kind string is stable and
// is what reports and the CLI print.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QWEYL_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    }

QWEYL_DEFINE_ERROR(NonUnit);
QWEYL_DEFINE_ERROR(NotDivisible);
QWEYL_DEFINE_ERROR(OrderMismatch);
QWEYL_DEFINE_ERROR(StepLimit);
QWEYL_DEFINE_ERROR(NoStar);
QWEYL_DEFINE_ERROR(BadRule);
QWEYL_DEFINE_ERROR(BadK);
QWEYL_DEFINE_ERROR(NoSolution);
QWEYL_DEFINE_ERROR(BadParams);
QWEYL_DEFINE_ERROR(ValidationFailed);
QWEYL_DEFINE_ERROR(DegenerateEigenvalues);
QWEYL_DEFINE_ERROR(NotRankOne);
QWEYL_DEFINE_ERROR(SyntaxError);
QWEYL_DEFINE_ERROR(UsageError);

#undef QWEYL_DEFINE_ERROR

}  // namespace qweyl
