// Named error types shared by the whole library. The CLI prints name() on
// the diagnostic stream and exits 2, so every precondition failure carries a
// stable machine-readable identifier.

#ifndef RINGCODES_ERRORS_HPP
#define RINGCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringcodes {

class rc_error : public std::runtime_error {
   public:
    rc_error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

   private:
    std::string name_;
};

#define RINGCODES_DEFINE_ERROR(E)                                    \
    struct E : rc_error {                                            \
        explicit E(const std::string& msg) : rc_error(#E, msg) {}    \
    }

RINGCODES_DEFINE_ERROR(NonPrime);
RINGCODES_DEFINE_ERROR(ReducibleModulus);
RINGCODES_DEFINE_ERROR(OddDegreeConjugation);
RINGCODES_DEFINE_ERROR(NoSquareRootOfMinusOne);
RINGCODES_DEFINE_ERROR(NotCoprime);
RINGCODES_DEFINE_ERROR(UnsupportedConjugation);
RINGCODES_DEFINE_ERROR(NonUnitLeadingCoefficient);
RINGCODES_DEFINE_ERROR(NotADivisor);
RINGCODES_DEFINE_ERROR(BadFactorization);
RINGCODES_DEFINE_ERROR(LengthMismatch);
RINGCODES_DEFINE_ERROR(LevelOutOfRange);
RINGCODES_DEFINE_ERROR(IncompleteExponents);
RINGCODES_DEFINE_ERROR(NotCoprimeResidues);
RINGCODES_DEFINE_ERROR(UnsupportedLength);
RINGCODES_DEFINE_ERROR(CoefficientNotInBaseField);
RINGCODES_DEFINE_ERROR(BudgetExceeded);
RINGCODES_DEFINE_ERROR(DualityPreconditionFailed);
RINGCODES_DEFINE_ERROR(NotSelfDual);
RINGCODES_DEFINE_ERROR(SingletonViolation);
RINGCODES_DEFINE_ERROR(InternalError);

#undef RINGCODES_DEFINE_ERROR

}  // namespace ringcodes

#endif
