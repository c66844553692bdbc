#ifndef ARTEMIS_ERRORS_HPP
#define ARTEMIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace artemis {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ARTEMIS_DEFINE_ERROR(name)                                        \
    struct name : Error {                                                 \
        explicit name(const std::string& msg = #name) : Error(msg) {}     \
    }

// algebra
ARTEMIS_DEFINE_ERROR(InverseOfZero);
ARTEMIS_DEFINE_ERROR(DomainSizeMismatch);
ARTEMIS_DEFINE_ERROR(NotDivisibleByVanishing);
ARTEMIS_DEFINE_ERROR(NotEnoughBlindingRoom);

// commit
ARTEMIS_DEFINE_ERROR(DegreeBoundExceeded);
ARTEMIS_DEFINE_ERROR(ClaimedValueWrong);
ARTEMIS_DEFINE_ERROR(ProofDecodeError);

// plonkish
ARTEMIS_DEFINE_ERROR(ChallengeBeforeIssue);
ARTEMIS_DEFINE_ERROR(CycleOverlap);
ARTEMIS_DEFINE_ERROR(DegreeTooHigh);
ARTEMIS_DEFINE_ERROR(BadCircuit);

// piop
ARTEMIS_DEFINE_ERROR(DegreeCapacityExceeded);
ARTEMIS_DEFINE_ERROR(UnsatisfiedConstraint);

// cp
ARTEMIS_DEFINE_ERROR(NoRoomForHornerRows);
ARTEMIS_DEFINE_ERROR(LayoutMismatch);
ARTEMIS_DEFINE_ERROR(WitnessCommitmentMismatch);
ARTEMIS_DEFINE_ERROR(WitnessTooLargeForColumn);

// baseline
ARTEMIS_DEFINE_ERROR(NoRoomForHashRows);

// zkml
ARTEMIS_DEFINE_ERROR(ModelTooLargeForDomain);
ARTEMIS_DEFINE_ERROR(FixedPointOverflow);

// io
ARTEMIS_DEFINE_ERROR(IoError);

#undef ARTEMIS_DEFINE_ERROR

} // namespace artemis

#endif
