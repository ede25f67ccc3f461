#pragma once

#include <stdexcept>
#include <string>

namespace slicereg {

// Precondition violations are reported by throwing; mathematical negatives
// (a polynomial that simply does not vanish) are ordinary return values.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SLICEREG_ERROR(Name)                        \
    struct Name : Error {                           \
        Name() : Error(#Name) {}                    \
        explicit Name(const std::string& m) : Error(std::string(#Name) + ": " + m) {} \
    }

SLICEREG_ERROR(ZeroRotor);
SLICEREG_ERROR(IrrationalNorm);
SLICEREG_ERROR(AntipodalDirections);
SLICEREG_ERROR(ArityMismatch);
SLICEREG_ERROR(NonCommutingPoint);
SLICEREG_ERROR(NotMonic);
SLICEREG_ERROR(BadIndex);
SLICEREG_ERROR(IndexClash);
SLICEREG_ERROR(ChainOrderViolation);
SLICEREG_ERROR(DegenerateSphere);
SLICEREG_ERROR(NotArrangedPair);
SLICEREG_ERROR(RealComponent);
SLICEREG_ERROR(NotArranged);
SLICEREG_ERROR(InvalidBalloon);
SLICEREG_ERROR(InvalidFrame);
SLICEREG_ERROR(NotOnSlice);
SLICEREG_ERROR(NegativeShadow);
SLICEREG_ERROR(NotACommonZero);

#undef SLICEREG_ERROR

}  // namespace slicereg
