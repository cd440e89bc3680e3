#pragma once

#include <stdexcept>
#include <string>

namespace llg {

// Error taxonomy for the whole library. The CLI maps these to exit codes:
// ConfigParse/Usage -> 2, everything numerical/geometric -> 3.
enum class Errc {
    OutOfDomain,
    DegenerateMetric,
    FrameConstructionFailure,
    ComplexSpectrum,
    NonLightlikeInput,
    ZeroTimeComponent,
    NotIsothermal,
    HypothesisViolated,
    VariationLeavesSpacelikeClass,
    NotSpacelike,
    DualDegenerate,
    ConstraintViolated,
    TaylorUnavailable,
    InsufficientSamples,
    ExprParse,
    ConfigParse,
    Io,
    Numerical,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace llg
