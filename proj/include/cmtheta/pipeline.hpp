#pragma once

#include <optional>

#include "cmtheta/recognize.hpp"
#include "cmtheta/theta.hpp"

namespace cmtheta {

char const * version();

enum class FormKind { chi18, sigma140 };

struct PipelineOptions
{
    Embedding embedding = Embedding::standard;
    SigmaNormalization normalization = SigmaNormalization::raw;
    /// Extra symplectic matrix S applied before reduction (tau_a -> S.tau_a).
    std::optional<IntMatrix> gauge;
};

/// Intermediate objects of one run, for inspection and tests.
struct PipelineTrace
{
    IntMatrix t;
    IntMatrix b;
    RiemannPoint riemann;
    ReducedPoint reduced;
    Complex value;
};

/// Periods, T, B, tau_a, reduction, theta constants and the geometric
/// normalization for a genus-3 form, at the context's working precision.
PipelineTrace run_pipeline(HermitianForm const & form, FormKind kind, PrecisionContext const & ctx,
                           PipelineOptions const & opt = {});

Complex analytic_value(HermitianForm const & form, FormKind kind, PrecisionContext const & ctx,
                       PipelineOptions const & opt = {});

struct ComputedValue
{
    AlgebraicValue value;
    /// The context of the accepted run (after magnitude headroom and retry).
    PrecisionContext ctx;
    bool retried = false;
};

/// Recognizes the value in O_K with absolute tolerance 10^-(digits/2).
/// A low-precision pass sizes the headroom so that `digits` counts digits
/// after the decimal point; on failure the run is repeated once at twice the
/// digits. Throws recognition_error if both fail.
ComputedValue compute_recognized(HermitianForm const & form, FormKind kind, unsigned digits,
                                 unsigned guard = 15, PipelineOptions const & opt = {});

} // namespace cmtheta
