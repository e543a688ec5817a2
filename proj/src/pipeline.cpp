#include <cmath>

#include "cmtheta/errors.hpp"
#include "cmtheta/pipeline.hpp"

namespace cmtheta {

char const * version() { return "0.1.0"; }

PipelineTrace run_pipeline(HermitianForm const & form, FormKind kind, PrecisionContext const & ctx,
                           PipelineOptions const & opt)
{
    PrecisionScope scope(ctx);
    PipelineTrace out;
    EllipticPeriods periods = elliptic_periods(form.disc(), ctx);
    out.t = alternating_form(form, opt.embedding);
    out.b = symplectic_normalize(out.t);
    if (opt.gauge) {
        if (!is_symplectic(*opt.gauge))
            throw domain_error("gauge matrix is not symplectic");
        out.b = *opt.gauge * out.b;
    }
    out.riemann = riemann_matrix(build_omega0(periods, form.dim()), out.b, ctx);
    out.reduced = siegel_reduce(out.riemann.tau, ctx);
    out.value = kind == FormKind::chi18
                    ? chi18_geometric(out.riemann.period, out.reduced, ctx)
                    : sigma140_geometric(out.riemann.period, out.reduced, ctx, opt.normalization);
    return out;
}

Complex analytic_value(HermitianForm const & form, FormKind kind, PrecisionContext const & ctx,
                       PipelineOptions const & opt)
{
    return run_pipeline(form, kind, ctx, opt).value;
}

namespace {

unsigned magnitude_headroom(HermitianForm const & form, FormKind kind, PipelineOptions const & opt)
{
    PrecisionContext rough{20, 10, 0};
    PrecisionScope scope(rough);
    Complex v = analytic_value(form, kind, rough, opt);
    Real m = abs(v);
    if (!(m > 1))
        return 2;
    double digits = boost::multiprecision::log10(m).convert_to<double>();
    return static_cast<unsigned>(std::ceil(digits)) + 2;
}

} // namespace

ComputedValue compute_recognized(HermitianForm const & form, FormKind kind, unsigned digits,
                                 unsigned guard, PipelineOptions const & opt)
{
    if (digits < 10)
        throw domain_error("at least 10 digits are required");
    PrecisionContext ctx{digits, guard, magnitude_headroom(form, kind, opt)};
    for (int attempt = 0; attempt < 2; ++attempt) {
        PrecisionScope scope(ctx);
        try {
            Complex v = analytic_value(form, kind, ctx, opt);
            return {recognize_quadint(v, form.disc(), ctx), ctx, attempt > 0};
        } catch (recognition_error const &) {
            if (attempt == 1)
                throw;
        } catch (precision_error const &) {
            if (attempt == 1)
                throw;
        }
        ctx = ctx.doubled();
    }
    throw recognition_error("unreachable");
}

} // namespace cmtheta
