#include "cmtheta/errors.hpp"
#include "cmtheta/periods.hpp"
#include "cmtheta/siegel.hpp"

namespace cmtheta {

bool is_symplectic(IntMatrix const & b)
{
    if (!b.is_square() || b.rows() % 2 != 0)
        return false;
    IntMatrix j = standard_symplectic(b.rows() / 2);
    return b.transpose() * j * b == j;
}

ComplexMatrix symplectic_action(IntMatrix const & b, ComplexMatrix const & tau,
                                PrecisionContext const & ctx)
{
    std::size_t g = tau.rows();
    if (b.rows() != 2 * g || !b.is_square())
        throw domain_error("symplectic matrix has the wrong size");
    ComplexMatrix alpha = to_complex(b.block(0, 0, g, g)), beta = to_complex(b.block(0, g, g, g)),
                  gamma = to_complex(b.block(g, 0, g, g)), delta = to_complex(b.block(g, g, g, g));
    ComplexMatrix out = (alpha * tau + beta) * complex_inverse(gamma * tau + delta, ctx);
    if (!is_riemann_matrix(out, ctx))
        throw precision_error("symplectic action left the Siegel upper half space");
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Complex s = (out(i, j) + out(j, i)) * Real("0.5");
            out(i, j) = s;
            out(j, i) = s;
        }
    return out;
}

IntMatrix lll_gram(RealMatrix const & gram, double delta)
{
    std::size_t n = gram.rows();
    IntMatrix u = int_identity(n);
    Real dl(delta);
    auto current = [&] {
        RealMatrix um = u.map([](Int const & x) { return real_from(x); });
        return um * gram * um.transpose();
    };
    std::size_t k = 1;
    for (int guard = 0; k < n && guard < 100000; ++guard) {
        RealMatrix g = current();
        RealMatrix mu(n, n, Real(0));
        std::vector<Real> bn(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                Real s = g(i, j);
                for (std::size_t l = 0; l < j; ++l)
                    s -= mu(j, l) * mu(i, l) * bn[l];
                mu(i, j) = s / bn[j];
            }
            bn[i] = g(i, i);
            for (std::size_t l = 0; l < i; ++l)
                bn[i] -= mu(i, l) * mu(i, l) * bn[l];
        }
        for (std::size_t j = k; j-- > 0;) {
            Int r = round_to_int(mu(k, j));
            if (r == 0)
                continue;
            for (std::size_t c = 0; c < n; ++c)
                u(k, c) -= r * u(j, c);
            Real rr = real_from(r);
            for (std::size_t l = 0; l < j; ++l)
                mu(k, l) -= rr * mu(j, l);
            mu(k, j) -= rr;
        }
        if (bn[k] >= (dl - mu(k, k - 1) * mu(k, k - 1)) * bn[k - 1]) {
            ++k;
        } else {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(u(k, c), u(k - 1, c));
            k = k > 1 ? k - 1 : 1;
        }
    }
    return u;
}

namespace {

// [[U, 0], [0, U^-t]]
IntMatrix lll_block(IntMatrix const & u)
{
    std::size_t g = u.rows();
    IntMatrix s(2 * g, 2 * g, Int(0));
    s.set_block(0, 0, u);
    s.set_block(g, g, int_inverse_unimodular(u).transpose());
    return s;
}

// [[I, -S], [0, I]]
IntMatrix shift_block(IntMatrix const & shift)
{
    std::size_t g = shift.rows();
    IntMatrix s = int_identity(2 * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            s(i, g + j) = -shift(i, j);
    return s;
}

// tau -> -1/tau on the j-th diagonal entry, identity elsewhere.
IntMatrix quasi_inversion(std::size_t g, std::size_t j)
{
    IntMatrix s = int_identity(2 * g);
    s(j, j) = 0;
    s(g + j, g + j) = 0;
    s(j, g + j) = -1;
    s(g + j, j) = 1;
    return s;
}

} // namespace

ReducedPoint siegel_reduce(ComplexMatrix const & tau, PrecisionContext const & ctx,
                           unsigned max_iterations)
{
    PrecisionScope scope(ctx);
    std::size_t g = tau.rows();
    ReducedPoint out{tau, int_identity(2 * g)};
    auto apply = [&](IntMatrix const & s) {
        out.tau = symplectic_action(s, out.tau, ctx);
        out.b = s * out.b;
    };
    out.converged = false;
    for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
        RealMatrix y = imag_part(out.tau);
        IntMatrix u = lll_gram(y);
        if (!(u == int_identity(g)))
            apply(lll_block(u));

        // entries already in [-1/2, 1/2] are left alone so ties do not flip
        IntMatrix shift(g, g, Int(0));
        Real half = Real("0.5") + ten_to_minus(ctx.digits);
        bool any = false;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                if (boost::multiprecision::abs(out.tau(i, j).re) > half) {
                    shift(i, j) = round_to_int(out.tau(i, j).re);
                    any = true;
                }
        if (any)
            apply(shift_block(shift));

        std::size_t j = 0;
        while (j < g && !(abs(out.tau(j, j)) < 1))
            ++j;
        if (j == g) {
            out.converged = true;
            break;
        }
        apply(quasi_inversion(g, j));
    }
    // Recompute from the input so rounding does not accumulate over steps.
    out.tau = symplectic_action(out.b, tau, ctx);
    return out;
}

} // namespace cmtheta
