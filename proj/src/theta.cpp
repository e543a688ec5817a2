#include <cmath>
#include <functional>
#include <map>

#include "cmtheta/errors.hpp"
#include "cmtheta/theta.hpp"

namespace cmtheta {

int Characteristic::parity() const
{
    int s = 0;
    for (std::size_t i = 0; i < e1.size(); ++i)
        s += e1[i] * e2[i];
    return s % 2;
}

std::string Characteristic::to_string() const
{
    std::string s = "[";
    for (int x : e1)
        s += char('0' + x);
    s += ";";
    for (int x : e2)
        s += char('0' + x);
    return s + "]";
}

std::vector<Characteristic> even_characteristics(std::size_t g)
{
    std::vector<Characteristic> out;
    std::size_t n = std::size_t(1) << g;
    auto bits = [g](std::size_t v) {
        std::vector<int> b(g);
        for (std::size_t i = 0; i < g; ++i)
            b[i] = int((v >> (g - 1 - i)) & 1);
        return b;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Characteristic ch{bits(a), bits(b)};
            if (ch.is_even())
                out.push_back(std::move(ch));
        }
    return out;
}

namespace {

constexpr double kTailSplit = 0.1;

// Points x = n + c, n in Z^g, with x^t A x <= bound (A positive definite).
void enumerate_shifted(std::vector<std::vector<double>> const & a, std::vector<double> const & c,
                       double bound, std::function<void(std::vector<long> const &)> const & visit)
{
    std::size_t g = a.size();
    // x^t A x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    std::vector<std::vector<double>> q = a;
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = i + 1; j < g; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < g; ++k)
            for (std::size_t l = k; l < g; ++l)
                q[k][l] -= q[k][i] * q[i][l];
    }
    std::vector<long> n(g);
    std::vector<double> x(g);
    std::function<void(std::size_t, double)> level = [&](std::size_t i, double remaining) {
        double centre = 0;
        for (std::size_t j = i + 1; j < g; ++j)
            centre -= q[i][j] * x[j];
        double width = std::sqrt(std::max(remaining, 0.0) / q[i][i]);
        // x_i = n_i + c_i ranges over [centre - width, centre + width]
        long lo = long(std::ceil(centre - width - c[i] - 1e-9));
        long hi = long(std::floor(centre + width - c[i] + 1e-9));
        for (long v = lo; v <= hi; ++v) {
            n[i] = v;
            x[i] = double(v) + c[i];
            double t = x[i] - centre;
            double rest = remaining - q[i][i] * t * t;
            if (rest < -1e-9 * (1 + bound))
                continue;
            if (i == 0)
                visit(n);
            else
                level(i - 1, rest);
        }
    };
    level(g - 1, bound);
}

} // namespace

std::vector<ThetaValue> theta_constants(std::vector<Characteristic> const & chars,
                                        ComplexMatrix const & tau, PrecisionContext const & ctx,
                                        ThetaOptions const & opt)
{
    PrecisionScope scope(ctx);
    std::size_t g = tau.rows();
    for (auto const & ch : chars)
        if (ch.e1.size() != g || ch.e2.size() != g)
            throw domain_error("characteristic does not match the genus");

    RealMatrix y = imag_part(tau);
    Real lambda = symmetric_eigenvalues(y).front();
    if (!(lambda > 0))
        throw domain_error("Im tau is not positive definite");
    double lam = lambda.convert_to<double>();
    double digits = double(ctx.working() + opt.extra_digits);
    double spread = double(g) * std::log1p(1 / std::sqrt(kTailSplit * lam));
    double bound = (digits * std::log(10.0) + spread) / (1 - kTailSplit);
    double radius = std::sqrt(bound / (M_PI * lam));
    if (radius > opt.max_radius)
        throw precision_error("theta truncation radius " + std::to_string(radius) +
                              " exceeds the cap; reduce tau first");
    Real tail = boost::multiprecision::exp(Real(-(1 - kTailSplit) * bound) + Real(spread));

    std::vector<std::vector<double>> a(g, std::vector<double>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            a[i][j] = M_PI * ((y(i, j) + y(j, i)) / 2).convert_to<double>();

    // quarter of tau: Q(m) = sum k_i k_j tau_ij / 4 with k = 2m
    ComplexMatrix t4 = tau;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            t4(i, j) = tau(i, j) * Real("0.25");
    Complex i_pi(Real(0), const_pi());

    std::vector<ThetaValue> out(chars.size());
    std::map<std::vector<int>, std::vector<std::size_t>> by_e1;
    for (std::size_t k = 0; k < chars.size(); ++k)
        by_e1[chars[k].e1].push_back(k);

    for (auto const & [e1, members] : by_e1) {
        std::vector<double> c(g);
        for (std::size_t i = 0; i < g; ++i)
            c[i] = e1[i] / 2.0;
        std::vector<Complex> sums(members.size());
        enumerate_shifted(a, c, bound * (1 + 1e-12) + 1e-9, [&](std::vector<long> const & n) {
            std::vector<long> k(g);
            for (std::size_t i = 0; i < g; ++i)
                k[i] = 2 * n[i] + e1[i];
            Complex q;
            for (std::size_t i = 0; i < g; ++i) {
                q += t4(i, i) * Real(k[i] * k[i]);
                for (std::size_t j = i + 1; j < g; ++j)
                    q += t4(i, j) * Real(2 * k[i] * k[j]);
            }
            Complex term = exp(i_pi * q);
            for (std::size_t s = 0; s < members.size(); ++s) {
                auto const & e2 = chars[members[s]].e2;
                long dot = 0;
                for (std::size_t i = 0; i < g; ++i)
                    dot += n[i] * e2[i];
                if (dot % 2 == 0)
                    sums[s] += term;
                else
                    sums[s] -= term;
            }
        });
        for (std::size_t s = 0; s < members.size(); ++s) {
            auto const & ch = chars[members[s]];
            // i^(e1.e2)
            int r = 0;
            for (std::size_t i = 0; i < g; ++i)
                r += ch.e1[i] * ch.e2[i];
            Complex v = sums[s];
            switch (r % 4) {
            case 1: v = Complex(-v.im, v.re); break;
            case 2: v = -v; break;
            case 3: v = Complex(v.im, -v.re); break;
            default: break;
            }
            out[members[s]] = {v, tail};
        }
    }
    return out;
}

ThetaValue theta_constant(Characteristic const & ch, ComplexMatrix const & tau,
                          PrecisionContext const & ctx, ThetaOptions const & opt)
{
    return theta_constants({ch}, tau, ctx, opt).front();
}

namespace {

std::vector<Complex> even_thetas(ComplexMatrix const & tau, PrecisionContext const & ctx)
{
    if (tau.rows() != 3)
        throw domain_error("chi18 and Sigma140 are defined here for genus 3");
    auto values = theta_constants(even_characteristics(3), tau, ctx);
    std::vector<Complex> out;
    for (auto & v : values)
        out.push_back(std::move(v.value));
    return out;
}

Complex product(std::vector<Complex> const & x)
{
    Complex p(Real(1));
    for (auto const & v : x)
        p *= v;
    return p;
}

std::vector<Complex> eighth_powers(std::vector<Complex> const & x)
{
    std::vector<Complex> out;
    for (auto const & v : x)
        out.push_back(powi(v, 8));
    return out;
}

Complex reduced_det(PeriodMatrix const & omega, ReducedPoint const & reduced)
{
    ComplexMatrix moved = omega.omega * to_complex(reduced.b.transpose());
    std::size_t g = moved.rows();
    return complex_det(moved.block(0, g, g, g));
}

} // namespace

Complex leave_one_out_sum(std::vector<Complex> const & x)
{
    std::size_t n = x.size();
    if (n == 0)
        return {};
    std::vector<Complex> prefix(n + 1, Complex(Real(1))), suffix(n + 1, Complex(Real(1)));
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] * x[i];
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = suffix[i + 1] * x[i];
    Complex s;
    for (std::size_t j = 0; j < n; ++j)
        s += prefix[j] * suffix[j + 1];
    return s;
}

Complex chi18_analytic(ComplexMatrix const & tau, PrecisionContext const & ctx)
{
    PrecisionScope scope(ctx);
    return product(even_thetas(tau, ctx));
}

Complex sigma140_analytic(ComplexMatrix const & tau, PrecisionContext const & ctx)
{
    PrecisionScope scope(ctx);
    return leave_one_out_sum(eighth_powers(even_thetas(tau, ctx)));
}

Complex chi18_geometric(PeriodMatrix const & omega, ReducedPoint const & reduced,
                        PrecisionContext const & ctx)
{
    PrecisionScope scope(ctx);
    Real pi = const_pi();
    Real scale = boost::multiprecision::pow(pi, 54) * boost::multiprecision::pow(Real(2), 26);
    Complex theta = chi18_analytic(reduced.tau, ctx);
    return theta * scale / powi(reduced_det(omega, reduced), 18);
}

unsigned sigma_two_power(SigmaNormalization n)
{
    return n == SigmaNormalization::display ? 208 : 216;
}

std::string to_string(SigmaNormalization n)
{
    return n == SigmaNormalization::display ? "paper-display" : "lemma-45-raw";
}

SigmaNormalization parse_sigma_normalization(std::string const & s)
{
    if (s == "paper-display")
        return SigmaNormalization::display;
    if (s == "lemma-45-raw")
        return SigmaNormalization::raw;
    throw domain_error("unknown normalization '" + s + "'");
}

Complex sigma140_geometric(PeriodMatrix const & omega, ReducedPoint const & reduced,
                           PrecisionContext const & ctx, SigmaNormalization n)
{
    PrecisionScope scope(ctx);
    // weight 140 in genus 3: (2 pi)^(3 * 140)
    Real two_pi = 2 * const_pi();
    Real scale = boost::multiprecision::pow(two_pi, 420) /
                 boost::multiprecision::pow(Real(2), sigma_two_power(n));
    Complex s = sigma140_analytic(reduced.tau, ctx);
    return s * scale / powi(reduced_det(omega, reduced), 140);
}

} // namespace cmtheta
