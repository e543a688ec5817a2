#include <algorithm>
#include <array>
#include <random>

#include "cmtheta/errors.hpp"
#include "cmtheta/periods.hpp"

namespace cmtheta {

GrossModel GrossModel::of(Discriminant d)
{
    Int dd = d.value();
    switch (d.value()) {
    case 7:
        return {d, 1, -1, 0, -2, -1};
    case 19:
        return {d, 0, 0, 1, -2 * dd, (dd * dd - 1) / 4};
    case 43:
        return {d, 0, 0, 1, -4 * 5 * dd, (3 * 7 * dd * dd - 1) / 4};
    case 67:
        return {d, 0, 0, 1, -2 * 5 * 11 * dd, (7 * 31 * dd * dd - 1) / 4};
    case 163:
        return {d, 0, 0, 1, -4 * 5 * 23 * 29 * dd, (7 * 11 * 19 * 127 * dd * dd - 1) / 4};
    default:
        throw unsupported_error("no Gross model for d = " + std::to_string(d.value()));
    }
}

GrossModel GrossModel::twisted(Int const & c) const
{
    if (c == 0)
        throw domain_error("twist by zero");
    GrossModel m = *this;
    m.twist *= c;
    return m;
}

Int GrossModel::b2() const { return (a1 * a1 + 4 * a2) * twist; }
Int GrossModel::b4() const { return (2 * a4 + a1 * a3) * twist * twist; }
Int GrossModel::b6() const { return (a3 * a3 + 4 * a6) * int_pow(twist, 3); }

Int GrossModel::b8() const
{
    Int b = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return b * int_pow(twist, 4);
}

Int GrossModel::c4() const { return b2() * b2() - 24 * b4(); }
Int GrossModel::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }

Int GrossModel::discriminant() const
{
    Int B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

namespace {

// Roots of 4x^3 + b2 x^2 + 2 b4 x + b6 (Durand-Kerner, then Newton polish).
std::array<Complex, 3> cubic_roots(GrossModel const & model)
{
    Real c2 = real_from(model.b2()) / 4, c1 = real_from(model.b4()) / 2,
         c0 = real_from(model.b6()) / 4;
    auto f = [&](Complex const & x) { return ((x + Complex(c2)) * x + Complex(c1)) * x + Complex(c0); };
    auto df = [&](Complex const & x) {
        return (Complex(Real(3)) * x + Complex(Real(2) * c2)) * x + Complex(c1);
    };
    Real scale = 1 + boost::multiprecision::abs(c2) + boost::multiprecision::abs(c1) +
                 boost::multiprecision::abs(c0);
    Complex seed(Real("0.4"), Real("0.9"));
    std::array<Complex, 3> z = {Complex(Real(1)), seed, seed * seed};
    for (auto & r : z)
        r = r * scale;
    Real eps = ten_to_minus(static_cast<long>(Real::default_precision()) - 3);
    for (int it = 0; it < 2000; ++it) {
        Real change = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            Complex den(Real(1));
            for (std::size_t j = 0; j < 3; ++j)
                if (j != i)
                    den *= z[i] - z[j];
            Complex step = f(z[i]) / den;
            z[i] -= step;
            change = std::max(change, abs(step) / (1 + abs(z[i])));
        }
        if (change < eps)
            break;
    }
    for (auto & r : z)
        for (int it = 0; it < 3; ++it)
            r -= f(r) / df(r);
    return z;
}

Complex agm(Complex a, Complex b)
{
    Real eps = ten_to_minus(static_cast<long>(Real::default_precision()) - 5);
    for (int it = 0; it < 10000; ++it) {
        Complex m = (a + b) * Real("0.5");
        Complex g = sqrt(a * b);
        if (norm(m - g) > norm(m + g))
            g = -g;
        a = std::move(m);
        b = std::move(g);
        if (abs(a - b) <= eps * abs(a))
            return a;
    }
    throw precision_error("AGM did not converge");
}

// Cremona-Thongjunthug: with a = sqrt(e1 - e3), b = sqrt(e1 - e2),
// c = sqrt(e2 - e3) and right choices of signs, pi / M(a, b) and
// pi i / M(a, c) generate the lattice of dx / y for y^2 = 4 prod (x - e_i).
EllipticPeriods agm_periods(Complex const & e1, Complex const & e2, Complex const & e3)
{
    Complex a = sqrt(e1 - e3), b = sqrt(e1 - e2), c = sqrt(e2 - e3);
    if (norm(a - b) > norm(a + b))
        b = -b;
    if (norm(a - c) > norm(a + c))
        c = -c;
    Complex pi(const_pi());
    Complex w1 = pi / agm(a, b), w2 = pi * Complex::i() / agm(a, c);
    if ((w1 / w2).im < 0)
        w1 = -w1;
    return {w1, w2};
}

// SL2(Z) reduction of omega1 / omega2 to the standard fundamental domain,
// then the shift putting Re on +1/2.
EllipticPeriods gauss_reduce(EllipticPeriods p)
{
    for (int it = 0; it < 10000; ++it) {
        Complex t = p.omega1 / p.omega2;
        Int n = round_to_int(t.re);
        if (n != 0) {
            p.omega1 -= p.omega2 * real_from(n);
            t = p.omega1 / p.omega2;
        }
        if (norm(t) < 1) {
            Complex w1 = -p.omega2;
            p.omega2 = p.omega1;
            p.omega1 = std::move(w1);
            continue;
        }
        if ((t.re + Real("0.5")) < ten_to_minus(10))
            p.omega1 += p.omega2;
        return p;
    }
    throw precision_error("period reduction did not terminate");
}

} // namespace

std::pair<Complex, Complex> lattice_invariants(EllipticPeriods const & p)
{
    Complex tau = p.omega1 / p.omega2;
    Real pi = const_pi();
    Complex q = exp(Complex(Real(0), 2 * pi) * tau);
    Real eps = ten_to_minus(static_cast<long>(Real::default_precision()) + 2);
    Complex s3, s5, qn(Real(1));
    for (long n = 1; n < 100000; ++n) {
        qn *= q;
        Complex lam = qn / (Complex(Real(1)) - qn);
        Real n3 = Real(n) * n * n;
        s3 += lam * n3;
        s5 += lam * (n3 * n * n);
        if (abs(qn) * n3 * n * n < eps)
            break;
    }
    Complex e4 = Complex(Real(1)) + s3 * Real(240);
    Complex e6 = Complex(Real(1)) - s5 * Real(504);
    Real pi2 = pi * pi;
    Complex g2 = e4 * (4 * pi2 * pi2 / 3) / powi(p.omega2, 4);
    Complex g3 = e6 * (8 * pi2 * pi2 * pi2 / 27) / powi(p.omega2, 6);
    return {g2, g3};
}

EllipticPeriods elliptic_periods(GrossModel const & model, PrecisionContext const & ctx)
{
    // The cubic is nearly degenerate when j is large; work with as many extra
    // digits as the invariants have, then round back.
    Int size = abs(model.c4()) + abs(model.c6()) + abs(model.b6());
    unsigned extra = 10 + static_cast<unsigned>(size.get_str().size());
    EllipticPeriods found;
    {
        PrecisionScope scope(ctx.working() + extra);
        auto roots = cubic_roots(model);
        std::sort(roots.begin(), roots.end(),
                  [](Complex const & x, Complex const & y) { return x.re > y.re; });
        Real sd = boost::multiprecision::sqrt(Real(model.d.value()));
        Complex tau_d(Real("0.5"), sd / 2);
        Real tol = ten_to_minus(ctx.working());
        Complex g2_exact(real_from(model.c4()) / 12), g3_exact(real_from(model.c6()) / 216);

        bool ok = false;
        std::array<int, 3> perm = {0, 1, 2};
        do {
            EllipticPeriods p =
                gauss_reduce(agm_periods(roots[perm[0]], roots[perm[1]], roots[perm[2]]));
            if (!(abs(p.omega1 / p.omega2 - tau_d) < tol))
                continue;
            auto [g2, g3] = lattice_invariants(p);
            if (abs(g2 - g2_exact) < tol * (1 + abs(g2_exact)) &&
                abs(g3 - g3_exact) < tol * (1 + abs(g3_exact))) {
                found = p;
                ok = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!ok)
            throw precision_error("period lattice of E(" + std::to_string(model.d.value()) +
                                  ") could not be normalized to tau_d");
    }
    PrecisionScope scope(ctx);
    return {rounded(found.omega1), rounded(found.omega2)};
}

EllipticPeriods elliptic_periods(Discriminant d, PrecisionContext const & ctx)
{
    return elliptic_periods(GrossModel::of(d), ctx);
}

ComplexMatrix build_omega0(EllipticPeriods const & p, std::size_t g)
{
    if (g == 0)
        throw domain_error("dimension must be positive");
    ComplexMatrix out = complex_zero(g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        out(i, i) = p.omega1;
        out(i, g + i) = p.omega2;
    }
    return out;
}

IntMatrix alternating_form(HermitianForm const & form, Embedding e)
{
    HermitianForm m = e == Embedding::standard ? form : form.conj();
    std::size_t g = m.dim();
    Int n = m.disc().tau_norm();
    IntMatrix t(2 * g, 2 * g, Int(0));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            t(i, j) = -n * m(i, j).b();
            t(i, g + j) = m(i, j).a();
            t(g + j, i) = -m(i, j).a();
            t(g + i, g + j) = -m(i, j).b();
        }
    return t;
}

namespace {

using Vec = std::vector<Int>;

Int pairing(IntMatrix const & t, Vec const & x, Vec const & y)
{
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        Int row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            row += t(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

void axpy(Vec & y, Int const & a, Vec const & x)
{
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += a * x[i];
}

} // namespace

IntMatrix symplectic_normalize(IntMatrix const & t)
{
    std::size_t n = t.rows();
    if (!t.is_square() || n % 2 != 0)
        throw domain_error("alternating form must be square of even size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (t(i, j) != -t(j, i))
                throw domain_error("form is not alternating");
    if (int_det(t) != 1)
        throw domain_error("alternating form is not unimodular");

    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n, Int(0));
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    std::vector<Vec> es, fs;
    while (!rows.empty()) {
        Vec e = rows.front();
        std::vector<Vec> rest(rows.begin() + 1, rows.end());
        // Euclid on the pairings <e, r> until a single one is left non-zero.
        std::size_t keep = 0;
        while (true) {
            std::vector<Int> p;
            std::vector<std::size_t> nz;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                p.push_back(pairing(t, e, rest[k]));
                if (p.back() != 0)
                    nz.push_back(k);
            }
            if (nz.empty())
                throw domain_error("degenerate alternating form");
            if (nz.size() == 1) {
                keep = nz[0];
                if (abs(p[keep]) != 1)
                    throw domain_error("alternating form is not unimodular");
                if (p[keep] < 0)
                    for (auto & x : rest[keep])
                        x = -x;
                break;
            }
            std::size_t k = *std::min_element(nz.begin(), nz.end(), [&](auto x, auto y) {
                return abs(p[x]) < abs(p[y]);
            });
            for (std::size_t j : nz)
                if (j != k) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), p[j].get_mpz_t(), p[k].get_mpz_t());
                    axpy(rest[j], -q, rest[k]);
                }
        }
        Vec f = rest[keep];
        std::vector<Vec> next;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (k == keep)
                continue;
            Vec o = rest[k];
            Int of = pairing(t, o, f), oe = pairing(t, o, e);
            axpy(o, -of, e);
            axpy(o, oe, f);
            next.push_back(std::move(o));
        }
        es.push_back(std::move(e));
        fs.push_back(std::move(f));
        rows = std::move(next);
    }
    IntMatrix b(n, n, Int(0));
    std::size_t g = n / 2;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            b(i, j) = es[i][j];
            b(g + i, j) = fs[i][j];
        }
    return b;
}

ComplexMatrix PeriodMatrix::omega1() const { return omega.block(0, 0, omega.rows(), omega.rows()); }

ComplexMatrix PeriodMatrix::omega2() const
{
    return omega.block(0, omega.rows(), omega.rows(), omega.rows());
}

bool is_riemann_matrix(ComplexMatrix const & tau, PrecisionContext const & ctx)
{
    if (!tau.is_square())
        return false;
    Real scale = 1 + inf_norm(tau);
    Real tol = ten_to_minus(ctx.digits) * scale;
    for (std::size_t i = 0; i < tau.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(abs(tau(i, j) - tau(j, i)) < tol))
                return false;
    RealMatrix y = imag_part(tau);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Real s = (y(i, j) + y(j, i)) / 2;
            y(i, j) = s;
            y(j, i) = s;
        }
    return symmetric_eigenvalues(y).front() > 0;
}

RiemannPoint riemann_matrix(ComplexMatrix const & omega0, IntMatrix const & b,
                            PrecisionContext const & ctx, std::uint64_t seed)
{
    PrecisionScope scope(ctx);
    std::size_t g = omega0.rows();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(-1, 1);
    IntMatrix bb = b;
    for (int attempt = 0; attempt <= 20; ++attempt) {
        ComplexMatrix omega = omega0 * to_complex(bb.transpose());
        PeriodMatrix pm{omega, bb};
        try {
            ComplexMatrix tau = complex_inverse(pm.omega2(), ctx) * pm.omega1();
            if (!is_riemann_matrix(tau, ctx))
                throw precision_error("Omega2^-1 Omega1 is not a Riemann matrix");
            return {pm, tau};
        } catch (precision_error const &) {
            if (attempt == 20)
                throw;
        }
        // B <- S B with S = [[I, E], [0, I]] or [[I, 0], [E, I]], E symmetric.
        IntMatrix s = int_identity(2 * g);
        bool upper = attempt % 2 == 0;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i; j < g; ++j) {
                int v = coin(rng);
                if (upper) {
                    s(i, g + j) = v;
                    s(j, g + i) = v;
                } else {
                    s(g + i, j) = v;
                    s(g + j, i) = v;
                }
            }
        bb = s * bb;
    }
    throw precision_error("no invertible Omega2 found");
}

} // namespace cmtheta
