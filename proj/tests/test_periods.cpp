#include <doctest.h>

#include "cmtheta/errors.hpp"
#include "cmtheta/periods.hpp"
#include "support.hpp"

using namespace cmtheta;
using cmtheta::test::int_matrix;

namespace {

Complex tau_of(long d)
{
    return {Real("0.5"), boost::multiprecision::sqrt(Real(d)) / 2};
}

Real rel(Complex const & x, Complex const & y) { return abs(x - y) / abs(y); }

IntMatrix worked_b()
{
    return int_matrix(6, 6, {0, 1, 0, 0,  0, 0, 1, 0,  -2, 4,  0, 0, 1, 0, -2, -3, 3, 1,
                             0, 0, 0, 1,  0, 0, 0, 0,  0,  -2, 1, 0, 2, -1, -3, -2, 4, 0});
}

} // namespace

TEST_CASE("period ratio is tau_d")
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    auto p = elliptic_periods(Discriminant(7), ctx);
    Complex ratio = p.omega1 / p.omega2;
    Complex want(Real("0.5"), Real("1.3228756555322952952508078768196302128"));
    CHECK(abs(ratio - want) < ten_to_minus(36));
    for (long d : {7L, 19L, 43L, 67L, 163L}) {
        auto q = elliptic_periods(Discriminant(d), ctx);
        CHECK(abs(q.omega1 / q.omega2 - tau_of(d)) < ten_to_minus(50));
    }
}

TEST_CASE("Eisenstein invariants reproduce c4 and c6")
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    for (long d : {7L, 19L, 43L, 67L, 163L}) {
        for (long c : {1L, -2L, 5L}) {
            INFO("d = " << d << ", twist " << c);
            GrossModel e = GrossModel::of(Discriminant(d)).twisted(c);
            auto [g2, g3] = lattice_invariants(elliptic_periods(e, ctx));
            Complex want2(real_from(e.c4()) / 12), want3(real_from(e.c6()) / 216);
            CHECK(rel(g2, want2) < ten_to_minus(45));
            CHECK(rel(g3, want3) < ten_to_minus(45));
        }
    }
}

TEST_CASE("Gross models")
{
    for (long d : {7L, 19L, 43L, 67L, 163L}) {
        GrossModel e = GrossModel::of(Discriminant(d));
        CHECK(e.discriminant() == -Int(d) * d * d);
        CHECK(1728 * e.discriminant() == e.c4() * e.c4() * e.c4() - e.c6() * e.c6());
        GrossModel t = e.twisted(-2);
        CHECK(t.c4() == 4 * e.c4());
        CHECK(t.c6() == -8 * e.c6());
    }
}

TEST_CASE("Omega0")
{
    PrecisionContext ctx{30};
    PrecisionScope s(ctx);
    auto p = elliptic_periods(Discriminant(7), ctx);
    ComplexMatrix o = build_omega0(p, 3);
    CHECK(o.rows() == 3);
    CHECK(o.cols() == 6);
    CHECK(o(1, 1) == p.omega1);
    CHECK(o(1, 4) == p.omega2);
    CHECK(o(0, 1) == Complex());
    ComplexMatrix o1 = build_omega0(p, 1);
    CHECK(o1(0, 0) == p.omega1);
    CHECK(o1(0, 1) == p.omega2);
}

TEST_CASE("alternating form of the d = 7 form")
{
    IntMatrix t = alternating_form(catalog_lookup(7, 1).form);
    IntMatrix want = int_matrix(6, 6, {0,  0,  0,  2, 1, 1, 0,  0,  2,  1, 2, 1,
                                       0,  -2, 0,  1, 0, 2, -2, -1, -1, 0, 0, 0,
                                       -1, -2, 0,  0, 0, 1, -1, -1, -2, 0, -1, 0});
    CHECK(t == want);
    CHECK(alternating_form(HermitianForm::identity(Discriminant(43), 3)) == standard_symplectic(3));
    for (auto const & e : form_catalog()) {
        IntMatrix a = alternating_form(e.form);
        CHECK(int_det(a) == 1);
        CHECK(a.transpose() == IntMatrix(6, 6, Int(0)) - a);
        IntMatrix c = alternating_form(e.form, Embedding::conjugate);
        CHECK(c == alternating_form(e.form.conj()));
    }
}

TEST_CASE("symplectic normalization")
{
    IntMatrix j = standard_symplectic(3);
    CHECK(worked_b() * alternating_form(catalog_lookup(7, 1).form) * worked_b().transpose() == j);
    IntMatrix bj = symplectic_normalize(j);
    CHECK(bj * j * bj.transpose() == j);
    for (auto const & e : form_catalog()) {
        IntMatrix t = alternating_form(e.form);
        IntMatrix b = symplectic_normalize(t);
        CHECK(b * t * b.transpose() == j);
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int k = 0; k < 50; ++k) {
        // U J U^t for unimodular U = L R (unit triangular factors)
        IntMatrix l = int_identity(6), r = int_identity(6);
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < a; ++b) {
                l(a, b) = small(rng);
                r(b, a) = small(rng);
            }
        IntMatrix u = l * r;
        IntMatrix t = u * j * u.transpose();
        IntMatrix b = symplectic_normalize(t);
        CHECK(b * t * b.transpose() == j);
    }
    CHECK_THROWS_AS(symplectic_normalize(int_identity(6)), domain_error);
    IntMatrix two = j;
    two(0, 3) = 2;
    two(3, 0) = -2;
    CHECK_THROWS_AS(symplectic_normalize(two), domain_error);
}

TEST_CASE("Riemann matrix for the d = 7 reference basis")
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    auto p = elliptic_periods(Discriminant(7), ctx);
    auto rp = riemann_matrix(build_omega0(p, 3), worked_b(), ctx);
    REQUIRE(rp.period.b == worked_b());
    Complex t = tau_of(7);
    Complex two_thirds(Real(2) / 3);
    ComplexMatrix want = complex_zero(3, 3);
    want(0, 0) = t * Real(2);
    want(0, 1) = want(1, 0) = t;
    want(1, 1) = Complex(Real(-8) / 3) + t * (Real(2) / 3);
    want(1, 2) = want(2, 1) = two_thirds;
    want(2, 2) = Complex(Real(1) / 2) + t * (Real(1) / 6);
    CHECK(test::max_abs_diff(rp.tau, want) < ten_to_minus(45));
    CHECK(is_riemann_matrix(rp.tau, ctx));

    auto id = riemann_matrix(build_omega0(p, 3), int_identity(6), ctx);
    CHECK(test::max_abs_diff(id.tau, complex_identity(3).map([&](Complex const & x) { return x * t; })) < ten_to_minus(45));
}
