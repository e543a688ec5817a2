#include <doctest.h>

#include "cmtheta/errors.hpp"
#include "cmtheta/theta.hpp"
#include "support.hpp"

using namespace cmtheta;

namespace {

ComplexMatrix scalar(Complex const & z)
{
    ComplexMatrix m = complex_zero(1, 1);
    m(0, 0) = z;
    return m;
}

Complex theta(std::vector<int> e1, std::vector<int> e2, ComplexMatrix const & tau,
              PrecisionContext const & ctx)
{
    return theta_constant(Characteristic{std::move(e1), std::move(e2)}, tau, ctx).value;
}

Complex det_factor(IntMatrix const & b, ComplexMatrix const & tau)
{
    std::size_t g = tau.rows();
    ComplexMatrix c = to_complex(b.block(g, 0, g, g)), d = to_complex(b.block(g, g, g, g));
    return complex_det(c * tau + d);
}

} // namespace

TEST_CASE("even characteristics")
{
    auto c1 = even_characteristics(1);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0].to_string() == "[0;0]");
    CHECK(c1[1].to_string() == "[0;1]");
    CHECK(c1[2].to_string() == "[1;0]");
    CHECK(even_characteristics(2).size() == 10);
    CHECK(even_characteristics(3).size() == 36);
    for (auto const & c : even_characteristics(3))
        CHECK(c.is_even());
    CHECK_FALSE((Characteristic{{1}, {1}}.is_even()));
}

TEST_CASE("genus one values")
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    ComplexMatrix ti = scalar(Complex::i());
    Complex t00 = theta({0}, {0}, ti, ctx);
    Complex want(Real("1.0864348112133080145753161215102234570702057072452"));
    CHECK(abs(t00 - want) < ten_to_minus(48));
    Complex t01 = theta({0}, {1}, ti, ctx), t10 = theta({1}, {0}, ti, ctx);
    CHECK(abs(powi(t00, 4) - powi(t01, 4) - powi(t10, 4)) < ten_to_minus(48));
    CHECK(abs(theta({1}, {1}, ti, ctx)) < ten_to_minus(48));

    ComplexMatrix z = scalar(Complex(Real("0.31"), Real("0.77")));
    Complex a = theta({0}, {0}, z, ctx), b = theta({0}, {1}, z, ctx), c = theta({1}, {0}, z, ctx);
    CHECK(abs(powi(a, 4) - powi(b, 4) - powi(c, 4)) < ten_to_minus(45));
}

TEST_CASE("tail bounds are honest")
{
    PrecisionContext ctx{30};
    PrecisionScope s(ctx);
    std::mt19937_64 rng(3);
    ComplexMatrix tau = test::random_riemann(rng, 3);
    for (auto const & v : theta_constants(even_characteristics(3), tau, ctx))
        CHECK(v.tail_bound < ten_to_minus(35));
}

TEST_CASE("leave-one-out sum")
{
    PrecisionScope s(PrecisionContext{30});
    std::vector<Complex> x{Complex(Real(2)), Complex(Real(3)), Complex(Real(5)), Complex(Real(7))};
    // 3*5*7 + 2*5*7 + 2*3*7 + 2*3*5
    CHECK(abs(leave_one_out_sum(x) - Complex(Real(247))) < ten_to_minus(30));
    x[1] = Complex();
    CHECK(abs(leave_one_out_sum(x) - Complex(Real(70))) < ten_to_minus(30));
    x[2] = Complex();
    CHECK(abs(leave_one_out_sum(x)) < ten_to_minus(30));
}

TEST_CASE("vanishing on the decomposable locus")
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    std::mt19937_64 rng(17);
    ComplexMatrix t2 = test::random_riemann(rng, 2);
    ComplexMatrix tau = complex_zero(3, 3);
    tau(0, 0) = Complex(Real("0.2"), Real("1.1"));
    tau.set_block(1, 1, t2);
    CHECK(abs(chi18_analytic(tau, ctx)) < ten_to_minus(40));

    ComplexMatrix diag = complex_zero(3, 3);
    diag(0, 0) = Complex(Real("0.1"), Real("1.3"));
    diag(1, 1) = Complex(Real("-0.4"), Real("0.9"));
    diag(2, 2) = Complex(Real("0.25"), Real("1.05"));
    CHECK(abs(chi18_analytic(diag, ctx)) < ten_to_minus(40));
    CHECK(abs(sigma140_analytic(diag, ctx)) < ten_to_minus(40));

    CHECK(abs(chi18_analytic(test::random_riemann(rng, 3), ctx)) > ten_to_minus(10));
}

TEST_CASE("modular covariance of the theta product")
{
    PrecisionContext ctx{45};
    PrecisionScope s(ctx);
    std::mt19937_64 rng(23);
    int done = 0, skipped = 0;
    while (done < 20) {
        ComplexMatrix tau = test::random_riemann(rng, 3);
        IntMatrix b = test::random_symplectic(rng, 3, 3);
        ComplexMatrix bt = symplectic_action(b, tau, ctx);
        Real lhs, rhs;
        try {
            lhs = abs(chi18_analytic(bt, ctx));
            rhs = pow(abs(det_factor(b, tau)), 18) * abs(chi18_analytic(tau, ctx));
        } catch (precision_error const &) {
            // B.tau too close to the boundary for direct summation; draw again
            REQUIRE(++skipped < 100);
            continue;
        }
        CHECK(abs(Complex(lhs - rhs)) / rhs < ten_to_minus(35));
        ++done;
    }
}
