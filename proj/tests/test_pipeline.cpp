#include <doctest.h>

#include "cmtheta/pipeline.hpp"
#include "support.hpp"

using namespace cmtheta;

namespace {

Real rel(Complex const & x, Complex const & y) { return abs(x - y) / abs(y); }

Int power(long b, unsigned long e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

} // namespace

TEST_CASE("chi18 for d = 7 and d = 19")
{
    auto v7 = compute_recognized(catalog_lookup(7, 1).form, FormKind::chi18, 50);
    CHECK(v7.value.exact == QuadInt(power(7, 14), Discriminant(7)));
    CHECK(v7.value.residual < ten_to_minus(25));
    CHECK_FALSE(v7.retried);
    auto v19 = compute_recognized(catalog_lookup(19, 1).form, FormKind::chi18, 50);
    CHECK(v19.value.exact.a() == -power(2, 11) * power(19, 14));
    CHECK(*square_class(v19.value) == -2);
}

TEST_CASE("pipeline stages for d = 7")
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    PipelineTrace tr = run_pipeline(catalog_lookup(7, 1).form, FormKind::chi18, ctx);
    CHECK(tr.b * tr.t * tr.b.transpose() == standard_symplectic(3));
    CHECK(is_riemann_matrix(tr.riemann.tau, ctx));
    CHECK(is_riemann_matrix(tr.reduced.tau, ctx));
    CHECK(is_symplectic(tr.reduced.b));
    CHECK(rel(tr.value, Complex(real_from(power(7, 14)))) < ten_to_minus(45));
}

TEST_CASE("every catalog chi18 is recognized")
{
    for (auto const & e : form_catalog()) {
        INFO(e.d << "#" << e.index);
        QuadInt want = parse_quad_expression(e.expected_chi, Discriminant(e.d));
        auto v = compute_recognized(e.form, FormKind::chi18, 50);
        CHECK(v.value.exact == want);
        CHECK(v.value.residual < ten_to_minus(25));
    }
}

TEST_CASE("conjugate embedding conjugates the value")
{
    PipelineOptions conj;
    conj.embedding = Embedding::conjugate;
    for (auto [d, i] : {std::pair{43L, 4}, std::pair{67L, 1}}) {
        auto const & form = catalog_lookup(d, i).form;
        auto a = compute_recognized(form, FormKind::chi18, 40);
        auto b = compute_recognized(form, FormKind::chi18, 40, 15, conj);
        CHECK(b.value.exact == a.value.exact.conj());
        CHECK_FALSE(a.value.exact.is_rational());
    }
}

TEST_CASE("gauge independence")
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    std::mt19937_64 rng(99);
    for (long d : {7L, 19L}) {
        auto const & form = catalog_lookup(d, 1).form;
        Complex base = analytic_value(form, FormKind::chi18, ctx);
        for (int k = 0; k < 10; ++k) {
            PipelineOptions opt;
            opt.gauge = test::random_symplectic(rng, 3, 5);
            CHECK(rel(analytic_value(form, FormKind::chi18, ctx, opt), base) < ten_to_minus(35));
        }
    }
}

TEST_CASE("precision doubling keeps 35 digits")
{
    PrecisionContext lo{50}, hi{100};
    for (auto const & e : form_catalog()) {
        INFO(e.d << "#" << e.index);
        PrecisionScope s(hi);
        Complex a = analytic_value(e.form, FormKind::chi18, lo);
        Complex b = analytic_value(e.form, FormKind::chi18, hi);
        CHECK(rel(a, b) < ten_to_minus(35));
    }
}

TEST_CASE("Sigma140 integers")
{
    Int s7 = 4 * 27 * 5 * power(7, 105) * 13 * 67;
    Int s19 = power(2, 92) * 27 * power(19, 105) * 29 * 31;
    Int s43 = -power(2, 94) * 27 * 5 * power(43, 105) * 827 * 888001 *
              parse_int("2458861813949") *
              parse_int("96551756361358517199893386077757285219636855141244663");

    auto v7 = compute_recognized(catalog_lookup(7, 1).form, FormKind::sigma140, 50);
    CHECK(v7.value.exact.a() == s7);
    CHECK(v7.value.exact.b() == 0);
    CHECK(v7.value.rational_factorization->to_string() == "2^2*3^3*5*7^105*13*67");

    auto v19 = compute_recognized(catalog_lookup(19, 1).form, FormKind::sigma140, 50);
    CHECK(v19.value.exact.a() == s19);

    auto v43 = compute_recognized(catalog_lookup(43, 1).form, FormKind::sigma140, 50);
    CHECK(v43.value.exact.a() == s43);
    auto const & f = *v43.value.rational_factorization;
    CHECK(f.cofactor == parse_int("96551756361358517199893386077757285219636855141244663"));
    CHECK(f.cofactor_probable_prime);

    PipelineOptions display;
    display.normalization = SigmaNormalization::display;
    auto d7 = compute_recognized(catalog_lookup(7, 1).form, FormKind::sigma140, 50, 15, display);
    CHECK(d7.value.exact.a() == s7 * 256);
    CHECK(sigma_two_power(SigmaNormalization::raw) - sigma_two_power(SigmaNormalization::display) == 8);
}

TEST_CASE("quadratic twist scales chi18 by c^27")
{
    PrecisionContext ctx{50, 15, 20};
    PrecisionScope s(ctx);
    auto const & form = catalog_lookup(19, 1).form;
    IntMatrix b = symplectic_normalize(alternating_form(form));
    auto chi_for = [&](GrossModel const & e) {
        auto rp = riemann_matrix(build_omega0(elliptic_periods(e, ctx), 3), b, ctx);
        return chi18_geometric(rp.period, siegel_reduce(rp.tau, ctx), ctx);
    };
    GrossModel e = GrossModel::of(Discriminant(19));
    Complex base = chi_for(e);
    for (long c : {-1L, -2L, 3L}) {
        Complex twisted = chi_for(e.twisted(c));
        Complex want = base * Complex(real_from(power(std::abs(c), 27) * (c < 0 ? -1 : 1)));
        CHECK(rel(twisted, want) < ten_to_minus(40));
    }
}
