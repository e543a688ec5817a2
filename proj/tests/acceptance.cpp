// Acceptance run: one PASS/FAIL line per criterion.
// Exit status is 0 when every failing criterion is listed in known_unattainable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cmtheta/errors.hpp"
#include "cmtheta/obstruction.hpp"
#include "support.hpp"

using namespace cmtheta;
using Clock = std::chrono::steady_clock;

namespace {

// The displayed worked-example tau_a differs from Omega2^-1 Omega1 for the
// displayed B in two entries (see README, "Worked example").
std::set<int> const known_unattainable{4};

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Real rel(Complex const & x, Complex const & y) { return abs(x - y) / abs(y); }

Int power(long b, unsigned long e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

RunConfig uncached()
{
    RunConfig c;
    c.cache_path.clear();
    return c;
}

void tables(Outcome & o)
{
    ValueProvider values(uncached());
    int exact = 0, conj = 0, bad = 0;
    double worst_time = 0;
    Real worst_residual = 0;
    for (auto const & e : form_catalog()) {
        auto t0 = Clock::now();
        auto rows = reproduce_tables(values, [&](CatalogEntry const & x) {
            return x.d == e.d && x.index == e.index;
        });
        worst_time = std::max(worst_time, seconds_since(t0));
        auto const & r = rows.at(0);
        if (r.match == "exact")
            ++exact;
        else if (r.match == "conjugate")
            ++conj;
        else {
            ++bad;
            o.detail << " [" << r.d << "#" << r.form << " " << r.match << "]";
        }
        if (r.computed) {
            PrecisionScope s(PrecisionContext{20});
            worst_residual = std::max(worst_residual, Real(r.residual));
        }
    }
    o.pass = bad == 0 && worst_residual < ten_to_minus(25) && worst_time < 120;
    o.detail << " " << exact + conj << "/" << form_catalog().size() << " chi values (exact "
             << exact << ", conjugate " << conj << "), max residual "
             << to_string(worst_residual, 2) << ", slowest entry " << worst_time << " s";
}

void sigma(Outcome & o)
{
    Int s43 = -power(2, 94) * 27 * 5 * power(43, 105) * 827 * 888001 *
              parse_int("2458861813949") *
              parse_int("96551756361358517199893386077757285219636855141244663");
    struct Case
    {
        long d;
        Int want;
    } cases[] = {{7, 4 * 27 * 5 * power(7, 105) * 13 * 67},
                 {19, power(2, 92) * 27 * power(19, 105) * 29 * 31},
                 {43, s43}};
    int ok = 0;
    for (auto const & c : cases) {
        auto v = compute_recognized(catalog_lookup(c.d, 1).form, FormKind::sigma140, 50);
        bool match = v.value.exact.is_rational() && v.value.exact.a() == c.want;
        if (c.d == 43 && match)
            match = v.value.rational_factorization->cofactor ==
                    parse_int("96551756361358517199893386077757285219636855141244663");
        ok += match;
        o.detail << " " << c.d << "#1 " << (match ? "ok" : "MISMATCH");
    }
    o.pass = ok == 3;
}

void decisions(Outcome & o)
{
    ValueProvider values(uncached());
    int ok = 0;
    double worst = 0;
    for (long q : {47L, 61L, 137L, 277L, 12167L, 311L}) {
        auto t0 = Clock::now();
        OptimalReport r = decide_optimal(values, q);
        worst = std::max(worst, seconds_since(t0));
        bool want_optimal = q != 311;
        bool match = want_optimal ? r.optimal_exists == Existence::yes
                                  : r.optimal_exists == Existence::no &&
                                        r.minimal_exists == Existence::yes;
        ok += match;
        o.detail << " q=" << q << ":" << to_string(r.optimal_exists) << "/"
                 << to_string(r.minimal_exists);
    }
    o.pass = ok == 6;
    o.detail << " (optimal/minimal; slowest cold q " << worst << " s)";
}

void worked_example(Outcome & o)
{
    IntMatrix t = alternating_form(catalog_lookup(7, 1).form);
    IntMatrix t_want = test::int_matrix(6, 6, {0,  0,  0,  2, 1, 1, 0,  0,  2,  1, 2, 1,
                                               0,  -2, 0,  1, 0, 2, -2, -1, -1, 0, 0, 0,
                                               -1, -2, 0,  0, 0, 1, -1, -1, -2, 0, -1, 0});
    IntMatrix b = test::int_matrix(6, 6, {0, 1, 0, 0,  0, 0, 1, 0,  -2, 4,  0, 0,
                                          1, 0, -2, -3, 3, 1, 0, 0, 0,  1,  0, 0,
                                          0, 0, 0, -2, 1, 0, 2, -1, -3, -2, 4, 0});
    bool t_ok = t == t_want;
    bool b_ok = b * t * b.transpose() == standard_symplectic(3);

    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    auto p = elliptic_periods(Discriminant(7), ctx);
    auto rp = riemann_matrix(build_omega0(p, 3), b, ctx);
    Complex tau(Real("0.5"), boost::multiprecision::sqrt(Real(7)) / 2);
    auto frac = [](long a, long c) { return Complex(Real(a) / c); };
    // as displayed
    ComplexMatrix shown = complex_zero(3, 3);
    shown(0, 0) = tau * Real(2);
    shown(0, 1) = shown(1, 0) = tau;
    shown(1, 1) = frac(-3, 1) + tau * (Real(2) / 3);
    shown(1, 2) = shown(2, 1) = frac(2, 3);
    shown(2, 2) = tau * (Real(1) / 6);
    // Omega2^-1 Omega1, exact
    ComplexMatrix exact = shown;
    exact(1, 1) = frac(-8, 3) + tau * (Real(2) / 3);
    exact(2, 2) = frac(1, 2) + tau * (Real(1) / 6);

    int agree = 0;
    std::ostringstream off;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (abs(rp.tau(i, j) - shown(i, j)) < ten_to_minus(40))
                ++agree;
            else
                off << " (" << i + 1 << "," << j + 1 << ") off by "
                    << to_string(abs(rp.tau(i, j) - shown(i, j)), 3);
        }
    bool exact_ok = test::max_abs_diff(rp.tau, exact) < ten_to_minus(45);
    o.pass = t_ok && b_ok && agree == 9;
    o.detail << " T " << (t_ok ? "matches" : "MISMATCH") << "; B T B^t = J "
             << (b_ok ? "holds" : "FAILS") << "; tau_a vs displayed: " << agree << "/9 entries"
             << off.str() << "; tau_a vs exact Omega2^-1 Omega1 "
             << (exact_ok ? "within 1e-45" : "MISMATCH");
}

void automorphism_orders(Outcome & o)
{
    int ok = 0;
    for (auto const & e : form_catalog()) {
        bool m = automorphism_order(e.form) == e.automorphism_order;
        ok += m;
        if (!m)
            o.detail << " [" << e.d << "#" << e.index << "]";
    }
    o.pass = ok == int(form_catalog().size());
    o.detail << " " << ok << "/" << form_catalog().size() << " orders (7#1: "
             << automorphism_order(catalog_lookup(7, 1).form) << ", 19#1: "
             << automorphism_order(catalog_lookup(19, 1).form) << ", 43#1: "
             << automorphism_order(catalog_lookup(43, 1).form) << ")";
}

bool gauge_independence()
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
            if (!(rel(analytic_value(form, FormKind::chi18, ctx, opt), base) < ten_to_minus(35)))
                return false;
        }
    }
    return true;
}

bool covariance()
{
    PrecisionContext ctx{45};
    PrecisionScope s(ctx);
    std::mt19937_64 rng(23);
    int done = 0, skipped = 0;
    while (done < 20) {
        ComplexMatrix tau = test::random_riemann(rng, 3);
        IntMatrix b = test::random_symplectic(rng, 3, 3);
        ComplexMatrix c = to_complex(b.block(3, 0, 3, 3)), d = to_complex(b.block(3, 3, 3, 3));
        try {
            Real lhs = abs(chi18_analytic(symplectic_action(b, tau, ctx), ctx));
            Real rhs = pow(abs(complex_det(c * tau + d)), 18) * abs(chi18_analytic(tau, ctx));
            if (!(abs(Complex(lhs - rhs)) / rhs < ten_to_minus(35)))
                return false;
            ++done;
        } catch (precision_error const &) {
            if (++skipped > 100)
                return false;
        }
    }
    return true;
}

bool decomposable()
{
    PrecisionContext ctx{50};
    PrecisionScope s(ctx);
    std::mt19937_64 rng(17);
    ComplexMatrix tau = complex_zero(3, 3);
    tau(0, 0) = Complex(Real("0.2"), Real("1.1"));
    tau.set_block(1, 1, test::random_riemann(rng, 2));
    return abs(chi18_analytic(tau, ctx)) < ten_to_minus(40);
}

bool doubling()
{
    PrecisionContext lo{50}, hi{100};
    PrecisionScope s(hi);
    for (auto const & e : form_catalog())
        if (!(rel(analytic_value(e.form, FormKind::chi18, lo),
                  analytic_value(e.form, FormKind::chi18, hi)) < ten_to_minus(35)))
            return false;
    return true;
}

bool point_counts()
{
    for (long dv : {7L, 19L, 43L, 67L, 163L}) {
        Discriminant d(dv);
        GrossModel e = GrossModel::of(d);
        for (long p = 3; p < 10000; p += 2) {
            if (p == dv || !is_probable_prime(p))
                continue;
            auto m = [&](Int const & x) { return mod_pos(x, Int(p)).get_si(); };
            long b2 = m(e.b2()), b4 = m(e.b4()), b6 = m(e.b6()), sum = 0;
            std::vector<char> sq(p, 0);
            for (long y = 1; y < p; ++y)
                sq[y * y % p] = 1;
            for (long x = 0; x < p; ++x) {
                long f = (4 * x % p * x % p * x + b2 * x % p * x + 2 * b4 * x + b6) % p;
                if (f != 0)
                    sum += sq[f] ? 1 : -1;
            }
            if (trace_over_p(d, p).t != -sum)
                return false;
        }
    }
    return true;
}

bool round_trip()
{
    PrecisionContext ctx{60};
    PrecisionScope s(ctx);
    std::mt19937_64 rng(2024);
    long const ds[] = {7, 19, 43, 67, 163};
    std::uniform_int_distribution<long> coef(-1000000000000L, 1000000000000L);
    for (int k = 0; k < 500; ++k) {
        Discriminant d(ds[k % 5]);
        QuadInt x(Int(coef(rng)) * coef(rng), k % 3 ? Int(coef(rng)) : Int(0), d);
        auto v = recognize_quadint(embed(x) + Complex(ten_to_minus(45)), d, ten_to_minus(30),
                                   FactorOptions{1000, 20000});
        if (!(v.exact == x) || v.norm_factorization.value() != x.norm())
            return false;
    }
    return true;
}

void properties(Outcome & o)
{
    std::pair<char const *, std::function<bool()>> checks[] = {
        {"gauge", gauge_independence}, {"covariance", covariance},
        {"decomposable", decomposable}, {"doubling", doubling},
        {"point-counts", point_counts}, {"round-trip", round_trip}};
    for (auto const & [name, f] : checks) {
        bool ok = f();
        o.pass = o.pass && ok;
        o.detail << " " << name << ":" << (ok ? "ok" : "FAIL");
    }
}

} // namespace

int main()
{
    std::pair<char const *, std::function<void(Outcome &)>> criteria[] = {
        {"table reproduction", tables},  {"Sigma140 reproduction", sigma},
        {"decision reproduction", decisions}, {"worked example", worked_example},
        {"automorphism orders", automorphism_orders}, {"property suite", properties}};
    int unexpected = 0, n = 0;
    for (auto const & [name, run] : criteria) {
        ++n;
        Outcome o;
        auto t0 = Clock::now();
        try {
            run(o);
        } catch (std::exception const & e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        bool known = known_unattainable.count(n) > 0;
        if (!o.pass && !known)
            ++unexpected;
        std::printf("criterion %d %s  %s:%s [%.1f s]%s\n", n, o.pass ? "PASS" : "FAIL", name,
                    o.detail.str().c_str(), seconds_since(t0),
                    !o.pass && known ? " (known unattainable, see README)" : "");
        std::fflush(stdout);
    }
    return unexpected == 0 ? 0 : 1;
}
