#include <algorithm>
#include <map>

#include "cmtheta/errors.hpp"
#include "cmtheta/recognize.hpp"

namespace cmtheta {

Int Factorization::value() const
{
    Int v = sign;
    for (auto const & f : factors)
        v *= int_pow(f.p, f.e);
    return v * cofactor;
}

std::string Factorization::to_string() const
{
    std::string s = sign < 0 ? "-" : "";
    bool first = true;
    for (auto const & f : factors) {
        if (!first)
            s += "*";
        first = false;
        s += f.p.get_str();
        if (f.e != 1)
            s += "^" + std::to_string(f.e);
    }
    if (cofactor != 1 || first) {
        if (!first)
            s += "*";
        s += cofactor.get_str();
    }
    return s;
}

namespace {

Int gcd(Int const & a, Int const & b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Brent's variant; returns a non-trivial factor or 0.
Int pollard_brent(Int const & n, unsigned long seed, unsigned long budget)
{
    Int y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
    unsigned long r = 1, used = 0;
    auto f = [&](Int const & v) { return mod_pos(v * v + c, n); };
    const unsigned long m = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mod_pos(q * abs(x - y), n);
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        used += r;
        if (used > budget)
            return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

void split(Int const & n, unsigned e, FactorOptions const & opt, std::map<Int, unsigned> & primes,
           std::vector<std::pair<Int, unsigned>> & left)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        if (primality_is_proven(n))
            primes[n] += e;
        else
            left.emplace_back(n, e);
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned k = 2;; ++k) {
            Int r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
                split(r, e * k, opt, primes, left);
                return;
            }
        }
    }
    for (unsigned long seed = 2; seed < 4; ++seed) {
        Int f = pollard_brent(n, seed, opt.rho_iterations);
        if (f != 0) {
            split(f, e, opt, primes, left);
            split(n / f, e, opt, primes, left);
            return;
        }
    }
    left.emplace_back(n, e);
}

} // namespace

Factorization factor_desk(Int const & n, FactorOptions const & opt)
{
    if (n == 0)
        throw domain_error("cannot factor 0");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> primes;
    for (std::uint32_t p : small_primes()) {
        if (p > opt.trial_bound)
            break;
        if (Int(p) * p > m)
            break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        if (e)
            primes[Int(p)] += e;
    }
    std::vector<std::pair<Int, unsigned>> left;
    split(m, 1, opt, primes, left);
    for (auto const & [p, e] : primes)
        out.factors.push_back({p, e});
    out.cofactor = 1;
    for (auto const & [c, e] : left)
        out.cofactor *= int_pow(c, e);
    out.cofactor_probable_prime = left.size() == 1 && left[0].second == 1 &&
                                  is_probable_prime(left[0].first);
    return out;
}

Splitting prime_splitting(Discriminant d, Int const & p)
{
    if (mpz_divisible_ui_p(p.get_mpz_t(), static_cast<unsigned long>(d.value())))
        return Splitting::ramified;
    if (p == 2)
        // 2 splits iff -d = 1 mod 8
        return d.value() % 8 == 7 ? Splitting::split : Splitting::inert;
    return legendre(Int(-d.value()), p) == 1 ? Splitting::split : Splitting::inert;
}

std::string to_string(Splitting s)
{
    switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    default: return "ramified";
    }
}

std::vector<NormPrime> AlgebraicValue::norm_primes() const
{
    std::vector<NormPrime> out;
    for (auto const & f : norm_factorization.factors)
        out.push_back({f.p, f.e, prime_splitting(exact.disc(), f.p)});
    return out;
}

Complex embed(QuadInt const & x)
{
    Real sd = boost::multiprecision::sqrt(Real(x.disc().value()));
    Real b = real_from(x.b());
    return {real_from(x.a()) + b / 2, b * sd / 2};
}

AlgebraicValue recognize_quadint(Complex const & z, Discriminant d, Real const & tolerance,
                                 FactorOptions const & opt)
{
    if (!is_finite(z))
        throw recognition_error("value is not finite");
    Real sd = boost::multiprecision::sqrt(Real(d.value()));
    Int b = round_to_int(z.im / (sd / 2));
    Int a = round_to_int(z.re - real_from(b) / 2);
    QuadInt x(a, b, d);
    Real residual = abs(z - embed(x));
    if (!(residual < tolerance))
        throw recognition_error("nearest element " + x.to_string() + " has residual " +
                                to_string(residual, 3) + ", above " + to_string(tolerance, 3));
    AlgebraicValue out{x, residual, {}, {}};
    if (x.is_zero())
        return out;
    out.norm_factorization = factor_desk(x.norm(), opt);
    if (x.is_rational())
        out.rational_factorization = factor_desk(x.a(), opt);
    return out;
}

AlgebraicValue recognize_quadint(Complex const & z, Discriminant d, PrecisionContext const & ctx)
{
    PrecisionScope scope(ctx);
    return recognize_quadint(z, d, ten_to_minus(ctx.digits / 2));
}

std::optional<Int> square_class(Factorization const & f)
{
    Int c = f.sign;
    for (auto const & p : f.factors)
        if (p.e % 2)
            c *= p.p;
    if (f.cofactor == 1)
        return c;
    if (f.cofactor_probable_prime)
        return c * f.cofactor;
    if (mpz_perfect_square_p(f.cofactor.get_mpz_t()))
        return c;
    return std::nullopt;
}

std::optional<Int> square_class(AlgebraicValue const & v)
{
    if (!v.exact.is_rational())
        return std::nullopt;
    if (v.exact.is_zero())
        return Int(0);
    return square_class(*v.rational_factorization);
}

} // namespace cmtheta
