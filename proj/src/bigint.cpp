#include "cmtheta/bigint.hpp"

#include <array>
#include <stdexcept>

#include "cmtheta/errors.hpp"

namespace cmtheta {

Int int_pow(Int const & base, unsigned long exponent)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Int isqrt(Int const & n)
{
    if (sgn(n) < 0)
        throw domain_error("isqrt of a negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int mod_pos(Int const & x, Int const & m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int pow_mod(Int const & base, Int const & exponent, Int const & modulus)
{
    Int r;
    Int b = mod_pos(base, modulus);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(),
             modulus.get_mpz_t());
    return r;
}

int legendre(Int const & a, Int const & p)
{
    Int x = mod_pos(a, p);
    if (x == 0)
        return 0;
    Int e = (p - 1) / 2;
    Int r = pow_mod(x, e, p);
    return r == 1 ? 1 : -1;
}

bool is_square_free(Int const & n)
{
    Int m = abs(n);
    if (m == 0)
        return false;
    for (std::uint32_t p : small_primes()) {
        Int pp = Int(p) * p;
        if (pp > m)
            return true;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            if (mpz_divisible_ui_p(m.get_mpz_t(), p))
                return false;
        }
    }
    // remaining m has no prime factor below 10^6; it is square-free
    // unless it is a perfect square of a large prime (or worse)
    if (m > 1 && mpz_perfect_square_p(m.get_mpz_t()))
        return false;
    if (is_probable_prime(m) || m == 1)
        return true;
    throw domain_error("is_square_free: unfactored composite cofactor");
}

namespace {

bool strong_probable_prime(Int const & n, unsigned long witness)
{
    Int d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Int x = pow_mod(Int(witness), d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

Int const deterministic_bound("3317044064679887385961981");

} // namespace

bool primality_is_proven(Int const & n)
{
    return n < deterministic_bound;
}

bool is_probable_prime(Int const & n)
{
    if (n < 2)
        return false;
    static constexpr std::array<unsigned long, 13> witnesses = {
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long w : witnesses) {
        if (n == w)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w))
            return false;
    }
    if (n < deterministic_bound) {
        for (unsigned long w : witnesses)
            if (!strong_probable_prime(n, w))
                return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

PrimePower as_prime_power(Int const & q)
{
    if (q < 2)
        return {};
    unsigned long bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    for (unsigned long n = bits; n >= 1; --n) {
        Int r;
        if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), n) != 0 && is_probable_prime(r))
            return {r, static_cast<unsigned>(n)};
    }
    return {};
}

std::vector<std::uint32_t> const & small_primes()
{
    static std::vector<std::uint32_t> const primes = [] {
        constexpr std::uint32_t limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

Int parse_int(std::string const & text)
{
    Int r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw domain_error("not an integer: '" + text + "'");
    return r;
}

} // namespace cmtheta
