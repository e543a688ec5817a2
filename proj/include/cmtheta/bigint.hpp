#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmtheta {

using Int = mpz_class;

Int int_pow(Int const & base, unsigned long exponent);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(Int const & n);

/// Non-negative residue of x modulo m (m > 0).
Int mod_pos(Int const & x, Int const & m);

Int pow_mod(Int const & base, Int const & exponent, Int const & modulus);

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre(Int const & a, Int const & p);

bool is_square_free(Int const & n);

/// Deterministic for n < 3.3e24 (first 13 primes as witnesses); a
/// probabilistic strong-pseudoprime test above that bound.
bool is_probable_prime(Int const & n);

/// True when is_probable_prime's answer is a proof.
bool primality_is_proven(Int const & n);

/// If q = p^n for a prime p, returns {p, n}; otherwise {0, 0}.
struct PrimePower
{
    Int p;
    unsigned n = 0;
};
PrimePower as_prime_power(Int const & q);

std::vector<std::uint32_t> const & small_primes(); // primes below 10^6

Int parse_int(std::string const & text);

} // namespace cmtheta
