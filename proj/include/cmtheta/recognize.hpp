#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmtheta/mpnum.hpp"
#include "cmtheta/quadorder.hpp"

namespace cmtheta {

struct PrimeFactor
{
    Int p;
    unsigned e = 0;
};

struct Factorization
{
    int sign = 1;
    /// Proven primes, ascending.
    std::vector<PrimeFactor> factors;
    /// Unfactored part (1 when the factorization is complete).
    Int cofactor = 1;
    /// The cofactor passed the probable-prime test but is beyond the proven range.
    bool cofactor_probable_prime = false;

    bool complete() const { return cofactor == 1; }
    /// sign * prod p^e * cofactor
    Int value() const;
    /// "-2^11*19^14" style, cofactor last.
    std::string to_string() const;
};

struct FactorOptions
{
    std::uint32_t trial_bound = 1000000;
    /// Pollard-rho iterations per split attempt.
    unsigned long rho_iterations = 20000000;
};

/// Trial division, then Brent's Pollard rho. Whatever is left unsplit (or
/// prime without proof) stays in the cofactor. n = 0 raises domain_error.
Factorization factor_desk(Int const & n, FactorOptions const & opt = {});

enum class Splitting { split, inert, ramified };
Splitting prime_splitting(Discriminant d, Int const & p);
std::string to_string(Splitting s);

struct NormPrime
{
    Int p;
    unsigned e = 0;
    Splitting splitting = Splitting::split;
};

struct AlgebraicValue
{
    QuadInt exact;
    /// |z - exact|
    Real residual;
    /// Factorization of |norm(exact)|; the sign is +1.
    Factorization norm_factorization;
    /// Factorization of the value itself when it is rational.
    std::optional<Factorization> rational_factorization;

    std::vector<NormPrime> norm_primes() const;
};

/// Nearest element of O_K: b = round(Im z / (sqrt(d)/2)), a = round(Re z - b/2).
/// Throws recognition_error unless |z - (a + b tau)| < tolerance.
AlgebraicValue recognize_quadint(Complex const & z, Discriminant d, Real const & tolerance,
                                 FactorOptions const & opt = {});

/// Default tolerance 10^-(digits/2).
AlgebraicValue recognize_quadint(Complex const & z, Discriminant d, PrecisionContext const & ctx);

/// Square-free c with v = c * square (sign included); empty when v is
/// irrational or the cofactor's square class is unknown.
std::optional<Int> square_class(AlgebraicValue const & v);
std::optional<Int> square_class(Factorization const & f);

/// a + b tau_d as a complex number at the current precision.
Complex embed(QuadInt const & x);

} // namespace cmtheta
