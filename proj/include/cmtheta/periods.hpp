#pragma once

#include <cstdint>

#include "cmtheta/hermitian.hpp"
#include "cmtheta/mpnum.hpp"

namespace cmtheta {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, optionally replaced by its
/// quadratic twist by c (b-invariants scaled by c, c^2, c^3).
struct GrossModel
{
    Discriminant d;
    Int a1, a2, a3, a4, a6;
    Int twist = 1;

    /// The minimal model with CM by O_K and discriminant -d^3.
    static GrossModel of(Discriminant d);
    GrossModel twisted(Int const & c) const;

    Int b2() const;
    Int b4() const;
    Int b6() const;
    Int b8() const;
    Int c4() const;
    Int c6() const;
    Int discriminant() const;
};

/// Periods of dx / (2y + a1 x + a3), normalized so omega1 / omega2 = tau_d.
struct EllipticPeriods
{
    Complex omega1, omega2;
};

EllipticPeriods elliptic_periods(GrossModel const & model, PrecisionContext const & ctx);
EllipticPeriods elliptic_periods(Discriminant d, PrecisionContext const & ctx);

/// Lattice invariants g2 = 60 G4 and g3 = 140 G6 of Z omega1 + Z omega2
/// (Eisenstein q-series; requires omega1 / omega2 in the upper half plane).
std::pair<Complex, Complex> lattice_invariants(EllipticPeriods const & p);

/// [omega1 I_g | omega2 I_g]
ComplexMatrix build_omega0(EllipticPeriods const & p, std::size_t g);

/// Which complex embedding of O_K identifies End(E) (tau_d -> (1 +- i sqrt d) / 2).
/// The conjugate embedding amounts to using conj(M) with the standard one.
enum class Embedding { standard, conjugate };

/// Alternating form of the polarization a0 M on the lattice basis given by
/// the columns of Omega0. With M = A + B tau_d and N = (1 + d) / 4:
///   T = [[-N B, A], [-A^t, -B]].
IntMatrix alternating_form(HermitianForm const & m, Embedding e = Embedding::standard);

/// Symplectic Gram-Schmidt over Z: B with B T B^t = J_2g.
/// Throws domain_error unless T is alternating and unimodular.
IntMatrix symplectic_normalize(IntMatrix const & t);

struct PeriodMatrix
{
    /// g x 2g, Omega0 B^t
    ComplexMatrix omega;
    /// The normalization actually used (differs from the input after a retry).
    IntMatrix b;

    ComplexMatrix omega1() const;
    ComplexMatrix omega2() const;
};

struct RiemannPoint
{
    PeriodMatrix period;
    ComplexMatrix tau;
};

/// tau = Omega2^-1 Omega1 for Omega = Omega0 B^t. If Omega2 is singular B is
/// composed with random symplectic transvections (seeded, at most 20 tries).
/// Throws precision_error if tau is not symmetric or Im tau not positive.
RiemannPoint riemann_matrix(ComplexMatrix const & omega0, IntMatrix const & b,
                            PrecisionContext const & ctx, std::uint64_t seed = 1);

/// Symmetric to 10^-digits with positive definite imaginary part.
bool is_riemann_matrix(ComplexMatrix const & tau, PrecisionContext const & ctx);

} // namespace cmtheta
