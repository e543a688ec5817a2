#pragma once

#include <string>
#include <vector>

#include "cmtheta/periods.hpp"
#include "cmtheta/siegel.hpp"

namespace cmtheta {

/// [e1; e2] with entries in {0, 1}.
struct Characteristic
{
    std::vector<int> e1, e2;

    int parity() const;
    bool is_even() const { return parity() == 0; }
    std::string to_string() const;
};

/// The 2^(g-1) (2^g + 1) even characteristics, e1 major, both in binary
/// lexicographic order.
std::vector<Characteristic> even_characteristics(std::size_t g);

struct ThetaValue
{
    Complex value;
    /// Bound on the absolute truncation error.
    Real tail_bound;
};

/// Limits of the lattice sum.
struct ThetaOptions
{
    /// Largest admissible radius sqrt(L / (pi lambda_min)) in lattice units.
    double max_radius = 60;
    /// Extra absolute digits beyond the context's working precision.
    unsigned extra_digits = 10;
};

/// theta[e](0, tau) = sum_n exp(i pi m tau m + i pi m e2), m = n + e1 / 2.
ThetaValue theta_constant(Characteristic const & ch, ComplexMatrix const & tau,
                          PrecisionContext const & ctx, ThetaOptions const & opt = {});

/// All listed characteristics, sharing the lattice enumeration per e1.
std::vector<ThetaValue> theta_constants(std::vector<Characteristic> const & chars,
                                        ComplexMatrix const & tau, PrecisionContext const & ctx,
                                        ThetaOptions const & opt = {});

/// Product of the 36 even theta constants (g = 3).
Complex chi18_analytic(ComplexMatrix const & tau, PrecisionContext const & ctx);

/// e35 of the eighth powers of the 36 even theta constants (g = 3).
Complex sigma140_analytic(ComplexMatrix const & tau, PrecisionContext const & ctx);

/// Sum over j of prod over i != j of x_i.
Complex leave_one_out_sum(std::vector<Complex> const & x);

/// 2^26 pi^54 chi18(tau') / det(Omega'_2)^18 with Omega' = Omega B'^t.
Complex chi18_geometric(PeriodMatrix const & omega, ReducedPoint const & reduced,
                        PrecisionContext const & ctx);

/// Prefactor of the geometric Sigma_140: display uses (2 pi)^420 / 2^208,
/// raw uses (2 pi)^420 / 2^216 (the primitive-integer scaling).
/// Spelled "paper-display" and "lemma-45-raw" on the command line.
enum class SigmaNormalization { display, raw };

unsigned sigma_two_power(SigmaNormalization n);
std::string to_string(SigmaNormalization n);
SigmaNormalization parse_sigma_normalization(std::string const & s);

Complex sigma140_geometric(PeriodMatrix const & omega, ReducedPoint const & reduced,
                           PrecisionContext const & ctx, SigmaNormalization n);

} // namespace cmtheta
