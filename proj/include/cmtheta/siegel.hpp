#pragma once

#include "cmtheta/mpnum.hpp"

namespace cmtheta {

/// B^t J B = J exactly.
bool is_symplectic(IntMatrix const & b);

/// B.tau = (alpha tau + beta)(gamma tau + delta)^-1 for B = [[alpha, beta], [gamma, delta]].
/// Throws precision_error if gamma tau + delta is singular or the result is
/// not a Riemann matrix.
ComplexMatrix symplectic_action(IntMatrix const & b, ComplexMatrix const & tau,
                                PrecisionContext const & ctx);

/// Unimodular U with the rows of U reduced for the Gram matrix G, i.e.
/// U G U^t is LLL-reduced with parameter delta.
IntMatrix lll_gram(RealMatrix const & gram, double delta = 0.99);

struct ReducedPoint
{
    ComplexMatrix tau;
    /// tau = b.(input tau)
    IntMatrix b;
    unsigned iterations = 0;
    /// False if the iteration cap was hit (tau is the best point so far).
    bool converged = true;
};

/// Alternates LLL on Im tau, integer shifts of Re tau and the quasi-inversion
/// at the first diagonal entry with |tau_jj| < 1, until none applies.
ReducedPoint siegel_reduce(ComplexMatrix const & tau, PrecisionContext const & ctx,
                           unsigned max_iterations = 200);

} // namespace cmtheta
