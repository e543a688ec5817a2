#pragma once

#include <initializer_list>
#include <random>

#include "cmtheta/siegel.hpp"

namespace cmtheta::test {

inline IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::initializer_list<long> v)
{
    IntMatrix m(rows, cols, Int(0));
    std::size_t k = 0;
    for (long x : v) {
        m(k / cols, k % cols) = x;
        ++k;
    }
    return m;
}

// Product of random elementary symplectic matrices: translations
// [[I,S],[0,I]], their transposes, [[U,0],[0,U^-t]] and J.
inline IntMatrix random_symplectic(std::mt19937_64 & rng, std::size_t g, int steps = 4)
{
    std::uniform_int_distribution<int> coin(0, 3), small(-1, 1);
    IntMatrix b = int_identity(2 * g);
    for (int s = 0; s < steps; ++s) {
        IntMatrix e = int_identity(2 * g);
        switch (coin(rng)) {
        case 0:
        case 1: {
            bool upper = coin(rng) < 2;
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = i; j < g; ++j) {
                    long x = small(rng);
                    if (upper)
                        e(i, g + j) = e(j, g + i) = x;
                    else
                        e(g + i, j) = e(g + j, i) = x;
                }
            break;
        }
        case 2: {
            std::size_t i = rng() % g, j = (i + 1 + rng() % (g - 1 ? g - 1 : 1)) % g;
            if (i != j) {
                long x = small(rng);
                e(i, j) = x;          // U = I + x E_ij
                e(g + j, g + i) = -x; // U^-t
            }
            break;
        }
        default:
            e = standard_symplectic(g);
        }
        b = e * b;
    }
    return b;
}

// X + iY with X symmetric in [-1/2, 1/2] and Y = A A^t + I/2.
inline ComplexMatrix random_riemann(std::mt19937_64 & rng, std::size_t g)
{
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<double> a(g * g);
    for (auto & x : a)
        x = u(rng);
    ComplexMatrix t = complex_zero(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            double y = i == j ? 0.5 : 0.0;
            for (std::size_t k = 0; k < g; ++k)
                y += a[i * g + k] * a[j * g + k];
            Complex z(Real(u(rng)), Real(y));
            t(i, j) = z;
            t(j, i) = z;
        }
    return t;
}

inline Real max_abs_diff(ComplexMatrix const & a, ComplexMatrix const & b)
{
    Real m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, abs(a(i, j) - b(i, j)));
    return m;
}

} // namespace cmtheta::test
