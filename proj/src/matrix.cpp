#include "cmtheta/matrix.hpp"

#include "cmtheta/errors.hpp"

namespace cmtheta {

IntMatrix int_identity(std::size_t n)
{
    return IntMatrix::identity(n, Int(0), Int(1));
}

IntMatrix standard_symplectic(std::size_t g)
{
    IntMatrix j(2 * g, 2 * g, Int(0));
    for (std::size_t i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

Int int_det(IntMatrix const & m)
{
    if (!m.is_square())
        throw domain_error("int_det: matrix is not square");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix int_inverse_unimodular(IntMatrix const & m)
{
    Int det = int_det(m);
    if (det != 1 && det != -1)
        throw domain_error("int_inverse_unimodular: determinant is not +-1");
    std::size_t n = m.rows();
    // Gauss-Jordan with exact integer row operations (Euclid on each column).
    IntMatrix a = m, inv = int_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = col; i < n; ++i)
                if (a(i, col) != 0 && (best == n || abs(a(i, col)) < abs(a(best, col))))
                    best = i;
            if (best == n)
                throw domain_error("int_inverse_unimodular: singular matrix");
            if (best != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(best, j), a(col, j));
                    std::swap(inv(best, j), inv(col, j));
                }
            bool done = true;
            for (std::size_t i = col + 1; i < n; ++i) {
                if (a(i, col) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(col, col).get_mpz_t());
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) -= q * a(col, j);
                    inv(i, j) -= q * inv(col, j);
                }
                if (a(i, col) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a(col, col) == -1)
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) = -a(col, j);
                inv(col, j) = -inv(col, j);
            }
    }
    // back substitution, pivots are all 1
    for (std::size_t col = n; col-- > 0;)
        for (std::size_t i = 0; i < col; ++i) {
            Int f = a(i, col);
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    return inv;
}

} // namespace cmtheta
