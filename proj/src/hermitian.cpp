#include "cmtheta/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cmtheta/errors.hpp"

namespace cmtheta {

bool is_hermitian(QuadMatrix const & m)
{
    if (!m.is_square())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == m(j, i).conj()))
                return false;
    return true;
}

HermitianForm::HermitianForm(Discriminant d, QuadMatrix entries, std::string label)
    : d_(d), entries_(std::move(entries)), label_(std::move(label))
{
    if (entries_.rows() == 0 || !is_hermitian(entries_))
        throw domain_error("HermitianForm: matrix is not square Hermitian");
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = 0; j < entries_.cols(); ++j)
            if (entries_(i, j).disc() != d)
                throw domain_error("HermitianForm: entry over a different order");
}

HermitianForm HermitianForm::from_pairs(Discriminant d, std::size_t g,
                                        std::vector<std::pair<long, long>> const & pairs,
                                        std::string label)
{
    if (pairs.size() != g * g)
        throw domain_error("HermitianForm::from_pairs: expected g*g entries");
    QuadMatrix m(g, g, QuadInt(0, d));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            m(i, j) = QuadInt(pairs[i * g + j].first, pairs[i * g + j].second, d);
    return HermitianForm(d, std::move(m), std::move(label));
}

HermitianForm HermitianForm::identity(Discriminant d, std::size_t g)
{
    return HermitianForm(d, QuadMatrix::identity(g, QuadInt(0, d), QuadInt(1, d)),
                         "identity");
}

HermitianForm HermitianForm::conj() const
{
    QuadMatrix c = entries_;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            c(i, j) = entries_(i, j).conj();
    return HermitianForm(d_, std::move(c), label_ + "-conj");
}

QuadInt HermitianForm::pairing(std::vector<QuadInt> const & x,
                               std::vector<QuadInt> const & y) const
{
    QuadInt acc(0, d_);
    for (std::size_t i = 0; i < dim(); ++i) {
        QuadInt row(0, d_);
        for (std::size_t j = 0; j < dim(); ++j)
            row += entries_(i, j) * y[j];
        acc += x[i].conj() * row;
    }
    return acc;
}

QuadInt quad_det(QuadMatrix const & m)
{
    if (!m.is_square())
        throw domain_error("quad_det: matrix is not square");
    std::size_t n = m.rows();
    Discriminant d = m(0, 0).disc();
    if (n == 1)
        return m(0, 0);
    // Laplace expansion along the first row; g <= 3 in practice.
    QuadInt acc(0, d);
    for (std::size_t col = 0; col < n; ++col) {
        QuadMatrix minor(n - 1, n - 1, QuadInt(0, d));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != col)
                    minor(i - 1, k++) = m(i, j);
        QuadInt term = m(0, col) * quad_det(minor);
        if (col % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

QuadInt hermitian_det(HermitianForm const & m)
{
    return quad_det(m.entries());
}

bool is_positive_definite(HermitianForm const & m)
{
    for (std::size_t k = 1; k <= m.dim(); ++k) {
        QuadInt minor = quad_det(m.entries().block(0, 0, k, k));
        if (!minor.is_rational())
            throw domain_error("is_positive_definite: non-rational principal minor");
        if (minor.a() <= 0)
            return false;
    }
    return true;
}

IntMatrix gram_realization(HermitianForm const & m)
{
    std::size_t g = m.dim();
    Discriminant d = m.disc();
    QuadInt const basis[2] = {QuadInt(1, d), QuadInt::tau(d)};
    IntMatrix gram(2 * g, 2 * g, Int(0));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t j = 0; j < g; ++j)
                for (std::size_t t = 0; t < 2; ++t)
                    gram(2 * i + s, 2 * j + t) =
                        (basis[s].conj() * m(i, j) * basis[t]).trace();
    return gram;
}

std::vector<std::vector<Int>> short_vectors(IntMatrix const & gram, Int const & bound,
                                            std::size_t cap)
{
    std::size_t n = gram.rows();
    // q-form: v^t G v = sum_i q[i][i] (v_i + sum_{j>i} q[i][j] v_j)^2
    std::vector<std::vector<long double>> q(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q[i][j] = gram(i, j).get_d();
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i][i] <= 0)
            throw domain_error("short_vectors: Gram matrix is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l)
                q[k][l] -= q[k][i] * q[i][l];
    }

    std::vector<std::vector<Int>> out;
    long double const limit = bound.get_d() + 1e-6L;
    std::vector<long> v(n, 0);
    std::vector<long double> remaining(n + 1, 0), center(n, 0);
    remaining[n] = limit;

    // depth-first over coordinates n-1 .. 0
    auto recurse = [&](auto && self, std::size_t level) -> void {
        long double c = 0;
        for (std::size_t j = level + 1; j < n; ++j)
            c -= q[level][j] * v[j];
        center[level] = c;
        long double r = std::sqrt(std::max(remaining[level + 1], 0.0L) / q[level][level]);
        long lo = static_cast<long>(std::ceil(c - r - 1e-9L));
        long hi = static_cast<long>(std::floor(c + r + 1e-9L));
        for (long x = lo; x <= hi; ++x) {
            long double diff = x - c;
            long double used = q[level][level] * diff * diff;
            if (used > remaining[level + 1] + 1e-9L)
                continue;
            v[level] = x;
            remaining[level] = remaining[level + 1] - used;
            if (level == 0) {
                std::vector<Int> vec(v.begin(), v.end());
                Int value = 0;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        value += vec[a] * gram(a, b) * vec[b];
                if (value <= bound) {
                    out.push_back(std::move(vec));
                    if (out.size() > cap)
                        throw unsupported_error("short_vectors: more than " +
                                                std::to_string(cap) + " vectors");
                }
            } else {
                self(self, level - 1);
            }
        }
        v[level] = 0;
    };
    if (n > 0)
        recurse(recurse, n - 1);
    return out;
}

std::vector<QuadMatrix> automorphisms(HermitianForm const & m, std::size_t cap)
{
    std::size_t g = m.dim();
    Discriminant d = m.disc();
    if (!is_positive_definite(m))
        throw domain_error("automorphisms: form is not positive definite");

    Int max_diag = 0;
    for (std::size_t i = 0; i < g; ++i)
        max_diag = std::max(max_diag, m(i, i).a());
    // the trace form doubles the Hermitian norm
    auto coeffs = short_vectors(gram_realization(m), 2 * max_diag, cap);

    std::vector<std::vector<QuadInt>> vectors;
    std::vector<Int> norms;
    vectors.reserve(coeffs.size());
    for (auto const & c : coeffs) {
        std::vector<QuadInt> v;
        for (std::size_t i = 0; i < g; ++i)
            v.emplace_back(c[2 * i], c[2 * i + 1], d);
        QuadInt h = m.pairing(v, v);
        norms.push_back(h.a());
        vectors.push_back(std::move(v));
    }

    // fill columns in order of increasing diagonal entry, which prunes best
    std::vector<std::size_t> order(g);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return m(x, x).a() < m(y, y).a();
    });

    std::vector<std::vector<std::size_t>> candidates(g);
    for (std::size_t col = 0; col < g; ++col)
        for (std::size_t k = 0; k < vectors.size(); ++k)
            if (norms[k] == m(col, col).a())
                candidates[col].push_back(k);

    std::vector<QuadMatrix> found;
    std::vector<std::size_t> chosen(g);
    auto recurse = [&](auto && self, std::size_t depth) -> void {
        if (depth == g) {
            QuadMatrix q(g, g, QuadInt(0, d));
            for (std::size_t col = 0; col < g; ++col)
                for (std::size_t row = 0; row < g; ++row)
                    q(row, col) = vectors[chosen[col]][row];
            found.push_back(std::move(q));
            return;
        }
        std::size_t col = order[depth];
        for (std::size_t k : candidates[col]) {
            bool ok = true;
            for (std::size_t prev = 0; prev < depth && ok; ++prev) {
                std::size_t pcol = order[prev];
                ok = m.pairing(vectors[chosen[pcol]], vectors[k]) == m(pcol, col);
            }
            if (!ok)
                continue;
            chosen[col] = k;
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
    return found;
}

std::size_t automorphism_order(HermitianForm const & m, std::size_t cap)
{
    return automorphisms(m, cap).size();
}

} // namespace cmtheta
