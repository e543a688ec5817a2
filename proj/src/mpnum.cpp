#include <algorithm>

#include "cmtheta/errors.hpp"
#include "cmtheta/mpnum.hpp"

namespace cmtheta {

PrecisionScope::PrecisionScope(unsigned decimal_digits) : saved_(Real::default_precision())
{
    Real::default_precision(decimal_digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real const_pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real rounded(Real const & x)
{
    Real r;
    mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Complex rounded(Complex const & z) { return {rounded(z.re), rounded(z.im)}; }

Real ten_to_minus(long k) { return boost::multiprecision::pow(Real(10), Real(-k)); }

Real real_from(Int const & n)
{
    Real r;
    mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
    return r;
}

Int round_to_int(Real const & x)
{
    if (!boost::multiprecision::isfinite(x))
        throw precision_error("cannot round a non-finite value");
    Real r;
    mpfr_round(r.backend().data(), x.backend().data());
    Int z;
    mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
    return z;
}

std::string to_string(Real const & x, unsigned digits)
{
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

Complex & Complex::operator+=(Complex const & o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex & Complex::operator-=(Complex const & o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex & Complex::operator*=(Complex const & o)
{
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex & Complex::operator/=(Complex const & o)
{
    Real den = o.re * o.re + o.im * o.im;
    if (den == 0)
        throw domain_error("complex division by zero");
    Real r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
}

Complex conj(Complex const & z) { return {z.re, -z.im}; }

Real norm(Complex const & z) { return z.re * z.re + z.im * z.im; }

Real abs(Complex const & z) { return boost::multiprecision::hypot(z.re, z.im); }

Real arg(Complex const & z)
{
    if (z.im == 0 && z.re < 0)
        return const_pi();
    return boost::multiprecision::atan2(z.im, z.re);
}

Complex exp(Complex const & z)
{
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log(Complex const & z)
{
    if (z.re == 0 && z.im == 0)
        throw domain_error("log(0)");
    return {boost::multiprecision::log(abs(z)), arg(z)};
}

Complex sqrt(Complex const & z)
{
    if (z.re == 0 && z.im == 0)
        return {};
    Real r = abs(z);
    if (z.re >= 0) {
        Real t = boost::multiprecision::sqrt((r + z.re) / 2);
        return {t, z.im / (2 * t)};
    }
    Real t = boost::multiprecision::sqrt((r - z.re) / 2);
    return {boost::multiprecision::abs(z.im) / (2 * t), z.im < 0 ? Real(-t) : t};
}

Complex powi(Complex const & z, long k)
{
    if (k < 0)
        return Complex(Real(1)) / powi(z, -k);
    Complex result(Real(1)), base = z;
    while (k > 0) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

bool is_finite(Complex const & z)
{
    return boost::multiprecision::isfinite(z.re) && boost::multiprecision::isfinite(z.im);
}

std::string to_string(Complex const & z, unsigned digits)
{
    std::string s = to_string(z.re, digits);
    std::string i = to_string(boost::multiprecision::abs(z.im), digits);
    return s + (z.im < 0 ? " - " : " + ") + i + "i";
}

ComplexMatrix complex_zero(std::size_t rows, std::size_t cols)
{
    return ComplexMatrix(rows, cols, Complex());
}

ComplexMatrix complex_identity(std::size_t n)
{
    return ComplexMatrix::identity(n, Complex(), Complex(Real(1)));
}

ComplexMatrix to_complex(IntMatrix const & m)
{
    ComplexMatrix out = complex_zero(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Complex(real_from(m(i, j)));
    return out;
}

RealMatrix real_part(ComplexMatrix const & m)
{
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).re;
    return out;
}

RealMatrix imag_part(ComplexMatrix const & m)
{
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).im;
    return out;
}

Real inf_norm(ComplexMatrix const & m)
{
    Real best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Real row = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row += abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

Complex complex_det(ComplexMatrix const & m)
{
    if (!m.is_square())
        throw domain_error("determinant of a non-square matrix");
    std::size_t n = m.rows();
    ComplexMatrix a = m;
    Complex det(Real(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        Real best = norm(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            Real v = norm(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0)
            return {};
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex f = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

ComplexMatrix complex_inverse(ComplexMatrix const & m, PrecisionContext const & ctx)
{
    if (!m.is_square())
        throw domain_error("inverse of a non-square matrix");
    std::size_t n = m.rows();
    ComplexMatrix a = m, inv = complex_identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        Real best = norm(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            Real v = norm(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0)
            throw precision_error("singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        Complex p = Complex(Real(1)) / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= p;
            inv(k, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            Complex f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    Real residual = inf_norm(m * inv - complex_identity(n));
    if (!(residual < ten_to_minus(ctx.digits)))
        throw precision_error("matrix inverse residual " + to_string(residual, 5) +
                              " exceeds tolerance");
    return inv;
}

std::vector<Real> symmetric_eigenvalues(RealMatrix const & m)
{
    std::size_t n = m.rows();
    RealMatrix a = m;
    Real eps = ten_to_minus(static_cast<long>(Real::default_precision()) - 2);
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off = 0, total = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                total += a(i, j) * a(i, j);
                if (i != j)
                    off += a(i, j) * a(i, j);
            }
        if (off <= eps * eps * total)
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) == 0)
                    continue;
                Real theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                         (boost::multiprecision::abs(theta) +
                          boost::multiprecision::sqrt(theta * theta + 1));
                Real c = 1 / boost::multiprecision::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    Real akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<Real> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(a(i, i));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cmtheta
