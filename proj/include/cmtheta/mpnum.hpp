#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "cmtheta/bigint.hpp"
#include "cmtheta/matrix.hpp"

namespace cmtheta {

/// MPFR real whose precision is taken from the innermost PrecisionScope of
/// the calling thread when it is created.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct PrecisionContext
{
    unsigned digits = 50;
    unsigned guard = 15;
    /// Extra digits for large intermediate magnitudes (set by the pipeline).
    unsigned headroom = 0;

    unsigned working() const { return digits + guard + headroom; }
    PrecisionContext doubled() const { return {2 * digits, guard, headroom}; }
};

/// Sets the thread's default MPFR precision for its lifetime.
class PrecisionScope
{
    unsigned saved_;

  public:
    explicit PrecisionScope(unsigned decimal_digits);
    explicit PrecisionScope(PrecisionContext const & ctx) : PrecisionScope(ctx.working()) {}
    ~PrecisionScope();
    PrecisionScope(PrecisionScope const &) = delete;
    PrecisionScope & operator=(PrecisionScope const &) = delete;
};

Real const_pi();
/// Copy of x rounded to the current default precision.
Real rounded(Real const & x);
/// 10^-k
Real ten_to_minus(long k);
Real real_from(Int const & n);
/// Nearest integer (ties away from zero).
Int round_to_int(Real const & x);
/// Scientific notation with the given significant digits.
std::string to_string(Real const & x, unsigned digits);

struct Complex
{
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return {Real(0), Real(1)}; }

    Complex & operator+=(Complex const & o);
    Complex & operator-=(Complex const & o);
    Complex & operator*=(Complex const & o);
    Complex & operator/=(Complex const & o);

    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(Complex x, Complex const & y) { return x += y; }
    friend Complex operator-(Complex x, Complex const & y) { return x -= y; }
    friend Complex operator*(Complex x, Complex const & y) { return x *= y; }
    friend Complex operator/(Complex x, Complex const & y) { return x /= y; }
    friend Complex operator*(Complex x, Real const & s)
    {
        x.re *= s;
        x.im *= s;
        return x;
    }
    friend Complex operator*(Real const & s, Complex x) { return x * s; }

    friend bool operator==(Complex const & x, Complex const & y)
    {
        return x.re == y.re && x.im == y.im;
    }
};

Complex conj(Complex const & z);
/// |z|^2
Real norm(Complex const & z);
Real abs(Complex const & z);
/// Principal argument in (-pi, pi].
Real arg(Complex const & z);
Complex exp(Complex const & z);
/// Principal branch; throws domain_error at 0.
Complex log(Complex const & z);
/// Principal branch (Re >= 0, Im >= 0 on the cut); sqrt(0) = 0.
Complex sqrt(Complex const & z);
Complex powi(Complex const & z, long k);
bool is_finite(Complex const & z);
Complex rounded(Complex const & z);
std::string to_string(Complex const & z, unsigned digits);

using RealMatrix = Matrix<Real>;
using ComplexMatrix = Matrix<Complex>;

ComplexMatrix complex_zero(std::size_t rows, std::size_t cols);
ComplexMatrix complex_identity(std::size_t n);
ComplexMatrix to_complex(IntMatrix const & m);
RealMatrix real_part(ComplexMatrix const & m);
RealMatrix imag_part(ComplexMatrix const & m);

/// Max-row-sum norm.
Real inf_norm(ComplexMatrix const & m);

/// LU with partial pivoting; 0 for a singular matrix.
Complex complex_det(ComplexMatrix const & m);

/// Gauss-Jordan inverse. Throws precision_error if the matrix is singular
/// or the residual ||A A^-1 - I|| is not below 10^-digits.
ComplexMatrix complex_inverse(ComplexMatrix const & m, PrecisionContext const & ctx);

/// Eigenvalues of a real symmetric matrix (cyclic Jacobi), ascending.
std::vector<Real> symmetric_eigenvalues(RealMatrix const & m);

} // namespace cmtheta
