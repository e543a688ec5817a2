#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "cmtheta/bigint.hpp"

namespace cmtheta {

/// Square-free d > 0 with d = 3 (mod 4), so that tau_d = (1 + sqrt(-d)) / 2
/// is an algebraic integer: tau^2 - tau + (1 + d) / 4 = 0.
class Discriminant
{
    long d_;

  public:
    explicit Discriminant(long d);

    long value() const { return d_; }

    /// (1 + d) / 4 = norm(tau_d)
    long tau_norm() const { return (1 + d_) / 4; }

    /// One of the Gross models E(d): d in {7, 19, 43, 67, 163}.
    bool in_catalog() const;

    auto operator<=>(Discriminant const &) const = default;
};

/// a + b * tau_d in the maximal order of Q(sqrt(-d)).
class QuadInt
{
    Int a_, b_;
    Discriminant d_;

  public:
    QuadInt(Int a, Int b, Discriminant d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
    QuadInt(Int a, Discriminant d) : a_(std::move(a)), b_(0), d_(d) {}

    static QuadInt tau(Discriminant d) { return {0, 1, d}; }

    Int const & a() const { return a_; }
    Int const & b() const { return b_; }
    Discriminant disc() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// a^2 + ab + b^2 (1 + d) / 4
    Int norm() const;
    /// a + b conj(tau) = (a + b) - b tau
    QuadInt conj() const;
    /// x + conj(x) = 2a + b
    Int trace() const;

    QuadInt operator-() const { return {-a_, -b_, d_}; }
    QuadInt & operator+=(QuadInt const & o);
    QuadInt & operator-=(QuadInt const & o);
    QuadInt & operator*=(QuadInt const & o);

    friend QuadInt operator+(QuadInt x, QuadInt const & y) { return x += y; }
    friend QuadInt operator-(QuadInt x, QuadInt const & y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, QuadInt const & y) { return x *= y; }

    friend bool operator==(QuadInt const & x, QuadInt const & y)
    {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// "[a,b]" notation for a + b tau.
    std::string to_string() const;
};

QuadInt quad_mul(QuadInt const & x, QuadInt const & y);
QuadInt pow(QuadInt const & x, unsigned long k);

std::ostream & operator<<(std::ostream & os, QuadInt const & x);

/// Frobenius trace of a Gross model E(d) over F_q, q = p^n.
struct TraceResult
{
    Int t;
    Int q;
    bool ordinary = false;
};

/// Trace of Frobenius of E(d) mod p: 0 if (p/d) = -1, else the unique a_p
/// with 4p = a_p^2 + d b_p^2 and (2 a_p / d) = 1.
TraceResult trace_over_p(Discriminant d, Int const & p);

/// t_n = t_1 t_{n-1} - p t_{n-2}, t_0 = 2.
TraceResult trace_over_q(Discriminant d, Int const & p, unsigned n);

/// Whether (x mod p) is a square in F_{p^n}; x must be non-zero mod p.
bool is_square_in_fq(Int const & x, Int const & p, unsigned n);

/// Image of a + b tau in F_p under tau -> root, where root is one of the
/// two roots of X^2 - X + (1+d)/4 mod p. For rational x the root is ignored.
Int reduce_quadint_mod_p(QuadInt const & x, Int const & p, Int const & root);

/// Roots of X^2 - X + (1+d)/4 mod p (empty when p is inert).
std::vector<Int> tau_roots_mod_p(Discriminant d, Int const & p);

} // namespace cmtheta
