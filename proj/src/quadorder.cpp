#include "cmtheta/quadorder.hpp"

#include <ostream>

#include "cmtheta/errors.hpp"

namespace cmtheta {

Discriminant::Discriminant(long d) : d_(d)
{
    if (d <= 0 || d % 4 != 3)
        throw domain_error("discriminant must be positive and = 3 mod 4, got " +
                           std::to_string(d));
    if (!is_square_free(Int(d)))
        throw domain_error("discriminant must be square-free, got " + std::to_string(d));
}

bool Discriminant::in_catalog() const
{
    return d_ == 7 || d_ == 19 || d_ == 43 || d_ == 67 || d_ == 163;
}

namespace {

void require_same(Discriminant x, Discriminant y)
{
    if (x != y)
        throw domain_error("QuadInt arithmetic across different discriminants");
}

} // namespace

Int QuadInt::norm() const
{
    return a_ * a_ + a_ * b_ + b_ * b_ * d_.tau_norm();
}

QuadInt QuadInt::conj() const
{
    return {a_ + b_, -b_, d_};
}

Int QuadInt::trace() const
{
    return 2 * a_ + b_;
}

QuadInt & QuadInt::operator+=(QuadInt const & o)
{
    require_same(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadInt & QuadInt::operator-=(QuadInt const & o)
{
    require_same(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadInt & QuadInt::operator*=(QuadInt const & o)
{
    require_same(d_, o.d_);
    // tau^2 = tau - N
    Int bb = b_ * o.b_;
    Int a = a_ * o.a_ - bb * d_.tau_norm();
    Int b = a_ * o.b_ + b_ * o.a_ + bb;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::string QuadInt::to_string() const
{
    return "[" + a_.get_str() + "," + b_.get_str() + "]";
}

QuadInt quad_mul(QuadInt const & x, QuadInt const & y)
{
    return x * y;
}

QuadInt pow(QuadInt const & x, unsigned long k)
{
    QuadInt r(1, x.disc());
    QuadInt base = x;
    while (k) {
        if (k & 1)
            r *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return r;
}

std::ostream & operator<<(std::ostream & os, QuadInt const & x)
{
    return os << x.to_string();
}

TraceResult trace_over_p(Discriminant d, Int const & p)
{
    if (p < 3 || !is_probable_prime(p))
        throw domain_error("trace_over_p: p must be an odd prime");
    if (p == d.value())
        throw domain_error("trace_over_p: E(d) has bad reduction at p = d");
    Int dd(d.value());
    if (legendre(p, dd) == -1)
        return {0, p, false};

    Int four_p = 4 * p;
    Int bound = isqrt(four_p);
    for (Int a = -bound; a <= bound; ++a) {
        Int rest = four_p - a * a;
        if (rest % dd != 0)
            continue;
        Int b2 = rest / dd;
        if (!mpz_perfect_square_p(b2.get_mpz_t()))
            continue;
        if (legendre(2 * a, dd) == 1)
            return {a, p, gcd(a, p) == 1};
    }
    throw error("trace_over_p: no representation 4p = a^2 + d b^2 although p splits");
}

TraceResult trace_over_q(Discriminant d, Int const & p, unsigned n)
{
    if (n == 0)
        throw domain_error("trace_over_q: n must be positive");
    TraceResult t1 = trace_over_p(d, p);
    Int prev = 2, cur = t1.t;
    for (unsigned k = 2; k <= n; ++k) {
        Int next = t1.t * cur - p * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    Int q = int_pow(p, n);
    return {cur, q, gcd(cur, p) == 1};
}

bool is_square_in_fq(Int const & x, Int const & p, unsigned n)
{
    if (p < 3)
        throw domain_error("is_square_in_fq: p must be odd");
    if (n == 0)
        throw domain_error("is_square_in_fq: n must be positive");
    if (mod_pos(x, p) == 0)
        throw domain_error("is_square_in_fq: x = 0 mod p, squareness undetermined");
    // x lies in F_p, so x^((p^n - 1)/2) can be evaluated mod p.
    Int e = (int_pow(p, n) - 1) / 2;
    return pow_mod(x, e, p) == 1;
}

std::vector<Int> tau_roots_mod_p(Discriminant d, Int const & p)
{
    std::vector<Int> roots;
    Int c = mod_pos(Int(d.tau_norm()), p);
    // roots of X^2 - X + c are (1 +- sqrt(1 - 4c)) / 2 and 1 - 4c = -d
    Int disc = mod_pos(Int(-d.value()), p);
    if (disc == 0) {
        roots.push_back(mod_pos(Int(1) * ((p + 1) / 2), p));
        return roots;
    }
    if (legendre(disc, p) != 1)
        return roots;
    // Tonelli-Shanks for sqrt(disc) mod p
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1)
        ++z;
    Int m = s;
    Int cc = pow_mod(z, q, p);
    Int t = pow_mod(disc, q, p);
    Int r = pow_mod(disc, (q + 1) / 2, p);
    while (t != 1) {
        unsigned long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = cc;
        for (unsigned long j = 0; j + 1 < m.get_ui() - i; ++j)
            b = b * b % p;
        m = i;
        cc = b * b % p;
        t = t * cc % p;
        r = r * b % p;
    }
    Int inv2 = (p + 1) / 2;
    roots.push_back(mod_pos((1 + r) * inv2, p));
    roots.push_back(mod_pos((1 - r) * inv2, p));
    if (roots[1] < roots[0])
        std::swap(roots[0], roots[1]);
    return roots;
}

Int reduce_quadint_mod_p(QuadInt const & x, Int const & p, Int const & root)
{
    if (p < 3)
        throw domain_error("reduce_quadint_mod_p: p must be odd");
    if (x.is_rational())
        return mod_pos(x.a(), p);
    Int const n(x.disc().tau_norm());
    if (mod_pos(root * root - root + n, p) != 0)
        throw domain_error("reduce_quadint_mod_p: root_choice is not a root of "
                           "X^2 - X + (1+d)/4 mod p");
    if (legendre(Int(-x.disc().value()), p) != 1)
        throw domain_error("reduce_quadint_mod_p: no degree-1 prime above p");
    return mod_pos(x.a() + x.b() * root, p);
}

} // namespace cmtheta
