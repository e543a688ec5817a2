#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmtheta/matrix.hpp"
#include "cmtheta/quadorder.hpp"

namespace cmtheta {

using QuadMatrix = Matrix<QuadInt>;

/// Hermitian g x g matrix over O_K. A positive definite one of determinant 1
/// is the matrix a0^{-1} a of a principal polarization a on E^g.
class HermitianForm
{
    Discriminant d_;
    QuadMatrix entries_;
    std::string label_;

  public:
    /// Throws domain_error unless the matrix is square and Hermitian.
    HermitianForm(Discriminant d, QuadMatrix entries, std::string label = "custom");

    /// Entries given as (a, b) pairs, row-major.
    static HermitianForm from_pairs(Discriminant d, std::size_t g,
                                    std::vector<std::pair<long, long>> const & pairs,
                                    std::string label = "custom");

    static HermitianForm identity(Discriminant d, std::size_t g);

    Discriminant disc() const { return d_; }
    std::size_t dim() const { return entries_.rows(); }
    QuadInt const & operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    QuadMatrix const & entries() const { return entries_; }
    std::string const & label() const { return label_; }

    /// Entrywise conjugate (again Hermitian).
    HermitianForm conj() const;

    /// conj(x)^t M y
    QuadInt pairing(std::vector<QuadInt> const & x, std::vector<QuadInt> const & y) const;
};

bool is_hermitian(QuadMatrix const & m);

QuadInt quad_det(QuadMatrix const & m);

QuadInt hermitian_det(HermitianForm const & m);

/// All leading principal minors positive. The minors are rational integers
/// for a Hermitian matrix; a non-rational minor raises domain_error.
bool is_positive_definite(HermitianForm const & m);

/// Gram matrix of the rank-2g Z-lattice O_K^g with the bilinear form
/// Tr_{K/Q}(conj(x)^t M y), Z-basis (e_1, tau e_1, e_2, tau e_2, ...).
/// The diagonal is twice the Hermitian norm, hence even.
IntMatrix gram_realization(HermitianForm const & m);

/// Coefficient vectors v in Z^n with v^t G v <= bound (G positive definite).
/// Throws unsupported_error once more than cap vectors are found.
std::vector<std::vector<Int>> short_vectors(IntMatrix const & gram, Int const & bound,
                                            std::size_t cap);

/// Unitary automorphisms Q in GL_g(O_K) with conj(Q)^t M Q = M.
std::vector<QuadMatrix> automorphisms(HermitianForm const & m, std::size_t cap = 100000);

std::size_t automorphism_order(HermitianForm const & m, std::size_t cap = 100000);

/// One principal polarization of the reference catalog.
struct CatalogEntry
{
    long d = 0;
    int index = 0;
    HermitianForm form;
    std::size_t automorphism_order = 0;
    /// Index of the catalog row whose form is the conjugate of this one (the
    /// second index of a paired row), if any.
    std::optional<int> conjugate_of;
    bool indecomposable = true;
    /// Factored expected value of chi_18 in [a,b] notation (a + b tau).
    std::string expected_chi;
    /// How expected_chi differs from the printed source value, if it does.
    std::string correction;
};

/// Every catalog form, in catalog order.
std::vector<CatalogEntry> const & form_catalog();

CatalogEntry const & catalog_lookup(long d, int index);

/// Indices present for d, ascending.
std::vector<int> catalog_indices(long d);

/// Whether the catalog lists every indecomposable form for d (false for
/// d = 163, where only two rows are known to the catalog).
bool catalog_is_complete(long d);

/// Evaluates a factored expression such as "-2^11*3^9*[-1,2]^27*[5,-2]"
/// or "(2^5*19^7)^2*(-2)" or "conj(...)" exactly in O_K.
QuadInt parse_quad_expression(std::string const & text, Discriminant d);

} // namespace cmtheta
