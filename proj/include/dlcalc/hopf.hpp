#pragma once

// Degreewise linear algebra on the normalized algebra: coordinates, primitives,
// indecomposables, Hopf kernels and the A(V, xi) functor.

#include "dlcalc/algebra.hpp"
#include "dlcalc/gf2.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace dlcalc {

// All normalized monomials of one degree, in a deterministic order.
class DegreeBasis
{
public:
    DegreeBasis(Model& model, int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::optional<std::size_t> index(const Monomial& m) const;

    // Throws BasisMismatch if x has a term outside this degree.
    gf2::BitVector to_vector(const Element& x) const;
    Element to_element(const gf2::BitVector& v) const;

private:
    int degree_;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

class QHopf
{
public:
    explicit QHopf(SpaceId space, bool reduced = false);

    Model& model() { return *model_; }
    SpaceId space() const { return model_->space(); }

    const DegreeBasis& basis(int degree);
    std::size_t dim(int degree) { return basis(degree).size(); }

    // Primitive subspace in basis(degree) coordinates (degree >= 1).
    const gf2::F2Subspace& primitives(int degree);
    std::vector<Element> primitive_elements(int degree);
    bool is_primitive(const Element& x);

    // Span of the single-generator monomials: the canonical complement of the decomposables.
    gf2::F2Subspace indecomposables(int degree);
    std::size_t indecomposable_dim(int degree);
    // Image of x in QH: coefficients of the single-generator monomials, ordered as
    // model().normalized_generators(degree).
    gf2::BitVector indecomposable_part(const Element& x);
    Element frobenius(const Element& x) const { return x.square(); }

    // Matrix of a linear map from degree d_src to degree d_dst given by f, columns = source basis.
    gf2::F2Matrix matrix_of(int d_src, int d_dst, const std::function<Element(const Monomial&)>& f);

private:
    std::unique_ptr<Model> model_;
    std::map<int, std::unique_ptr<DegreeBasis>> bases_;
    std::map<int, gf2::F2Subspace> primitives_;
};

// Left kernel helper: rows are (image | tag); returns the tags of combinations with zero image.
std::vector<gf2::BitVector> left_kernel(std::vector<std::pair<gf2::BitVector, gf2::BitVector>> rows);

// dims of the Hopf kernel {x : (1 (x) f) psi(x) = x (x) 1} in degrees 0..max_degree of the
// normalized algebra of `source`.  `f` is applied to the right tensor factor of the
// reduced coproduct; its values may live in any algebra.  The product-closure check
// is part of the computation and throws NotClosedUnderSquaring on failure.
std::vector<std::size_t> hopf_kernel_dims(QHopf& source, const std::function<Element(const Monomial&)>& f,
                                          int max_degree);

// A graded vector space with a degree-doubling linear map xi.
struct AFunctorPresentation
{
    std::vector<int> generator_degrees;
    // xi_action[g] lists the generators whose sum is xi(g); each has degree 2 deg(g).
    std::vector<std::vector<std::size_t>> xi_action;
};

// Reduce a monomial (exponents per generator) to square-free normal form by x^2 -> xi x.
std::map<std::vector<std::uint32_t>, int> a_functor_normal_form(const AFunctorPresentation& p,
                                                                const std::vector<std::uint32_t>& exponents);
std::vector<std::size_t> a_functor_dims(const AFunctorPresentation& p, int max_degree);
// dim S(V)_n - rank of the ideal (x^2 + xi x) in degree n, by sparse elimination over
// all monomials; independent of the normal-form count above.
std::vector<std::size_t> a_functor_quotient_dims(const AFunctorPresentation& p, int max_degree);

// Graded dimension helpers.
std::vector<std::size_t> exterior_dims(const std::vector<std::size_t>& gens_by_degree, int max_degree);
std::vector<std::size_t> polynomial_dims(const std::vector<std::size_t>& gens_by_degree, int max_degree);
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, int max_degree);

}  // namespace dlcalc
