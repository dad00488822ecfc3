#pragma once

// H_*(QX_+) as the free commutative algebra on the generator set, with Dyer-Lashof
// operations, the Cartan coproduct and the dual Steenrod action.
//
// Two coordinate systems share one Model.  The full algebra F2[T] contains the
// degree-0 class x_0 = [1] and keeps track of components.  The normalized algebra
// F2[T+] is the quotient x_0 = 1; it models H_*(Q_0 X_+).  In the reduced variant of
// RP^inf the classes Q^I e_0 are also killed, which models H_*(Q RP^inf).

#include "dlcalc/space.hpp"
#include "dlcalc/word.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dlcalc {

using GenId = std::uint32_t;

struct Factor
{
    GenId gen;
    std::uint32_t exp;
    bool operator==(const Factor&) const = default;
};

// A commutative monomial; factors sorted by generator id with positive exponents.
class Monomial
{
public:
    Monomial() = default;
    static Monomial of(GenId g, std::uint32_t exp = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    std::uint32_t exponent(GenId g) const;
    std::uint32_t length() const;  // number of factors counted with multiplicity

    Monomial operator*(const Monomial& rhs) const;
    Monomial pow(std::uint32_t k) const;
    // Remove every occurrence of g.
    Monomial without(GenId g) const;

    bool operator==(const Monomial&) const = default;
    std::size_t hash() const;

private:
    std::vector<Factor> factors_;
};

struct MonomialHash
{
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// F2-linear combination of monomials; addition is symmetric difference.
class Element
{
public:
    Element() = default;
    explicit Element(Monomial m) { terms_.insert(std::move(m)); }
    static Element one() { return Element(Monomial()); }

    const std::unordered_set<Monomial, MonomialHash>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

    void toggle(const Monomial& m);
    void toggle(Monomial&& m);
    Element& operator+=(const Element& rhs);
    Element operator+(const Element& rhs) const;
    Element operator*(const Element& rhs) const;
    Element square() const;  // Frobenius; additive in characteristic 2

    bool operator==(const Element& rhs) const { return terms_ == rhs.terms_; }

private:
    std::unordered_set<Monomial, MonomialHash> terms_;
};

struct TensorTerm
{
    Monomial left;
    Monomial right;
    bool operator==(const TensorTerm&) const = default;
};

struct TensorTermHash
{
    std::size_t operator()(const TensorTerm& t) const { return t.left.hash() * 0x9e3779b97f4a7c15ULL ^ t.right.hash(); }
};

class Tensor
{
public:
    const std::unordered_set<TensorTerm, TensorTermHash>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void toggle(const TensorTerm& t);
    Tensor& operator+=(const Tensor& rhs);
    Tensor operator*(const Tensor& rhs) const;
    Tensor frobenius() const;  // (a (x) b) -> (a^2 (x) b^2) termwise
    bool operator==(const Tensor& rhs) const { return terms_ == rhs.terms_; }

private:
    std::unordered_set<TensorTerm, TensorTermHash> terms_;
};

class Model
{
public:
    explicit Model(SpaceId space, bool reduced = false, int preload_degree = 24);
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;

    SpaceId space() const { return space_; }
    bool reduced() const { return reduced_; }
    // True if the full algebra has the degree-0 class x_0 (and hence components).
    bool has_unit_class() const { return has_unit_; }
    GenId unit_class() const { return unit_id_; }

    GenId intern(const Generator& g);
    GenId base(int index);
    const Generator& generator(GenId id) const { return gens_[id].gen; }
    int degree(GenId id) const { return gens_[id].degree; }
    int degree(const Monomial& m) const;
    // Component of a full-algebra monomial: generator Q^I x has weight 2^len(I).
    std::uint64_t weight(const Monomial& m) const;
    // True if the generator survives in the normalized algebra of this model.
    bool normalized_generator(GenId id) const;

    // Generators of the normalized algebra in one degree, in deterministic order.
    const std::vector<GenId>& normalized_generators(int degree);

    Element gen(const Generator& g) { return Element(Monomial::of(intern(g))); }
    Element gen(GenId id) const { return Element(Monomial::of(id)); }
    Element base_element(int index) { return gen(base(index)); }

    // x_0 -> 1 (and Q^I e_0 -> 0 in the reduced variant).
    Element normalize(const Element& x) const;
    std::optional<Monomial> normalize(const Monomial& m) const;
    Tensor normalize(const Tensor& t) const;

    // Homogeneous part of x in degree d.
    Element degree_part(const Element& x, int d) const;
    // Degree of a nonzero homogeneous element, or -1 for zero; throws if inhomogeneous.
    int degree(const Element& x) const;

    // --- Dyer-Lashof operations in the full algebra ---
    Element Q(int r, GenId g);
    Element Q(int r, const Monomial& m);
    Element Q(int r, const Element& x);
    // Sum of Q^s x over s with deg x + s <= max_degree.
    Element Q_total(const Element& x, int max_degree);
    // Q^{i_1} ... Q^{i_k} x with the innermost index applied first.
    Element apply_word(std::span<const int> word, const Element& x);

    // --- Dyer-Lashof operations on H_*(Q_0 X_+), in normalized coordinates ---
    Element Qt(int r, const Monomial& m);
    Element Qt(int r, const Element& x);
    Element apply_word_translated(std::span<const int> word, const Element& x);

    // --- Dual Steenrod action (same formula in both coordinate systems) ---
    Element sq(int a, GenId g);
    Element sq(int a, const Monomial& m);
    Element sq(int a, const Element& x);
    // Throws ParityMismatch for an inhomogeneous or wrong-parity input.
    Element lambda(LambdaKind kind, const Element& x);
    // Normalized single-generator terms of x (its image in the indecomposables).
    Element linear_part(const Element& x) const;
    // Sq^a_* g modulo decomposables, in normalized coordinates, without expanding products.
    // Decomposables are closed under Q^s and Sq^b_*, so only generators need to be tracked.
    Element sq_indecomposable(int a, GenId g);

    // --- Coproduct ---
    const Tensor& coproduct(GenId g);           // full algebra
    Tensor coproduct(const Monomial& m);        // full algebra
    Tensor coproduct(const Element& x);
    // Coproduct of a normalized monomial, in normalized coordinates.
    Tensor coproduct_normalized(const Monomial& m);
    Tensor coproduct_normalized(const Element& x);

    // --- Rendering ---
    std::string render(GenId g) const;
    std::string render(const Monomial& m) const;
    std::string render(const Element& x) const;
    std::string render(const Tensor& t) const;
    // Sorted terms for deterministic output.
    std::vector<Monomial> sorted_terms(const Element& x) const;
    bool monomial_less(const Monomial& a, const Monomial& b) const;

    // Parse a product of generators such as "Q^2 Q^1 e_1*e_2^3" or "(Q^2 e_1)^2"; "1" is the unit.
    Monomial parse_monomial(const std::string& text);
    Element parse(const std::string& text);

private:
    struct GenInfo
    {
        Generator gen;
        int degree;
        int length;
    };
    struct PairHash
    {
        std::size_t operator()(const std::pair<int, GenId>& p) const { return std::hash<std::uint64_t>()((std::uint64_t(p.first) << 32) | p.second); }
    };

    std::vector<Element> Q_levels(const Monomial& m, int R);
    const Element& unit_series(std::uint64_t weight, int max_degree);
    Tensor coproduct_generator_uncached(GenId g);
    std::vector<GenId> sorted_factor_ids(const Monomial& m) const;

    SpaceId space_;
    bool reduced_;
    bool has_unit_ = false;
    GenId unit_id_ = 0;
    std::vector<GenInfo> gens_;
    std::map<std::pair<int, Word>, GenId> index_;
    std::map<int, std::vector<GenId>> normalized_by_degree_;

    std::unordered_map<std::pair<int, GenId>, Element, PairHash> q_cache_;
    std::unordered_map<std::pair<int, GenId>, Element, PairHash> sq_cache_;
    std::unordered_map<std::pair<int, GenId>, Element, PairHash> sq_ind_cache_;
    std::unordered_map<GenId, Tensor> psi_cache_;
    std::unordered_map<GenId, Tensor> psi_norm_cache_;
    std::map<std::pair<std::uint64_t, int>, Element> unit_series_cache_;
};

}  // namespace dlcalc
