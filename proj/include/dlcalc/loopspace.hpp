#pragma once

// Primitives of H_*(Q_0 RP^inf_+): the labelled basis p_(I,i), the lambda-operations
// on them, and the cohomology models of the first two loop spaces.

#include "dlcalc/hopf.hpp"
#include "dlcalc/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace dlcalc {

// p_(I,i): I admissible (possibly empty), e(I) >= i, and (I, i) not all even.
struct PrimitiveLabel
{
    Word word;
    int index = 0;

    int degree() const;
    std::string name() const;  // p_3, p_(2,1), p_(2,1,1,0)
    bool operator==(const PrimitiveLabel&) const = default;
    auto operator<=>(const PrimitiveLabel&) const = default;
};

// Validating constructor; the reduced model has no e_0 and so needs index >= 1.
// Throws InvalidLabel.
PrimitiveLabel make_label(Word word, int index, bool reduced = false);
bool valid_label(const Word& word, int index, bool reduced = false);
// All labels of one degree in a deterministic order.
std::vector<PrimitiveLabel> primitive_labels(int degree, bool reduced = false);

class RPPrimitives
{
public:
    explicit RPPrimitives(bool reduced = false);

    QHopf& hopf() { return hopf_; }
    Model& model() { return hopf_.model(); }
    bool reduced() const { return reduced_; }

    // The unique primitive of odd degree whose indecomposable part is that of x.
    // Throws NoSolution or NonUnique.
    Element primitive_lift(const Element& x);
    const Element& canonical_primitive(const PrimitiveLabel& label);
    // Labels of one degree, after checking that their primitives form a basis of PH.
    // Throws BasisMismatch.
    std::vector<PrimitiveLabel> primitive_basis(int degree);

    // Coordinates of a primitive with respect to hopf().primitives(d).basis().
    // Throws BasisMismatch if x is not primitive.
    gf2::BitVector coordinates(const Element& x, int degree);
    Element lambda(LambdaKind kind, const Element& x);
    // Matrix of a lambda-operation PH_src -> PH_target in primitive coordinates.
    gf2::F2Matrix lambda_matrix(LambdaKind kind, int src_degree);
    // Kernel of lambda' on PH_n (all of PH_n in even degrees), as a subspace in
    // primitive coordinates.
    gf2::F2Subspace lambda_prime_kernel(int degree);

private:
    bool reduced_;
    QHopf hopf_;
    std::map<PrimitiveLabel, Element> canonical_;
    std::map<std::pair<int, int>, gf2::F2Matrix> lambda_matrices_;
};

// lambda : QH_src -> QH_{src/2} on generators of the normalized algebra.
gf2::F2Matrix lambda_indecomposable_matrix(Model& m, int src_degree);

// lambda-surjectivity reports.  Sources of lambda on QH reach degree 2 * max_degree
// since only indecomposables are involved; lambda' on PH uses sources up to max_degree.
Report verify_lambda(LambdaKind kind, int max_degree);

// Cohomology of the level-k loop space as A(V, xi), held in homology-dual coordinates:
// V_j is the dual of a space of primitives and xi_dual[j] : V_{2j} -> V_j is the
// transpose of xi.  Level 0 is X itself: V = QH_* with lambda, which only serves the
// polynomiality test, and dims() is then the polynomial algebra on V.
struct LoopModel
{
    int level = 0;
    int max_degree = 0;
    std::vector<std::size_t> generators;  // dim V_j for j = 0..max_degree
    std::map<int, gf2::F2Matrix> xi_dual;

    // xi injective on V wherever both V_j and V_2j are in range.
    bool polynomial() const;
    // Degrees j whose generators contain a class with xi x = 0.
    std::vector<int> square_zero_degrees() const;
    AFunctorPresentation presentation() const;
    std::vector<std::size_t> dims() const;
};

// level 0: V = QH_*, xi_dual = lambda.  level 1: V_m = PH_{m+1}, xi_dual = lambda'.  level 2: V_j = Ker(lambda')_{j+2},
// xi_dual = lambda''.  `ph_max_degree` bounds the primitive degrees used.
// Throws NotPolynomial if the previous level is not polynomial.
LoopModel loop_model(RPPrimitives& prims, int level, int ph_max_degree);

}  // namespace dlcalc
