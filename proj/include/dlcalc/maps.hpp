#pragma once

// The S^1-transfer, the transfer alpha = iota + c, the BSpin(3) composite, and the
// assembly of the Betti numbers of the stable spin mapping class group.

#include "dlcalc/loopspace.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlcalc {

// Decomposable tail of the transfer on the classes abar_r: none, or the one that makes
// the value primitive.
enum class TailPolicy { Zero, Primitive };

std::string_view tail_name(TailPolicy policy);  // zero, primitive
std::optional<TailPolicy> parse_tail(std::string_view name);

// A map of infinite loop spaces, determined by its values on the base classes.
// Values are normalized elements of the target; f(Q^I x) = Q^I f(x) with the
// operations of the 0-component, and f is multiplicative.
class GeneratorMap
{
public:
    using BaseValues = std::function<std::optional<Element>(int index)>;

    GeneratorMap(std::string name, Model& source, Model& target, BaseValues values);

    const std::string& name() const { return name_; }
    // Throws InsufficientGeneratorData when a needed base value is missing.
    const Element& on_generator(GenId g);
    Element apply(const Monomial& m);
    Element apply(const Element& x);

private:
    std::string name_;
    Model& source_;
    Model& target_;
    BaseValues values_;
    std::map<int, Element> base_cache_;
    std::unordered_map<GenId, Element> cache_;
};

// e_{2r+1} + Q^{r+1} e_r plus the tail, normalized into H_*(Q_0 RP^inf_+).  The
// primitive tail gives p_{2r+1} + p_(r+1,r).
Element partial_on_generator(RPPrimitives& rp, int r, TailPolicy policy);

// The transfer d : Q Sigma(CP^inf_+) -> Q RP^inf_+ on homology.  With lift = true the
// generator values are replaced by the primitives with the same indecomposable part,
// which turns any tail policy into a coalgebra map.
class PartialMap
{
public:
    PartialMap(RPPrimitives& rp, QHopf& sigma, TailPolicy policy, bool lift);

    TailPolicy policy() const { return policy_; }
    GeneratorMap& map() { return map_; }
    Element apply(const Element& x) { return map_.apply(x); }

    std::size_t rank(int degree);
    // Rank on the primitives of the source.
    std::size_t primitive_rank(int degree);
    // Image of the source primitives in PH_n coordinates of the target.
    // Throws BasisMismatch unless the images are primitive.
    gf2::F2Subspace primitive_image(int degree);

private:
    RPPrimitives& rp_;
    QHopf& sigma_;
    TailPolicy policy_;
    GeneratorMap map_;
};

// The spaces and maps shared by every computation; all caches live here.
class Workspace
{
public:
    Workspace();

    RPPrimitives& rp() { return rp_; }
    RPPrimitives& rp_reduced();
    QHopf& sigma() { return sigma_; }
    QHopf& bspin2() { return bspin2_; }
    QHopf& bspin3() { return bspin3_; }
    PartialMap& partial(TailPolicy policy, bool lift);

private:
    RPPrimitives rp_;
    std::unique_ptr<RPPrimitives> rp_reduced_;
    QHopf sigma_;
    QHopf bspin2_;
    QHopf bspin3_;
    std::map<std::pair<int, bool>, std::unique_ptr<PartialMap>> partials_;
};

// Injectivity of d and of P(d) through max_degree, plus Q-equivariance and
// Steenrod naturality of the extension.
Report verify_partial_injective(Workspace& ws, int max_degree, TailPolicy policy);

// sum_{r+s=i} a_r a_s in the full algebra of BSpin(2); lands in the 2-component.
Element transfer_iota_plus_c(Model& bspin2, int i);
// Q^{2I} b_i -> (Q^I a_i)^2 in the full algebra of BSpin(2).  Throws NonDoubledWord
// for a word with an odd entry.
Element theorem2_composite(Model& bspin2, const Generator& g);
// Dims of xi H_*(Q_0 BSpin(2)_+): polynomial on the squares of the generators.
std::vector<std::size_t> kernel_poincare(Model& bspin2, int max_degree);
// Hopf kernel of the quotient H -> H / (squares) computed from the coproduct.
std::vector<std::size_t> surrogate_kernel_dims(QHopf& bspin2, int max_degree);

struct CokernelGenerators
{
    std::vector<std::size_t> generators;     // W_j, j = 0..max_degree
    std::vector<std::size_t> kernel;         // Ker(lambda')_{j+2}
    std::vector<std::size_t> dual_kernel;    // dim PH_n / im P(d), n = 0..max_degree + 2
    std::vector<std::size_t> algebra_dims;   // exterior algebra on W
};

// Throws NotClosedUnderSquaring if lambda'' does not preserve Ker(lambda') cap im P(d).
CokernelGenerators cokernel_generators(Workspace& ws, int max_degree, TailPolicy policy);

struct BettiTable
{
    std::vector<std::size_t> dims;
    // Per-factor dims of the tensor factorization, keyed by factor name.
    std::map<std::string, std::vector<std::size_t>> factors;
    std::string convention;
};

BettiTable spin_betti(Workspace& ws, int max_degree, TailPolicy policy);
// dims of H_*(Omega^2_0 Q RP^inf_+) (x) H_*(Q_0 BSpin(3)_+).
std::vector<std::size_t> corollary18_bound(Workspace& ws, int max_degree);
Report corollary18_check(Workspace& ws, int max_degree, TailPolicy policy);
Report theorem2_check(Workspace& ws, int max_degree);

}  // namespace dlcalc
