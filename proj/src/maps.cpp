#include "dlcalc/maps.hpp"

#include "dlcalc/error.hpp"

#include <algorithm>
#include <set>

namespace dlcalc {

using gf2::BitVector;
using gf2::F2Matrix;
using gf2::F2Subspace;

std::string_view tail_name(TailPolicy policy)
{
    return policy == TailPolicy::Zero ? "zero" : "primitive";
}

std::optional<TailPolicy> parse_tail(std::string_view name)
{
    if (name == "zero")
        return TailPolicy::Zero;
    if (name == "primitive")
        return TailPolicy::Primitive;
    return std::nullopt;
}

// ---------------------------------------------------------------- GeneratorMap

GeneratorMap::GeneratorMap(std::string name, Model& source, Model& target, BaseValues values)
    : name_(std::move(name)), source_(source), target_(target), values_(std::move(values))
{
}

const Element& GeneratorMap::on_generator(GenId g)
{
    if (auto it = cache_.find(g); it != cache_.end())
        return it->second;
    const Generator& G = source_.generator(g);
    auto bit = base_cache_.find(G.base);
    if (bit == base_cache_.end()) {
        auto v = values_(G.base);
        if (!v)
            throw Error(ErrorKind::InsufficientGeneratorData,
                        name_ + ": no value on " + class_name(SpaceClass{source_.space(), G.base}));
        bit = base_cache_.emplace(G.base, target_.normalize(*v)).first;
    }
    Element value = target_.apply_word_translated(G.word, bit->second);
    return cache_.emplace(g, std::move(value)).first->second;
}

Element GeneratorMap::apply(const Monomial& m)
{
    Element out = Element::one();
    for (const auto& f : m.factors()) {
        Element base = on_generator(f.gen);
        std::uint32_t e = f.exp;
        while (e) {
            if (e & 1U)
                out = out * base;
            e >>= 1;
            if (e)
                base = base.square();
        }
    }
    return out;
}

Element GeneratorMap::apply(const Element& x)
{
    Element out;
    for (const auto& m : x.terms())
        out += apply(m);
    return out;
}

// ---------------------------------------------------------------- the transfer d

Element partial_on_generator(RPPrimitives& rp, int r, TailPolicy policy)
{
    if (r < 0)
        throw Error(ErrorKind::DegreeOutOfRange, "abar_r needs r >= 0");
    Model& m = rp.model();
    if (policy == TailPolicy::Zero)
        return m.normalize(m.base_element(2 * r + 1) + m.Q(r + 1, m.base(r)));
    return rp.canonical_primitive(PrimitiveLabel{{}, 2 * r + 1}) + rp.canonical_primitive(PrimitiveLabel{{r + 1}, r});
}

PartialMap::PartialMap(RPPrimitives& rp, QHopf& sigma, TailPolicy policy, bool lift)
    : rp_(rp),
      sigma_(sigma),
      policy_(policy),
      map_("d", sigma.model(), rp.model(), [&rp, policy, lift](int r) -> std::optional<Element> {
          Element v = partial_on_generator(rp, r, policy);
          if (lift)
              v = rp.primitive_lift(v);
          return v;
      })
{
}

std::size_t PartialMap::rank(int degree)
{
    const DegreeBasis& T = rp_.hopf().basis(degree);
    std::vector<BitVector> rows;
    for (const auto& m : sigma_.basis(degree).monomials())
        rows.push_back(T.to_vector(map_.apply(m)));
    return gf2::rank(F2Matrix::from_rows(T.size(), std::move(rows)));
}

std::size_t PartialMap::primitive_rank(int degree)
{
    const DegreeBasis& T = rp_.hopf().basis(degree);
    std::vector<BitVector> rows;
    for (const auto& p : sigma_.primitive_elements(degree))
        rows.push_back(T.to_vector(map_.apply(p)));
    return gf2::rank(F2Matrix::from_rows(T.size(), std::move(rows)));
}

F2Subspace PartialMap::primitive_image(int degree)
{
    std::vector<BitVector> vs;
    for (const auto& p : sigma_.primitive_elements(degree))
        vs.push_back(rp_.coordinates(map_.apply(p), degree));
    return F2Subspace::span(rp_.hopf().primitives(degree).dim(), vs);
}

// ---------------------------------------------------------------- Workspace

Workspace::Workspace()
    : rp_(false), sigma_(SpaceId::SigmaCPinf), bspin2_(SpaceId::BSpin2), bspin3_(SpaceId::BSpin3)
{
}

RPPrimitives& Workspace::rp_reduced()
{
    if (!rp_reduced_)
        rp_reduced_ = std::make_unique<RPPrimitives>(true);
    return *rp_reduced_;
}

PartialMap& Workspace::partial(TailPolicy policy, bool lift)
{
    auto key = std::make_pair(static_cast<int>(policy), lift);
    auto& slot = partials_[key];
    if (!slot)
        slot = std::make_unique<PartialMap>(rp_, sigma_, policy, lift);
    return *slot;
}

// ---------------------------------------------------------------- cor2.7

Report verify_partial_injective(Workspace& ws, int max_degree, TailPolicy policy)
{
    Report r{"cor2.7", {}, {}};
    std::string tag = " [tail " + std::string(tail_name(policy)) + "]";
    PartialMap& d = ws.partial(policy, false);
    QHopf& S = ws.sigma();
    Model& sm = S.model();
    Model& tm = ws.rp().model();
    for (int n = 1; n <= max_degree; ++n) {
        std::size_t rk = d.rank(n), dim = S.dim(n);
        r.add("d injective in degree " + std::to_string(n) + tag, rk == dim,
              "rank " + std::to_string(rk) + " of " + std::to_string(dim));
    }
    for (int n = 1; n <= max_degree; ++n) {
        std::size_t rk = d.primitive_rank(n), dim = S.primitives(n).dim();
        r.add("P(d) injective in degree " + std::to_string(n) + tag, rk == dim,
              "rank " + std::to_string(rk) + " of " + std::to_string(dim));
    }
    if (policy == TailPolicy::Primitive) {
        bool primitive = true;
        for (int n = 1; n <= max_degree && primitive; ++n) {
            for (const auto& p : S.primitive_elements(n))
                primitive = primitive && ws.rp().hopf().is_primitive(d.apply(p));
        }
        r.add("d maps primitives to primitives" + tag, primitive);
    }
    // Q-equivariance on products: the extension is defined on generators only.
    std::size_t ok = 0, total = 0;
    for (int n = 1; 2 * n <= max_degree && n <= 6; ++n) {
        for (const auto& m : S.basis(n).monomials()) {
            Element fm = d.map().apply(m);
            for (int s = n; n + s <= max_degree; ++s) {
                ++total;
                if (d.map().apply(sm.Q(s, m)) == tm.Qt(s, fm))
                    ++ok;
            }
        }
    }
    r.add("d Q^s x = Q^s d x on monomials" + tag, ok == total, std::to_string(ok) + " of " + std::to_string(total));
    // Steenrod naturality on generators.
    ok = total = 0;
    for (int n = 1; n <= max_degree; ++n) {
        for (GenId g : sm.normalized_generators(n)) {
            Element dg = d.map().on_generator(g);
            for (int a = 1; 2 * a <= n; ++a) {
                ++total;
                if (tm.normalize(tm.sq(a, dg)) == d.apply(sm.sq(a, g)))
                    ++ok;
            }
        }
    }
    std::string detail = std::to_string(ok) + " of " + std::to_string(total);
    if (policy == TailPolicy::Primitive)
        r.add("Sq^a_* d = d Sq^a_* on generators" + tag, ok == total, detail);
    else
        r.notes.push_back("Sq^a_* d = d Sq^a_* on generators" + tag + ": " + detail + " (not expected without tails)");
    return r;
}

// ---------------------------------------------------------------- thm2

Element transfer_iota_plus_c(Model& bspin2, int i)
{
    Element out;
    for (const auto& [l, rr] : coproduct(SpaceClass{SpaceId::BSpin2, i}))
        out += bspin2.base_element(l->index) * bspin2.base_element(rr->index);
    return out;
}

Element theorem2_composite(Model& bspin2, const Generator& g)
{
    for (int x : g.word)
        if (x % 2 != 0)
            throw Error(ErrorKind::NonDoubledWord, render_word(g.word) + " is not a doubled word");
    Element a = bspin2.base_element(g.base);
    return bspin2.apply_word(g.word, a * a);
}

std::vector<std::size_t> kernel_poincare(Model& bspin2, int max_degree)
{
    std::vector<std::size_t> by_degree(max_degree + 1, 0);
    for (int d = 1; 2 * d <= max_degree; ++d)
        by_degree[2 * d] += bspin2.normalized_generators(d).size();
    return polynomial_dims(by_degree, max_degree);
}

std::vector<std::size_t> surrogate_kernel_dims(QHopf& bspin2, int max_degree)
{
    auto square_free = [](const Monomial& m) {
        for (const auto& f : m.factors())
            if (f.exp > 1)
                return Element();
        return Element(m);
    };
    return hopf_kernel_dims(bspin2, square_free, max_degree);
}

Report theorem2_check(Workspace& ws, int max_degree)
{
    Report r{"thm2", {}, {}};
    Model& m2 = ws.bspin2().model();
    Model& m3 = ws.bspin3().model();
    auto xi = kernel_poincare(m2, max_degree);
    auto surrogate = surrogate_kernel_dims(ws.bspin2(), max_degree);
    for (int n = 0; n <= max_degree; ++n)
        r.add("Hopf kernel dim = xi H dim in degree " + std::to_string(n), xi[n] == surrogate[n],
              std::to_string(surrogate[n]) + " vs " + std::to_string(xi[n]));

    // b_i -> a_i^2 and Q^{2I} b_i -> (Q^I a_i)^2.
    std::size_t ok = 0, total = 0, rejected = 0, odd = 0;
    auto key = [](const Monomial& mono) {
        std::vector<std::pair<GenId, std::uint32_t>> k;
        for (const auto& f : mono.factors())
            k.emplace_back(f.gen, f.exp);
        return k;
    };
    std::vector<Generator> sources{Generator{0, {}}};
    for (int n = 1; n <= max_degree; ++n)
        for (GenId g : m3.normalized_generators(n))
            sources.push_back(m3.generator(g));
    for (const auto& G : sources) {
        bool doubled = std::all_of(G.word.begin(), G.word.end(), [](int x) { return x % 2 == 0; });
        if (!doubled) {
            ++odd;
            try {
                theorem2_composite(m2, G);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::NonDoubledWord)
                    ++rejected;
            }
            continue;
        }
        Word half;
        for (int x : G.word)
            half.push_back(x / 2);
        Element want = m2.gen(Generator{G.base, half});
        ++total;
        if (theorem2_composite(m2, G) == want * want)
            ++ok;
    }
    r.add("Q^{2I} b_i -> (Q^I a_i)^2", ok == total, std::to_string(ok) + " of " + std::to_string(total));
    r.add("non-doubled words rejected", rejected == odd, std::to_string(rejected) + " of " + std::to_string(odd));
    std::set<std::vector<std::pair<GenId, std::uint32_t>>> squares;
    for (int d = 1; 2 * d <= max_degree; ++d)
        for (GenId g : m2.normalized_generators(d))
            squares.insert({{g, 2U}});
    std::set<std::vector<std::pair<GenId, std::uint32_t>>> hit;
    for (const auto& G : sources) {
        if (G.base == 0 && G.word.empty())
            continue;
        if (!std::all_of(G.word.begin(), G.word.end(), [](int x) { return x % 2 == 0; }))
            continue;
        Element n = m2.normalize(theorem2_composite(m2, G));
        if (n.size() == 1)
            hit.insert(key(*n.terms().begin()));
    }
    r.add("composite hits every xi-generator", hit == squares,
          std::to_string(hit.size()) + " images, " + std::to_string(squares.size()) + " generators");

    for (int i = 0; i <= 6; ++i) {
        Element v = transfer_iota_plus_c(m2, i);
        Element want;
        if (i % 2 == 0) {
            Element a = m2.base_element(i / 2);
            want = a * a;
        }
        r.add("(iota + c)_* a_" + std::to_string(i) + (i % 2 == 0 ? " = a_" + std::to_string(i / 2) + "^2" : " = 0"),
              v == want, m2.render(v));
    }
    return r;
}

// ---------------------------------------------------------------- assembly

CokernelGenerators cokernel_generators(Workspace& ws, int max_degree, TailPolicy policy)
{
    RPPrimitives& rp = ws.rp();
    PartialMap& d = ws.partial(policy, true);
    int top = max_degree + 2;
    CokernelGenerators out;
    out.generators.assign(max_degree + 1, 0);
    out.kernel.assign(max_degree + 1, 0);
    out.dual_kernel.assign(top + 1, 0);
    std::map<int, F2Subspace> KS;
    for (int n = 1; n <= top; ++n) {
        F2Subspace S = d.primitive_image(n);
        out.dual_kernel[n] = rp.hopf().primitives(n).dim() - S.dim();
        if (n < 3)
            continue;
        F2Subspace K = rp.lambda_prime_kernel(n);
        KS[n] = K.intersect(S);
        out.kernel[n - 2] = K.dim();
        out.generators[n - 2] = K.dim() - KS[n].dim();
    }
    for (int j = 1; 2 * j <= max_degree; ++j) {
        F2Matrix M = rp.lambda_matrix(LambdaKind::LambdaDoublePrime, 2 * j + 2);
        for (const auto& v : KS[2 * j + 2].basis()) {
            if (!KS[j + 2].contains(M.apply(v)))
                throw Error(ErrorKind::NotClosedUnderSquaring,
                            "lambda'' leaves Ker(lambda') cap im P(d) in degree " + std::to_string(2 * j + 2));
        }
    }
    out.algebra_dims = exterior_dims(out.generators, max_degree);
    return out;
}

BettiTable spin_betti(Workspace& ws, int max_degree, TailPolicy policy)
{
    if (max_degree < 0)
        throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
    CokernelGenerators C = cokernel_generators(ws, max_degree, policy);
    auto xi = kernel_poincare(ws.bspin2().model(), max_degree);
    BettiTable t;
    t.dims = convolve(C.algebra_dims, xi, max_degree);
    t.factors["omega2-image"] = C.algebra_dims;
    t.factors["xi-kernel"] = xi;
    t.convention = "0-component; iota + c lands in the 2-component and is translated back";
    return t;
}

std::vector<std::size_t> corollary18_bound(Workspace& ws, int max_degree)
{
    LoopModel L = loop_model(ws.rp(), 2, max_degree + 2);
    auto omega2 = L.dims();
    std::vector<std::size_t> t3(max_degree + 1, 0);
    for (int d = 1; d <= max_degree; ++d)
        t3[d] = ws.bspin3().model().normalized_generators(d).size();
    return convolve(omega2, polynomial_dims(t3, max_degree), max_degree);
}

Report corollary18_check(Workspace& ws, int max_degree, TailPolicy policy)
{
    Report r{"cor1.8", {}, {}};
    BettiTable t = spin_betti(ws, max_degree, policy);
    auto bound = corollary18_bound(ws, max_degree);
    for (int n = 0; n <= max_degree; ++n)
        r.add("dim H_" + std::to_string(n) + " <= bound", t.dims[n] <= bound[n],
              std::to_string(t.dims[n]) + " <= " + std::to_string(bound[n]) + ", margin " +
                  std::to_string(static_cast<long long>(bound[n]) - static_cast<long long>(t.dims[n])));
    return r;
}

}  // namespace dlcalc
