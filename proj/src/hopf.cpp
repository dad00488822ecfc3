#include "dlcalc/hopf.hpp"

#include "dlcalc/error.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace dlcalc {

using gf2::BitVector;
using gf2::F2Matrix;
using gf2::F2Subspace;

// ---------------------------------------------------------------- DegreeBasis

namespace {

void enumerate_monomials(const std::vector<std::pair<GenId, int>>& gens, std::size_t at, int remaining,
                         Monomial& current, std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (at == gens.size())
        return;
    auto [g, d] = gens[at];
    Monomial saved = current;
    for (int e = 0; e * d <= remaining; ++e) {
        current = e == 0 ? saved : saved * Monomial::of(g, static_cast<std::uint32_t>(e));
        enumerate_monomials(gens, at + 1, remaining - e * d, current, out);
    }
    current = saved;
}

}  // namespace

DegreeBasis::DegreeBasis(Model& model, int degree) : degree_(degree)
{
    if (degree < 0)
        throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
    std::vector<std::pair<GenId, int>> gens;
    for (int d = degree; d >= 1; --d)
        for (GenId g : model.normalized_generators(d))
            gens.emplace_back(g, d);
    Monomial current;
    enumerate_monomials(gens, 0, degree, current, monomials_);
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> DegreeBasis::index(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

BitVector DegreeBasis::to_vector(const Element& x) const
{
    BitVector v(size());
    for (const auto& m : x.terms()) {
        auto i = index(m);
        if (!i)
            throw Error(ErrorKind::BasisMismatch, "monomial outside the degree-" + std::to_string(degree_) + " basis");
        v.flip(*i);
    }
    return v;
}

Element DegreeBasis::to_element(const BitVector& v) const
{
    Element x;
    for (std::size_t i : v.support())
        x.toggle(monomials_[i]);
    return x;
}

// ---------------------------------------------------------------- QHopf

QHopf::QHopf(SpaceId space, bool reduced) : model_(std::make_unique<Model>(space, reduced)) {}

const DegreeBasis& QHopf::basis(int degree)
{
    auto it = bases_.find(degree);
    if (it == bases_.end())
        it = bases_.emplace(degree, std::make_unique<DegreeBasis>(*model_, degree)).first;
    return *it->second;
}

std::vector<BitVector> left_kernel(std::vector<std::pair<BitVector, BitVector>> rows)
{
    std::vector<BitVector> kernel;
    std::unordered_map<std::size_t, std::size_t> pivot_at;
    std::vector<std::pair<BitVector, BitVector>> pivots;
    for (auto& row : rows) {
        auto& [image, tag] = row;
        while (true) {
            std::size_t lead = image.leading();
            if (lead == image.size()) {
                kernel.push_back(std::move(tag));
                break;
            }
            auto it = pivot_at.find(lead);
            if (it == pivot_at.end()) {
                pivot_at.emplace(lead, pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            const auto& piv = pivots[it->second];
            image.xor_from(piv.first, lead / gf2::kWordBits);
            tag ^= piv.second;
        }
    }
    return kernel;
}

const F2Subspace& QHopf::primitives(int n)
{
    if (auto it = primitives_.find(n); it != primitives_.end())
        return it->second;
    if (n < 1)
        throw Error(ErrorKind::DegreeOutOfRange, "primitives need degree >= 1");
    const DegreeBasis& B = basis(n);
    std::size_t N = B.size();
    int half = n / 2;
    std::vector<std::size_t> dl(half + 1), dr(half + 1);
    for (int p = 1; p <= half; ++p) {
        dl[p] = basis(p).size();
        dr[p] = basis(n - p).size();
    }
    // Sparse reduced-coproduct components (p, n-p), p <= n/2, for every basis monomial.
    std::vector<std::vector<std::vector<std::uint32_t>>> blocks(N, std::vector<std::vector<std::uint32_t>>(half + 1));
    for (std::size_t i = 0; i < N; ++i) {
        Tensor psi = model_->coproduct_normalized(B.monomials()[i]);
        for (const auto& t : psi.terms()) {
            int p = model_->degree(t.left);
            if (p < 1 || p > half)
                continue;
            auto li = basis(p).index(t.left);
            auto ri = basis(n - p).index(t.right);
            if (!li || !ri)
                throw Error(ErrorKind::BasisMismatch, "coproduct term outside the normalized basis");
            blocks[i][p].push_back(static_cast<std::uint32_t>(*li * dr[p] + *ri));
        }
    }
    std::vector<BitVector> candidates;
    candidates.reserve(N);
    for (std::size_t i = 0; i < N; ++i)
        candidates.push_back(BitVector::unit(N, i));
    for (int p = 1; p <= half && !candidates.empty(); ++p) {
        std::size_t width = dl[p] * dr[p];
        std::vector<std::pair<BitVector, BitVector>> rows;
        rows.reserve(candidates.size());
        for (auto& c : candidates) {
            BitVector image(width);
            for (std::size_t i : c.support())
                for (auto col : blocks[i][p])
                    image.flip(col);
            rows.emplace_back(std::move(image), std::move(c));
        }
        candidates = left_kernel(std::move(rows));
    }
    return primitives_.emplace(n, F2Subspace::span(N, candidates)).first->second;
}

std::vector<Element> QHopf::primitive_elements(int degree)
{
    std::vector<Element> out;
    const auto& P = primitives(degree);
    for (const auto& v : P.basis())
        out.push_back(basis(degree).to_element(v));
    return out;
}

bool QHopf::is_primitive(const Element& x)
{
    Tensor psi = model_->coproduct_normalized(x);
    for (const auto& t : psi.terms())
        if (!t.left.is_unit() && !t.right.is_unit())
            return false;
    return true;
}

F2Subspace QHopf::indecomposables(int degree)
{
    const DegreeBasis& B = basis(degree);
    std::vector<BitVector> vs;
    for (GenId g : model_->normalized_generators(degree))
        vs.push_back(BitVector::unit(B.size(), *B.index(Monomial::of(g))));
    return F2Subspace::span(B.size(), vs);
}

std::size_t QHopf::indecomposable_dim(int degree)
{
    return model_->normalized_generators(degree).size();
}

BitVector QHopf::indecomposable_part(const Element& x)
{
    int d = model_->degree(x);
    if (d < 1)
        return BitVector(0);
    const auto& gens = model_->normalized_generators(d);
    BitVector v(gens.size());
    for (const auto& m : x.terms()) {
        if (m.factors().size() != 1 || m.factors().front().exp != 1)
            continue;
        auto it = std::find(gens.begin(), gens.end(), m.factors().front().gen);
        if (it == gens.end())
            throw Error(ErrorKind::BasisMismatch, "generator outside the normalized algebra");
        v.flip(static_cast<std::size_t>(it - gens.begin()));
    }
    return v;
}

F2Matrix QHopf::matrix_of(int d_src, int d_dst, const std::function<Element(const Monomial&)>& f)
{
    const DegreeBasis& S = basis(d_src);
    const DegreeBasis& T = basis(d_dst);
    std::vector<BitVector> columns;
    columns.reserve(S.size());
    for (const auto& m : S.monomials())
        columns.push_back(T.to_vector(f(m)));
    return F2Matrix::from_rows(T.size(), std::move(columns)).transpose();
}

// ---------------------------------------------------------------- Hopf kernel

std::vector<std::size_t> hopf_kernel_dims(QHopf& source, const std::function<Element(const Monomial&)>& f,
                                          int max_degree)
{
    Model& model = source.model();
    std::vector<std::size_t> dims(max_degree + 1, 0);
    std::vector<F2Subspace> kernels(max_degree + 1);
    if (max_degree >= 0) {
        dims[0] = 1;
        kernels[0] = F2Subspace::full(1);
    }
    for (int n = 1; n <= max_degree; ++n) {
        const DegreeBasis& B = source.basis(n);
        std::size_t N = B.size();
        // Column ids for (left monomial, target monomial) pairs, assigned on first use.
        std::unordered_map<TensorTerm, std::size_t, TensorTermHash> columns;
        std::vector<std::vector<std::size_t>> sparse(N);
        for (std::size_t i = 0; i < N; ++i) {
            Tensor psi = model.coproduct_normalized(B.monomials()[i]);
            Tensor image;
            for (const auto& t : psi.terms()) {
                if (t.right.is_unit())
                    continue;
                Element fr = f(t.right);
                for (const auto& m : fr.terms())
                    image.toggle(TensorTerm{t.left, m});
            }
            for (const auto& t : image.terms()) {
                auto [it, inserted] = columns.emplace(t, columns.size());
                sparse[i].push_back(it->second);
            }
        }
        std::vector<std::pair<BitVector, BitVector>> rows;
        rows.reserve(N);
        for (std::size_t i = 0; i < N; ++i) {
            BitVector image(columns.size());
            for (auto c : sparse[i])
                image.flip(c);
            rows.emplace_back(std::move(image), BitVector::unit(N, i));
        }
        F2Subspace K = F2Subspace::span(N, left_kernel(std::move(rows)));
        // Saturate under products with lower-degree kernel elements.
        for (int p = 1; 2 * p <= n; ++p) {
            for (const auto& u : kernels[p].basis()) {
                Element eu = source.basis(p).to_element(u);
                for (const auto& v : kernels[n - p].basis())
                    K.insert(B.to_vector(eu * source.basis(n - p).to_element(v)));
            }
        }
        kernels[n] = std::move(K);
        dims[n] = kernels[n].dim();
    }
    return dims;
}

// ---------------------------------------------------------------- A(V, xi)

std::map<std::vector<std::uint32_t>, int> a_functor_normal_form(const AFunctorPresentation& p,
                                                                const std::vector<std::uint32_t>& exponents)
{
    std::map<std::vector<std::uint32_t>, int> out;
    std::vector<std::vector<std::uint32_t>> stack{exponents};
    while (!stack.empty()) {
        auto e = std::move(stack.back());
        stack.pop_back();
        auto it = std::find_if(e.begin(), e.end(), [](std::uint32_t k) { return k >= 2; });
        if (it == e.end()) {
            out[e] ^= 1;
            continue;
        }
        std::size_t g = static_cast<std::size_t>(it - e.begin());
        e[g] -= 2;
        for (std::size_t h : p.xi_action[g]) {
            auto f = e;
            f[h] += 1;
            stack.push_back(std::move(f));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second ? std::next(it) : out.erase(it);
    return out;
}

std::vector<std::size_t> a_functor_dims(const AFunctorPresentation& p, int max_degree)
{
    std::size_t n = p.generator_degrees.size();
    if (p.xi_action.size() != n)
        throw Error(ErrorKind::BasisMismatch, "xi action does not match the generators");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h : p.xi_action[g])
            if (h >= n || p.generator_degrees[h] != 2 * p.generator_degrees[g])
                throw Error(ErrorKind::BasisMismatch, "xi must double degrees");
    // Every monomial rewrites to square-free ones, and the square-free monomials are
    // independent because the rewriting is confluent; count them.
    std::vector<std::size_t> by_degree(max_degree + 1, 0);
    for (int d : p.generator_degrees) {
        if (d <= 0)
            throw Error(ErrorKind::DegreeOutOfRange, "A-functor generators need positive degree");
        if (d <= max_degree)
            ++by_degree[d];
    }
    return exterior_dims(by_degree, max_degree);
}

namespace {

void enumerate_exponents(const std::vector<int>& degrees, std::size_t at, int remaining,
                         std::vector<std::uint32_t>& current, std::vector<std::vector<std::uint32_t>>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (at == degrees.size())
        return;
    int d = degrees[at];
    for (std::uint32_t e = 0; static_cast<int>(e) * d <= remaining; ++e) {
        current[at] = e;
        enumerate_exponents(degrees, at + 1, remaining - static_cast<int>(e) * d, current, out);
    }
    current[at] = 0;
}

// Symmetric difference of two sorted index lists.
std::vector<std::uint32_t> xor_sorted(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b)
{
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<std::size_t> a_functor_quotient_dims(const AFunctorPresentation& p, int max_degree)
{
    std::vector<int> degrees;
    std::vector<std::size_t> ids;
    for (std::size_t g = 0; g < p.generator_degrees.size(); ++g) {
        if (p.generator_degrees[g] >= 1 && p.generator_degrees[g] <= max_degree) {
            degrees.push_back(p.generator_degrees[g]);
            ids.push_back(g);
        }
    }
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < ids.size(); ++k)
        local[ids[k]] = k;
    std::vector<std::size_t> dims(max_degree + 1, 0);
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<std::vector<std::uint32_t>> monos;
        std::vector<std::uint32_t> cur(degrees.size(), 0);
        enumerate_exponents(degrees, 0, n, cur, monos);
        // Longer monomials first, so a relation x^2 m + (xi x) m leads with x^2 m.
        auto length = [](const std::vector<std::uint32_t>& e) { return std::accumulate(e.begin(), e.end(), 0U); };
        std::sort(monos.begin(), monos.end(), [&](const auto& a, const auto& b) {
            auto la = length(a), lb = length(b);
            return la != lb ? la > lb : a < b;
        });
        std::map<std::vector<std::uint32_t>, std::uint32_t> index;
        for (std::size_t i = 0; i < monos.size(); ++i)
            index.emplace(monos[i], static_cast<std::uint32_t>(i));
        std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> pivots;
        std::size_t rank = 0;
        for (const auto& M : monos) {
            for (std::size_t g = 0; g < degrees.size(); ++g) {
                if (M[g] < 2)
                    continue;
                std::vector<std::uint32_t> row{index.at(M)};
                auto base = M;
                base[g] -= 2;
                for (std::size_t h : p.xi_action[ids[g]]) {
                    auto it = local.find(h);
                    if (it == local.end())
                        continue;
                    auto e = base;
                    e[it->second] += 1;
                    row.push_back(index.at(e));
                }
                std::sort(row.begin(), row.end());
                row = xor_sorted(row, {});
                while (!row.empty()) {
                    auto pit = pivots.find(row.front());
                    if (pit == pivots.end()) {
                        pivots.emplace(row.front(), row);
                        ++rank;
                        break;
                    }
                    row = xor_sorted(row, pit->second);
                }
            }
        }
        dims[n] = monos.size() - rank;
    }
    return dims;
}

std::vector<std::size_t> exterior_dims(const std::vector<std::size_t>& gens_by_degree, int max_degree)
{
    std::vector<std::size_t> dims(max_degree + 1, 0);
    dims[0] = 1;
    for (int d = 1; d < static_cast<int>(gens_by_degree.size()) && d <= max_degree; ++d)
        for (std::size_t c = 0; c < gens_by_degree[d]; ++c)
            for (int n = max_degree; n >= d; --n)
                dims[n] += dims[n - d];
    return dims;
}

std::vector<std::size_t> polynomial_dims(const std::vector<std::size_t>& gens_by_degree, int max_degree)
{
    std::vector<std::size_t> dims(max_degree + 1, 0);
    dims[0] = 1;
    for (int d = 1; d < static_cast<int>(gens_by_degree.size()) && d <= max_degree; ++d)
        for (std::size_t c = 0; c < gens_by_degree[d]; ++c)
            for (int n = d; n <= max_degree; ++n)
                dims[n] += dims[n - d];
    return dims;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, int max_degree)
{
    std::vector<std::size_t> out(max_degree + 1, 0);
    for (int i = 0; i <= max_degree && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= max_degree && j < static_cast<int>(b.size()); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace dlcalc
