#include "dlcalc/algebra.hpp"

#include "dlcalc/binomial.hpp"
#include "dlcalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dlcalc {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(GenId g, std::uint32_t exp)
{
    Monomial m;
    if (exp > 0)
        m.factors_.push_back({g, exp});
    return m;
}

std::uint32_t Monomial::exponent(GenId g) const
{
    for (const auto& f : factors_)
        if (f.gen == g)
            return f.exp;
    return 0;
}

std::uint32_t Monomial::length() const
{
    std::uint32_t n = 0;
    for (const auto& f : factors_)
        n += f.exp;
    return n;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = rhs.factors_.begin(), be = rhs.factors_.end();
    while (a != ae && b != be) {
        if (a->gen < b->gen)
            out.factors_.push_back(*a++);
        else if (b->gen < a->gen)
            out.factors_.push_back(*b++);
        else {
            out.factors_.push_back({a->gen, a->exp + b->exp});
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, ae);
    out.factors_.insert(out.factors_.end(), b, be);
    return out;
}

Monomial Monomial::pow(std::uint32_t k) const
{
    if (k == 0)
        return Monomial();
    Monomial out = *this;
    for (auto& f : out.factors_)
        f.exp *= k;
    return out;
}

Monomial Monomial::without(GenId g) const
{
    Monomial out;
    for (const auto& f : factors_)
        if (f.gen != g)
            out.factors_.push_back(f);
    return out;
}

std::size_t Monomial::hash() const
{
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& f : factors_) {
        h ^= (std::uint64_t(f.gen) << 20) ^ f.exp;
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- Element

void Element::toggle(const Monomial& m)
{
    auto it = terms_.find(m);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(m);
}

void Element::toggle(Monomial&& m)
{
    auto it = terms_.find(m);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(std::move(m));
}

Element& Element::operator+=(const Element& rhs)
{
    if (this == &rhs) {
        terms_.clear();
        return *this;
    }
    for (const auto& m : rhs.terms_)
        toggle(m);
    return *this;
}

Element Element::operator+(const Element& rhs) const
{
    Element out = *this;
    out += rhs;
    return out;
}

Element Element::operator*(const Element& rhs) const
{
    Element out;
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_)
            out.toggle(a * b);
    return out;
}

Element Element::square() const
{
    Element out;
    for (const auto& m : terms_)
        out.terms_.insert(m.pow(2));
    return out;
}

// ---------------------------------------------------------------- Tensor

void Tensor::toggle(const TensorTerm& t)
{
    auto it = terms_.find(t);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(t);
}

Tensor& Tensor::operator+=(const Tensor& rhs)
{
    for (const auto& t : rhs.terms_)
        toggle(t);
    return *this;
}

Tensor Tensor::operator*(const Tensor& rhs) const
{
    Tensor out;
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_)
            out.toggle(TensorTerm{a.left * b.left, a.right * b.right});
    return out;
}

Tensor Tensor::frobenius() const
{
    Tensor out;
    for (const auto& t : terms_)
        out.terms_.insert(TensorTerm{t.left.pow(2), t.right.pow(2)});
    return out;
}

// ---------------------------------------------------------------- Model basics

Model::Model(SpaceId space, bool reduced, int preload_degree)
    : space_(space), reduced_(reduced)
{
    has_unit_ = has_degree_zero_class(space);
    if (reduced_ && !has_unit_)
        throw Error(ErrorKind::SpaceMismatch, "the reduced variant needs a degree-0 base class");
    for (const auto& g : generator_set(space, preload_degree))
        intern(g);
    if (has_unit_)
        unit_id_ = intern(Generator{0, {}});
}

GenId Model::intern(const Generator& g)
{
    auto key = std::make_pair(g.base, g.word);
    auto it = index_.find(key);
    if (it != index_.end())
        return it->second;
    if (!is_generator(space_, g))
        throw Error(ErrorKind::InvalidLabel, "not a generator: " + generator_name(space_, g));
    GenId id = static_cast<GenId>(gens_.size());
    gens_.push_back(GenInfo{g, generator_degree(space_, g), static_cast<int>(g.word.size())});
    index_.emplace(std::move(key), id);
    return id;
}

GenId Model::base(int index)
{
    return intern(Generator{index, {}});
}

int Model::degree(const Monomial& m) const
{
    int d = 0;
    for (const auto& f : m.factors())
        d += gens_[f.gen].degree * static_cast<int>(f.exp);
    return d;
}

std::uint64_t Model::weight(const Monomial& m) const
{
    std::uint64_t w = 0;
    for (const auto& f : m.factors())
        w += (std::uint64_t(1) << gens_[f.gen].length) * f.exp;
    return w;
}

bool Model::normalized_generator(GenId id) const
{
    if (has_unit_ && id == unit_id_)
        return false;
    if (reduced_ && gens_[id].gen.base == 0)
        return false;
    return true;
}

const std::vector<GenId>& Model::normalized_generators(int d)
{
    auto it = normalized_by_degree_.find(d);
    if (it != normalized_by_degree_.end())
        return it->second;
    std::vector<GenId> ids;
    if (d >= 1) {
        for (const auto& g : generator_set(space_, d)) {
            if (generator_degree(space_, g) != d)
                continue;
            GenId id = intern(g);
            if (normalized_generator(id))
                ids.push_back(id);
        }
    }
    return normalized_by_degree_.emplace(d, std::move(ids)).first->second;
}

std::optional<Monomial> Model::normalize(const Monomial& m) const
{
    for (const auto& f : m.factors())
        if (!normalized_generator(f.gen) && !(has_unit_ && f.gen == unit_id_))
            return std::nullopt;
    if (has_unit_ && m.exponent(unit_id_))
        return m.without(unit_id_);
    return m;
}

Element Model::normalize(const Element& x) const
{
    Element out;
    for (const auto& m : x.terms())
        if (auto n = normalize(m))
            out.toggle(std::move(*n));
    return out;
}

Tensor Model::normalize(const Tensor& t) const
{
    Tensor out;
    for (const auto& term : t.terms()) {
        auto l = normalize(term.left);
        if (!l)
            continue;
        auto r = normalize(term.right);
        if (!r)
            continue;
        out.toggle(TensorTerm{std::move(*l), std::move(*r)});
    }
    return out;
}

Element Model::degree_part(const Element& x, int d) const
{
    Element out;
    for (const auto& m : x.terms())
        if (degree(m) == d)
            out.toggle(m);
    return out;
}

int Model::degree(const Element& x) const
{
    int d = -1;
    for (const auto& m : x.terms()) {
        int dm = degree(m);
        if (d >= 0 && dm != d)
            throw Error(ErrorKind::ParityMismatch, "inhomogeneous element: " + render(x));
        d = dm;
    }
    return d;
}

// ---------------------------------------------------------------- Dyer-Lashof operations

namespace {

struct Piece
{
    GenId gen;
    std::uint32_t shift;  // the piece is gen^(2^shift)
};

std::vector<Piece> pieces_of(const Monomial& m)
{
    std::vector<Piece> out;
    for (const auto& f : m.factors())
        for (std::uint32_t k = 0; (f.exp >> k) != 0; ++k)
            if ((f.exp >> k) & 1U)
                out.push_back({f.gen, k});
    return out;
}

Element frobenius_power(Element x, std::uint32_t k)
{
    for (std::uint32_t j = 0; j < k; ++j)
        x = x.square();
    return x;
}

}  // namespace

Element Model::Q(int r, GenId g)
{
    auto key = std::make_pair(r, g);
    if (auto it = q_cache_.find(key); it != q_cache_.end())
        return it->second;
    int d = gens_[g].degree;
    Element res;
    if (r == d) {
        res = Element(Monomial::of(g, 2));
    } else if (r > d) {
        Generator G = gens_[g].gen;
        if (G.word.empty() || r <= 2 * G.word.front()) {
            Word w;
            w.reserve(G.word.size() + 1);
            w.push_back(r);
            w.insert(w.end(), G.word.begin(), G.word.end());
            res = gen(Generator{G.base, std::move(w)});
        } else {
            // Adem relation: Q^r Q^s = sum_i C(i-s-1, 2i-r) Q^{r+s-i} Q^i for r > 2s.
            int s = G.word.front();
            GenId tail = intern(Generator{G.base, Word(G.word.begin() + 1, G.word.end())});
            for (int i = (r + 1) / 2; i <= r - s - 1; ++i)
                if (binom_mod2(i - s - 1, 2 * i - r))
                    res += Q(r + s - i, Q(i, tail));
        }
    }
    q_cache_.emplace(key, res);
    return res;
}

// levels[s] = Q^s m for 0 <= s <= R, by the Cartan formula with
// Q^s(y^(2^k)) = (Q^{s/2^k} y)^(2^k).
std::vector<Element> Model::Q_levels(const Monomial& m, int R)
{
    std::vector<Element> levels(R + 1);
    levels[0] = Element::one();
    for (const auto& p : pieces_of(m)) {
        std::vector<Element> next(R + 1);
        int step = 1 << p.shift;
        int d = gens_[p.gen].degree;
        for (int s = 0; s <= R; ++s) {
            if (levels[s].is_zero())
                continue;
            for (int i = d; s + i * step <= R; ++i) {
                Element q = Q(i, p.gen);
                if (q.is_zero())
                    continue;
                next[s + i * step] += levels[s] * frobenius_power(std::move(q), p.shift);
            }
        }
        levels = std::move(next);
    }
    return levels;
}

Element Model::Q(int r, const Monomial& m)
{
    if (r < 0)
        return Element();
    return std::move(Q_levels(m, r)[r]);
}

Element Model::Q(int r, const Element& x)
{
    Element out;
    for (const auto& m : x.terms())
        out += Q(r, m);
    return out;
}

Element Model::Q_total(const Element& x, int max_degree)
{
    Element out;
    for (const auto& m : x.terms()) {
        int room = max_degree - degree(m);
        if (room < 0)
            continue;
        for (auto& level : Q_levels(m, room))
            out += level;
    }
    return out;
}

Element Model::apply_word(std::span<const int> word, const Element& x)
{
    Element y = x;
    for (auto it = word.rbegin(); it != word.rend() && !y.is_zero(); ++it)
        y = Q(*it, y);
    return y;
}

const Element& Model::unit_series(std::uint64_t weight, int max_degree)
{
    auto key = std::make_pair(weight, max_degree);
    if (auto it = unit_series_cache_.find(key); it != unit_series_cache_.end())
        return it->second;
    auto truncate = [&](const Element& x) {
        Element out;
        for (const auto& m : x.terms())
            if (degree(m) <= max_degree)
                out.toggle(m);
        return out;
    };
    // u = sum_{j >= 1} Q^j x_0, normalized.
    Element u;
    for (int j = 1; j <= max_degree; ++j)
        u += gen(Generator{0, {j}});
    Element inverse = Element::one();
    Element power = Element::one();
    for (int k = 1; k <= max_degree; ++k) {
        power = truncate(power * u);
        inverse += power;
    }
    Element result = Element::one();
    Element base = inverse;
    for (std::uint64_t w = weight; w != 0; w >>= 1) {
        if (w & 1U)
            result = truncate(result * base);
        base = truncate(base.square());
    }
    return unit_series_cache_.emplace(key, std::move(result)).first->second;
}

Element Model::Qt(int r, const Monomial& m)
{
    if (r < 0)
        return Element();
    if (!has_unit_ || reduced_)
        return normalize(Q(r, m));
    // Q on Q_0 X_+ is Q on the lift m [-w], normalized: N(Q m) (1 + u)^{-w}.
    std::vector<Element> levels = Q_levels(m, r);
    const Element& series = unit_series(weight(m), r);
    Element out;
    for (int s = 0; s <= r; ++s) {
        if (levels[s].is_zero())
            continue;
        Element coeff;
        for (const auto& t : series.terms())
            if (degree(t) == r - s)
                coeff.toggle(t);
        if (coeff.is_zero())
            continue;
        out += normalize(levels[s]) * coeff;
    }
    return out;
}

Element Model::Qt(int r, const Element& x)
{
    Element out;
    for (const auto& m : x.terms())
        out += Qt(r, m);
    return out;
}

Element Model::apply_word_translated(std::span<const int> word, const Element& x)
{
    Element y = x;
    for (auto it = word.rbegin(); it != word.rend() && !y.is_zero(); ++it)
        y = Qt(*it, y);
    return y;
}

// ---------------------------------------------------------------- Dual Steenrod action

Element Model::sq(int a, GenId g)
{
    if (a == 0)
        return gen(g);
    if (a < 0 || 2 * a > gens_[g].degree)
        return Element();
    auto key = std::make_pair(a, g);
    if (auto it = sq_cache_.find(key); it != sq_cache_.end())
        return it->second;
    Generator G = gens_[g].gen;
    Element res;
    if (G.word.empty()) {
        for (const auto& c : steenrod_dual(a, SpaceClass{space_, G.base}))
            res += base_element(c.index);
    } else {
        // Nishida relation: Sq^a_* Q^r = sum_b C(r-a, a-2b) Q^{r-a+b} Sq^b_*.
        int r = G.word.front();
        GenId tail = intern(Generator{G.base, Word(G.word.begin() + 1, G.word.end())});
        for (int b = 0; 2 * b <= a; ++b)
            if (binom_mod2(r - a, a - 2 * b))
                res += Q(r - a + b, sq(b, tail));
    }
    sq_cache_.emplace(key, res);
    return res;
}

Element Model::sq(int a, const Monomial& m)
{
    if (a < 0)
        return Element();
    if (a == 0)
        return Element(m);
    std::vector<Element> levels(a + 1);
    levels[0] = Element::one();
    for (const auto& p : pieces_of(m)) {
        std::vector<Element> next(a + 1);
        int step = 1 << p.shift;
        for (int s = 0; s <= a; ++s) {
            if (levels[s].is_zero())
                continue;
            for (int i = 0; s + i * step <= a; ++i) {
                Element q = sq(i, p.gen);
                if (q.is_zero())
                    continue;
                next[s + i * step] += levels[s] * frobenius_power(std::move(q), p.shift);
            }
        }
        levels = std::move(next);
    }
    return levels[a];
}

Element Model::sq(int a, const Element& x)
{
    Element out;
    for (const auto& m : x.terms())
        out += sq(a, m);
    return out;
}

Element Model::lambda(LambdaKind kind, const Element& x)
{
    int d = degree(x);
    if (d < 0)
        return Element();
    auto k = lambda_index(kind, d);
    if (!k)
        throw Error(ErrorKind::ParityMismatch,
                    std::string(lambda_name(kind)) + " is not defined in degree " + std::to_string(d));
    return sq(*k, x);
}

Element Model::linear_part(const Element& x) const
{
    Element out;
    for (const auto& m : x.terms()) {
        auto n = normalize(m);
        if (n && n->factors().size() == 1 && n->factors().front().exp == 1)
            out.toggle(std::move(*n));
    }
    return out;
}

Element Model::sq_indecomposable(int a, GenId g)
{
    if (a < 0 || 2 * a > gens_[g].degree)
        return Element();
    if (a == 0)
        return linear_part(gen(g));
    auto key = std::make_pair(a, g);
    if (auto it = sq_ind_cache_.find(key); it != sq_ind_cache_.end())
        return it->second;
    Generator G = gens_[g].gen;
    Element res;
    if (G.word.empty()) {
        res = linear_part(sq(a, g));
    } else {
        int r = G.word.front();
        GenId tail = intern(Generator{G.base, Word(G.word.begin() + 1, G.word.end())});
        for (int b = 0; 2 * b <= a; ++b) {
            if (!binom_mod2(r - a, a - 2 * b))
                continue;
            // The degree-0 class is not a generator of the normalized algebra but Q of it is.
            Element inner = gens_[tail].degree == 0 ? sq(b, tail) : sq_indecomposable(b, tail);
            for (const auto& m : inner.terms())
                res += linear_part(Q(r - a + b, m));
        }
    }
    sq_ind_cache_.emplace(key, res);
    return res;
}

// ---------------------------------------------------------------- Coproduct

Tensor Model::coproduct_generator_uncached(GenId g)
{
    Generator G = gens_[g].gen;
    Tensor out;
    if (G.word.empty()) {
        for (const auto& [l, r] : dlcalc::coproduct(SpaceClass{space_, G.base})) {
            Monomial ml = l ? Monomial::of(base(l->index)) : Monomial();
            Monomial mr = r ? Monomial::of(base(r->index)) : Monomial();
            out.toggle(TensorTerm{std::move(ml), std::move(mr)});
        }
        return out;
    }
    // Cartan formula: psi Q^r z = sum_{i+j=r} Q^i z' (x) Q^j z''.
    int r = G.word.front();
    GenId tail = intern(Generator{G.base, Word(G.word.begin() + 1, G.word.end())});
    Tensor inner = coproduct(tail);
    for (const auto& t : inner.terms()) {
        int dl = degree(t.left), dr = degree(t.right);
        for (int i = dl; i + dr <= r; ++i) {
            Element ql = Q(i, t.left);
            if (ql.is_zero())
                continue;
            Element qr = Q(r - i, t.right);
            for (const auto& a : ql.terms())
                for (const auto& b : qr.terms())
                    out.toggle(TensorTerm{a, b});
        }
    }
    return out;
}

const Tensor& Model::coproduct(GenId g)
{
    if (auto it = psi_cache_.find(g); it != psi_cache_.end())
        return it->second;
    Tensor t = coproduct_generator_uncached(g);
    return psi_cache_.emplace(g, std::move(t)).first->second;
}

namespace {

Tensor unit_tensor()
{
    Tensor t;
    t.toggle(TensorTerm{Monomial(), Monomial()});
    return t;
}

Tensor frobenius_power(Tensor t, std::uint32_t k)
{
    for (std::uint32_t j = 0; j < k; ++j)
        t = t.frobenius();
    return t;
}

}  // namespace

Tensor Model::coproduct(const Monomial& m)
{
    Tensor out = unit_tensor();
    for (const auto& p : pieces_of(m))
        out = out * frobenius_power(coproduct(p.gen), p.shift);
    return out;
}

Tensor Model::coproduct(const Element& x)
{
    Tensor out;
    for (const auto& m : x.terms())
        out += coproduct(m);
    return out;
}

Tensor Model::coproduct_normalized(const Monomial& m)
{
    Tensor out = unit_tensor();
    for (const auto& p : pieces_of(m)) {
        auto it = psi_norm_cache_.find(p.gen);
        if (it == psi_norm_cache_.end())
            it = psi_norm_cache_.emplace(p.gen, normalize(coproduct(p.gen))).first;
        out = out * frobenius_power(it->second, p.shift);
    }
    return out;
}

Tensor Model::coproduct_normalized(const Element& x)
{
    Tensor out;
    for (const auto& m : x.terms())
        out += coproduct_normalized(m);
    return out;
}

// ---------------------------------------------------------------- Rendering and parsing

std::vector<GenId> Model::sorted_factor_ids(const Monomial& m) const
{
    std::vector<GenId> ids;
    for (const auto& f : m.factors())
        ids.push_back(f.gen);
    std::sort(ids.begin(), ids.end(), [this](GenId a, GenId b) {
        return generator_less(space_, gens_[a].gen, gens_[b].gen);
    });
    return ids;
}

bool Model::monomial_less(const Monomial& a, const Monomial& b) const
{
    if (a.length() != b.length())
        return a.length() < b.length();
    // Compare the factor sequences, expanded with multiplicity, in generator order.
    auto expand = [this](const Monomial& m) {
        std::vector<GenId> seq;
        for (GenId id : sorted_factor_ids(m))
            seq.insert(seq.end(), m.exponent(id), id);
        return seq;
    };
    auto sa = expand(a), sb = expand(b);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa[i] == sb[i])
            continue;
        return generator_less(space_, gens_[sa[i]].gen, gens_[sb[i]].gen);
    }
    return false;
}

std::vector<Monomial> Model::sorted_terms(const Element& x) const
{
    std::vector<Monomial> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(), [this](const Monomial& a, const Monomial& b) { return monomial_less(a, b); });
    return terms;
}

std::string Model::render(GenId g) const
{
    return generator_name(space_, gens_[g].gen);
}

std::string Model::render(const Monomial& m) const
{
    if (m.is_unit())
        return "1";
    std::string s;
    for (GenId id : sorted_factor_ids(m)) {
        if (!s.empty())
            s += '*';
        std::string name = render(id);
        std::uint32_t e = m.exponent(id);
        if (e == 1)
            s += name;
        else if (gens_[id].gen.word.empty())
            s += name + "^" + std::to_string(e);
        else
            s += "(" + name + ")^" + std::to_string(e);
    }
    return s;
}

std::string Model::render(const Element& x) const
{
    if (x.is_zero())
        return "0";
    std::string s;
    for (const auto& m : sorted_terms(x)) {
        if (!s.empty())
            s += " + ";
        s += render(m);
    }
    return s;
}

std::string Model::render(const Tensor& t) const
{
    if (t.is_zero())
        return "0";
    std::vector<TensorTerm> terms(t.terms().begin(), t.terms().end());
    std::sort(terms.begin(), terms.end(), [this](const TensorTerm& a, const TensorTerm& b) {
        int da = degree(a.left), db = degree(b.left);
        if (da != db)
            return da > db;
        if (!(a.left == b.left))
            return monomial_less(a.left, b.left);
        return monomial_less(a.right, b.right);
    });
    std::string s;
    for (const auto& term : terms) {
        if (!s.empty())
            s += " + ";
        s += render(term.left) + " (x) " + render(term.right);
    }
    return s;
}

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Split at a separator outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s, const std::string& context)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorKind::InvalidLabel, "bad integer '" + s + "' in '" + context + "'");
    return std::stoi(s);
}

}  // namespace

namespace {

// "Q^3 Q^1 e_2" -> (word, base index); validates the base name against the space.
std::pair<Word, int> parse_application(SpaceId space, const std::string& text)
{
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> toks;
    while (in >> tok)
        toks.push_back(tok);
    if (toks.empty())
        throw Error(ErrorKind::InvalidLabel, "empty factor");
    Word w;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].rfind("Q^", 0) != 0)
            throw Error(ErrorKind::InvalidLabel, "expected Q^r in '" + text + "'");
        w.push_back(parse_int(toks[i].substr(2), text));
    }
    std::string base = toks.back();
    std::string stem = class_name(SpaceClass{space, 0});
    stem = stem.substr(0, stem.size() - 1);
    if (base.rfind(stem, 0) != 0)
        throw Error(ErrorKind::SpaceMismatch, "class '" + base + "' does not belong to " + std::string(space_name(space)));
    return {w, parse_int(base.substr(stem.size()), text)};
}

// Split "factor^k" (k outside parentheses) into factor text and exponent.
std::pair<std::string, int> split_power(const std::string& f)
{
    std::string s = trim(f);
    std::size_t caret = s.rfind('^');
    std::size_t close = s.rfind(')');
    if (caret != std::string::npos && (close == std::string::npos || caret > close)) {
        std::string before = s.substr(0, caret);
        std::string exp = s.substr(caret + 1);
        // "Q^3 e_1" has a caret too; a power follows a complete class name or a parenthesis.
        if (!before.empty() && (before.back() == ')' || before.find("_") != std::string::npos) &&
            std::all_of(exp.begin(), exp.end(), [](unsigned char c) { return std::isdigit(c); }) && !exp.empty()) {
            std::size_t last_space = before.find_last_of(' ');
            std::string last = last_space == std::string::npos ? before : before.substr(last_space + 1);
            if (before.back() == ')' || last.find('_') != std::string::npos)
                return {before, std::stoi(exp)};
        }
    }
    return {s, 1};
}

}  // namespace

Monomial Model::parse_monomial(const std::string& text)
{
    std::string s = trim(text);
    if (s == "1")
        return Monomial();
    Monomial m;
    for (const auto& f : split_top(s, '*')) {
        auto [body, e] = split_power(f);
        body = trim(body);
        if (!body.empty() && body.front() == '(' && body.back() == ')')
            body = trim(body.substr(1, body.size() - 2));
        auto [w, idx] = parse_application(space_, body);
        m = m * Monomial::of(intern(Generator{idx, w}), static_cast<std::uint32_t>(e));
    }
    return m;
}

Element Model::parse(const std::string& text)
{
    Element out;
    for (const auto& term : split_top(text, '+')) {
        std::string s = trim(term);
        if (s == "0")
            continue;
        if (s == "1") {
            out.toggle(Monomial());
            continue;
        }
        Element prod = Element::one();
        for (const auto& f : split_top(s, '*')) {
            auto [body, e] = split_power(f);
            body = trim(body);
            if (!body.empty() && body.front() == '(' && body.back() == ')')
                body = trim(body.substr(1, body.size() - 2));
            auto [w, idx] = parse_application(space_, body);
            // Words that are not generators are evaluated with the Adem relations.
            Element factor = apply_word(w, base_element(idx));
            for (int k = 0; k < e; ++k)
                prod = prod * factor;
        }
        out += prod;
    }
    return out;
}

}  // namespace dlcalc
