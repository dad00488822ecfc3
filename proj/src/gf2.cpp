#include "dlcalc/gf2.hpp"

#include "dlcalc/error.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace dlcalc {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotASubspace: return "NotASubspace";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::NonDoubledWord: return "NonDoubledWord";
    case ErrorKind::NotClosedUnderSquaring: return "NotClosedUnderSquaring";
    case ErrorKind::InsufficientGeneratorData: return "InsufficientGeneratorData";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

}  // namespace dlcalc

namespace dlcalc::gf2 {

BitVector& BitVector::operator^=(const BitVector& rhs)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
    return *this;
}

void BitVector::xor_from(const BitVector& rhs, std::size_t first_word)
{
    for (std::size_t i = first_word; i < words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (Word w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::leading() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        Word w = words_[i];
        while (w) {
            result.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return result;
}

bool BitVector::operator<(const BitVector& rhs) const
{
    if (size_ != rhs.size_)
        return size_ < rhs.size_;
    return words_ < rhs.words_;
}

std::string BitVector::str() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(std::size_t cols, std::vector<BitVector> rows)
{
    F2Matrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

F2Matrix F2Matrix::from_dense(const std::vector<std::vector<int>>& entries)
{
    std::size_t cols = entries.empty() ? 0 : entries.front().size();
    F2Matrix m(entries.size(), cols);
    for (std::size_t r = 0; r < entries.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (entries[r][c] & 1)
                m.set(r, c);
    return m;
}

void F2Matrix::append_row(BitVector row)
{
    rows_.push_back(std::move(row));
}

BitVector F2Matrix::apply(const BitVector& v) const
{
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        auto a = rows_[r].words();
        auto b = v.words();
        Word acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            acc ^= a[i] & b[i];
        if (std::popcount(acc) & 1)
            out.set(r);
    }
    return out;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c : rows_[r].support())
            t.set(c, r);
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const
{
    F2Matrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k : rows_[r].support())
            out.rows_[r] ^= rhs.rows_[k];
    return out;
}

std::vector<std::size_t> F2Matrix::reduce()
{
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows_.size(); ++c) {
        std::size_t word = c / kWordBits;
        Word mask = Word(1) << (c % kWordBits);
        std::size_t found = rows_.size();
        for (std::size_t r = next; r < rows_.size(); ++r) {
            if (rows_[r].words()[word] & mask) {
                found = r;
                break;
            }
        }
        if (found == rows_.size())
            continue;
        std::swap(rows_[next], rows_[found]);
        const BitVector& pivot = rows_[next];
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (r != next && (rows_[r].words()[word] & mask))
                rows_[r].xor_from(pivot, word);
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

F2Subspace F2Subspace::full(std::size_t ambient_dim)
{
    F2Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(BitVector::unit(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

F2Subspace F2Subspace::span(std::size_t ambient_dim, std::span<const BitVector> vectors)
{
    F2Matrix m = F2Matrix::from_rows(ambient_dim, std::vector<BitVector>(vectors.begin(), vectors.end()));
    auto pivots = m.reduce();
    F2Subspace s(ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        s.basis_.push_back(m.row(i));
        s.pivots_.push_back(pivots[i]);
    }
    return s;
}

BitVector F2Subspace::reduce(BitVector v) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i]))
            v.xor_from(basis_[i], pivots_[i] / kWordBits);
    return v;
}

bool F2Subspace::insert(BitVector v)
{
    v = reduce(std::move(v));
    if (!v.any())
        return false;
    std::size_t p = v.leading();
    for (auto& row : basis_)
        if (row.get(p))
            row ^= v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto offset = pos - pivots_.begin();
    pivots_.insert(pos, p);
    basis_.insert(basis_.begin() + offset, std::move(v));
    return true;
}

std::optional<BitVector> F2Subspace::coordinates(const BitVector& v) const
{
    BitVector coords(basis_.size());
    BitVector rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (rest.get(pivots_[i])) {
            rest ^= basis_[i];
            coords.set(i);
        }
    }
    if (rest.any())
        return std::nullopt;
    return coords;
}

F2Subspace F2Subspace::sum(const F2Subspace& other) const
{
    F2Subspace s = *this;
    for (const auto& v : other.basis_)
        s.insert(v);
    return s;
}

F2Subspace F2Subspace::intersect(const F2Subspace& other) const
{
    // Zassenhaus: reduce rows (u | u) for u in U and (w | 0) for w in W.
    std::size_t n = ambient_;
    std::size_t k = basis_.size() + other.basis_.size();
    F2Matrix m(k, 2 * n);
    std::size_t r = 0;
    for (const auto& u : basis_) {
        for (std::size_t i : u.support()) {
            m.set(r, i);
            m.set(r, n + i);
        }
        ++r;
    }
    for (const auto& w : other.basis_) {
        for (std::size_t i : w.support())
            m.set(r, i);
        ++r;
    }
    auto pivots = m.reduce();
    F2Subspace result(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < n)
            continue;
        BitVector v(n);
        for (std::size_t j : m.row(i).support())
            v.set(j - n);
        result.insert(std::move(v));
    }
    return result;
}

std::size_t rank(const F2Matrix& m)
{
    F2Matrix copy = m;
    return copy.reduce().size();
}

F2Subspace kernel_basis(const F2Matrix& m)
{
    F2Matrix r = m;
    auto pivots = r.reduce();
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    std::vector<BitVector> vectors;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        BitVector v(n);
        v.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, f))
                v.set(pivots[i]);
        vectors.push_back(std::move(v));
    }
    return F2Subspace::span(n, vectors);
}

F2Subspace image_basis(const F2Matrix& m)
{
    F2Matrix t = m.transpose();
    std::vector<BitVector> rows;
    rows.reserve(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        rows.push_back(t.row(i));
    return F2Subspace::span(m.rows(), rows);
}

std::size_t quotient_dim(const F2Subspace& sub, const F2Subspace& ambient)
{
    if (sub.ambient_dim() != ambient.ambient_dim())
        throw Error(ErrorKind::NotASubspace, "quotient_dim: ambient dimensions differ");
    for (const auto& v : sub.basis())
        if (!ambient.contains(v))
            throw Error(ErrorKind::NotASubspace, "quotient_dim: basis vector " + v.str() + " not in ambient");
    return ambient.dim() - sub.dim();
}

std::optional<BitVector> solve(const F2Matrix& m, const BitVector& b)
{
    // Reduce the augmented matrix [m | b].
    std::size_t n = m.cols();
    F2Matrix aug(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c : m.row(r).support())
            aug.set(r, c);
        if (b.get(r))
            aug.set(r, n);
    }
    auto pivots = aug.reduce();
    BitVector x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n)
            return std::nullopt;
        if (aug.get(i, n))
            x.set(pivots[i]);
    }
    return x;
}

}  // namespace dlcalc::gf2
