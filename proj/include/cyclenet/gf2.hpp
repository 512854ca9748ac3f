#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclenet {

/// Dense bit vector over GF(2). Addition is entrywise xor.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits) {
        BitVector v(bits.size());
        std::size_t i = 0;
        for (int b : bits) {
            if (b) v.set(i);
            ++i;
        }
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value = true) {
        if (value)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& other) {
        if (other.len_ != len_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    BitVector operator&(const BitVector& other) const {
        if (other.len_ != len_) throw std::invalid_argument("BitVector and: length mismatch");
        BitVector out(len_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
        return out;
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    /// Index of the first set bit, or size() if the vector is zero.
    std::size_t first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
        return len_;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) out.push_back(i);
        return out;
    }

    bool operator==(const BitVector& other) const = default;

    /// Orders by support read as a sorted index list ({0,2} < {0,3} < {1}).
    bool lex_less(const BitVector& other) const {
        if (len_ != other.len_) return len_ < other.len_;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t diff = words_[w] ^ other.words_[w];
            if (diff) {
                std::size_t bit = (w << 6) + std::countr_zero(diff);
                return get(bit);
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    static BitMatrix from_rows(std::vector<BitVector> rows) {
        BitMatrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        for (const auto& r : rows)
            if (r.size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        m.data_ = std::move(rows);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }

    BitVector column(std::size_t c) const {
        BitVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (data_[r].get(c)) v.set(r);
        return v;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c : data_[r].ones()) t.set(c, r);
        return t;
    }

    bool is_zero() const {
        for (const auto& r : data_)
            if (!r.is_zero()) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c : data_[r].ones())
                if (!data_[c].get(r)) return false;
        return true;
    }

    bool operator==(const BitMatrix& other) const = default;

    /// Debug dump: one line of 0/1 characters per row.
    std::string to_string() const {
        std::string s;
        for (const auto& r : data_) {
            s += r.to_string();
            s += '\n';
        }
        return s;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

inline BitVector multiply(const BitMatrix& m, const BitVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("multiply: dimension mismatch");
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if ((m.row(r) & v).count() & 1u) out.set(r);
    return out;
}

inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k : a.row(r).ones()) out.row(r) ^= b.row(k);
    return out;
}

/// Incrementally maintained reduced row-echelon basis of a GF(2) subspace.
///
/// Pivots are the first set bit of each stored row, scanning left to right;
/// every pivot column is cleared from all other rows, so the basis is the
/// unique RREF of the span and reduce() yields canonical coset
/// representatives independent of insertion order.
class Gf2Span {
public:
    explicit Gf2Span(std::size_t len) : len_(len) {}

    std::size_t vector_length() const { return len_; }
    std::size_t dim() const { return rows_.size(); }

    const std::vector<BitVector>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Canonical representative of v modulo the current span.
    BitVector reduce(BitVector v) const {
        if (v.size() != len_) throw std::invalid_argument("Gf2Span::reduce: length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(pivots_[i])) v ^= rows_[i];
        return v;
    }

    /// Inserts v; returns true if it enlarged the span.
    bool insert(BitVector v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        std::size_t p = v.first_set();
        // Keep full RREF: clear the new pivot column from existing rows.
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].get(p)) rows_[i] ^= v;
        auto pos = pivots_.begin();
        while (pos != pivots_.end() && *pos < p) ++pos;
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

private:
    std::size_t len_;
    std::vector<BitVector> rows_;    // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

/// Reduced row-echelon form of m with the pivot columns, in order.
struct RowEchelon {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
};

inline RowEchelon row_reduce(const BitMatrix& m) {
    Gf2Span span(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) span.insert(m.row(r));
    return RowEchelon{span.basis(), span.pivots()};
}

inline std::size_t rank(const BitMatrix& m) { return row_reduce(m).rows.size(); }

/// Basis of {v : m v = 0}, one vector per free column in ascending column
/// order. Deterministic given the input.
inline std::vector<BitVector> null_space_basis(const BitMatrix& m) {
    RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < ech.rows.size(); ++r)
            if (ech.rows[r].get(f)) v.set(ech.pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// rank(m) independent columns of m, chosen by first-pivot selection.
inline std::vector<BitVector> column_space_basis(const BitMatrix& m) {
    Gf2Span span(m.rows());
    std::vector<BitVector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        BitVector col = m.column(c);
        if (span.insert(col)) cols.push_back(std::move(col));
    }
    return cols;
}

/// Canonical coset representative of v modulo span(basis). Zero iff v lies
/// in the span; linear in v for a fixed basis.
inline BitVector reduce_mod_subspace(const BitVector& v, const std::vector<BitVector>& basis) {
    Gf2Span span(v.size());
    for (const auto& b : basis) {
        if (b.size() != v.size())
            throw std::invalid_argument("reduce_mod_subspace: length mismatch");
        span.insert(b);
    }
    return span.reduce(v);
}

}  // namespace cyclenet
