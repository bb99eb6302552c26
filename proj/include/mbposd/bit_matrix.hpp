#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbposd {

/// Packed GF(2) vector, 64 bits per word, LSB-first within a word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_bits(const std::vector<uint8_t>& bits) {
        BitVec v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & 1) v.set(i, true);
        return v;
    }

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        const uint64_t m = uint64_t{1} << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void xor_with(const BitVec& o) {
        if (o.n_ != n_) throw std::invalid_argument("BitVec::xor_with: size mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    void xor_words(std::span<const uint64_t> words) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= words[k];
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

    std::vector<uint8_t> to_bits() const {
        std::vector<uint8_t> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = get(i) ? 1 : 0;
        return out;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

inline std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: size mismatch");
    std::size_t c = 0;
    auto wa = a.words(), wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k) c += std::popcount(wa[k] ^ wb[k]);
    return c;
}

/// Dense row-major GF(2) matrix; rows are word-aligned for fast XOR.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }
    static BitMatrix from_rows(const std::vector<std::vector<uint8_t>>& rows) {
        if (rows.empty()) return {};
        BitMatrix m(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t c = 0; c < m.cols_; ++c)
                if (rows[r][c] & 1) m.set(r, c, true);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool b) {
        const uint64_t m = uint64_t{1} << (c & 63);
        if (b) bits_[r * wpr_ + (c >> 6)] |= m; else bits_[r * wpr_ + (c >> 6)] &= ~m;
    }

    std::span<const uint64_t> row(std::size_t r) const { return {bits_.data() + r * wpr_, wpr_}; }
    std::span<uint64_t> row(std::size_t r) { return {bits_.data() + r * wpr_, wpr_}; }

    void xor_rows(std::size_t dst, std::size_t src) {
        uint64_t* d = bits_.data() + dst * wpr_;
        const uint64_t* s = bits_.data() + src * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        uint64_t* pa = bits_.data() + a * wpr_;
        uint64_t* pb = bits_.data() + b * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
    }

    BitVec row_vec(std::size_t r) const {
        BitVec v(cols_);
        auto w = v.words();
        auto s = row(r);
        for (std::size_t k = 0; k < wpr_; ++k) w[k] = s[k];
        return v;
    }

    /// Columns gathered in the given order (perm[i] = source column of new column i).
    BitMatrix permute_columns(std::span<const int> perm) const {
        BitMatrix out(rows_, perm.size());
        for (std::size_t c = 0; c < perm.size(); ++c)
            for (std::size_t r = 0; r < rows_; ++r)
                if (get(r, static_cast<std::size_t>(perm[c]))) out.set(r, c, true);
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
};

/// c = a XOR b restricted to a row span; helper for codeword accumulation.
inline void xor_into(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

/// In-place reduced row echelon form. Returns pivot column indices in order.
inline std::vector<int> gf2_rref(BitMatrix& m) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline std::size_t gf2_rank(BitMatrix m) { return gf2_rref(m).size(); }

struct SystematicForm {
    BitMatrix mat;          ///< [I_K | P] after the composite permutation
    std::vector<int> perm;  ///< position i of the output came from position perm[i] of the input ordering
};

/// Systematize a full-row-rank K x N matrix over a given column ordering.
///
/// Columns are scanned in `col_order`; a column dependent on the pivots chosen
/// so far is deferred past the K boundary while every other column keeps its
/// relative order (stable partition), so both segments of the ordering stay
/// sorted. The returned perm is the extra permutation on top of `col_order`.
inline SystematicForm gaussian_eliminate(const BitMatrix& mat, std::span<const int> col_order) {
    const std::size_t K = mat.rows(), N = mat.cols();
    if (col_order.size() != N)
        throw std::invalid_argument("gaussian_eliminate: column order length mismatch");
    BitMatrix a = mat.permute_columns(col_order);

    std::vector<int> pivot_pos;
    pivot_pos.reserve(K);
    std::vector<char> is_pivot(N, 0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < N && r < K; ++c) {
        std::size_t p = r;
        while (p < K && !a.get(p, c)) ++p;
        if (p == K) continue;  // dependent on previous pivots
        a.swap_rows(r, p);
        for (std::size_t i = 0; i < K; ++i)
            if (i != r && a.get(i, c)) a.xor_rows(i, r);
        pivot_pos.push_back(static_cast<int>(c));
        is_pivot[c] = 1;
        ++r;
    }
    if (r < K) throw std::invalid_argument("gaussian_eliminate: matrix rank below row count");

    std::vector<int> perm = pivot_pos;
    perm.reserve(N);
    for (std::size_t c = 0; c < N; ++c)
        if (!is_pivot[c]) perm.push_back(static_cast<int>(c));
    return {a.permute_columns(perm), std::move(perm)};
}

inline std::vector<int> identity_permutation(std::size_t n) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return p;
}

inline std::vector<int> invert_permutation(std::span<const int> p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

}  // namespace mbposd
