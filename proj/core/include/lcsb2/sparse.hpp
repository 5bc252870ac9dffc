#ifndef LCSB2_SPARSE_HPP
#define LCSB2_SPARSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lcsb2/rational.hpp"

namespace lcsb2 {

/// Sparse row vector over Q, kept as a primitive integer vector: denominators
/// cleared, content (gcd of entries) divided out. Entries live in int64 until
/// one no longer fits, then the whole row promotes to GMP integers.
struct SparseVec {
    std::vector<std::int32_t> cols; // strictly increasing
    std::vector<long long> small;   // valid when !wide
    std::vector<Int> big;           // valid when wide
    bool wide = false;

    bool empty() const { return cols.empty(); }
    std::size_t nnz() const { return cols.size(); }
    std::int32_t lead() const { return cols.front(); }

    /// Entry as a rational (for reporting and small-scale checks).
    Rat entry(std::size_t k) const { return wide ? Rat(big[k]) : Rat(static_cast<long>(small[k]), 1L); }

    /// Normalizes arbitrary (column, coefficient) terms: sorts, merges
    /// duplicates, clears denominators, strips content.
    static SparseVec from_terms(std::vector<std::pair<std::int32_t, Rat>> terms);
    /// Same for integer terms (the common case in span families).
    static SparseVec from_int_terms(std::vector<std::pair<std::int32_t, long long>> terms);
};

/// v <- lead(b)*v - v[pos]*b, then content-stripped. Requires
/// v.cols[pos] == b.lead(); that entry of the result is gone by construction.
void eliminate_at(SparseVec& v, std::size_t pos, const SparseVec& b);

/// eliminate_at for the leading entry.
void eliminate_lead(SparseVec& v, const SparseVec& b);

/// Incremental row-echelon accumulator over Q (exact). Basis rows are indexed
/// by leading column; inserting a row reduces it against the basis and either
/// extends the basis (rank grows) or vanishes.
class SparseEchelon {
public:
    explicit SparseEchelon(std::int32_t ncols);

    /// Returns true when the row was independent of the current basis.
    bool insert(SparseVec v);
    /// Membership test: does v lie in the span of the inserted rows?
    bool reduces_to_zero(SparseVec v) const;
    /// Reduces v until its leading column is pivot-free and returns the
    /// residual (enough for rank and membership questions).
    SparseVec reduce(SparseVec v) const;
    /// Clears every pivot column from v (rational arithmetic, no rescaling):
    /// the result is the coordinate vector of v's class on the non-pivot
    /// columns. Intended for small vectors.
    std::vector<std::pair<std::int32_t, Rat>>
    reduce_full(std::vector<std::pair<std::int32_t, Rat>> v) const;

    bool is_pivot(std::int32_t col) const { return lead_row_[col] >= 0; }

    long long rank() const { return static_cast<long long>(rows_.size()); }
    std::int32_t ncols() const { return static_cast<std::int32_t>(lead_row_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    std::vector<std::int32_t> lead_row_; // column -> basis row index, -1 if free
    std::vector<SparseVec> rows_;
};

/// Same accumulator over F_p for a 62-bit prime p. Ranks over F_p never
/// exceed ranks over Q, which makes this a certificate for lower bounds and a
/// fast filter ahead of exact elimination.
class ModularEchelon {
public:
    ModularEchelon(std::int32_t ncols, std::uint64_t prime);

    bool insert(const SparseVec& v);
    long long rank() const { return static_cast<long long>(rows_.size()); }
    std::uint64_t prime() const { return p_; }

private:
    struct Row {
        std::vector<std::int32_t> cols;
        std::vector<std::uint64_t> vals; // leading entry normalized to 1
    };
    bool insert_row(Row r);

    std::uint64_t p_;
    std::vector<std::int32_t> lead_row_;
    std::vector<Row> rows_;
};

/// Deterministic-for-a-seed random prime in [2^61, 2^62).
std::uint64_t random_prime62(std::uint64_t seed);

} // namespace lcsb2

#endif
