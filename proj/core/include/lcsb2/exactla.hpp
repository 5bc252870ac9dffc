#ifndef LCSB2_EXACTLA_HPP
#define LCSB2_EXACTLA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lcsb2/rational.hpp"

namespace lcsb2 {

/// Dense matrix of rationals with optional row/column labels for reporting.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t nrows() const { return rows_; }
    std::size_t ncols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<std::string> row_labels; // empty or sized nrows()
    std::vector<std::string> col_labels; // empty or sized ncols()

    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

/// Exact rank over Q (Gaussian elimination on a copy).
long long rank(const ExactMatrix& m);

/// Exact determinant via fraction-free Bareiss elimination after clearing
/// row denominators. Throws std::invalid_argument for non-square input.
Rat det(const ExactMatrix& m);

ExactMatrix transpose(const ExactMatrix& m);

/// One elementary row/column operation. Scales must be nonzero; additions
/// require src != dst so every step stays rank-preserving.
struct OpStep {
    enum class Kind { ScaleRow, ScaleCol, AddRowMultiple, AddColMultiple };
    Kind kind;
    std::size_t a = 0; // row/col index, or src for additions
    std::size_t b = 0; // dst for additions
    Rat c;

    static OpStep scale_row(std::size_t i, Rat c) { return {Kind::ScaleRow, i, 0, std::move(c)}; }
    static OpStep scale_col(std::size_t j, Rat c) { return {Kind::ScaleCol, j, 0, std::move(c)}; }
    static OpStep add_row_multiple(std::size_t src, std::size_t dst, Rat c) {
        return {Kind::AddRowMultiple, src, dst, std::move(c)};
    }
    static OpStep add_col_multiple(std::size_t src, std::size_t dst, Rat c) {
        return {Kind::AddColMultiple, src, dst, std::move(c)};
    }
};

using OpScript = std::vector<OpStep>;

/// Applies the steps in order; throws on out-of-range indices, zero scaling
/// constants, or src == dst additions.
ExactMatrix apply_script(ExactMatrix m, const OpScript& script);

/// CSV of rational strings; labels are emitted as a header row/column when
/// present and requested.
std::string to_csv(const ExactMatrix& m, bool include_labels = true);

} // namespace lcsb2

#endif
