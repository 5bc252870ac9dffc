#include "lcsb2/exactla.hpp"

#include <sstream>
#include <stdexcept>

namespace lcsb2 {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

long long rank(const ExactMatrix& m) {
    ExactMatrix w = m;
    const std::size_t nr = w.nrows(), nc = w.ncols();
    long long rk = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && w.at(piv, col) == 0) ++piv;
        if (piv == nr) continue;
        if (piv != row)
            for (std::size_t j = col; j < nc; ++j) std::swap(w.at(piv, j), w.at(row, j));
        const Rat inv = 1 / w.at(row, col);
        for (std::size_t i = row + 1; i < nr; ++i) {
            if (w.at(i, col) == 0) continue;
            const Rat f = w.at(i, col) * inv;
            w.at(i, col) = 0;
            for (std::size_t j = col + 1; j < nc; ++j)
                if (w.at(row, j) != 0) w.at(i, j) -= f * w.at(row, j);
        }
        ++row;
        ++rk;
    }
    return rk;
}

Rat det(const ExactMatrix& m) {
    if (m.nrows() != m.ncols()) throw std::invalid_argument("det requires a square matrix");
    const std::size_t n = m.nrows();
    if (n == 0) return 1;

    // Clear denominators rowwise, then run Bareiss on integers.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat divisor = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
        divisor *= Rat(lcm);
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat result(a[n - 1][n - 1]);
    result /= divisor;
    if (sign < 0) result = -result;
    return result;
}

ExactMatrix transpose(const ExactMatrix& m) {
    ExactMatrix t(m.ncols(), m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j = 0; j < m.ncols(); ++j) t.at(j, i) = m.at(i, j);
    t.row_labels = m.col_labels;
    t.col_labels = m.row_labels;
    return t;
}

ExactMatrix apply_script(ExactMatrix m, const OpScript& script) {
    for (const OpStep& op : script) {
        switch (op.kind) {
        case OpStep::Kind::ScaleRow:
            if (op.a >= m.nrows()) throw std::out_of_range("ScaleRow index");
            if (op.c == 0) throw std::invalid_argument("ScaleRow by zero");
            for (std::size_t j = 0; j < m.ncols(); ++j) m.at(op.a, j) *= op.c;
            break;
        case OpStep::Kind::ScaleCol:
            if (op.a >= m.ncols()) throw std::out_of_range("ScaleCol index");
            if (op.c == 0) throw std::invalid_argument("ScaleCol by zero");
            for (std::size_t i = 0; i < m.nrows(); ++i) m.at(i, op.a) *= op.c;
            break;
        case OpStep::Kind::AddRowMultiple:
            if (op.a >= m.nrows() || op.b >= m.nrows()) throw std::out_of_range("AddRowMultiple index");
            if (op.a == op.b) throw std::invalid_argument("AddRowMultiple src == dst");
            for (std::size_t j = 0; j < m.ncols(); ++j) m.at(op.b, j) += op.c * m.at(op.a, j);
            break;
        case OpStep::Kind::AddColMultiple:
            if (op.a >= m.ncols() || op.b >= m.ncols()) throw std::out_of_range("AddColMultiple index");
            if (op.a == op.b) throw std::invalid_argument("AddColMultiple src == dst");
            for (std::size_t i = 0; i < m.nrows(); ++i) m.at(i, op.b) += op.c * m.at(i, op.a);
            break;
        }
    }
    return m;
}

std::string to_csv(const ExactMatrix& m, bool include_labels) {
    std::ostringstream out;
    const bool rl = include_labels && m.row_labels.size() == m.nrows() && m.nrows() > 0;
    const bool cl = include_labels && m.col_labels.size() == m.ncols() && m.ncols() > 0;
    if (cl) {
        if (rl) out << "";
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (j > 0 || rl) out << ',';
            out << m.col_labels[j];
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        if (rl) out << m.row_labels[i] << ',';
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (j > 0) out << ',';
            out << rational_to_string(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace lcsb2
