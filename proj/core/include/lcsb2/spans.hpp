#ifndef LCSB2_SPANS_HPP
#define LCSB2_SPANS_HPP

#include <functional>
#include <map>
#include <vector>

#include "lcsb2/grading.hpp"
#include "lcsb2/ncpoly.hpp"
#include "lcsb2/sparse.hpp"
#include "lcsb2/word.hpp"

namespace lcsb2 {

/// Word table for one graded slice; words in shortlex order label the columns
/// of every span matrix at this degree.
class DegreeContext {
public:
    DegreeContext(const Grading& g, long long m);

    long long degree() const { return m_; }
    const std::vector<Word>& words() const { return words_; }
    std::int32_t size() const { return static_cast<std::int32_t>(words_.size()); }
    std::int32_t index_of(const Word& w) const;

private:
    long long m_;
    std::vector<Word> words_;
};

/// Per-grading cache of word tables and L2 eliminations. The generating
/// families are streamed as sparse coordinate rows; ranks are taken by the
/// caller's echelon of choice.
class SpanCache {
public:
    explicit SpanCache(const Grading& g) : g_(g) {}

    const Grading& grading() const { return g_; }
    const DegreeContext& context(long long m);

    /// Echelon of the full family {[w1, w2]} at degree m (cached). Its basis
    /// rows are two-term word differences.
    const SparseEchelon& l2_echelon(long long m);

    /// {[w1, w2] : deg w1 + deg w2 = m}, one row per ordered pair; zero rows
    /// (w1 w2 = w2 w1) are skipped.
    void stream_l2(long long m, const std::function<void(SparseVec)>& sink);

    /// Staged L3 family {[w, b]} over words w and L2 elimination-basis rows b
    /// at complementary degree; spans the same space as the raw triple family
    /// {[w1, [w2, w3]]} since [w, .] is linear and the basis spans L2.
    void stream_l3(long long m, const std::function<void(SparseVec)>& sink);

    /// {w1 P w2 : deg w1 + deg w2 = m - d}; empty when m < d. Throws for
    /// inhomogeneous P.
    void stream_ideal(const NcPoly& P, long long m, const std::function<void(SparseVec)>& sink);

    /// Coordinate row of homogeneous p in the degree-m word basis.
    SparseVec vectorize(const NcPoly& p, long long m);

private:
    Grading g_;
    std::map<long long, DegreeContext> ctxs_;
    std::map<long long, SparseEchelon> l2_;
};

} // namespace lcsb2

#endif
