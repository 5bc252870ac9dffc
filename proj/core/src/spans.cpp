#include "lcsb2/spans.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsb2 {

DegreeContext::DegreeContext(const Grading& g, long long m)
    : m_(m), words_(enumerate_words(g, m)) {}

std::int32_t DegreeContext::index_of(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w)
        throw std::logic_error("word is not in this degree slice");
    return static_cast<std::int32_t>(it - words_.begin());
}

const DegreeContext& SpanCache::context(long long m) {
    auto it = ctxs_.find(m);
    if (it == ctxs_.end()) it = ctxs_.emplace(m, DegreeContext(g_, m)).first;
    return it->second;
}

void SpanCache::stream_l2(long long m, const std::function<void(SparseVec)>& sink) {
    const DegreeContext& ctx = context(m);
    for (const Word& w : ctx.words()) {
        const std::int32_t wi = ctx.index_of(w);
        for (int k = 1; k < w.length(); ++k) {
            Word rot = w.rotated_left(k);
            if (rot == w) continue;
            sink(SparseVec::from_int_terms({{wi, 1}, {ctx.index_of(rot), -1}}));
        }
    }
}

const SparseEchelon& SpanCache::l2_echelon(long long m) {
    auto it = l2_.find(m);
    if (it == l2_.end()) {
        SparseEchelon ech(context(m).size());
        stream_l2(m, [&ech](SparseVec v) { ech.insert(std::move(v)); });
        it = l2_.emplace(m, std::move(ech)).first;
    }
    return it->second;
}

void SpanCache::stream_l3(long long m, const std::function<void(SparseVec)>& sink) {
    const DegreeContext& ctx = context(m);
    const long long min_letter = std::min(g_.s, g_.r);
    for (long long a = min_letter; m - a >= 2 * min_letter; ++a) {
        const auto outer = enumerate_words(g_, a);
        if (outer.empty()) continue;
        const SparseEchelon& inner = l2_echelon(m - a);
        if (inner.rank() == 0) continue;
        const DegreeContext& inner_ctx = context(m - a);
        for (const Word& w : outer) {
            for (const SparseVec& b : inner.rows()) {
                // L2 elimination bases stay two-term word differences
                if (b.wide) throw std::logic_error("L2 basis row escaped the narrow path");
                std::vector<std::pair<std::int32_t, long long>> terms;
                terms.reserve(2 * b.nnz());
                for (std::size_t k = 0; k < b.nnz(); ++k) {
                    const Word& u = inner_ctx.words()[b.cols[k]];
                    const long long c = b.small[k];
                    terms.emplace_back(ctx.index_of(w.concat(u)), c);
                    terms.emplace_back(ctx.index_of(u.concat(w)), -c);
                }
                SparseVec row = SparseVec::from_int_terms(std::move(terms));
                if (!row.empty()) sink(std::move(row));
            }
        }
    }
}

void SpanCache::stream_ideal(const NcPoly& P, long long m,
                             const std::function<void(SparseVec)>& sink) {
    auto d = P.homogeneous_degree(g_);
    if (!d) throw std::invalid_argument("ideal slice requires homogeneous nonzero P");
    if (m < *d) return;
    const DegreeContext& ctx = context(m);

    // clear P's denominators once; content is irrelevant for spans
    Int lcm = 1;
    for (const auto& [w, c] : P.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::pair<Word, long long>> pterms;
    for (const auto& [w, c] : P.terms()) {
        Int scaled = c.get_num() * (lcm / c.get_den());
        if (!scaled.fits_slong_p())
            throw std::invalid_argument("ideal generator coefficients too large");
        pterms.emplace_back(w, scaled.get_si());
    }

    for (long long a = 0; a <= m - *d; ++a) {
        const auto left = enumerate_words(g_, a);
        const auto right = enumerate_words(g_, m - *d - a);
        for (const Word& w1 : left) {
            for (const Word& w2 : right) {
                std::vector<std::pair<std::int32_t, long long>> terms;
                terms.reserve(pterms.size());
                for (const auto& [t, c] : pterms)
                    terms.emplace_back(ctx.index_of(w1.concat(t).concat(w2)), c);
                SparseVec row = SparseVec::from_int_terms(std::move(terms));
                if (!row.empty()) sink(std::move(row));
            }
        }
    }
}

SparseVec SpanCache::vectorize(const NcPoly& p, long long m) {
    const DegreeContext& ctx = context(m);
    std::vector<std::pair<std::int32_t, Rat>> terms;
    for (const auto& [w, c] : p.terms()) {
        if (w.degree(g_) != m)
            throw std::invalid_argument("vectorize: polynomial is not homogeneous of the given degree");
        terms.emplace_back(ctx.index_of(w), c);
    }
    return SparseVec::from_terms(std::move(terms));
}

} // namespace lcsb2
