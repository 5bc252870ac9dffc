#include "lcsb2/sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lcsb2 {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr i128 kMaxSmall = std::numeric_limits<long long>::max();

void strip_content_small(SparseVec& v) {
    long long g = 0;
    for (long long x : v.small) {
        g = std::gcd(g, x < 0 ? -x : x);
        if (g == 1) break;
    }
    if (g > 1)
        for (long long& x : v.small) x /= g;
}

void strip_content_big(SparseVec& v) {
    Int g = 0;
    for (const Int& x : v.big) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (Int& x : v.big) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    // demote when everything fits again
    bool fits = true;
    for (const Int& x : v.big)
        if (!x.fits_slong_p()) { fits = false; break; }
    if (fits) {
        v.small.resize(v.big.size());
        for (std::size_t i = 0; i < v.big.size(); ++i) v.small[i] = v.big[i].get_si();
        v.big.clear();
        v.wide = false;
    }
}

void promote(SparseVec& v) {
    if (v.wide) return;
    v.big.resize(v.small.size());
    for (std::size_t i = 0; i < v.small.size(); ++i) v.big[i] = static_cast<long>(v.small[i]);
    v.small.clear();
    v.wide = true;
}

// Merged combination a*v - b*w over mpz; result replaces v.
void combine_big(SparseVec& v, const Int& a, const SparseVec& w, const Int& b) {
    SparseVec out;
    out.wide = true;
    out.cols.reserve(v.cols.size() + w.cols.size());
    out.big.reserve(v.cols.size() + w.cols.size());
    std::size_t i = 0, j = 0;
    Int tmp;
    auto vval = [&](std::size_t k) { return v.wide ? v.big[k] : Int(static_cast<long>(v.small[k])); };
    auto wval = [&](std::size_t k) { return w.wide ? w.big[k] : Int(static_cast<long>(w.small[k])); };
    while (i < v.cols.size() || j < w.cols.size()) {
        std::int32_t cv = i < v.cols.size() ? v.cols[i] : std::numeric_limits<std::int32_t>::max();
        std::int32_t cw = j < w.cols.size() ? w.cols[j] : std::numeric_limits<std::int32_t>::max();
        if (cv < cw) {
            out.cols.push_back(cv);
            out.big.push_back(a * vval(i));
            ++i;
        } else if (cw < cv) {
            out.cols.push_back(cw);
            out.big.push_back(-b * wval(j));
            ++j;
        } else {
            tmp = a * vval(i) - b * wval(j);
            if (tmp != 0) {
                out.cols.push_back(cv);
                out.big.push_back(tmp);
            }
            ++i;
            ++j;
        }
    }
    strip_content_big(out);
    v = std::move(out);
}

} // namespace

SparseVec SparseVec::from_terms(std::vector<std::pair<std::int32_t, Rat>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates
    std::vector<std::pair<std::int32_t, Rat>> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    Int lcm = 1;
    for (const auto& t : merged)
        if (t.second != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.second.get_den_mpz_t());
    SparseVec v;
    v.wide = true;
    for (const auto& t : merged) {
        if (t.second == 0) continue;
        Int scaled = t.second.get_num() * (lcm / t.second.get_den());
        v.cols.push_back(t.first);
        v.big.push_back(std::move(scaled));
    }
    if (v.cols.empty()) {
        v.wide = false;
        return v;
    }
    strip_content_big(v);
    return v;
}

SparseVec SparseVec::from_int_terms(std::vector<std::pair<std::int32_t, long long>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& t : terms) {
        if (!v.cols.empty() && v.cols.back() == t.first) {
            v.small.back() += t.second; // inputs are tiny; no overflow here
        } else {
            v.cols.push_back(t.first);
            v.small.push_back(t.second);
        }
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.cols.size(); ++i) {
        if (v.small[i] != 0) {
            v.cols[out] = v.cols[i];
            v.small[out] = v.small[i];
            ++out;
        }
    }
    v.cols.resize(out);
    v.small.resize(out);
    strip_content_small(v);
    return v;
}

void eliminate_at(SparseVec& v, std::size_t pos, const SparseVec& b) {
    if (v.empty() || b.empty() || pos >= v.nnz() || v.cols[pos] != b.lead())
        throw std::logic_error("eliminate_at requires v[pos] on b's leading column");
    if (!v.wide && !b.wide) {
        const i128 bl = b.small[0];
        const i128 vl = v.small[pos];
        SparseVec out;
        out.cols.reserve(v.cols.size() + b.cols.size());
        std::vector<i128> vals;
        vals.reserve(v.cols.size() + b.cols.size());
        std::size_t i = 0, j = 0;
        u128 g = 0;
        while (i < v.cols.size() || j < b.cols.size()) {
            std::int32_t cv = i < v.cols.size() ? v.cols[i] : std::numeric_limits<std::int32_t>::max();
            std::int32_t cb = j < b.cols.size() ? b.cols[j] : std::numeric_limits<std::int32_t>::max();
            i128 val;
            std::int32_t col;
            if (cv < cb) {
                col = cv;
                val = bl * v.small[i];
                ++i;
            } else if (cb < cv) {
                col = cb;
                val = -vl * b.small[j];
                ++j;
            } else {
                col = cv;
                val = bl * v.small[i] - vl * b.small[j];
                ++i;
                ++j;
            }
            if (val != 0) {
                out.cols.push_back(col);
                vals.push_back(val);
                if (g != 1) g = gcd128(g, abs128(val));
            }
        }
        bool fits = true;
        out.small.resize(vals.size());
        for (std::size_t k = 0; k < vals.size(); ++k) {
            i128 reduced = g > 1 ? vals[k] / static_cast<i128>(g) : vals[k];
            if (reduced > kMaxSmall || reduced < -kMaxSmall) {
                fits = false;
                break;
            }
            out.small[k] = static_cast<long long>(reduced);
        }
        if (fits) {
            v = std::move(out);
            return;
        }
        // rare: redo in full precision
    }
    Int a = b.wide ? b.big[0] : Int(static_cast<long>(b.small[0]));
    Int c = v.wide ? v.big[pos] : Int(static_cast<long>(v.small[pos]));
    combine_big(v, a, b, c);
}

void eliminate_lead(SparseVec& v, const SparseVec& b) { eliminate_at(v, 0, b); }

SparseEchelon::SparseEchelon(std::int32_t ncols) : lead_row_(ncols, -1) {}

bool SparseEchelon::insert(SparseVec v) {
    while (!v.empty()) {
        std::int32_t at = lead_row_[v.lead()];
        if (at < 0) {
            lead_row_[v.lead()] = static_cast<std::int32_t>(rows_.size());
            rows_.push_back(std::move(v));
            return true;
        }
        eliminate_lead(v, rows_[at]);
    }
    return false;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
    while (!v.empty()) {
        std::int32_t at = lead_row_[v.lead()];
        if (at < 0) break;
        eliminate_lead(v, rows_[at]);
    }
    return v;
}

bool SparseEchelon::reduces_to_zero(SparseVec v) const { return reduce(std::move(v)).empty(); }

std::vector<std::pair<std::int32_t, Rat>>
SparseEchelon::reduce_full(std::vector<std::pair<std::int32_t, Rat>> v) const {
    // Eliminating at a pivot column only introduces columns to its right, so a
    // left-to-right sweep over an ordered map terminates.
    std::map<std::int32_t, Rat> work;
    for (auto& [c, x] : v)
        if (x != 0) {
            auto [it, fresh] = work.try_emplace(c, x);
            if (!fresh) it->second += x;
        }
    auto it = work.begin();
    while (it != work.end()) {
        if (it->second == 0) {
            it = work.erase(it);
            continue;
        }
        std::int32_t at = lead_row_[it->first];
        if (at < 0) {
            ++it;
            continue;
        }
        const SparseVec& b = rows_[at]; // b.cols[0] == it->first
        const Rat f = it->second / b.entry(0);
        for (std::size_t k = 1; k < b.nnz(); ++k) {
            auto [jt, fresh] = work.try_emplace(b.cols[k], Rat(0));
            jt->second -= f * b.entry(k);
        }
        it = work.erase(it);
    }
    std::vector<std::pair<std::int32_t, Rat>> out;
    for (auto& [c, x] : work)
        if (x != 0) out.emplace_back(c, x);
    return out;
}

ModularEchelon::ModularEchelon(std::int32_t ncols, std::uint64_t prime)
    : p_(prime), lead_row_(ncols, -1) {}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

} // namespace

bool ModularEchelon::insert(const SparseVec& v) {
    Row r;
    r.cols.reserve(v.nnz());
    r.vals.reserve(v.nnz());
    for (std::size_t k = 0; k < v.nnz(); ++k) {
        std::uint64_t m;
        if (v.wide) {
            m = mpz_fdiv_ui(v.big[k].get_mpz_t(), p_);
        } else {
            long long x = v.small[k];
            m = x >= 0 ? static_cast<std::uint64_t>(x) % p_
                       : p_ - (static_cast<std::uint64_t>(-(x + 1)) + 1) % p_;
            if (m == p_) m = 0;
        }
        if (m != 0) {
            r.cols.push_back(v.cols[k]);
            r.vals.push_back(m);
        }
    }
    return insert_row(std::move(r));
}

bool ModularEchelon::insert_row(Row r) {
    while (!r.cols.empty()) {
        std::int32_t at = lead_row_[r.cols[0]];
        if (at < 0) {
            std::uint64_t inv = invmod(r.vals[0], p_);
            for (auto& x : r.vals) x = mulmod(x, inv, p_);
            lead_row_[r.cols[0]] = static_cast<std::int32_t>(rows_.size());
            rows_.push_back(std::move(r));
            return true;
        }
        const Row& b = rows_[at];
        const std::uint64_t f = r.vals[0]; // b is normalized, so subtract f*b
        Row out;
        out.cols.reserve(r.cols.size() + b.cols.size());
        out.vals.reserve(r.cols.size() + b.cols.size());
        std::size_t i = 0, j = 0;
        while (i < r.cols.size() || j < b.cols.size()) {
            std::int32_t cr = i < r.cols.size() ? r.cols[i] : std::numeric_limits<std::int32_t>::max();
            std::int32_t cb = j < b.cols.size() ? b.cols[j] : std::numeric_limits<std::int32_t>::max();
            std::int32_t col;
            std::uint64_t val;
            if (cr < cb) {
                col = cr;
                val = r.vals[i];
                ++i;
            } else if (cb < cr) {
                col = cb;
                val = p_ - mulmod(f, b.vals[j], p_);
                if (val == p_) val = 0;
                ++j;
            } else {
                col = cr;
                std::uint64_t sub = mulmod(f, b.vals[j], p_);
                val = r.vals[i] >= sub ? r.vals[i] - sub : r.vals[i] + p_ - sub;
                ++i;
                ++j;
            }
            if (val != 0) {
                out.cols.push_back(col);
                out.vals.push_back(val);
            }
        }
        r = std::move(out);
    }
    return false;
}

namespace {

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace

std::uint64_t random_prime62(std::uint64_t seed) {
    // splitmix64 step to decorrelate consecutive seeds
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    std::uint64_t candidate = (1ull << 61) | (z % (1ull << 61)) | 1ull;
    while (!miller_rabin(candidate)) candidate += 2;
    return candidate;
}

} // namespace lcsb2
