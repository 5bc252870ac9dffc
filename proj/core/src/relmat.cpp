#include "lcsb2/relmat.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "lcsb2/errors.hpp"

namespace lcsb2 {

std::string shape_class_name(ShapeClass s) {
    switch (s) {
    case ShapeClass::UV00: return "UV00";
    case ShapeClass::UV11: return "UV11";
    case ShapeClass::UV01: return "UV01";
    }
    return "?";
}

std::string pq_case_name(PqCase c) {
    switch (c) {
    case PqCase::BothNonzero: return "p!=0,q!=0";
    case PqCase::PZeroQNonzero: return "p=0,q!=0";
    case PqCase::PNonzeroQZero: return "p!=0,q=0";
    case PqCase::BothZero: return "p=0,q=0";
    }
    return "?";
}

namespace {

ShapeClass classify_shape(const ShapeParams& shape) {
    if (shape.u == 0 && shape.v == 0) return ShapeClass::UV00;
    if (shape.u == 1 && shape.v == 1) return ShapeClass::UV11;
    if (shape.u == 0 && shape.v == 1) return ShapeClass::UV01;
    throw std::logic_error("(1,0) shapes must be swapped to (0,1) before dispatch");
}

PqCase classify_pq(const SmData& sm) {
    if (sm.p != 0 && sm.q != 0) return PqCase::BothNonzero;
    if (sm.p == 0 && sm.q != 0) return PqCase::PZeroQNonzero;
    if (sm.p != 0 && sm.q == 0) return PqCase::PNonzeroQZero;
    return PqCase::BothZero;
}

} // namespace

CaseTag classify_case(const ShapeParams& shape, const SmData& sm) {
    if (!sm.has_smd) throw std::invalid_argument("classify_case requires nonempty S_{m-d}");
    return {classify_shape(shape), classify_pq(sm)};
}

ShapeParams swap_xy(const ShapeParams& shape) {
    ShapeParams out;
    out.u = shape.v;
    out.v = shape.u;
    out.n = shape.n;
    out.d = shape.d;
    out.a.assign(shape.a.rbegin(), shape.a.rend());
    return out;
}

SmData compute_sm(const Grading& g, const ShapeParams& shape, long long m) {
    if (m < 0) throw std::invalid_argument("compute_sm needs m >= 0");
    SmData sm;
    sm.m = m;
    for (long long i = m / g.s; i >= 0; --i) {
        long long rest = m - i * g.s;
        if (rest % g.r) continue;
        long long j = rest / g.r;
        sm.S_m.emplace_back(i, j);
        if (i >= 1 && j >= 1) sm.S_m_plus.emplace_back(i, j);
    }
    const long long M = m - shape.d;
    if (M >= 0) {
        std::vector<std::pair<long long, long long>> smd;
        for (long long i = M / g.s; i >= 0; --i) {
            long long rest = M - i * g.s;
            if (rest % g.r) continue;
            smd.emplace_back(i, rest / g.r);
        }
        if (!smd.empty()) {
            sm.has_smd = true;
            sm.l = static_cast<long long>(smd.size()) - 1;
            sm.p = smd.back().first;  // minimal i
            sm.q = smd.front().second; // minimal j
            if (sm.p < 0 || sm.p > g.r - 1 || sm.q < 0 || sm.q > g.s - 1)
                throw std::logic_error("S_{m-d} parametrization out of range");
            for (long long t = 0; t <= sm.l; ++t) {
                const auto expect = std::make_pair(sm.p + (sm.l - t) * g.r, sm.q + t * g.s);
                if (smd[static_cast<std::size_t>(t)] != expect)
                    throw std::logic_error("S_{m-d} parametrization mismatch");
            }
        }
    }
    return sm;
}

namespace {

struct ColumnFamily {
    // family index i = 0..n+l: exponents (U + (n+l-i)r, V + is)
    long long U, V, n, l;
    std::vector<long long> kept; // family indices with both exponents positive

    ColumnFamily(const ShapeParams& shape, const Grading& g, const SmData& sm)
        : U(shape.u + sm.p), V(shape.v + sm.q), n(shape.n), l(sm.l) {
        for (long long i = 0; i <= n + l; ++i)
            if (xe(i, g) > 0 && ye(i, g) > 0) kept.push_back(i);
    }
    long long xe(long long i, const Grading& g) const { return U + (n + l - i) * g.r; }
    long long ye(long long i, const Grading& g) const { return V + i * g.s; }
};

} // namespace

ExactMatrix build_A(const ShapeParams& shape, const Grading& g, const SmData& sm) {
    if (!sm.has_smd) throw std::invalid_argument("build_A requires nonempty S_{m-d}");
    if (shape.n < 1) throw std::invalid_argument("build_A requires n >= 1");
    const ColumnFamily cf(shape, g, sm);
    const long long n = shape.n, l = sm.l;

    // sanity: the kept columns are exactly S+_m
    if (cf.kept.size() != sm.S_m_plus.size())
        throw std::logic_error("column family does not match S+_m");
    for (std::size_t c = 0; c < cf.kept.size(); ++c)
        if (std::make_pair(cf.xe(cf.kept[c], g), cf.ye(cf.kept[c], g)) != sm.S_m_plus[c])
            throw std::logic_error("column family does not match S+_m");

    std::vector<std::pair<long long, bool>> rows; // (t, is_p_row), p-block first
    for (long long t = 0; t <= l; ++t)
        if (sm.p_t(t, g) > 0) rows.emplace_back(t, true);
    for (long long t = 0; t <= l; ++t)
        if (sm.q_t(t, g) > 0) rows.emplace_back(t, false);

    ExactMatrix A(rows.size(), cf.kept.size());
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        const auto [t, is_p] = rows[ri];
        A.row_labels.push_back((is_p ? "p,t=" : "q,t=") + std::to_string(t));
        for (std::size_t c = 0; c < cf.kept.size(); ++c) {
            const long long i = cf.kept[c];
            const long long k = i - t;
            if (k < 0 || k > n) continue;
            const long long denom = is_p ? cf.xe(i, g) : cf.ye(i, g);
            A.at(ri, c) = shape.a[static_cast<std::size_t>(k)] / Rat(static_cast<long>(denom));
        }
    }
    for (std::size_t c = 0; c < cf.kept.size(); ++c)
        A.col_labels.push_back("(" + std::to_string(cf.xe(cf.kept[c], g)) + "," +
                               std::to_string(cf.ye(cf.kept[c], g)) + ")");
    return A;
}

OpScript reduction_script(const ShapeParams& shape, const Grading& g, const SmData& sm) {
    if (!sm.has_smd || sm.p == 0 || sm.q == 0)
        throw std::invalid_argument("the reduction script needs p != 0 and q != 0");
    const long long n = shape.n, l = sm.l;
    const long long U = shape.u + sm.p, V = shape.v + sm.q;
    OpScript script;
    for (long long i = 0; i <= n + l; ++i) {
        Rat c = Rat(static_cast<long>(U + (n + l - i) * g.r)) * Rat(static_cast<long>(V + i * g.s));
        script.push_back(OpStep::scale_col(static_cast<std::size_t>(i), c));
    }
    for (long long j = 0; j <= l; ++j) {
        const std::size_t pj = static_cast<std::size_t>(j);
        const std::size_t qj = static_cast<std::size_t>(j + l + 1);
        script.push_back(OpStep::scale_row(pj, Rat(g.r)));
        script.push_back(OpStep::add_row_multiple(qj, pj, Rat(g.s)));
        script.push_back(OpStep::scale_row(pj, Rat(1) / Rat(static_cast<long>(sm.m))));
        // row j needs u+p+(l-j)r: (u+p+(n+l-i)r) - (u+p+(l-j)r) = (n-(i-j))r
        script.push_back(OpStep::add_row_multiple(pj, qj, -Rat(static_cast<long>(U + (l - j) * g.r))));
        script.push_back(OpStep::scale_row(qj, Rat(1) / Rat(g.r)));
    }
    return script;
}

namespace {

ExactMatrix banded_both_nonzero(const std::vector<Rat>& a, long long n, long long l) {
    ExactMatrix B(2 * l + 2, n + l + 1);
    for (long long j = 0; j <= l; ++j)
        for (long long k = 0; k <= n; ++k) {
            B.at(j, j + k) = a[static_cast<std::size_t>(k)];
            B.at(l + 1 + j, j + k) = Rat(static_cast<long>(n - k)) * a[static_cast<std::size_t>(k)];
        }
    return B;
}

ExactMatrix banded_one_zero(const std::vector<Rat>& a, long long n, long long l) {
    ExactMatrix B(2 * l + 1, n + l);
    for (long long j = 0; j < l; ++j)
        for (long long k = 0; k <= n; ++k) B.at(j, j + k) = a[static_cast<std::size_t>(k)];
    for (long long j = 0; j <= l; ++j)
        for (long long k = 0; k < n; ++k)
            B.at(l + j, j + k) = Rat(static_cast<long>(n - k)) * a[static_cast<std::size_t>(k)];
    return B;
}

ExactMatrix banded_both_zero(const std::vector<Rat>& a, long long n, long long l) {
    ExactMatrix B(2 * l, std::max<long long>(n + l - 1, 0));
    for (long long j = 0; j + 1 < l; ++j)
        for (long long k = 0; k <= n; ++k) B.at(j, j + k) = a[static_cast<std::size_t>(k)];
    if (l >= 1)
        for (long long k = 1; k <= n; ++k)
            B.at(l - 1, k - 1) = Rat(static_cast<long>(k)) * a[static_cast<std::size_t>(k)];
    for (long long j = 0; j < l; ++j)
        for (long long k = 0; k < n; ++k)
            B.at(l + j, j + k) = Rat(static_cast<long>(n - k)) * a[static_cast<std::size_t>(k)];
    return B;
}

ExactMatrix append_unit_column(ExactMatrix B, long long row) {
    ExactMatrix out(B.nrows(), B.ncols() + 1);
    for (std::size_t i = 0; i < B.nrows(); ++i)
        for (std::size_t j = 0; j < B.ncols(); ++j) out.at(i, j) = B.at(i, j);
    if (row >= 0 && row < static_cast<long long>(B.nrows()))
        out.at(static_cast<std::size_t>(row), B.ncols()) = 1;
    return out;
}

} // namespace

ExactMatrix build_B(const ShapeParams& shape, const Grading& g, const SmData& sm) {
    if (!sm.has_smd) throw std::invalid_argument("build_B requires nonempty S_{m-d}");
    if (shape.n < 1) throw std::invalid_argument("build_B requires n >= 1");
    const CaseTag tag = classify_case(shape, sm);
    const long long n = shape.n, l = sm.l;
    const std::vector<Rat> rev(shape.a.rbegin(), shape.a.rend());

    switch (tag.shape) {
    case ShapeClass::UV00:
        switch (tag.pq) {
        case PqCase::BothNonzero: return banded_both_nonzero(shape.a, n, l);
        case PqCase::PZeroQNonzero: return banded_one_zero(shape.a, n, l);
        case PqCase::PNonzeroQZero: return banded_one_zero(rev, n, l); // x <-> y
        case PqCase::BothZero: return banded_both_zero(shape.a, n, l);
        }
        break;
    case ShapeClass::UV11:
        switch (tag.pq) {
        case PqCase::BothNonzero: return banded_both_nonzero(shape.a, n, l);
        case PqCase::PZeroQNonzero: return append_unit_column(banded_one_zero(shape.a, n, l), 2 * l);
        case PqCase::PNonzeroQZero: return append_unit_column(banded_one_zero(rev, n, l), 2 * l);
        case PqCase::BothZero:
            return append_unit_column(append_unit_column(banded_both_zero(shape.a, n, l), 2 * l - 1), l - 1);
        }
        break;
    case ShapeClass::UV01:
        switch (tag.pq) {
        case PqCase::BothNonzero: return banded_both_nonzero(shape.a, n, l);
        case PqCase::PZeroQNonzero: return banded_one_zero(shape.a, n, l);
        case PqCase::PNonzeroQZero: return append_unit_column(banded_one_zero(rev, n, l), 2 * l);
        case PqCase::BothZero: return append_unit_column(banded_both_zero(shape.a, n, l), l - 1);
        }
        break;
    }
    throw std::logic_error("unreachable");
}

namespace {

ExactMatrix take_rows(const ExactMatrix& m, const std::vector<std::size_t>& rows) {
    ExactMatrix out(rows.size(), m.ncols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m.ncols(); ++j) out.at(i, j) = m.at(rows[i], j);
    return out;
}

Rat abs_rat(Rat v) { return v < 0 ? -v : v; }

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Rat rat_pow(const Rat& base, long long e) {
    Rat acc(1);
    for (long long i = 0; i < e; ++i) acc *= base;
    return acc;
}

} // namespace

RankCertificate certify_max_rank(const ShapeParams& shape_in, const Grading& g_in, long long m) {
    ShapeParams shape = shape_in;
    Grading g = g_in;
    if (shape.u == 1 && shape.v == 0) {
        shape = swap_xy(shape);
        g = Grading(g_in.r, g_in.s);
    }
    if (shape.n < 1) throw std::invalid_argument("certify_max_rank requires n >= 1");

    const SmData sm = compute_sm(g, shape, m);
    if (!sm.has_smd) throw std::invalid_argument("certify_max_rank requires nonempty S_{m-d}");

    RankCertificate cert;
    cert.m = m;
    cert.tag = classify_case(shape, sm);
    const long long n = shape.n, l = sm.l;

    const std::vector<Rat> h = shape.h_coeffs();
    const std::vector<Rat> hp = shape.h_derivative_coeffs();
    const Rat res = resultant(h, hp);
    cert.det_checks.push_back({"resultant_nonzero", abs_rat(res), abs_rat(res), sign_of(res), res != 0});

    ExactMatrix A = build_A(shape, g, sm);
    ExactMatrix B = build_B(shape, g, sm);
    cert.rows = static_cast<long long>(A.nrows());
    cert.cols = static_cast<long long>(A.ncols());
    if (B.nrows() != A.nrows() || B.ncols() != A.ncols())
        throw std::logic_error("A and B dimensions disagree");

    cert.expected_rank = std::min(cert.rows, cert.cols);
    cert.rank = rank(A);
    cert.rank_ok = cert.rank == cert.expected_rank && rank(B) == cert.expected_rank;

    if (cert.tag.pq == PqCase::BothNonzero) {
        cert.script_applicable = true;
        cert.script_ok = apply_script(A, reduction_script(shape, g, sm)) == B;
    }

    if (cert.tag.pq == PqCase::BothNonzero && l + 1 >= n) {
        std::vector<std::size_t> rows(static_cast<std::size_t>(n + l + 1));
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
        const Rat d = det(take_rows(B, rows));
        const Rat expected = rat_pow(abs_rat(shape.a[static_cast<std::size_t>(n)]), l - n + 2) * abs_rat(res);
        cert.det_checks.push_back({"head_square_det", expected, abs_rat(d), sign_of(d), abs_rat(d) == expected});
    }

    if (cert.tag.shape == ShapeClass::UV00 && cert.tag.pq == PqCase::BothZero) {
        if (n >= 2) {
            // Seed matrix M: the l = n-1 instance of the Case-3 band pattern,
            // reached from Sylv(h, h') by the quoted row operations.
            ExactMatrix M = banded_both_zero(shape.a, n, n - 1);
            ExactMatrix T = sylvester(h, hp);
            OpScript pre{OpStep::add_row_multiple(0, static_cast<std::size_t>(n - 1),
                                                  Rat(static_cast<long>(-n))),
                         OpStep::scale_row(static_cast<std::size_t>(n - 1), Rat(-1))};
            T = apply_script(std::move(T), pre);
            bool structural = true;
            for (std::size_t i = 1; i < T.nrows() && structural; ++i)
                structural = T.at(i, 0) == 0;
            structural = structural && T.at(0, 0) == shape.a[0];
            for (std::size_t i = 1; i < T.nrows() && structural; ++i)
                for (std::size_t j = 1; j < T.ncols() && structural; ++j)
                    structural = T.at(i, j) == M.at(i - 1, j - 1);
            const Rat dM = det(M);
            const Rat expected = abs_rat(res / shape.a[0]);
            cert.det_checks.push_back({"seed_matrix_det", expected, abs_rat(dM), sign_of(dM),
                                       structural && dM != 0 && abs_rat(dM) == expected});
        }
        if (l >= n) {
            std::vector<std::size_t> rows;
            for (long long i = 0; i < n + l; ++i)
                if (i != l - 1) rows.push_back(static_cast<std::size_t>(i));
            const Rat d = det(take_rows(B, rows));
            const Rat expected = rat_pow(abs_rat(shape.a[static_cast<std::size_t>(n)]), l - n) * abs_rat(res);
            cert.det_checks.push_back(
                {"punctured_head_det", expected, abs_rat(d), sign_of(d), abs_rat(d) == expected});
        }
    }

    cert.ok = cert.rank_ok && (!cert.script_applicable || cert.script_ok);
    for (const DetCheck& dc : cert.det_checks) cert.ok = cert.ok && dc.ok;
    if (!cert.ok) cert.failed_dump = to_csv(A);
    return cert;
}

std::string certificate_to_json(const RankCertificate& cert) {
    nlohmann::ordered_json j;
    j["m"] = cert.m;
    j["shape"] = shape_class_name(cert.tag.shape);
    j["pq_case"] = pq_case_name(cert.tag.pq);
    j["A_dims"] = {cert.rows, cert.cols};
    j["rank"] = cert.rank;
    j["expected_rank"] = cert.expected_rank;
    j["script_checked"] = cert.script_applicable;
    j["script_ok"] = cert.script_applicable ? nlohmann::json(cert.script_ok) : nlohmann::json(nullptr);
    j["det_checks"] = nlohmann::ordered_json::array();
    for (const DetCheck& dc : cert.det_checks) {
        nlohmann::ordered_json c;
        c["name"] = dc.name;
        c["expected_abs"] = rational_to_string(dc.expected_abs);
        c["computed_abs"] = rational_to_string(dc.computed_abs);
        c["sign"] = dc.sign;
        c["ok"] = dc.ok;
        j["det_checks"].push_back(c);
    }
    j["verdict"] = cert.ok ? "certified" : "failed";
    if (!cert.ok) j["matrix_csv"] = cert.failed_dump;
    return j.dump();
}

namespace {

long long n0_survivor_count(const ShapeParams& shape, const SmData& sm) {
    // With n = 0 every single-term relation kills one bracket outright:
    // [x^a, y^b] dies whenever (a, b) = (i+u, j+v) for an admissible (i, j).
    long long count = 0;
    for (const auto& [a, b] : sm.S_m_plus) {
        const bool killed = (a >= shape.u && b >= shape.v + 1) || (a >= shape.u + 1 && b >= shape.v);
        if (!killed) ++count;
    }
    return count;
}

} // namespace

BoundResult dim_bound(const Grading& g_in, const ShapeParams& shape_in, long long m) {
    ShapeParams shape = shape_in;
    Grading g = g_in;
    if (shape.u == 1 && shape.v == 0) {
        shape = swap_xy(shape);
        g = Grading(g_in.r, g_in.s);
    }
    const SmData sm = compute_sm(g, shape, m);
    if (shape.n == 0)
        return {n0_survivor_count(shape, sm), true, false};
    if (!sm.has_smd)
        return {static_cast<long long>(sm.S_m_plus.size()), true, false};

    RankCertificate cert = certify_max_rank(shape, g, m);
    const long long bound = std::max<long long>(cert.cols - cert.rows, 0);
    return {bound, cert.ok, true};
}

TruncatedSeries bound_series(const Grading& g, const ShapeParams& shape, long long N) {
    TruncatedSeries out(N);
    for (long long m = 0; m <= N; ++m) {
        BoundResult b = dim_bound(g, shape, m);
        if (!b.certified)
            throw CertificateError("uncertified dimension bound at degree " + std::to_string(m));
        out.at(m) = b.bound;
    }
    return out;
}

} // namespace lcsb2
