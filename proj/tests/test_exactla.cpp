#include <doctest.h>

#include <random>

#include "lcsb2/exactla.hpp"
#include "lcsb2/shape.hpp"
#include "lcsb2/sparse.hpp"
#include "oracles.hpp"

using namespace lcsb2;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -5,
                          int hi = 5) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(dist(rng));
    return m;
}

SparseVec row_of(const ExactMatrix& m, std::size_t i) {
    std::vector<std::pair<std::int32_t, Rat>> terms;
    for (std::size_t j = 0; j < m.ncols(); ++j)
        if (m.at(i, j) != 0) terms.emplace_back(static_cast<std::int32_t>(j), m.at(i, j));
    return SparseVec::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("rank examples") {
    CHECK(rank(ExactMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}})) == 2);
    CHECK(rank(ExactMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})) == 1);
    CHECK(rank(sylvester({Rat(1), Rat(0), Rat(-1)}, {Rat(2), Rat(0)})) == 3);
}

TEST_CASE("det examples") {
    ExactMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(det(id) == 1);
    CHECK(det(ExactMatrix::from_rows({{Rat(1), Rat(0), Rat(-1)},
                                      {Rat(2), Rat(0), Rat(0)},
                                      {Rat(0), Rat(2), Rat(0)}})) == -4);
    CHECK(det(ExactMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(1), Rat(2)}})) == 0);
    CHECK_THROWS_AS(det(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det agrees with cofactor expansion up to 5x5") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int t = 0; t < 10; ++t) {
            ExactMatrix m = random_matrix(rng, n, n);
            m.at(0, 0) /= 3; // exercise non-integer entries
            CHECK(det(m) == oracles::naive_det(m));
        }
    }
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        ExactMatrix m = random_matrix(rng, 4, 6, -2, 2);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("apply_script: examples and validation") {
    ExactMatrix m = ExactMatrix::from_rows({{Rat(1), Rat(1)}});
    ExactMatrix scaled = apply_script(m, {OpStep::scale_row(0, Rat(2))});
    CHECK(scaled == ExactMatrix::from_rows({{Rat(2), Rat(2)}}));

    ExactMatrix two = ExactMatrix::from_rows({{Rat(1)}, {Rat(1)}});
    CHECK(apply_script(two, {OpStep::add_row_multiple(0, 1, Rat(-1))}) ==
          ExactMatrix::from_rows({{Rat(1)}, {Rat(0)}}));

    CHECK_THROWS_AS(apply_script(two, {OpStep::scale_row(5, Rat(1))}), std::out_of_range);
    CHECK_THROWS_AS(apply_script(two, {OpStep::scale_row(0, Rat(0))}), std::invalid_argument);
    CHECK_THROWS_AS(apply_script(two, {OpStep::add_row_multiple(1, 1, Rat(1))}),
                    std::invalid_argument);
}

TEST_CASE("scripts preserve rank") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> idx(0, 3);
    std::uniform_int_distribution<int> cdist(1, 3);
    for (int t = 0; t < 25; ++t) {
        ExactMatrix m = random_matrix(rng, 4, 4, -3, 3);
        OpScript script;
        for (int s = 0; s < 6; ++s) {
            int a = idx(rng), b = idx(rng);
            switch (s % 4) {
            case 0: script.push_back(OpStep::scale_row(a, Rat(cdist(rng)))); break;
            case 1: script.push_back(OpStep::scale_col(a, Rat(-cdist(rng)))); break;
            case 2:
                if (a != b) script.push_back(OpStep::add_row_multiple(a, b, Rat(cdist(rng))));
                break;
            default:
                if (a != b) script.push_back(OpStep::add_col_multiple(a, b, Rat(cdist(rng))));
            }
        }
        CHECK(rank(apply_script(m, script)) == rank(m));
    }
}

TEST_CASE("sparse echelon matches dense rank") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        ExactMatrix m = random_matrix(rng, 8, 6, -2, 2);
        SparseEchelon ech(6);
        for (std::size_t i = 0; i < m.nrows(); ++i) ech.insert(row_of(m, i));
        CHECK(ech.rank() == rank(m));
    }
}

TEST_CASE("modular echelon never exceeds the exact rank and agrees generically") {
    std::mt19937_64 rng(17);
    const std::uint64_t p = random_prime62(42);
    for (int t = 0; t < 20; ++t) {
        ExactMatrix m = random_matrix(rng, 7, 7, -4, 4);
        SparseEchelon exact(7);
        ModularEchelon mod(7, p);
        for (std::size_t i = 0; i < m.nrows(); ++i) {
            SparseVec v = row_of(m, i);
            mod.insert(v);
            exact.insert(std::move(v));
        }
        CHECK(mod.rank() <= exact.rank());
        CHECK(mod.rank() == exact.rank()); // entries are tiny, no unlucky prime
    }
}

TEST_CASE("sparse engine promotes to big integers when entries overflow") {
    SparseEchelon ech(3);
    Rat huge(Int("1208925819614629174706176")); // 2^80
    ech.insert(SparseVec::from_terms({{0, huge}, {1, Rat(1)}}));
    ech.insert(SparseVec::from_terms({{0, Rat(1)}, {2, huge}}));
    ech.insert(SparseVec::from_terms({{1, Rat(1)}, {2, Rat(1)}}));
    ExactMatrix m(3, 3);
    m.at(0, 0) = huge;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 2) = huge;
    m.at(2, 1) = 1;
    m.at(2, 2) = 1;
    CHECK(ech.rank() == rank(m));
}

TEST_CASE("from_terms clears denominators and merges duplicates") {
    SparseVec v = SparseVec::from_terms({{2, Rat(1, 6)}, {0, Rat(1, 2)}, {2, Rat(1, 3)}});
    REQUIRE(v.nnz() == 2);
    CHECK(v.cols[0] == 0);
    CHECK(v.entry(0) == 1);
    CHECK(v.entry(1) == 1); // 1/6 + 1/3 = 1/2, content-stripped against 1/2
    SparseVec z = SparseVec::from_terms({{1, Rat(1)}, {1, Rat(-1)}});
    CHECK(z.empty());
}

TEST_CASE("reduce_full clears pivot columns without rescaling the class") {
    SparseEchelon ech(4);
    ech.insert(SparseVec::from_int_terms({{0, 1}, {2, 1}}));
    ech.insert(SparseVec::from_int_terms({{1, 2}, {3, 1}}));
    auto res = ech.reduce_full({{0, Rat(1)}, {1, Rat(1)}, {2, Rat(0)}});
    // e0 + e1 == (e0 + e2) + (1/2)(2 e1 + e3) - e2 - (1/2) e3 (mod basis)
    REQUIRE(res.size() == 2);
    CHECK(res[0] == std::make_pair(std::int32_t(2), Rat(-1)));
    CHECK(res[1] == std::make_pair(std::int32_t(3), Rat(-1, 2)));
    CHECK(ech.reduce_full({{0, Rat(1)}, {2, Rat(1)}}).empty());
}

TEST_CASE("CSV dump carries labels") {
    ExactMatrix m = ExactMatrix::from_rows({{Rat(1), Rat(1, 2)}});
    m.row_labels = {"r0"};
    m.col_labels = {"a", "b"};
    CHECK(to_csv(m) == ",a,b\nr0,1,1/2\n");
    CHECK(to_csv(m, false) == "1,1/2\n");
}
