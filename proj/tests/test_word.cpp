#include <doctest.h>

#include "lcsb2/word.hpp"
#include "oracles.hpp"

using namespace lcsb2;

namespace {

std::vector<std::string> strs(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(w.str());
    return out;
}

} // namespace

TEST_CASE("word parse / print / letters") {
    Word w = Word::parse("xyyx");
    CHECK(w.str() == "xyyx");
    CHECK(w.length() == 4);
    CHECK(w.x_count() == 2);
    CHECK(w.y_count() == 2);
    CHECK(w.letter(0) == 0);
    CHECK(w.letter(1) == 1);
    CHECK(Word::parse("").empty());
    CHECK_THROWS_AS(Word::parse("xz"), std::invalid_argument);
}

TEST_CASE("concat and rotation") {
    Word a = Word::parse("xy"), b = Word::parse("yx");
    CHECK(a.concat(b).str() == "xyyx");
    CHECK(Word::parse("xyyx").rotated_left(1).str() == "yyxx");
    CHECK(Word::parse("xyyx").rotated_left(4) == Word::parse("xyyx"));
    CHECK(Word::unit().rotated_left(1) == Word::unit());
}

TEST_CASE("shortlex order") {
    CHECK(Word::parse("yy") < Word::parse("xxx")); // shorter first
    CHECK(Word::parse("xxy") < Word::parse("xyx")); // then lexicographic, x < y
    CHECK(Word::parse("x") < Word::parse("y"));
}

TEST_CASE("enumerate_words: unweighted slices") {
    Grading g(1, 1);
    CHECK(strs(enumerate_words(g, 2)) == std::vector<std::string>{"xx", "xy", "yx", "yy"});
    CHECK(enumerate_words(g, 0) == std::vector<Word>{Word::unit()});
    for (long long m = 0; m <= 12; ++m)
        CHECK(enumerate_words(g, m).size() == (1ull << m));
}

TEST_CASE("enumerate_words: weighted slices") {
    Grading g(2, 3);
    CHECK(strs(enumerate_words(g, 6)) == std::vector<std::string>{"yy", "xxx"});
    CHECK(enumerate_words(g, 1).empty());
    CHECK(enumerate_words(g, 5).size() == 2); // xy, yx
}

TEST_CASE("enumerate_words agrees with the recursive oracle") {
    for (const Grading& g : {Grading(1, 1), Grading(2, 3), Grading(3, 4), Grading(1, 5)}) {
        for (long long m = 0; m <= 10; ++m) {
            CHECK(enumerate_words(g, m) == oracles::words_by_recursion(g, m));
        }
    }
}

TEST_CASE("degrees add under concatenation") {
    Grading g(2, 3);
    Word a = Word::parse("xxy"), b = Word::parse("yx");
    CHECK(a.concat(b).degree(g) == a.degree(g) + b.degree(g));
}

TEST_CASE("packed-length limits are enforced") {
    Word long_word = Word::parse(std::string(30, 'x'));
    CHECK_THROWS_AS(long_word.concat(Word::parse("yy")), std::length_error);
    CHECK_THROWS_AS(enumerate_words(Grading(1, 1), 40), std::length_error);
}
