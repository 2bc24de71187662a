#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kaprekar/params.hpp"
#include "oracle.hpp"

using namespace kaprekar;

namespace {
ParamVector pv(std::initializer_list<int> a, int w) { return ParamVector(std::vector<int>(a), w); }
} // namespace

TEST_CASE("parameter extraction") {
    CHECK(params(DigitNumber::parse("83246529", 8)).str() == "7631");
    CHECK(params(DigitNumber::parse("17487561", 8)).str() == "7631");
    CHECK(params(DigitNumber::parse("631764", 6)).str() == "632");
    CHECK(params(DigitNumber::parse("34326714825", 11)).str() == "75421");
}

TEST_CASE("parameter tuples enforce the ordering constraint") {
    CHECK_THROWS_AS(pv({0, 0, 0}, 6), Error);
    CHECK_THROWS_AS(pv({3, 5, 1}, 6), Error);
    CHECK_THROWS_AS(pv({10, 5, 1}, 6), Error);
    CHECK_THROWS_AS(pv({5, 1}, 6), Error); // wrong arity for the width
    CHECK(pv({5, 1}, 4).h() == 2);
    CHECK(pv({5, 1}, 5).h() == 2); // odd width, same parameter count
}

TEST_CASE("family classification") {
    CHECK(classify(pv({6, 3, 2}, 6)) == FamilyTag{FamilyKind::f1, 0, 6});
    CHECK(classify(pv({5, 5, 0}, 6)) == FamilyTag{FamilyKind::f2, 3, 6});
    CHECK(classify(pv({9, 0, 0}, 6)) == FamilyTag{FamilyKind::f3, 0, 6});
    CHECK(classify(pv({7, 5, 4, 2, 0}, 10)) == FamilyTag{FamilyKind::f2, 5, 10});
    CHECK(classify(pv({9}, 2)) == FamilyTag{FamilyKind::f1, 0, 2});
}

TEST_CASE("the image map") {
    CHECK(apply_f(pv({6, 3, 2}, 6)).str() == "631764");
    CHECK(apply_f(pv({7, 5, 4, 2, 1}, 11)).str() == "75420987543");
    CHECK(apply_f(pv({5, 5, 0}, 6)).str() == "549945");
    CHECK(apply_f(pv({9, 0, 0}, 6)).str() == "899991");
    CHECK(apply_f(pv({6, 2}, 4)).str() == "6174");
    CHECK(apply_f(pv({5}, 3)).str() == "495");
}

TEST_CASE("image-shape membership") {
    CHECK(check_bw(DigitNumber::parse("631764", 6), classify(pv({6, 3, 2}, 6))).satisfied);
    CHECK(check_bw(DigitNumber::parse("549945", 6), classify(pv({5, 5, 0}, 6))).satisfied);

    auto bad = check_bw(DigitNumber::parse("123456", 6), classify(pv({6, 3, 2}, 6)));
    CHECK_FALSE(bad.satisfied);
    CHECK(bad.failed_condition == "sum9");

    auto wrong_shape = check_bw(DigitNumber::parse("549945", 6), classify(pv({6, 3, 2}, 6)));
    CHECK_FALSE(wrong_shape.satisfied);

    // odd-width images carry the forced central 9
    DigitNumber odd = apply_f(pv({8, 6, 5}, 7));
    CHECK(odd.digit(3) == 9);
    CHECK(check_bw(odd, classify(pv({8, 6, 5}, 7))).satisfied);
}

TEST_CASE("class enumeration") {
    CHECK(enumerate_classes(6).size() == 219);
    CHECK(enumerate_classes(7).size() == 219);
    CHECK(enumerate_classes(4).size() == 54);

    // independent count: non-increasing pairs over 0..9 with a leading nonzero
    int count = 0;
    for (int a = 1; a <= 9; ++a)
        for (int b = 0; b <= a; ++b) ++count;
    CHECK(static_cast<int>(enumerate_classes(4).size()) == count);

    // descending lexicographic and duplicate-free
    auto cs = enumerate_classes(5);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) CHECK(cs[i + 1] < cs[i]);
    CHECK(cs.front().str() == "99");
    CHECK(cs.back().str() == "10");

    // even and odd widths with the same parameter count enumerate identically
    for (int h = 1; h <= 6; ++h)
        CHECK(enumerate_classes(2 * h).size() == enumerate_classes(2 * h + 1).size());
}

TEST_CASE("every image passes its own shape check and matches the step") {
    for (int w = 2; w <= 14; ++w)
        for (const ParamVector& alpha : enumerate_classes(w)) {
            DigitNumber image = apply_f(alpha);
            CHECK(check_bw(image, classify(alpha)).satisfied);
            CHECK(params(image).width() == w);
        }
    // exhaustive at width 5: f(p(n)) == K(n) against the reference step
    for (long long v = 0; v < 100000; ++v) {
        if (oracle::repdigit(oracle::pad(v, 5))) continue;
        DigitNumber n = DigitNumber::parse(oracle::pad(v, 5), 5);
        CHECK(std::stoll(apply_f(params(n)).str()) == oracle::ref_step(v, 5));
    }
}

TEST_CASE("parameters are non-increasing with a positive head") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 2000; ++trial) {
        int w = 2 + static_cast<int>(rng() % 13);
        std::vector<std::uint8_t> d(static_cast<std::size_t>(w));
        for (auto& x : d) x = static_cast<std::uint8_t>(rng() % 10);
        if (std::all_of(d.begin(), d.end(), [&](std::uint8_t x) { return x == d[0]; })) continue;
        ParamVector p = params(DigitNumber::from_digits(d)); // the constructor enforces the invariant
        CHECK(p.alpha(1) >= 1);
    }
}
