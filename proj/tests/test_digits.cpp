#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kaprekar/digits.hpp"
#include "oracle.hpp"

using namespace kaprekar;

TEST_CASE("parsing pads, validates, and rejects repdigits") {
    CHECK(DigitNumber::parse("631764", 6).digits() == std::vector<std::uint8_t>{6, 3, 1, 7, 6, 4});
    CHECK(DigitNumber::parse("9", 3).digits() == std::vector<std::uint8_t>{0, 0, 9});
    CHECK(DigitNumber::parse("9", 3).str() == "009");

    CHECK_THROWS_WITH_AS(DigitNumber::parse("1111", 4), doctest::Contains("all digits equal"), Error);
    CHECK_THROWS_AS(DigitNumber::parse("12a4", 4), Error);
    CHECK_THROWS_AS(DigitNumber::parse("12345", 4), Error);
    CHECK(DigitNumber::parse("7", 2).str() == "07");

    try {
        DigitNumber::parse("123456", 4);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::too_wide);
    }
}

TEST_CASE("sorting pairs") {
    auto p = sort_pair(DigitNumber::parse("83246529", 8));
    CHECK(p.descending.str() == "98654322");
    CHECK(p.ascending.str() == "22345689");

    CHECK(sort_pair(DigitNumber::parse("631764", 6)).descending.str() == "766431");
    auto q = sort_pair(DigitNumber::parse("0009", 4));
    CHECK(q.descending.str() == "9000");
    CHECK(q.ascending.str() == "0009");
}

TEST_CASE("single steps") {
    CHECK(kaprekar_step(DigitNumber::parse("83246529", 8)).str() == "76308633");
    CHECK(kaprekar_step(DigitNumber::parse("6174", 4)).str() == "6174");
    CHECK(kaprekar_step(DigitNumber::parse("10", 2)).str() == "09");
}

TEST_CASE("iteration") {
    DigitNumber n = DigitNumber::parse("83246529", 8);
    CHECK(iterate(n, 0) == n);
    CHECK(iterate(n, 2).str() == "84326652");
    CHECK(iterate(DigitNumber::parse("6174", 4), 100).str() == "6174");
    CHECK(iterate(DigitNumber::parse("4687437", 7), 7).str() == "8639532");
}

TEST_CASE("iteration composes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int w = 2 + static_cast<int>(rng() % 9);
        std::vector<std::uint8_t> d(static_cast<std::size_t>(w));
        for (auto& x : d) x = static_cast<std::uint8_t>(rng() % 10);
        if (std::all_of(d.begin(), d.end(), [&](std::uint8_t x) { return x == d[0]; })) continue;
        DigitNumber n = DigitNumber::from_digits(d);
        int r = static_cast<int>(rng() % 8), s = static_cast<int>(rng() % 8);
        CHECK(iterate(n, r + s) == iterate(iterate(n, r), s));
    }
}

TEST_CASE("orbits detect fixed points and cycles") {
    // oracle: every non-repdigit 4-digit orbit lands on 6174
    for (long long v : {3524LL, 12LL, 9985LL}) CHECK(oracle::ref_orbit(v, 4).attractor == 6174);

    Orbit o = orbit(DigitNumber::parse("3524", 4), 20);
    CHECK(o.terminal == OrbitEnd::fixed_point);
    CHECK(o.attractor().str() == "6174");
    for (std::size_t i = 0; i + 1 < o.steps.size(); ++i) CHECK(kaprekar_step(o.steps[i]) == o.steps[i + 1]);

    Orbit o3 = orbit(DigitNumber::parse("100", 3), 20);
    CHECK(o3.terminal == OrbitEnd::fixed_point);
    CHECK(o3.attractor().str() == "495");
    CHECK(oracle::ref_orbit(100, 3).attractor == 495);

    Orbit o2 = orbit(DigitNumber::parse("10", 2), 20);
    CHECK(o2.terminal == OrbitEnd::entered_cycle);
    CHECK(o2.cycle_length == 5);
    CHECK(oracle::ref_orbit(10, 2).cycle_length == 5);

    Orbit trunc = orbit(DigitNumber::parse("10", 2), 2);
    CHECK(trunc.terminal == OrbitEnd::truncated);
}

TEST_CASE("steps agree with the reference implementation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        int w = 2 + static_cast<int>(rng() % 9); // reference uses 64-bit ints
        long long total = 1;
        for (int i = 0; i < w; ++i) total *= 10;
        long long v = static_cast<long long>(rng() % static_cast<unsigned long long>(total));
        if (oracle::repdigit(oracle::pad(v, w))) continue;
        DigitNumber n = DigitNumber::parse(oracle::pad(v, w), w);
        CHECK(std::stoll(kaprekar_step(n).str()) == oracle::ref_step(v, w));
    }
}

TEST_CASE("wide subtraction stays exact beyond 64-bit range") {
    // 24 digits; digit-vector arithmetic must not care
    std::string text = "998877665544332211009912";
    DigitNumber n = DigitNumber::parse(text, 24);
    DigitNumber image = kaprekar_step(n);
    CHECK(image.width() == 24);
    CHECK(image.digit_sum() % 9 == 0);
}
