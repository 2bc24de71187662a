#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kaprekar/symbolic.hpp"
#include "oracle.hpp"

using namespace kaprekar;

namespace {
ParamVector pv(std::initializer_list<int> a, int w) { return ParamVector(std::vector<int>(a), w); }
} // namespace

TEST_CASE("symbolic image slots") {
    auto f1e = symbolic_image(FamilyTag{FamilyKind::f1, 0, 4});
    REQUIRE(f1e.size() == 4);
    CHECK(f1e[0].str() == "a");
    CHECK(f1e[1].str() == "b-1");
    CHECK(f1e[2].str() == "-b+9");
    CHECK(f1e[3].str() == "-a+10");

    auto f1o = symbolic_image(FamilyTag{FamilyKind::f1, 0, 7});
    REQUIRE(f1o.size() == 7);
    CHECK(f1o[3].str() == "9");

    auto f3 = symbolic_image(FamilyTag{FamilyKind::f3, 0, 6});
    CHECK(f3[0].str() == "a-1");
    CHECK(f3[4].str() == "9");
    CHECK(f3[5].str() == "-a+10");
}

TEST_CASE("derivation counts") {
    CHECK(derive_k_functions(2).fns.size() == 2);
    CHECK(derive_k_functions(3).fns.size() == 2);
    Catalog c6 = derive_k_functions(6);
    CHECK(c6.family_counts.at("f3") == 2);
    CHECK(c6.family_counts.at("f2r3") == 11);
    Catalog c7 = derive_k_functions(7);
    CHECK(c7.family_counts.at("f3") == 2);
    CHECK(c7.family_counts.at("f2r3") == 11);
    // the three-parameter families of the even and odd widths coincide
    CHECK(c6.family_counts.at("f1") == c7.family_counts.at("f1"));
}

TEST_CASE("the two single-parameter functions at width 6") {
    Catalog cat = derive_k_functions(6);
    const SymbolicKFn* k31 = cat.by_alias("K31");
    const SymbolicKFn* k32 = cat.by_alias("K32");
    REQUIRE(k31);
    REQUIRE(k32);
    CHECK(k31->feasible.front().alpha(1) == 9);
    CHECK(k31->feasible.back().alpha(1) == 6);
    CHECK(k32->feasible.front().alpha(1) == 5);
    CHECK(k32->feasible.back().alpha(1) == 1);
    CHECK(eval_k(*k31, pv({7, 0, 0}, 6)).str() == "630");
    CHECK(eval_k(*k32, pv({3, 0, 0}, 6)).str() == "720");
}

TEST_CASE("evaluation matches the published examples") {
    Catalog c6 = derive_k_functions(6);
    CHECK(eval_k(*c6.by_alias("K1"), pv({8, 7, 7}, 6)).str() == "654");
    CHECK(eval_k(*c6.by_alias("K2"), pv({5, 4, 1}, 6)).str() == "810");
    Catalog c7 = derive_k_functions(7);
    CHECK(eval_k(*c7.by_alias("K1"), pv({8, 6, 5}, 7)).str() == "752");
    CHECK(eval_k(*c7.by_alias("K2"), pv({4, 3, 2}, 7)).str() == "842");
}

TEST_CASE("out-of-domain evaluation reports the failed constraint") {
    Catalog cat = derive_k_functions(6);
    const SymbolicKFn* k1 = cat.by_alias("K1");
    REQUIRE(k1);
    CHECK_THROWS_WITH_AS(eval_k(*k1, pv({5, 4, 1}, 6)), doctest::Contains("does not apply"), Error);
    try {
        eval_k(*k1, pv({5, 4, 1}, 6));
    } catch (const Error& e) {
        CHECK(e.code() == errc::out_of_domain);
    }
}

TEST_CASE("total step against the number oracle") {
    CHECK(total_k(pv({8, 6, 1}, 6)).str() == "863");
    CHECK(total_k(pv({6, 4, 3}, 6)).str() == "421");
    CHECK(total_k(pv({6, 3, 2}, 6)).str() == "632");
    for (int w : {4, 5, 6}) {
        for (const ParamVector& alpha : enumerate_classes(w)) {
            // a representative of the class: its parameters followed by zeros
            std::string digits;
            for (int a : alpha.alphas()) digits += static_cast<char>('0' + a);
            digits.resize(static_cast<std::size_t>(w), '0');
            long long member = std::stoll(digits);
            REQUIRE(oracle::ref_params(member, w) == alpha.alphas());
            CHECK(total_k(alpha).alphas() == oracle::ref_params(oracle::ref_step(member, w), w));
        }
    }
}

TEST_CASE("fixed points and their witnesses") {
    CHECK(fixed_params(2).empty());
    auto f3 = solve_fixed_points(3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].n_e.str() == "495");
    CHECK_FALSE(f3[0].witness_fn.empty());

    auto f6 = solve_fixed_points(6);
    REQUIRE(f6.size() == 2);
    CHECK(f6[0].alpha_e.str() == "632");
    CHECK(f6[0].witness_fn == "f1-p415623"); // the permutation the constant family derives from
    CHECK(f6[1].alpha_e.str() == "550");
    CHECK(f6[1].witness_fn == "f2r3-p341625");

    // brute force sanity far beyond the catalog widths
    for (int w = 9; w <= 14; ++w)
        for (const ParamVector& alpha : fixed_params(w)) {
            DigitNumber n = apply_f(alpha);
            CHECK(kaprekar_step(n) == n);
        }
}

TEST_CASE("constant families") {
    CHECK(verify_constant_family(ConstantFamily::even_63_32, 2).n_e.str() == "6174");
    CHECK(verify_constant_family(ConstantFamily::even_63_32, 4).n_e.str() == "63317664");
    CHECK(verify_constant_family(ConstantFamily::odd_864_32, 4).n_e.str() == "864197532");
    CHECK(verify_constant_family(ConstantFamily::odd_864_32, 7).n_e.str() == "864333197666532");
    CHECK_THROWS_AS(verify_constant_family(ConstantFamily::odd_864_32, 3), Error);
    // membership in the fixed-point scan
    auto f14 = fixed_params(14);
    CHECK(std::find_if(f14.begin(), f14.end(),
                       [](const ParamVector& a) { return a.str() == "6333332"; }) != f14.end());
}

TEST_CASE("composition along the width-6 cycle") {
    Catalog cat = derive_k_functions(6);
    // the cycle steps 861>863>643>421>852>751>841>861 use these functions
    std::vector<const SymbolicKFn*> path;
    for (const char* alias : {"K4", "K7", "K3", "K2", "K4", "K6", "K5"}) path.push_back(cat.by_alias(alias));
    for (const SymbolicKFn* fn : path) REQUIRE(fn);

    ParamVector start = pv({8, 6, 1}, 6);
    ParamVector cur = start;
    for (const SymbolicKFn* fn : path) cur = eval_k(*fn, cur);
    CHECK(cur == start);

    auto composite = compose(path);
    std::vector<int> out;
    for (const auto& e : composite) out.push_back(static_cast<int>(e.eval(start)));
    CHECK(ParamVector(out, 6) == start);

    // single-element path composes to the function itself
    auto single = compose({path[0]});
    CHECK(single == path[0]->output);

    // stepwise equality at every cycle member, for every rotation
    std::vector<ParamVector> members{pv({8, 6, 1}, 6), pv({8, 6, 3}, 6), pv({6, 4, 3}, 6), pv({4, 2, 1}, 6),
                                     pv({8, 5, 2}, 6), pv({7, 5, 1}, 6), pv({8, 4, 1}, 6)};
    for (int rot = 0; rot < 7; ++rot) {
        std::vector<const SymbolicKFn*> rotated;
        for (int i = 0; i < 7; ++i) rotated.push_back(path[static_cast<std::size_t>((rot + i) % 7)]);
        auto comp = compose(rotated);
        ParamVector m = members[static_cast<std::size_t>(rot)];
        std::vector<int> got;
        for (const auto& e : comp) got.push_back(static_cast<int>(e.eval(m)));
        CHECK(ParamVector(got, 6) == m);
    }
}

TEST_CASE("derived domains never violate the structural ordering") {
    for (int w : {4, 5, 6, 7}) {
        Catalog cat = derive_k_functions(w);
        for (const SymbolicKFn& fn : cat.fns)
            for (const ParamVector& alpha : fn.feasible) {
                CHECK(alpha.alpha(1) >= 1);
                for (int s = 1; s < alpha.h(); ++s) CHECK(alpha.alpha(s) >= alpha.alpha(s + 1));
            }
    }
}

TEST_CASE("no single-parameter function fixes a point") {
    for (int w : {4, 6, 8}) {
        Catalog cat = derive_k_functions(w);
        for (const SymbolicKFn& fn : cat.fns) {
            if (fn.family.kind != FamilyKind::f3) continue;
            for (const ParamVector& alpha : fn.feasible) CHECK(eval_k(fn, alpha) != alpha);
        }
    }
}

TEST_CASE("catalog export is well-formed") {
    Catalog cat = derive_k_functions(4);
    std::string json = export_catalog_json(cat);
    CHECK(json.find("\"width\": 4") != std::string::npos);
    CHECK(json.find("\"entries\"") != std::string::npos);
    CHECK(json.find("K3") != std::string::npos);
}
