#include <random>

#include "doctest.h"
#include "paratopia/paratopism.hpp"

using namespace paratopia;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(std::move(img));
}

Paratopism random_par(int n, std::mt19937& rng) {
    return Paratopism(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng),
                      s3_all()[rng() % 6]);
}

}  // namespace

TEST_CASE("S3 arithmetic") {
    for (S3 d : s3_all()) {
        CHECK(s3_mul(d, s3_inverse(d)) == S3::e);
        CHECK(s3_mul(S3::e, d) == d);
        CHECK(s3_parse(s3_str(d)) == d);
    }
    CHECK(s3_mul(S3::x12, S3::x13) != s3_mul(S3::x13, S3::x12));
    CHECK(s3_cycle_type(S3::e) == 1);
    CHECK(s3_cycle_type(S3::x13) == 2);
    CHECK(s3_cycle_type(S3::r132) == 3);
    CHECK(s3_mul(S3::r123, S3::r123) == S3::r132);
}

TEST_CASE("triple action matches the defining formulas") {
    int n = 5;
    Paratopism id12{Permutation(n), Permutation(n), Permutation(n), S3::x12};
    CHECK(act_triple(id12, {1, 2, 3}) == Triple{2, 1, 3});
    Paratopism id123{Permutation(n), Permutation(n), Permutation(n), S3::r123};
    CHECK(act_triple(id123, {1, 2, 3}) == Triple{3, 1, 2});
    Paratopism ide = Paratopism::identity(n);
    CHECK(act_triple(ide, {1, 2, 3}) == Triple{1, 2, 3});

    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
        int x = 1 + (int)(rng() % n), y = 1 + (int)(rng() % n), z = 1 + (int)(rng() % n);
        Paratopism s12(a, b, c, S3::x12);
        CHECK(act_triple(s12, {x, y, z}) == Triple{b[y], a[x], c[z]});
        Paratopism s123(a, b, c, S3::r123);
        CHECK(act_triple(s123, {x, y, z}) == Triple{c[z], a[x], b[y]});
    }
}

TEST_CASE("square action") {
    LatinSquare L = cyclic_square(5);
    CHECK(act_square(Paratopism::identity(5), L) == L);
    // (e,e,e;(12)) transposes
    LatinSquare T = act_square(Paratopism::identity(5, S3::x12), L);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(T.at(i, j) == L.at(j, i));
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        Paratopism s = random_par(5, rng);
        CHECK(act_square(s, act_square(inverse_par(s), L)) == L);
        CHECK_FALSE(LatinSquare::check(5, act_square(s, L).cells()).has_value());
    }
}

TEST_CASE("group law of compose/inverse/power") {
    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + (int)(rng() % 7);
        Paratopism s1 = random_par(n, rng), s2 = random_par(n, rng);
        LatinSquare L = cyclic_square(n);
        CHECK(act_square(compose_par(s1, s2), L) == act_square(s2, act_square(s1, L)));
        CHECK(compose_par(s1, inverse_par(s1)) == Paratopism::identity(n));
        CHECK(power_par(s1, 3) == compose_par(s1, compose_par(s1, s1)));
        CHECK(power_par(s1, -1) == inverse_par(s1));
    }
}

TEST_CASE("squared and cubed paratopisms match the group identities") {
    std::mt19937 rng(31);
    int n = 6;
    Permutation b = random_perm(n, rng), c = random_perm(n, rng);
    Paratopism s{Permutation(n), b, c, S3::x12};
    Paratopism s2 = power_par(s, 2);
    CHECK(s2.delta == S3::e);
    CHECK(s2.alpha == b);
    CHECK(s2.beta == b);
    CHECK(s2.gamma == c * c);

    Permutation a = random_perm(n, rng);
    Paratopism t(a, b, c, S3::r123);
    Paratopism t3 = power_par(t, 3);
    CHECK(t3.delta == S3::e);
    CHECK(t3.alpha == a * b * c);
    CHECK(t3.beta == b * c * a);
    CHECK(t3.gamma == c * a * b);
}

TEST_CASE("autoparatopism checks") {
    for (int n : {1, 2, 4, 7}) CHECK(is_autoparatopism(Paratopism::identity(n), cyclic_square(n)));
    for (int n : {1, 3, 6}) {
        for (S3 d : s3_all()) CHECK(is_autoparatopism(Paratopism::identity(n, d), totally_symmetric_square(n)));
    }
}

TEST_CASE("conjugacy invariant") {
    int n = 6;
    std::mt19937 rng(41);
    Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    auto inv_e = conjugacy_invariant(Paratopism(a, b, c, S3::e));
    CHECK(inv_e.delta_type == 1);
    CHECK(inv_e.entries.size() == 3);

    auto inv_12 = conjugacy_invariant(Paratopism(a, b, c, S3::x12));
    CHECK(inv_12.delta_type == 2);
    // entries: the fixed coordinate gives cs(c), the 2-cycle gives cs(a*b)
    bool found_prod = false, found_fix = false;
    for (auto& [len, cs] : inv_12.entries) {
        if (len == 2 && cs == (a * b).cycle_structure()) found_prod = true;
        if (len == 1 && cs == c.cycle_structure()) found_fix = true;
    }
    CHECK(found_prod);
    CHECK(found_fix);

    auto inv_123 = conjugacy_invariant(Paratopism(a, b, c, S3::r123));
    CHECK(inv_123.delta_type == 3);
    REQUIRE(inv_123.entries.size() == 1);
    CHECK(inv_123.entries[0].second == (a * b * c).cycle_structure());

    // invariance under random conjugation
    for (int t = 0; t < 100; ++t) {
        Paratopism s = random_par(n, rng), tau = random_par(n, rng);
        auto conj = compose_par(compose_par(inverse_par(tau), s), tau);
        CHECK(conjugacy_invariant(conj) == conjugacy_invariant(s));
    }
}

TEST_CASE("standard form") {
    std::mt19937 rng(53);
    CHECK(standard_form(Paratopism::identity(3, S3::x12)) == Paratopism::identity(3, S3::x12));
    for (int t = 0; t < 100; ++t) {
        int n = 2 + (int)(rng() % 7);
        Paratopism s = random_par(n, rng);
        Paratopism f = standard_form(s);
        CHECK(conjugacy_invariant(f) == conjugacy_invariant(s));
        CHECK(standard_form(f) == f);
        // shape of the output
        if (s3_cycle_type(s.delta) == 2) {
            CHECK(f.delta == S3::x12);
            CHECK(f.alpha.is_identity());
        } else if (s3_cycle_type(s.delta) == 3) {
            CHECK(f.delta == S3::r123);
            CHECK(f.alpha.is_identity());
            CHECK(f.beta.is_identity());
        }
    }
}

TEST_CASE("explicit conjugators") {
    std::mt19937 rng(67);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + (int)(rng() % 4);  // degrees <= 5
        Paratopism s = random_par(n, rng);
        Paratopism f = standard_form(s);
        auto tau = find_conjugator(s, f);
        REQUIRE(tau.has_value());
        CHECK(compose_par(compose_par(inverse_par(*tau), s), *tau) == f);
    }
    // non-conjugate pairs are rejected
    Paratopism p1{Permutation(4), Permutation(4), canonical_permutation(CycleStructure::parse("4")), S3::x12};
    Paratopism p2{Permutation(4), Permutation(4), canonical_permutation(CycleStructure::parse("2^2")), S3::x12};
    CHECK_FALSE(find_conjugator(p1, p2).has_value());
}

TEST_CASE("completion to guaranteed members") {
    std::mt19937 rng(71);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + (int)(rng() % 6);
        Permutation a = random_perm(n, rng), b = random_perm(n, rng);
        Paratopism s12 = complete_to_member_12(a);
        CHECK(s12.alpha == a);
        CHECK(s12.delta == S3::x12);
        CHECK(s12.alpha * s12.beta == s12.gamma);  // alpha*beta is the full cycle
        CHECK(s12.gamma.cycle_structure().str() == std::to_string(n));

        Paratopism s123 = complete_to_member_123(a, b);
        CHECK((s123.alpha * s123.beta) * s123.gamma == Permutation(n));
        // conjugate to the identity-isotopism class
        CHECK(conjugacy_invariant(s123) ==
              conjugacy_invariant(Paratopism::identity(n, S3::r123)));
    }
}

TEST_CASE("paratopism text form") {
    Paratopism s = Paratopism::parse("a=(1 2); b=2 1 3; c=(1 2 3); d=123");
    CHECK(s.degree() == 3);
    CHECK(s.delta == S3::r123);
    CHECK(s.alpha == Permutation::parse("(1 2)", 3));
    CHECK(Paratopism::parse(s.str()) == s);
    CHECK_THROWS(Paratopism::parse("a=(1 2); b=(1 2); d=12"));
    CHECK_THROWS(Paratopism::parse("a=1 2; b=1 2; c=1 2; d=14"));
}
