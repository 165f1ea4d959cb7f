#include <map>
#include <random>

#include "doctest.h"
#include "paratopia/search.hpp"

using namespace paratopia;

TEST_CASE("square enumeration counts") {
    CHECK(all_latin_squares(1).size() == 1);
    CHECK(all_latin_squares(2).size() == 2);
    CHECK(all_latin_squares(3).size() == 12);
    CHECK(all_latin_squares(4).size() == 576);
}

TEST_CASE("identity paratopism search finds any square") {
    SearchResult r = complete_backtrack(Paratopism::identity(5), PartialLatinSquare(5));
    REQUIRE(r.status == SearchStatus::FoundWitness);
    CHECK_FALSE(LatinSquare::check(5, r.witness->cells()).has_value());
}

TEST_CASE("the 5^2 (123) case is a definitive no") {
    Paratopism s{Permutation(10), Permutation(10), canonical_permutation(CycleStructure::parse("5^2")),
                 S3::r123};
    SearchResult r = complete_backtrack(s, PartialLatinSquare(10));
    CHECK(r.status == SearchStatus::NoCompletion);
}

TEST_CASE("3^3 at order 9 has a (123) witness") {
    Paratopism s{Permutation(9), Permutation(9), canonical_permutation(CycleStructure::parse("3^3")),
                 S3::r123};
    SearchResult r = complete_backtrack(s, PartialLatinSquare(9));
    REQUIRE(r.status == SearchStatus::FoundWitness);
    CHECK(is_autoparatopism(s, *r.witness));
}

TEST_CASE("budget exhaustion is reported distinctly") {
    Paratopism s{Permutation(10), Permutation(10), canonical_permutation(CycleStructure::parse("5^2")),
                 S3::r123};
    SearchOptions opts;
    opts.budget = 10;
    SearchResult r = complete_backtrack(s, PartialLatinSquare(10), opts);
    CHECK(r.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("seeded search respects and keeps the seed") {
    // seed a fixed block consistent with the symmetry
    Paratopism s = Paratopism::identity(4, S3::x12);
    PartialLatinSquare seed(4);
    seed.set(1, 1, 2);
    SearchResult r = complete_backtrack(s, seed);
    REQUIRE(r.status == SearchStatus::FoundWitness);
    CHECK(r.witness->at(1, 1) == 2);
    CHECK(is_autoparatopism(s, *r.witness));

    PartialLatinSquare open_seed(4);
    open_seed.set(1, 2, 3);  // (1,2)->(2,1) image missing
    CHECK_THROWS(complete_backtrack(s, open_seed));
}

TEST_CASE("node counts are reproducible") {
    Paratopism s{Permutation(9), Permutation(9), canonical_permutation(CycleStructure::parse("3^3")),
                 S3::r123};
    auto r1 = complete_backtrack(s, PartialLatinSquare(9));
    auto r2 = complete_backtrack(s, PartialLatinSquare(9));
    CHECK(r1.nodes == r2.nodes);
}

TEST_CASE("decide_membership on known cases") {
    auto verdict = [](int n, const char* b, const char* g) {
        Paratopism s{Permutation(n), canonical_permutation(CycleStructure::parse(b)),
                     canonical_permutation(CycleStructure::parse(g)), S3::x12};
        return decide_membership(s);
    };
    auto v1 = verdict(5, "2^2.1", "4.1");
    CHECK(v1.decision == Decision::Member);
    REQUIRE(v1.witness.has_value());
    CHECK(is_autoparatopism(v1.sigma_std, *v1.witness));

    auto v2 = verdict(5, "2^2.1", "2^2.1");
    CHECK(v2.decision == Decision::NonMember);

    Paratopism tot = Paratopism::identity(6, S3::r123);
    CHECK(decide_membership(tot).decision == Decision::Member);
}

TEST_CASE("completed paratopisms are members with verifiable witnesses") {
    std::mt19937 rng(99);
    for (int n : {1, 2, 3, 5, 6}) {
        for (int t = 0; t < 3; ++t) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 1);
            std::shuffle(img.begin(), img.end(), rng);
            Permutation a = Permutation::from_images(img);
            MembershipVerdict v12 = decide_membership(complete_to_member_12(a));
            CHECK(v12.decision == Decision::Member);
            std::shuffle(img.begin(), img.end(), rng);
            Permutation b = Permutation::from_images(img);
            MembershipVerdict v123 = decide_membership(complete_to_member_123(a, b));
            CHECK(v123.decision == Decision::Member);
        }
    }
}

TEST_CASE("membership is a class function and the oracle agrees for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto brute = brute_force_par(n);
        std::map<std::string, bool> table;
        for (const auto& e : brute) table[e.inv.str()] = e.member;
        for (const auto& e : brute) {
            MembershipVerdict v = decide_membership(e.rep);
            INFO("n=", n, " rep=", e.rep.str());
            REQUIRE(v.decision != Decision::Undecided);
            CHECK((v.decision == Decision::Member) == e.member);
            if (v.witness) CHECK(is_autoparatopism(v.sigma_std, *v.witness));
        }
        // normalized delta shapes agree with their (12)/(123) classes
        std::mt19937 rng(5);
        for (const auto& e : brute) {
            Paratopism tau{Permutation(n), Permutation(n), Permutation(n),
                           s3_all()[rng() % 6]};
            Paratopism conj = compose_par(compose_par(inverse_par(tau), e.rep), tau);
            CHECK((decide_membership(conj).decision == Decision::Member) == e.member);
        }
    }
}
