#include <fstream>
#include <set>
#include <random>
#include <sstream>

#include "doctest.h"
#include "paratopia/latin.hpp"
#include "paratopia/paratopism.hpp"

using namespace paratopia;

TEST_CASE("validation") {
    CHECK_NOTHROW(LatinSquare::checked(1, {1}));
    CHECK_THROWS_AS(LatinSquare::checked(2, {1, 1, 2, 2}), latin_error);
    auto v = LatinSquare::check(2, {1, 1, 2, 2});
    REQUIRE(v.has_value());
    CHECK(v->kind == LatinViolation::Row);
    CHECK(v->index == 1);
    CHECK(v->symbol == 1);
    // column violation: rows valid, columns repeat
    auto v2 = LatinSquare::check(2, {1, 2, 1, 2});
    REQUIRE(v2.has_value());
    CHECK(v2->kind == LatinViolation::Column);
    // out-of-range symbol
    CHECK(LatinSquare::check(2, {1, 2, 2, 3}).has_value());
}

TEST_CASE("validation is stable under row/column/symbol permutation") {
    std::mt19937 rng(99);
    LatinSquare L = cyclic_square(6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> rows(6), cols(6), syms(6);
        for (auto* v : {&rows, &cols, &syms}) {
            std::iota(v->begin(), v->end(), 1);
            std::shuffle(v->begin(), v->end(), rng);
        }
        std::vector<int> cells(36);
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                cells[(rows[i - 1] - 1) * 6 + (cols[j - 1] - 1)] = syms[L.at(i, j) - 1];
        CHECK_FALSE(LatinSquare::check(6, cells).has_value());
    }
}

TEST_CASE("cyclic square") {
    CHECK(cyclic_square(1).cells() == std::vector<int>{1});
    LatinSquare c3 = cyclic_square(3);
    CHECK(c3.cells() == std::vector<int>{1, 2, 3, 2, 3, 1, 3, 1, 2});
    for (int n : {1, 2, 5, 10, 17}) {
        CHECK(cyclic_square(n).at(1, 1) == 1);
        CHECK_FALSE(LatinSquare::check(n, cyclic_square(n).cells()).has_value());
    }
}

TEST_CASE("totally symmetric square") {
    CHECK(totally_symmetric_square(1).cells() == std::vector<int>{1});
    for (int n : {2, 3, 5, 8}) {
        LatinSquare L = totally_symmetric_square(n);
        CHECK_FALSE(LatinSquare::check(n, L.cells()).has_value());
        // all six coordinate permutations of every triple are triples
        std::set<Triple> triples;
        for (const Triple& t : L.triples()) triples.insert(t);
        for (const Triple& t : L.triples()) {
            CHECK(triples.count({t.row, t.sym, t.col}));
            CHECK(triples.count({t.col, t.row, t.sym}));
            CHECK(triples.count({t.col, t.sym, t.row}));
            CHECK(triples.count({t.sym, t.row, t.col}));
            CHECK(triples.count({t.sym, t.col, t.row}));
        }
    }
}

TEST_CASE("direct product") {
    LatinSquare a = cyclic_square(3);
    LatinSquare one = cyclic_square(1);
    CHECK(direct_product(a, one) == a);
    LatinSquare c2 = cyclic_square(2);
    LatinSquare e4 = direct_product(c2, c2);
    CHECK(e4.order() == 4);
    CHECK_FALSE(LatinSquare::check(4, e4.cells()).has_value());
    // elementary abelian table differs from the cyclic one
    CHECK(e4 != cyclic_square(4));
    for (int na = 1; na <= 8; ++na)
        for (int nb = 1; nb <= 8; ++nb) {
            LatinSquare prod = direct_product(cyclic_square(na), cyclic_square(nb));
            CHECK(prod.order() == na * nb);
            CHECK_FALSE(LatinSquare::check(na * nb, prod.cells()).has_value());
        }
}

TEST_CASE("subsquare extraction") {
    LatinSquare c4 = cyclic_square(4);
    auto whole = subsquare_on(c4, {1, 2, 3, 4}, {1, 2, 3, 4});
    REQUIRE(std::holds_alternative<PartialLatinSquare>(whole));
    CHECK(std::get<PartialLatinSquare>(whole).filled_count() == 16);

    auto sub = subsquare_on(c4, {1, 3}, {1, 3});
    REQUIRE(std::holds_alternative<PartialLatinSquare>(sub));
    auto& ps = std::get<PartialLatinSquare>(sub);
    CHECK(ps.at(1, 1) == 1);
    CHECK(ps.at(1, 3) == 3);
    CHECK(ps.at(3, 3) == 1);

    auto bad = subsquare_on(cyclic_square(3), {1, 2}, {1, 2});
    REQUIRE(std::holds_alternative<SubsquareError>(bad));
    CHECK(std::get<SubsquareError>(bad).symbol_count == 3);
}

TEST_CASE("partial squares") {
    PartialLatinSquare p(3);
    CHECK(p.filled_count() == 0);
    p.set(1, 1, 2);
    CHECK(p.has(1, 1));
    CHECK(p.at(1, 1) == 2);
    CHECK_THROWS_AS(p.set(1, 3, 2), latin_error);  // row repeat
    CHECK_THROWS_AS(p.set(3, 1, 2), latin_error);  // column repeat
    p.erase(1, 1);
    CHECK_FALSE(p.has(1, 1));
    CHECK(p.filled_count() == 0);
    CHECK_FALSE(PartialLatinSquare(2).to_latin().has_value());
    CHECK(PartialLatinSquare(cyclic_square(4)).to_latin().has_value());
}

TEST_CASE("file format round trip") {
    LatinSquare L = cyclic_square(5);
    std::ostringstream out;
    L.write(out);
    CHECK(out.str() == "5\n1 2 3 4 5\n2 3 4 5 1\n3 4 5 1 2\n4 5 1 2 3\n5 1 2 3 4\n");
    std::istringstream in(out.str());
    CHECK(LatinSquare::read(in) == L);
}

TEST_CASE("the shipped order-10 (123) golden square is valid") {
    std::ifstream in("data/golden/n10_d123_g3^3.1.ls");
    REQUIRE(in.good());
    LatinSquare L = LatinSquare::read(in);
    CHECK(L.order() == 10);
    Permutation a = canonical_permutation(CycleStructure::parse("9.1"));
    CHECK(is_autoparatopism(Paratopism(a, a, a, S3::r123), L));
}
