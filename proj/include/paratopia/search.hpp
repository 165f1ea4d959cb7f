#pragma once

#include <iosfwd>
#include <optional>

#include "paratopia/construct.hpp"
#include "paratopia/filters.hpp"
#include "paratopia/latin.hpp"
#include "paratopia/paratopism.hpp"

namespace paratopia {

struct SearchOptions {
    unsigned long long budget = 0;  // node limit; 0 = unlimited (exhaustive)
    std::ostream* trace = nullptr;  // one line per depth event when set
};

enum class SearchStatus { FoundWitness, NoCompletion, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::NoCompletion;
    std::optional<LatinSquare> witness;
    unsigned long long nodes = 0;
};

// Exact backtracking over sigma-orbits of triples: placing a symbol places
// its whole orbit. The seed must be consistent and closed under sigma.
// Exhaustive runs (budget 0) are definitive.
SearchResult complete_backtrack(const Paratopism& sigma, const PartialLatinSquare& seed,
                                const SearchOptions& opts = {});

enum class Decision { Member, NonMember, Undecided };

struct MembershipVerdict {
    Decision decision = Decision::Undecided;
    Paratopism sigma_std;  // the standard form that was decided
    std::optional<LatinSquare> witness;
    unsigned long long nodes = 0;
    std::string method;  // "filter" | "construct" | "search"
    std::string rule;    // exclusion rule when refused by a filter
};

struct DecideOptions {
    unsigned long long budget = 0;
    RuleMask mask;
    bool use_filters = true;
    bool use_construct = true;
};

// standard_form -> filters -> constructions -> backtracking search.
MembershipVerdict decide_membership(const Paratopism& sigma, const DecideOptions& opts = {});

// All Latin squares of order n in row-major lexicographic order (n <= 5 is
// the intended range: 1, 2, 12, 576, 161280 squares).
std::vector<LatinSquare> all_latin_squares(int n);

struct BruteEntry {
    ConjugacyInvariant inv;
    Paratopism rep;
    bool member = false;
};

// Exhaustive Par(n) membership per conjugacy class, by testing every class
// representative against every Latin square of order n. Independent of the
// filter/construct/search pipeline.
std::vector<BruteEntry> brute_force_par(int n);

}  // namespace paratopia
