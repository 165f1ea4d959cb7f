#include "paratopia/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <ostream>

#include "paratopia/orbits.hpp"

namespace paratopia {

namespace {

struct Board {
    int n;
    const Paratopism& sigma;
    std::vector<int> grid;                       // 0 = empty
    std::vector<uint32_t> row_used, col_used;    // symbol bitmasks
    std::vector<uint32_t> allowed;               // static lcm class mask per cell
    std::vector<Triple> trail;
    unsigned long long nodes = 0;
    unsigned long long budget = 0;
    std::ostream* trace = nullptr;
    bool break_root_symmetry = false;  // only valid for an empty seed

    Board(const Paratopism& s, const PartialLatinSquare& seed)
        : n(s.degree()), sigma(s), grid((size_t)n * n, 0), row_used(n + 1, 0), col_used(n + 1, 0) {
        build_allowed();
        break_root_symmetry = seed.filled_count() == 0;
        for (const Triple& t : seed.triples())
            if (!place(t)) throw std::invalid_argument("seed is inconsistent");
    }

    // One symbol per orbit of a centralizer subgroup that fixes the board:
    // symbol permutations commuting with the third component leave every
    // cell in place for the (12) and isotopism shapes; for (123) the same
    // permutation also moves rows and columns, so only generators avoiding
    // the decision cell's line classes are used. Sound for the first
    // decision on an empty board: any witness maps to one hitting a rep.
    uint32_t root_reps(int i, int j) const {
        std::vector<int> parent(n + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](auto&& self, int x) -> int { return parent[x] == x ? x : parent[x] = self(self, parent[x]); };
        auto unite = [&](int a, int b) { parent[find(find, a)] = find(find, b); };
        const Permutation& g = sigma.gamma;
        auto cycles = g.cycles();
        bool moves_cells = sigma.delta == S3::r123;
        auto avoids = [&](const std::vector<int>& cyc) {
            if (!moves_cells) return true;
            for (int p : cyc)
                if (p == i || p == j) return false;
            return true;
        };
        for (size_t k = 0; k < cycles.size(); ++k) {
            if (!avoids(cycles[k])) continue;
            for (size_t t = 1; t < cycles[k].size(); ++t) unite(cycles[k][0], cycles[k][t]);
            for (size_t m = k + 1; m < cycles.size(); ++m)
                if (cycles[m].size() == cycles[k].size() && avoids(cycles[m])) unite(cycles[k][0], cycles[m][0]);
        }
        std::vector<char> least(n + 1, 1);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y < x; ++y)
                if (find(find, x) == find(find, y)) { least[x] = 0; break; }
        uint32_t mask = 0;
        for (int x = 1; x <= n; ++x)
            if (least[x]) mask |= 1u << (x - 1);
        return mask;
    }

    void build_allowed() {
        allowed.assign((size_t)n * n, 0);
        std::vector<int> la(n + 1), lb(n + 1), lc(n + 1);
        bool have = true;
        if (sigma.delta == S3::x12 && sigma.alpha.is_identity()) {
            for (int i = 1; i <= n; ++i) la[i] = lb[i] = sigma.beta.cycle_length_of(i);
            for (int i = 1; i <= n; ++i) lc[i] = sigma.gamma.cycle_length_of(i);
        } else if (sigma.delta == S3::r123 && sigma.alpha.is_identity() && sigma.beta.is_identity()) {
            for (int i = 1; i <= n; ++i) la[i] = lb[i] = lc[i] = sigma.gamma.cycle_length_of(i);
        } else if (sigma.delta == S3::e) {
            for (int i = 1; i <= n; ++i) {
                la[i] = sigma.alpha.cycle_length_of(i);
                lb[i] = sigma.beta.cycle_length_of(i);
                lc[i] = sigma.gamma.cycle_length_of(i);
            }
        } else {
            have = false;
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                uint32_t m = 0;
                for (int s = 1; s <= n; ++s) {
                    bool ok = true;
                    if (have) {
                        if (sigma.delta == S3::x12)
                            ok = lcm_compatible_12(la[i], lb[j], lc[s]);
                        else if (sigma.delta == S3::r123)
                            ok = lcm_compatible_123(la[i], lb[j], lc[s]);
                        else {
                            long long l = lcm2(la[i], lb[j]);
                            ok = lcm2(la[i], lc[s]) == l && lcm2(lb[j], lc[s]) == l;
                        }
                    }
                    if (ok) m |= 1u << (s - 1);
                }
                allowed[(i - 1) * n + (j - 1)] = m;
            }
    }

    int cell(int i, int j) const { return grid[(i - 1) * n + (j - 1)]; }

    bool place(Triple t) {
        int& c = grid[(t.row - 1) * n + (t.col - 1)];
        if (c == t.sym) return true;
        uint32_t bit = 1u << (t.sym - 1);
        if (c != 0 || (row_used[t.row] & bit) || (col_used[t.col] & bit) ||
            !(allowed[(t.row - 1) * n + (t.col - 1)] & bit))
            return false;
        c = t.sym;
        row_used[t.row] |= bit;
        col_used[t.col] |= bit;
        trail.push_back(t);
        return true;
    }

    // closure of the sigma-orbit of t; the caller rolls back via its mark
    bool place_orbit_raw(Triple t) {
        Triple cur = t;
        do {
            if (!place(cur)) return false;
            cur = act_triple(sigma, cur);
        } while (!(cur == t));
        return true;
    }

    // decision placement plus unit propagation: naked singles (a cell with
    // one candidate) and hidden singles (a symbol with one slot left in a
    // row or column) are placed with their whole orbits until fixpoint
    bool place_orbit(Triple t, size_t mark) {
        if (!place_orbit_raw(t) || !propagate()) {
            undo_to(mark);
            return false;
        }
        return true;
    }

    // naked singles to fixpoint; in the same sweep, fail once a cell has no
    // candidate or a missing symbol has no remaining slot in a line
    bool propagate() {
        const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
        std::vector<uint32_t> row_can(n + 1), col_can(n + 1);
        for (;;) {
            bool placed = false;
            std::fill(row_can.begin(), row_can.end(), 0);
            std::fill(col_can.begin(), col_can.end(), 0);
            for (int i = 1; i <= n && !placed; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (grid[(i - 1) * n + (j - 1)]) continue;
                    uint32_t cand = full & allowed[(i - 1) * n + (j - 1)] & ~row_used[i] & ~col_used[j];
                    if (!cand) return false;
                    if ((cand & (cand - 1)) == 0) {
                        if (!place_orbit_raw({i, j, std::countr_zero(cand) + 1})) return false;
                        placed = true;
                        break;
                    }
                    row_can[i] |= cand;
                    col_can[j] |= cand;
                }
            if (placed) continue;
            for (int i = 1; i <= n; ++i) {
                if ((row_can[i] | row_used[i]) != full) return false;
                if ((col_can[i] | col_used[i]) != full) return false;
            }
            return true;
        }
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            Triple t = trail.back();
            trail.pop_back();
            grid[(t.row - 1) * n + (t.col - 1)] = 0;
            row_used[t.row] &= ~(1u << (t.sym - 1));
            col_used[t.col] &= ~(1u << (t.sym - 1));
        }
    }

    uint32_t candidates(int i, int j) const {
        uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
        return full & allowed[(i - 1) * n + (j - 1)] & ~row_used[i] & ~col_used[j];
    }
};

enum class Walk { Found, Dead, Budget };

// static representative order for (12)-shapes: diagonal blocks with short
// orbits first, then other diagonal blocks, then cross blocks
std::vector<std::pair<int, int>> rep_order_12(const Paratopism& sigma) {
    auto dec = cell_orbits_12_general(sigma.alpha, sigma.beta);
    std::vector<int> idx(dec.orbits.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto key = [&](int k) {
        auto [s, t] = dec.block[k];
        auto rep = dec.orbits[k].front();
        int d = sigma.beta.cycle_length_of(rep.second);
        int cls = s == t ? (d % 2 == 1 ? 0 : 1) : 2;
        return std::tuple<int, size_t, std::pair<int, int>>(cls, dec.orbits[k].size(), rep);
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return key(x) < key(y); });
    std::vector<std::pair<int, int>> reps;
    reps.reserve(idx.size());
    for (int k : idx) reps.push_back(dec.orbits[k].front());
    return reps;
}

// orbit-representative search: the most constrained unfilled representative
// is branched first, ties broken by the block-sorted representative order
Walk search_static(Board& b, const std::vector<std::pair<int, int>>& reps, bool root) {
    size_t pick = reps.size();
    int best = 1 << 30;
    for (size_t k = 0; k < reps.size(); ++k) {
        auto [i, j] = reps[k];
        if (b.cell(i, j)) continue;
        int c = std::popcount(b.candidates(i, j));
        if (c < best) {
            best = c;
            pick = k;
            if (c == 0) return Walk::Dead;
        }
    }
    if (pick == reps.size()) return Walk::Found;
    auto [i, j] = reps[pick];
    uint32_t cand = b.candidates(i, j);
    if (root && b.break_root_symmetry) cand &= b.root_reps(i, j);
    while (cand) {
        int s = 32 - std::countl_zero(cand);
        cand &= ~(1u << (s - 1));
        if (b.budget && b.nodes >= b.budget) return Walk::Budget;
        ++b.nodes;
        size_t mark = b.trail.size();
        if (b.place_orbit({i, j, s}, mark)) {
            if (b.trace) *b.trace << "orbit " << pick << " place " << i << ',' << j << '=' << s << '\n';
            Walk w = search_static(b, reps, false);
            if (w != Walk::Dead) return w;  // found, or budget abort
            b.undo_to(mark);
        }
    }
    return Walk::Dead;
}

Walk search_mrv(Board& b, bool root) {
    int bi = 0, bj = 0, best = 1 << 30;
    for (int i = 1; i <= b.n; ++i)
        for (int j = 1; j <= b.n; ++j) {
            if (b.cell(i, j)) continue;
            int c = std::popcount(b.candidates(i, j));
            if (c < best) {
                best = c;
                bi = i;
                bj = j;
                if (c == 0) return Walk::Dead;
            }
        }
    if (bi == 0) return Walk::Found;
    uint32_t cand = b.candidates(bi, bj);
    if (root && b.break_root_symmetry) cand &= b.root_reps(bi, bj);
    // descending symbol order: the trailing (most constrained) classes of a
    // canonical gamma go first, which finds witnesses near-greedily
    while (cand) {
        int s = 32 - std::countl_zero(cand);
        cand &= ~(1u << (s - 1));
        if (b.budget && b.nodes >= b.budget) return Walk::Budget;
        ++b.nodes;
        size_t mark = b.trail.size();
        if (b.place_orbit({bi, bj, s}, mark)) {
            if (b.trace) *b.trace << "cells " << b.trail.size() << " place " << bi << ',' << bj << '=' << s << '\n';
            Walk w = search_mrv(b, false);
            if (w != Walk::Dead) return w;
            b.undo_to(mark);
        }
    }
    return Walk::Dead;
}

}  // namespace

SearchResult complete_backtrack(const Paratopism& sigma, const PartialLatinSquare& seed,
                                const SearchOptions& opts) {
    if (seed.order() != sigma.degree()) throw std::invalid_argument("seed order mismatch");
    if (sigma.degree() > 32) throw std::invalid_argument("search supports degree <= 32");
    // the seed must be closed under sigma
    for (const Triple& t : seed.triples()) {
        Triple img = act_triple(sigma, t);
        if (!seed.has(img.row, img.col) || seed.at(img.row, img.col) != img.sym)
            throw std::invalid_argument("seed is not closed under sigma");
    }
    Board b(sigma, seed);
    b.budget = opts.budget;
    b.trace = opts.trace;
    Walk w;
    if (sigma.delta == S3::x12)
        w = search_static(b, rep_order_12(sigma), true);
    else
        w = search_mrv(b, true);
    SearchResult res;
    res.nodes = b.nodes;
    switch (w) {
        case Walk::Found: {
            res.status = SearchStatus::FoundWitness;
            res.witness = LatinSquare::checked(b.n, b.grid);
            break;
        }
        case Walk::Dead: res.status = SearchStatus::NoCompletion; break;
        case Walk::Budget: res.status = SearchStatus::BudgetExhausted; break;
    }
    return res;
}

MembershipVerdict decide_membership(const Paratopism& sigma, const DecideOptions& opts) {
    MembershipVerdict out;
    out.sigma_std = standard_form(sigma);
    const int n = sigma.degree();

    if (opts.use_filters && out.sigma_std.delta == S3::x12) {
        StandardCase12 c{n, out.sigma_std.beta.cycle_structure(), out.sigma_std.gamma.cycle_structure()};
        FilterReport rep = filters_12(c, opts.mask);
        if (rep.verdict == FilterVerdict::Excluded) {
            out.decision = Decision::NonMember;
            out.method = "filter";
            out.rule = rep.rule;
            return out;
        }
        if (opts.use_construct)
            if (auto w = construct_witness_12(c)) {
                out.decision = Decision::Member;
                out.method = "construct";
                out.witness = w->square;
                return out;
            }
    } else if (opts.use_filters && out.sigma_std.delta == S3::r123) {
        StandardCase123 c{n, out.sigma_std.gamma.cycle_structure()};
        FilterReport rep = filters_123(c, opts.mask);
        if (rep.verdict == FilterVerdict::Excluded) {
            out.decision = Decision::NonMember;
            out.method = "filter";
            out.rule = rep.rule;
            return out;
        }
        if (opts.use_construct)
            if (auto w = construct_witness_123(c)) {
                out.decision = Decision::Member;
                out.method = "construct";
                out.witness = w->square;
                return out;
            }
    }

    SearchOptions sopts;
    sopts.budget = opts.budget;
    // default budget: unlimited up to order 12; one capped pass for larger
    // orders, escalating to an exhaustive run if the cap is ever hit
    if (opts.budget == 0 && n >= 13) sopts.budget = 1000000000ull;
    SearchResult sr = complete_backtrack(out.sigma_std, PartialLatinSquare(n), sopts);
    if (opts.budget == 0 && sr.status == SearchStatus::BudgetExhausted) {
        sopts.budget = 0;
        sr = complete_backtrack(out.sigma_std, PartialLatinSquare(n), sopts);
    }
    out.nodes = sr.nodes;
    out.method = "search";
    switch (sr.status) {
        case SearchStatus::FoundWitness:
            out.decision = Decision::Member;
            out.witness = sr.witness;
            break;
        case SearchStatus::NoCompletion: out.decision = Decision::NonMember; break;
        case SearchStatus::BudgetExhausted: out.decision = Decision::Undecided; break;
    }
    return out;
}

std::vector<LatinSquare> all_latin_squares(int n) {
    std::vector<LatinSquare> out;
    std::vector<int> grid((size_t)n * n, 0);
    std::vector<uint32_t> row_used(n, 0), col_used(n, 0);
    const uint32_t full = (1u << n) - 1;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n * n) {
            out.push_back(LatinSquare::unchecked(n, grid));
            return;
        }
        int i = pos / n, j = pos % n;
        uint32_t cand = full & ~row_used[i] & ~col_used[j];
        while (cand) {
            int s = std::countr_zero(cand) + 1;
            cand &= cand - 1;
            uint32_t bit = 1u << (s - 1);
            grid[pos] = s;
            row_used[i] |= bit;
            col_used[j] |= bit;
            self(self, pos + 1);
            row_used[i] &= ~bit;
            col_used[j] &= ~bit;
            grid[pos] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<BruteEntry> brute_force_par(int n) {
    if (n > 5) throw std::invalid_argument("brute force oracle is for n <= 5");
    auto squares = all_latin_squares(n);
    auto parts = partitions(n);

    std::vector<Paratopism> reps;
    for (size_t x = 0; x < parts.size(); ++x)
        for (size_t y = x; y < parts.size(); ++y)
            for (size_t z = y; z < parts.size(); ++z)
                reps.emplace_back(canonical_permutation(parts[x]), canonical_permutation(parts[y]),
                                  canonical_permutation(parts[z]), S3::e);
    for (const auto& b : parts)
        for (const auto& c : parts)
            reps.emplace_back(Permutation(n), canonical_permutation(b), canonical_permutation(c), S3::x12);
    for (const auto& c : parts)
        reps.emplace_back(Permutation(n), Permutation(n), canonical_permutation(c), S3::r123);

    std::vector<BruteEntry> out;
    out.reserve(reps.size());
    for (const auto& rep : reps) {
        BruteEntry e{conjugacy_invariant(rep), rep, false};
        for (const auto& L : squares)
            if (is_autoparatopism(rep, L)) {
                e.member = true;
                break;
            }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace paratopia
