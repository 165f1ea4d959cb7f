#include "paratopia/construct.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <map>
#include <numeric>
#include <sstream>

namespace paratopia {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Witness verified(Paratopism sigma, LatinSquare square) {
    if (auto v = LatinSquare::check(square.order(), square.cells()))
        throw contour_error("construction produced a non-Latin square: " + v->str());
    if (!is_autoparatopism(sigma, square))
        throw contour_error("construction does not admit the claimed paratopism");
    return {std::move(sigma), std::move(square)};
}

}  // namespace

LatinSquare close_under(const Paratopism& sigma, const std::vector<Triple>& seeds) {
    const int n = sigma.degree();
    std::vector<int> grid((size_t)n * n, 0);
    std::vector<uint32_t> row_used(n + 1, 0), col_used(n + 1, 0);
    auto place = [&](Triple t) {
        int& cell = grid[(t.row - 1) * n + (t.col - 1)];
        if (cell == t.sym) return true;
        if (cell != 0) throw contour_error("closure clash: cell assigned two symbols");
        uint32_t bit = 1u << (t.sym - 1);
        if (row_used[t.row] & bit) throw contour_error("closure clash: symbol repeat in a row");
        if (col_used[t.col] & bit) throw contour_error("closure clash: symbol repeat in a column");
        cell = t.sym;
        row_used[t.row] |= bit;
        col_used[t.col] |= bit;
        return false;
    };
    for (Triple seed : seeds) {
        Triple t = seed;
        do {
            place(t);
            t = act_triple(sigma, t);
        } while (!(t == seed));
    }
    for (int v : grid)
        if (v == 0) throw contour_error("closure incomplete: unfilled cells remain");
    return LatinSquare::unchecked(n, std::move(grid));
}

LatinSquare expand_contour(const Contour& c) {
    require(c.sigma.delta == S3::x12, "contours are defined for (12)-shape paratopisms");
    auto dec = cell_orbits_12_general(c.sigma.alpha, c.sigma.beta);
    std::vector<int> hits(dec.orbits.size(), 0);
    for (const Triple& t : c.entries.triples()) ++hits[dec.orbit_of(t.row, t.col)];
    for (size_t k = 0; k < hits.size(); ++k) {
        if (hits[k] == 0) throw contour_error("contour misses a cell orbit");
        if (hits[k] > 1) throw contour_error("contour has two entries in one cell orbit");
    }
    LatinSquare L = close_under(c.sigma, c.entries.triples());
    if (auto v = LatinSquare::check(L.order(), L.cells())) throw contour_error("contour expansion not Latin: " + v->str());
    if (!is_autoparatopism(c.sigma, L)) throw contour_error("contour expansion lost the paratopism");
    return L;
}

Witness to_standard_witness(const Witness& w) {
    Paratopism std_form = standard_form(w.sigma);
    if (std_form == w.sigma) return w;
    auto tau = find_conjugator(w.sigma, std_form);
    if (!tau) throw std::logic_error("witness paratopism not conjugate to its standard form");
    return verified(std_form, act_square(*tau, w.square));
}

// ---------------------------------------------------------------------------
// symbol-pair surgery on the cyclic square
// ---------------------------------------------------------------------------

namespace {

struct PairCycles {
    // cells carrying symbol s or t, partitioned into symbol cycles
    std::vector<std::vector<std::pair<int, int>>> cycles;
};

PairCycles symbol_cycles(const std::vector<int>& grid, int n, int s, int t) {
    // each row and column holds exactly one s-cell and one t-cell
    std::vector<std::array<int, 2>> row_cells(n + 1, {0, 0}), col_cells(n + 1, {0, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = grid[(i - 1) * n + (j - 1)];
            if (v != s && v != t) continue;
            (row_cells[i][0] ? row_cells[i][1] : row_cells[i][0]) = j;
            (col_cells[j][0] ? col_cells[j][1] : col_cells[j][0]) = i;
        }
    auto row_mate = [&](int i, int j) { return row_cells[i][0] == j ? row_cells[i][1] : row_cells[i][0]; };
    auto col_mate = [&](int i, int j) { return col_cells[j][0] == i ? col_cells[j][1] : col_cells[j][0]; };
    PairCycles out;
    std::set<std::pair<int, int>> seen;
    for (int i = 1; i <= n; ++i)
        for (int j : row_cells[i]) {
            if (!j || seen.count({i, j})) continue;
            std::vector<std::pair<int, int>> cyc;
            int ci = i, cj = j;
            bool horizontal = true;
            do {
                cyc.emplace_back(ci, cj);
                seen.insert({ci, cj});
                if (horizontal)
                    cj = row_mate(ci, cj);
                else
                    ci = col_mate(ci, cj);
                horizontal = !horizontal;
            } while (!(ci == i && cj == j));
            out.cycles.push_back(std::move(cyc));
        }
    return out;
}

// section: pivot to next pivot, first step horizontal
std::vector<std::pair<int, int>> section_from(const std::vector<int>& grid, int n, int s, int t, int pr,
                                              int pc) {
    std::vector<std::array<int, 2>> row_cells(n + 1, {0, 0}), col_cells(n + 1, {0, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = grid[(i - 1) * n + (j - 1)];
            if (v != s && v != t) continue;
            (row_cells[i][0] ? row_cells[i][1] : row_cells[i][0]) = j;
            (col_cells[j][0] ? col_cells[j][1] : col_cells[j][0]) = i;
        }
    std::vector<std::pair<int, int>> cells = {{pr, pc}};
    int ci = pr, cj = pc;
    bool horizontal = true;
    while (true) {
        if (horizontal)
            cj = row_cells[ci][0] == cj ? row_cells[ci][1] : row_cells[ci][0];
        else
            ci = col_cells[cj][0] == ci ? col_cells[cj][1] : col_cells[cj][0];
        horizontal = !horizontal;
        cells.emplace_back(ci, cj);
        if (ci == cj) break;  // second pivot reached
    }
    return cells;
}

}  // namespace

Witness build_pairing_square(int r, int f) {
    require(r >= 0 && f >= 1, "pairing square needs r >= 0 and f >= 1");
    const int n = 2 * r + f;
    std::vector<int> grid = cyclic_square(n).cells();
    auto at = [&](int i, int j) -> int& { return grid[(i - 1) * n + (j - 1)]; };
    auto switch_cells = [&](const std::vector<std::pair<int, int>>& cells, int s, int t) {
        for (auto [i, j] : cells) at(i, j) = at(i, j) == s ? t : s;
    };

    for (int a = 1; a <= r; ++a) {
        const int s = a, t = n - a;
        PairCycles pc = symbol_cycles(grid, n, s, t);
        std::vector<std::vector<std::pair<int, int>>> nonpivot;
        for (auto& cyc : pc.cycles) {
            bool pivot = std::any_of(cyc.begin(), cyc.end(), [](auto c) { return c.first == c.second; });
            if (!pivot) nonpivot.push_back(cyc);
        }
        // non-pivot cycles pair up under transposition; switch the cycle of
        // each pair that contains the lexicographically least cell
        {
            std::vector<char> used(nonpivot.size(), 0);
            auto in_cycle = [](const std::vector<std::pair<int, int>>& cyc, std::pair<int, int> cell) {
                return std::find(cyc.begin(), cyc.end(), cell) != cyc.end();
            };
            for (size_t x = 0; x < nonpivot.size(); ++x) {
                if (used[x]) continue;
                auto least = *std::min_element(nonpivot[x].begin(), nonpivot[x].end());
                std::pair<int, int> tleast = {least.second, least.first};
                size_t partner = x;
                for (size_t y = 0; y < nonpivot.size(); ++y)
                    if (!used[y] && y != x && in_cycle(nonpivot[y], tleast)) partner = y;
                used[x] = used[partner] = 1;
                auto leastx = *std::min_element(nonpivot[x].begin(), nonpivot[x].end());
                auto leasty = *std::min_element(nonpivot[partner].begin(), nonpivot[partner].end());
                switch_cells(leastx < leasty ? nonpivot[x] : nonpivot[partner], s, t);
            }
        }
        if (n % 2 == 1) {
            // one pivot holds a, the other n-a; switch the section from the a-pivot
            int ia = 0;
            for (int i = 1; i <= n; ++i)
                if (at(i, i) == s) ia = i;
            auto sec = section_from(grid, n, s, t, ia, ia);
            switch_cells(sec, s, t);
            at(n + 1 - ia, ia) = s;
            at(ia, n + 1 - ia) = t;
            at(ia, ia) = n;
            at(n + 1 - ia, n + 1 - ia) = n;
        } else if (a % 2 == 1) {
            int p1 = (a + 1) / 2, p2 = n - (a - 1) / 2;
            auto sec1 = section_from(grid, n, s, t, p1, p1);
            auto sec2 = section_from(grid, n, s, t, p2, p2);
            switch_cells(sec1, s, t);
            switch_cells(sec2, s, t);
            at(p1, n + 1 - p1) = t;
            at(n + 1 - p1, p1) = s;
            if (n % 4 == 0) {
                at((n + a + 1) / 2, (n - a + 1) / 2) = s;
                at((n - a + 1) / 2, (n + a + 1) / 2) = t;
            } else {
                at((n + a + 1) / 2, (n - a + 1) / 2) = t;
                at((n - a + 1) / 2, (n + a + 1) / 2) = s;
            }
            for (auto& sec : {sec1, sec2})
                for (auto [i, j] : sec)
                    if (i == j) at(i, j) = n;
        }
        // even a with even n: no pivots, nothing further
    }

    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int a = 1; a <= r; ++a) {
        img[a - 1] = n - a;
        img[n - a - 1] = a;
    }
    Paratopism sigma{Permutation(n), Permutation(n), Permutation::from_images(std::move(img)), S3::x12};
    return verified(std::move(sigma), LatinSquare::unchecked(n, std::move(grid)));
}

// ---------------------------------------------------------------------------
// contour builders
// ---------------------------------------------------------------------------

namespace {

Permutation consecutive_cycles(int n, const std::vector<int>& lengths) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : lengths) {
        std::vector<int> cyc(len);
        std::iota(cyc.begin(), cyc.end(), next);
        next += len;
        cycles.push_back(std::move(cyc));
    }
    require(next == n + 1, "cycle lengths must sum to n");
    return Permutation::from_cycles(n, cycles);
}

// the symmetric subquasigroup placed on the trailing f fixed points
void add_fixed_block(std::vector<Triple>& seeds, int n, int f) {
    for (int i = 1; i <= f; ++i)
        for (int j = 1; j <= f; ++j) seeds.push_back({n - f + i, n - f + j, n - f + (i + j - 2) % f + 1});
}

}  // namespace

Witness build_single_cycle_12(int n, const CycleStructure& gamma_cs) {
    require(gamma_cs.degree() == n, "gamma structure must have degree n");
    int odd = 0;
    for (const auto& p : gamma_cs.parts()) {
        require((2 * n) % p.length == 0, "every gamma cycle length must divide 2n");
        if (p.length % 2 == 1) odd += p.multiplicity;
    }
    require(odd <= 1, "at most one gamma cycle of odd length");

    std::vector<int> lengths = gamma_cs.expanded();
    if (n % 2 == 1) {
        auto it = std::find_if(lengths.begin(), lengths.end(), [](int l) { return l % 2 == 1; });
        std::rotate(lengths.begin(), it, it + 1);  // odd length first
    }
    Permutation gamma = consecutive_cycles(n, lengths);
    Permutation beta = consecutive_cycles(n, {n});
    Paratopism sigma{Permutation(n), beta, gamma, S3::x12};

    const int h = (n + 1) / 2 + 1;  // ceil(n/2) + 1
    std::vector<Triple> seeds;
    int e = 0, lead = 1;
    for (int len : lengths) {
        int e_next = e + (len + 1) / 2;
        for (int i = e + 1; i <= e_next; ++i) seeds.push_back({i, h - i, lead});
        e = e_next;
        lead += len;
    }
    return verified(sigma, close_under(sigma, seeds));
}

Witness build_aaa_one_cycle_12(int d, int f) {
    require(d >= 4 && d % 2 == 0, "needs an even cycle length d >= 4");
    if (d % 4 == 0)
        require(f >= 0 && f <= d / 2, "d = 0 mod 4 needs 0 <= f <= d/2");
    else
        require(f >= 1 && f <= d / 2 + 1, "d = 2 mod 4 needs 1 <= f <= d/2+1");
    const int n = d + f;
    Permutation a = consecutive_cycles(n, [&] {
        std::vector<int> ls = {d};
        ls.insert(ls.end(), f, 1);
        return ls;
    }());
    Paratopism sigma(a, a, a, S3::x12);
    auto inf = [&](int k) { return d + k; };  // k-th fixed symbol
    std::vector<Triple> seeds;
    const int t1 = 1;

    if (d % 4 == 0) {
        seeds.push_back({d - 1, d, t1});
        for (int i = 1; i <= d / 2 - f; ++i) seeds.push_back({i, d - i, t1});
        for (int i = 1; i <= f; ++i) seeds.push_back({d / 2 - f + i, d / 2 + f - i, inf(i)});
        for (int i = 1; i <= f; ++i) {
            seeds.push_back({d / 2 - f + i, inf(i), t1});
            seeds.push_back({d + i, d / 2 + f - i, t1});
        }
        for (int i = 1; i <= d / 4 - 1; ++i) seeds.push_back({d / 2 + 2 * i - 1, d / 2 - 2 * i, t1});
        for (int i = 1; i <= d / 4; ++i) seeds.push_back({d / 2 + 2 * i, d / 2 + 1 - 2 * i, t1});
    } else {
        const int q = (d - 2) / 4;
        seeds.push_back({q + 1, d - q, inf(1)});
        seeds.push_back({d - q, q + 1, inf(1)});
        seeds.push_back({d + 1, q + 1, t1});
        seeds.push_back({q + 1, d + 1, t1});
        for (int i = 1; i <= q; ++i) {
            seeds.push_back({i, d + 1 - i, t1});
            seeds.push_back({d + 1 - i, i, t1});
        }
        for (int i = 2; i <= f; ++i) {
            seeds.push_back({q + i, d + i, t1});
            seeds.push_back({d + i, d - q + 2 - i, t1});
            seeds.push_back({q + i, d - q + 2 - i, inf(i)});
        }
        for (int i = f + 1; i <= d / 2 + 1; ++i) seeds.push_back({q + i, d - q + 2 - i, t1});
    }
    add_fixed_block(seeds, n, f);
    return verified(sigma, close_under(sigma, seeds));
}

Witness build_equal_double_12(int d, int f) {
    require(d > 1, "needs d > 1");
    if (d % 2 == 0) {
        require(f == 0, "even d needs f = 0");
        Witness core = build_single_cycle_12(d, CycleStructure({{d, 1}}));
        return lift_direct_product(core, 2);
    }
    require(f >= 0 && f <= d + 1, "odd d needs f <= d+1");
    const int n = 2 * d + f;
    Permutation b = consecutive_cycles(n, [&] {
        std::vector<int> ls = {d, d};
        ls.insert(ls.end(), f, 1);
        return ls;
    }());
    Paratopism sigma{Permutation(n), b, b, S3::x12};

    const int t1 = 1, t2 = d + 1;
    const int h = (d + 1) / 2;
    const bool extended = (f == d + 1);
    const int fe = extended ? d : f;  // lay out the f = d contour, then vary
    const int g = fe / 2;
    const int col_n = extended ? 3 * d : n;
    auto inf = [&](int k) { return 2 * d + k; };

    std::map<std::pair<int, int>, int> entry;
    auto put = [&](int i, int j, int sym) { entry[{i, j}] = sym; };

    for (int i = 1; i <= h; ++i) put(i, h + 1 - i, t1);
    for (int i = 1; i <= g; ++i) {
        put(i + 1, 2 * d + i, t2);
        put(d + 1 - i, 2 * d + g + i, t2);
        put(d + 1 + i, d + h - i, t2);
        put(d + 1 + i, 2 * d + i, t1);
        put(2 * d + 1 - i, 2 * d + g + i, t1);
        put(i + 1, d + h - i, inf(i));
        put(d + 1 - i, d + h + i, inf(i + g));
    }
    for (int i = g + 2; i <= h; ++i) {
        put(i, d + h + 1 - i, t2);
        put(d + 2 - i, d + h - 1 + i, t2);
        put(d + i, d + h + 1 - i, t1);
    }
    if (fe % 2 == 1) {
        put(1, d + h, inf(fe));
        put(d + 1, d + h, t2);
        put(1, col_n, t2);
        put(d + 1, col_n, t1);
    } else if (fe > 0) {
        put(1, d + h, t2);
        put(d + 1, d + h, t1);
    } else {
        put(1, d + h, t2);
        put(d + 1, d + h, t1);
    }
    if (extended) {
        put(1, h, inf(d + 1));
        put(d + 1, d + h, inf(d + 1));
        put(1, n, t1);
        put(d + 1, n, t2);
    }

    std::vector<Triple> seeds;
    for (auto& [cell, sym] : entry) seeds.push_back({cell.first, cell.second, sym});
    add_fixed_block(seeds, n, f);
    return verified(sigma, close_under(sigma, seeds));
}

Witness build_equal_two_distinct_12(int d1, int d2) {
    require(d1 > d2 && d2 > 1 && d1 % d2 == 0 && (d1 / d2) % 2 == 1,
            "needs d1 > d2 > 1 with d1/d2 an odd integer");
    const int n = d1 + d2;
    Permutation b = consecutive_cycles(n, {d1, d2});
    Paratopism sigma{Permutation(n), b, b, S3::x12};
    const int t1 = 1, t2 = d1 + 1;

    std::vector<Triple> seeds;
    // subsquare on the d2-cycle rows/columns/symbols, shifted into place
    {
        Witness sub = to_standard_witness(build_single_cycle_12(d2, CycleStructure({{d2, 1}})));
        for (int i = 1; i <= d2; ++i)
            for (int j = 1; j <= d2; ++j) seeds.push_back({d1 + i, d1 + j, d1 + sub.square.at(i, j)});
    }
    if (d1 % 2 == 0) {
        for (int i = 1; i <= d2 / 2; ++i) seeds.push_back({i, d1 + 1 - i, t2});
        for (int i = d2 / 2 + 1; i <= d1 / 2; ++i) seeds.push_back({i, d1 + 1 - i, t1});
        for (int i = 1; i <= d2 / 2; ++i) {
            seeds.push_back({i, n + 1 - i, t1});
            seeds.push_back({d1 + i, d1 + 1 - i, t1});
        }
    } else if (d1 % 4 == 1) {
        for (int i = (d1 + 2 * d2 + 5) / 4; i <= (3 * d1 + 1) / 4; ++i) seeds.push_back({i, d1 + 1 - i, t1});
        for (int i = (d1 + 3) / 4; i <= (d1 + 2 * d2 + 1) / 4; ++i) seeds.push_back({i, d1 + 1 - i, t2});
        for (int i = (d1 - 2 * d2 + 5) / 4; i <= (d1 + 2 * d2 + 1) / 4; ++i)
            seeds.push_back({i, (5 * d1 + 2 * d2 + 5) / 4 - i, t1});
    } else {
        for (int i = (d1 + 5) / 4; i <= (3 * d1 - 2 * d2 + 1) / 4; ++i) seeds.push_back({i, d1 + 1 - i, t1});
        for (int i = (3 * d1 - 2 * d2 + 5) / 4; i <= (3 * d1 + 3) / 4; ++i) seeds.push_back({i, d1 + 1 - i, t2});
        for (int i = (3 * d1 - 2 * d2 + 5) / 4; i <= (3 * d1 + 2 * d2 + 1) / 4; ++i)
            seeds.push_back({i, (7 * d1 + 2 * d2 + 5) / 4 - i, t1});
    }
    return verified(sigma, close_under(sigma, seeds));
}

Witness build_equal_chain_12(int d1, int d2, int l) {
    require(d1 % 2 == 0 && d2 > 1 && d1 % d2 == 0 && (d1 / d2) % 2 == 1, "needs even d1, odd ratio d1/d2");
    require(l >= 2 && l <= d1 / d2, "needs 2 <= l <= d1/d2");
    const int n = d1 + l * d2;
    std::vector<int> ls = {d1};
    ls.insert(ls.end(), l, d2);
    Permutation b = consecutive_cycles(n, ls);
    Paratopism sigma{Permutation(n), b, b, S3::x12};
    auto lead = [&](int k) { return k == 1 ? 1 : d1 + (k - 2) * d2 + 1; };  // t_k

    std::vector<Triple> seeds;
    {
        Witness core = build_single_cycle_12(d2, CycleStructure({{d2, 1}}));
        Witness sub = to_standard_witness(lift_direct_product(core, l));
        for (int i = 1; i <= l * d2; ++i)
            for (int j = 1; j <= l * d2; ++j) seeds.push_back({d1 + i, d1 + j, d1 + sub.square.at(i, j)});
    }
    for (int k = 1; k <= d1 / d2; ++k)
        for (int i = (k - 1) * d2 / 2 + 1; i <= k * d2 / 2; ++i) {
            seeds.push_back({i, d1 + 1 - i, k <= l ? lead(k + 1) : lead(1)});
            if (k <= l) {
                seeds.push_back({i, d1 + (3 * k - 1) * d2 / 2 + 1 - i, lead(1)});
                seeds.push_back({d1 + (k - 1) * d2 / 2 + i, d1 + 1 - i, lead(1)});
            }
        }
    return verified(sigma, close_under(sigma, seeds));
}

Witness build_totally_symmetric(int n, S3 delta) {
    return verified(Paratopism::identity(n, delta), totally_symmetric_square(n));
}

Witness lift_direct_product(const Witness& core, int r) {
    require(r >= 1, "lift factor must be positive");
    require(core.sigma.delta == S3::e || core.sigma.delta == S3::x12,
            "lift defined for delta = e or (12)");
    if (r == 1) return core;
    const int m = core.sigma.degree(), n = m * r;
    auto lift_perm = [&](const Permutation& p) {
        std::vector<int> img(n);
        for (int a = 1; a <= m; ++a)
            for (int q = 1; q <= r; ++q) img[(a - 1) * r + q - 1] = (p[a] - 1) * r + q;
        return Permutation::from_images(std::move(img));
    };
    Paratopism sigma(lift_perm(core.sigma.alpha), lift_perm(core.sigma.beta), lift_perm(core.sigma.gamma),
                     core.sigma.delta);
    return verified(sigma, direct_product(core.square, cyclic_square(r)));
}

LatinSquare fixture_order10_123() {
    static const int rows[10][10] = {
        {8, 10, 3, 7, 4, 5, 2, 1, 6, 9},  {6, 9, 5, 1, 8, 2, 7, 3, 10, 4},
        {3, 8, 7, 10, 5, 9, 6, 4, 1, 2},  {5, 4, 9, 2, 10, 6, 1, 7, 8, 3},
        {1, 6, 10, 9, 3, 8, 4, 2, 5, 7},  {9, 7, 4, 6, 2, 1, 10, 8, 3, 5},
        {4, 1, 2, 8, 7, 3, 5, 10, 9, 6},  {7, 5, 8, 4, 9, 10, 3, 6, 2, 1},
        {10, 2, 6, 3, 1, 7, 9, 5, 4, 8},  {2, 3, 1, 5, 6, 4, 8, 9, 7, 10},
    };
    std::vector<int> cells;
    cells.reserve(100);
    for (auto& row : rows)
        for (int v : row) cells.push_back(v);
    return LatinSquare::checked(10, std::move(cells));
}

Witness witness_order10_123() {
    Permutation a = canonical_permutation(CycleStructure({{9, 1}, {1, 1}}));
    return verified(Paratopism(a, a, a, S3::r123), fixture_order10_123());
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

namespace {

struct PatternView {
    // d^m.1^f with d > 1
    static std::optional<std::array<int, 3>> power_fix(const CycleStructure& cs) {
        const auto& ps = cs.parts();
        if (ps.size() == 1 && ps[0].length > 1) return std::array<int, 3>{ps[0].length, ps[0].multiplicity, 0};
        if (ps.size() == 2 && ps[0].length > 1 && ps[1].length == 1)
            return std::array<int, 3>{ps[0].length, ps[0].multiplicity, ps[1].multiplicity};
        return std::nullopt;
    }
};

bool is_trivial_cs(const CycleStructure& cs) {
    return cs.parts().size() == 1 && cs.parts()[0].length == 1;
}

}  // namespace

std::optional<Witness> construct_witness_12(const StandardCase12& c) {
    const CycleStructure &B = c.beta_cs, &C = c.gamma_cs;
    auto attempt = [&](auto&& fn) -> std::optional<Witness> {
        try {
            Witness w = to_standard_witness(fn());
            StandardCase12 got{c.n, w.sigma.beta.cycle_structure(), w.sigma.gamma.cycle_structure()};
            if (got.beta_cs == B && got.gamma_cs == C) return w;
        } catch (const std::exception&) {
        }
        return std::nullopt;
    };

    if (is_trivial_cs(B)) {
        bool shape = true;
        for (const auto& p : C.parts()) shape = shape && p.length <= 2;
        if (shape && C.fixed_points() >= 1)
            return attempt([&] { return build_pairing_square(C.multiplicity_of(2), C.fixed_points()); });
        return std::nullopt;
    }
    if (B.parts().size() == 1 && B.parts()[0].length == c.n)
        return attempt([&] { return build_single_cycle_12(c.n, C); });

    auto pb = PatternView::power_fix(B);
    auto pg = PatternView::power_fix(C);

    if (B == C) {
        if (pb) {
            auto [d, m, f] = *pb;
            if (m == 2) return attempt([&] { return build_equal_double_12(d, f); });
            if (f == 0 && m >= 3 && d % 2 == 1)
                return attempt([&] {
                    return lift_direct_product(build_single_cycle_12(d, CycleStructure({{d, 1}})), m);
                });
        }
        const auto& ps = B.parts();
        if (ps.size() == 2 && ps[0].multiplicity == 1 && ps[1].length > 1) {
            int d1 = ps[0].length, d2 = ps[1].length, l = ps[1].multiplicity;
            if (l == 1) return attempt([&] { return build_equal_two_distinct_12(d1, d2); });
            return attempt([&] { return build_equal_chain_12(d1, d2, l); });
        }
    }

    if (pg) {
        auto [d, m, f] = *pg;
        if (m == 1 && d % 2 == 0 && d >= 4 && pb && (*pb)[0] == d / 2 && (*pb)[1] == 2 && (*pb)[2] == f)
            return attempt([&] { return build_aaa_one_cycle_12(d, f); });
        if (f == 0 && d % 4 == 0 && d >= 4 && pb && (*pb)[0] == d / 2 && (*pb)[1] == 2 * m && (*pb)[2] == 0)
            return attempt([&] { return lift_direct_product(build_aaa_one_cycle_12(d, 0), m); });
    }

    // direct-product lift: beta = d^r semi-regular, every gamma multiplicity
    // divisible by r, core solvable on a single d-cycle
    if (pb && (*pb)[2] == 0) {
        auto [d, r, f0] = *pb;
        (void)f0;
        if (r >= 2) {
            bool divisible = true;
            std::vector<CycleStructure::Part> core_parts;
            for (const auto& p : C.parts()) {
                if (p.multiplicity % r != 0) divisible = false;
                else core_parts.push_back({p.length, p.multiplicity / r});
            }
            if (divisible) {
                CycleStructure core_cs(core_parts);
                if (core_cs.degree() == d)
                    return attempt([&] { return lift_direct_product(build_single_cycle_12(d, core_cs), r); });
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> construct_witness_123(const StandardCase123& c) {
    auto attempt = [&](auto&& fn) -> std::optional<Witness> {
        try {
            Witness w = to_standard_witness(fn());
            if (w.sigma.gamma.cycle_structure() == c.gamma_cs && w.sigma.degree() == c.n) return w;
        } catch (const std::exception&) {
        }
        return std::nullopt;
    };
    if (is_trivial_cs(c.gamma_cs)) return attempt([&] { return build_totally_symmetric(c.n, S3::r123); });
    if (c.n == 10 && c.gamma_cs == CycleStructure({{3, 3}, {1, 1}}))
        return attempt([&] { return witness_order10_123(); });
    return std::nullopt;
}

}  // namespace paratopia
