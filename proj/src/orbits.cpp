#include "paratopia/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace paratopia {

CellOrbits12 cell_orbits_12(const Permutation& beta) {
    return cell_orbits_12_general(Permutation(beta.degree()), beta);
}

CellOrbits12 cell_orbits_12_general(const Permutation& alpha, const Permutation& beta) {
    if (alpha.degree() != beta.degree()) throw std::invalid_argument("degree mismatch");
    const int n = beta.degree();
    CellOrbits12 out;
    out.beta = beta;
    out.cell_to_orbit.assign((size_t)n * n, -1);

    // cycle index of each point (canonical cycle enumeration order)
    std::vector<int> cyc_of(n + 1, 0);
    {
        int idx = 0;
        for (const auto& c : beta.cycles()) {
            ++idx;
            for (int p : c) cyc_of[p] = idx;
        }
    }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (out.cell_to_orbit[(i - 1) * n + (j - 1)] != -1) continue;
            std::vector<std::pair<int, int>> orbit;
            int r = i, c = j;
            do {
                orbit.emplace_back(r, c);
                int nr = beta[c], nc = alpha[r];
                r = nr;
                c = nc;
            } while (!(r == i && c == j));
            std::sort(orbit.begin(), orbit.end());
            int id = (int)out.orbits.size();
            for (auto [r2, c2] : orbit) out.cell_to_orbit[(r2 - 1) * n + (c2 - 1)] = id;
            int s = cyc_of[orbit.front().first], t = cyc_of[orbit.front().second];
            if (s > t) std::swap(s, t);
            int ds = beta.cycle_length_of(orbit.front().first);
            int dt = beta.cycle_length_of(orbit.front().second);
            long long generic = (s == t) ? 2LL * ds : 2LL * lcm2(ds, dt);
            out.short_orbit.push_back((long long)orbit.size() < generic);
            out.block.emplace_back(s, t);
            out.orbits.push_back(std::move(orbit));
        }

    // orbits come out sorted by least cell because of the scan order
    return out;
}

TripleOrbit triple_orbit_123(const Permutation& gamma, Triple t) {
    TripleOrbit out;
    out.gamma = gamma;
    Triple cur = t;
    do {
        out.triples.push_back(cur);
        cur = Triple{gamma[cur.sym], cur.row, cur.col};
    } while (!(cur == t));
    long long expected = 3 * lcm2(lcm2(gamma.cycle_length_of(t.row), gamma.cycle_length_of(t.col)),
                                  gamma.cycle_length_of(t.sym));
    out.short_orbit = (long long)out.triples.size() < expected;
    return out;
}

std::string orbit_grid(const CellOrbits12& dec) {
    const int n = dec.beta.degree();
    std::string out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ' ';
            int id = dec.orbit_of(i, j);
            out += (char)('a' + id % 26);
        }
        out += '\n';
    }
    return out;
}

OrbitCensus123 orbit_census_123(const Permutation& gamma) {
    OrbitCensus123 out;
    out.gamma = gamma;
    auto cycles = gamma.cycles();
    const int p = (int)cycles.size();
    auto least_rotation = [](std::array<int, 3> v) {
        std::array<int, 3> best = v;
        for (int r = 0; r < 2; ++r) {
            v = {v[1], v[2], v[0]};
            best = std::min(best, v);
        }
        return best;
    };
    std::map<std::array<int, 3>, char> seen;
    for (int a = 1; a <= p; ++a)
        for (int b = 1; b <= p; ++b)
            for (int c = 1; c <= p; ++c) {
                auto key = least_rotation({a, b, c});
                if (seen.count(key)) continue;
                seen[key] = 1;
                TripleBlockClass cls;
                cls.a = key[0];
                cls.b = key[1];
                cls.c = key[2];
                long long da = (long long)cycles[key[0] - 1].size();
                long long db = (long long)cycles[key[1] - 1].size();
                long long dc = (long long)cycles[key[2] - 1].size();
                cls.generic_length = 3 * lcm2(lcm2(da, db), dc);
                if (key[0] == key[1] && key[1] == key[2]) {
                    cls.cells = da * da;
                    if (da % 3 != 0) {
                        cls.short_possible = true;
                        cls.short_length = (int)da;
                    }
                } else {
                    // the class covers blocks M_ab, M_ca, M_bc
                    cls.cells = da * db + dc * da + db * dc;
                }
                out.classes.push_back(cls);
            }
    return out;
}

}  // namespace paratopia
