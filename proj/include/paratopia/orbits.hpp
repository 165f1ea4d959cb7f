#pragma once

#include <utility>
#include <vector>

#include "paratopia/latin.hpp"
#include "paratopia/paratopism.hpp"
#include "paratopia/perms.hpp"

namespace paratopia {

// Orbits of the cells of an n x n grid under (alpha,beta,gamma;(12)): the
// cell map is (i,j) -> (j beta, i alpha), independent of cell contents.
// Orbits are listed sorted by their lexicographically least cell, which is
// also orbits[k].front().
struct CellOrbits12 {
    Permutation beta;
    std::vector<std::vector<std::pair<int, int>>> orbits;
    std::vector<char> short_orbit;
    // (s,t) with s <= t: indices (1-based, canonical cycle order) of the
    // beta-cycles met by the orbit's rows and columns
    std::vector<std::pair<int, int>> block;
    std::vector<int> cell_to_orbit;  // (i-1)*n + (j-1) -> orbit index

    int orbit_of(int i, int j) const { return cell_to_orbit[(i - 1) * beta.degree() + (j - 1)]; }
};

// Standard form (e, beta, gamma; (12)); gamma does not affect cell orbits.
CellOrbits12 cell_orbits_12(const Permutation& beta);
// General (12)-shape, cell map (i,j) -> (j beta, i alpha).
CellOrbits12 cell_orbits_12_general(const Permutation& alpha, const Permutation& beta);

struct TripleOrbit {
    Permutation gamma;
    std::vector<Triple> triples;  // in closure order from the seed
    bool short_orbit = false;     // length < 3*lcm of the met cycle lengths
};

// Closure of t under (e, e, gamma; (123)).
TripleOrbit triple_orbit_123(const Permutation& gamma, Triple t);

// Structural census for (e,e,gamma;(123)): one entry per cyclic class of
// gamma-cycle index triples (a,b,c); orbits through the corresponding blocks
// have the generic length, except for at most one short orbit per diagonal
// class with 3 not dividing the cycle length.
struct TripleBlockClass {
    int a = 0, b = 0, c = 0;      // 1-based cycle indices, least cyclic rotation
    long long generic_length = 0;  // 3*lcm(d_a,d_b,d_c)
    bool short_possible = false;
    int short_length = 0;          // d_a when short_possible
    long long cells = 0;           // cells of the three blocks the class covers
};

struct OrbitCensus123 {
    Permutation gamma;
    std::vector<TripleBlockClass> classes;
};

OrbitCensus123 orbit_census_123(const Permutation& gamma);

// Debug dump in the style of the worked figures: the n x n grid with one
// letter per cell orbit (wrapping after 26). Tests and docs only.
std::string orbit_grid(const CellOrbits12& dec);

}  // namespace paratopia
