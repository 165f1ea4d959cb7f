#pragma once

#include <optional>
#include <stdexcept>

#include "paratopia/filters.hpp"
#include "paratopia/latin.hpp"
#include "paratopia/orbits.hpp"
#include "paratopia/paratopism.hpp"

namespace paratopia {

struct contour_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Partial square with exactly one filled cell in each cell orbit of a
// (12)-shape paratopism; expansion recovers the full square.
struct Contour {
    Paratopism sigma;
    PartialLatinSquare entries;
};

// Strict expansion: validates one-entry-per-orbit, closes every entry under
// sigma, and returns the complete square. Throws contour_error on a clash,
// a duplicated or missing orbit, or an incomplete closure.
LatinSquare expand_contour(const Contour& c);

// Closure of arbitrary seed triples under sigma (consistent overlaps allowed).
LatinSquare close_under(const Paratopism& sigma, const std::vector<Triple>& seeds);

struct Witness {
    Paratopism sigma;
    LatinSquare square;
};

// Conjugate a witness so its paratopism is the standard form.
Witness to_standard_witness(const Witness& w);

// Symbol-pair surgery on the cyclic square: witness for (e,e,gamma;(12))
// where gamma has cycle structure 2^r.1^f, f >= 1 (gamma swaps a <-> n-a).
Witness build_pairing_square(int r, int f);

// Contour witness for beta a single n-cycle; gamma_cs lengths must divide 2n
// with at most one odd.
Witness build_single_cycle_12(int n, const CycleStructure& gamma_cs);

// (a,a,a;(12)) with a = d.1^f, d even: d = 0 mod 4 needs f <= d/2,
// d = 2 mod 4 needs 1 <= f <= d/2+1.
Witness build_aaa_one_cycle_12(int d, int f);

// (e,b,b;(12)) with b = d^2.1^f: d odd with f <= d+1, or d even with f = 0.
Witness build_equal_double_12(int d, int f);

// (e,b,b;(12)) with b = d1.d2, d1 > d2 > 1 and d1/d2 an odd integer.
Witness build_equal_two_distinct_12(int d1, int d2);

// (e,b,b;(12)) with b = d1.d2^l, d1 even, d1/d2 an odd integer, 2 <= l <= d1/d2.
Witness build_equal_chain_12(int d1, int d2, int l);

// (e,e,e;delta) on the totally symmetric square.
Witness build_totally_symmetric(int n, S3 delta);

// Direct product with the cyclic square of order r under the identity
// isotopism; multiplies every component cycle count by r. delta must be
// e or (12).
Witness lift_direct_product(const Witness& core, int r);

// Pinned order-10 square with a (123)-symmetry of diagonal type 9.1 (cube
// class 3^3.1); no small-parameter construction covers this case.
LatinSquare fixture_order10_123();
Witness witness_order10_123();

// Builder dispatch for a standard-form case; the returned witness is in
// standard form and verified. nullopt when no explicit construction applies.
std::optional<Witness> construct_witness_12(const StandardCase12& c);
std::optional<Witness> construct_witness_123(const StandardCase123& c);

}  // namespace paratopia
