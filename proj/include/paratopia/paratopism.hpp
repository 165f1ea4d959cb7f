#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paratopia/latin.hpp"
#include "paratopia/perms.hpp"

namespace paratopia {

// Elements of S3 acting on coordinate positions {1,2,3} from the right.
enum class S3 : uint8_t { e = 0, x12, x13, x23, r123, r132 };

int s3_apply(S3 d, int pos);
S3 s3_mul(S3 a, S3 b);  // apply a, then b
S3 s3_inverse(S3 d);
int s3_cycle_type(S3 d);  // 1 identity, 2 transposition, 3 three-cycle
std::vector<std::vector<int>> s3_cycles(S3 d);  // cycles on {1,2,3}, least point first
S3 s3_parse(const std::string& text);           // "e","12","13","23","123","132"
std::string s3_str(S3 d);
const std::array<S3, 6>& s3_all();

// (alpha, beta, gamma; delta): apply the isotopism coordinatewise, then
// permute coordinate positions by delta. Acts on the right.
struct Paratopism {
    Permutation alpha, beta, gamma;
    S3 delta = S3::e;

    Paratopism() = default;
    Paratopism(Permutation a, Permutation b, Permutation c, S3 d);
    static Paratopism identity(int n, S3 d = S3::e);
    // "a=<perm>; b=<perm>; c=<perm>; d=<e|12|13|23|123|132>"
    static Paratopism parse(const std::string& text);

    int degree() const { return alpha.degree(); }
    const Permutation& component(int pos) const;  // 1..3
    std::string str() const;

    bool operator==(const Paratopism&) const = default;
};

Triple act_triple(const Paratopism& s, Triple t);
LatinSquare act_square(const Paratopism& s, const LatinSquare& L);
// Right action: act_square(compose_par(s1,s2), L) == act_square(s2, act_square(s1, L)).
Paratopism compose_par(const Paratopism& s1, const Paratopism& s2);
Paratopism inverse_par(const Paratopism& s);
Paratopism power_par(const Paratopism& s, long long k);
bool is_autoparatopism(const Paratopism& s, const LatinSquare& L);

// Conjugacy class label: for each cycle of delta, the cycle structure of the
// ordered product of the components along that cycle, keyed by cycle length.
// Two paratopisms are conjugate iff these invariants are equal.
struct ConjugacyInvariant {
    int delta_type = 1;
    std::vector<std::pair<int, CycleStructure>> entries;  // sorted
    bool operator==(const ConjugacyInvariant&) const = default;
    std::string str() const;
};

ConjugacyInvariant conjugacy_invariant(const Paratopism& s);

// A conjugate of s with canonical component permutations, in one of the
// three shapes (a,b,c;e), (e,b,c;12), (e,e,c;123). Idempotent.
Paratopism standard_form(const Paratopism& s);

// omega with omega^-1 * p * omega == q; requires equal cycle structures.
Permutation conjugating_permutation(const Permutation& p, const Permutation& q);

// tau with compose(inverse(tau), compose(s1, tau)) == s2 when s1 ~ s2.
std::optional<Paratopism> find_conjugator(const Paratopism& s1, const Paratopism& s2);

// Members of Par(n) for arbitrary prescribed components:
// for (12): (alpha, alpha^-1 * g, g; 12) with g the full cycle;
// for (123): (alpha, beta, (alpha*beta)^-1; 123).
Paratopism complete_to_member_12(const Permutation& alpha);
Paratopism complete_to_member_123(const Permutation& alpha, const Permutation& beta);

}  // namespace paratopia
