#include "paratopia/paratopism.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace paratopia {

namespace {
// image tables on positions {1,2,3}, indexed by S3 value
constexpr int kS3Img[6][3] = {
    {1, 2, 3},  // e
    {2, 1, 3},  // (12)
    {3, 2, 1},  // (13)
    {1, 3, 2},  // (23)
    {2, 3, 1},  // (123): 1->2, 2->3, 3->1
    {3, 1, 2},  // (132)
};
}  // namespace

int s3_apply(S3 d, int pos) { return kS3Img[(int)d][pos - 1]; }

S3 s3_mul(S3 a, S3 b) {
    int img[3];
    for (int p = 1; p <= 3; ++p) img[p - 1] = s3_apply(b, s3_apply(a, p));
    for (int k = 0; k < 6; ++k)
        if (img[0] == kS3Img[k][0] && img[1] == kS3Img[k][1] && img[2] == kS3Img[k][2]) return (S3)k;
    throw std::logic_error("s3_mul");
}

S3 s3_inverse(S3 d) {
    for (S3 x : s3_all())
        if (s3_mul(d, x) == S3::e) return x;
    throw std::logic_error("s3_inverse");
}

int s3_cycle_type(S3 d) {
    switch (d) {
        case S3::e: return 1;
        case S3::x12:
        case S3::x13:
        case S3::x23: return 2;
        default: return 3;
    }
}

std::vector<std::vector<int>> s3_cycles(S3 d) {
    std::vector<std::vector<int>> out;
    bool seen[4] = {};
    for (int i = 1; i <= 3; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            j = s3_apply(d, j);
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

S3 s3_parse(const std::string& text) {
    if (text == "e") return S3::e;
    if (text == "12") return S3::x12;
    if (text == "13") return S3::x13;
    if (text == "23") return S3::x23;
    if (text == "123") return S3::r123;
    if (text == "132") return S3::r132;
    throw std::invalid_argument("bad S3 element '" + text + "'");
}

std::string s3_str(S3 d) {
    static const char* names[6] = {"e", "12", "13", "23", "123", "132"};
    return names[(int)d];
}

const std::array<S3, 6>& s3_all() {
    static const std::array<S3, 6> all = {S3::e, S3::x12, S3::x13, S3::x23, S3::r123, S3::r132};
    return all;
}

Paratopism::Paratopism(Permutation a, Permutation b, Permutation c, S3 d)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), delta(d) {
    if (alpha.degree() != beta.degree() || beta.degree() != gamma.degree())
        throw std::invalid_argument("paratopism components must share one degree");
}

Paratopism Paratopism::identity(int n, S3 d) {
    return Paratopism(Permutation(n), Permutation(n), Permutation(n), d);
}

const Permutation& Paratopism::component(int pos) const {
    switch (pos) {
        case 1: return alpha;
        case 2: return beta;
        case 3: return gamma;
    }
    throw std::out_of_range("component position");
}

Paratopism Paratopism::parse(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad paratopism field '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        auto strip = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        fields[strip(key)] = strip(val);
    }
    for (const char* k : {"a", "b", "c", "d"})
        if (!fields.count(k)) throw std::invalid_argument(std::string("paratopism missing field '") + k + "'");
    S3 d = s3_parse(fields["d"]);
    Permutation a = Permutation::parse(fields["a"]);
    Permutation b = Permutation::parse(fields["b"]);
    Permutation c = Permutation::parse(fields["c"]);
    int n = std::max({a.degree(), b.degree(), c.degree()});
    // cycle-form components may under-specify the degree; re-parse with hint
    a = Permutation::parse(fields["a"], n);
    b = Permutation::parse(fields["b"], n);
    c = Permutation::parse(fields["c"], n);
    return Paratopism(std::move(a), std::move(b), std::move(c), d);
}

std::string Paratopism::str() const {
    std::ostringstream out;
    out << "a=" << alpha.cycle_str() << "; b=" << beta.cycle_str() << "; c=" << gamma.cycle_str()
        << "; d=" << s3_str(delta);
    return out.str();
}

Triple act_triple(const Paratopism& s, Triple t) {
    if (t.row < 1 || t.row > s.degree() || t.col < 1 || t.col > s.degree() || t.sym < 1 || t.sym > s.degree())
        throw std::out_of_range("triple out of range");
    int moved[3] = {s.alpha[t.row], s.beta[t.col], s.gamma[t.sym]};
    int out[3];
    for (int p = 1; p <= 3; ++p) out[s3_apply(s.delta, p) - 1] = moved[p - 1];
    return {out[0], out[1], out[2]};
}

LatinSquare act_square(const Paratopism& s, const LatinSquare& L) {
    const int n = L.order();
    if (n != s.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> cells((size_t)n * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Triple t = act_triple(s, {i, j, L.at(i, j)});
            cells[(t.row - 1) * n + (t.col - 1)] = t.sym;
        }
    return LatinSquare::unchecked(n, std::move(cells));
}

Paratopism compose_par(const Paratopism& s1, const Paratopism& s2) {
    if (s1.degree() != s2.degree()) throw std::invalid_argument("degree mismatch");
    // component j of the product is phi_j * psi_{j^delta1}
    Permutation comp[3];
    for (int j = 1; j <= 3; ++j) comp[j - 1] = s1.component(j) * s2.component(s3_apply(s1.delta, j));
    return Paratopism(comp[0], comp[1], comp[2], s3_mul(s1.delta, s2.delta));
}

Paratopism inverse_par(const Paratopism& s) {
    S3 dinv = s3_inverse(s.delta);
    Permutation comp[3];
    for (int k = 1; k <= 3; ++k) comp[k - 1] = s.component(s3_apply(dinv, k)).inverse();
    return Paratopism(comp[0], comp[1], comp[2], dinv);
}

Paratopism power_par(const Paratopism& s, long long k) {
    Paratopism base = k < 0 ? inverse_par(s) : s;
    unsigned long long e = k < 0 ? -(unsigned long long)k : (unsigned long long)k;
    Paratopism acc = Paratopism::identity(s.degree());
    while (e > 0) {
        if (e & 1) acc = compose_par(acc, base);
        base = compose_par(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_autoparatopism(const Paratopism& s, const LatinSquare& L) {
    const int n = L.order();
    if (n != s.degree()) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Triple t = act_triple(s, {i, j, L.at(i, j)});
            if (L.at(t.row, t.col) != t.sym) return false;
        }
    return true;
}

ConjugacyInvariant conjugacy_invariant(const Paratopism& s) {
    ConjugacyInvariant inv;
    inv.delta_type = s3_cycle_type(s.delta);
    for (const auto& cyc : s3_cycles(s.delta)) {
        Permutation prod(s.degree());
        for (int pos : cyc) prod = prod * s.component(pos);
        inv.entries.emplace_back((int)cyc.size(), prod.cycle_structure());
    }
    std::sort(inv.entries.begin(), inv.entries.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second.expanded() < y.second.expanded();
    });
    return inv;
}

std::string ConjugacyInvariant::str() const {
    std::ostringstream out;
    out << "delta^" << delta_type << "{";
    for (size_t k = 0; k < entries.size(); ++k) {
        if (k) out << "; ";
        out << entries[k].first << ":" << entries[k].second.str();
    }
    out << "}";
    return out.str();
}

Paratopism standard_form(const Paratopism& s) {
    const int n = s.degree();
    ConjugacyInvariant inv = conjugacy_invariant(s);
    switch (inv.delta_type) {
        case 1: {
            // three 1-cycle entries, sorted; lay them out largest first
            std::vector<CycleStructure> css;
            for (auto& e : inv.entries) css.push_back(e.second);
            std::sort(css.begin(), css.end(), [](const auto& x, const auto& y) { return y < x; });
            return Paratopism(canonical_permutation(css[0]), canonical_permutation(css[1]),
                              canonical_permutation(css[2]), S3::e);
        }
        case 2: {
            CycleStructure one, two;
            for (auto& e : inv.entries) (e.first == 1 ? one : two) = e.second;
            return Paratopism(Permutation(n), canonical_permutation(two), canonical_permutation(one),
                              S3::x12);
        }
        default: {
            return Paratopism(Permutation(n), Permutation(n), canonical_permutation(inv.entries[0].second),
                              S3::r123);
        }
    }
}

Permutation conjugating_permutation(const Permutation& p, const Permutation& q) {
    if (p.cycle_structure() != q.cycle_structure())
        throw std::invalid_argument("permutations are not conjugate");
    auto by_len = [](std::vector<std::vector<int>> cycs) {
        std::stable_sort(cycs.begin(), cycs.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        return cycs;
    };
    auto pc = by_len(p.cycles()), qc = by_len(q.cycles());
    std::vector<int> img(p.degree());
    for (size_t c = 0; c < pc.size(); ++c)
        for (size_t k = 0; k < pc[c].size(); ++k) img[pc[c][k] - 1] = qc[c][k];
    return Permutation::from_images(std::move(img));
}

std::optional<Paratopism> find_conjugator(const Paratopism& s1, const Paratopism& s2) {
    if (s1.degree() != s2.degree()) return std::nullopt;
    if (!(conjugacy_invariant(s1) == conjugacy_invariant(s2))) return std::nullopt;
    const int n = s1.degree();
    for (S3 rho : s3_all()) {
        if (s3_mul(s3_mul(s3_inverse(rho), s1.delta), rho) != s2.delta) continue;
        // Solve omega_i^-1 * phi_i * omega_{i^delta1} == psi_{i^rho} cycle by
        // cycle of delta1: pick omega at the cycle leader by aligning the
        // component products, then propagate along the cycle.
        Permutation omega[3];
        bool have[3] = {};
        bool ok = true;
        for (const auto& cyc : s3_cycles(s1.delta)) {
            Permutation prod1(n), prod2(n);
            for (int pos : cyc) prod1 = prod1 * s1.component(pos);
            for (int pos : cyc) prod2 = prod2 * s2.component(s3_apply(rho, pos));
            if (!(prod1.cycle_structure() == prod2.cycle_structure())) { ok = false; break; }
            int lead = cyc[0];
            omega[lead - 1] = conjugating_permutation(prod1, prod2);
            have[lead - 1] = true;
            int i = lead;
            while (true) {
                int next = s3_apply(s1.delta, i);
                if (next == lead) break;
                // omega_{i^delta1} = phi_i^-1 * omega_i * psi_{i^rho}
                omega[next - 1] = s1.component(i).inverse() * omega[i - 1] * s2.component(s3_apply(rho, i));
                have[next - 1] = true;
                i = next;
            }
        }
        if (!ok) continue;
        for (bool h : have)
            if (!h) throw std::logic_error("find_conjugator: incomplete omega");
        Paratopism tau(omega[0], omega[1], omega[2], rho);
        if (compose_par(compose_par(inverse_par(tau), s1), tau) == s2) return tau;
    }
    return std::nullopt;
}

Paratopism complete_to_member_12(const Permutation& alpha) {
    const int n = alpha.degree();
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 2 > n ? 1 : i + 2;
    Permutation g = Permutation::from_images(std::move(full));
    return Paratopism(alpha, alpha.inverse() * g, g, S3::x12);
}

Paratopism complete_to_member_123(const Permutation& alpha, const Permutation& beta) {
    return Paratopism(alpha, beta, (alpha * beta).inverse(), S3::r123);
}

}  // namespace paratopia
