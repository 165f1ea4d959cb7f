#include "paratopia/filters.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <map>
#include <numeric>
#include <queue>

#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace paratopia {

namespace {

int v2(int n) {
    int u = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++u;
    }
    return u;
}

std::set<int> divisor_set(int d) {
    std::set<int> out;
    for (int k = 1; k * k <= d; ++k)
        if (d % k == 0) {
            out.insert(k);
            out.insert(d / k);
        }
    return out;
}

CycleStructure restrict_to(const CycleStructure& cs, const std::set<int>& lengths, bool inside) {
    std::vector<CycleStructure::Part> parts;
    for (const auto& p : cs.parts())
        if (lengths.count(p.length) == (inside ? 1u : 0u)) parts.push_back(p);
    return CycleStructure(parts);
}

int count_in(const CycleStructure& cs, const std::set<int>& lengths) {
    int s = 0;
    for (const auto& p : cs.parts())
        if (lengths.count(p.length)) s += p.length * p.multiplicity;
    return s;
}

int odd_cycle_count(const CycleStructure& cs) {
    int c = 0;
    for (const auto& p : cs.parts())
        if (p.length % 2 == 1) c += p.multiplicity;
    return c;
}

// Edmonds-Karp on the tiny class graphs used by R1/Q1.
struct Flow {
    int n;
    std::vector<std::vector<long long>> cap;
    explicit Flow(int nodes) : n(nodes), cap(nodes, std::vector<long long>(nodes, 0)) {}
    void add(int u, int v, long long c) { cap[u][v] += c; }
    long long max_flow(int s, int t) {
        long long total = 0;
        while (true) {
            std::vector<int> prev(n, -1);
            prev[s] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && prev[t] == -1) {
                int u = q.front();
                q.pop();
                for (int v = 0; v < n; ++v)
                    if (prev[v] == -1 && cap[u][v] > 0) {
                        prev[v] = u;
                        q.push(v);
                    }
            }
            if (prev[t] == -1) break;
            long long aug = -1;
            for (int v = t; v != s; v = prev[v]) {
                long long c = cap[prev[v]][v];
                aug = aug < 0 ? c : std::min(aug, c);
            }
            for (int v = t; v != s; v = prev[v]) {
                cap[prev[v]][v] -= aug;
                cap[v][prev[v]] += aug;
            }
            total += aug;
        }
        return total;
    }
};

// Exact symbol-supply feasibility for one row band of cycle length `a`: each
// symbol occurs a times across the band, a block of column-cycle length b
// accepts a symbol at most min(a,b) times, and only compatible symbol classes
// may enter a block. Column classes must be filled exactly.
bool band_feasible(long long a, const std::vector<std::pair<int, int>>& col_classes,
                   const std::vector<std::pair<int, int>>& sym_classes, long long band_cells,
                   bool (*compat)(long long, long long, long long)) {
    const int S = (int)sym_classes.size(), C = (int)col_classes.size();
    Flow f(S + C + 2);
    const int src = S + C, snk = S + C + 1;
    for (int i = 0; i < S; ++i) {
        auto [c, m] = sym_classes[i];
        f.add(src, i, (long long)c * m * a);  // m cycles of length c: c*m symbols, a occurrences each
        for (int j = 0; j < C; ++j) {
            auto [b, r] = col_classes[j];
            if (compat(a, b, c)) f.add(i, S + j, (long long)c * m * r * std::min<long long>(a, b));
        }
    }
    long long demand = 0;
    for (int j = 0; j < C; ++j) {
        auto [b, r] = col_classes[j];
        f.add(S + j, snk, (long long)b * r * a);
        demand += (long long)b * r * a;
    }
    if (demand != band_cells) return false;
    return f.max_flow(src, snk) == demand;
}

std::vector<std::pair<int, int>> class_list(const CycleStructure& cs) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : cs.parts()) out.emplace_back(p.length, p.multiplicity);
    return out;
}

std::string cert(const std::string& text) { return text; }

}  // namespace

bool lcm_compatible_12(long long a, long long b, long long c) {
    long long l = lcm2(2 * a, 2 * b);
    return lcm2(2 * a, c) == l && lcm2(2 * b, c) == l;
}

bool lcm_compatible_123(long long a, long long b, long long c) {
    long long l = lcm2(a, b);
    return lcm2(a, c) == l && lcm2(b, c) == l;
}

std::string filter_report_json(const FilterReport& report) {
    nlohmann::json j;
    switch (report.verdict) {
        case FilterVerdict::Excluded: j["verdict"] = "excluded"; break;
        case FilterVerdict::DefinitelyAdmitted: j["verdict"] = "admitted"; break;
        case FilterVerdict::Undecided: j["verdict"] = "undecided"; break;
    }
    j["rule"] = report.rule.empty() ? nlohmann::json(nullptr) : nlohmann::json(report.rule);
    j["certificate"] = report.certificate.empty() ? nlohmann::json(nullptr) : nlohmann::json(report.certificate);
    j["rules_run"] = report.rules_run;
    return j.dump();
}

const std::vector<std::string>& all_rule_ids_12() {
    static const std::vector<std::string> ids = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"};
    return ids;
}

const std::vector<std::string>& all_rule_ids_123() {
    static const std::vector<std::string> ids = {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"};
    return ids;
}

// ---------------------------------------------------------------------------
// (12) exclusion rules
// ---------------------------------------------------------------------------

namespace {

// R4: with b,c the orders of beta,gamma: c | 2b, and c odd implies c == b.
std::optional<std::string> rule_R4(const StandardCase12& k) {
    long long b = k.beta_cs.order(), c = k.gamma_cs.order();
    if ((2 * b) % c != 0) return cert("order " + std::to_string(c) + " does not divide 2*" + std::to_string(b));
    if (c % 2 == 1 && c != b) return cert("odd order " + std::to_string(c) + " != " + std::to_string(b));
    return std::nullopt;
}

// R5: every odd beta-cycle length needs a gamma-cycle length dividing it.
std::optional<std::string> rule_R5(const StandardCase12& k) {
    for (const auto& p : k.beta_cs.parts()) {
        if (p.length % 2 == 0) continue;
        bool ok = false;
        for (const auto& q : k.gamma_cs.parts())
            if (p.length % q.length == 0) ok = true;
        if (!ok) return cert("no gamma cycle length divides odd beta length " + std::to_string(p.length));
    }
    return std::nullopt;
}

// R6: fixed symbols of gamma against each beta cycle length d with count r:
// f <= (r-1)d for even d, f <= (r-1)d+1 for odd d.
std::optional<std::string> rule_R6(const StandardCase12& k) {
    int f = k.gamma_cs.fixed_points();
    for (const auto& p : k.beta_cs.parts()) {
        long long bound = (long long)(p.multiplicity - 1) * p.length + (p.length % 2 == 1 ? 1 : 0);
        if (f > bound)
            return cert("fix(gamma)=" + std::to_string(f) + " exceeds bound " + std::to_string(bound) +
                        " at beta length " + std::to_string(p.length));
    }
    return std::nullopt;
}

// R7: for each beta length d>1 with odd multiplicity r, the qualifying set of
// gamma cycles must be empty (d even) or of size <= r (d odd).
std::optional<std::string> rule_R7(const StandardCase12& k) {
    int fix_beta = k.beta_cs.fixed_points();
    for (const auto& p : k.beta_cs.parts()) {
        int d = p.length, r = p.multiplicity;
        if (d <= 1 || r % 2 == 0) continue;
        long long gamma_count = 0;
        for (const auto& q : k.gamma_cs.parts()) {
            int c = q.length;
            if (c % 2 == 0 || d % c != 0) continue;
            bool blocked = false;
            for (const auto& bp : k.beta_cs.parts())
                if (bp.length > 1 && bp.length < d && lcm2(c, bp.length) == d) blocked = true;
            if (blocked) continue;
            if (fix_beta % 2 == 1 && c >= d) continue;
            gamma_count += q.multiplicity;
        }
        if (d % 2 == 0 && gamma_count > 0)
            return cert("even beta length " + std::to_string(d) + " admits no qualifying gamma cycles, found " +
                        std::to_string(gamma_count));
        if (d % 2 == 1 && gamma_count > r)
            return cert("beta length " + std::to_string(d) + ": " + std::to_string(gamma_count) +
                        " qualifying gamma cycles exceed " + std::to_string(r));
    }
    return std::nullopt;
}

// R8: with 2^u the largest power of two dividing n and every beta length
// divisible by 2^u: u>=1 forbids odd gamma cycles, u==0 needs at least as
// many odd cycles in beta as in gamma.
std::optional<std::string> rule_R8(const StandardCase12& k) {
    int u = v2(k.n);
    for (const auto& p : k.beta_cs.parts())
        if (p.length % (1 << u) != 0) return std::nullopt;
    if (u >= 1) {
        if (odd_cycle_count(k.gamma_cs) > 0) return cert("gamma has odd cycles but 2^" + std::to_string(u) + " | n");
    } else {
        int ob = odd_cycle_count(k.beta_cs), og = odd_cycle_count(k.gamma_cs);
        if (ob < og)
            return cert("beta has " + std::to_string(ob) + " odd cycles, gamma has " + std::to_string(og));
    }
    return std::nullopt;
}

// R3: 1 <= fix(beta) < n forces a subsquare, so fix(beta) <= n/2.
std::optional<std::string> rule_R3(const StandardCase12& k) {
    int f = k.beta_cs.fixed_points();
    if (f >= 1 && f < k.n && 2 * f > k.n)
        return cert("fix(beta)=" + std::to_string(f) + " > n/2");
    return std::nullopt;
}

// R1: exact block-by-block symbol feasibility from the lcm conditions.
std::optional<std::string> rule_R1(const StandardCase12& k) {
    auto cols = class_list(k.beta_cs);
    auto syms = class_list(k.gamma_cs);
    for (const auto& p : k.beta_cs.parts()) {
        long long a = p.length;
        if (!band_feasible(a, cols, syms, a * (long long)k.n, &lcm_compatible_12))
            return cert("no symbol assignment fills the row band of length " + std::to_string(p.length));
    }
    return std::nullopt;
}

FilterReport filters_12_impl(const StandardCase12& k, const RuleMask& mask);

// R2: forced subsquares from strongly lcm-closed sets (divisor sets of beta
// cycle lengths), with recursion and the complementary case at order n/2.
std::optional<std::string> rule_R2(const StandardCase12& k, const RuleMask& mask) {
    for (const auto& p : k.beta_cs.parts()) {
        auto lam = divisor_set(p.length);
        std::set<int> lam2;
        for (int x : lam) {
            lam2.insert(x);
            lam2.insert(2 * x);
        }
        int rs = count_in(k.beta_cs, lam);
        int ss = count_in(k.gamma_cs, lam2);
        std::string tag = "divisors(" + std::to_string(p.length) + ")";
        if (rs != ss)
            return cert(tag + ": row set " + std::to_string(rs) + " != symbol set " + std::to_string(ss));
        if (rs == k.n) continue;
        if (2 * rs > k.n)
            return cert(tag + ": subsquare order " + std::to_string(rs) + " in (n/2, n)");
        StandardCase12 inner{rs, restrict_to(k.beta_cs, lam, true), restrict_to(k.gamma_cs, lam2, true)};
        FilterReport r = filters_12_impl(inner, mask);
        if (r.verdict == FilterVerdict::Excluded)
            return cert(tag + ": forced subsquare excluded by " + r.rule);
        if (2 * rs == k.n) {
            StandardCase12 comp{k.n - rs, restrict_to(k.beta_cs, lam, false),
                                restrict_to(k.gamma_cs, lam2, true)};
            FilterReport rc = filters_12_impl(comp, mask);
            if (rc.verdict == FilterVerdict::Excluded)
                return cert(tag + ": complementary subsquare excluded by " + rc.rule);
        }
    }
    return std::nullopt;
}

FilterReport filters_12_impl(const StandardCase12& k, const RuleMask& mask) {
    FilterReport rep;
    auto run = [&](const char* id, std::optional<std::string> bad) {
        if (!mask.enabled(id)) return;
        rep.rules_run.push_back(id);
        if (bad) {
            rep.violated.push_back(id);
            if (rep.verdict == FilterVerdict::Undecided) {
                rep.verdict = FilterVerdict::Excluded;
                rep.rule = id;
                rep.certificate = *bad;
            }
        }
    };
    run("R4", rule_R4(k));
    run("R5", rule_R5(k));
    run("R6", rule_R6(k));
    run("R7", rule_R7(k));
    run("R8", rule_R8(k));
    run("R3", rule_R3(k));
    run("R1", rule_R1(k));
    if (mask.enabled("R2")) {
        rep.rules_run.push_back("R2");
        if (auto bad = rule_R2(k, mask)) {
            rep.violated.push_back("R2");
            if (rep.verdict == FilterVerdict::Undecided) {
                rep.verdict = FilterVerdict::Excluded;
                rep.rule = "R2";
                rep.certificate = *bad;
            }
        }
    }

    FilterReport ch = decide_characterized_12(k);
    if (ch.verdict == FilterVerdict::DefinitelyAdmitted) {
        if (rep.verdict == FilterVerdict::Excluded)
            throw std::logic_error("filters_12: rule " + rep.rule + " contradicts " + ch.rule + " on n=" +
                                   std::to_string(k.n) + " beta=" + k.beta_cs.str() + " gamma=" +
                                   k.gamma_cs.str());
        rep.verdict = FilterVerdict::DefinitelyAdmitted;
        rep.rule = ch.rule;
        rep.certificate = ch.certificate;
    } else if (ch.verdict == FilterVerdict::Excluded && rep.verdict == FilterVerdict::Undecided) {
        rep.verdict = FilterVerdict::Excluded;
        rep.rule = ch.rule;
        rep.certificate = ch.certificate;
    }
    if (!ch.rule.empty()) rep.rules_run.push_back(ch.rule);
    return rep;
}

}  // namespace

FilterReport filters_12(const StandardCase12& c, const RuleMask& mask) {
    if (c.beta_cs.degree() != c.n || c.gamma_cs.degree() != c.n)
        throw std::invalid_argument("case degrees disagree with n");
    return filters_12_impl(c, mask);
}

// ---------------------------------------------------------------------------
// (12) characterizations
// ---------------------------------------------------------------------------

namespace {

FilterReport admitted(const std::string& rule, const std::string& why) {
    return {FilterVerdict::DefinitelyAdmitted, rule, why, {}, {}};
}
FilterReport excluded(const std::string& rule, const std::string& why) {
    return {FilterVerdict::Excluded, rule, why, {}, {}};
}
FilterReport undecided() { return {}; }

// pattern helpers over the parts list
struct Pat {
    const CycleStructure& cs;
    bool is_trivial() const { return cs.parts().size() == 1 && cs.parts()[0].length == 1; }
    bool is_full_cycle(int n) const { return cs.parts().size() == 1 && cs.parts()[0].length == n; }
    // d^m . 1^f with d > 1; returns (d, m, f)
    std::optional<std::array<int, 3>> power_and_fix() const {
        const auto& ps = cs.parts();
        if (ps.size() == 1 && ps[0].length > 1) return std::array<int, 3>{ps[0].length, ps[0].multiplicity, 0};
        if (ps.size() == 2 && ps[0].length > 1 && ps[1].length == 1)
            return std::array<int, 3>{ps[0].length, ps[0].multiplicity, ps[1].multiplicity};
        return std::nullopt;
    }
    // d1^1 . d2^l . 1^f with d1 > d2 > 1; returns (d1, d2, l, f)
    std::optional<std::array<int, 4>> two_lengths_and_fix() const {
        const auto& ps = cs.parts();
        if (ps.size() == 2 && ps[0].multiplicity == 1 && ps[1].length > 1)
            return std::array<int, 4>{ps[0].length, ps[1].length, ps[1].multiplicity, 0};
        if (ps.size() == 3 && ps[0].multiplicity == 1 && ps[1].length > 1 && ps[2].length == 1)
            return std::array<int, 4>{ps[0].length, ps[1].length, ps[1].multiplicity, ps[2].multiplicity};
        return std::nullopt;
    }
};

}  // namespace

FilterReport decide_characterized_12(const StandardCase12& k) {
    const CycleStructure &B = k.beta_cs, &C = k.gamma_cs;
    Pat pb{B}, pc{C};

    // beta trivial: gamma must be 2^r.1^f with f >= 1 (or trivial itself)
    if (pb.is_trivial()) {
        bool shape = true;
        for (const auto& p : C.parts()) shape = shape && (p.length == 1 || p.length == 2);
        if (shape && C.fixed_points() >= 1) return admitted("CHAR-B-TRIVIAL", "gamma is 2^r.1^f, f>=1");
        return excluded("CHAR-B-TRIVIAL", "beta trivial needs gamma 2^r.1^f with f>=1");
    }

    // beta a single n-cycle: every gamma length divides 2n, at most one odd cycle
    if (pb.is_full_cycle(k.n)) {
        bool ok = true;
        for (const auto& p : C.parts()) ok = ok && (2 * k.n) % p.length == 0;
        ok = ok && odd_cycle_count(C) <= 1;
        if (ok) return admitted("CHAR-B-FULLCYC", "gamma lengths divide 2n with at most one odd cycle");
        return excluded("CHAR-B-FULLCYC", "single-cycle beta needs gamma lengths dividing 2n, <=1 odd");
    }

    if (B == C) {
        if (auto pf = pb.power_and_fix()) {
            auto [d, m, f] = *pf;
            if (m == 1) {
                bool ok = d % 2 == 1 ? f <= 1 : f == 0;
                return ok ? admitted("CHAR-EQ-ONECYC", "d.1^f with admissible f")
                          : excluded("CHAR-EQ-ONECYC", "d.1^f requires f<=1 (d odd) or f=0 (d even)");
            }
            if (m == 2) {
                bool ok = d % 2 == 1 ? f <= d + 1 : f == 0;
                return ok ? admitted("CHAR-EQ-TWOCYC", "d^2.1^f with admissible f")
                          : excluded("CHAR-EQ-TWOCYC", "d^2.1^f requires f<=d+1 (d odd) or f=0 (d even)");
            }
            if (f == 0 && d % 2 == 1) return admitted("CHAR-SEMIREG", "equal semi-regular odd structure");
        }
        if (auto tl = pb.two_lengths_and_fix()) {
            auto [d1, d2, l, f] = *tl;
            if (l == 1) {
                bool ok = d1 % d2 == 0 && (d1 / d2) % 2 == 1 && f == 0;
                return ok ? admitted("CHAR-EQ-TWODIST", "d1.d2 with odd ratio, f=0")
                          : excluded("CHAR-EQ-TWODIST", "d1.d2.1^f requires odd integer ratio and f=0");
            }
            if (f == 0 && d1 % 2 == 0 && d1 % d2 == 0 && (d1 / d2) % 2 == 1) {
                bool ok = l <= d1 / d2;
                return ok ? admitted("CHAR-EQ-CHAIN", "d1.d2^l with l <= d1/d2")
                          : excluded("CHAR-EQ-CHAIN", "d1.d2^l requires l <= d1/d2");
            }
        }
    }

    // gamma = d.1^f against beta = (d/2)^2.1^f, d even
    if (auto pg = pc.power_and_fix()) {
        auto [d, m, f] = *pg;
        if (m == 1 && d % 2 == 0 && d >= 4) {
            auto bp = pb.power_and_fix();
            if (bp && (*bp)[0] == d / 2 && (*bp)[1] == 2 && (*bp)[2] == f) {
                bool ok = d % 4 == 0 ? f <= d / 2 : (f >= 1 && f <= d / 2 + 1);
                return ok ? admitted("CHAR-HALF-PAIR", "half-length pair against d.1^f")
                          : excluded("CHAR-HALF-PAIR", "half-length pair bound on f violated");
            }
        }
        // gamma = d^r (d even) against beta = (d/2)^(2r)
        if (f == 0 && d % 2 == 0 && d >= 4) {
            auto bp = pb.power_and_fix();
            if (bp && (*bp)[0] == d / 2 && (*bp)[1] == 2 * m && (*bp)[2] == 0) {
                return d % 4 == 0 ? admitted("CHAR-HALF-SEMIREG", "half-length semi-regular, d = 0 mod 4")
                                  : excluded("CHAR-HALF-SEMIREG", "half-length semi-regular, d = 2 mod 4");
            }
        }
    }

    return undecided();
}

// ---------------------------------------------------------------------------
// (123) exclusion rules
// ---------------------------------------------------------------------------

namespace {

// Q4: n even and every gamma length divisible by the full power of two in n.
std::optional<std::string> rule_Q4(const StandardCase123& k) {
    int u = v2(k.n);
    if (u < 1) return std::nullopt;
    for (const auto& p : k.gamma_cs.parts())
        if (p.length % (1 << u) != 0) return std::nullopt;
    return cert("every cycle length divisible by 2^" + std::to_string(u));
}

// Q5: counting of induced orbits in the band of cycles of one length. The
// escape hypothesis ranges over pairs of cycle lengths d',d'' != d with
// repetition: one cycle can supply both the column and the symbol of a
// triple, so d' = d'' from a single cycle already voids the count.
std::optional<std::string> rule_Q5(const StandardCase123& k) {
    std::vector<int> lengths;
    for (const auto& p : k.gamma_cs.parts()) lengths.push_back(p.length);
    for (const auto& p : k.gamma_cs.parts()) {
        int d = p.length, r = p.multiplicity;
        bool pair_exists = false;
        for (size_t x = 0; x < lengths.size() && !pair_exists; ++x)
            for (size_t y = x; y < lengths.size() && !pair_exists; ++y) {
                int da = lengths[x], db = lengths[y];
                if (da == d || db == d) continue;
                long long l = lcm2(da, db);
                if (lcm2(d, da) == l && lcm2(d, db) == l) pair_exists = true;
            }
        if (pair_exists) continue;
        if (r == 1 && (k.n + d) % 3 == 1)
            return cert("single cycle of length " + std::to_string(d) + " with n+d = 1 mod 3");
        if (d % 3 == 0 && (k.n * r) % 3 != 0)
            return cert("3 | " + std::to_string(d) + " but 3 does not divide n*r");
    }
    return std::nullopt;
}

// Q6: semi-regular gamma d^r: 3|d forces 3|r, 6|d forces 6|r.
std::optional<std::string> rule_Q6(const StandardCase123& k) {
    if (!k.gamma_cs.semi_regular()) return std::nullopt;
    int d = k.gamma_cs.parts()[0].length, r = k.gamma_cs.parts()[0].multiplicity;
    if (d % 3 == 0 && r % 3 != 0) return cert("3 | d but 3 does not divide r");
    if (d % 6 == 0 && r % 6 != 0) return cert("6 | d but 6 does not divide r");
    return std::nullopt;
}

// Q7: the isolated 5^2 exclusion at n=10.
std::optional<std::string> rule_Q7(const StandardCase123& k) {
    if (k.n == 10 && k.gamma_cs.parts().size() == 1 && k.gamma_cs.parts()[0].length == 5 &&
        k.gamma_cs.parts()[0].multiplicity == 2)
        return cert("cycle structure 5^2 at n=10");
    return std::nullopt;
}

// Q3: nontrivial gamma with fixed points forces a subsquare on them.
std::optional<std::string> rule_Q3(const StandardCase123& k) {
    int f = k.gamma_cs.fixed_points();
    if (f == k.n) return std::nullopt;
    if (f >= 1 && 2 * f > k.n) return cert("fix(gamma)=" + std::to_string(f) + " > n/2");
    return std::nullopt;
}

// Q1: block feasibility as in R1 but with the unscaled lcm conditions.
std::optional<std::string> rule_Q1(const StandardCase123& k) {
    auto classes = class_list(k.gamma_cs);
    for (const auto& p : k.gamma_cs.parts()) {
        long long a = p.length;
        if (!band_feasible(a, classes, classes, a * (long long)k.n, &lcm_compatible_123))
            return cert("no symbol assignment fills the row band of length " + std::to_string(p.length));
    }
    return std::nullopt;
}

FilterReport filters_123_impl(const StandardCase123& k, const RuleMask& mask);

// Q2: forced subsquares on divisor-closed row sets, with recursion; at order
// exactly n/2 the complementary block is a subsquare on the same symbols, so
// its bands must still be fillable from them.
std::optional<std::string> rule_Q2(const StandardCase123& k, const RuleMask& mask) {
    for (const auto& p : k.gamma_cs.parts()) {
        auto lam = divisor_set(p.length);
        int s = count_in(k.gamma_cs, lam);
        std::string tag = "divisors(" + std::to_string(p.length) + ")";
        if (s == k.n) continue;
        if (2 * s > k.n) return cert(tag + ": subsquare order " + std::to_string(s) + " in (n/2, n)");
        StandardCase123 inner{s, restrict_to(k.gamma_cs, lam, true)};
        FilterReport r = filters_123_impl(inner, mask);
        if (r.verdict == FilterVerdict::Excluded)
            return cert(tag + ": forced subsquare excluded by " + r.rule);
        if (2 * s == k.n) {
            auto outside = class_list(restrict_to(k.gamma_cs, lam, false));
            auto inside = class_list(restrict_to(k.gamma_cs, lam, true));
            for (auto [a, m] : outside) {
                (void)m;
                if (!band_feasible(a, outside, inside, (long long)a * s, &lcm_compatible_123))
                    return cert(tag + ": complementary block not fillable from the subsquare symbols");
            }
        }
    }
    return std::nullopt;
}

FilterReport filters_123_impl(const StandardCase123& k, const RuleMask& mask) {
    FilterReport rep;
    auto run = [&](const char* id, std::optional<std::string> bad) {
        if (!mask.enabled(id)) return;
        rep.rules_run.push_back(id);
        if (bad) {
            rep.violated.push_back(id);
            if (rep.verdict == FilterVerdict::Undecided) {
                rep.verdict = FilterVerdict::Excluded;
                rep.rule = id;
                rep.certificate = *bad;
            }
        }
    };
    run("Q4", rule_Q4(k));
    run("Q5", rule_Q5(k));
    run("Q6", rule_Q6(k));
    run("Q7", rule_Q7(k));
    run("Q3", rule_Q3(k));
    run("Q1", rule_Q1(k));
    if (mask.enabled("Q2")) {
        rep.rules_run.push_back("Q2");
        if (auto bad = rule_Q2(k, mask)) {
            rep.violated.push_back("Q2");
            if (rep.verdict == FilterVerdict::Undecided) {
                rep.verdict = FilterVerdict::Excluded;
                rep.rule = "Q2";
                rep.certificate = *bad;
            }
        }
    }

    FilterReport ch = decide_characterized_123(k);
    if (ch.verdict == FilterVerdict::DefinitelyAdmitted) {
        if (rep.verdict == FilterVerdict::Excluded)
            throw std::logic_error("filters_123: rule " + rep.rule + " contradicts " + ch.rule + " on n=" +
                                   std::to_string(k.n) + " gamma=" + k.gamma_cs.str());
        rep.verdict = FilterVerdict::DefinitelyAdmitted;
        rep.rule = ch.rule;
        rep.certificate = ch.certificate;
    } else if (ch.verdict == FilterVerdict::Excluded && rep.verdict == FilterVerdict::Undecided) {
        rep.verdict = FilterVerdict::Excluded;
        rep.rule = ch.rule;
        rep.certificate = ch.certificate;
    }
    if (!ch.rule.empty()) rep.rules_run.push_back(ch.rule);
    return rep;
}

}  // namespace

FilterReport filters_123(const StandardCase123& c, const RuleMask& mask) {
    if (c.gamma_cs.degree() != c.n) throw std::invalid_argument("case degree disagrees with n");
    return filters_123_impl(c, mask);
}

// ---------------------------------------------------------------------------
// (123) characterizations
// ---------------------------------------------------------------------------

FilterReport decide_characterized_123(const StandardCase123& k) {
    const CycleStructure& C = k.gamma_cs;
    Pat pc{C};

    if (pc.is_trivial()) return admitted("CHAR-G-TRIVIAL", "totally symmetric square");

    if (pc.is_full_cycle(k.n)) {
        return k.n % 6 == 1 ? admitted("CHAR-G-FULLCYC", "n = 1 mod 6")
                            : excluded("CHAR-G-FULLCYC", "single n-cycle requires n = 1 mod 6");
    }

    if (auto pf = pc.power_and_fix()) {
        auto [d, m, f] = *pf;
        if (m == 3 && f == 0) {
            return d % 2 == 1 ? admitted("CHAR-G-TRIPLE", "d^3 with d odd")
                              : excluded("CHAR-G-TRIPLE", "d^3 requires d odd");
        }
        // d^3.1^f, f>=1: the class of a (3d).1^f diagonal symmetry; member for
        // every f <= 3d (larger f dies on the block count, see Q1)
        if (m == 3 && f >= 1 && f <= 3 * d)
            return admitted("CHAR-G-TRIPLE-FIX", "d^3.1^f with 1 <= f <= 3d");
        if (m == 1 && d % 3 != 0 && f <= d) {
            bool ok = false;
            if (f % 3 == 0 && d % 3 == 1 && (f > 0 || d % 2 == 1)) ok = true;
            if (f % 3 == 1 && !(f == 1 && d % 6 == 5)) ok = true;
            if (f % 3 == 2 && d % 3 == 2) ok = true;
            return ok ? admitted("CHAR-G-ONECYC", "d.1^f admissible residue class")
                      : excluded("CHAR-G-ONECYC", "d.1^f residue condition violated");
        }
    }

    return undecided();
}

}  // namespace paratopia
