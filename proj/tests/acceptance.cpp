// Acceptance suite: one pass/fail line per criterion. The full-range table
// reproduction (criterion 2) runs only with --full; everything else is part
// of the default ctest run.
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "paratopia/catalogue.hpp"
#include "paratopia/construct.hpp"
#include "paratopia/orbits.hpp"
#include "paratopia/search.hpp"
#include "paratopia/tables.hpp"

using namespace paratopia;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& note = "") {
    std::cout << (pass ? "PASS" : "FAIL") << ": criterion " << id << " - " << name;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(std::move(img));
}

Paratopism random_par(int n, std::mt19937& rng) {
    return Paratopism(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng), s3_all()[rng() % 6]);
}

struct CaseRecord {
    FilterReport report;
    bool member = false;
};

// one catalogue order decided with per-case reports kept for the ablation
std::map<std::pair<std::string, std::string>, CaseRecord> decide_order_12(int n) {
    std::map<std::pair<std::string, std::string>, CaseRecord> out;
    for (const auto& [b, g] : enumerate_candidates_12(n)) {
        CaseRecord rec;
        rec.report = filters_12({n, b, g});
        Paratopism sigma{Permutation(n), canonical_permutation(b), canonical_permutation(g), S3::x12};
        MembershipVerdict v = decide_membership(sigma);
        rec.member = v.decision == Decision::Member;
        out[{b.str(), g.str()}] = rec;
    }
    return out;
}

std::map<std::string, CaseRecord> decide_order_123(int n) {
    std::map<std::string, CaseRecord> out;
    for (const auto& g : enumerate_candidates_123(n)) {
        CaseRecord rec;
        rec.report = filters_123({n, g});
        Paratopism sigma{Permutation(n), Permutation(n), canonical_permutation(g), S3::r123};
        MembershipVerdict v = decide_membership(sigma);
        rec.member = v.decision == Decision::Member;
        out[g.str()] = rec;
    }
    return out;
}

// Criterion 1/2: table reproduction over a range of orders. Discrepancies
// that coincide with the certified-omission list are re-proved on the spot
// (witness search + verification) and annotated, so a red result separates
// "known defect of the printed tables" from "pipeline bug".
bool reproduce_tables(int n_lo, int n_hi, std::string& note) {
    bool ok = true;
    long long undecided = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (DeltaShape shape : {DeltaShape::D12, DeltaShape::D123}) {
            ClassifyOptions opts;
            opts.jobs = 2;
            auto entries = classify(n, shape, opts);
            for (const auto& e : entries)
                if (!e.decided) ++undecided;
            DiffReport rep = diff_against_published(entries, shape == DeltaShape::D12 ? (n <= 12 ? 1 : 2) : 3);
            if (!rep.empty()) {
                ok = false;
                for (auto& m : rep.missing) note += " missing " + m + ";";
                for (auto& m : rep.extra) note += " extra " + m + ";";
                for (const auto& e : entries) {
                    if (!e.decided || !e.member || e.delta != "12") continue;
                    if (!PublishedTables::verified_omissions_12().count({e.n, e.beta, e.gamma})) continue;
                    Paratopism sigma{Permutation(n), canonical_permutation(CycleStructure::parse(e.beta)),
                                     canonical_permutation(CycleStructure::parse(e.gamma)), S3::x12};
                    MembershipVerdict v = decide_membership(sigma);
                    bool certified = v.decision == Decision::Member && v.witness &&
                                     is_autoparatopism(v.sigma_std, *v.witness);
                    note += std::string(" [") + e.beta + "|" + e.gamma + " at n=" + std::to_string(e.n) +
                            (certified ? " re-verified: member missing from the printed table]"
                                       : " FAILED re-verification]");
                }
            }
        }
    }
    if (undecided) {
        ok = false;
        note += " " + std::to_string(undecided) + " undecided";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--full") == 0) full = true;

    // 1. table reproduction, n <= 12
    {
        auto t0 = clk::now();
        std::string note;
        bool ok = reproduce_tables(2, 12, note);
        double secs = std::chrono::duration<double>(clk::now() - t0).count();
        report(1, "table reproduction for n <= 12", ok,
               note.empty() ? std::to_string(secs) + " s" : note);
    }

    // 2. table reproduction, n <= 17 (extended)
    if (full) {
        auto t0 = clk::now();
        std::string note;
        bool ok = reproduce_tables(13, 17, note);
        double secs = std::chrono::duration<double>(clk::now() - t0).count();
        report(2, "table reproduction for n <= 17", ok,
               note.empty() ? std::to_string(secs) + " s" : note);
    } else {
        std::cout << "SKIP: criterion 2 - full-range reproduction (run with --full)" << std::endl;
    }

    // 3. oracle equivalence for n <= 5, all delta shapes
    {
        bool ok = true;
        std::string note;
        std::mt19937 rng(1);
        for (int n = 1; n <= 5 && ok; ++n) {
            auto brute = brute_force_par(n);
            for (const auto& e : brute) {
                MembershipVerdict v = decide_membership(e.rep);
                if (v.decision == Decision::Undecided ||
                    (v.decision == Decision::Member) != e.member) {
                    ok = false;
                    note = "disagreement at n=" + std::to_string(n) + " rep " + e.rep.str();
                    break;
                }
                if (v.witness && !is_autoparatopism(v.sigma_std, *v.witness)) {
                    ok = false;
                    note = "witness fails verification for " + e.rep.str();
                    break;
                }
                // normalized shapes: conjugates (including (13),(23),(132)) agree
                for (int t = 0; t < 2; ++t) {
                    Paratopism tau = random_par(n, rng);
                    Paratopism conj = compose_par(compose_par(inverse_par(tau), e.rep), tau);
                    MembershipVerdict vc = decide_membership(conj);
                    if ((vc.decision == Decision::Member) != e.member) {
                        ok = false;
                        note = "conjugate disagreement at n=" + std::to_string(n);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        report(3, "oracle equivalence for n <= 5", ok, note);
    }

    // 4. orbit formulas
    {
        bool ok = true;
        std::string note;
        for (int n = 1; n <= 10 && ok; ++n)
            for (const auto& cs : partitions(n)) {
                Permutation beta = canonical_permutation(cs);
                auto dec = cell_orbits_12(beta);
                // brute closure sizes
                std::map<long long, int> brute;
                {
                    std::set<std::pair<int, int>> seen;
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                            if (seen.count({i, j})) continue;
                            long long len = 0;
                            int r = i, c = j;
                            do {
                                seen.insert({r, c});
                                ++len;
                                int nr = beta[c], nc = r;
                                r = nr;
                                c = nc;
                            } while (!(r == i && c == j));
                            ++brute[len];
                        }
                }
                std::map<long long, int> got;
                for (auto& o : dec.orbits) ++got[(long long)o.size()];
                if (got != brute) {
                    ok = false;
                    note = "cell partition mismatch at beta=" + cs.str();
                    break;
                }
                // block census against the formulas
                auto cycles = beta.cycles();
                std::map<std::pair<int, int>, std::map<long long, int>> census;
                for (size_t k = 0; k < dec.orbits.size(); ++k)
                    ++census[dec.block[k]][(long long)dec.orbits[k].size()];
                for (size_t s = 1; s <= cycles.size() && ok; ++s)
                    for (size_t t = s; t <= cycles.size() && ok; ++t) {
                        long long ds = (long long)cycles[s - 1].size(), dt = (long long)cycles[t - 1].size();
                        std::map<long long, int> expect;
                        if (s == t) {
                            if (ds % 2 == 1) {
                                expect[ds] += 1;
                                if (ds > 1) expect[2 * ds] = (int)((ds - 1) / 2);
                            } else {
                                expect[2 * ds] = (int)(ds / 2);
                            }
                        } else {
                            expect[2 * lcm2(ds, dt)] = (int)std::gcd(ds, dt);
                        }
                        if (census[{(int)s, (int)t}] != expect) {
                            ok = false;
                            note = "census mismatch at beta=" + cs.str();
                        }
                    }
                if (!ok) break;
            }
        for (int n = 1; n <= 8 && ok; ++n)
            for (const auto& cs : partitions(n)) {
                Permutation g = canonical_permutation(cs);
                std::vector<int> cyc_of(n + 1);
                int idx = 0;
                for (const auto& c : g.cycles()) {
                    ++idx;
                    for (int p : c) cyc_of[p] = idx;
                }
                for (int i = 1; i <= n && ok; ++i)
                    for (int j = 1; j <= n && ok; ++j)
                        for (int k = 1; k <= n && ok; ++k) {
                            auto orb = triple_orbit_123(g, {i, j, k});
                            long long da = g.cycle_length_of(i), db = g.cycle_length_of(j),
                                      dc = g.cycle_length_of(k);
                            long long generic = 3 * lcm2(lcm2(da, db), dc);
                            long long len = (long long)orb.triples.size();
                            bool same = cyc_of[i] == cyc_of[j] && cyc_of[j] == cyc_of[k];
                            bool fine = same ? (da % 3 == 0 ? len == 3 * da : (len == 3 * da || len == da))
                                             : len == generic;
                            if (!fine) {
                                ok = false;
                                note = "triple orbit length mismatch at gamma=" + cs.str();
                            }
                        }
                if (!ok) break;
            }
        report(4, "orbit censuses match the block formulas", ok, note);
    }

    // 5. golden squares
    {
        bool ok = true;
        std::string note;
        auto bytes = [](const std::string& path) {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream out;
            out << in.rdbuf();
            return out.str();
        };
        auto check = [&](const Witness& w, const std::string& file) {
            if (!is_autoparatopism(w.sigma, w.square) || w.square.str() != bytes("data/golden/" + file)) {
                ok = false;
                note += " " + file;
            }
        };
        check(build_pairing_square(4, 2), "n10_d12_b1^10_g2^4.1^2.ls");
        check(build_pairing_square(3, 5), "n11_d12_b1^11_g2^3.1^5.ls");
        check(build_aaa_one_cycle_12(6, 1), "n7_d12_b3^2.1_g6.1.ls");
        check(build_aaa_one_cycle_12(6, 4), "n10_d12_b3^2.1^4_g6.1^4.ls");
        check(build_equal_double_12(5, 1), "n11_d12_b5^2.1_g5^2.1.ls");
        check(witness_order10_123(), "n10_d123_g3^3.1.ls");
        report(5, "published squares regenerated byte-identically", ok, note);
    }

    // 6. filter soundness ablation
    {
        bool ok = true;
        std::string note;
        // nonzero fire counters somewhere at n <= 17
        std::map<std::string, long long> fires;
        for (int n = 2; n <= 17; ++n) {
            for (auto& [r, c] : rule_fire_counts(n, DeltaShape::D12)) fires[r] += c;
            for (auto& [r, c] : rule_fire_counts(n, DeltaShape::D123)) fires[r] += c;
        }
        for (const auto& id : all_rule_ids_12())
            if (fires[id] == 0) {
                ok = false;
                note += " no fire: " + id;
            }
        for (const auto& id : all_rule_ids_123())
            if (fires[id] == 0) {
                ok = false;
                note += " no fire: " + id;
            }

        // member-set stability: rerun every case whose filter outcome changes
        // under a single-rule mask; search must keep the member set intact
        for (int n = 2; n <= 12 && ok; ++n) {
            auto base12 = decide_order_12(n);
            auto base123 = decide_order_123(n);
            auto masked_rerun = [&](const std::string& rule) {
                RuleMask mask;
                mask.disable(rule);
                DecideOptions opts;
                opts.mask = mask;
                for (const auto& [key, rec] : base12) {
                    FilterReport masked = filters_12(
                        {n, CycleStructure::parse(key.first), CycleStructure::parse(key.second)}, mask);
                    if ((masked.verdict == FilterVerdict::Excluded) ==
                        (rec.report.verdict == FilterVerdict::Excluded))
                        continue;
                    Paratopism sigma{Permutation(n), canonical_permutation(CycleStructure::parse(key.first)),
                                     canonical_permutation(CycleStructure::parse(key.second)), S3::x12};
                    MembershipVerdict v = decide_membership(sigma, opts);
                    if ((v.decision == Decision::Member) != rec.member) {
                        ok = false;
                        note += " rule " + rule + " changes n=" + std::to_string(n) + " " + key.first + "/" +
                                key.second;
                        return;
                    }
                }
                for (const auto& [key, rec] : base123) {
                    FilterReport masked = filters_123({n, CycleStructure::parse(key)}, mask);
                    if ((masked.verdict == FilterVerdict::Excluded) ==
                        (rec.report.verdict == FilterVerdict::Excluded))
                        continue;
                    Paratopism sigma{Permutation(n), Permutation(n),
                                     canonical_permutation(CycleStructure::parse(key)), S3::r123};
                    MembershipVerdict v = decide_membership(sigma, opts);
                    if ((v.decision == Decision::Member) != rec.member) {
                        ok = false;
                        note += " rule " + rule + " changes n=" + std::to_string(n) + " " + key;
                        return;
                    }
                }
            };
            for (const auto& id : all_rule_ids_12()) {
                masked_rerun(id);
                if (!ok) break;
            }
            for (const auto& id : all_rule_ids_123()) {
                if (!ok) break;
                masked_rerun(id);
            }
        }
        report(6, "single-rule ablation leaves the member sets unchanged", ok, note);
    }

    // 7. group-action property suite
    {
        bool ok = true;
        std::string note;
        std::mt19937 rng(20240817);
        const int trials = 10000;
        for (int t = 0; t < trials && ok; ++t) {
            int n = 2 + (int)(rng() % 19);  // degrees <= 20
            LatinSquare L = act_square(random_par(n, rng), cyclic_square(n));
            Paratopism s1 = random_par(n, rng), s2 = random_par(n, rng);
            if (act_square(compose_par(s1, s2), L) != act_square(s2, act_square(s1, L))) {
                ok = false;
                note = "composition law";
            }
        }
        for (int t = 0; t < trials && ok; ++t) {
            int n = 2 + (int)(rng() % 19);
            Paratopism s = random_par(n, rng), tau = random_par(n, rng);
            if (!(conjugacy_invariant(compose_par(compose_par(inverse_par(tau), s), tau)) ==
                  conjugacy_invariant(s))) {
                ok = false;
                note = "conjugacy invariant stability";
            }
        }
        for (int t = 0; t < trials && ok; ++t) {
            int n = 2 + (int)(rng() % 19);
            Paratopism f = standard_form(random_par(n, rng));
            if (standard_form(f) != f) {
                ok = false;
                note = "standard form idempotence";
            }
        }
        for (int t = 0; t < trials && ok; ++t) {
            int n = 2 + (int)(rng() % 19);
            LatinSquare L = act_square(random_par(n, rng), cyclic_square(n));
            if (LatinSquare::check(n, act_square(random_par(n, rng), L).cells()).has_value()) {
                ok = false;
                note = "Latin property preservation";
            }
        }
        report(7, "randomized group-action properties", ok, note);
    }

    std::cout << (failures ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: OK") << std::endl;
    return failures ? 1 : 0;
}
