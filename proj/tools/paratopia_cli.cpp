// Command-line front end: verify, orbits, classify, search, catalogue, diff,
// conjugacy. Exit codes: 0 positive answer, 1 negative mathematical answer,
// 2 usage or parse error, 3 budget exhausted.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paratopia/catalogue.hpp"
#include "paratopia/construct.hpp"
#include "paratopia/orbits.hpp"
#include "paratopia/search.hpp"
#include "paratopia/tables.hpp"

using namespace paratopia;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

unsigned long long env_budget() {
    const char* v = std::getenv("PARATOPIA_BUDGET");
    return v ? std::strtoull(v, nullptr, 10) : 0;
}

LatinSquare read_square(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return LatinSquare::read(in);
}

PartialLatinSquare read_partial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    int n;
    if (!(in >> n) || n < 1) throw std::invalid_argument("bad partial square file");
    PartialLatinSquare out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("truncated partial square file");
            if (tok == "." || tok == "0") continue;
            out.set(i, j, std::stoi(tok));
        }
    return out;
}

DeltaShape parse_shape(const std::string& s) {
    if (s == "12") return DeltaShape::D12;
    if (s == "123") return DeltaShape::D123;
    throw std::invalid_argument("delta must be 12 or 123");
}

json verdict_json(const MembershipVerdict& v) {
    json j;
    j["member"] = v.decision == Decision::Undecided ? json(nullptr) : json(v.decision == Decision::Member);
    j["method"] = v.method;
    j["rule"] = v.rule.empty() ? json(nullptr) : json(v.rule);
    j["nodes"] = v.nodes;
    j["paratopism"] = v.sigma_std.str();
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"autoparatopism toolkit: decide, construct and catalogue Latin-square symmetries"};
    app.require_subcommand(1);

    // verify
    std::string square_file, par_spec;
    auto* verify = app.add_subcommand("verify", "check a paratopism against a square");
    verify->add_option("--square", square_file, "Latin square file")->required();
    verify->add_option("--paratopism", par_spec, "paratopism spec 'a=..; b=..; c=..; d=..'")->required();

    // orbits
    std::string orbit_cs;
    int orbit_n = 0;
    std::string orbit_delta = "12";
    auto* orbits_cmd = app.add_subcommand("orbits", "print the orbit census of a cycle structure");
    orbits_cmd->add_option("--beta", orbit_cs, "cycle structure, e.g. 5^2")->required();
    orbits_cmd->add_option("--n", orbit_n, "degree override (must match)");
    orbits_cmd->add_option("--delta", orbit_delta, "12 or 123")->required();

    // classify
    int cl_n = 0;
    std::string cl_delta, cl_beta, cl_gamma, cl_witness_out;
    bool cl_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "decide one conjugacy class");
    classify_cmd->add_option("--n", cl_n)->required();
    classify_cmd->add_option("--delta", cl_delta)->required();
    classify_cmd->add_option("--beta", cl_beta, "beta cycle structure (12 only)");
    classify_cmd->add_option("--gamma", cl_gamma)->required();
    classify_cmd->add_option("--witness-out", cl_witness_out, "write the witness square here");
    classify_cmd->add_flag("--json", cl_json);

    // search
    std::string se_par, se_seed;
    unsigned long long se_budget = 0;
    bool se_json = false;
    auto* search_cmd = app.add_subcommand("search", "backtracking search for a witness square");
    search_cmd->add_option("--paratopism", se_par)->required();
    search_cmd->add_option("--seed", se_seed, "partial square file ('.' or 0 = empty cell)");
    search_cmd->add_option("--budget", se_budget, "node limit (0 = unlimited)");
    search_cmd->add_flag("--json", se_json);

    // catalogue
    int ca_n = 0, ca_jobs = 1;
    std::string ca_delta, ca_out;
    bool ca_resume = false, ca_json = false;
    unsigned long long ca_budget = 0;
    auto* cat_cmd = app.add_subcommand("catalogue", "classify every candidate class of one order");
    cat_cmd->add_option("--n", ca_n)->required();
    cat_cmd->add_option("--delta", ca_delta)->required();
    cat_cmd->add_option("--out", ca_out, "output directory (JSON lines + witnesses)");
    cat_cmd->add_option("--jobs", ca_jobs, "parallel case workers");
    cat_cmd->add_option("--budget", ca_budget, "per-case node limit");
    cat_cmd->add_flag("--resume", ca_resume, "reuse decided cases from the output file");
    cat_cmd->add_flag("--json", ca_json, "print JSON instead of the table layout");

    // diff
    std::string di_file;
    int di_table = 0;
    auto* diff_cmd = app.add_subcommand("diff", "compare a computed catalogue with the published tables");
    diff_cmd->add_option("--computed", di_file, "catalogue JSON-lines file")->required();
    diff_cmd->add_option("--table", di_table, "1, 2 or 3")->required();

    // conjugacy
    std::string cj_p1, cj_p2;
    auto* conj_cmd = app.add_subcommand("conjugacy", "compare conjugacy invariants of two paratopisms");
    conj_cmd->add_option("--p1", cj_p1)->required();
    conj_cmd->add_option("--p2", cj_p2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            LatinSquare L = read_square(square_file);
            Paratopism s = Paratopism::parse(par_spec);
            if (s.degree() != L.order()) throw std::invalid_argument("degree mismatch");
            bool ok = is_autoparatopism(s, L);
            std::cout << (ok ? "autoparatopism" : "not an autoparatopism") << "\n";
            return ok ? kExitYes : kExitNo;
        }
        if (*orbits_cmd) {
            CycleStructure cs = CycleStructure::parse(orbit_cs);
            if (orbit_n && orbit_n != cs.degree()) throw std::invalid_argument("--n disagrees with the structure degree");
            Permutation p = canonical_permutation(cs);
            if (orbit_delta == "12") {
                auto dec = cell_orbits_12(p);
                std::map<std::pair<long long, bool>, int> census;
                for (size_t k = 0; k < dec.orbits.size(); ++k)
                    ++census[{(long long)dec.orbits[k].size(), (bool)dec.short_orbit[k]}];
                std::cout << "cell orbits of (e,beta,gamma;(12)) with beta = " << cs.str() << "\n";
                for (auto& [key, cnt] : census)
                    std::cout << cnt << " orbit(s) of length " << key.first << (key.second ? " (short)" : "")
                              << "\n";
                std::cout << "total " << dec.orbits.size() << " orbits\n";
            } else if (orbit_delta == "123") {
                auto census = orbit_census_123(p);
                std::cout << "triple-orbit census of (e,e,gamma;(123)) with gamma = " << cs.str() << "\n";
                for (const auto& c : census.classes) {
                    std::cout << "cycles (" << c.a << "," << c.b << "," << c.c << "): generic length "
                              << c.generic_length;
                    if (c.short_possible) std::cout << ", short orbit of length " << c.short_length << " possible";
                    std::cout << "\n";
                }
            } else {
                throw std::invalid_argument("delta must be 12 or 123");
            }
            return kExitYes;
        }
        if (*classify_cmd) {
            DeltaShape shape = parse_shape(cl_delta);
            if (shape == DeltaShape::D12 && cl_beta.empty())
                throw std::invalid_argument("--beta is required for delta 12");
            CycleStructure g = CycleStructure::parse(cl_gamma);
            Paratopism sigma =
                shape == DeltaShape::D12
                    ? Paratopism(Permutation(cl_n), canonical_permutation(CycleStructure::parse(cl_beta)),
                                 canonical_permutation(g), S3::x12)
                    : Paratopism(Permutation(cl_n), Permutation(cl_n), canonical_permutation(g), S3::r123);
            if (sigma.degree() != cl_n) throw std::invalid_argument("structure degree disagrees with --n");
            DecideOptions opts;
            opts.budget = env_budget();
            MembershipVerdict v = decide_membership(sigma, opts);
            if (!cl_witness_out.empty() && v.witness) {
                std::ofstream out(cl_witness_out);
                v.witness->write(out);
            }
            if (cl_json) {
                json j = verdict_json(v);
                if (!cl_witness_out.empty() && v.witness) j["witness"] = cl_witness_out;
                FilterReport rep = shape == DeltaShape::D12
                                       ? filters_12({cl_n, CycleStructure::parse(cl_beta), g})
                                       : filters_123({cl_n, g});
                j["filters"] = json::parse(filter_report_json(rep));
                std::cout << j.dump(2) << "\n";
            } else if (v.decision == Decision::Member) {
                std::cout << "member (" << v.method << ")";
                if (!cl_witness_out.empty()) std::cout << ", witness written to " << cl_witness_out;
                std::cout << "\n";
            } else if (v.decision == Decision::NonMember) {
                std::cout << "non-member";
                if (!v.rule.empty()) std::cout << " (rule " << v.rule << ")";
                std::cout << "\n";
            } else {
                std::cout << "undecided: budget exhausted after " << v.nodes << " nodes\n";
            }
            return v.decision == Decision::Member ? kExitYes
                 : v.decision == Decision::NonMember ? kExitNo : kExitBudget;
        }
        if (*search_cmd) {
            Paratopism sigma = Paratopism::parse(se_par);
            PartialLatinSquare seed =
                se_seed.empty() ? PartialLatinSquare(sigma.degree()) : read_partial(se_seed);
            SearchOptions opts;
            opts.budget = se_budget ? se_budget : env_budget();
            SearchResult r = complete_backtrack(sigma, seed, opts);
            if (se_json) {
                json j;
                j["status"] = r.status == SearchStatus::FoundWitness ? "found"
                            : r.status == SearchStatus::NoCompletion ? "none" : "budget";
                j["nodes"] = r.nodes;
                std::cout << j.dump(2) << "\n";
            }
            if (r.status == SearchStatus::FoundWitness) {
                if (!se_json) r.witness->write(std::cout);
                return kExitYes;
            }
            if (!se_json)
                std::cout << (r.status == SearchStatus::NoCompletion ? "no completion" : "budget exhausted")
                          << " after " << r.nodes << " nodes\n";
            return r.status == SearchStatus::NoCompletion ? kExitNo : kExitBudget;
        }
        if (*cat_cmd) {
            DeltaShape shape = parse_shape(ca_delta);
            ClassifyOptions opts;
            opts.jobs = ca_jobs;
            opts.budget = ca_budget ? ca_budget : env_budget();
            opts.out_dir = ca_out;
            opts.resume = ca_resume;
            auto entries = classify(ca_n, shape, opts);
            std::cout << (ca_json ? emit_json(entries) : emit_text(entries));
            bool undecided = std::any_of(entries.begin(), entries.end(), [](auto& e) { return !e.decided; });
            return undecided ? kExitBudget : kExitYes;
        }
        if (*diff_cmd) {
            if (di_table < 1 || di_table > 3) throw std::invalid_argument("--table must be 1, 2 or 3");
            auto entries = parse_jsonl(di_file);
            DiffReport rep = diff_against_published(entries, di_table);
            for (const auto& m : rep.missing) std::cout << "missing: " << m << "\n";
            for (const auto& e : rep.extra) std::cout << "extra: " << e << "\n";
            std::cout << (rep.empty() ? "tables reproduced exactly" : "differences found") << "\n";
            return rep.empty() ? kExitYes : kExitNo;
        }
        if (*conj_cmd) {
            Paratopism p1 = Paratopism::parse(cj_p1), p2 = Paratopism::parse(cj_p2);
            bool eq = p1.degree() == p2.degree() && conjugacy_invariant(p1) == conjugacy_invariant(p2);
            std::cout << (eq ? "conjugate" : "not conjugate") << "\n";
            std::cout << "p1: " << conjugacy_invariant(p1).str() << "\n";
            std::cout << "p2: " << conjugacy_invariant(p2).str() << "\n";
            return eq ? kExitYes : kExitNo;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
