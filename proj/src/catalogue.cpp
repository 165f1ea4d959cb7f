#include "paratopia/catalogue.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "paratopia/tables.hpp"

#ifdef PARATOPIA_OPENMP
#include <omp.h>
#endif

namespace paratopia {

namespace fs = std::filesystem;
using nlohmann::json;

std::string delta_shape_str(DeltaShape s) { return s == DeltaShape::D12 ? "12" : "123"; }

std::vector<std::pair<CycleStructure, CycleStructure>> enumerate_candidates_12(int n) {
    auto parts = partitions(n);
    std::vector<std::pair<CycleStructure, CycleStructure>> out;
    out.reserve(parts.size() * parts.size());
    for (const auto& b : parts)
        for (const auto& g : parts) out.emplace_back(b, g);
    return out;
}

std::vector<CycleStructure> enumerate_candidates_123(int n) { return partitions(n); }

namespace {

std::string entry_key(const CatalogueEntry& e) { return e.delta + "|" + e.beta + "|" + e.gamma; }

json entry_json(const CatalogueEntry& e) {
    json j;
    j["n"] = e.n;
    j["delta"] = e.delta;
    if (e.delta == "12") j["beta"] = e.beta; else j["beta"] = nullptr;
    j["gamma"] = e.gamma;
    if (e.decided) j["member"] = e.member; else j["member"] = nullptr;
    j["method"] = e.method.empty() ? json(nullptr) : json(e.method);
    j["rule"] = e.rule.empty() ? json(nullptr) : json(e.rule);
    j["witness"] = e.witness_path.empty() ? json(nullptr) : json(e.witness_path);
    j["nodes"] = e.nodes;
    return j;
}

CatalogueEntry entry_from_json(const json& j) {
    CatalogueEntry e;
    e.n = j.at("n").get<int>();
    e.delta = j.at("delta").get<std::string>();
    if (j.contains("beta") && !j["beta"].is_null()) e.beta = j["beta"].get<std::string>();
    e.gamma = j.at("gamma").get<std::string>();
    e.decided = !j.at("member").is_null();
    if (e.decided) e.member = j["member"].get<bool>();
    if (!j.at("method").is_null()) e.method = j["method"].get<std::string>();
    if (!j.at("rule").is_null()) e.rule = j["rule"].get<std::string>();
    if (j.contains("witness") && !j["witness"].is_null()) e.witness_path = j["witness"].get<std::string>();
    if (j.contains("nodes")) e.nodes = j["nodes"].get<unsigned long long>();
    return e;
}

CatalogueEntry run_case(int n, DeltaShape shape, const CycleStructure& beta, const CycleStructure& gamma,
                        const ClassifyOptions& opts) {
    CatalogueEntry e;
    e.n = n;
    e.delta = delta_shape_str(shape);
    e.gamma = gamma.str();
    Paratopism sigma;
    if (shape == DeltaShape::D12) {
        e.beta = beta.str();
        sigma = Paratopism(Permutation(n), canonical_permutation(beta), canonical_permutation(gamma), S3::x12);
    } else {
        sigma = Paratopism(Permutation(n), Permutation(n), canonical_permutation(gamma), S3::r123);
    }
    DecideOptions d;
    d.budget = opts.budget;
    d.mask = opts.mask;
    MembershipVerdict v = decide_membership(sigma, d);
    e.decided = v.decision != Decision::Undecided;
    e.member = v.decision == Decision::Member;
    e.method = v.method;
    e.rule = v.rule;
    e.nodes = v.nodes;
    if (e.member && !opts.out_dir.empty() && opts.write_witnesses && v.witness) {
        fs::path dir = fs::path(opts.out_dir) / "witnesses";
        fs::create_directories(dir);
        fs::path file = dir / witness_file_name(e);
        std::ofstream out(file);
        v.witness->write(out);
        e.witness_path = file.string();
    }
    return e;
}

}  // namespace

std::string witness_file_name(const CatalogueEntry& e) {
    std::ostringstream name;
    name << "n" << e.n << "_d" << e.delta;
    if (!e.beta.empty()) name << "_b" << e.beta;
    name << "_g" << e.gamma << ".ls";
    return name.str();
}

std::vector<CatalogueEntry> parse_jsonl(const std::string& path) {
    std::vector<CatalogueEntry> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(entry_from_json(json::parse(line)));
    }
    return out;
}

namespace {

std::vector<CatalogueEntry> classify_impl(int n, DeltaShape shape, const ClassifyOptions& opts,
                                          bool parallel) {
    // candidate order is the enumeration order; entries land at their index
    std::vector<std::pair<CycleStructure, CycleStructure>> cases;
    if (shape == DeltaShape::D12) {
        cases = enumerate_candidates_12(n);
    } else {
        for (const auto& g : enumerate_candidates_123(n)) cases.emplace_back(CycleStructure({{1, n}}), g);
    }

    std::map<std::string, CatalogueEntry> done;
    fs::path out_file;
    if (!opts.out_dir.empty()) {
        fs::create_directories(opts.out_dir);
        out_file = fs::path(opts.out_dir) / ("catalogue_n" + std::to_string(n) + "_d" + delta_shape_str(shape) + ".jsonl");
        if (opts.resume && fs::exists(out_file))
            for (auto& e : parse_jsonl(out_file.string()))
                if (e.decided) done[entry_key(e)] = e;
    }

    std::vector<CatalogueEntry> entries(cases.size());
    std::ofstream append;
    std::mutex io;
    if (!out_file.empty()) append.open(out_file, opts.resume ? std::ios::app : std::ios::trunc);

    auto work = [&](size_t idx) {
        const auto& [b, g] = cases[idx];
        CatalogueEntry probe;
        probe.delta = delta_shape_str(shape);
        probe.beta = shape == DeltaShape::D12 ? b.str() : "";
        probe.gamma = g.str();
        auto it = done.find(entry_key(probe));
        if (it != done.end()) {
            entries[idx] = it->second;
            return;
        }
        CatalogueEntry e = run_case(n, shape, b, g, opts);
        entries[idx] = e;
        if (append.is_open()) {
            std::scoped_lock lock(io);
            append << entry_json(e).dump() << '\n';
            append.flush();
        }
    };

    if (parallel) {
#ifdef PARATOPIA_OPENMP
        std::exception_ptr failure;
        omp_set_num_threads(std::max(1, opts.jobs));
#pragma omp parallel for schedule(dynamic)
        for (long long idx = 0; idx < (long long)cases.size(); ++idx) {
            try {
                work(idx);
            } catch (...) {
                std::scoped_lock lock(io);
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
#else
        for (size_t idx = 0; idx < cases.size(); ++idx) work(idx);
#endif
    } else {
        for (size_t idx = 0; idx < cases.size(); ++idx) work(idx);
    }

    if (!out_file.empty()) {
        // terminal compaction: one line per case in enumeration order
        append.close();
        std::ofstream rewrite(out_file, std::ios::trunc);
        for (const auto& e : entries) rewrite << entry_json(e).dump() << '\n';
    }
    return entries;
}

}  // namespace

std::vector<CatalogueEntry> classify_serial(int n, DeltaShape shape, const ClassifyOptions& opts) {
    return classify_impl(n, shape, opts, false);
}

std::vector<CatalogueEntry> classify(int n, DeltaShape shape, const ClassifyOptions& opts) {
    return classify_impl(n, shape, opts, opts.jobs > 1);
}

DiffReport diff_against_published(const std::vector<CatalogueEntry>& entries, int table) {
    DiffReport rep;
    const auto& tables = PublishedTables::get();
    auto in_range = [&](int n) {
        if (table == 1) return n <= 12 && tables.has12(n);
        if (table == 2) return n >= 13 && n <= 17 && tables.has12(n);
        return n <= 17 && tables.has123(n);
    };
    std::set<int> orders;
    std::set<std::string> computed;
    for (const auto& e : entries) {
        bool want12 = table == 1 || table == 2;
        if (want12 != (e.delta == "12")) continue;
        if (!in_range(e.n)) continue;
        orders.insert(e.n);
        if (e.decided && e.member) computed.insert(entry_key(e) + "|" + std::to_string(e.n));
    }
    for (int n : orders) {
        if (table == 1 || table == 2) {
            for (const auto& [b, g] : tables.members12(n)) {
                std::string key = "12|" + b + "|" + g + "|" + std::to_string(n);
                if (!computed.count(key)) rep.missing.push_back("n=" + std::to_string(n) + " beta=" + b + " gamma=" + g);
            }
            for (const auto& e : entries)
                if (e.delta == "12" && e.n == n && e.decided && e.member &&
                    !tables.members12(n).count({e.beta, e.gamma}))
                    rep.extra.push_back("n=" + std::to_string(n) + " beta=" + e.beta + " gamma=" + e.gamma);
        } else {
            for (const auto& g : tables.members123(n)) {
                std::string key = "123||" + g + "|" + std::to_string(n);
                if (!computed.count(key)) rep.missing.push_back("n=" + std::to_string(n) + " gamma=" + g);
            }
            for (const auto& e : entries)
                if (e.delta == "123" && e.n == n && e.decided && e.member && !tables.members123(n).count(e.gamma))
                    rep.extra.push_back("n=" + std::to_string(n) + " gamma=" + e.gamma);
        }
    }
    return rep;
}

std::string emit_text(const std::vector<CatalogueEntry>& entries) {
    // mirrors the published layout: one row per beta with the gamma list
    std::ostringstream out;
    std::map<int, std::map<std::string, std::vector<std::string>>> grouped;
    for (const auto& e : entries)
        if (e.decided && e.member) grouped[e.n][e.beta].push_back(e.gamma);
    for (auto& [n, rows] : grouped) {
        out << "n=" << n << '\n';
        for (auto& [b, gs] : rows) {
            if (!b.empty()) out << b << " | ";
            for (size_t k = 0; k < gs.size(); ++k) out << (k ? ", " : "") << gs[k];
            out << '\n';
        }
    }
    return out.str();
}

std::string emit_json(const std::vector<CatalogueEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(entry_json(e));
    return arr.dump(2);
}

std::map<std::string, long long> rule_fire_counts(int n, DeltaShape shape, const RuleMask& mask) {
    std::map<std::string, long long> counts;
    if (shape == DeltaShape::D12) {
        for (const auto& [b, g] : enumerate_candidates_12(n)) {
            FilterReport rep = filters_12({n, b, g}, mask);
            for (const auto& r : rep.violated) ++counts[r];
        }
    } else {
        for (const auto& g : enumerate_candidates_123(n)) {
            FilterReport rep = filters_123({n, g}, mask);
            for (const auto& r : rep.violated) ++counts[r];
        }
    }
    return counts;
}

}  // namespace paratopia
