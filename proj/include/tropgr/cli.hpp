// Command implementations behind the tropgr CLI.  Each returns the process
// exit code (0 success, 1 verification mismatch, 2 usage error) and writes
// only to the provided stream, so commands are deterministic and testable.
#pragma once

#include "tropgr/assoctrees.hpp"
#include "tropgr/clusterfans.hpp"
#include "tropgr/fanjson.hpp"
#include "tropgr/goldentables.hpp"
#include "tropgr/posparam.hpp"
#include "tropgr/tropical.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace tropgr::cli {

inline RatVec parse_csv_rationals(const std::string& s) {
    RatVec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_rational(tok));
    }
    return out;
}

inline std::string subset_key(const std::vector<int>& K) {
    std::string s;
    for (std::size_t i = 0; i < K.size(); ++i) s += (i ? "," : "") + std::to_string(K[i]);
    return s;
}

inline int cmd_web(int k, int n, std::ostream& out) {
    WebDiagram w(k, n);
    out << w.render_text();
    json j;
    j["k"] = k;
    j["n"] = n;
    json regions = json::array();
    for (const auto& r : w.regions()) {
        json rj;
        rj["index"] = r.index;
        rj["i"] = r.i;
        rj["j"] = r.j;
        rj["inner"] = r.inner;
        regions.push_back(std::move(rj));
    }
    j["regions"] = std::move(regions);
    out << j.dump(2) << "\n";
    return 0;
}

inline int cmd_fan(int k, int n, const std::string& method, int threads,
                   const std::string& out_path, std::ostream& out) {
    Fan f;
    if (method == "refine") {
        f = build_F(k, n, threads);
    } else if (method == "minkowski") {
        f = build_F_minkowski(k, n);
    } else {
        out << "unknown method: " << method << " (expected refine or minkowski)\n";
        return 2;
    }
    if (f.ambient_dim() == 0)
        out << "note: degenerate dimension (k-1)(n-k-1) = 0; emitting the trivial fan\n";
    json j = fan_to_json(f);
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        write_json_file(out_path, j);
        out << "wrote " << out_path << "\n";
    }
    return 0;
}

inline int cmd_fvector(const std::string& path, std::ostream& out) {
    json j = read_json_file(path);
    if (!j.contains("ambient_dim") || !j.contains("cones_by_dim"))
        throw std::runtime_error("malformed fan file: " + path);
    int ambient = j.at("ambient_dim").get<int>();
    if (ambient == 0) {
        out << "trivial fan (ambient dimension 0)\n";
        return 0;
    }
    for (int d = 1; d <= ambient; ++d) {
        std::string key = std::to_string(d);
        std::size_t c = j.at("cones_by_dim").contains(key) ? j.at("cones_by_dim").at(key).size() : 0;
        out << (d > 1 ? " " : "") << c;
    }
    out << "\n";
    return 0;
}

inline int cmd_rays(const std::string& path, std::ostream& out) {
    json j = read_json_file(path);
    if (!j.contains("rays")) throw std::runtime_error("malformed fan file: " + path);
    for (const auto& r : j.at("rays")) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i].get<long>();
        out << "\n";
    }
    return 0;
}

inline int cmd_report(const std::string& path, std::ostream& out) {
    json j = read_json_file(path);
    if (!j.contains("ambient_dim") || !j.contains("rays") || !j.contains("cones_by_dim"))
        throw std::runtime_error("malformed fan file: " + path);
    int ambient = j.at("ambient_dim").get<int>();
    if (ambient == 0) {
        out << "trivial fan (ambient dimension 0)\n";
        return 0;
    }
    std::vector<long> fv(ambient, 0);
    for (int d = 1; d <= ambient; ++d) {
        std::string key = std::to_string(d);
        if (j.at("cones_by_dim").contains(key))
            fv[d - 1] = static_cast<long>(j.at("cones_by_dim").at(key).size());
    }
    std::map<int, long> census;
    {
        std::string key = std::to_string(ambient);
        if (j.at("cones_by_dim").contains(key))
            for (const auto& ids : j.at("cones_by_dim").at(key)) census[ids.size()]++;
    }
    out << "ambient_dim\t" << ambient << "\n";
    out << "f_vector";
    for (long v : fv) out << "\t" << v;
    out << "\n";
    out << "n_rays\t" << j.at("rays").size() << "\n";
    int idx = 0;
    for (const auto& r : j.at("rays")) {
        out << "ray\t" << idx++;
        for (const auto& x : r) out << "\t" << x.get<long>();
        out << "\n";
    }
    out << "census";
    for (const auto& [nrays, cnt] : census) out << "\t" << nrays << ":" << cnt;
    out << "\n";
    json summary;
    summary["ambient_dim"] = ambient;
    summary["f_vector"] = fv;
    summary["n_rays"] = j.at("rays").size();
    json cj = json::object();
    for (const auto& [nrays, cnt] : census) cj[std::to_string(nrays)] = cnt;
    summary["facet_census"] = std::move(cj);
    out << summary.dump() << "\n";
    return 0;
}

inline int cmd_param(int k, int n, const std::string& inner_csv, const std::string& outer_csv,
                     std::ostream& out) {
    WebDiagram w(k, n);
    RatVec inner = parse_csv_rationals(inner_csv);
    if (static_cast<int>(inner.size()) != w.n_inner())
        throw std::runtime_error("expected " + std::to_string(w.n_inner()) + " inner values");
    RegionAssignment a = lift_inner_to_all(w, inner);
    if (!outer_csv.empty()) {
        RatVec outer = parse_csv_rationals(outer_csv);
        std::size_t pos = 0;
        for (const auto& r : w.regions()) {
            if (r.inner) continue;
            if (pos >= outer.size()) throw std::runtime_error("too few outer values");
            a.values[r.index] = outer[pos++];
        }
        if (pos != outer.size()) throw std::runtime_error("too many outer values");
        a.check_positive();
    }
    PlueckerVector d = phi1(w, a);
    for (const auto& K : k_subsets(n, k)) out << subset_key(K) << "\t" << to_string(d.at(K)) << "\n";
    return 0;
}

inline int cmd_invert(int k, int n, std::istream& in, std::ostream& out) {
    WebDiagram w(k, n);
    PlueckerVector d;
    d.k = k;
    d.n = n;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("malformed TSV line: " + line);
        std::vector<int> K;
        {
            std::stringstream ss(line.substr(0, tab));
            std::string tok;
            while (std::getline(ss, tok, ',')) K.push_back(std::stoi(tok));
        }
        d.entries[K] = parse_rational(line.substr(tab + 1));
    }
    if (d.entries.size() != k_subsets(n, k).size())
        throw std::runtime_error("expected one entry per k-subset of [n]");
    RegionAssignment a = psi(w, d);
    for (const auto& r : w.regions()) {
        out << r.i << "," << r.j << "\t" << (r.inner ? "inner" : "outer") << "\t"
            << to_string(a.values[r.index]) << "\n";
    }
    return 0;
}

inline int cmd_sp_check(int n, int threads, std::ostream& out) {
    Fan f = build_F(2, n, threads);
    std::vector<Cone> tree_cones;
    for (const auto& t : enum_plane_binary(n - 1)) tree_cones.push_back(cone_of_tree(t, n).cone);
    std::sort(tree_cones.begin(), tree_cones.end());
    tree_cones.erase(std::unique(tree_cones.begin(), tree_cones.end()), tree_cones.end());
    bool equal = tree_cones == f.maximal_cones();
    out << "n\t" << n << "\n";
    out << "tree_cones\t" << tree_cones.size() << "\n";
    out << "fan_cones\t" << f.n_maximal() << "\n";
    out << "equal\t" << (equal ? "yes" : "no") << "\n";
    return equal ? 0 : 1;
}

inline int cmd_refine(int k, int n, int threads, const std::string& out_path, std::ostream& out) {
    if (k != 3 || (n != 6 && n != 7))
        throw std::runtime_error("refine supports (k,n) = (3,6) or (3,7)");
    Fan f = n == 6 ? refine_gr36(threads) : refine_gr37(threads);
    json j = fan_to_json(f);
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        write_json_file(out_path, j);
        out << "wrote " << out_path << "\n";
    }
    return 0;
}

inline int cmd_split_report(const std::string& before_path, const std::string& after_path,
                            std::ostream& out) {
    Fan before = fan_from_json(read_json_file(before_path));
    Fan after = fan_from_json(read_json_file(after_path));
    std::vector<SplitEntry> entries;
    try {
        entries = split_report(before, after);
    } catch (const std::runtime_error& e) {
        out << "containment violation: " << e.what() << "\n";
        return 1;
    }
    std::map<std::size_t, long> histogram;
    for (const auto& e : entries) {
        histogram[e.children.size()]++;
        out << "parent";
        for (int r : e.parent_rays) out << " " << r;
        out << " =>";
        for (std::size_t c = 0; c < e.children.size(); ++c) {
            if (c) out << " |";
            for (int r : e.children[c]) out << " " << r;
        }
        out << "\n";
    }
    out << "children_histogram";
    for (const auto& [c, cnt] : histogram) out << "\t" << c << ":" << cnt;
    out << "\n";
    return 0;
}

inline int cmd_check_tables(int k, int n, const std::string& fixture_dir, int threads,
                            std::ostream& out) {
    if (k != 3 || (n != 6 && n != 7))
        throw std::runtime_error("check-tables supports (k,n) = (3,6) or (3,7)");
    GoldenTable table = load_golden_table(fixture_dir, k, n);
    Fan f = build_F(k, n, threads);
    CheckReport rep = check_against_table(f, table);
    for (const auto& item : rep.items) {
        out << (item.pass ? "PASS" : "FAIL") << "\t" << table.name << "." << item.name << "\t"
            << item.detail << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

inline int cmd_oracle(int bound, std::ostream& out) {
    if (bound < 1) throw std::runtime_error("oracle: need a grid bound >= 1");
    bool ok = true;
    for (int x = -bound; x <= bound; ++x) {
        RatVec w = trop_phi2(2, 4, {Rat(x)});
        bool pass = pos_membership_gr24(w);
        ok = ok && pass;
        out << (pass ? "PASS" : "FAIL") << "\tx1=" << x << "\taccepted=" << (pass ? "yes" : "no")
            << "\n";
    }
    // Designated negative cases: a monomial initial form and a one-signed
    // binomial (weight order 12, 13, 14, 23, 24, 34).
    {
        RatVec w(6, Rat(0));
        w[1] = -1;
        bool rejected = !pos_membership_gr24(w);
        ok = ok && rejected;
        out << (rejected ? "PASS" : "FAIL") << "\tnegative-monomial\trejected="
            << (rejected ? "yes" : "no") << "\n";
    }
    {
        RatVec w(6, Rat(0));
        w[1] = 1;
        w[4] = 1;
        bool rejected = !pos_membership_gr24(w);
        ok = ok && rejected;
        out << (rejected ? "PASS" : "FAIL") << "\tnegative-binomial\trejected="
            << (rejected ? "yes" : "no") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace tropgr::cli
