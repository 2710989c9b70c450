// Golden tables: the published ray tables, f-vectors and facet censuses for
// F_{3,6} and F_{3,7}, stored as fixtures together with the pinned signed
// coordinate permutation that aligns our inner-region coordinates with the
// table coordinates.
#pragma once

#include "tropgr/fan.hpp"
#include "tropgr/fanjson.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropgr {

/// paper[i] = signs[i] * ours[perm[i]].
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> signs;

    IntVec apply(const IntVec& x) const {
        IntVec y(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) y[i] = signs[i] * x[perm[i]];
        return y;
    }
};

/// Search for all signed coordinate permutations mapping one ray set onto the
/// other; returns them in lexicographic (perm, signs) order.
inline std::vector<SignedPerm> discover_signed_perms(const std::vector<IntVec>& ours,
                                                     const std::vector<IntVec>& paper) {
    std::vector<SignedPerm> found;
    if (ours.size() != paper.size() || ours.empty()) return found;
    const int d = static_cast<int>(ours[0].size());
    std::set<IntVec, IntVecLess> target(paper.begin(), paper.end());
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        for (int mask = 0; mask < (1 << d); ++mask) {
            SignedPerm sp;
            sp.perm = perm;
            sp.signs.resize(d);
            for (int i = 0; i < d; ++i) sp.signs[i] = (mask >> i) & 1 ? -1 : 1;
            bool ok = true;
            for (const auto& r : ours) {
                if (!target.count(sp.apply(r))) { ok = false; break; }
            }
            if (ok) found.push_back(std::move(sp));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

struct GoldenTable {
    std::string name;
    std::vector<long> f_vector;
    std::map<int, long> facet_census;
    std::vector<IntVec> rays;                      // table coordinates
    std::vector<std::vector<IntVec>> nonsimplicial;  // ray sets, table coordinates
    SignedPerm coordinate_map;                     // ours -> table
};

inline IntVec json_to_intvec(const json& a) {
    IntVec v;
    for (const auto& x : a) v.push_back(Int(x.get<long>()));
    return v;
}

inline GoldenTable golden_table_from_json(const json& j) {
    GoldenTable t;
    t.name = j.at("name").get<std::string>();
    for (const auto& x : j.at("f_vector")) t.f_vector.push_back(x.get<long>());
    for (const auto& [key, val] : j.at("facet_census").items())
        t.facet_census[std::stoi(key)] = val.get<long>();
    for (const auto& r : j.at("rays")) t.rays.push_back(json_to_intvec(r));
    if (j.contains("nonsimplicial")) {
        for (const auto& s : j.at("nonsimplicial")) {
            std::vector<IntVec> rays;
            for (const auto& r : s) rays.push_back(json_to_intvec(r));
            std::sort(rays.begin(), rays.end(), IntVecLess{});
            t.nonsimplicial.push_back(std::move(rays));
        }
        std::sort(t.nonsimplicial.begin(), t.nonsimplicial.end(),
                  [](const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
                      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                          IntVecLess{});
                  });
    }
    const auto& cm = j.at("coordinate_map");
    for (const auto& x : cm.at("perm")) t.coordinate_map.perm.push_back(x.get<int>());
    for (const auto& x : cm.at("signs")) t.coordinate_map.signs.push_back(x.get<int>());
    return t;
}

inline GoldenTable load_golden_table(const std::string& fixture_dir, int k, int n) {
    std::string path = fixture_dir + "/f" + std::to_string(k) + std::to_string(n) + ".json";
    return golden_table_from_json(read_json_file(path));
}

/// Default fixture directory: $TROPGR_FIXTURES if set, otherwise the
/// compiled-in source-tree path.
inline std::string default_fixture_dir() {
    if (const char* env = std::getenv("TROPGR_FIXTURES")) return env;
#ifdef TROPGR_FIXTURE_DIR
    return TROPGR_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_passed() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

inline std::string format_ray_set(const std::vector<IntVec>& rays) {
    std::string s;
    for (const auto& r : rays) s += to_string(r) + " ";
    return s;
}

/// Compare a computed fan against a golden table through the pinned
/// coordinate permutation.
inline CheckReport check_against_table(const Fan& fan, const GoldenTable& table) {
    CheckReport rep;

    std::vector<IntVec> mapped;
    for (const auto& r : fan.rays()) mapped.push_back(table.coordinate_map.apply(r));
    std::sort(mapped.begin(), mapped.end(), IntVecLess{});
    std::vector<IntVec> expected = table.rays;
    std::sort(expected.begin(), expected.end(), IntVecLess{});
    if (mapped == expected) {
        rep.items.push_back({"rays", true,
                             std::to_string(mapped.size()) + " rays matched"});
    } else {
        std::string detail = "computed (mapped): " + format_ray_set(mapped) +
                             "| expected: " + format_ray_set(expected);
        rep.items.push_back({"rays", false, detail});
    }

    std::vector<long> fv = fan.f_vector();
    if (fv == table.f_vector) {
        std::string s = "(";
        for (std::size_t i = 0; i < fv.size(); ++i) s += (i ? "," : "") + std::to_string(fv[i]);
        rep.items.push_back({"f_vector", true, s + ") matched"});
    } else {
        std::string detail = "computed (";
        for (std::size_t i = 0; i < fv.size(); ++i) detail += (i ? "," : "") + std::to_string(fv[i]);
        detail += ") expected (";
        for (std::size_t i = 0; i < table.f_vector.size(); ++i)
            detail += (i ? "," : "") + std::to_string(table.f_vector[i]);
        rep.items.push_back({"f_vector", false, detail + ")"});
    }

    std::map<int, long> census = fan.facet_census();
    if (census == table.facet_census) {
        std::string s;
        for (const auto& [k2, v] : census) s += std::to_string(k2) + ":" + std::to_string(v) + " ";
        rep.items.push_back({"facet_census", true, s + "matched"});
    } else {
        std::string detail = "computed {";
        for (const auto& [k2, v] : census) detail += std::to_string(k2) + ":" + std::to_string(v) + " ";
        detail += "} expected {";
        for (const auto& [k2, v] : table.facet_census)
            detail += std::to_string(k2) + ":" + std::to_string(v) + " ";
        rep.items.push_back({"facet_census", false, detail + "}"});
    }

    if (!table.nonsimplicial.empty()) {
        std::vector<std::vector<IntVec>> got;
        for (const auto& ids : fan.nonsimplicial_cones()) {
            std::vector<IntVec> rays;
            for (int i : ids) rays.push_back(table.coordinate_map.apply(fan.rays()[i]));
            std::sort(rays.begin(), rays.end(), IntVecLess{});
            got.push_back(std::move(rays));
        }
        std::sort(got.begin(), got.end(),
                  [](const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
                      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                          IntVecLess{});
                  });
        if (got == table.nonsimplicial) {
            rep.items.push_back({"nonsimplicial", true,
                                 std::to_string(got.size()) + " non-simplicial cones matched"});
        } else {
            std::string detail = "computed:";
            for (const auto& s : got) detail += " {" + format_ray_set(s) + "}";
            detail += " expected:";
            for (const auto& s : table.nonsimplicial) detail += " {" + format_ray_set(s) + "}";
            rep.items.push_back({"nonsimplicial", false, detail});
        }
    }
    return rep;
}

}  // namespace tropgr
