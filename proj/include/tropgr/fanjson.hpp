// Fan (de)serialization.  The document is
//   {ambient_dim, rays: [[int]], cones_by_dim: {d: [[ray indices]]}}
// with rays lexicographically sorted and cone lists sorted, so identical fans
// always produce byte-identical files.
#pragma once

#include "tropgr/fan.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace tropgr {

using json = nlohmann::ordered_json;

inline json fan_to_json(const Fan& f) {
    json j;
    j["ambient_dim"] = f.ambient_dim();
    json rays = json::array();
    if (f.ambient_dim() > 0) {
        for (const auto& r : f.rays()) {
            json rj = json::array();
            for (const auto& x : r) rj.push_back(to_ll(x));
            rays.push_back(std::move(rj));
        }
    }
    j["rays"] = std::move(rays);
    json cones = json::object();
    if (f.ambient_dim() > 0) {
        for (const auto& [d, faces] : f.faces_by_dim()) {
            json list = json::array();
            for (const auto& ids : faces) list.push_back(ids);
            cones[std::to_string(d)] = std::move(list);
        }
    }
    j["cones_by_dim"] = std::move(cones);
    return j;
}

inline Fan fan_from_json(const json& j) {
    if (!j.contains("ambient_dim") || !j.contains("rays") || !j.contains("cones_by_dim"))
        throw std::invalid_argument("fan JSON: missing required fields");
    const int ambient = j.at("ambient_dim").get<int>();
    if (ambient == 0) return Fan::trivial();
    std::vector<IntVec> rays;
    for (const auto& rj : j.at("rays")) {
        IntVec r;
        for (const auto& x : rj) r.push_back(Int(x.get<long>()));
        rays.push_back(std::move(r));
    }
    const auto& cones = j.at("cones_by_dim");
    std::string key = std::to_string(ambient);
    std::vector<Cone> max_cones;
    if (cones.contains(key)) {
        for (const auto& ids : cones.at(key)) {
            std::vector<IntVec> gens;
            for (const auto& i : ids) gens.push_back(rays.at(i.get<std::size_t>()));
            max_cones.push_back(Cone::from_rays(ambient, gens));
        }
    }
    return Fan(ambient, std::move(max_cones), true);
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace tropgr
