#include "dessinforge/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dessinforge/error.hpp"
#include "dessinforge/version.hpp"

namespace dessinforge {

using nlohmann::json;

bool operator==(const CatalogRecord& a, const CatalogRecord& b) {
    return a.group_spec == b.group_spec && a.x_index == b.x_index && a.y_index == b.y_index &&
           a.inv.type == b.inv.type && a.inv.black_vertices == b.inv.black_vertices &&
           a.inv.white_vertices == b.inv.white_vertices && a.inv.edges == b.inv.edges &&
           a.inv.faces == b.inv.faces &&
           a.inv.euler_characteristic == b.inv.euler_characteristic &&
           a.inv.genus == b.inv.genus && a.inv.multiplicity == b.inv.multiplicity &&
           a.inv.symmetric == b.inv.symmetric && a.inv.reflexible == b.inv.reflexible &&
           a.inv.totally_symmetric == b.inv.totally_symmetric && a.orbit_size == b.orbit_size &&
           a.class_count == b.class_count && a.version == b.version;
}

std::vector<CatalogRecord> build_catalog_records(const std::vector<GroupSpec>& specs,
                                                 long long order_cap, int workers) {
    std::vector<CatalogRecord> out;
    for (const GroupSpec& spec : specs) {
        GroupPtr G = build_group(spec, order_cap);
        DessinEnumeration e = enumerate_dessins(G, workers);
        for (std::size_t k = 0; k < e.representatives.size(); ++k) {
            CatalogRecord r;
            r.group_spec = to_string(spec);
            r.x_index = e.representatives[k].x.index;
            r.y_index = e.representatives[k].y.index;
            r.inv = invariants(e.representatives[k]);
            r.orbit_size = e.orbit_sizes[k];
            r.class_count = static_cast<long long>(e.classes());
            r.version = kVersion;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string record_to_json_line(const CatalogRecord& r) {
    json j;
    j["group_spec"] = r.group_spec;
    j["x_index"] = r.x_index;
    j["y_index"] = r.y_index;
    j["type"] = r.inv.type;
    j["black_vertices"] = r.inv.black_vertices;
    j["white_vertices"] = r.inv.white_vertices;
    j["edges"] = r.inv.edges;
    j["faces"] = r.inv.faces;
    j["euler_characteristic"] = r.inv.euler_characteristic;
    j["genus"] = r.inv.genus;
    j["multiplicity"] = r.inv.multiplicity;
    j["symmetric"] = r.inv.symmetric;
    j["reflexible"] = r.inv.reflexible;
    j["totally_symmetric"] = r.inv.totally_symmetric;
    j["orbit_size"] = r.orbit_size;
    j["class_count"] = r.class_count;
    j["version"] = r.version;
    return j.dump();
}

CatalogRecord record_from_json_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw SpecParseError(std::string("catalog record: ") + e.what(), 0);
    }
    try {
        CatalogRecord r;
        r.group_spec = j.at("group_spec").get<std::string>();
        r.x_index = j.at("x_index").get<int>();
        r.y_index = j.at("y_index").get<int>();
        r.inv.type = j.at("type").get<std::array<long long, 3>>();
        r.inv.black_vertices = j.at("black_vertices").get<long long>();
        r.inv.white_vertices = j.at("white_vertices").get<long long>();
        r.inv.edges = j.at("edges").get<long long>();
        r.inv.faces = j.at("faces").get<long long>();
        r.inv.euler_characteristic = j.at("euler_characteristic").get<long long>();
        r.inv.genus = j.at("genus").get<long long>();
        r.inv.multiplicity = j.at("multiplicity").get<long long>();
        r.inv.symmetric = j.at("symmetric").get<bool>();
        r.inv.reflexible = j.at("reflexible").get<bool>();
        r.inv.totally_symmetric = j.at("totally_symmetric").get<bool>();
        r.orbit_size = j.at("orbit_size").get<long long>();
        r.class_count = j.at("class_count").get<long long>();
        r.version = j.at("version").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw SpecParseError(std::string("catalog record: ") + e.what(), 0);
    }
}

void write_catalog(std::ostream& out, const std::vector<CatalogRecord>& records) {
    json header;
    header["dessin_catalog"] = 1;
    header["version"] = kVersion;
    out << header.dump() << "\n";
    for (const CatalogRecord& r : records) out << record_to_json_line(r) << "\n";
}

void write_catalog_file(const std::string& path, const std::vector<CatalogRecord>& records) {
    std::ofstream f(path);
    if (!f) throw SpecParseError("catalog: cannot open '" + path + "' for writing", 0);
    write_catalog(f, records);
}

std::vector<CatalogRecord> read_catalog(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw SpecParseError("catalog: empty file", 0);
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw SpecParseError(std::string("catalog header: ") + e.what(), 0);
    }
    if (!header.contains("dessin_catalog"))
        throw SpecParseError("catalog header: missing dessin_catalog version field", 0);
    std::vector<CatalogRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(record_from_json_line(line));
    }
    return out;
}

std::vector<CatalogRecord> read_catalog_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SpecParseError("catalog: cannot open '" + path + "'", 0);
    return read_catalog(f);
}

std::vector<CatalogRecord> query_catalog(const std::vector<CatalogRecord>& records,
                                         const CatalogQuery& q) {
    std::vector<CatalogRecord> out;
    for (const CatalogRecord& r : records) {
        if (q.genus_min && r.inv.genus < *q.genus_min) continue;
        if (q.genus_max && r.inv.genus > *q.genus_max) continue;
        if (q.type && r.inv.type != *q.type) continue;
        if (q.require_symmetric && !r.inv.symmetric) continue;
        if (q.require_reflexible && !r.inv.reflexible) continue;
        if (q.require_totally_symmetric && !r.inv.totally_symmetric) continue;
        if (q.require_unique && r.class_count != 1) continue;
        out.push_back(r);
    }
    return out;
}

} // namespace dessinforge
