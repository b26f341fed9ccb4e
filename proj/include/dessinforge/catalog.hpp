#ifndef DESSINFORGE_CATALOG_HPP
#define DESSINFORGE_CATALOG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dessinforge/dessin.hpp"
#include "dessinforge/group_spec.hpp"

namespace dessinforge {

// One dessin class, serialized as a single JSON line with stable field names.
struct CatalogRecord {
    std::string group_spec;
    int x_index = 0;
    int y_index = 0;
    DessinInvariants inv;
    long long orbit_size = 1;
    long long class_count = 1; // dessin classes of the group (uniqueness filter)
    std::string version;

    friend bool operator==(const CatalogRecord&, const CatalogRecord&);
};

std::vector<CatalogRecord> build_catalog_records(const std::vector<GroupSpec>& specs,
                                                 long long order_cap = kDefaultOrderCap,
                                                 int workers = 1);

std::string record_to_json_line(const CatalogRecord& r);
CatalogRecord record_from_json_line(const std::string& line);

// Newline-delimited records behind a one-line version header.
void write_catalog(std::ostream& out, const std::vector<CatalogRecord>& records);
void write_catalog_file(const std::string& path, const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> read_catalog(std::istream& in);
std::vector<CatalogRecord> read_catalog_file(const std::string& path);

struct CatalogQuery {
    std::optional<long long> genus_min, genus_max;
    std::optional<std::array<long long, 3>> type;
    bool require_symmetric = false;
    bool require_reflexible = false;
    bool require_totally_symmetric = false;
    bool require_unique = false; // class_count == 1
};
std::vector<CatalogRecord> query_catalog(const std::vector<CatalogRecord>& records,
                                         const CatalogQuery& q);

} // namespace dessinforge

#endif
