#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "startopo/convergence.hpp"
#include "startopo/topology.hpp"

namespace startopo::io {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

/// A space on the wire: either its open sets or its star map, never both.
/// Point lists are always sorted ascending and families are sorted by
/// encoded mask value, so rendering is byte-deterministic.
struct space_document {
    int n = 0;
    std::optional<std::vector<mask_t>> opens;
    std::optional<std::vector<mask_t>> stars; // indexed by point

    friend bool operator==(const space_document&, const space_document&) = default;
};

space_document parse_space(const json& j);
ojson render_space(const space_document& doc);

space_document document_from(const topology& t);
space_document document_from(const star_system& sys);

topology to_topology(const space_document& doc);
star_system to_star_system(const space_document& doc);
/// Opens documents validate as a topology; stars documents are generated
/// into one.
topology realize_topology(const space_document& doc);

space_map parse_map(const json& j);
ojson render_map(const space_map& f);

ep_sequence parse_sequence(const json& j);
ojson render_sequence(const ep_sequence& s);

ojson points_json(universe u, mask_t m);
ojson points_json(const point_set& s);

/// Reads a JSON value from a file path, or from standard input when the
/// path is "-".
json load_json(const std::string& path);

} // namespace startopo::io
