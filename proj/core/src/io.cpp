#include "startopo/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace startopo::io {

namespace {

mask_t mask_from_points(universe u, const json& arr, const char* what) {
    if (!arr.is_array())
        throw error(errc::invalid_document, std::string(what) + " must be an array of points");
    mask_t m = 0;
    for (const auto& e : arr) {
        if (!e.is_number_integer())
            throw error(errc::invalid_document, std::string(what) + " must contain integers");
        const int p = e.get<int>();
        if (!u.in_range(p))
            throw error(errc::invalid_document,
                        std::string(what) + " contains the out-of-range point " + std::to_string(p));
        m |= static_cast<mask_t>(1u << p);
    }
    return m;
}

int parse_n(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
        throw error(errc::invalid_document, "document needs an integer field \"n\"");
    const int n = j.at("n").get<int>();
    if (n < 1 || n > universe::max_points)
        throw error(errc::invalid_document,
                    "\"n\" must be between 1 and " + std::to_string(universe::max_points));
    return n;
}

} // namespace

space_document parse_space(const json& j) {
    space_document doc;
    doc.n = parse_n(j);
    const universe u(doc.n);
    const bool has_opens = j.contains("opens");
    const bool has_stars = j.contains("stars");
    if (has_opens == has_stars)
        throw error(errc::invalid_document,
                    "space document needs exactly one of \"opens\" and \"stars\"");
    if (has_opens) {
        const auto& arr = j.at("opens");
        if (!arr.is_array())
            throw error(errc::invalid_document, "\"opens\" must be an array of point lists");
        std::vector<mask_t> opens;
        for (const auto& e : arr) opens.push_back(mask_from_points(u, e, "open set"));
        doc.opens = std::move(opens);
    } else {
        const auto& obj = j.at("stars");
        if (!obj.is_object())
            throw error(errc::invalid_document, "\"stars\" must map points to point lists");
        std::vector<mask_t> stars(static_cast<std::size_t>(doc.n), 0);
        std::vector<bool> seen(static_cast<std::size_t>(doc.n), false);
        for (const auto& [key, value] : obj.items()) {
            int x = -1;
            try {
                x = std::stoi(key);
            } catch (const std::exception&) {
                throw error(errc::invalid_document, "star key \"" + key + "\" is not a point");
            }
            if (!u.in_range(x))
                throw error(errc::invalid_document, "star key " + key + " is out of range");
            stars[static_cast<std::size_t>(x)] = mask_from_points(u, value, "star set");
            seen[static_cast<std::size_t>(x)] = true;
        }
        for (int x = 0; x < doc.n; ++x)
            if (!seen[static_cast<std::size_t>(x)])
                throw error(errc::invalid_document,
                            "star map is missing point " + std::to_string(x));
        doc.stars = std::move(stars);
    }
    return doc;
}

ojson points_json(universe u, mask_t m) {
    ojson arr = ojson::array();
    for (int p = 0; p < u.size(); ++p)
        if ((m >> p) & 1u) arr.push_back(p);
    return arr;
}

ojson points_json(const point_set& s) { return points_json(s.space(), s.bits()); }

ojson render_space(const space_document& doc) {
    const universe u(doc.n);
    ojson out;
    out["n"] = doc.n;
    if (doc.opens) {
        std::vector<mask_t> sorted = *doc.opens;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        ojson arr = ojson::array();
        for (mask_t m : sorted) arr.push_back(points_json(u, m));
        out["opens"] = std::move(arr);
    } else if (doc.stars) {
        ojson obj = ojson::object();
        for (int x = 0; x < doc.n; ++x)
            obj[std::to_string(x)] = points_json(u, (*doc.stars)[static_cast<std::size_t>(x)]);
        out["stars"] = std::move(obj);
    }
    return out;
}

space_document document_from(const topology& t) {
    return {t.space().size(), t.opens(), std::nullopt};
}

space_document document_from(const star_system& sys) {
    return {sys.space().size(), std::nullopt, sys.masks()};
}

topology to_topology(const space_document& doc) {
    if (!doc.opens)
        throw error(errc::invalid_document, "document does not carry open sets");
    const universe u(doc.n);
    return topology_from_opens(u, set_family(u, *doc.opens));
}

star_system to_star_system(const space_document& doc) {
    if (!doc.stars)
        throw error(errc::invalid_document, "document does not carry a star map");
    return {universe(doc.n), *doc.stars};
}

topology realize_topology(const space_document& doc) {
    if (doc.opens) return to_topology(doc);
    return alexandrov_from_stars(to_star_system(doc));
}

space_map parse_map(const json& j) {
    if (!j.is_object() || !j.contains("from") || !j.contains("to") || !j.contains("values"))
        throw error(errc::invalid_document, "map document needs \"from\", \"to\" and \"values\"");
    if (!j.at("from").is_number_integer() || !j.at("to").is_number_integer() ||
        !j.at("values").is_array())
        throw error(errc::invalid_document, "map document fields have the wrong types");
    const int from = j.at("from").get<int>();
    const int to = j.at("to").get<int>();
    if (from < 1 || from > universe::max_points || to < 1 || to > universe::max_points)
        throw error(errc::invalid_document, "map universes out of range");
    std::vector<int> values;
    for (const auto& e : j.at("values")) {
        if (!e.is_number_integer())
            throw error(errc::invalid_document, "map values must be integers");
        values.push_back(e.get<int>());
    }
    const universe dom(from), cod(to);
    if (static_cast<int>(values.size()) != from)
        throw error(errc::invalid_document, "map must list one value per domain point");
    for (int v : values)
        if (!cod.in_range(v))
            throw error(errc::invalid_document,
                        "map value " + std::to_string(v) + " is outside the codomain");
    return {dom, cod, std::move(values)};
}

ojson render_map(const space_map& f) {
    ojson out;
    out["from"] = f.domain().size();
    out["to"] = f.codomain().size();
    out["values"] = f.values();
    return out;
}

ep_sequence parse_sequence(const json& j) {
    if (!j.is_object() || !j.contains("prefix") || !j.contains("cycle"))
        throw error(errc::invalid_document, "sequence document needs \"n\", \"prefix\" and \"cycle\"");
    const int n = parse_n(j);
    const universe u(n);
    const auto read_list = [&](const char* key) {
        const auto& arr = j.at(key);
        if (!arr.is_array())
            throw error(errc::invalid_document, std::string("\"") + key + "\" must be an array");
        std::vector<int> out;
        for (const auto& e : arr) {
            if (!e.is_number_integer())
                throw error(errc::invalid_document, std::string("\"") + key + "\" must contain integers");
            const int p = e.get<int>();
            if (!u.in_range(p))
                throw error(errc::invalid_document,
                            std::string("\"") + key + "\" contains the out-of-range point " +
                                std::to_string(p));
            out.push_back(p);
        }
        return out;
    };
    return {u, read_list("prefix"), read_list("cycle")};
}

ojson render_sequence(const ep_sequence& s) {
    ojson out;
    out["n"] = s.space().size();
    out["prefix"] = s.prefix();
    out["cycle"] = s.cycle();
    return out;
}

json load_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw error(errc::invalid_document, "cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(errc::invalid_document, std::string("JSON parse error: ") + e.what());
    }
}

} // namespace startopo::io
