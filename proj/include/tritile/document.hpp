#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tritile/tile.hpp"

namespace tritile {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// On-disk tiling document, format_version 1. Every QS3 value is stored
// as a 4-tuple of decimal integer strings [p_num, p_den, q_num, q_den];
// no floating point touches the disk.
struct TilingDocument {
    static constexpr int kFormatVersion = 1;
    Tiling tiling;
    std::string meta;  // free-form provenance line, round-tripped verbatim
};

namespace detail {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson qs3_to_json(const QS3& v) {
    auto t = v.to_strings();
    return OrderedJson::array({t[0], t[1], t[2], t[3]});
}

inline QS3 qs3_from_json(const OrderedJson& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("QS3 value must be a 4-tuple");
    for (const auto& e : j)
        if (!e.is_string()) throw ParseError("QS3 tuple entries must be decimal strings");
    try {
        return QS3::from_strings(j[0].get<std::string>(), j[1].get<std::string>(),
                                 j[2].get<std::string>(), j[3].get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad QS3 tuple: ") + e.what());
    }
}

}  // namespace detail

inline std::string serialize_document(const TilingDocument& doc) {
    using detail::OrderedJson;
    OrderedJson j;
    j["format_version"] = TilingDocument::kFormatVersion;
    j["shape"] = {{"a", doc.tiling.shape.a},
                  {"b", doc.tiling.shape.b},
                  {"c", doc.tiling.shape.c},
                  {"variant", variant_name(doc.tiling.shape.variant)}};
    OrderedJson target = OrderedJson::array();
    for (const Point& p : doc.tiling.target.vertices())
        target.push_back(OrderedJson::array({detail::qs3_to_json(p.x), detail::qs3_to_json(p.y)}));
    j["target"] = std::move(target);
    OrderedJson pls = OrderedJson::array();
    for (const Placement& pl : doc.tiling.placements) {
        pls.push_back(OrderedJson::array(
            {detail::qs3_to_json(pl.iso.m00), detail::qs3_to_json(pl.iso.m01),
             detail::qs3_to_json(pl.iso.m10), detail::qs3_to_json(pl.iso.m11),
             detail::qs3_to_json(pl.iso.tx), detail::qs3_to_json(pl.iso.ty)}));
    }
    j["placements"] = std::move(pls);
    j["claimed_count"] = doc.tiling.claimed_count;
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j.dump(1);
}

inline TilingDocument parse_document(const std::string& text) {
    using detail::OrderedJson;
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != TilingDocument::kFormatVersion)
        throw ParseError("unsupported or missing format_version");
    for (const char* key : {"shape", "target", "placements", "claimed_count"})
        if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);

    const auto& js = j["shape"];
    if (!js.is_object() || !js.contains("a") || !js.contains("b") || !js.contains("c") ||
        !js.contains("variant"))
        throw ParseError("shape must carry a, b, c, variant");
    std::string vn = js["variant"].get<std::string>();
    TileVariant variant;
    if (vn == "obtuse120")
        variant = TileVariant::Obtuse120;
    else if (vn == "acute60")
        variant = TileVariant::Acute60;
    else
        throw ParseError("variant must be obtuse120 or acute60");
    TileShape shape;
    try {
        shape = TileShape::make(js["a"].get<long>(), js["b"].get<long>(), js["c"].get<long>(),
                                variant);
    } catch (const TileError& e) {
        throw ParseError(std::string("invalid tile shape: ") + e.what());
    }

    std::vector<Point> target;
    for (const auto& v : j["target"]) {
        if (!v.is_array() || v.size() != 2) throw ParseError("target vertex must be [x, y]");
        target.push_back({detail::qs3_from_json(v[0]), detail::qs3_from_json(v[1])});
    }
    std::vector<Placement> placements;
    for (const auto& p : j["placements"]) {
        if (!p.is_array() || p.size() != 6)
            throw ParseError("placement must be six QS3 tuples (m00,m01,m10,m11,tx,ty)");
        Isometry iso;
        iso.m00 = detail::qs3_from_json(p[0]);
        iso.m01 = detail::qs3_from_json(p[1]);
        iso.m10 = detail::qs3_from_json(p[2]);
        iso.m11 = detail::qs3_from_json(p[3]);
        iso.tx = detail::qs3_from_json(p[4]);
        iso.ty = detail::qs3_from_json(p[5]);
        placements.push_back({iso});
    }
    std::uint64_t count = 0;
    try {
        count = j["claimed_count"].get<std::uint64_t>();
    } catch (const std::exception&) {
        throw ParseError("claimed_count must be a nonnegative integer");
    }
    std::string meta = j.contains("meta") ? j["meta"].get<std::string>() : "";
    try {
        return TilingDocument{
            Tiling{shape, ConvexPolygon(std::move(target)), std::move(placements), count},
            std::move(meta)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid target polygon: ") + e.what());
    }
}

inline void write_document_file(const TilingDocument& doc, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << serialize_document(doc) << "\n";
}

inline TilingDocument read_document_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_document(ss.str());
}

}  // namespace tritile
