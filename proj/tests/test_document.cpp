#include <catch2/catch_amalgamated.hpp>

#include "tritile/constructions.hpp"
#include "tritile/document.hpp"
#include "tritile/svg.hpp"

using namespace tritile;

namespace {
const TileShape t357 = TileShape::make(3, 5, 7, TileVariant::Obtuse120);
const TileShape t587 = TileShape::make(5, 8, 7, TileVariant::Acute60);

bool same_tiling(const Tiling& a, const Tiling& b) {
    if (!(a.shape == b.shape) || a.claimed_count != b.claimed_count) return false;
    if (a.target.vertices() != std::vector<Point>(b.target.vertices())) return false;
    if (a.placements.size() != b.placements.size()) return false;
    for (std::size_t i = 0; i < a.placements.size(); ++i)
        if (!(a.placements[i].iso == b.placements[i].iso)) return false;
    return true;
}
}  // namespace

TEST_CASE("document round trip is the identity") {
    for (const Tiling& t : {tile_unit_parallelogram(t357), tile_basic_trapezoid(t587),
                            tile_parallelogram(t357, 8)}) {
        TilingDocument doc{t, "generate test params=x"};
        std::string text = serialize_document(doc);
        TilingDocument back = parse_document(text);
        CHECK(same_tiling(doc.tiling, back.tiling));
        CHECK(back.meta == doc.meta);
        // serialization is deterministic
        CHECK(serialize_document(back) == text);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_document("not json"), ParseError);
    CHECK_THROWS_AS(parse_document("{}"), ParseError);
    CHECK_THROWS_AS(parse_document("{\"format_version\": 99}"), ParseError);
    TilingDocument doc{tile_unit_parallelogram(t357), ""};
    std::string good = serialize_document(doc);
    // truncation breaks parsing
    CHECK_THROWS_AS(parse_document(good.substr(0, good.size() / 2)), ParseError);
    // corrupt a tuple entry
    std::string bad = good;
    auto pos = bad.find("\"placements\"");
    pos = bad.find('"', bad.find('[', pos));
    bad.replace(pos, 3, "\"zz");
    CHECK_THROWS_AS(parse_document(bad), ParseError);
}

TEST_CASE("svg output is deterministic and complete") {
    Tiling t = tile_unit_parallelogram(t357);
    TilingDocument doc{t, "generate parallelogram"};
    std::string svg1 = render_svg(doc, 9);
    std::string svg2 = render_svg(doc, 9);
    CHECK(svg1 == svg2);
    // one polygon per tile plus the target outline
    std::size_t count = 0, at = 0;
    while ((at = svg1.find("<polygon", at)) != std::string::npos) {
        ++count;
        ++at;
    }
    CHECK(count == t.placements.size() + 1);
    CHECK(svg1.find("tile=3,5,7") != std::string::npos);
    CHECK(svg1.find("N=2") != std::string::npos);
    CHECK(svg1.find("<svg") != std::string::npos);
}

TEST_CASE("svg digits parameter controls coordinates") {
    Tiling t = reptile_subdivision(t357, 1);
    TilingDocument doc{t, ""};
    std::string s3 = render_svg(doc, 3);
    CHECK(s3.find("1.856") != std::string::npos);  // height 15 sqrt3 / 14 to 3 digits
    std::string s9 = render_svg(doc, 9);
    CHECK(s9 != s3);
}
