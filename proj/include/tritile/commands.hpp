#pragma once

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tritile/document.hpp"
#include "tritile/families.hpp"
#include "tritile/search.hpp"
#include "tritile/svg.hpp"

namespace tritile {

// command exit codes, fixed so shell harnesses can tell outcomes apart
enum ExitCode {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitNotConstructible = 2,
    kExitInternal = 3,
    kExitParse = 4,
    kExitBudget = 5,
};

struct GenerateOptions {
    std::string family;
    long a = 0, b = 0, c = 0;
    TileVariant variant = TileVariant::Obtuse120;
    std::optional<long> m;
    std::optional<std::array<long, 3>> rst;
    std::optional<long> k, k1;
    std::optional<long> x, ell;
    std::optional<long> horiz;
    bool swap = false;
    int option = 2;
    std::string out_path = "tiling.json";
};

namespace detail {

inline std::string generate_params_str(const GenerateOptions& o) {
    std::ostringstream p;
    if (o.rst) p << "rst=" << (*o.rst)[0] << "," << (*o.rst)[1] << "," << (*o.rst)[2];
    if (o.m) p << (p.tellp() > 0 ? ";" : "") << "m=" << *o.m;
    if (o.k) p << (p.tellp() > 0 ? ";" : "") << "k=" << *o.k << ";k1=" << (o.k1 ? *o.k1 : 0);
    if (o.x) p << (p.tellp() > 0 ? ";" : "") << "x=" << *o.x << ";ell=" << (o.ell ? *o.ell : 0);
    if (o.horiz) p << (p.tellp() > 0 ? ";" : "") << "horiz=" << *o.horiz;
    if (o.family == "isosceles" || o.family == "arith2" || o.family == "odd" ||
        o.family == "triple")
        p << ";swap=" << (o.swap ? "true" : "false");
    if (o.family == "arithmetic") p << ";option=" << o.option;
    return p.str();
}

inline long require(const std::optional<long>& v, const char* what) {
    if (!v) throw NotConstructible(std::string("missing required parameter: ") + what);
    return *v;
}

}  // namespace detail

inline int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
    TileShape shape;
    try {
        shape = TileShape::make(o.a, o.b, o.c, o.variant);
    } catch (const TileError& e) {
        err << "invalid tile: " << e.what() << "\n";
        return kExitNotConstructible;
    }
    Tiling tiling{shape, ConvexPolygon({Point{QS3(0), QS3(0)}, Point{QS3(1), QS3(0)},
                                        Point{QS3(0), QS3(1)}}),
                  {}, 0};
    try {
        if (o.family == "equilateral") {
            if (o.rst) {
                tiling = tile_equilateral(shape, (*o.rst)[0], (*o.rst)[1], (*o.rst)[2]);
            } else {
                long m = detail::require(o.m, "m (or r,s,t)");
                long thr = equiconstruct_threshold(shape);
                if (m < thr)
                    throw NotConstructible("m must be at least " + std::to_string(thr));
                long r0 = thr / 3;
                tiling = tile_equilateral(shape, r0, r0, m - 2 * r0);
            }
        } else if (o.family == "isosceles") {
            tiling = tile_isosceles(shape, detail::require(o.m, "m"), o.swap);
        } else if (o.family == "arith2") {
            tiling = tile_arith2(shape, detail::require(o.m, "m"), o.swap);
        } else if (o.family == "odd") {
            tiling = tile_odd(shape, detail::require(o.m, "m"), o.swap);
        } else if (o.family == "arithmetic") {
            tiling = tile_arithmetic(shape, detail::require(o.m, "m"), o.option);
        } else if (o.family == "arith-frob") {
            tiling = tile_arithmetic_frobenius(shape, detail::require(o.k, "k"),
                                               detail::require(o.k1, "k1"));
        } else if (o.family == "triple") {
            tiling = tile_triple_angle(shape, detail::require(o.k, "k"),
                                       detail::require(o.k1, "k1"), o.swap);
        } else if (o.family == "trapezoid") {
            tiling = tile_ideal_trapezoid(shape, detail::require(o.x, "x"),
                                          detail::require(o.ell, "ell"));
        } else if (o.family == "parallelogram") {
            tiling = tile_parallelogram(shape, detail::require(o.horiz, "horiz"));
        } else {
            err << "unknown construction: " << o.family << "\n";
            return kExitNotConstructible;
        }
    } catch (const NotConstructible& e) {
        err << "not constructible: " << e.what() << "\n";
        return kExitNotConstructible;
    }

    VerifyReport rep = verify_tiling(tiling);
    bool ok = rep.passed;
    if (ok) {
        TilingDocument doc{tiling, "generate " + o.family + " " + detail::generate_params_str(o)};
        write_document_file(doc, o.out_path);
    }
    out << o.family << " shape=" << shape.str() << " variant=" << variant_name(shape.variant)
        << " params=" << detail::generate_params_str(o) << " N=" << tiling.claimed_count
        << " verified=" << (ok ? "yes" : "no") << "\n";
    if (!ok) {
        err << "internal error: construction failed verification\n";
        return kExitInternal;
    }
    return kExitOk;
}

inline int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::optional<TilingDocument> doc;
    try {
        doc = read_document_file(path);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    VerifyReport rep = verify_tiling(doc->tiling);
    out << "tiles=" << rep.tile_count << " passed=" << (rep.passed ? "yes" : "no") << "\n";
    for (const VerifyFailure& f : rep.failures) {
        out << "failure kind=" << failure_kind_name(f.kind);
        if (f.i >= 0) out << " i=" << f.i;
        if (f.j >= 0) out << " j=" << f.j;
        out << "\n";
    }
    return rep.passed ? kExitOk : kExitVerifyFailed;
}

inline int cmd_render(const std::string& path, const std::string& out_svg, int digits, bool force,
                      std::ostream& out, std::ostream& err) {
    std::optional<TilingDocument> doc;
    try {
        doc = read_document_file(path);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (!force) {
        VerifyReport rep = verify_tiling(doc->tiling);
        if (!rep.passed) {
            err << "document does not verify; use --force to render anyway\n";
            return kExitVerifyFailed;
        }
    }
    std::string svg = render_svg(*doc, digits);
    std::ofstream f(out_svg, std::ios::binary);
    if (!f) {
        err << "cannot open for writing: " << out_svg << "\n";
        return kExitInternal;
    }
    f << svg;
    out << "rendered " << doc->tiling.claimed_count << " tiles to " << out_svg << "\n";
    return kExitOk;
}

inline int cmd_table(long a, long b, long c, TileVariant variant, std::optional<long> limit,
                     bool csv, std::ostream& out, std::ostream& err) {
    TileShape shape;
    try {
        shape = TileShape::make(a, b, c, variant);
    } catch (const TileError& e) {
        err << "invalid tile: " << e.what() << "\n";
        return kExitNotConstructible;
    }
    auto rows = smallest_N_table(shape);
    if (csv) {
        out << "family,angles,coefficient,m_set,smallest_N";
        if (limit) out << ",N_values_to_" << *limit;
        out << "\n";
        for (const auto& row : rows) {
            out << row.family.name << ",\"" << row.family.angles << "\","
                << row.family.coefficient(shape) << ",\"" << row.family.m_set_description(shape)
                << "\"," << row.smallest_n;
            if (limit) {
                out << ",\"";
                auto vals = family_N_values(shape, row.family, *limit);
                for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? " " : "") << vals[i];
                out << "\"";
            }
            out << "\n";
        }
        return kExitOk;
    }
    out << "tile (" << shape.str() << ") " << variant_name(shape.variant) << "\n";
    std::size_t name_w = 4, ang_w = 6, law_w = 3;
    std::vector<std::string> laws;
    for (const auto& row : rows) {
        laws.push_back("N = " + std::to_string(row.family.coefficient(shape)) + " m^2, " +
                       row.family.m_set_description(shape));
        name_w = std::max(name_w, row.family.name.size());
        ang_w = std::max(ang_w, row.family.angles.size());
        law_w = std::max(law_w, laws.back().size());
    }
    out << std::left << std::setw(static_cast<int>(name_w) + 2) << "name"
        << std::setw(static_cast<int>(ang_w) + 2) << "angles"
        << std::setw(static_cast<int>(law_w) + 2) << "law"
        << "smallest N\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(name_w) + 2) << rows[i].family.name
            << std::setw(static_cast<int>(ang_w) + 2) << rows[i].family.angles
            << std::setw(static_cast<int>(law_w) + 2) << laws[i] << rows[i].smallest_n << "\n";
    }
    if (limit) {
        out << "\nN values up to " << *limit << "\n";
        for (const auto& row : rows) {
            out << std::left << std::setw(static_cast<int>(name_w) + 2) << row.family.name;
            auto vals = family_N_values(shape, row.family, *limit);
            for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? " " : "") << vals[i];
            out << "\n";
        }
    }
    return kExitOk;
}

struct SearchOptions {
    long a = 0, b = 0, c = 0;
    TileVariant variant = TileVariant::Obtuse120;
    std::optional<long> equilateral;
    std::optional<std::array<long, 2>> trapezoid;
    std::optional<std::array<long, 2>> parallelogram;
    std::optional<std::array<long, 3>> triangle;
    SearchBudget budget;
    std::string out_path;
};

inline int cmd_search(const SearchOptions& o, std::ostream& out, std::ostream& err) {
    TileShape shape;
    try {
        shape = TileShape::make(o.a, o.b, o.c, o.variant);
    } catch (const TileError& e) {
        err << "invalid tile: " << e.what() << "\n";
        return kExitNotConstructible;
    }
    std::optional<ConvexPolygon> region;
    try {
        if (o.equilateral) region = region_equilateral(*o.equilateral);
        else if (o.trapezoid) region = region_ideal_trapezoid((*o.trapezoid)[0], (*o.trapezoid)[1]);
        else if (o.parallelogram)
            region = region_parallelogram((*o.parallelogram)[0], (*o.parallelogram)[1]);
        else if (o.triangle)
            region = region_triangle((*o.triangle)[0], (*o.triangle)[1], (*o.triangle)[2]);
    } catch (const std::invalid_argument& e) {
        err << "bad region: " << e.what() << "\n";
        return kExitNotConstructible;
    }
    if (!region) {
        err << "no region given (need --equilateral, --trapezoid, --parallelogram or --triangle)\n";
        return kExitNotConstructible;
    }
    auto t0 = std::chrono::steady_clock::now();
    SearchOutcome res = exhaustive_search(*region, shape, o.budget);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << "status=" << search_status_name(res.status) << " nodes=" << res.nodes_explored;
    if (res.tiling) out << " tiles=" << res.tiling->placements.size();
    out << " elapsed=" << std::fixed << std::setprecision(3) << elapsed << "s\n";
    if (res.status == SearchStatus::Found && !o.out_path.empty()) {
        TilingDocument doc{*res.tiling, "search"};
        write_document_file(doc, o.out_path);
        out << "wrote " << o.out_path << "\n";
    }
    if (res.status == SearchStatus::BudgetExceeded) return kExitBudget;
    return kExitOk;
}

}  // namespace tritile
