#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "diagrams.hpp"
#include "generate.hpp"
#include "maps.hpp"

namespace tricross {

using json = nlohmann::json;

inline json to_json(const SPdCode& code) {
    json cs = json::array();
    for (const auto& x : code.crossings)
        cs.push_back({{"name", to_string(x.name)}, {"edges", x.edges}});
    return {{"crossings", cs}};
}

inline SPdCode spd_from_json(const json& j) {
    SPdCode code;
    for (const auto& x : j.at("crossings")) {
        SPdCrossing c;
        auto name = x.at("name").get<std::string>();
        if (name != "eX" && name != "eY") throw std::invalid_argument("crossing name must be eX or eY");
        c.name = name == "eX" ? CrossingName::eX : CrossingName::eY;
        auto e = x.at("edges").get<std::vector<int>>();
        if (e.size() != 6) throw std::invalid_argument("a triple crossing has six edges");
        std::copy(e.begin(), e.end(), c.edges.begin());
        code.crossings.push_back(c);
    }
    validate(code);
    return code;
}

inline const std::vector<std::string>& catalog_kinds() {
    static const std::vector<std::string> k{"shadows", "ta", "tb", "th", "th0", "gr", "td"};
    return k;
}

struct Catalog {
    std::string kind;
    int n = 0;
    int version = kGeneratorVersion;
    std::vector<json> records;
};

inline std::string catalog_file_name(const std::string& kind, int n) {
    return "catalog_" + kind + "_" + std::to_string(n) + ".jsonl";
}

/// Cache directory: explicit value, else $TRICROSS_CACHE_DIR, else ./tricross-cache.
inline std::filesystem::path cache_dir(const std::string& explicit_dir = "") {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("TRICROSS_CACHE_DIR"); env && *env) return env;
    return "tricross-cache";
}

inline void write_catalog(const std::filesystem::path& file, const Catalog& c) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        json head{{"kind", c.kind}, {"n", c.n}, {"count", c.records.size()}, {"version", c.version}};
        out << head.dump() << '\n';
        for (const auto& r : c.records) out << r.dump() << '\n';
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

/// Returns nothing when the file is missing, was written by another
/// generator version, or is truncated; the caller regenerates then.
inline std::optional<Catalog> read_catalog(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    Catalog c;
    try {
        auto head = json::parse(line);
        c.kind = head.at("kind").get<std::string>();
        c.n = head.at("n").get<int>();
        c.version = head.at("version").get<int>();
        if (c.version != kGeneratorVersion) return std::nullopt;
        auto count = head.at("count").get<std::size_t>();
        while (std::getline(in, line))
            if (!line.empty()) c.records.push_back(json::parse(line));
        if (c.records.size() != count) return std::nullopt;
    } catch (const json::exception&) {
        return std::nullopt;
    }
    return c;
}

inline json gr_record(const GrItem& g) {
    return {{"name", g.name()}, {"quads", g.quads}, {"hexes", g.hexes}, {"rotations", rotations_of(g.map)}};
}

inline json td_record(std::size_t projection, const TripleDiagram& d) {
    std::string lv;
    for (const auto& l : d.levels)
        for (auto x : l) lv += level_char(x);
    return {{"projection", projection}, {"levels", lv}, {"code", serialize(name_crossings(d))}};
}

/// The records of one catalog kind, built from a finished pipeline run.
inline Catalog make_catalog(const std::string& kind, const ProjectionCatalogs& p) {
    Catalog c;
    c.kind = kind;
    c.n = p.n;
    if (kind == "shadows") {
        for (const auto& s : p.sh) c.records.push_back({{"pd", serialize(s.pd)}});
    } else if (kind == "ta") {
        for (const auto& t : p.ta)
            c.records.push_back({{"shadow", t.shadow_index}, {"matching", t.matching}, {"code", serialize(t.code)}});
    } else if (kind == "tb") {
        for (const auto& t : p.tb) c.records.push_back({{"code", serialize(t)}});
    } else if (kind == "th") {
        for (const auto& t : p.th.th) c.records.push_back({{"code", serialize(t)}});
    } else if (kind == "th0") {
        for (const auto& t : p.th.th0) c.records.push_back({{"code", serialize(t)}});
    } else if (kind == "gr") {
        for (const auto& g : p.gr) c.records.push_back(gr_record(g));
    } else if (kind == "td") {
        for (std::size_t i = 0; i < p.th.th.size(); ++i)
            for (const auto& d : enumerate_labelings(p.th.th[i])) c.records.push_back(td_record(i, d));
    } else {
        throw std::invalid_argument("unknown catalog kind " + kind);
    }
    return c;
}

/// Codes stored under "code" in a th/th0/tb catalog.
inline std::vector<SPdCode> codes_of(const Catalog& c) {
    std::vector<SPdCode> out;
    for (const auto& r : c.records) out.push_back(parse_spd(r.at("code").get<std::string>()));
    return out;
}

/// Th_n from the cache when present and current, otherwise generated and
/// written back along with the other kinds of the same run.
inline std::vector<SPdCode> cached_th(int n, const std::filesystem::path& dir, unsigned threads = 1,
                                      int shadow_cap = 10) {
    if (auto c = read_catalog(dir / catalog_file_name("th", n)); c && c->kind == "th" && c->n == n) return codes_of(*c);
    auto p = generate_all(n, threads, shadow_cap);
    for (const auto& kind : {"shadows", "ta", "tb", "th", "th0", "gr"})
        write_catalog(dir / catalog_file_name(kind, n), make_catalog(kind, p));
    return p.th.th;
}

}  // namespace tricross
