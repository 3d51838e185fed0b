// tricross: generate triple-crossing catalogs, classify, and check tables.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricross/tricross.hpp"

#ifndef TRICROSS_DATA_DIR
#define TRICROSS_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace tricross;

namespace {

struct RunConfig {
    std::string cache;
    std::string ref;
    std::string data = TRICROSS_DATA_DIR;
    std::string format = "csv";
    std::string out;
    unsigned threads = default_threads();
    int cap = 16;
};

std::string reference_path(const RunConfig& cfg) {
    return cfg.ref.empty() ? (fs::path(cfg.data) / "reference_le12.csv").string() : cfg.ref;
}

ReferenceTable open_reference(const RunConfig& cfg) {
    auto path = reference_path(cfg);
    if (!fs::exists(path)) throw std::runtime_error("reference file not found: " + path);
    return load_reference(path, cfg.threads);
}

// Writes to --out when given, else stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

DecoratedPd expand_text(const std::string& text) {
    if (text.rfind("PD[", 0) == 0) return decorate_consecutive(parse_pd(text));
    return expand(diagram_from_code(parse_spd(text)));
}

int cmd_generate(const RunConfig& cfg, const std::string& kind, int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n > 1 && 2 * n > cfg.cap)
        throw ResourceLimitError("n = " + std::to_string(n) + " needs " + std::to_string(2 * n) +
                                 "-crossing shadows, over --cap-crossings " + std::to_string(cfg.cap));
    const auto dir = cache_dir(cfg.cache);
    const auto file = dir / catalog_file_name(kind, n);
    std::size_t count;
    if (auto c = read_catalog(file); c && c->kind == kind && c->n == n) {
        count = c->records.size();
    } else {
        auto p = generate_all(n, cfg.threads, cfg.cap);
        for (const auto& k : catalog_kinds())
            if (k != "td" || k == kind) write_catalog(dir / catalog_file_name(k, n), make_catalog(k, p));
        count = read_catalog(file)->records.size();
    }
    if (cfg.format == "json")
        std::cout << nlohmann::json{{"kind", kind}, {"n", n}, {"count", count}, {"file", file.string()}}.dump() << '\n';
    else
        std::cout << count << '\n';
    return 0;
}

int cmd_classify(const RunConfig& cfg, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n must be at least 1");
    auto ref = open_reference(cfg);
    std::vector<std::vector<SPdCode>> th;
    for (int n = 1; n <= n_max; ++n) th.push_back(cached_th(n, cache_dir(cfg.cache), cfg.threads, cfg.cap));
    auto res = classify(th, ref, cfg.threads);

    auto write_csv = [&](std::ostream& os) {
        os << "name,c3,witness_spd,ambiguous\n";
        for (const auto& r : res.records)
            os << r.name << ',' << r.c3 << ',' << csv_quote(r.witness) << ',' << (r.ambiguous ? "true" : "false")
               << '\n';
    };
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& lv : res.levels) {
        nlohmann::json un = nlohmann::json::array();
        for (const auto& u : lv.unmatched)
            un.push_back({{"phi", u.phi}, {"components", u.components}, {"diagrams", u.diagrams}});
        summary.push_back({{"n", lv.n},
                           {"Th", lv.projections},
                           {"TD", lv.diagrams},
                           {"evaluated", lv.evaluated},
                           {"trivial", lv.trivial},
                           {"tie_breaks", lv.tie_breaks},
                           {"K", lv.knots.size()},
                           {"L", lv.links.size()},
                           {"knots", lv.knots},
                           {"links", lv.links},
                           {"unmatched", un}});
    }
    nlohmann::json doc{{"reference", reference_path(cfg)}, {"levels", summary}};
    for (const auto& lv : res.levels)
        if (!lv.unmatched.empty())
            std::cerr << "n=" << lv.n << ": " << lv.unmatched.size()
                      << " polynomials without a reference match (see summary)\n";

    if (!cfg.out.empty()) {
        // <out>.csv and <out>.json
        std::ofstream csv(cfg.out + ".csv", std::ios::binary), js(cfg.out + ".json", std::ios::binary);
        if (!csv || !js) throw std::runtime_error("cannot write " + cfg.out + ".csv/.json");
        write_csv(csv);
        js << doc.dump(2) << '\n';
        for (const auto& lv : res.levels)
            std::cout << "c3=" << lv.n << ": " << lv.knots.size() << " knots, " << lv.links.size() << " links\n";
    } else if (cfg.format == "json") {
        nlohmann::json recs = nlohmann::json::array();
        for (const auto& r : res.records)
            recs.push_back({{"name", r.name}, {"c3", r.c3}, {"witness_spd", r.witness}, {"ambiguous", r.ambiguous},
                            {"shared_with", r.shared_with}});
        doc["records"] = recs;
        std::cout << doc.dump(2) << '\n';
    } else {
        write_csv(std::cout);
    }
    return 0;
}

int cmd_poly(const RunConfig& cfg, const std::string& text) {
    KauffmanEngine engine(KauffmanOptions{true, true, cfg.cap});
    auto d = expand_text(text);
    auto f = kauffman_f(d, engine);
    Sink sink(cfg.out);
    if (cfg.format == "json") {
        auto phi = kauffman_unoriented(d, engine);
        sink.os() << nlohmann::json{{"input", text},
                                    {"crossings", d.num_crossings()},
                                    {"components", component_count(d)},
                                    {"F", f.to_string()},
                                    {"phi", phi.to_string()}}
                         .dump()
                  << '\n';
    } else {
        sink.os() << f.to_string() << '\n';
    }
    return 0;
}

// Dual of the loop-stripped projection, as permutations and face degrees.
int cmd_dual(const RunConfig& cfg, const std::string& text) {
    // eX tuples are written against the rotation, so read the geometry first
    auto g = dual(strip_loops(diagram_from_code(parse_spd(text)).projection));
    auto pt = sigma_tau(g);
    std::vector<int> deg = degrees(faces(g));
    Sink sink(cfg.out);
    if (cfg.format == "json") {
        sink.os() << nlohmann::json{{"vertices", vertices(g).size()},
                                    {"edges", g.num_edges()},
                                    {"face_degrees", deg},
                                    {"rotations", rotations_of(g)},
                                    {"sigma", cycle_notation(pt.sigma)},
                                    {"tau", cycle_notation(pt.tau)}}
                         .dump()
                  << '\n';
    } else {
        sink.os() << "vertices,edges,face_degrees,sigma,tau\n" << vertices(g).size() << ',' << g.num_edges() << ",\"";
        for (std::size_t i = 0; i < deg.size(); ++i) sink.os() << (i ? " " : "") << deg[i];
        sink.os() << "\"," << csv_quote(cycle_notation(pt.sigma)) << ',' << csv_quote(cycle_notation(pt.tau)) << '\n';
    }
    return 0;
}

// Local moves available on a diagram and the codes they lead to.
int cmd_moves(const RunConfig& cfg, const std::string& text) {
    auto d = diagram_from_code(parse_spd(text));
    struct Row {
        std::string move;
        int site;
        std::string result;
    };
    std::vector<Row> rows;
    for (int c : detect_m1(d.projection)) rows.push_back({"M1", c + 1, ""});
    for (int c : detect_m2(d.projection)) {
        rows.push_back({"M2", c + 1, serialize(name_crossings(apply_m2(d, c)))});
        if (d.size() > 1 && detail::loop_site(d, c).straight != Level::M)
            rows.push_back({"T1", c + 1, serialize(name_crossings(reduce_t1(d, c)))});
    }
    auto e = expand(d);
    auto clasps = find_clasps(e);
    for (std::size_t i = 0; i < clasps.size(); ++i) {
        auto m = clasp_convert(e, clasps[i]);
        rows.push_back({"clasp", static_cast<int>(i) + 1, serialize(expand(m))});
    }
    Sink sink(cfg.out);
    if (cfg.format == "json") {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rows) a.push_back({{"move", r.move}, {"site", r.site}, {"result", r.result}});
        sink.os() << a.dump(2) << '\n';
    } else {
        sink.os() << "move,site,result\n";
        for (const auto& r : rows) sink.os() << r.move << ',' << r.site << ',' << csv_quote(r.result) << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify-tables needs n >= 2");
    std::vector<CheckResult> all;
    auto ref = open_reference(cfg);
    const int limit = reference_crossing_limit(ref);
    std::vector<std::vector<SPdCode>> th;
    std::vector<std::vector<SPdCode>> th0;
    for (int n = 1; n <= n_max; ++n) {
        auto p = generate_all(n, cfg.threads, std::max(cfg.cap, 2 * n));
        for (auto& c : check_counts(p)) all.push_back(c);
        th.push_back(p.th.th);
        th0.push_back(p.th.th0);
    }
    const int classify_to = std::min(n_max, 4);
    auto res = classify(std::vector<std::vector<SPdCode>>(th.begin(), th.begin() + classify_to), ref, cfg.threads);
    const auto c3 = load_c3_rows((fs::path(cfg.data) / "c3_tables.csv").string());
    for (int n = 1; n <= classify_to; ++n) {
        all.push_back(check_level(res, c3, n, true, limit));
        all.push_back(check_level(res, c3, n, false, limit));
    }
    all.push_back(check_contraction_example());
    all.push_back(check_rotated_pair(th[1][0], "(1,6,5,4,3,2)(7,12,11,10,9,8)"));
    for (const auto& row : load_minimal_rows((fs::path(cfg.data) / "minimal_diagrams.csv").string())) {
        auto r = check_minimal_row(row, ref);
        r.name = "minimal diagram " + r.name;
        all.push_back(r);
    }
    if (n_max >= 4) all.push_back(check_c2(check_c2_3c3(4, th0[3]), false));
    if (n_max >= 5) all.push_back(check_c2(check_c2_3c3(5, th0[4]), true));

    int failed = 0;
    Sink sink(cfg.out);
    if (cfg.format == "json") {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : all) a.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        sink.os() << a.dump(2) << '\n';
    }
    for (const auto& c : all) {
        failed += !c.pass;
        if (cfg.format != "json") sink.os() << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    std::cerr << all.size() - failed << " of " << all.size() << " checks passed\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triple-crossing projections, diagrams and their knot types"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--cache", cfg.cache, "catalog directory (default $TRICROSS_CACHE_DIR or ./tricross-cache)");
    app.add_option("--ref", cfg.ref, "reference CSV name,components,pd (default data/reference_le12.csv)");
    app.add_option("--data", cfg.data, "directory with the shipped tables")->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--cap-crossings", cfg.cap, "largest classical crossing count to generate or evaluate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--out", cfg.out, "output file (classify: prefix for .csv and .json)");

    std::string kind, text;
    int n = 0;
    auto* gen = app.add_subcommand("generate", "write a catalog and print its size");
    gen->add_option("kind", kind)->required()->check(CLI::IsMember(catalog_kinds()));
    gen->add_option("n", n)->required();
    auto* cls = app.add_subcommand("classify", "triple-crossing numbers of the reference names");
    cls->add_option("n", n)->required();
    auto* poly = app.add_subcommand("poly", "Kauffman polynomial F of a sPD or PD code");
    poly->add_option("code", text)->required();
    auto* dual_cmd = app.add_subcommand("dual", "dual graph of a projection");
    dual_cmd->add_option("code", text)->required();
    auto* moves = app.add_subcommand("moves", "M1/M2/T1 sites and clasps of a diagram");
    moves->add_option("code", text)->required();
    auto* ver = app.add_subcommand("verify-tables", "re-run the published checks up to n");
    ver->add_option("n", n)->required();
    for (auto* s : {gen, cls, poly, dual_cmd, moves, ver}) s->fallthrough();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*gen) return cmd_generate(cfg, kind, n);
        if (*cls) return cmd_classify(cfg, n);
        if (*poly) return cmd_poly(cfg, text);
        if (*dual_cmd) return cmd_dual(cfg, text);
        if (*moves) return cmd_moves(cfg, text);
        if (*ver) return cmd_verify(cfg, n);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
