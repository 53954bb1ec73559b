// lgcm: decide Cohen-Macaulayness of clique complexes of line graphs.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lgcm/classify.hpp"
#include "lgcm/errors.hpp"
#include "lgcm/harness.hpp"
#include "lgcm/line_graph.hpp"
#include "lgcm/oracle.hpp"

using nlohmann::json;
using namespace lgcm;

namespace {

constexpr int kSchema = 1;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitNotLineGraph = 4;

FieldId parse_field(const std::string& s) {
    long long p = std::stoll(s); // throws on junk; caught by main
    return p == 0 ? FieldId::rationals() : FieldId::gf(p);
}

std::vector<FieldId> parse_fields(const std::vector<std::string>& specs) {
    std::vector<FieldId> out;
    for (const auto& s : specs) out.push_back(parse_field(s));
    if (out.empty())
        out = {FieldId::gf(2), FieldId::gf(32003), FieldId::rationals()};
    return out;
}

NamedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    NamedGraph ng = read_edge_list(in);
    if (ng.graph.num_edges() == 0) throw input_error(path + ": no edges");
    return ng;
}

const char* pure_name(PureKind k) {
    switch (k) {
    case PureKind::NotPure: return "NotPure";
    case PureKind::StarRegular: return "StarRegular";
    case PureKind::Degree3Triangle: return "Degree3Triangle";
    case PureKind::PathOrCycle: return "PathOrCycle";
    }
    return "?";
}

json verdict_json(const Verdict& v) {
    return {{"value", v.value}, {"reason", v.reason}};
}

int cmd_analyze(const std::string& path, const std::string& input_kind,
                bool with_oracle, const std::vector<std::string>& field_specs) {
    NamedGraph ng = load_graph(path);
    json report{{"schema", kSchema}, {"command", "analyze"}, {"input", path}};
    report["treated_as"] = input_kind;

    Graph h = ng.graph;
    if (input_kind == "g") {
        auto rec = recognize_root(ng.graph);
        if (!rec) {
            report["line_graph"] = false;
            std::cout << report.dump(2) << "\n";
            return kExitNotLineGraph;
        }
        report["line_graph"] = true;
        h = rec->map.root();
        std::ostringstream root_edges;
        write_edge_list(root_edges, h);
        report["recognized_root"] = root_edges.str();
    }

    if (connected_components(h).size() == 1) {
        PureClass pc = classify_pure(h);
        report["pure_class"] = pure_name(pc.kind);
        if (pc.kind == PureKind::StarRegular) report["pure_class_r"] = pc.r;
    } else {
        report["pure_class"] = nullptr;
    }
    Verdict cm = decide_cm(h), seq = decide_seq_cm(h), gor = decide_gorenstein(h);
    report["cm"] = verdict_json(cm);
    report["seq_cm"] = verdict_json(seq);
    report["gorenstein"] = verdict_json(gor);

    bool mismatch = false;
    if (with_oracle) {
        SimplicialComplex delta = clique_complex(line_graph(h));
        json oracle_out = json::array();
        for (const FieldId& f : parse_fields(field_specs)) {
            auto t0 = std::chrono::steady_clock::now();
            bool ocm = oracle::is_cm(delta, f);
            bool oseq = oracle::is_seq_cm(delta, f);
            bool ogor = oracle::is_gorenstein(delta, f);
            double dt = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            oracle_out.push_back({{"field", f.name()},
                                  {"is_cm", ocm},
                                  {"is_seq_cm", oseq},
                                  {"is_gorenstein", ogor},
                                  {"seconds", dt}});
            if (ocm != cm.value || oseq != seq.value || ogor != gor.value)
                mismatch = true;
        }
        report["oracle"] = oracle_out;
        report["oracle_mismatch"] = mismatch;
    }
    std::cout << report.dump(2) << "\n";
    return mismatch ? kExitMismatch : 0;
}

int cmd_verify(const std::string& path, const std::vector<std::string>& field_specs) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    NamedComplex nc = read_facet_list(in);
    const SimplicialComplex& c = nc.complex;

    json report{{"schema", kSchema}, {"command", "verify"}, {"input", path}};
    report["facets"] = c.facets().size();
    bool pure = !c.is_void() && c.is_pure();
    report["is_pure"] = pure;
    if (pure) report["strongly_connected"] = is_strongly_connected(c);

    json per_field = json::array();
    for (const FieldId& f : parse_fields(field_specs)) {
        HomologyProfile h = reduced_homology(c, f);
        json betti = json::object();
        for (auto [i, b] : h.betti) betti[std::to_string(i)] = b;
        per_field.push_back({{"field", f.name()},
                             {"betti", betti},
                             {"is_cm", oracle::is_cm(c, f)},
                             {"is_seq_cm", oracle::is_seq_cm(c, f)},
                             {"is_gorenstein", oracle::is_gorenstein(c, f)}});
    }
    report["fields"] = per_field;
    report["is_vertex_decomposable"] = oracle::is_vertex_decomposable(c);
    if ((int)c.facets().size() <= oracle::kShellabilityFacetLimit)
        report["is_shellable"] = oracle::is_shellable(c);
    else
        report["is_shellable"] = "skipped: facet count above capacity";
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_catalog(const std::string& type, const std::string& out_path) {
    const harness::ExceptionalCatalog& cat = type == "gorenstein"
                                                 ? harness::derive_catalog_gorenstein()
                                                 : harness::derive_catalog_cm();
    if (out_path.empty()) {
        harness::write_catalog(std::cout, cat);
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot open " + out_path);
        harness::write_catalog(out, cat);
    }
    std::cout << cat.graphs.size() << " members\n";
    return 0;
}

int cmd_crosscheck(int max_n, const std::vector<std::string>& field_specs, int jobs,
                   bool inject_fault) {
    harness::CrossCheckReport rep =
        harness::cross_check(max_n, parse_fields(field_specs), jobs, inject_fault);
    for (const auto& r : rep.records) {
        json line{{"schema", kSchema},
                  {"key", r.key},
                  {"n", r.n},
                  {"pure", r.pure},
                  {"cm", r.cm},
                  {"seq_cm", r.seq_cm},
                  {"gorenstein", r.gorenstein},
                  {"shellability_skipped", r.shellability_skipped},
                  {"mismatches", r.mismatches}};
        std::cout << line.dump() << "\n";
    }
    json summary{{"schema", kSchema},
                 {"graphs", rep.records.size()},
                 {"mismatches", rep.total_mismatches},
                 {"shellability_skips", rep.shellability_skips},
                 {"seconds", rep.seconds}};
    std::cout << summary.dump() << "\n";
    return rep.total_mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_bench(const std::string& shape, long long size, int repeat) {
    if (size < 2 || size > 10'000'000) throw input_error("size out of range");
    json times = json::array();
    std::string verdict;
    for (int i = 0; i < repeat; ++i) {
        CompactGraph g = shape == "cycle"    ? CompactGraph::cycle(size)
                         : shape == "spider" ? CompactGraph::spider(4, std::max<long long>(1, (size - 1) / 4))
                                             : CompactGraph::path(size);
        auto t0 = std::chrono::steady_clock::now();
        Verdict v = linear_algorithm(std::move(g));
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        times.push_back(dt);
        verdict = v.value ? "true" : "false";
    }
    json report{{"schema", kSchema},
                {"command", "bench"},
                {"shape", shape},
                {"size", size},
                {"verdict", verdict},
                {"seconds", times}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"line-graph clique complex Cohen-Macaulayness tools"};
    app.require_subcommand(1);

    std::string file, input_kind = "h", out_path, type = "cm", shape = "path";
    std::vector<std::string> fields;
    bool with_oracle = false, inject_fault = false, complex_flag = false;
    int max_n = 5, jobs = 1, repeat = 3;
    long long size = 1000000;

    auto* analyze = app.add_subcommand("analyze", "classify a graph from an edge list");
    analyze->add_option("file", file)->required();
    analyze->add_option("--input-graph", input_kind)
        ->check(CLI::IsMember({"h", "g"}));
    analyze->add_flag("--with-oracle", with_oracle);
    analyze->add_option("--field", fields);

    auto* verify = app.add_subcommand("verify", "run the oracles on a facet list");
    verify->add_option("file", file)->required();
    verify->add_flag("--complex", complex_flag); // facet-list input is implied
    verify->add_option("--field", fields);

    auto* catalog = app.add_subcommand("catalog", "derive an exceptional catalog");
    catalog->add_option("--type", type)->check(CLI::IsMember({"cm", "gorenstein"}));
    catalog->add_option("--out", out_path);

    auto* crosscheck = app.add_subcommand("crosscheck", "classifier vs oracle sweep");
    crosscheck->add_option("--max-n", max_n)->check(CLI::Range(2, 7));
    crosscheck->add_option("--field", fields);
    crosscheck->add_option("--jobs", jobs);
    crosscheck->add_flag("--inject-fault", inject_fault);

    auto* bench = app.add_subcommand("bench", "time the streaming algorithm");
    bench->add_option("--shape", shape)->check(CLI::IsMember({"path", "cycle", "spider"}));
    bench->add_option("--size", size);
    bench->add_option("--repeat", repeat);

    CLI11_PARSE(app, argc, argv);
    try {
        if (analyze->parsed()) return cmd_analyze(file, input_kind, with_oracle, fields);
        if (verify->parsed()) return cmd_verify(file, fields);
        if (catalog->parsed()) return cmd_catalog(type, out_path);
        if (crosscheck->parsed())
            return cmd_crosscheck(max_n, fields, jobs, inject_fault);
        if (bench->parsed()) return cmd_bench(shape, size, repeat);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
