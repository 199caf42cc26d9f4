// qpc: Ehrhart quasi-polynomials of duals of Fano polygons, polygon
// mutations, singularity content and quasi-period collapse reports.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qpc/collapse.hpp"
#include "qpc/ehrhart.hpp"
#include "qpc/error.hpp"
#include "qpc/geometry.hpp"
#include "qpc/json.hpp"
#include "qpc/markov.hpp"
#include "qpc/mutation.hpp"
#include "qpc/singularity.hpp"

namespace {

using qpc::Int;
using qpc::Json;

// 0 success (findings included), 1 malformed input, 2 not Fano,
// 3 invalid mutation data, 4 internal error
int exit_code_for(qpc::Errc code) {
    switch (code) {
        case qpc::Errc::parse_error:
        case qpc::Errc::degenerate_polygon:
            return 1;
        case qpc::Errc::not_full_dimensional:
        case qpc::Errc::origin_not_interior:
        case qpc::Errc::non_integral_vertex:
        case qpc::Errc::non_primitive_vertex:
            return 2;
        case qpc::Errc::invalid_mutation_data:
        case qpc::Errc::factor_too_long:
        case qpc::Errc::vertex_not_covered:
            return 3;
        default:
            return 4;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) qpc::fail(qpc::Errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qpc::Polygon load_polygon(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_input(path));
    } catch (const nlohmann::json::exception& e) {
        qpc::fail(qpc::Errc::parse_error, e.what());
    }
    return qpc::parse_polygon(j);
}

qpc::FanoPolygon load_fano(const std::string& path) {
    return qpc::FanoPolygon::validate(load_polygon(path));
}

qpc::Vec2 parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        qpc::fail(qpc::Errc::invalid_mutation_data, std::string(what) + " must be 'a,b'");
    try {
        return qpc::Vec2{Int(text.substr(0, comma)), Int(text.substr(comma + 1))};
    } catch (const std::invalid_argument&) {
        qpc::fail(qpc::Errc::invalid_mutation_data, "bad integer in " + std::string(what));
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_analyze(const std::string& file) {
    const qpc::FanoPolygon p = load_fano(file);
    const qpc::Polygon d = qpc::dual(p);
    const qpc::QuasiPolynomial qp = qpc::minimize_period(qpc::quasi_polynomial(d));
    const qpc::CollapseReport report = qpc::predict(p);

    Json out = qpc::collapse_report_json(report);
    out["input"] = qpc::polygon_json(p);
    out["dual"] = qpc::polygon_json(d);
    out["quasi_polynomial"] = qpc::quasi_polynomial_json(qp);
    emit(out);
    return 0;
}

int run_dual(const std::string& file) {
    emit(qpc::polygon_json(qpc::dual(load_fano(file))));
    return 0;
}

int run_ehrhart(const std::string& file, long terms) {
    const qpc::Polygon p = load_polygon(file);
    const qpc::QuasiPolynomial fit = qpc::quasi_polynomial(p);
    const qpc::QuasiPolynomial qp = qpc::minimize_period(fit);
    Json out{{"polygon", qpc::polygon_json(p)},
             {"denominator", p.denominator().get_si()},
             {"quasi_period", qp.period.get_si()},
             {"quasi_polynomial", qpc::quasi_polynomial_json(qp)},
             {"series", qpc::series_json(qpc::ehrhart_series(p, terms, fit))}};
    emit(out);
    return 0;
}

int run_mutate(const std::string& file, const std::string& w, const std::string& f, long m,
               bool to_normal_form) {
    const qpc::FanoPolygon p = load_fano(file);
    const qpc::MutationData data =
        qpc::MutationData::make(parse_pair(w, "--w"), parse_pair(f, "--f"), Int(m));
    qpc::FanoPolygon mutant = qpc::mutate(p, data);
    if (to_normal_form) mutant = qpc::normal_form(mutant);
    emit(qpc::polygon_json(mutant));
    return 0;
}

int run_neighbors(const std::string& file) {
    const qpc::FanoPolygon p = load_fano(file);
    Json out = Json::array();
    for (const auto& [data, nb] : qpc::mutation_neighbors(p))
        out.push_back(Json{{"data", qpc::mutation_json(data)},
                           {"polygon", qpc::polygon_json(nb)}});
    emit(out);
    return 0;
}

int run_graph(const std::string& file, long depth) {
    emit(qpc::graph_json(qpc::mutation_graph(load_fano(file), depth)));
    return 0;
}

int run_markov(long max_c) {
    Json out = Json::array();
    for (const auto& t : qpc::markov_triples(Int(max_c)))
        out.push_back(qpc::markov_report_json(qpc::verify_markov(t)));
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ehrhart quasi-periods, Fano polygon mutations and quasi-period collapse"};
    app.require_subcommand(1);

    std::string file;
    std::string w_text, f_text;
    long m = 1, depth = 0, terms = 8, max_c = 2;
    bool to_normal_form = false;

    auto* analyze = app.add_subcommand("analyze", "collapse report for a Fano polygon");
    analyze->add_option("file", file, "polygon JSON file, or - for stdin")->required();

    auto* dual_cmd = app.add_subcommand("dual", "polar dual of a Fano polygon");
    dual_cmd->add_option("file", file)->required();

    auto* ehrhart = app.add_subcommand("ehrhart", "quasi-polynomial and series of a polygon");
    ehrhart->add_option("file", file)->required();
    ehrhart->add_option("--terms", terms, "series length (default 8)");

    auto* mutate = app.add_subcommand("mutate", "mutate a Fano polygon");
    mutate->add_option("file", file)->required();
    mutate->add_option("--w", w_text, "covector a,b")->required();
    mutate->add_option("--f", f_text, "factor direction p,q")->required();
    mutate->add_option("--m", m, "factor length (default 1)");
    mutate->add_flag("--normal-form", to_normal_form, "GL2(Z)-canonicalise the result");

    auto* neighbors = app.add_subcommand("neighbors", "single mutations out of a Fano polygon");
    neighbors->add_option("file", file)->required();

    auto* graph = app.add_subcommand("graph", "breadth-first mutation graph");
    graph->add_option("file", file)->required();
    graph->add_option("--depth", depth, "exploration depth")->required();

    auto* markov = app.add_subcommand("markov", "Markov triples and their triangles");
    markov->add_option("--max", max_c, "largest member bound")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(file);
        if (app.got_subcommand(dual_cmd)) return run_dual(file);
        if (app.got_subcommand(ehrhart)) return run_ehrhart(file, terms);
        if (app.got_subcommand(mutate)) return run_mutate(file, w_text, f_text, m, to_normal_form);
        if (app.got_subcommand(neighbors)) return run_neighbors(file);
        if (app.got_subcommand(graph)) return run_graph(file, depth);
        if (app.got_subcommand(markov)) return run_markov(max_c);
    } catch (const qpc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
