#include "qpc/json.hpp"

#include <nlohmann/json.hpp>

#include "qpc/error.hpp"

namespace qpc {

namespace {

Json point_json(const Point2& p) { return Json::array({rat_str(p.x), rat_str(p.y)}); }

Rat coordinate(const Json& j) {
    if (!j.is_string()) fail(Errc::parse_error, "coordinate must be a rational string");
    return parse_rat(j.get<std::string>());
}

long small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(Errc::parse_error, std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace

Json polygon_json(const Polygon& polygon) {
    Json verts = Json::array();
    for (const auto& v : polygon.vertices()) verts.push_back(point_json(v));
    return Json{{"vertices", verts}};
}

Json polygon_json(const FanoPolygon& polygon) { return polygon_json(polygon.polygon()); }

Polygon parse_polygon(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        fail(Errc::parse_error, "expected {\"vertices\": [...]}");
    std::vector<Point2> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            fail(Errc::parse_error, "vertex must be a [x, y] pair");
        pts.push_back({coordinate(v[0]), coordinate(v[1])});
    }
    return Polygon::create(std::move(pts));
}

Json mutation_json(const MutationData& data) {
    return Json{{"w", Json::array({int_str(data.w.x), int_str(data.w.y)})},
                {"f", Json::array({int_str(data.f.x), int_str(data.f.y)})},
                {"m", data.m.get_si()}};
}

namespace {

Vec2 parse_covector(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) fail(Errc::parse_error, std::string(what) + " must be [a, b]");
    const Rat x = coordinate(j[0]), y = coordinate(j[1]);
    if (!is_integral(x) || !is_integral(y))
        fail(Errc::parse_error, std::string(what) + " must be integral");
    return Vec2{x.get_num(), y.get_num()};
}

}  // namespace

MutationData parse_mutation(const Json& j) {
    if (!j.is_object() || !j.contains("w") || !j.contains("f") || !j.contains("m"))
        fail(Errc::parse_error, "expected {\"w\": .., \"f\": .., \"m\": ..}");
    return MutationData::make(parse_covector(j["w"], "w"), parse_covector(j["f"], "f"),
                              Int(small_int(j["m"], "m")));
}

Json quasi_polynomial_json(const QuasiPolynomial& qp) {
    Json cons = Json::array();
    for (const auto& c : qp.constituents)
        cons.push_back(Json::array({rat_str(c[0]), rat_str(c[1]), rat_str(c[2])}));
    return Json{{"period", qp.period.get_si()}, {"constituents", cons}};
}

Json series_json(const EhrhartSeries& series) {
    Json vals = Json::array();
    for (const auto& v : series.values) vals.push_back(int_str(v));
    return vals;
}

Json content_json(const SingularityContent& content) {
    Json t = Json::array();
    for (const auto& l : content.t_indices) t.push_back(l.get_si());
    return Json{{"d", content.total_d.get_si()},
                {"basket", basket_strings(content.basket)},
                {"t_indices", t}};
}

Json collapse_report_json(const CollapseReport& report) {
    Json invisible = Json::array();
    for (const auto& [s, t] : report.split.invisible)
        invisible.push_back(Json::array({s.str(), t.str()}));
    Json t_idx = Json::array();
    for (const auto& l : report.content.t_indices) t_idx.push_back(l.get_si());
    return Json{
        {"measured", {{"pi", report.measured_pi.get_si()}, {"r", report.measured_r.get_si()}}},
        {"predicted",
         {{"pi", report.predicted_pi.get_si()},
          {"r", report.predicted_r.get_si()},
          {"discrepancy", rat_str(report.predicted_discrepancy)}}},
        {"content", {{"d", report.content.total_d.get_si()},
                     {"basket", basket_strings(report.content.basket)}}},
        {"reduced_basket", basket_strings(report.split.reduced)},
        {"invisible_pairs", invisible},
        {"t_indices", t_idx},
        {"pairing_complete", report.pairing_complete},
        {"consistent", report.consistent},
    };
}

Json graph_json(const MutationGraph& graph) {
    Json nodes = Json::array();
    for (const auto& n : graph.nodes) nodes.push_back(polygon_json(n));
    Json edges = Json::array();
    for (const auto& e : graph.edges)
        edges.push_back(Json{{"source", e.source},
                             {"target", e.target},
                             {"data", mutation_json(e.data)}});
    return Json{{"nodes", nodes}, {"edges", edges}};
}

Json markov_report_json(const MarkovReport& report) {
    Json idx = Json::array();
    for (const auto& l : report.indices) idx.push_back(l.get_si());
    return Json{{"triple", Json::array({report.triple.a.get_si(), report.triple.b.get_si(),
                                        report.triple.c.get_si()})},
                {"indices", idx},
                {"r", report.r.get_si()},
                {"pi", report.pi.get_si()},
                {"triangle", polygon_json(report.triangle)}};
}

}  // namespace qpc
