#include "biarc/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "biarc/lattice.hpp"

namespace biarc {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

Vec2 to_vec(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ScenarioFormatError("expected [x, y], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Vec2> to_vecs(const json& j) {
    if (!j.is_array()) throw ScenarioFormatError("expected a list of points");
    std::vector<Vec2> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(to_vec(e));
    return out;
}

std::pair<Vec2, Vec2> to_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ScenarioFormatError("expected [[x, y], [x, y]], got " + j.dump());
    return {to_vec(j[0]), to_vec(j[1])};
}

ojson from_vec(Vec2 p) { return ojson::array({p.x, p.y}); }

template <class T>
void read_number(const json& params, const char* key, T& out) {
    if (!params.contains(key)) return;
    const json& v = params.at(key);
    if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw ScenarioFormatError(std::string("params.") + key + " must be an integer");
    } else {
        if (!v.is_number()) throw ScenarioFormatError(std::string("params.") + key + " must be a number");
    }
    out = v.get<T>();
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioFormatError(e.what());
    }
    if (!root.is_object()) throw ScenarioFormatError("scenario must be a JSON object");

    Scenario sc;
    try {
        if (root.contains("name")) {
            if (!root["name"].is_string()) throw ScenarioFormatError("name must be a string");
            sc.name = root["name"].get<std::string>();
        }
        if (root.contains("hitbox")) sc.hitbox = ConvexHitbox(to_vecs(root["hitbox"]));
        if (!root.contains("waypoints")) throw ScenarioFormatError("missing waypoints");
        sc.waypoints = to_vecs(root["waypoints"]);

        if (root.contains("obstacles")) {
            const json& obs = root["obstacles"];
            if (!obs.is_object()) throw ScenarioFormatError("obstacles must be an object");
            if (obs.contains("points")) {
                for (Vec2 p : to_vecs(obs["points"])) sc.obstacles.push_back(make_point(p));
            }
            if (obs.contains("segments")) {
                if (!obs["segments"].is_array()) throw ScenarioFormatError("segments must be a list");
                for (const json& s : obs["segments"]) {
                    const auto [a, b] = to_pair(s);
                    sc.obstacles.push_back(make_segment(a, b));
                }
            }
            if (obs.contains("lines")) {
                if (!obs["lines"].is_array()) throw ScenarioFormatError("lines must be a list");
                for (const json& l : obs["lines"]) {
                    const auto [p, d] = to_pair(l);
                    sc.obstacles.push_back(make_line(p, d));
                }
            }
        }

        if (root.contains("params")) {
            const json& pj = root["params"];
            if (!pj.is_object()) throw ScenarioFormatError("params must be an object");
            ScenarioParams& p = sc.params;
            read_number(pj, "lateral_step", p.lateral_step);
            read_number(pj, "h_max", p.h_max);
            read_number(pj, "horizon_m", p.horizon_m);
            read_number(pj, "spacing_m", p.spacing_m);
            read_number(pj, "speed_mps", p.speed_mps);
            read_number(pj, "replan_period_s", p.replan_period_s);
            read_number(pj, "eta_l", p.eta_l);
            read_number(pj, "eta_k", p.eta_k);
            read_number(pj, "seed", p.seed);
        }
        if (!(sc.params.lateral_step > 0.0)) throw ScenarioFormatError("lateral_step must be positive");
        if (sc.params.h_max < 0) throw ScenarioFormatError("h_max must be non-negative");
        if (!(sc.params.horizon_m > 0.0)) throw ScenarioFormatError("horizon_m must be positive");
        if (!(sc.params.eta_l > 1.0) || !(sc.params.eta_k > 1.0)) {
            throw ScenarioFormatError("eta_l and eta_k must exceed 1");
        }
        sc.validate();
        (void)build_waypoints_from_polyline(sc.waypoints, sc.params.spacing_m);
    } catch (const ScenarioFormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw ScenarioFormatError(e.what());
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioFormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& sc) {
    ojson root;
    root["name"] = sc.name;
    ojson hb = ojson::array();
    for (Vec2 v : sc.hitbox.vertices()) hb.push_back(from_vec(v));
    root["hitbox"] = hb;
    ojson wp = ojson::array();
    for (Vec2 v : sc.waypoints) wp.push_back(from_vec(v));
    root["waypoints"] = wp;

    ojson points = ojson::array(), segments = ojson::array(), lines = ojson::array();
    for (const Obstacle& o : sc.obstacles) {
        if (const auto* pt = std::get_if<PointObstacle>(&o)) {
            points.push_back(from_vec(pt->p));
        } else if (const auto* sg = std::get_if<SegmentObstacle>(&o)) {
            segments.push_back(ojson::array({from_vec(sg->a), from_vec(sg->b)}));
        } else {
            const auto& ln = std::get<LineObstacle>(o);
            lines.push_back(ojson::array({from_vec(ln.point), from_vec(ln.direction)}));
        }
    }
    root["obstacles"] = {{"points", points}, {"segments", segments}, {"lines", lines}};

    const ScenarioParams& p = sc.params;
    root["params"] = {{"lateral_step", p.lateral_step}, {"h_max", p.h_max},
                      {"horizon_m", p.horizon_m},       {"spacing_m", p.spacing_m},
                      {"speed_mps", p.speed_mps},       {"replan_period_s", p.replan_period_s},
                      {"eta_l", p.eta_l},               {"eta_k", p.eta_k},
                      {"seed", p.seed}};
    return root.dump(2) + "\n";
}

std::vector<TraceRow> trace_rows(std::span<const ArcSegment> pieces, double ds) {
    if (!(ds > 0.0)) throw std::invalid_argument("trace spacing must be positive");
    std::vector<const ArcSegment*> arcs;
    std::vector<double> starts;
    double total = 0.0;
    for (const ArcSegment& a : pieces) {
        if (a.length() <= 0.0) continue;
        arcs.push_back(&a);
        starts.push_back(total);
        total += a.length();
    }
    std::vector<TraceRow> rows;
    if (arcs.empty()) return rows;

    std::size_t idx = 0;
    auto emit = [&](double s) {
        while (idx + 1 < arcs.size() && s >= starts[idx + 1]) ++idx;
        const ArcSegment& a = *arcs[idx];
        const Pose p = a.pose_at(std::min(s - starts[idx], a.length()));
        rows.push_back({s, p.x(), p.y(), p.theta(), a.curvature()});
    };
    const auto n = static_cast<std::size_t>(std::floor(total / ds));
    for (std::size_t k = 0; k <= n; ++k) {
        const double s = static_cast<double>(k) * ds;
        if (s > total) break;
        emit(s);
    }
    if (rows.back().s < total - 1e-9 * ds) {
        idx = arcs.size() - 1;
        const Pose p = arcs.back()->end_pose();
        rows.push_back({total, p.x(), p.y(), p.theta(), arcs.back()->curvature()});
    }
    return rows;
}

std::vector<TraceRow> trace_rows(std::span<const Biarc> biarcs, double ds) {
    std::vector<ArcSegment> pieces;
    pieces.reserve(2 * biarcs.size());
    for (const Biarc& b : biarcs) {
        pieces.push_back(b.arc_a());
        pieces.push_back(b.arc_b());
    }
    return trace_rows(std::span<const ArcSegment>(pieces), ds);
}

void write_trace_csv(std::ostream& os, std::span<const TraceRow> rows) {
    os << kTraceHeader << '\n';
    char buf[160];
    for (const TraceRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.s, r.x, r.y, r.theta, r.curvature);
        os << buf;
    }
}

std::string metrics_json(const MetricsReport& m, bool include_timing) {
    ojson j;
    if (include_timing) {
        j["plan_ms_median"] = m.plan_ms_median;
        j["plan_ms_max"] = m.plan_ms_max;
    }
    j["path_m"] = m.path_m;
    j["time_s"] = m.time_s;
    // JSON has no infinity; an obstacle-free run reports null proximity.
    if (std::isfinite(m.prox_m)) {
        j["prox_m"] = m.prox_m;
    } else {
        j["prox_m"] = nullptr;
    }
    j["success"] = m.success;
    j["status"] = to_string(m.status);
    j["cycles"] = m.cycles;
    return j.dump(2) + "\n";
}

}  // namespace biarc
