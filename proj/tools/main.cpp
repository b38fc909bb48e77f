#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "render/render.hpp"
#include "tropvieta/tropvieta.hpp"

using json = nlohmann::ordered_json;
using namespace tropvieta;

namespace {

constexpr int kSchemaVersion = 1;

json header(const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

json point_json(const Point3& x) {
    return json::array({to_string(x[0]), to_string(x[1]), to_string(x[2])});
}

json uvec_json(const UVec& u) { return json::array({to_string(u.u1), to_string(u.u2)}); }

json cells_json(const std::vector<CellId>& cells) {
    json a = json::array();
    for (CellId c : cells) a.push_back(to_string(c));
    return a;
}

json ext_json(const ExtRat& e) { return e.str(); }

std::string word_text(const Word& w) { return w.str(); }

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << text;
}

void emit_json(const json& j, const std::string& path = "") { emit(j.dump(2) + "\n", path); }

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    return out;
}

json trace_json(const Params& p, const GreedyTrace& tr) {
    json j = header("reduce");
    j["params"] = p.str();
    j["start"] = point_json(tr.start);
    j["word"] = word_text(tr.word);
    j["steps"] = tr.steps;
    j["terminal"] = point_json(tr.terminal);
    j["kind"] = to_string(tr.kind);
    if (tr.kind == TraceKind::SubquadraticCell) j["cell"] = to_string(tr.cell);
    if (tr.kind == TraceKind::BoundaryRay) j["ray"] = tr.ray;
    json path = json::array();
    for (std::size_t k = 0; k < tr.path.size(); ++k) {
        json row;
        row["step"] = k;
        if (k > 0) row["generator"] = tr.indices[k - 1];
        row["point"] = point_json(tr.path[k]);
        row["cells"] = cells_json(cells_of(p, tr.path[k]));
        path.push_back(row);
    }
    j["path"] = path;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropvieta: tropical Vieta dynamics on Markov cubic surfaces", "tropvieta"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string params_s, point_s, word_s, out_s, format_s = "json", side_s = "boundary";
    std::string d_s = "-2", range_s = "3", seed_s, abc_s = "0,0,0", D_s, p_s, boundary_s;
    long grid = 10, depth = 3, height = 5, count = 0, max_steps = -1, bound = kDefaultOrbitBound;
    unsigned long seed = 0;
    bool stats = false, classes = false;

    auto* skeleton = app.add_subcommand("skeleton", "Skeleton sampling and rendering");
    skeleton->require_subcommand(1);
    auto* sk_sample = skeleton->add_subcommand("sample", "Sample skeleton points on a plane grid");
    auto* sk_svg = skeleton->add_subcommand("svg", "Render the projection of the skeleton");
    for (auto* s : {sk_sample, sk_svg}) {
        s->add_option("--params", params_s, "a,b,c,d (rationals or inf)")->required();
        s->add_option("--grid", grid, "Grid half-width N");
        s->add_option("--range", range_s, "Plane coordinate range r");
        s->add_option("--random", count, "Draw this many random plane points instead of a grid");
        s->add_option("--seed", seed, "Seed for --random");
        s->add_option("--out", out_s, "Output file (default stdout)");
    }
    sk_sample->add_option("--format", format_s, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* orbit = app.add_subcommand("orbit", "Apply a word and print each step");
    orbit->add_option("--params", params_s)->required();
    orbit->add_option("--point", point_s, "x1,x2,x3")->required();
    orbit->add_option("--word", word_s, "Generators applied right to left, e.g. \"s1 s2 s3\"")
        ->required();

    auto* reduce = app.add_subcommand("reduce", "Greedy path of a skeleton point, or reduction of a boundary point");
    reduce->add_option("--params", params_s);
    reduce->add_option("--point", point_s);
    reduce->add_option("--max-steps", max_steps);
    reduce->add_option("--boundary", boundary_s, "Rational or inf on the boundary circle");

    auto* classify_c = app.add_subcommand("classify", "Decide membership in U");
    classify_c->add_option("--params", params_s)->required();
    classify_c->add_option("--point", point_s)->required();

    auto* rays = app.add_subcommand("rays", "Exception-ray generators for punctured-torus parameters");
    rays->add_option("--d", d_s)->required();
    rays->add_option("--height", height);
    rays->add_option("--format", format_s)->check(CLI::IsMember({"csv", "json"}));

    auto* farey = app.add_subcommand("farey", "Farey triangles and images of C(D)");
    farey->add_option("--depth", depth);
    farey->add_option("--d", d_s);
    farey->add_option("--svg", out_s, "Write the per-cell images as SVG");

    auto* tess = app.add_subcommand("tessellation", "Ideal triangle tessellation in the Poincare disk");
    tess->add_option("--depth", depth);
    tess->add_option("--svg", out_s);
    tess->add_option("--bound", bound);

    auto* ping = app.add_subcommand("pingpong", "Partial orbits of the nets");
    ping->add_option("--depth", depth);
    ping->add_option("--side", side_s)->check(CLI::IsMember({"boundary", "skeleton"}));
    ping->add_flag("--stats", stats, "Print n, |P_n|, delta, Delta");
    ping->add_option("--bound", bound);

    auto* fatou = app.add_subcommand("fatou", "Fatou condition and a witness point");
    fatou->add_option("--params", params_s)->required();

    auto* lift = app.add_subcommand("lift-check", "Compare exact and tropical orbits of a Laurent point");
    lift->add_option("--seed", seed_s, "X1,X2,X3 as Laurent polynomials in t")->required();
    lift->add_option("--abc", abc_s, "A,B,C as Laurent polynomials in t");
    lift->add_option("--word", word_s)->required();
    lift->add_option("--format", format_s)->check(CLI::IsMember({"csv", "json"}));

    auto* zp = app.add_subcommand("enumerate-zp", "Z[1/p]-points on the compact component");
    zp->add_option("--p", p_s)->required();
    zp->add_option("--D", D_s)->required();
    zp->add_flag("--classes", classes, "One point per class of double sign flips");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 3;
    }

    try {
        if (skeleton->parsed()) {
            Params p = Params::parse(params_s);
            Rat range = parse_rat(range_s);
            auto samples = count > 0 ? render::skeleton_random(p, count, range, seed)
                                     : render::skeleton_grid(p, grid, range);
            if (sk_svg->parsed()) {
                emit(render::skeleton_svg(p, samples, range), out_s);
            } else if (format_s == "csv") {
                emit(render::skeleton_csv(samples), out_s);
            } else {
                json j = header("skeleton sample");
                j["params"] = p.str();
                json rows = json::array();
                for (const auto& s : samples) {
                    json r;
                    r["v"] = json::array({to_string(s.v[0]), to_string(s.v[1]), to_string(s.v[2])});
                    r["x"] = point_json(s.x);
                    r["cells"] = cells_json(s.cells);
                    rows.push_back(r);
                }
                j["samples"] = rows;
                emit_json(j, out_s);
            }
        } else if (orbit->parsed()) {
            Params p = Params::parse(params_s);
            Point3 x = parse_point(point_s);
            Word w = Word::parse(word_s);
            auto pts = word_orbit(p, w, x);
            json j = header("orbit");
            j["params"] = p.str();
            j["word"] = word_text(w);
            json steps = json::array();
            const auto& l = w.letters();
            for (std::size_t k = 0; k < pts.size(); ++k) {
                json r;
                r["step"] = k;
                if (k > 0) r["generator"] = l[l.size() - k];
                r["point"] = point_json(pts[k]);
                r["f0"] = ext_json(f0(p, pts[k]));
                if (on_skeleton(p, pts[k])) r["cells"] = cells_json(cells_of(p, pts[k]));
                steps.push_back(r);
            }
            j["steps"] = steps;
            j["terminal"] = point_json(pts.back());
            emit_json(j);
        } else if (reduce->parsed()) {
            if (!boundary_s.empty()) {
                BPoint x = BPoint::parse(boundary_s);
                Reduction r = reduce_to_nets(x);
                json j = header("reduce");
                j["boundary_point"] = x.str();
                j["height"] = x.height().get_str();
                std::string ws;
                for (std::size_t k = 0; k < r.word.size(); ++k)
                    ws += (k ? " r" : "r") + std::to_string(r.word.letters()[k]);
                j["word"] = ws;
                j["net"] = r.net.str();
                j["net_index"] = r.net_index;
                j["reflections"] = r.reflections;
                j["replay"] = apply_boundary_word(r.word, r.net).str();
                emit_json(j);
            } else {
                if (params_s.empty() || point_s.empty())
                    throw UsageError("reduce needs --params and --point, or --boundary");
                Params p = Params::parse(params_s);
                Point3 x = parse_point(point_s);
                std::optional<std::size_t> ms;
                if (max_steps >= 0) ms = static_cast<std::size_t>(max_steps);
                emit_json(trace_json(p, greedy_path(p, x, ms)));
            }
        } else if (classify_c->parsed()) {
            Params p = Params::parse(params_s);
            Point3 x = parse_point(point_s);
            ClassifyReport r = classify(p, x);
            json j = header("classify");
            j["params"] = p.str();
            j["point"] = point_json(x);
            j["cell"] = to_string(r.cell);
            j["slope"] = r.slope ? json(r.slope->str()) : json(nullptr);
            j["gamma"] = r.gamma ? json(to_string(*r.gamma)) : json(nullptr);
            j["delta"] = r.delta ? json(*r.delta) : json(nullptr);
            j["relevant_ray"] = r.relevant_ray == 0 ? json(nullptr) : json(r.relevant_ray);
            j["in_U"] = r.in_U;
            j["certificate"] = word_text(r.certificate);
            j["certificate_terminal"] = point_json(r.certificate_terminal);
            j["ray_parameter"] = r.ray_parameter ? json(to_string(*r.ray_parameter)) : json(nullptr);
            emit_json(j);
        } else if (rays->parsed()) {
            Rat d = parse_rat(d_s);
            auto gens = exception_rays_punctured(d, height);
            if (format_s == "json") {
                json j = header("rays");
                j["d"] = to_string(d);
                j["height"] = height;
                json a = json::array();
                for (const auto& g : gens) a.push_back(point_json(g));
                j["generators"] = a;
                emit_json(j);
            } else {
                std::ostringstream os;
                os << "x1,x2,x3\n";
                for (const auto& g : gens)
                    os << to_string(g[0]) << ',' << to_string(g[1]) << ',' << to_string(g[2]) << '\n';
                emit(os.str(), "");
            }
        } else if (farey->parsed()) {
            Rat d = parse_rat(d_s);
            if (!out_s.empty()) emit(render::farey_svg(d, depth), out_s);
            json j = header("farey");
            j["d"] = to_string(d);
            j["depth"] = depth;
            json a = json::array();
            for (const auto& t : farey_enumerate(depth)) {
                for (int i = 1; i <= 3; ++i) {
                    FareyTriangle ft = farey_triangle(t, i, d);
                    json r;
                    r["cell"] = i;
                    r["triple"] = json::array({json::array({t.left.p.get_str(), t.left.q.get_str()}),
                                               json::array({t.mid.p.get_str(), t.mid.q.get_str()}),
                                               json::array({t.right.p.get_str(), t.right.q.get_str()})});
                    r["word"] = word_text(ft.word);
                    r["vertices"] = json::array(
                        {uvec_json(ft.vertices[0]), uvec_json(ft.vertices[1]), uvec_json(ft.vertices[2])});
                    a.push_back(r);
                }
            }
            j["triangles"] = a;
            if (out_s.empty()) emit_json(j);
        } else if (tess->parsed()) {
            emit(render::tessellation_svg(depth, bound), out_s);
        } else if (ping->parsed()) {
            Side side = parse_side(side_s);
            if (stats) {
                emit(render::pingpong_stats_csv(depth, side, bound), "");
            } else {
                std::ostringstream os;
                os << "index,point,angle\n";
                if (side == Side::Boundary) {
                    auto pts = partial_orbit_boundary(depth, bound);
                    for (std::size_t k = 0; k < pts.size(); ++k)
                        os << k << ',' << pts[k].str() << ',' << render::num(boundary_angle(pts[k]), 9)
                           << '\n';
                } else {
                    auto pts = partial_orbit_skeleton(depth, bound);
                    for (std::size_t k = 0; k < pts.size(); ++k)
                        os << k << ",\"" << to_string(pts[k]) << "\","
                           << render::num(skeleton_angle(pts[k]), 9) << '\n';
                }
                emit(os.str(), "");
            }
        } else if (fatou->parsed()) {
            Params p = Params::parse(params_s);
            json j = header("fatou");
            j["params"] = p.str();
            bool cond = fatou_condition(p);
            j["condition"] = cond;
            j["witness"] = cond ? point_json(fatou_witness(p)) : json(nullptr);
            emit_json(j);
        } else if (lift->parsed()) {
            auto xs = split_commas(seed_s);
            auto abc = split_commas(abc_s);
            if (xs.size() != 3) throw UsageError("--seed needs three comma-separated polynomials");
            if (abc.size() != 3) throw UsageError("--abc needs three comma-separated polynomials");
            SurfacePointL P = surface_from_seed(
                {LaurentPoly::parse(xs[0]), LaurentPoly::parse(xs[1]), LaurentPoly::parse(xs[2])},
                LaurentPoly::parse(abc[0]), LaurentPoly::parse(abc[1]), LaurentPoly::parse(abc[2]));
            Word w = Word::parse(word_s);
            LiftReport r = lift_consistency(P, w);
            if (format_s == "csv") {
                std::ostringstream os;
                os << "step,generator,exact_val,tropical,match,shadow_norm\n";
                for (std::size_t k = 0; k < r.steps.size(); ++k) {
                    const auto& s = r.steps[k];
                    os << k + 1 << ",s" << s.letter << ",\"(" << s.exact[0].str() << ',' << s.exact[1].str()
                       << ',' << s.exact[2].str() << ")\",\"" << to_string(s.tropical) << "\","
                       << (s.match ? "true" : "false") << ',' << to_string(s.shadow_norm) << '\n';
                }
                emit(os.str(), "");
            } else {
                json j = header("lift-check");
                j["D"] = P.D.str();
                j["params"] = r.params.str();
                j["start_valuation"] = json::array({r.start[0].str(), r.start[1].str(), r.start[2].str()});
                j["precondition"] = r.precondition;
                j["ok"] = r.ok;
                json steps = json::array();
                for (std::size_t k = 0; k < r.steps.size(); ++k) {
                    const auto& s = r.steps[k];
                    json row;
                    row["step"] = k + 1;
                    row["generator"] = s.letter;
                    row["exact_valuation"] = json::array({s.exact[0].str(), s.exact[1].str(), s.exact[2].str()});
                    row["tropical"] = point_json(s.tropical);
                    row["match"] = s.match;
                    row["shadow_norm"] = to_string(s.shadow_norm);
                    steps.push_back(row);
                }
                j["steps"] = steps;
                emit_json(j);
            }
        } else if (zp->parsed()) {
            Int p(p_s);
            Rat D = parse_rat(D_s);
            auto pts = enumerate_zp_points(p, D);
            json j = header("enumerate-zp");
            j["p"] = p.get_str();
            j["D"] = to_string(D);
            j["radius_squared"] = to_string(compact_radius(D));
            json a = json::array();
            if (classes) {
                std::vector<Point3> xs;
                for (const auto& z : pts) xs.push_back(z.x);
                for (const auto& x : sign_classes(xs)) a.push_back(point_json(x));
                j["classes"] = a;
            } else {
                for (const auto& z : pts) {
                    json r;
                    r["point"] = point_json(z.x);
                    r["exponents"] = json::array({z.exponents[0], z.exponents[1], z.exponents[2]});
                    a.push_back(r);
                }
                j["points"] = a;
            }
            j["count"] = a.size();
            emit_json(j);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
