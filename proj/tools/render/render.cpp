#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "tropvieta/errors.hpp"

namespace tropvieta::render {

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* cell_color(const std::vector<CellId>& cells) {
    if (cells.size() != 1) return "#000000";
    switch (cells[0]) {
        case CellId::X1Sq: return "#d62728";
        case CellId::X2Sq: return "#2ca02c";
        case CellId::X3Sq: return "#1f77b4";
        case CellId::AX1: return "#ff9896";
        case CellId::BX2: return "#98df8a";
        case CellId::CX3: return "#aec7e8";
        case CellId::Dcell: return "#7f7f7f";
    }
    return "#000000";
}

std::string cells_str(const std::vector<CellId>& cells) {
    std::string s;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) s += '|';
        s += to_string(cells[k]);
    }
    return s;
}

std::string svg_open(double w, double h) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w, 0)
       << "\" height=\"" << num(h, 0) << "\" viewBox=\"0 0 " << num(w, 0) << ' ' << num(h, 0)
       << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(w, 0) << "\" height=\"" << num(h, 0)
       << "\" fill=\"#ffffff\"/>\n";
    return os.str();
}

// Orthonormal frame of the plane x1+x2+x3 = 0.
std::pair<double, double> plane_coords(const Point3& x) {
    double x1 = x[0].get_d(), x2 = x[1].get_d(), x3 = x[2].get_d();
    return {(x1 - x2) / std::sqrt(2.0), (x1 + x2 - 2.0 * x3) / std::sqrt(6.0)};
}

SkeletonSample sample_at(const Params& p, const Rat& v1, const Rat& v2) {
    PlanePoint v = PlanePoint::make(v1, v2, Rat(-v1 - v2));
    Point3 x = lift_from_plane(p, Rat(0), v);
    return SkeletonSample{v, x, cells_of(p, x)};
}

}  // namespace

std::string num(double x, int precision) {
    if (std::fabs(x) < 0.5 * std::pow(10.0, -precision)) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    return buf;
}

std::vector<SkeletonSample> skeleton_grid(const Params& p, long grid, const Rat& range) {
    if (grid < 1) throw UsageError("grid must be at least 1");
    if (range <= 0) throw UsageError("range must be positive");
    std::vector<SkeletonSample> out;
    for (long i = -grid; i <= grid; ++i)
        for (long j = -grid; j <= grid; ++j)
            out.push_back(sample_at(p, Rat(range * i / grid), Rat(range * j / grid)));
    return out;
}

std::vector<SkeletonSample> skeleton_random(const Params& p, long count, const Rat& range,
                                            unsigned long seed) {
    if (count < 0) throw UsageError("count must be nonnegative");
    if (range <= 0) throw UsageError("range must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den(1, 16);
    std::vector<SkeletonSample> out;
    for (long k = 0; k < count; ++k) {
        Rat c[2];
        for (auto& r : c) {
            long q = den(rng);
            Rat hi(range * q);
            long lim = static_cast<long>(std::floor(hi.get_d()));
            std::uniform_int_distribution<long> n(-lim, lim);
            r = Rat(n(rng), q);
            r.canonicalize();
        }
        out.push_back(sample_at(p, c[0], c[1]));
    }
    return out;
}

std::string skeleton_csv(const std::vector<SkeletonSample>& s) {
    std::ostringstream os;
    os << "v1,v2,x1,x2,x3,cells\n";
    for (const auto& e : s)
        os << to_string(e.v[0]) << ',' << to_string(e.v[1]) << ',' << to_string(e.x[0]) << ','
           << to_string(e.x[1]) << ',' << to_string(e.x[2]) << ',' << cells_str(e.cells) << '\n';
    return os.str();
}

std::string skeleton_svg(const Params& p, const std::vector<SkeletonSample>& s, const Rat& range) {
    const double size = 600.0, half = size / 2;
    const double scale = (half - 20.0) / (1.5 * range.get_d());
    std::ostringstream os;
    os << svg_open(size, size);
    os << "<!-- skeleton projection to x1+x2+x3=0, params " << p.str() << " -->\n";
    os << "<g stroke=\"none\">\n";
    for (const auto& e : s) {
        auto [a, b] = plane_coords(e.x);
        os << "<circle cx=\"" << num(half + scale * a, 3) << "\" cy=\"" << num(half - scale * b, 3)
           << "\" r=\"2\" fill=\"" << cell_color(e.cells) << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string farey_svg(const Rat& d, long depth) {
    auto tri = table_orbit_triangles(d, depth);
    const double unit = 60.0, pad = 30.0;
    double extent = 1.0;
    const Rat h(-d / 2);
    for (const auto& cell : tri)
        for (const auto& t : cell)
            for (const auto& v : t.vertices)
                extent = std::max({extent, Rat(v.u1 / h).get_d(), Rat(v.u2 / h).get_d()});
    const double panel = unit * (extent + 0.5) + 2 * pad;
    std::ostringstream os;
    os << svg_open(3 * panel, panel);
    os << "<!-- images of C(D) by reduced words of length <= " << depth << ", d = " << to_string(d)
       << " -->\n";
    for (int c = 0; c < 3; ++c) {
        const double ox = c * panel + pad, oy = panel - pad;
        auto X = [&](const Rat& u) { return num(ox + unit * Rat(u / h).get_d(), 3); };
        auto Y = [&](const Rat& u) { return num(oy - unit * Rat(u / h).get_d(), 3); };
        os << "<g id=\"cell" << c + 1 << "\">\n";
        os << "<line x1=\"" << num(ox, 3) << "\" y1=\"" << num(oy, 3) << "\" x2=\""
           << num(ox + unit * (extent + 0.4), 3) << "\" y2=\"" << num(oy, 3)
           << "\" stroke=\"#000000\"/>\n";
        os << "<line x1=\"" << num(ox, 3) << "\" y1=\"" << num(oy, 3) << "\" x2=\"" << num(ox, 3)
           << "\" y2=\"" << num(oy - unit * (extent + 0.4), 3) << "\" stroke=\"#000000\"/>\n";
        os << "<text x=\"" << num(ox + 4, 3) << "\" y=\"" << num(pad, 3)
           << "\" font-size=\"12\">C(X" << c + 1 << "^2)</text>\n";
        for (const auto& t : tri[c]) {
            os << "<polygon points=\"";
            for (int v = 0; v < 3; ++v)
                os << (v ? " " : "") << X(t.vertices[v].u1) << ',' << Y(t.vertices[v].u2);
            os << "\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
            Rat cx = (t.vertices[0].u1 + t.vertices[1].u1 + t.vertices[2].u1) / 3;
            Rat cy = (t.vertices[0].u2 + t.vertices[1].u2 + t.vertices[2].u2) / 3;
            std::string label;
            for (int l : t.word.letters()) label += std::to_string(l);
            os << "<text x=\"" << X(cx) << "\" y=\"" << Y(cy)
               << "\" font-size=\"9\" text-anchor=\"middle\">" << label << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string tessellation_svg(long depth, long bound) {
    auto tris = tessellation_triangles(depth, bound);
    const double size = 600.0, c = size / 2, R = c - 20.0;
    auto px = [&](double t) { return c + R * std::cos(t); };
    auto py = [&](double t) { return c - R * std::sin(t); };
    std::ostringstream os;
    os << svg_open(size, size);
    os << "<!-- ideal triangle tessellation, reduced words of length <= " << depth << " -->\n";
    os << "<circle cx=\"" << num(c, 3) << "\" cy=\"" << num(c, 3) << "\" r=\"" << num(R, 3)
       << "\" fill=\"none\" stroke=\"#000000\"/>\n";
    os << "<g fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"0.7\">\n";
    for (const auto& t : tris) {
        os << "<path d=\"";
        for (int e = 0; e < 3; ++e) {
            double a = boundary_angle(t.vertices[e]);
            double b = boundary_angle(t.vertices[(e + 1) % 3]);
            if (e == 0) os << 'M' << num(px(a), 3) << ' ' << num(py(a), 3);
            double gap = std::fabs(std::remainder(b - a, 2 * kPi));
            if (std::fabs(gap - kPi) < 1e-12) {
                os << " L" << num(px(b), 3) << ' ' << num(py(b), 3);
                continue;
            }
            // Geodesic: arc of the circle orthogonal to the boundary through both points.
            double r = R * std::tan(gap / 2);
            double mid = a + std::remainder(b - a, 2 * kPi) / 2;
            double dist = R / std::cos(gap / 2);
            double ccx = dist * std::cos(mid), ccy = dist * std::sin(mid);
            double cross = (R * std::cos(a) - ccx) * (R * std::sin(b) - ccy) -
                           (R * std::sin(a) - ccy) * (R * std::cos(b) - ccx);
            os << " A" << num(r, 3) << ' ' << num(r, 3) << " 0 0 " << (cross > 0 ? 1 : 0) << ' '
               << num(px(b), 3) << ' ' << num(py(b), 3);
        }
        os << " Z\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string pingpong_stats_csv(long depth, Side side, long bound) {
    PartitionStats st = partition_stats(depth, side, bound);
    std::ostringstream os;
    os << "n,count,delta,Delta\n"
       << depth << ',' << st.count << ',' << num(st.delta, 9) << ',' << num(st.Delta, 9) << '\n';
    return os.str();
}

}  // namespace tropvieta::render
