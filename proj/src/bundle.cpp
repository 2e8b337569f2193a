#include "g2calib/bundle.hpp"

#include "g2calib/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace g2calib {

namespace {

using Cx = std::complex<double>;

Cx herm(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    if (a.size() != b.size()) throw PreconditionError("line samples of mixed ambient dimension");
    Cx s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

double cnorm(const std::vector<Cx>& a) {
    double s = 0;
    for (const Cx& x : a) s += std::norm(x);
    return std::sqrt(s);
}

std::vector<Cx> unit(std::vector<Cx> a) {
    double n = cnorm(a);
    if (n == 0.0) throw PreconditionError("zero line sample");
    for (Cx& x : a) x /= n;
    return a;
}

// Edge -> incident oriented triangles; consistency check for a closed
// oriented surface: every unordered edge in exactly two triangles, with
// the two induced orientations opposite.
void check_closed_oriented(const SampledLineBundle& b) {
    std::map<std::pair<int, int>, int> directed;
    for (const auto& t : b.triangles) {
        for (int k = 0; k < 3; ++k) {
            int i = t[static_cast<std::size_t>(k)], j = t[static_cast<std::size_t>((k + 1) % 3)];
            if (i == j) throw PreconditionError("degenerate triangle");
            ++directed[{i, j}];
        }
    }
    for (const auto& [edge, count] : directed) {
        auto rev = directed.find({edge.second, edge.first});
        if (count != 1 || rev == directed.end() || rev->second != 1)
            throw PreconditionError("complex is not a closed oriented surface");
    }
}

std::size_t edge_count(const SampledLineBundle& b) {
    std::map<std::pair<int, int>, int> undirected;
    for (const auto& t : b.triangles)
        for (int k = 0; k < 3; ++k) {
            int i = t[static_cast<std::size_t>(k)], j = t[static_cast<std::size_t>((k + 1) % 3)];
            ++undirected[{std::min(i, j), std::max(i, j)}];
        }
    return undirected.size();
}

} // namespace

int chern_number(const SampledLineBundle& b, double admissibility, ChernDiagnostics* diagnostics) {
    check_closed_oriented(b);
    for (const auto& t : b.triangles)
        for (int v : t)
            if (v < 0 || static_cast<std::size_t>(v) >= b.lines.size())
                throw PreconditionError("triangle references a vertex without a line sample");
    std::vector<std::vector<Cx>> s;
    s.reserve(b.lines.size());
    for (const auto& l : b.lines) s.push_back(unit(l));

    double total = 0;
    double min_overlap = 1.0;
    for (const auto& t : b.triangles) {
        const auto& su = s[static_cast<std::size_t>(t[0])];
        const auto& sv = s[static_cast<std::size_t>(t[1])];
        const auto& sw = s[static_cast<std::size_t>(t[2])];
        Cx h1 = herm(su, sv), h2 = herm(sv, sw), h3 = herm(sw, su);
        for (const Cx& h : {h1, h2, h3}) {
            min_overlap = std::min(min_overlap, std::abs(h));
            if (std::abs(h) <= admissibility)
                throw PreconditionError("inadmissible edge: adjacent lines nearly orthogonal; refine the mesh");
        }
        total += std::arg(h1 * h2 * h3);
    }
    double raw = total / (2.0 * M_PI);
    double rounded = std::round(raw);
    double residual = std::abs(raw - rounded);
    if (diagnostics) {
        diagnostics->raw = raw;
        diagnostics->residual = residual;
        diagnostics->min_overlap = min_overlap;
    }
    if (residual >= 0.1)
        throw PreconditionError("holonomy total is not near an integer; resolution too coarse");
    return static_cast<int>(rounded);
}

int genus_of_complex(const SampledLineBundle& b) {
    check_closed_oriented(b);
    std::vector<int> refs;
    for (const auto& t : b.triangles) refs.insert(refs.end(), t.begin(), t.end());
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    long chi = static_cast<long>(refs.size()) - static_cast<long>(edge_count(b)) +
               static_cast<long>(b.triangles.size());
    if (chi % 2 != 0) throw InvariantViolation("odd Euler characteristic on a closed surface");
    return static_cast<int>(1 - chi / 2);
}

int maslov_mod2(const SampledLineBundle& b) {
    if (genus_of_complex(b) != 0)
        throw PreconditionError("Z2 class requires a sphere (V - E + F = 2)");
    int c = chern_number(b);
    return ((c % 2) + 2) % 2;
}

SampledLineBundle refine_once(const SampledLineBundle& b) {
    check_closed_oriented(b);
    if (b.lines.size() == 0) throw PreconditionError("refine needs line samples");
    SampledLineBundle r;
    r.positions = b.positions;
    r.lines.reserve(b.lines.size());
    for (const auto& l : b.lines) r.lines.push_back(unit(l));

    const bool on_unit_sphere = [&] {
        for (const auto& p : b.positions)
            if (std::abs(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - 1.0) > 1e-6) return false;
        return !b.positions.empty();
    }();

    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        int idx = static_cast<int>(r.lines.size());
        // phase-aligned interpolation: depends only on the two lines
        Cx h = herm(r.lines[static_cast<std::size_t>(i)], r.lines[static_cast<std::size_t>(j)]);
        if (std::abs(h) < 1e-12)
            throw PreconditionError("cannot interpolate between orthogonal lines");
        Cx phase = h / std::abs(h);
        std::vector<Cx> s = r.lines[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < s.size(); ++k)
            s[k] += phase * r.lines[static_cast<std::size_t>(j)][k];
        r.lines.push_back(unit(std::move(s)));
        if (!b.positions.empty()) {
            std::array<double, 3> p{};
            for (int k = 0; k < 3; ++k)
                p[static_cast<std::size_t>(k)] =
                    0.5 * (b.positions[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                           b.positions[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
            if (on_unit_sphere) {
                double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
                for (auto& x : p) x /= n;
            }
            r.positions.push_back(p);
        }
        midpoint[key] = idx;
        return idx;
    };

    for (const auto& t : b.triangles) {
        int a = t[0], bb = t[1], c = t[2];
        int ab = mid(a, bb), bc = mid(bb, c), ca = mid(c, a);
        r.triangles.push_back({a, ab, ca});
        r.triangles.push_back({ab, bb, bc});
        r.triangles.push_back({ca, bc, c});
        r.triangles.push_back({ab, bc, ca});
    }
    return r;
}

SampledLineBundle icosphere(int level) {
    if (level < 0 || level > 7) throw PreconditionError("icosphere level out of range");
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> pos = {
        {-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
        {0, -1, -t}, {0, 1, -t}, {t, 0, -1},  {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
    for (auto& p : pos) {
        double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        for (auto& x : p) x /= n;
    }
    std::vector<std::array<int, 3>> tris = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
        {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
        {3, 8, 9},   {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};

    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int i, int j) {
            auto key = std::minmax(i, j);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            std::array<double, 3> p{};
            for (int k = 0; k < 3; ++k)
                p[static_cast<std::size_t>(k)] =
                    pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                    pos[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
            for (auto& x : p) x /= n;
            pos.push_back(p);
            int idx = static_cast<int>(pos.size()) - 1;
            midpoint[key] = idx;
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() * 4);
        for (const auto& f : tris) {
            int a = f[0], b = f[1], c = f[2];
            int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
            next.push_back({a, ab, ca});
            next.push_back({ab, b, bc});
            next.push_back({ca, bc, c});
            next.push_back({ab, bc, ca});
        }
        tris = std::move(next);
    }
    SampledLineBundle b;
    b.positions = std::move(pos);
    b.triangles = std::move(tris);
    return b;
}

SampledLineBundle torus_grid(int n) {
    if (n < 3) throw PreconditionError("torus grid needs n >= 3");
    SampledLineBundle b;
    auto idx = [n](int i, int j) { return ((i % n + n) % n) * n + ((j % n + n) % n); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.positions.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n, 0.0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b.triangles.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
            b.triangles.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
        }
    return b;
}

void attach_constant_lines(SampledLineBundle& b, std::vector<Cx> line) {
    b.lines.assign(b.positions.size(), line);
}

namespace {

// Projective point of p on the unit sphere under the orientation-preserving
// identification with the complex projective line: [x + i y : 1 + z], with
// the chart swapped near the south pole.
std::array<Cx, 2> projective_point(const std::array<double, 3>& p) {
    double x = p[0], y = p[1], z = p[2];
    std::array<Cx, 2> h;
    if (z >= 0)
        h = {Cx(x, y), Cx(1 + z, 0)};
    else
        h = {Cx(1 - z, 0), Cx(x, -y)};
    double n = std::sqrt(std::norm(h[0]) + std::norm(h[1]));
    h[0] /= n;
    h[1] /= n;
    return h;
}

} // namespace

void attach_tautological_lines(SampledLineBundle& b) {
    b.lines.clear();
    for (const auto& p : b.positions) {
        auto h = projective_point(p);
        b.lines.push_back({h[0], h[1]});
    }
}

void attach_tangent_lines(SampledLineBundle& b) {
    b.lines.clear();
    for (const auto& p : b.positions) {
        int ax = 0;
        for (int k = 1; k < 3; ++k)
            if (std::abs(p[static_cast<std::size_t>(k)]) < std::abs(p[static_cast<std::size_t>(ax)])) ax = k;
        std::array<double, 3> e{};
        e[static_cast<std::size_t>(ax)] = 1.0;
        double d = e[0] * p[0] + e[1] * p[1] + e[2] * p[2];
        std::array<double, 3> X{e[0] - d * p[0], e[1] - d * p[1], e[2] - d * p[2]};
        std::array<double, 3> JX{p[1] * X[2] - p[2] * X[1], p[2] * X[0] - p[0] * X[2],
                                 p[0] * X[1] - p[1] * X[0]};
        b.lines.push_back({Cx(X[0], -JX[0]), Cx(X[1], -JX[1]), Cx(X[2], -JX[2])});
    }
}

void attach_degree_lines(SampledLineBundle& b, int n) {
    if (n < -2 || n > 2) throw PreconditionError("degree sample implemented for -2..2");
    b.lines.clear();
    for (const auto& p : b.positions) {
        auto h = projective_point(p);
        std::vector<Cx> s;
        switch (n) {
        case 0: s = {Cx(1, 0)}; break;
        case -1: s = {h[0], h[1]}; break;
        case -2: s = {h[0] * h[0], h[0] * h[1], h[1] * h[1]}; break;
        case 1: s = {std::conj(h[0]), std::conj(h[1])}; break;
        case 2:
            s = {std::conj(h[0] * h[0]), std::conj(h[0] * h[1]), std::conj(h[1] * h[1])};
            break;
        default: break;
        }
        b.lines.push_back(std::move(s));
    }
}

} // namespace g2calib
