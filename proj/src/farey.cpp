#include "cgx/farey.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cgx::farey {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// g = gcd(a,b) > 0 with a*x + b*y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                     std::int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

Slope Slope::make(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw Error("slope 0/0");
    std::int64_t g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

Slope Slope::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make(std::stoll(text), 1);
        return make(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error("not a slope: '" + text + "'");
    }
}

std::int64_t intersection_number(const Slope& a, const Slope& b, ModelSurface s) {
    std::int64_t d = det(a, b);
    if (d < 0) d = -d;
    return s == ModelSurface::S11 ? d : 2 * d;
}

bool farey_adjacent(const Slope& a, const Slope& b) {
    std::int64_t d = det(a, b);
    return d == 1 || d == -1;
}

FareyMapClass::FareyMapClass(BigInt a, BigInt b, BigInt c, BigInt d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (m_[0] * m_[3] - m_[1] * m_[2] != 1)
        throw BadDeterminantError("map class must have determinant 1");
    canonicalize();
}

void FareyMapClass::canonicalize() {
    for (const BigInt& e : m_) {
        if (e > 0) return;
        if (e < 0) break;
    }
    for (BigInt& e : m_) e = -e;
}

FareyMapClass FareyMapClass::twist_t() { return FareyMapClass(1, 1, 0, 1); }
FareyMapClass FareyMapClass::twist_s() { return FareyMapClass(1, 0, 1, 1); }

BigInt FareyMapClass::trace_abs() const {
    BigInt t = m_[0] + m_[3];
    return t < 0 ? BigInt(-t) : t;
}

FareyMapClass FareyMapClass::operator*(const FareyMapClass& o) const {
    return FareyMapClass(m_[0] * o.m_[0] + m_[1] * o.m_[2],
                         m_[0] * o.m_[1] + m_[1] * o.m_[3],
                         m_[2] * o.m_[0] + m_[3] * o.m_[2],
                         m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

FareyMapClass FareyMapClass::inverse() const {
    return FareyMapClass(m_[3], -m_[1], -m_[2], m_[0]);
}

std::string FareyMapClass::str() const {
    return "[[" + m_[0].str() + "," + m_[1].str() + "],[" + m_[2].str() + "," +
           m_[3].str() + "]]";
}

MapKind classify(const FareyMapClass& m) {
    BigInt t = m.trace_abs();
    if (t < 2) return MapKind::Elliptic;
    if (t == 2) return MapKind::Reducible;
    return MapKind::PseudoAnosov;
}

const char* map_kind_str(MapKind k) {
    switch (k) {
        case MapKind::Elliptic: return "elliptic";
        case MapKind::Reducible: return "reducible";
        default: return "pseudo-anosov";
    }
}

std::pair<BigInt, BigInt> act_big(const FareyMapClass& m, const Slope& a) {
    BigInt p = m.at(0, 0) * a.p + m.at(0, 1) * a.q;
    BigInt q = m.at(1, 0) * a.p + m.at(1, 1) * a.q;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {std::move(p), std::move(q)};
}

std::optional<Slope> act(const FareyMapClass& m, const Slope& a) {
    auto [p, q] = act_big(m, a);
    if (p < INT64_MIN / 2 || p > INT64_MAX / 2 || q > INT64_MAX / 2)
        return std::nullopt;
    return Slope::make(p.convert_to<std::int64_t>(), q.convert_to<std::int64_t>());
}

std::vector<Slope> window_neighbors(const Slope& s, std::int64_t cap) {
    // Solutions of p*y - q*x = 1 form the family (x0 + t p, y0 + t q); the -1
    // family is its negative, which canonicalizes to the same slopes.
    std::int64_t x, y;
    ext_gcd(s.p, s.q, x, y);  // p*x + q*y = 1
    std::int64_t r0 = -y, s0 = x;

    std::int64_t t_lo = INT64_MIN / 4, t_hi = INT64_MAX / 4;
    auto clamp_range = [&](std::int64_t base, std::int64_t step) {
        if (step == 0) return;
        std::int64_t lo = -cap - base, hi = cap - base;
        std::int64_t a = floor_div(lo + (step > 0 ? step - 1 : 0), step);
        std::int64_t b = floor_div(hi + (step > 0 ? 0 : step + 1), step);
        if (step < 0) std::swap(a, b);
        t_lo = std::max(t_lo, a);
        t_hi = std::min(t_hi, b);
    };
    clamp_range(r0, s.p);
    clamp_range(s0, s.q);

    std::set<Slope> out;
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        std::int64_t r = r0 + t * s.p;
        std::int64_t q = s0 + t * s.q;
        if (r < -cap || r > cap || q < -cap || q > cap) continue;
        Slope n = Slope::make(r, q);
        if (n.p >= -cap && n.p <= cap && n.q <= cap) out.insert(n);
    }
    return {out.begin(), out.end()};
}

FareyBall farey_ball(const Slope& center, unsigned radius, const BallOptions& opts) {
    if (radius > opts.radius_cap)
        throw CapExceededError("ball radius " + std::to_string(radius) +
                               " exceeds cap " + std::to_string(opts.radius_cap));
    if (std::max(center.p < 0 ? -center.p : center.p, center.q) > opts.complexity_cap)
        throw CapExceededError("center outside the complexity window");

    std::map<Slope, unsigned> dist;
    dist[center] = 0;
    std::deque<Slope> queue{center};
    while (!queue.empty()) {
        Slope v = queue.front();
        queue.pop_front();
        unsigned d = dist[v];
        if (d == radius) continue;
        for (const Slope& n : window_neighbors(v, opts.complexity_cap)) {
            if (dist.count(n)) continue;
            dist[n] = d + 1;
            queue.push_back(n);
        }
    }

    FareyBall ball;
    ball.center = center;
    std::vector<std::string> names;
    for (const auto& [s, d] : dist) {
        ball.slopes.push_back(s);
        ball.depth.push_back(d);
        names.push_back(s.str());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [s, d] : dist)
        for (const Slope& n : window_neighbors(s, opts.complexity_cap)) {
            if (!(s < n)) continue;
            if (dist.count(n)) edges.emplace_back(s.str(), n.str());
        }
    ball.graph = graphcore::Graph(std::move(names), edges);
    return ball;
}

graphcore::VertexMap to_vertex_map(const FareyBall& ball, const FareyMapClass& m,
                                   const std::string& label) {
    std::vector<graphcore::VertexId> fwd(ball.slopes.size(), graphcore::kNoVertex);
    for (std::size_t i = 0; i < ball.slopes.size(); ++i) {
        auto [p, q] = act_big(m, ball.slopes[i]);
        auto img = ball.graph.find(p.str() + "/" + q.str());
        if (img) fwd[i] = *img;
    }
    return graphcore::VertexMap(std::move(fwd), label);
}

std::vector<std::pair<std::string, FareyMapClass>> twist_words(unsigned max_len) {
    const std::array<std::pair<char, FareyMapClass>, 4> letters = {
        std::pair<char, FareyMapClass>{'T', FareyMapClass::twist_t()},
        {'t', FareyMapClass::twist_t().inverse()},
        {'S', FareyMapClass::twist_s()},
        {'s', FareyMapClass::twist_s().inverse()},
    };
    std::map<FareyMapClass, std::string> seen;
    seen[FareyMapClass()] = "";
    std::vector<std::pair<std::string, FareyMapClass>> frontier = {
        {"", FareyMapClass()}};
    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<std::pair<std::string, FareyMapClass>> next;
        for (const auto& [word, mat] : frontier)
            for (const auto& [c, gen] : letters) {
                FareyMapClass prod = mat * gen;
                std::string w = word + c;
                if (seen.emplace(prod, w).second) next.emplace_back(w, prod);
            }
        frontier = std::move(next);
    }
    std::vector<std::pair<std::string, FareyMapClass>> out;
    for (const auto& [mat, word] : seen) out.emplace_back(word, mat);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

const char* verdict_str(FillingVerdict v) {
    switch (v) {
        case FillingVerdict::NonFilling: return "non-filling";
        case FillingVerdict::Filling: return "filling";
        default: return "maximally-filling";
    }
}

namespace {

// 2x2 integer lattice spanned by the columns of M, with canonical reduction
// of points modulo the lattice (Hermite form).
struct Lattice2 {
    // basis: (a, b) and (0, e), a > 0, e > 0
    std::int64_t a = 1, b = 0, e = 1;

    static Lattice2 from_columns(std::int64_t c1x, std::int64_t c1y,
                                 std::int64_t c2x, std::int64_t c2y) {
        std::int64_t d = c1x * c2y - c1y * c2x;
        if (d == 0) throw Error("degenerate lattice");
        // Column reduce until the second column's x vanishes.
        while (c2x != 0) {
            std::int64_t k = c1x / c2x;
            c1x -= k * c2x;
            c1y -= k * c2y;
            std::swap(c1x, c2x);
            std::swap(c1y, c2y);
        }
        Lattice2 lat;
        lat.a = c1x;
        lat.b = c1y;
        lat.e = c2y;
        if (lat.a < 0) {
            lat.a = -lat.a;
            lat.b = -lat.b;
        }
        if (lat.e < 0) lat.e = -lat.e;
        lat.b = ((lat.b % lat.e) + lat.e) % lat.e;
        return lat;
    }

    std::int64_t index() const { return a * e; }

    std::pair<std::int64_t, std::int64_t> reduce(std::int64_t i,
                                                 std::int64_t j) const {
        std::int64_t k = floor_div(i, a);
        i -= k * a;
        j -= k * b;
        j -= floor_div(j, e) * e;
        return {i, j};
    }
};

struct CellLabel {
    std::int64_t i = 0, j = 0;
    int eu = 0, ev = 0;

    bool operator==(const CellLabel&) const = default;
    auto operator<=>(const CellLabel&) const = default;
};

// Cell of the (u,v) line pattern containing a point with doubled coordinates
// (2u, 2v); the lines sit at quarter-integer offsets so half-integer points
// are always interior.
CellLabel locate(std::int64_t two_u, std::int64_t two_v, const Lattice2& lat) {
    CellLabel c;
    c.eu = ((two_u % 2) + 2) % 2;
    c.ev = ((two_v % 2) + 2) % 2;
    std::int64_t iu = (two_u - c.eu) / 2;
    std::int64_t iv = (two_v - c.ev) / 2;
    auto [i, j] = lat.reduce(iu, iv);
    c.i = i;
    c.j = j;
    return c;
}

CellLabel involution(const CellLabel& c, const Lattice2& lat) {
    auto [i, j] = lat.reduce(-c.i - c.eu, -c.j - c.ev);
    return {i, j, c.eu, c.ev};
}

}  // namespace

RegionReport complementary_regions(const Slope& a, const Slope& b, ModelSurface s) {
    if (a == b) throw EqualSlopesError("complementary regions of equal slopes");
    std::int64_t d = det(a, b);
    if (d < 0) d = -d;

    RegionReport report;
    report.surface = s;
    report.det = d;

    if (s == ModelSurface::S11) {
        // Two geodesics on the flat torus cut it into d parallelogram cells;
        // the marked point sits inside exactly one of them.
        if (d > 1) report.cells.push_back({4, 0, static_cast<std::uint64_t>(d - 1)});
        report.cells.push_back({4, 1, 1});
        report.vertices = d;
        report.edge_segments = 2 * d;
        report.faces = d;
        report.verdict = FillingVerdict::Filling;  // marked square, never maximal
        return report;
    }

    // S04: each curve lifts to a symmetric pair of lines at quarter-integer
    // offsets in the coordinates (u, v) = (-p_a x + q_a y, -p_b x + q_b y).
    // The torus picture has 4d parallelogram cells; the four half-integer
    // fixed points of the involution land in four distinct invariant cells,
    // which descend to once-punctured bigons, and the remaining cells pair up
    // into squares.
    Lattice2 lat = Lattice2::from_columns(-a.p, -b.p, a.q, b.q);
    if (lat.index() != d) throw Error("lattice index mismatch");

    std::array<CellLabel, 4> fixed_cells;
    int idx = 0;
    for (int x2 = 0; x2 <= 1; ++x2)
        for (int y2 = 0; y2 <= 1; ++y2) {
            std::int64_t two_u = -a.p * x2 + a.q * y2;
            std::int64_t two_v = -b.p * x2 + b.q * y2;
            fixed_cells[idx++] = locate(two_u, two_v, lat);
        }
    for (int i = 0; i < 4; ++i) {
        if (involution(fixed_cells[i], lat) != fixed_cells[i])
            throw Error("fixed point lies in a non-invariant cell");
        for (int j = i + 1; j < 4; ++j)
            if (fixed_cells[i] == fixed_cells[j])
                throw Error("two fixed points share a cell");
    }

    report.cells.push_back({2, 1, 4});
    if (d > 1) report.cells.push_back({4, 0, static_cast<std::uint64_t>(2 * d - 2)});
    report.vertices = 2 * d;
    report.edge_segments = 4 * d;
    report.faces = 2 * d + 2;
    report.verdict = FillingVerdict::MaximallyFilling;
    return report;
}

bool k_maximally_filling(const Slope& a, const Slope& b, unsigned k,
                         const BallOptions& opts) {
    FareyBall ball_a = farey_ball(a, k, opts);
    FareyBall ball_b = farey_ball(b, k, opts);
    for (const Slope& ap : ball_a.slopes)
        for (const Slope& bp : ball_b.slopes) {
            if (ap == bp) return false;  // a pair of equal curves never fills
            if (complementary_regions(ap, bp, ModelSurface::S04).verdict !=
                FillingVerdict::MaximallyFilling)
                return false;
        }
    return true;
}

NestingOutcome nesting_check(int sign_x, int sign_y, const Slope& a, unsigned k,
                             const BallOptions& opts) {
    if ((sign_x != 1 && sign_x != -1) || (sign_y != 1 && sign_y != -1))
        throw Error("quadrant signs must be +1 or -1");
    int quadrant = sign_x * sign_y;
    NestingOutcome out{NestingOutcome::Status::Holds, {}};
    // Strictly carried means positive weight on both coordinate branches:
    // boundary slopes 0/1 and 1/0 are rejected, as is the wrong quadrant.
    bool interior = a.p != 0 && a.q != 0 && ((a.p > 0 ? 1 : -1) == quadrant);
    if (!interior) {
        out.status = NestingOutcome::Status::Rejected;
        return out;
    }
    if (k == 0) return out;
    FareyBall ball = farey_ball(a, k, opts);
    for (const Slope& s : ball.slopes) {
        bool boundary = (s == Slope{0, 1}) || (s == Slope{1, 0});
        bool carried = boundary || (s.p != 0 && ((s.p > 0 ? 1 : -1) == quadrant));
        if (!carried) out.escapes.push_back(s);
    }
    if (!out.escapes.empty()) out.status = NestingOutcome::Status::Fails;
    return out;
}

PassagePair s04_passage_pair(const Slope& a, const Slope& b,
                             std::uint64_t step_cap) {
    if (a == b) throw EqualSlopesError("passage pair of equal slopes");
    std::int64_t d = det(a, b);
    if (d < 0) d = -d;

    auto adapted_width = [&](const Slope& base, const Slope& other) {
        // Unimodular U = [[q, -p],[x, y]] with x p + y q = 1 sends `base` to
        // 0/1; the image of `other` is (+-d, m), and m mod d is the second
        // rotation width.
        std::int64_t x, y;
        ext_gcd(base.p, base.q, x, y);
        std::int64_t m = x * other.p + y * other.q;
        return ((m % d) + d) % d;
    };

    PassagePair pair{PassagePair::Status::Ok,
                     ncie::PassageMatrix::identity(2),
                     ncie::PassageMatrix::identity(2)};
    std::int64_t rv = d >= 2 ? adapted_width(a, b) : 0;
    std::int64_t rh = d >= 2 ? adapted_width(b, a) : 0;
    pair.widths_vertical[0] = d;
    pair.widths_vertical[1] = rv;
    pair.widths_horizontal[0] = d;
    pair.widths_horizontal[1] = rh;
    if (rv == 0 || rh == 0) {
        pair.status = PassagePair::Status::SaddleConnection;
        return pair;
    }

    auto run = [&](std::int64_t w2, ncie::PassageMatrix& out, std::uint64_t& steps) {
        auto res = ncie::twice_cover_index(
            ncie::rotation_exchange(Rational(d), Rational(w2)), step_cap);
        out = res.passages;
        steps = res.steps;
        switch (res.status) {
            case ncie::TwiceCoverResult::Status::Found:
                return PassagePair::Status::Ok;
            case ncie::TwiceCoverResult::Status::SaddleConnection:
                return PassagePair::Status::SaddleConnection;
            default:
                return PassagePair::Status::CapExceeded;
        }
    };
    auto sv = run(rv, pair.vertical, pair.steps_vertical);
    auto sh = run(rh, pair.horizontal, pair.steps_horizontal);
    if (sv == PassagePair::Status::CapExceeded ||
        sh == PassagePair::Status::CapExceeded)
        pair.status = PassagePair::Status::CapExceeded;
    else if (sv != PassagePair::Status::Ok || sh != PassagePair::Status::Ok)
        pair.status = PassagePair::Status::SaddleConnection;
    return pair;
}

namespace {

inline bool pair_violation(const RegionReport& r, ModelSurface s) {
    bool max = r.verdict == FillingVerdict::MaximallyFilling;
    if (s == ModelSurface::S11) return max;  // no maximally filling pairs
    return r.verdict == FillingVerdict::Filling && !max;  // all filling are maximal
}

}  // namespace

PairScan scan_pairs(const std::vector<Slope>& slopes, ModelSurface s) {
    PairScan scan;
    const std::int64_t n = static_cast<std::int64_t>(slopes.size());
    std::vector<std::pair<Slope, Slope>> violations;
#pragma omp parallel
    {
        PairScan local;
        std::vector<std::pair<Slope, Slope>> local_violations;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = i + 1; j < n; ++j) {
                ++local.pairs;
                RegionReport r = complementary_regions(slopes[i], slopes[j], s);
                if (r.verdict != FillingVerdict::NonFilling) ++local.filling;
                if (r.verdict == FillingVerdict::MaximallyFilling)
                    ++local.maximally_filling;
                if (pair_violation(r, s))
                    local_violations.emplace_back(slopes[i], slopes[j]);
            }
        }
#pragma omp critical
        {
            scan.pairs += local.pairs;
            scan.filling += local.filling;
            scan.maximally_filling += local.maximally_filling;
            violations.insert(violations.end(), local_violations.begin(),
                              local_violations.end());
        }
    }
    std::sort(violations.begin(), violations.end());
    scan.violations = std::move(violations);
    return scan;
}

// Reference implementation for the tests and the benchmark.
PairScan scan_pairs_serial(const std::vector<Slope>& slopes, ModelSurface s) {
    PairScan scan;
    for (std::size_t i = 0; i < slopes.size(); ++i)
        for (std::size_t j = i + 1; j < slopes.size(); ++j) {
            ++scan.pairs;
            RegionReport r = complementary_regions(slopes[i], slopes[j], s);
            if (r.verdict != FillingVerdict::NonFilling) ++scan.filling;
            if (r.verdict == FillingVerdict::MaximallyFilling)
                ++scan.maximally_filling;
            if (pair_violation(r, s)) scan.violations.emplace_back(slopes[i], slopes[j]);
        }
    std::sort(scan.violations.begin(), scan.violations.end());
    return scan;
}

}  // namespace cgx::farey
