#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgx/errors.hpp"
#include "cgx/graph.hpp"
#include "cgx/ncie.hpp"
#include "cgx/rational.hpp"

namespace cgx::farey {

struct EqualSlopesError : Error {
    using Error::Error;
};

// A slope p/q in canonical form: gcd(|p|,|q|) = 1 and q > 0, except the
// vertical slope (1,0). (0,1) is slope zero.
struct Slope {
    std::int64_t p = 0;
    std::int64_t q = 1;

    static Slope make(std::int64_t p, std::int64_t q);
    static Slope parse(const std::string& text);  // "p/q", "1/0" for infinity

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

    bool operator==(const Slope&) const = default;
    auto operator<=>(const Slope&) const = default;
};

inline std::int64_t det(const Slope& a, const Slope& b) {
    return a.p * b.q - a.q * b.p;
}

enum class ModelSurface : std::uint8_t { S11, S04 };

// |det| on the once-punctured torus, twice that on the 4-punctured sphere.
std::int64_t intersection_number(const Slope& a, const Slope& b, ModelSurface s);

// Minimal-intersection adjacency: |det| = 1.
bool farey_adjacent(const Slope& a, const Slope& b);

// Mapping class in the model: an integer matrix of determinant one, taken up
// to global sign.
class FareyMapClass {
public:
    FareyMapClass() : m_{BigInt(1), BigInt(0), BigInt(0), BigInt(1)} {}
    FareyMapClass(BigInt a, BigInt b, BigInt c, BigInt d);

    static FareyMapClass twist_t();       // [[1,1],[0,1]]
    static FareyMapClass twist_s();       // [[1,0],[1,1]]

    const BigInt& at(int r, int c) const { return m_[2 * r + c]; }
    BigInt trace_abs() const;

    FareyMapClass operator*(const FareyMapClass& o) const;
    FareyMapClass inverse() const;

    bool operator==(const FareyMapClass&) const = default;
    bool operator<(const FareyMapClass& o) const { return m_ < o.m_; }

    std::string str() const;

private:
    void canonicalize();  // flip the global sign into a fixed convention
    std::array<BigInt, 4> m_;
};

enum class MapKind : std::uint8_t { Elliptic, Reducible, PseudoAnosov };

MapKind classify(const FareyMapClass& m);
const char* map_kind_str(MapKind k);

// Exact image slope, before any int64 narrowing.
std::pair<BigInt, BigInt> act_big(const FareyMapClass& m, const Slope& a);
// Image as a canonical Slope; nullopt when it does not fit in int64.
std::optional<Slope> act(const FareyMapClass& m, const Slope& a);

// ---------------------------------------------------------------------------
// Ball generation. Farey vertices have infinite valence, so balls are taken
// inside the complexity window |p| <= cap, |q| <= cap; within that window
// neighbor enumeration is complete (solutions of ps' - qr' = 1 form a single
// arithmetic family per vertex).
// ---------------------------------------------------------------------------

struct BallOptions {
    unsigned radius_cap = 8;
    std::int64_t complexity_cap = 128;
};

struct FareyBall {
    graphcore::Graph graph;     // induced graph, vertices named "p/q"
    std::vector<Slope> slopes;  // by vertex id
    std::vector<unsigned> depth;
    Slope center;

    std::optional<graphcore::VertexId> vertex_of(const Slope& s) const {
        return graph.find(s.str());
    }
};

FareyBall farey_ball(const Slope& center, unsigned radius,
                     const BallOptions& opts = {});

// All window neighbors of a slope (canonical order).
std::vector<Slope> window_neighbors(const Slope& s, std::int64_t complexity_cap);

// Restriction of a mapping class to a ball window, as a partial vertex map.
graphcore::VertexMap to_vertex_map(const FareyBall& ball, const FareyMapClass& m,
                                   const std::string& label);

// All distinct words of length <= max_len in the two standard twists and
// their inverses (distinct as map classes), canonical order.
std::vector<std::pair<std::string, FareyMapClass>> twist_words(unsigned max_len);

// ---------------------------------------------------------------------------
// Complementary-region census on the flat models.
// ---------------------------------------------------------------------------

enum class FillingVerdict : std::uint8_t { NonFilling, Filling, MaximallyFilling };
const char* verdict_str(FillingVerdict v);

struct RegionCensusEntry {
    unsigned cusps = 0;
    unsigned marks = 0;  // punctures / orbifold points in the cell
    std::uint64_t count = 0;

    bool operator==(const RegionCensusEntry&) const = default;
};

struct RegionReport {
    ModelSurface surface = ModelSurface::S11;
    std::int64_t det = 0;  // |p_a q_b - q_a p_b|
    std::vector<RegionCensusEntry> cells;  // sorted by (cusps, marks)
    std::int64_t vertices = 0;             // downstairs cell-structure counts
    std::int64_t edge_segments = 0;
    std::int64_t faces = 0;
    FillingVerdict verdict = FillingVerdict::NonFilling;

    std::int64_t euler() const { return vertices - edge_segments + faces; }
};

// Exact census of the complement of the two slope curves. On the torus the
// cells are the |det| parallelogram cells with the marked point in one of
// them; on the 4-punctured sphere the torus picture is pushed down through
// the elliptic involution with the four fixed points at half-integer points.
// Throws EqualSlopesError when a == b.
RegionReport complementary_regions(const Slope& a, const Slope& b, ModelSurface s);

// Every pair (a', b') with d(a,a') <= K and d(b,b') <= K is maximally
// filling, checked exhaustively over the generated balls.
bool k_maximally_filling(const Slope& a, const Slope& b, unsigned k,
                         const BallOptions& opts = {});

// Quadrant train track nesting check: when `a` is strictly carried by the
// standard quadrant track, is every slope within distance K also carried
// (weight-zero boundary slopes 0/1 and 1/0 allowed)?
struct NestingOutcome {
    enum class Status { Holds, Fails, Rejected } status;
    std::vector<Slope> escapes;  // ball slopes outside the carried cone
};

NestingOutcome nesting_check(int sign_x, int sign_y, const Slope& a, unsigned k,
                             const BallOptions& opts = {});

// ---------------------------------------------------------------------------
// Passage pair for a slope pair on the 4-punctured sphere: the band
// combinatorics of each direction is the 2-band rotation with widths
// (d, r) read off in a unimodular basis adapted to the other slope; the
// matrices are the passage products at the first all-entries->=2 stage.
// ---------------------------------------------------------------------------

struct PassagePair {
    enum class Status { Ok, SaddleConnection, CapExceeded } status;
    ncie::PassageMatrix vertical;
    ncie::PassageMatrix horizontal;
    std::uint64_t steps_vertical = 0;
    std::uint64_t steps_horizontal = 0;
    std::int64_t widths_vertical[2] = {0, 0};
    std::int64_t widths_horizontal[2] = {0, 0};
};

PassagePair s04_passage_pair(const Slope& a, const Slope& b,
                             std::uint64_t step_cap = 100000);

// ---------------------------------------------------------------------------
// Pair scans (the data-parallel kernel behind the stratum checks).
// ---------------------------------------------------------------------------

struct PairScan {
    std::uint64_t pairs = 0;
    std::uint64_t filling = 0;
    std::uint64_t maximally_filling = 0;
    // Pairs violating the model facts: maximally filling pairs on S11,
    // filling-but-not-maximal pairs on S04.
    std::vector<std::pair<Slope, Slope>> violations;
};

PairScan scan_pairs(const std::vector<Slope>& slopes, ModelSurface s);
PairScan scan_pairs_serial(const std::vector<Slope>& slopes, ModelSurface s);

}  // namespace cgx::farey
