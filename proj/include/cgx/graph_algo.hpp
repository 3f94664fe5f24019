#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgx/graph.hpp"
#include "cgx/halfdist.hpp"

namespace cgx::graphcore {

// ---------------------------------------------------------------------------
// Distances. Everything is exact half-unit integer arithmetic on top of a
// bucket-queue Dijkstra (edge weights are 1 or 2 only).
// ---------------------------------------------------------------------------

// Single-source distances in half-units; kUnreachedMark where no path was
// found. With a cap, exploration stops past the cap and `pruned` reports
// whether anything was cut off (distinguishing Unreachable from CapExceeded).
struct DistanceField {
    std::vector<std::int64_t> half_units;  // kUnreachedMark if not settled
    bool pruned = false;
};

inline constexpr std::int64_t kUnreachedMark = -1;

DistanceField distances_from(const WeightedAdjacency& g, VertexId source,
                             std::int64_t cap_half_units = -1);

DistanceField distances_from_set(const WeightedAdjacency& g,
                                 const std::vector<VertexId>& sources,
                                 std::int64_t cap_half_units = -1);

HalfDistance distance(const WeightedAdjacency& g, VertexId u, VertexId v,
                      std::int64_t cap_half_units = -1);

// All-pairs table, one row per vertex. Parallel over sources; the serial
// variant is the reference implementation used in tests and the benchmark.
std::vector<std::vector<std::int64_t>> all_pairs(const WeightedAdjacency& g);
std::vector<std::vector<std::int64_t>> all_pairs_serial(const WeightedAdjacency& g);

// ---------------------------------------------------------------------------
// Four-point hyperbolicity defect.
// ---------------------------------------------------------------------------

// Largest four-point defect over the quadruple set: for each quadruple the
// three pair-sums are formed, and the defect is (largest - median) / 2.
// Distances are half-units, so the exact value lives in quarter units.
struct FourPointDelta {
    std::int64_t quarter_units = 0;
    bool exhaustive = false;
    std::uint64_t quadruples = 0;

    std::string str() const;  // exact value in units, e.g. "3/4"
};

struct QuadrupleSpec {
    enum class Mode { Auto, Exhaustive, Sampled, Explicit };
    Mode mode = Mode::Auto;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;
    std::size_t exhaustive_threshold = 64;  // vertex count for Auto
    std::vector<std::array<VertexId, 4>> explicit_list;
};

FourPointDelta delta_four_point(const WeightedAdjacency& g,
                                const std::vector<VertexId>& vertices,
                                const QuadrupleSpec& spec);
FourPointDelta delta_four_point_serial(const WeightedAdjacency& g,
                                       const std::vector<VertexId>& vertices,
                                       const QuadrupleSpec& spec);

// ---------------------------------------------------------------------------
// Quasiconvexity, projections, WPD census.
// ---------------------------------------------------------------------------

// Smallest K (half-units) such that every vertex on any geodesic between two
// subset members is within K of the subset. A vertex w lies on a geodesic
// from u to v exactly when d(u,w) + d(w,v) = d(u,v), so the geodesic union is
// computed exactly without path enumeration. CapExceeded when a pair is
// farther apart than radius_cap (or disconnected).
HalfDistance quasiconvexity_constant(const WeightedAdjacency& g,
                                     const std::vector<VertexId>& subset,
                                     std::int64_t radius_cap);

// All target vertices realizing the minimum distance to some source vertex
// (union over sources of their minimizer sets). Sorted.
std::vector<VertexId> nearest_point_projection(const WeightedAdjacency& g,
                                               const std::vector<VertexId>& target,
                                               const std::vector<VertexId>& source);

HalfDistance projection_diameter(const WeightedAdjacency& g,
                                 const std::vector<VertexId>& axis,
                                 const std::vector<VertexId>& subset);

struct WpdCensus {
    std::size_t count = 0;              // maps satisfying both strict bounds
    std::vector<std::size_t> witnesses; // indices into the candidate list
    std::size_t undefined = 0;          // maps undefined at x or at mover^N x
};

// Counts candidate maps h with d(x,hx) < r and d(g^N x, h g^N x) < r, both
// strict, on the provided finite candidate set. Candidates may be partial
// (ball windows); a candidate undefined at either basepoint never counts and
// is tallied separately.
WpdCensus wpd_census(const Graph& g, const std::vector<VertexMap>& candidates,
                     const VertexMap& mover, VertexId x, std::int64_t r_half_units,
                     unsigned power);

// Number of family members, distinct as vertex sets, lying strictly within
// D0 of both a and b. Set-equal members are counted once.
std::size_t count_parallel_translates(const Graph& g, const SubsetFamily& family,
                                      VertexId a, VertexId b,
                                      std::int64_t d0_half_units);

struct TranslationGrowth {
    // (n, d(x, mover^n x)) for n = 1..n_max, truncated if the orbit leaves
    // the loaded ball.
    std::vector<std::pair<unsigned, HalfDistance>> records;
    bool cap_exceeded = false;
};

TranslationGrowth translation_growth(const Graph& g, const VertexMap& mover,
                                     VertexId x, unsigned n_max);

}  // namespace cgx::graphcore
