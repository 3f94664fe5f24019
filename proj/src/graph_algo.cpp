#include "cgx/graph_algo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cgx/rng.hpp"

namespace cgx::graphcore {

namespace {

// Dial's algorithm: weights are 1 or 2, so a bucket queue settles vertices
// in exact half-unit order with no heap overhead.
DistanceField dial(const WeightedAdjacency& g, const std::vector<VertexId>& sources,
                   std::int64_t cap) {
    DistanceField field;
    field.half_units.assign(g.size(), kUnreachedMark);
    std::int64_t max_dist = 2 * static_cast<std::int64_t>(g.size()) + 2;
    std::int64_t limit = (cap >= 0 && cap < max_dist) ? cap : max_dist;
    std::vector<std::vector<VertexId>> buckets(static_cast<std::size_t>(limit) + 3);
    for (VertexId s : sources) {
        if (field.half_units[s] == 0) continue;
        field.half_units[s] = 0;
        buckets[0].push_back(s);
    }
    for (std::int64_t d = 0; d <= limit; ++d) {
        auto& bucket = buckets[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            VertexId v = bucket[i];
            if (field.half_units[v] != d) continue;  // stale entry
            for (auto [u, w] : g.adj[v]) {
                std::int64_t nd = d + w;
                if (field.half_units[u] != kUnreachedMark && field.half_units[u] <= nd)
                    continue;
                if (nd > limit) {
                    field.pruned = true;
                    continue;
                }
                field.half_units[u] = nd;
                buckets[static_cast<std::size_t>(nd)].push_back(u);
            }
        }
        bucket.clear();
        bucket.shrink_to_fit();
    }
    return field;
}

}  // namespace

DistanceField distances_from(const WeightedAdjacency& g, VertexId source,
                             std::int64_t cap_half_units) {
    return dial(g, {source}, cap_half_units);
}

DistanceField distances_from_set(const WeightedAdjacency& g,
                                 const std::vector<VertexId>& sources,
                                 std::int64_t cap_half_units) {
    return dial(g, sources, cap_half_units);
}

HalfDistance distance(const WeightedAdjacency& g, VertexId u, VertexId v,
                      std::int64_t cap_half_units) {
    if (u >= g.size() || v >= g.size())
        throw UnknownVertexError("id " + std::to_string(u >= g.size() ? u : v));
    DistanceField field = distances_from(g, u, cap_half_units);
    std::int64_t d = field.half_units[v];
    if (d == kUnreachedMark)
        return field.pruned ? HalfDistance::cap_exceeded() : HalfDistance::unreachable();
    return HalfDistance::finite(d);
}

std::vector<std::vector<std::int64_t>> all_pairs(const WeightedAdjacency& g) {
    std::vector<std::vector<std::int64_t>> table(g.size());
    const std::int64_t n = static_cast<std::int64_t>(g.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t v = 0; v < n; ++v) {
        table[static_cast<std::size_t>(v)] =
            distances_from(g, static_cast<VertexId>(v)).half_units;
    }
    return table;
}

std::vector<std::vector<std::int64_t>> all_pairs_serial(const WeightedAdjacency& g) {
    std::vector<std::vector<std::int64_t>> table(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        table[v] = distances_from(g, static_cast<VertexId>(v)).half_units;
    return table;
}

std::string FourPointDelta::str() const {
    std::int64_t num = quarter_units;
    std::int64_t den = 4;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return "0";
    num /= g;
    den /= g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Pair-sum defect of one quadruple: largest pair-sum minus the median one.
// The result is the doubled delta, i.e. the delta in quarter units.
inline std::int64_t quadruple_defect(std::int64_t dab, std::int64_t dcd,
                                     std::int64_t dac, std::int64_t dbd,
                                     std::int64_t dad, std::int64_t dbc) {
    std::int64_t s1 = dab + dcd;
    std::int64_t s2 = dac + dbd;
    std::int64_t s3 = dad + dbc;
    std::int64_t hi = std::max({s1, s2, s3});
    std::int64_t lo = std::min({s1, s2, s3});
    std::int64_t mid = s1 + s2 + s3 - hi - lo;
    return hi - mid;
}

struct QuadruplePlan {
    std::vector<VertexId> verts;          // queried vertices (deduped)
    std::vector<std::array<std::uint32_t, 4>> samples;  // empty => exhaustive
    bool exhaustive = false;
};

QuadruplePlan plan_quadruples(const WeightedAdjacency& g,
                              const std::vector<VertexId>& vertices,
                              const QuadrupleSpec& spec) {
    QuadruplePlan plan;
    plan.verts = vertices;
    if (plan.verts.empty()) {
        plan.verts.resize(g.size());
        std::iota(plan.verts.begin(), plan.verts.end(), 0);
    }
    std::sort(plan.verts.begin(), plan.verts.end());
    plan.verts.erase(std::unique(plan.verts.begin(), plan.verts.end()),
                     plan.verts.end());

    using Mode = QuadrupleSpec::Mode;
    Mode mode = spec.mode;
    if (mode == Mode::Auto)
        mode = plan.verts.size() <= spec.exhaustive_threshold ? Mode::Exhaustive
                                                              : Mode::Sampled;
    if (mode == Mode::Explicit) {
        // Re-map explicit vertex ids into positions of the dedup'd list.
        std::vector<VertexId> all;
        for (const auto& q : spec.explicit_list)
            for (VertexId v : q) all.push_back(v);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        plan.verts = all;
        for (const auto& q : spec.explicit_list) {
            std::array<std::uint32_t, 4> idx{};
            for (int i = 0; i < 4; ++i) {
                auto it = std::lower_bound(plan.verts.begin(), plan.verts.end(), q[i]);
                idx[i] = static_cast<std::uint32_t>(it - plan.verts.begin());
            }
            plan.samples.push_back(idx);
        }
        return plan;
    }
    if (mode == Mode::Exhaustive) {
        plan.exhaustive = true;
        return plan;
    }
    // Sampled: draw index quadruples ahead of time so the scan itself can be
    // split across threads without touching the generator.
    SplitMix64 rng(spec.seed);
    const std::uint64_t n = plan.verts.size();
    if (n < 4) {
        plan.exhaustive = true;
        return plan;
    }
    plan.samples.reserve(spec.samples);
    for (std::uint64_t s = 0; s < spec.samples; ++s) {
        std::array<std::uint32_t, 4> q{};
        for (int i = 0; i < 4;) {
            auto cand = static_cast<std::uint32_t>(rng.next_below(n));
            bool dup = false;
            for (int j = 0; j < i; ++j) dup |= (q[j] == cand);
            if (dup) continue;
            q[i++] = cand;
        }
        plan.samples.push_back(q);
    }
    return plan;
}

// Distance table restricted to the queried vertices. Throws on any
// unreachable pair: the four-point condition needs a connected input.
std::vector<std::vector<std::int64_t>> restricted_table(
    const WeightedAdjacency& g, const std::vector<VertexId>& verts, bool parallel) {
    std::vector<std::vector<std::int64_t>> table(verts.size());
    const std::int64_t m = static_cast<std::int64_t>(verts.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < m; ++i) {
        DistanceField field = distances_from(g, verts[static_cast<std::size_t>(i)]);
        auto& row = table[static_cast<std::size_t>(i)];
        row.resize(verts.size());
        for (std::size_t j = 0; j < verts.size(); ++j)
            row[j] = field.half_units[verts[j]];
    }
    for (const auto& row : table)
        for (std::int64_t d : row)
            if (d == kUnreachedMark)
                throw DisconnectedInputError("four-point query on a disconnected set");
    return table;
}

FourPointDelta delta_four_point_impl(const WeightedAdjacency& g,
                                     const std::vector<VertexId>& vertices,
                                     const QuadrupleSpec& spec, bool parallel) {
    QuadruplePlan plan = plan_quadruples(g, vertices, spec);
    auto table = restricted_table(g, plan.verts, parallel);
    FourPointDelta result;
    const std::int64_t m = static_cast<std::int64_t>(plan.verts.size());

    if (plan.exhaustive) {
        result.exhaustive = true;
        if (m < 4) return result;
        std::int64_t best = 0;
        std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : best) \
    reduction(+ : total) if (parallel)
        for (std::int64_t a = 0; a < m; ++a) {
            for (std::int64_t b = a + 1; b < m; ++b)
                for (std::int64_t c = b + 1; c < m; ++c)
                    for (std::int64_t d = c + 1; d < m; ++d) {
                        std::int64_t def = quadruple_defect(
                            table[a][b], table[c][d], table[a][c], table[b][d],
                            table[a][d], table[b][c]);
                        best = std::max(best, def);
                        ++total;
                    }
        }
        result.quarter_units = best;
        result.quadruples = total;
        return result;
    }

    std::int64_t best = 0;
    const std::int64_t count = static_cast<std::int64_t>(plan.samples.size());
#pragma omp parallel for schedule(static) reduction(max : best) if (parallel)
    for (std::int64_t s = 0; s < count; ++s) {
        const auto& q = plan.samples[static_cast<std::size_t>(s)];
        std::int64_t def =
            quadruple_defect(table[q[0]][q[1]], table[q[2]][q[3]], table[q[0]][q[2]],
                             table[q[1]][q[3]], table[q[0]][q[3]], table[q[1]][q[2]]);
        best = std::max(best, def);
    }
    result.quarter_units = best;
    result.quadruples = plan.samples.size();
    return result;
}

}  // namespace

FourPointDelta delta_four_point(const WeightedAdjacency& g,
                                const std::vector<VertexId>& vertices,
                                const QuadrupleSpec& spec) {
    return delta_four_point_impl(g, vertices, spec, true);
}

FourPointDelta delta_four_point_serial(const WeightedAdjacency& g,
                                       const std::vector<VertexId>& vertices,
                                       const QuadrupleSpec& spec) {
    return delta_four_point_impl(g, vertices, spec, false);
}

HalfDistance quasiconvexity_constant(const WeightedAdjacency& g,
                                     const std::vector<VertexId>& subset,
                                     std::int64_t radius_cap) {
    if (subset.empty()) return HalfDistance::finite(0);
    std::vector<DistanceField> rows(subset.size());
    const std::int64_t m = static_cast<std::int64_t>(subset.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < m; ++i)
        rows[static_cast<std::size_t>(i)] = distances_from(g, subset[i]);
    DistanceField from_subset = distances_from_set(g, subset);

    std::int64_t best = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            std::int64_t dij = rows[i].half_units[subset[j]];
            if (dij == kUnreachedMark || (radius_cap >= 0 && dij > radius_cap))
                return HalfDistance::cap_exceeded();
            for (std::size_t w = 0; w < g.size(); ++w) {
                std::int64_t dw1 = rows[i].half_units[w];
                std::int64_t dw2 = rows[j].half_units[w];
                if (dw1 == kUnreachedMark || dw2 == kUnreachedMark) continue;
                if (dw1 + dw2 != dij) continue;  // not on a geodesic
                best = std::max(best, from_subset.half_units[w]);
            }
        }
    }
    return HalfDistance::finite(best);
}

std::vector<VertexId> nearest_point_projection(const WeightedAdjacency& g,
                                               const std::vector<VertexId>& target,
                                               const std::vector<VertexId>& source) {
    if (target.empty() || source.empty())
        throw Error("projection needs nonempty target and source");
    std::set<VertexId> out;
    std::vector<DistanceField> rows(source.size());
    const std::int64_t m = static_cast<std::int64_t>(source.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < m; ++i)
        rows[static_cast<std::size_t>(i)] = distances_from(g, source[i]);
    for (std::size_t i = 0; i < source.size(); ++i) {
        std::int64_t best = kUnreachedMark;
        for (VertexId t : target) {
            std::int64_t d = rows[i].half_units[t];
            if (d == kUnreachedMark) continue;
            if (best == kUnreachedMark || d < best) best = d;
        }
        if (best == kUnreachedMark)
            throw DisconnectedInputError("source vertex cannot reach the target set");
        for (VertexId t : target)
            if (rows[i].half_units[t] == best) out.insert(t);
    }
    return {out.begin(), out.end()};
}

HalfDistance projection_diameter(const WeightedAdjacency& g,
                                 const std::vector<VertexId>& axis,
                                 const std::vector<VertexId>& subset) {
    std::vector<VertexId> proj = nearest_point_projection(g, axis, subset);
    std::int64_t best = 0;
    for (VertexId p : proj) {
        DistanceField field = distances_from(g, p);
        for (VertexId q : proj) {
            std::int64_t d = field.half_units[q];
            if (d == kUnreachedMark)
                throw DisconnectedInputError("projection set is disconnected");
            best = std::max(best, d);
        }
    }
    return HalfDistance::finite(best);
}

WpdCensus wpd_census(const Graph& g, const std::vector<VertexMap>& candidates,
                     const VertexMap& mover, VertexId x, std::int64_t r_half_units,
                     unsigned power) {
    mover.validate(g);
    for (const auto& h : candidates) h.validate(g);

    VertexId y = x;
    for (unsigned i = 0; i < power; ++i) {
        if (!mover.defined(y))
            throw CapExceededError("mover orbit left the loaded ball at step " +
                                   std::to_string(i + 1));
        y = mover.apply(y);
    }

    WeightedAdjacency w = g.weighted();
    DistanceField from_x = distances_from(w, x);
    DistanceField from_y = distances_from(w, y);

    WpdCensus census;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const VertexMap& h = candidates[i];
        if (!h.defined(x) || !h.defined(y)) {
            ++census.undefined;
            continue;
        }
        std::int64_t dx = from_x.half_units[h.apply(x)];
        std::int64_t dy = from_y.half_units[h.apply(y)];
        if (dx == kUnreachedMark || dy == kUnreachedMark) continue;
        if (dx < r_half_units && dy < r_half_units) {
            ++census.count;
            census.witnesses.push_back(i);
        }
    }
    return census;
}

std::size_t count_parallel_translates(const Graph& g, const SubsetFamily& family,
                                      VertexId a, VertexId b,
                                      std::int64_t d0_half_units) {
    WeightedAdjacency w = g.weighted();
    DistanceField from_a = distances_from(w, a);
    DistanceField from_b = distances_from(w, b);
    // Distinct-as-sets counting: set-equal members enter the tally once.
    std::set<std::vector<VertexId>> counted;
    for (const auto& m : family.members()) {
        std::int64_t da = kUnreachedMark;
        std::int64_t db = kUnreachedMark;
        for (VertexId v : m.vertices) {
            std::int64_t x = from_a.half_units[v];
            std::int64_t y = from_b.half_units[v];
            if (x != kUnreachedMark && (da == kUnreachedMark || x < da)) da = x;
            if (y != kUnreachedMark && (db == kUnreachedMark || y < db)) db = y;
        }
        if (da == kUnreachedMark || db == kUnreachedMark) continue;
        if (da < d0_half_units && db < d0_half_units) counted.insert(m.vertices);
    }
    return counted.size();
}

TranslationGrowth translation_growth(const Graph& g, const VertexMap& mover,
                                     VertexId x, unsigned n_max) {
    mover.validate(g);
    WeightedAdjacency w = g.weighted();
    DistanceField from_x = distances_from(w, x);
    TranslationGrowth growth;
    VertexId y = x;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (!mover.defined(y)) {
            growth.cap_exceeded = true;
            break;
        }
        y = mover.apply(y);
        std::int64_t d = from_x.half_units[y];
        growth.records.emplace_back(n, d == kUnreachedMark
                                           ? HalfDistance::unreachable()
                                           : HalfDistance::finite(d));
    }
    return growth;
}

}  // namespace cgx::graphcore
