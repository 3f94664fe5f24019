#include "cgx/traintrack.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>

#include <json.hpp>

namespace cgx::traintrack {

std::size_t TrainTrack::slot_count() const {
    std::size_t n = 0;
    for (const auto& sw : switches) n += sw.side_a.size() + sw.side_b.size();
    return n;
}

std::string Region::shape_name() const {
    std::string base;
    switch (cusps) {
        case 0: base = "nullgon"; break;
        case 1: base = "monogon"; break;
        case 2: base = "bigon"; break;
        case 3: base = "triangle"; break;
        case 4: base = "square"; break;
        case 5: base = "pentagon"; break;
        case 6: base = "hexagon"; break;
        default: base = std::to_string(cusps) + "-gon"; break;
    }
    if (punctures == 1) return "once-punctured " + base;
    if (punctures > 1) return std::to_string(punctures) + "-punctured " + base;
    return base;
}

namespace {

struct SlotTable {
    struct Info {
        std::uint32_t sw = 0;
        bool side_b = false;
        std::uint32_t pos = 0;
        BranchId branch = 0;
        SlotId other = 0;
        bool bound = false;
    };
    std::vector<Info> info;
    std::vector<SlotId> ccw_next;  // cyclic order around each switch
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

SlotTable build_slots(const TrainTrack& t) {
    SlotTable table;
    std::size_t n = t.slot_count();
    table.info.resize(n);
    table.ccw_next.assign(n, 0);
    std::vector<int> seen(n, 0);

    auto note = [&](const std::string& msg) { table.problems.push_back(msg); };

    for (std::uint32_t si = 0; si < t.switches.size(); ++si) {
        const Switch& sw = t.switches[si];
        auto record = [&](SlotId s, bool side_b, std::uint32_t pos) {
            if (s >= n) {
                note("slot id " + std::to_string(s) + " out of range");
                return;
            }
            if (seen[s]++) {
                note("slot " + std::to_string(s) + " listed more than once");
                return;
            }
            table.info[s] = {si, side_b, pos, 0, 0, false};
        };
        for (std::uint32_t p = 0; p < sw.side_a.size(); ++p)
            record(sw.side_a[p], false, p);
        for (std::uint32_t p = 0; p < sw.side_b.size(); ++p)
            record(sw.side_b[p], true, p);

        // ccw order (A_1 .. A_k, B_m .. B_1)
        std::vector<SlotId> ccw = sw.side_a;
        for (auto it = sw.side_b.rbegin(); it != sw.side_b.rend(); ++it)
            ccw.push_back(*it);
        for (std::size_t i = 0; i < ccw.size(); ++i) {
            SlotId a = ccw[i];
            SlotId b = ccw[(i + 1) % ccw.size()];
            if (a < n && b < n) table.ccw_next[a] = b;
        }
    }
    for (std::size_t s = 0; s < n; ++s)
        if (!seen[s]) note("slot " + std::to_string(s) + " not attached to a switch");

    std::vector<int> used(n, 0);
    for (BranchId b = 0; b < t.branches.size(); ++b) {
        auto [x, y] = t.branches[b];
        if (x >= n || y >= n) {
            note("branch " + std::to_string(b) + " references a bad slot");
            continue;
        }
        if (x == y) {
            note("branch " + std::to_string(b) + " attaches twice to one slot");
            continue;
        }
        ++used[x];
        ++used[y];
        table.info[x].branch = b;
        table.info[x].other = y;
        table.info[x].bound = true;
        table.info[y].branch = b;
        table.info[y].other = x;
        table.info[y].bound = true;
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (used[s] == 0) note("slot " + std::to_string(s) + " has no branch");
        if (used[s] > 1) note("slot " + std::to_string(s) + " used by several branches");
    }
    return table;
}

struct Walk {
    std::vector<Region> faces;           // canonical order
    std::vector<std::size_t> face_of;    // slot -> face index
};

// Complementary regions are orbits of s -> other(ccw_next(s)); a cusp is
// crossed whenever s and ccw_next(s) lie on the same side of their switch.
Walk boundary_walk(const TrainTrack& t, const SlotTable& table) {
    std::size_t n = table.info.size();
    Walk walk;
    walk.face_of.assign(n, static_cast<std::size_t>(-1));
    std::vector<char> visited(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        Region face;
        SlotId s = static_cast<SlotId>(start);
        do {
            visited[s] = 1;
            walk.face_of[s] = walk.faces.size();
            SlotId nxt = table.ccw_next[s];
            if (table.info[s].sw == table.info[nxt].sw &&
                table.info[s].side_b == table.info[nxt].side_b)
                ++face.cusps;
            ++face.sides;
            s = table.info[nxt].other;
        } while (s != start);
        auto it = t.region_punctures.find(walk.faces.size());
        if (it != t.region_punctures.end()) face.punctures = it->second;
        walk.faces.push_back(face);
    }
    return walk;
}

}  // namespace

std::vector<Region> regions(const TrainTrack& t) {
    SlotTable table = build_slots(t);
    if (!table.ok())
        throw RibbonInconsistentError("ribbon data broken: " + table.problems.front());
    return boundary_walk(t, table).faces;
}

Rational euler_region_sum(const TrainTrack& t) {
    Rational sum(0);
    for (const Region& r : regions(t))
        sum += Rational(1) - Rational(r.punctures) - Rational(r.cusps, 2);
    return sum;
}

std::vector<ValidationIssue> validate(const TrainTrack& t) {
    using Code = ValidationIssue::Code;
    std::vector<ValidationIssue> issues;

    SlotTable table = build_slots(t);
    for (const auto& p : table.problems) issues.push_back({Code::SlotError, p});
    if (!table.ok()) return issues;  // region walk needs sound ribbon data

    for (std::size_t i = 0; i < t.switches.size(); ++i) {
        const Switch& sw = t.switches[i];
        if (sw.side_a.empty() || sw.side_b.empty())
            issues.push_back({Code::OneSidedSwitch,
                              "switch " + std::to_string(i) + " is one-sided"});
        if (sw.side_a.size() + sw.side_b.size() < 3)
            issues.push_back({Code::LowValence,
                              "switch " + std::to_string(i) + " has valence < 3"});
    }

    Walk walk = boundary_walk(t, table);
    const auto& faces = walk.faces;

    // Declared punctures must land in real regions and add up.
    unsigned assigned = 0;
    for (const auto& [idx, count] : t.region_punctures) {
        if (idx >= faces.size())
            issues.push_back({Code::PunctureCount,
                              "puncture assigned to missing region " +
                                  std::to_string(idx)});
        assigned += count;
    }
    if (assigned != t.surface.punctures)
        issues.push_back({Code::PunctureCount,
                          "assigned punctures " + std::to_string(assigned) +
                              " != surface punctures " +
                              std::to_string(t.surface.punctures)});

    // Closed-surface Euler count from the walk census.
    std::int64_t chi_walk = static_cast<std::int64_t>(t.switches.size()) -
                            static_cast<std::int64_t>(t.branches.size()) +
                            static_cast<std::int64_t>(faces.size());
    std::int64_t chi_decl = 2 - 2 * static_cast<std::int64_t>(t.surface.genus);
    if (chi_walk != chi_decl) {
        std::size_t smooth_faces = 0;
        for (const auto& f : faces)
            if (f.cusps == 0 && f.punctures == 0) ++smooth_faces;
        if (chi_walk > chi_decl && smooth_faces >= 2)
            issues.push_back({Code::Annulus,
                              "surplus smooth boundary walks bound an annulus"});
        else
            issues.push_back({Code::SurfaceMismatch,
                              "walk census gives chi=" + std::to_string(chi_walk) +
                                  ", declared surface has chi=" +
                                  std::to_string(chi_decl)});
    } else {
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const Region& f = faces[i];
            if (f.punctures > 0) continue;
            Code code;
            if (f.cusps == 0) code = Code::ForbiddenNullgon;
            else if (f.cusps == 1) code = Code::ForbiddenMonogon;
            else if (f.cusps == 2) code = Code::ForbiddenBigon;
            else continue;
            issues.push_back({code, "region " + std::to_string(i) +
                                        " is an unpunctured " + f.shape_name()});
        }
    }

    // Index identity: sum (1 - punctures - cusps/2) = chi(S_{g,n}).
    Rational sum(0);
    for (const Region& r : faces)
        sum += Rational(1) - Rational(r.punctures) - Rational(r.cusps, 2);
    Rational chi_surface = Rational(2 - 2 * static_cast<std::int64_t>(t.surface.genus) -
                                    static_cast<std::int64_t>(t.surface.punctures));
    if (sum != chi_surface)
        issues.push_back({Code::EulerIdentity,
                          "region index sum " + format_rational(sum) +
                              " != chi " + format_rational(chi_surface)});
    return issues;
}

bool is_maximal(const TrainTrack& t) {
    auto faces = regions(t);
    if (faces.empty()) return false;
    for (const Region& f : faces) {
        bool triangle = f.cusps == 3 && f.punctures == 0;
        bool punctured_monogon = f.cusps == 1 && f.punctures == 1;
        if (!triangle && !punctured_monogon) return false;
    }
    return true;
}

bool switch_check(const TrainTrack& t, const WeightVector& w) {
    if (w.size() != t.branches.size())
        throw IndexMismatchError("weight vector indexes " + std::to_string(w.size()) +
                                 " branches, track has " +
                                 std::to_string(t.branches.size()));
    SlotTable table = build_slots(t);
    if (!table.ok())
        throw RibbonInconsistentError("ribbon data broken: " + table.problems.front());
    for (const Switch& sw : t.switches) {
        Rational a(0), b(0);
        for (SlotId s : sw.side_a) a += w[table.info[s].branch];
        for (SlotId s : sw.side_b) b += w[table.info[s].branch];
        if (a != b) return false;
    }
    return true;
}

MultiCurve strand_components(const TrainTrack& t,
                             const std::vector<std::int64_t>& weights) {
    SlotTable table = build_slots(t);
    if (!table.ok())
        throw RibbonInconsistentError("ribbon data broken: " + table.problems.front());

    // One node per parallel band copy.
    std::vector<std::int64_t> offset(t.branches.size() + 1, 0);
    for (std::size_t b = 0; b < t.branches.size(); ++b) {
        if (weights[b] < 0) throw Error("negative weight");
        offset[b + 1] = offset[b] + weights[b];
    }
    std::int64_t total = offset[t.branches.size()];
    std::vector<std::int64_t> parent(static_cast<std::size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::int64_t(std::int64_t)> find = [&](std::int64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::int64_t a, std::int64_t b) { parent[find(a)] = find(b); };

    // Copy index of the strand at (slot, position-from-minus-flank). Copies
    // are numbered from the minus flank at the branch's first endpoint; the
    // band connects position p at one end to position w-1-p at the other.
    auto copy_at = [&](SlotId s, std::int64_t pos) {
        BranchId b = table.info[s].branch;
        std::int64_t w = weights[b];
        bool first_end = t.branches[b].first == s;
        // A loop branch never has both attachment slots equal (validated).
        std::int64_t idx = first_end ? pos : (w - 1 - pos);
        return offset[b] + idx;
    };

    for (const Switch& sw : t.switches) {
        // Side A: slots in order, strand positions from the minus flank up.
        // Side B: slots in order, positions from the plus flank down. The two
        // sequences read off the same transversal axis, so entry k meets
        // entry k.
        std::vector<std::int64_t> a_seq, b_seq;
        for (SlotId s : sw.side_a) {
            std::int64_t w = weights[table.info[s].branch];
            for (std::int64_t p = 0; p < w; ++p) a_seq.push_back(copy_at(s, p));
        }
        for (SlotId s : sw.side_b) {
            std::int64_t w = weights[table.info[s].branch];
            for (std::int64_t p = w - 1; p >= 0; --p) b_seq.push_back(copy_at(s, p));
        }
        if (a_seq.size() != b_seq.size())
            throw Error("strand matching needs a balanced weight vector");
        for (std::size_t k = 0; k < a_seq.size(); ++k) unite(a_seq[k], b_seq[k]);
    }

    std::map<std::int64_t, std::map<BranchId, unsigned>> comps;
    for (std::size_t b = 0; b < t.branches.size(); ++b)
        for (std::int64_t c = offset[b]; c < offset[b + 1]; ++c)
            comps[find(c)][static_cast<BranchId>(b)]++;

    MultiCurve mc;
    mc.weights = weights;
    for (const auto& [root, counts] : comps)
        mc.components.emplace_back(counts.begin(), counts.end());
    std::sort(mc.components.begin(), mc.components.end());
    return mc;
}

namespace {

struct BalancedEnumerator {
    const TrainTrack& t;
    std::int64_t cap;
    const EnumLimits& limits;
    SlotTable table;
    // Per switch: remaining unassigned endpoints and running side sums.
    std::vector<std::int64_t> sum_a, sum_b;
    std::vector<int> remaining;
    std::vector<std::int64_t> current;
    std::uint64_t visited = 0;
    std::vector<std::vector<std::int64_t>> out;

    BalancedEnumerator(const TrainTrack& track, std::int64_t weight_cap,
                       const EnumLimits& lim)
        : t(track), cap(weight_cap), limits(lim), table(build_slots(track)) {
        if (!table.ok())
            throw RibbonInconsistentError("ribbon data broken: " +
                                          table.problems.front());
        if (t.branches.size() > limits.max_branches)
            throw TooLargeError("track has " + std::to_string(t.branches.size()) +
                                " branches, enumeration cap is " +
                                std::to_string(limits.max_branches));
        sum_a.assign(t.switches.size(), 0);
        sum_b.assign(t.switches.size(), 0);
        remaining.assign(t.switches.size(), 0);
        for (const auto& info : table.info) ++remaining[info.sw];
        current.assign(t.branches.size(), 0);
    }

    void add_branch(BranchId b, std::int64_t w, int sign) {
        for (SlotId s : {t.branches[b].first, t.branches[b].second}) {
            const auto& info = table.info[s];
            (info.side_b ? sum_b : sum_a)[info.sw] += sign * w;
            remaining[info.sw] -= sign;
        }
    }

    bool switches_feasible() const {
        for (std::size_t i = 0; i < t.switches.size(); ++i) {
            if (remaining[i] == 0) {
                if (sum_a[i] != sum_b[i]) return false;
            } else {
                // The unassigned endpoints can shift the balance by at most
                // cap each.
                std::int64_t gap = sum_a[i] - sum_b[i];
                if (gap < 0) gap = -gap;
                if (gap > cap * remaining[i]) return false;
            }
        }
        return true;
    }

    void run(BranchId b) {
        if (++visited > limits.max_candidates)
            throw TooLargeError("balanced-system enumeration exceeded " +
                                std::to_string(limits.max_candidates) +
                                " candidates");
        if (b == t.branches.size()) {
            for (std::int64_t w : current)
                if (w != 0) {
                    out.push_back(current);
                    return;
                }
            return;  // the zero system is not a curve
        }
        for (std::int64_t w = 0; w <= cap; ++w) {
            add_branch(b, w, +1);
            if (switches_feasible()) run(b + 1);
            add_branch(b, w, -1);
        }
    }
};

std::vector<std::vector<std::int64_t>> balanced_systems(const TrainTrack& t,
                                                        std::int64_t cap,
                                                        const EnumLimits& limits) {
    BalancedEnumerator e(t, cap, limits);
    e.run(0);
    return e.out;
}

// w is extreme when no balanced integral system u satisfies 0 < u < w
// componentwise-bounded (u != 0, u != w); u balanced forces w - u balanced.
bool is_extreme(const TrainTrack& t, const std::vector<std::int64_t>& w,
                const EnumLimits& limits) {
    std::int64_t cap = *std::max_element(w.begin(), w.end());
    for (const auto& u : balanced_systems(t, cap, limits)) {
        if (u == w) continue;
        bool below = true;
        for (std::size_t i = 0; i < u.size(); ++i) below &= (u[i] <= w[i]);
        if (below) return false;
    }
    return true;
}

}  // namespace

std::vector<MultiCurve> vertex_cycles(const TrainTrack& t, const EnumLimits& limits) {
    std::vector<MultiCurve> cycles;
    for (const auto& w : balanced_systems(t, 2, limits)) {
        MultiCurve mc = strand_components(t, w);
        if (mc.components.size() != 1) continue;
        if (!is_extreme(t, w, limits)) continue;
        cycles.push_back(std::move(mc));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::vector<MultiCurve> carried_multicurves(const TrainTrack& t,
                                            std::int64_t weight_cap,
                                            const EnumLimits& limits) {
    std::vector<MultiCurve> out;
    if (weight_cap < 1) return out;
    for (const auto& w : balanced_systems(t, weight_cap, limits))
        out.push_back(strand_components(t, w));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TrainTrack track_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("track fixture: ") + e.what());
    }
    TrainTrack t;
    if (!j.contains("switches") || !j["switches"].is_array())
        throw SchemaError("track fixture: missing 'switches'");
    for (const auto& s : j["switches"]) {
        Switch sw;
        for (const auto& v : s.value("sideA", nlohmann::json::array()))
            sw.side_a.push_back(v.get<SlotId>());
        for (const auto& v : s.value("sideB", nlohmann::json::array()))
            sw.side_b.push_back(v.get<SlotId>());
        t.switches.push_back(std::move(sw));
    }
    if (!j.contains("branches") || !j["branches"].is_array())
        throw SchemaError("track fixture: missing 'branches'");
    for (const auto& b : j["branches"]) {
        if (!b.is_array() || b.size() != 2)
            throw SchemaError("track fixture: branch must be a 2-element list");
        t.branches.emplace_back(b[0].get<SlotId>(), b[1].get<SlotId>());
    }
    if (j.contains("surface")) {
        t.surface.genus = j["surface"].value("g", 0u);
        t.surface.punctures = j["surface"].value("n", 0u);
    }
    if (j.contains("region_punctures")) {
        for (const auto& [key, value] : j["region_punctures"].items())
            t.region_punctures[std::stoul(key)] = value.get<unsigned>();
    }
    return t;
}

TrainTrack load_track_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open track fixture: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return track_from_json_text(text);
}

}  // namespace cgx::traintrack
