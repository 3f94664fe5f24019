#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgx/errors.hpp"
#include "cgx/orbifolds.hpp"
#include "cgx/rational.hpp"

namespace cgx::traintrack {

using orbifolds::SurfaceSig;

using SlotId = std::uint32_t;
using BranchId = std::uint32_t;

// A switch has two ordered sides of half-branch slots. Slot order within a
// side runs along the tangent line, and the counterclockwise order of slots
// around the switch is (A_1 .. A_k, B_m .. B_1): consecutive slots on the
// same side pinch a cusp, the two side-to-side transitions are smooth.
struct Switch {
    std::vector<SlotId> side_a;
    std::vector<SlotId> side_b;
};

// Ribbon-structured track. Purely combinatorial: the per-side slot orders
// determine the complementary regions, and the declared puncture assignment
// places the surface's punctures into them.
struct TrainTrack {
    std::vector<Switch> switches;
    std::vector<std::pair<SlotId, SlotId>> branches;
    SurfaceSig surface;
    std::map<std::size_t, unsigned> region_punctures;  // region index -> count

    std::size_t slot_count() const;
};

struct Region {
    unsigned cusps = 0;
    unsigned punctures = 0;
    std::size_t sides = 0;  // branch long sides on the boundary walk

    std::string shape_name() const;  // nullgon/monogon/bigon/triangle/...
    bool operator==(const Region&) const = default;
};

struct ValidationIssue {
    enum class Code {
        SlotError,
        OneSidedSwitch,
        LowValence,
        SurfaceMismatch,
        Annulus,
        ForbiddenNullgon,
        ForbiddenMonogon,
        ForbiddenBigon,
        PunctureCount,
        EulerIdentity,
    };
    Code code;
    std::string detail;
};

// Structural and region validation. Empty result means the track is valid:
// every switch two-sided with valence >= 3, ribbon data consistent, declared
// surface matching the walk census, no forbidden complementary region
// (unpunctured nullgon/monogon/bigon, annulus), punctures fully assigned.
std::vector<ValidationIssue> validate(const TrainTrack& t);

// Complementary regions in canonical boundary-walk order (orbits of the walk
// permutation, ordered by their smallest slot). Throws RibbonInconsistentError
// when the ribbon data is structurally broken.
std::vector<Region> regions(const TrainTrack& t);

// Exact value of sum over regions of (1 - punctures - cusps/2).
Rational euler_region_sum(const TrainTrack& t);

// Every region is a triangle or a once-punctured monogon. A track with no
// regions at all is not maximal.
bool is_maximal(const TrainTrack& t);

using WeightVector = std::vector<Rational>;

// Switch equality at every switch: side A weights sum to side B weights.
// A loop branch with both ends on one side contributes twice there.
bool switch_check(const TrainTrack& t, const WeightVector& w);

// Integral weights decompose into curve components by following strands
// through bands and across switches; see strand_components.
struct MultiCurve {
    // Per component, the branch traversal counts, sorted canonically.
    std::vector<std::vector<std::pair<BranchId, unsigned>>> components;
    std::vector<std::int64_t> weights;

    bool operator==(const MultiCurve&) const = default;
    bool operator<(const MultiCurve& o) const { return weights < o.weights; }
};

// Number of curve components of an integral balanced weight vector, with the
// per-component branch passage counts.
MultiCurve strand_components(const TrainTrack& t,
                             const std::vector<std::int64_t>& weights);

struct EnumLimits {
    std::size_t max_branches = 20;
    std::uint64_t max_candidates = 50'000'000;
};

// All vertex cycles: integral balanced systems with entries in {0,1,2} that
// are single closed curves and are not a sum of two nonzero balanced
// systems. Exhaustive; TooLarge past the caps.
std::vector<MultiCurve> vertex_cycles(const TrainTrack& t,
                                      const EnumLimits& limits = {});

// All carried multicurves with max branch weight <= weight_cap, canonically
// sorted. TooLarge past the caps.
std::vector<MultiCurve> carried_multicurves(const TrainTrack& t,
                                            std::int64_t weight_cap,
                                            const EnumLimits& limits = {});

// Fixture I/O (JSON): {"switches":[{"sideA":[..],"sideB":[..]}],
// "branches":[[a,b],..], "surface":{"g":..,"n":..},
// "region_punctures":{"0":1}}.
TrainTrack track_from_json_text(const std::string& text);
TrainTrack load_track_file(const std::string& path);

}  // namespace cgx::traintrack
