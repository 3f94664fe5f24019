#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgx/errors.hpp"
#include "cgx/rational.hpp"
#include "cgx/traintrack.hpp"

namespace cgx::ncie {

struct NonpositiveInputError : Error {
    using Error::Error;
};

// Which horizontal side of the base rectangle an attachment glues to.
enum class Side : std::uint8_t { Upper, Lower };  // I_+ and I_-

inline const char* side_str(Side s) { return s == Side::Upper ? "+" : "-"; }

struct Attachment {
    Side side = Side::Upper;
    Rational offset;  // interval [offset, offset + width] within [0, delta]
};

struct Band {
    Rational width;
    Attachment ends[2];
    // Preserving bands attach to opposite sides (translation gluing);
    // reversing bands attach twice to one side (flip gluing).
    bool orientation_preserving = true;

    bool sides_opposite() const { return ends[0].side != ends[1].side; }
};

struct Ncie {
    Rational base_length;
    std::vector<Band> bands;

    // Derives each band's orientation flag from its side tags.
    static Ncie make(Rational base_length, std::vector<Band> bands);
};

// Convenience: the 2-band rotation exchange with orientation-preserving
// bands of the given widths, attached in swapped order top and bottom.
Ncie rotation_exchange(const Rational& w1, const Rational& w2);

struct ValidationIssue {
    enum class Code {
        OverlappingAttachments,
        CoverageGap,
        WidthMismatch,
        OrientationInconsistent,
        BadWidth,
    };
    Code code;
    std::string detail;
};

// Exact rational checks of the defining conditions: disjoint interiors,
// each side covered into [0, delta] without gaps, side sums equal to the
// base length, orientation flags matching the side tags.
std::vector<ValidationIssue> validate(const Ncie& x);

// Collapse the base rectangle to a single switch: side A reads the lower
// attachments left to right, side B the upper ones, and each band becomes a
// branch. Punctures are assigned to every complementary region with fewer
// than three cusps, which is what the flat-surface picture forces at desk
// scale. Returns the track plus the width system as branch weights.
struct CollapsedTrack {
    traintrack::TrainTrack track;
    traintrack::WeightVector weights;
};
CollapsedTrack to_train_track(const Ncie& x);

// Nonnegative integer array; entry (i, j) counts how many times current
// band i runs over original band j.
class PassageMatrix {
public:
    PassageMatrix() = default;
    static PassageMatrix identity(std::size_t n);

    std::size_t size() const { return rows_.size(); }
    const BigInt& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    // Left-multiplication by (I + e_{loser,winner}): adds the winner's row
    // into the loser's row.
    void apply_update(std::size_t loser, std::size_t winner);

    bool all_entries_at_least(const BigInt& k) const;
    bool operator==(const PassageMatrix&) const = default;

    std::string str() const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

struct StepRecord {
    std::size_t loser = 0;
    std::size_t winner = 0;
    Rational width_subtracted;
    Rational base_length_after;
};

struct InductionTrace {
    std::vector<StepRecord> steps;
};

enum class StepStatus : std::uint8_t {
    Ok,
    SaddleConnection,    // terminal widths tie: certifies non-pA input
    IllFormedInduction,  // one band holds both terminal attachments
};

struct StepOutcome {
    StepStatus status = StepStatus::Ok;
    std::optional<Ncie> next;       // present when status == Ok
    std::optional<StepRecord> record;
};

// One Rauzy move: the narrower terminal band loses, the base interval is cut
// back by the loser's width, and the loser is re-routed across the winner
// (adjacent to the winner's far attachment, translated or flipped by the
// winner's orientation).
StepOutcome rauzy_step(const Ncie& x);

struct StopRule {
    enum class Kind { LengthBelow, AllPassagesAtLeast, MaxSteps };
    Kind kind = Kind::MaxSteps;
    Rational length_threshold;
    BigInt passage_threshold;
    std::uint64_t step_limit = 0;

    static StopRule length_below(Rational eps) {
        return {Kind::LengthBelow, std::move(eps), 0, 0};
    }
    static StopRule all_passages_at_least(BigInt k) {
        return {Kind::AllPassagesAtLeast, Rational(0), std::move(k), 0};
    }
    static StopRule max_steps(std::uint64_t m) {
        return {Kind::MaxSteps, Rational(0), 0, m};
    }
};

struct InductionResult {
    InductionTrace trace;
    Ncie final_exchange;
    bool saddle_connection = false;  // stopped by a width tie
    bool stop_rule_fired = false;
};

InductionResult rauzy_until(const Ncie& x, const StopRule& stop,
                            std::uint64_t hard_cap = 1'000'000);

// Ordered product of the elementary updates applied to the identity.
PassageMatrix passage_product(std::size_t band_count, const InductionTrace& trace);

struct TwiceCoverResult {
    enum class Status { Found, SaddleConnection, CapExceeded } status;
    std::uint64_t steps = 0;          // smallest k when Found
    PassageMatrix passages;           // product of the first k steps
};

// Smallest step count k such that every entry of the passage product of the
// first k steps is >= 2.
TwiceCoverResult twice_cover_index(const Ncie& x, std::uint64_t cap = 100000);

// Prop-style certificate: true when all entries of both arrays are >= 2.
bool maximally_filling_certificate(const PassageMatrix& vertical,
                                   const PassageMatrix& horizontal);

// Lower bound 2*eps / L on the vertical-to-horizontal measure ratio of any
// curve carried at a stage with base length L.
Rational ratio_lower_bound(const Rational& stage_base_length, const Rational& eps);

// Fixture I/O: {"base_length": "p/q", "bands": [{"width": "p/q",
// "attachments": [{"side": "+", "offset": "0"}, ...]}]}.
Ncie ncie_from_json_text(const std::string& text);
Ncie load_ncie_file(const std::string& path);
std::string step_record_json(const StepRecord& r);

}  // namespace cgx::ncie
