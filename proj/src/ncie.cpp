#include "cgx/ncie.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace cgx::ncie {

Ncie Ncie::make(Rational base_length, std::vector<Band> bands) {
    Ncie x;
    x.base_length = std::move(base_length);
    x.bands = std::move(bands);
    for (Band& b : x.bands) b.orientation_preserving = b.sides_opposite();
    return x;
}

Ncie rotation_exchange(const Rational& w1, const Rational& w2) {
    // Upper side: band 0 then band 1; lower side: band 1 then band 0.
    Band b0;
    b0.width = w1;
    b0.ends[0] = {Side::Upper, Rational(0)};
    b0.ends[1] = {Side::Lower, w2};
    Band b1;
    b1.width = w2;
    b1.ends[0] = {Side::Upper, w1};
    b1.ends[1] = {Side::Lower, Rational(0)};
    return Ncie::make(w1 + w2, {b0, b1});
}

namespace {

struct SideEntry {
    std::size_t band;
    int end;  // 0 or 1
    Rational offset;
    Rational width;
};

std::vector<SideEntry> side_entries(const Ncie& x, Side side) {
    std::vector<SideEntry> entries;
    for (std::size_t b = 0; b < x.bands.size(); ++b)
        for (int e = 0; e < 2; ++e)
            if (x.bands[b].ends[e].side == side)
                entries.push_back({b, e, x.bands[b].ends[e].offset, x.bands[b].width});
    std::sort(entries.begin(), entries.end(),
              [](const SideEntry& a, const SideEntry& b) { return a.offset < b.offset; });
    return entries;
}

}  // namespace

std::vector<ValidationIssue> validate(const Ncie& x) {
    using Code = ValidationIssue::Code;
    std::vector<ValidationIssue> issues;
    if (x.base_length <= 0)
        issues.push_back({Code::BadWidth, "base length must be positive"});
    for (std::size_t b = 0; b < x.bands.size(); ++b) {
        if (x.bands[b].width <= 0)
            issues.push_back({Code::BadWidth,
                              "band " + std::to_string(b) + " has nonpositive width"});
        if (x.bands[b].orientation_preserving != x.bands[b].sides_opposite())
            issues.push_back(
                {Code::OrientationInconsistent,
                 "band " + std::to_string(b) +
                     " orientation flag does not match its side tags"});
    }
    for (Side side : {Side::Upper, Side::Lower}) {
        auto entries = side_entries(x, side);
        Rational total(0);
        for (const auto& e : entries) total += e.width;
        if (total != x.base_length) {
            issues.push_back({Code::WidthMismatch,
                              std::string("side I") + side_str(side) + " widths sum to " +
                                  format_rational(total) + ", base length is " +
                                  format_rational(x.base_length)});
            continue;  // gap/overlap reports would just repeat the mismatch
        }
        Rational cursor(0);
        for (const auto& e : entries) {
            if (e.offset < cursor) {
                issues.push_back({Code::OverlappingAttachments,
                                  std::string("side I") + side_str(side) +
                                      ": attachment of band " + std::to_string(e.band) +
                                      " overlaps its neighbour"});
                break;
            }
            if (e.offset > cursor) {
                issues.push_back({Code::CoverageGap,
                                  std::string("side I") + side_str(side) + ": gap at " +
                                      format_rational(cursor)});
                break;
            }
            cursor = e.offset + e.width;
        }
        if (issues.empty() && cursor != x.base_length)
            issues.push_back({Code::CoverageGap,
                              std::string("side I") + side_str(side) +
                                  ": last attachment ends at " +
                                  format_rational(cursor)});
    }
    return issues;
}

CollapsedTrack to_train_track(const Ncie& x) {
    auto issues = validate(x);
    if (!issues.empty()) throw Error("invalid exchange: " + issues.front().detail);

    auto lower = side_entries(x, Side::Lower);
    auto upper = side_entries(x, Side::Upper);

    traintrack::TrainTrack t;
    traintrack::Switch sw;
    // Slot ids: lower attachments first (side A), then upper (side B); the
    // counterclockwise boundary of the collapsed rectangle reads the lower
    // side left to right and the upper side right to left.
    std::vector<std::pair<traintrack::SlotId, traintrack::SlotId>> branch_slots(
        x.bands.size(), {traintrack::SlotId(-1), traintrack::SlotId(-1)});
    traintrack::SlotId next = 0;
    auto assign = [&](const SideEntry& e) {
        auto& pair = branch_slots[e.band];
        if (pair.first == traintrack::SlotId(-1)) pair.first = next;
        else pair.second = next;
        return next++;
    };
    for (const auto& e : lower) sw.side_a.push_back(assign(e));
    for (const auto& e : upper) sw.side_b.push_back(assign(e));
    t.switches.push_back(std::move(sw));
    for (auto& [a, b] : branch_slots) t.branches.emplace_back(a, b);

    // Declared surface: genus from the walk census; every region with fewer
    // than three cusps receives a puncture (the flat picture puts the
    // singular data there).
    auto faces = traintrack::regions(t);
    unsigned n = 0;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].cusps < 3) {
            t.region_punctures[i] = 1;
            ++n;
        }
    std::int64_t chi = 1 - static_cast<std::int64_t>(x.bands.size()) +
                       static_cast<std::int64_t>(faces.size());
    if (chi % 2 != 0 || chi > 2)
        throw Error("collapsed track census is not a closed surface");
    t.surface.genus = static_cast<unsigned>((2 - chi) / 2);
    t.surface.punctures = n;

    traintrack::WeightVector w;
    for (const Band& b : x.bands) w.push_back(b.width);
    return {std::move(t), std::move(w)};
}

PassageMatrix PassageMatrix::identity(std::size_t n) {
    PassageMatrix m;
    m.rows_.assign(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
    return m;
}

void PassageMatrix::apply_update(std::size_t loser, std::size_t winner) {
    for (std::size_t j = 0; j < rows_.size(); ++j)
        rows_[loser][j] += rows_[winner][j];
}

bool PassageMatrix::all_entries_at_least(const BigInt& k) const {
    for (const auto& row : rows_)
        for (const auto& e : row)
            if (e < k) return false;
    return true;
}

std::string PassageMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            if (j) s += " ";
            s += rows_[i][j].str();
        }
    }
    return s + "]";
}

namespace {

// Attachment holding the terminal point of the given side, i.e. the one whose
// interval ends at the base length.
std::pair<std::size_t, int> terminal_attachment(const Ncie& x, Side side) {
    for (std::size_t b = 0; b < x.bands.size(); ++b)
        for (int e = 0; e < 2; ++e) {
            const Attachment& a = x.bands[b].ends[e];
            if (a.side == side && a.offset + x.bands[b].width == x.base_length)
                return {b, e};
        }
    throw Error("no terminal attachment; exchange is invalid");
}

}  // namespace

StepOutcome rauzy_step(const Ncie& x) {
    auto [top_band, top_end] = terminal_attachment(x, Side::Upper);
    auto [bot_band, bot_end] = terminal_attachment(x, Side::Lower);

    StepOutcome out;
    if (top_band == bot_band) {
        out.status = StepStatus::IllFormedInduction;
        return out;
    }
    const Rational u = x.bands[top_band].width;
    const Rational v = x.bands[bot_band].width;
    if (u == v) {
        out.status = StepStatus::SaddleConnection;
        return out;
    }

    const bool top_loses = u < v;
    const std::size_t loser = top_loses ? top_band : bot_band;
    const std::size_t winner = top_loses ? bot_band : top_band;
    const int loser_term_end = top_loses ? top_end : bot_end;
    const int winner_term_end = top_loses ? bot_end : top_end;
    const Rational w_loser = top_loses ? u : v;
    const Rational w_winner = top_loses ? v : u;

    Ncie next = x;
    next.base_length = x.base_length - w_loser;
    next.bands[winner].width = w_winner - w_loser;

    // The winner's far attachment keeps its left part under translation
    // gluing and its right part under flip gluing; the vacated interval is
    // exactly the loser's width, and the loser is re-routed into it.
    const int winner_far_end = 1 - winner_term_end;
    Attachment& far = next.bands[winner].ends[winner_far_end];
    Attachment& rerouted = next.bands[loser].ends[loser_term_end];
    rerouted.side = far.side;
    if (x.bands[winner].orientation_preserving) {
        rerouted.offset = far.offset + next.bands[winner].width;
    } else {
        rerouted.offset = far.offset;
        far.offset += w_loser;
    }
    for (Band& b : next.bands) b.orientation_preserving = b.sides_opposite();

    StepRecord rec;
    rec.loser = loser;
    rec.winner = winner;
    rec.width_subtracted = w_loser;
    rec.base_length_after = next.base_length;
    out.next = std::move(next);
    out.record = rec;
    return out;
}

InductionResult rauzy_until(const Ncie& start, const StopRule& stop,
                            std::uint64_t hard_cap) {
    auto issues = validate(start);
    if (!issues.empty()) throw Error("invalid exchange: " + issues.front().detail);

    InductionResult result;
    result.final_exchange = start;
    PassageMatrix passages = PassageMatrix::identity(start.bands.size());

    auto fired = [&]() {
        switch (stop.kind) {
            case StopRule::Kind::LengthBelow:
                return result.final_exchange.base_length < stop.length_threshold;
            case StopRule::Kind::AllPassagesAtLeast:
                return passages.all_entries_at_least(stop.passage_threshold);
            case StopRule::Kind::MaxSteps:
                return result.trace.steps.size() >= stop.step_limit;
        }
        return false;
    };

    while (!fired()) {
        if (result.trace.steps.size() >= hard_cap)
            throw CapExceededError("induction exceeded " + std::to_string(hard_cap) +
                                   " steps");
        StepOutcome out = rauzy_step(result.final_exchange);
        if (out.status == StepStatus::SaddleConnection) {
            result.saddle_connection = true;
            return result;
        }
        if (out.status == StepStatus::IllFormedInduction)
            throw Error("ill-formed induction: one band holds both terminal points");

        // Carrying identity: pushing the new widths through the elementary
        // update must reproduce the old widths, exactly.
        const Ncie& before = result.final_exchange;
        const Ncie& after = *out.next;
        for (std::size_t b = 0; b < after.bands.size(); ++b) {
            Rational expect = after.bands[b].width;
            if (b == out.record->winner) expect += after.bands[out.record->loser].width;
            if (expect != before.bands[b].width)
                throw Error("carrying identity failed at step " +
                            std::to_string(result.trace.steps.size()));
        }

        passages.apply_update(out.record->loser, out.record->winner);
        result.trace.steps.push_back(*out.record);
        result.final_exchange = *out.next;
    }
    result.stop_rule_fired = true;
    return result;
}

PassageMatrix passage_product(std::size_t band_count, const InductionTrace& trace) {
    PassageMatrix m = PassageMatrix::identity(band_count);
    for (const StepRecord& s : trace.steps) m.apply_update(s.loser, s.winner);
    return m;
}

TwiceCoverResult twice_cover_index(const Ncie& x, std::uint64_t cap) {
    TwiceCoverResult result{TwiceCoverResult::Status::CapExceeded, 0,
                            PassageMatrix::identity(x.bands.size())};
    Ncie current = x;
    auto issues = validate(current);
    if (!issues.empty()) throw Error("invalid exchange: " + issues.front().detail);
    for (std::uint64_t k = 0; k <= cap; ++k) {
        if (result.passages.all_entries_at_least(2)) {
            result.status = TwiceCoverResult::Status::Found;
            result.steps = k;
            return result;
        }
        StepOutcome out = rauzy_step(current);
        if (out.status == StepStatus::SaddleConnection) {
            result.status = TwiceCoverResult::Status::SaddleConnection;
            result.steps = k;
            return result;
        }
        if (out.status == StepStatus::IllFormedInduction)
            throw Error("ill-formed induction");
        result.passages.apply_update(out.record->loser, out.record->winner);
        current = *out.next;
    }
    return result;
}

bool maximally_filling_certificate(const PassageMatrix& vertical,
                                   const PassageMatrix& horizontal) {
    return vertical.all_entries_at_least(2) && horizontal.all_entries_at_least(2);
}

Rational ratio_lower_bound(const Rational& stage_base_length, const Rational& eps) {
    if (stage_base_length <= 0 || eps <= 0)
        throw NonpositiveInputError("ratio bound needs positive length and epsilon");
    return Rational(2) * eps / stage_base_length;
}

Ncie ncie_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("exchange fixture: ") + e.what());
    }
    if (!j.contains("base_length") || !j.contains("bands"))
        throw SchemaError("exchange fixture: need 'base_length' and 'bands'");
    std::vector<Band> bands;
    for (const auto& jb : j["bands"]) {
        Band b;
        b.width = parse_rational(jb.at("width").get<std::string>());
        const auto& at = jb.at("attachments");
        if (!at.is_array() || at.size() != 2)
            throw SchemaError("exchange fixture: band needs exactly 2 attachments");
        for (int e = 0; e < 2; ++e) {
            std::string side = at[e].at("side").get<std::string>();
            if (side != "+" && side != "-")
                throw SchemaError("exchange fixture: side must be '+' or '-'");
            b.ends[e].side = side == "+" ? Side::Upper : Side::Lower;
            b.ends[e].offset = parse_rational(at[e].at("offset").get<std::string>());
        }
        bands.push_back(std::move(b));
    }
    return Ncie::make(parse_rational(j["base_length"].get<std::string>()),
                      std::move(bands));
}

Ncie load_ncie_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open exchange fixture: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return ncie_from_json_text(text);
}

std::string step_record_json(const StepRecord& r) {
    nlohmann::json j;
    j["loser"] = r.loser;
    j["winner"] = r.winner;
    j["width_subtracted"] = format_rational(r.width_subtracted);
    j["base_length_after"] = format_rational(r.base_length_after);
    return j.dump();
}

}  // namespace cgx::ncie
