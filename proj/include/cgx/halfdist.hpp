#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace cgx {

// Exact graph distance counted in half-units. Base edges contribute 2,
// cone edges 1, so every distance in this codebase is an integer.
// Unreachable and CapExceeded are distinct outcomes: the first certifies
// no path exists, the second only that none was found within the cap.
class HalfDistance {
public:
    enum class State : std::uint8_t { Finite, Unreachable, CapExceeded };

    constexpr HalfDistance() : state_(State::Unreachable), half_units_(0) {}

    static constexpr HalfDistance finite(std::int64_t half_units) {
        HalfDistance d;
        d.state_ = State::Finite;
        d.half_units_ = half_units;
        return d;
    }
    static constexpr HalfDistance unreachable() { return HalfDistance(); }
    static constexpr HalfDistance cap_exceeded() {
        HalfDistance d;
        d.state_ = State::CapExceeded;
        return d;
    }

    constexpr bool is_finite() const { return state_ == State::Finite; }
    constexpr bool is_unreachable() const { return state_ == State::Unreachable; }
    constexpr bool is_cap_exceeded() const { return state_ == State::CapExceeded; }
    constexpr State state() const { return state_; }

    // Half-unit count; only meaningful when finite.
    constexpr std::int64_t half_units() const { return half_units_; }

    friend constexpr bool operator==(const HalfDistance& a, const HalfDistance& b) {
        if (a.state_ != b.state_) return false;
        if (a.state_ != State::Finite) return true;
        return a.half_units_ == b.half_units_;
    }

    std::string str() const {
        switch (state_) {
            case State::Finite: {
                if (half_units_ % 2 == 0) return std::to_string(half_units_ / 2);
                return std::to_string(half_units_) + "/2";
            }
            case State::Unreachable: return "unreachable";
            default: return "cap-exceeded";
        }
    }

private:
    State state_;
    std::int64_t half_units_;
};

constexpr std::int64_t kInfiniteHalfUnits = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace cgx
