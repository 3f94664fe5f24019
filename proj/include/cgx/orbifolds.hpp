#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgx/errors.hpp"
#include "cgx/rational.hpp"

namespace cgx::orbifolds {

struct ExceptionalInputError : Error {
    using Error::Error;
};

// Order of an orbifold point: finite (>= 2) or a puncture.
class OrbOrder {
public:
    static OrbOrder finite(std::int64_t d) {
        if (d < 2) throw Error("orbifold point order must be >= 2");
        return OrbOrder(d);
    }
    static OrbOrder puncture() { return OrbOrder(0); }

    bool is_puncture() const { return d_ == 0; }
    std::int64_t value() const { return d_; }  // 0 encodes the puncture case

    // Contribution to the defect sum: 1 - 1/d for cone points, 1 for punctures.
    Rational defect() const {
        if (is_puncture()) return Rational(1);
        return Rational(d_ - 1, d_);
    }

    std::string str() const { return is_puncture() ? "inf" : std::to_string(d_); }

    // Punctures sort after all finite orders.
    auto operator<=>(const OrbOrder& o) const {
        std::int64_t a = is_puncture() ? INT64_MAX : d_;
        std::int64_t b = o.is_puncture() ? INT64_MAX : o.d_;
        return a <=> b;
    }
    bool operator==(const OrbOrder& o) const = default;

private:
    explicit OrbOrder(std::int64_t d) : d_(d) {}
    std::int64_t d_;
};

struct SurfaceSig {
    unsigned genus = 0;
    unsigned punctures = 0;

    bool operator==(const SurfaceSig&) const = default;

    // 3g - 3 + n > 0: the surface supports pseudo-Anosov maps.
    bool supports_pseudo_anosov() const {
        return 3 * static_cast<int>(genus) - 3 + static_cast<int>(punctures) > 0;
    }
    // 2g + n > 4: pseudo-Anosov support minus the four exceptional cases.
    bool beyond_exceptional() const { return 2 * genus + punctures > 4; }

    std::string str() const {
        return "S_{" + std::to_string(genus) + "," + std::to_string(punctures) + "}";
    }
};

class OrbifoldSig {
public:
    OrbifoldSig() = default;
    OrbifoldSig(unsigned genus, std::vector<OrbOrder> orders);

    // The surface S_{g,n} viewed as an orbifold with n punctures.
    static OrbifoldSig from_surface(const SurfaceSig& s);

    unsigned genus() const { return genus_; }
    const std::vector<OrbOrder>& orders() const { return orders_; }  // sorted
    std::size_t point_count() const { return orders_.size(); }
    std::size_t puncture_count() const;

    bool operator==(const OrbifoldSig& o) const = default;
    auto operator<=>(const OrbifoldSig& o) const = default;

    std::string str() const;

private:
    unsigned genus_ = 0;
    std::vector<OrbOrder> orders_;
};

struct CoverCandidate {
    SurfaceSig total;
    OrbifoldSig base;
    unsigned degree = 2;

    // chi(total) == degree * chi_orb(base), exactly.
    bool multiplicative() const;
};

Rational euler_char(const SurfaceSig& s);
Rational orb_euler_char(const OrbifoldSig& o);

bool is_exceptional(const SurfaceSig& s);

// The hyperelliptic quotient listed for each exceptional surface, degree 2.
CoverCandidate exceptional_cover(const SurfaceSig& s);

// Real dimension of the Teichmueller space, 6g' - 6 + 2n'; depends only on
// the number of orbifold points, not their orders. NotHyperbolic unless the
// orbifold Euler characteristic is negative.
int teich_dim(const OrbifoldSig& o);

// All signatures over the order menu with chi(s) = d * chi_orb, exactly.
// When n_prime is given the signature must have exactly that many orbifold
// points (punctures included). Pure chi-feasibility; no realizability claim.
std::vector<OrbifoldSig> enumerate_signatures(const SurfaceSig& s, unsigned degree,
                                              const std::vector<OrbOrder>& order_menu,
                                              std::optional<unsigned> n_prime);

// One chi-solution of a same-signature case, with its rejection status.
struct CaseSolution {
    std::vector<std::pair<std::int64_t, unsigned>> finite_counts;  // (order, count)
    unsigned punctures = 0;   // points left for infinity orders
    bool rejected = false;
    std::string rejection;    // e.g. "no punctures"
};

// The integer equation sum(coeff_k * c_k) = rhs obtained from the chi
// condition by eliminating the puncture count; coeff_k = degree / k.
struct CaseEquation {
    std::vector<std::pair<std::int64_t, std::int64_t>> coeffs;  // (order, coeff)
    std::int64_t rhs = 0;

    std::string str() const;
};

struct CaseReport {
    unsigned degree = 0;
    bool bound_passed = false;        // n <= (4d-4)/(d-2) for genus 0
    CaseEquation equation;            // meaningful when bound_passed
    std::vector<CaseSolution> solutions;
    bool feasible = false;            // any non-rejected solution survived
    std::string note;
};

struct SameSignatureReport {
    SurfaceSig surface;
    std::vector<CaseReport> cases;
    bool any_feasible = false;
};

// Reproduces the finite irregular-cover case analysis: degrees 3..12, order
// menus = divisors of d (plus punctures), g' = g, n' = n, and at least one
// puncture demanded downstairs. Requires 2g + n > 4.
SameSignatureReport irregular_same_signature_search(const SurfaceSig& s);

}  // namespace cgx::orbifolds
