#include "cgx/orbifolds.hpp"

#include <algorithm>

namespace cgx::orbifolds {

OrbifoldSig::OrbifoldSig(unsigned genus, std::vector<OrbOrder> orders)
    : genus_(genus), orders_(std::move(orders)) {
    std::sort(orders_.begin(), orders_.end());
}

OrbifoldSig OrbifoldSig::from_surface(const SurfaceSig& s) {
    std::vector<OrbOrder> orders(s.punctures, OrbOrder::puncture());
    return OrbifoldSig(s.genus, std::move(orders));
}

std::size_t OrbifoldSig::puncture_count() const {
    return static_cast<std::size_t>(
        std::count_if(orders_.begin(), orders_.end(),
                      [](const OrbOrder& o) { return o.is_puncture(); }));
}

std::string OrbifoldSig::str() const {
    std::string s = "S'_" + std::to_string(genus_) + "(";
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += ",";
        s += orders_[i].str();
    }
    return s + ")";
}

Rational euler_char(const SurfaceSig& s) {
    return Rational(2 - 2 * static_cast<std::int64_t>(s.genus) -
                    static_cast<std::int64_t>(s.punctures));
}

Rational orb_euler_char(const OrbifoldSig& o) {
    Rational chi(2 - 2 * static_cast<std::int64_t>(o.genus()));
    for (const auto& ord : o.orders()) chi -= ord.defect();
    return chi;
}

bool CoverCandidate::multiplicative() const {
    return euler_char(total) == Rational(degree) * orb_euler_char(base);
}

bool is_exceptional(const SurfaceSig& s) {
    return s.supports_pseudo_anosov() && !s.beyond_exceptional();
}

CoverCandidate exceptional_cover(const SurfaceSig& s) {
    if (!is_exceptional(s))
        throw NotExceptionalError(s.str() + " is not an exceptional surface");
    auto fin = [](std::int64_t d) { return OrbOrder::finite(d); };
    auto inf = OrbOrder::puncture();
    CoverCandidate c;
    c.total = s;
    c.degree = 2;
    if (s == SurfaceSig{0, 4})
        c.base = OrbifoldSig(0, {fin(2), fin(2), inf, inf});
    else if (s == SurfaceSig{1, 1})
        c.base = OrbifoldSig(0, {fin(2), fin(2), fin(2), inf});
    else if (s == SurfaceSig{1, 2})
        c.base = OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), inf});
    else  // S_{2,0}
        c.base = OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), fin(2), fin(2)});
    if (!c.multiplicative())
        throw Error("exceptional cover failed the multiplicativity check");
    return c;
}

int teich_dim(const OrbifoldSig& o) {
    if (orb_euler_char(o) >= 0)
        throw NotHyperbolicError(o.str() + " is not hyperbolic");
    return 6 * static_cast<int>(o.genus()) - 6 +
           2 * static_cast<int>(o.point_count());
}

namespace {

void search_counts(const SurfaceSig& s, const std::vector<OrbOrder>& menu,
                   std::size_t at, const Rational& remaining,
                   std::optional<unsigned> remaining_points,
                   std::vector<OrbOrder>& chosen, unsigned genus_prime,
                   std::vector<OrbifoldSig>& out) {
    if (at == menu.size()) {
        if (remaining != 0) return;
        if (remaining_points && *remaining_points != 0) return;
        out.emplace_back(genus_prime, chosen);
        return;
    }
    const OrbOrder& ord = menu[at];
    Rational defect = ord.defect();
    // Every defect is at least 1/2, so the count at this order is bounded.
    Rational q = remaining / defect;
    BigInt floor_q = numerator(q) / denominator(q);
    if (floor_q < 0) floor_q = 0;
    if (floor_q > 4000) floor_q = 4000;
    unsigned max_count = floor_q.convert_to<unsigned>();
    if (remaining_points) max_count = std::min(max_count, *remaining_points);
    for (unsigned c = 0; c <= max_count; ++c) {
        Rational rest = remaining - Rational(c) * defect;
        if (rest < 0) break;
        for (unsigned i = 0; i < c; ++i) chosen.push_back(ord);
        std::optional<unsigned> pts =
            remaining_points ? std::optional<unsigned>(*remaining_points - c)
                             : std::nullopt;
        search_counts(s, menu, at + 1, rest, pts, chosen, genus_prime, out);
        for (unsigned i = 0; i < c; ++i) chosen.pop_back();
    }
}

}  // namespace

std::vector<OrbifoldSig> enumerate_signatures(const SurfaceSig& s, unsigned degree,
                                              const std::vector<OrbOrder>& order_menu,
                                              std::optional<unsigned> n_prime) {
    if (degree < 2) throw Error("cover degree must be >= 2");
    std::vector<OrbOrder> menu = order_menu;
    std::sort(menu.begin(), menu.end());
    menu.erase(std::unique(menu.begin(), menu.end()), menu.end());

    Rational chi_base = euler_char(s) / Rational(degree);
    std::vector<OrbifoldSig> out;
    // Defect target 2 - 2g' - chi_base must be nonnegative; that bounds g'.
    for (unsigned gp = 0;; ++gp) {
        Rational target = Rational(2 - 2 * static_cast<std::int64_t>(gp)) - chi_base;
        if (target < 0) break;
        std::vector<OrbOrder> chosen;
        search_counts(s, menu, 0, target, n_prime, chosen, gp, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string CaseEquation::str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += " + ";
        s += std::to_string(coeffs[i].second) + "*c" +
             std::to_string(coeffs[i].first);
    }
    s += " = " + std::to_string(rhs);
    return s;
}

SameSignatureReport irregular_same_signature_search(const SurfaceSig& s) {
    if (!s.beyond_exceptional())
        throw ExceptionalInputError(s.str() + " has 2g+n <= 4");

    SameSignatureReport report;
    report.surface = s;
    const std::int64_t g = s.genus;
    const std::int64_t n = s.punctures;

    for (unsigned d = 3; d <= 12; ++d) {
        CaseReport cr;
        cr.degree = d;
        // (1 - 1/d)(2 - 2g) >= (1/2 - 1/d) n, exactly in rationals.
        Rational lhs = Rational(d - 1, d) * Rational(2 - 2 * g);
        Rational rhs = (Rational(1, 2) - Rational(1, static_cast<std::int64_t>(d))) *
                       Rational(n);
        cr.bound_passed = lhs >= rhs;
        if (!cr.bound_passed) {
            cr.note = "excluded by n <= (4d-4)/(d-2)";
            report.cases.push_back(std::move(cr));
            continue;
        }

        // Cone point orders in a cover by a smooth surface divide the degree.
        std::vector<OrbOrder> menu;
        for (std::int64_t k = 2; k <= d; ++k)
            if (d % k == 0) menu.push_back(OrbOrder::finite(k));
        menu.push_back(OrbOrder::puncture());

        // sum over finite orders k of (d/k) c_k = chi(S) + d (n + 2g - 2).
        for (const auto& ord : menu)
            if (!ord.is_puncture())
                cr.equation.coeffs.emplace_back(ord.value(), d / ord.value());
        cr.equation.rhs = (2 - 2 * g - n) + static_cast<std::int64_t>(d) * (n + 2 * g - 2);

        auto sigs = enumerate_signatures(s, d, menu,
                                         static_cast<unsigned>(s.punctures));
        for (const auto& sig : sigs) {
            if (sig.genus() != s.genus) continue;  // same-signature constraint
            CaseSolution sol;
            for (const auto& ord : sig.orders()) {
                if (ord.is_puncture()) {
                    ++sol.punctures;
                    continue;
                }
                bool found = false;
                for (auto& [k, c] : sol.finite_counts)
                    if (k == ord.value()) {
                        ++c;
                        found = true;
                    }
                if (!found) sol.finite_counts.emplace_back(ord.value(), 1);
            }
            std::sort(sol.finite_counts.begin(), sol.finite_counts.end());
            if (s.punctures > 0 && sol.punctures == 0) {
                sol.rejected = true;
                sol.rejection = "no punctures";
            }
            if (!sol.rejected) cr.feasible = true;
            cr.solutions.push_back(std::move(sol));
        }
        if (cr.solutions.empty())
            cr.note = cr.equation.str() + " has no admissible solution";
        if (cr.feasible) report.any_feasible = true;
        report.cases.push_back(std::move(cr));
    }
    return report;
}

}  // namespace cgx::orbifolds
