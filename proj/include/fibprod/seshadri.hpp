#pragma once

// Seshadri constants of ample classes L = a*tau1 + b*tau2 + c*F on X.
//
// For every point x, min{a,b,c} <= eps(X,L,x) <= min{a,b}: the lower bound
// comes from splitting curves through x into horizontal curves (F.B >= mult)
// and curves in a fibre P^(r1-1) x P^(r2-1); the upper bounds from the lines
// delta1 and delta2 through x. Sharper statements need extra hypotheses on
// the bundles and on the position of x, which the caller declares.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibprod/bundles.hpp"
#include "fibprod/cones.hpp"
#include "fibprod/error.hpp"
#include "fibprod/numring.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

enum class PointTag {
    generic,
    in_bminus_tau1,     // x in B_-(h1)
    in_bminus_tau2,     // x in B_-(h2)
    on_delta3bar_curve, // x on a curve with class proportional to delta3bar
};

inline constexpr PointTag kAllPointTags[] = {PointTag::generic, PointTag::in_bminus_tau1,
                                             PointTag::in_bminus_tau2,
                                             PointTag::on_delta3bar_curve};

constexpr std::string_view to_string(PointTag tag) noexcept {
    switch (tag) {
    case PointTag::generic: return "generic";
    case PointTag::in_bminus_tau1: return "in_Bminus_tau1";
    case PointTag::in_bminus_tau2: return "in_Bminus_tau2";
    case PointTag::on_delta3bar_curve: return "on_delta3bar_curve";
    }
    return "generic";
}

inline std::optional<PointTag> point_tag_from_string(std::string_view s) {
    for (auto tag : kAllPointTags)
        if (to_string(tag) == s) return tag;
    return std::nullopt;
}

// Which argument pins the value down. The wire names are fixed by the
// result format.
enum class CaseTag {
    fibre_line_first,              // a minimal
    fibre_line_second,             // b minimal
    product_of_projective_spaces,  // P^n x P^m, type (a, b)
    first_normalized,              // c <= a <= b, E1 normalized rank 2, x outside B_-
    first_normalized_bound,        // same, x in B_-(h1)
    second_normalized,             // c <= b <= a, E2 normalized rank 2, x outside B_-
    second_normalized_bound,       // same, x in B_-(h2)
    horizontal_curve,              // c minimal, x on a delta3bar curve
    semistable_first,              // E1 semistable, E2 normalized rank 2, x outside B_-
    semistable_first_bound,        // same, x in B_-(h2)
    generic_bounds,
};

constexpr std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
    case CaseTag::fibre_line_first: return "Thm4.1.1";
    case CaseTag::fibre_line_second: return "Thm4.1.2";
    case CaseTag::product_of_projective_spaces: return "Lem4.2";
    case CaseTag::first_normalized: return "Thm4.3.i";
    case CaseTag::first_normalized_bound: return "Thm4.3.i-bound";
    case CaseTag::second_normalized: return "Thm4.3.ii";
    case CaseTag::second_normalized_bound: return "Thm4.3.ii-bound";
    case CaseTag::horizontal_curve: return "Thm4.3.iii";
    case CaseTag::semistable_first: return "Thm4.5.i";
    case CaseTag::semistable_first_bound: return "Thm4.5.ii";
    case CaseTag::generic_bounds: return "generic-bounds";
    }
    return "generic-bounds";
}

inline constexpr CaseTag kAllCaseTags[] = {
    CaseTag::fibre_line_first,       CaseTag::fibre_line_second,
    CaseTag::product_of_projective_spaces, CaseTag::first_normalized,
    CaseTag::first_normalized_bound, CaseTag::second_normalized,
    CaseTag::second_normalized_bound, CaseTag::horizontal_curve,
    CaseTag::semistable_first,       CaseTag::semistable_first_bound,
    CaseTag::generic_bounds};

inline std::optional<CaseTag> case_tag_from_string(std::string_view s) {
    for (auto tag : kAllCaseTags)
        if (to_string(tag) == s) return tag;
    return std::nullopt;
}

struct SeshadriResult {
    enum class Kind { exact, interval };

    Kind kind = Kind::interval;
    Rational lower;
    Rational upper;
    CaseTag justification = CaseTag::generic_bounds;
    std::vector<std::string> hypotheses_used;

    static SeshadriResult exact(Rational v, CaseTag why, std::vector<std::string> hyps) {
        SeshadriResult r;
        r.kind = Kind::exact;
        r.lower = v;
        r.upper = std::move(v);
        r.justification = why;
        r.hypotheses_used = std::move(hyps);
        return r;
    }

    static SeshadriResult interval(Rational lo, Rational hi, CaseTag why,
                                   std::vector<std::string> hyps) {
        if (lo > hi) throw Error(ErrorKind::inconsistency, "interval with lower > upper");
        SeshadriResult r;
        r.kind = Kind::interval;
        r.lower = std::move(lo);
        r.upper = std::move(hi);
        r.justification = why;
        r.hypotheses_used = std::move(hyps);
        return r;
    }

    bool is_exact() const noexcept { return kind == Kind::exact; }
    const Rational& value() const {
        if (!is_exact()) throw Error(ErrorKind::inconsistency, "interval result has no value");
        return lower;
    }

    friend bool operator==(const SeshadriResult&, const SeshadriResult&) = default;
};

// ----- elementary formulas ---------------------------------------------------

// eps(P^n x P^m, O(a, b), p) for every point p.
inline Rational seshadri_product_proj(int n, int m, const Rational& a, const Rational& b) {
    if (n < 1 || m < 1)
        throw Error(ErrorKind::invalid_value, "projective space dimensions must be positive");
    if (a <= 0 || b <= 0)
        throw Error(ErrorKind::not_ample, "type (a, b) must have a, b > 0");
    return min_of(a, b);
}

inline Rational seshadri_lower(const Rational& a, const Rational& b, const Rational& c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw Error(ErrorKind::not_ample, "class is not ample (a, b, c must be positive)");
    return min_of(a, b, c);
}

inline Triple ample_tau_coords(const DivisorClass& L, const SpaceSpec& space) {
    auto tau = to_tau_coords(L, space);
    if (!is_ample(tau, space))
        throw Error(ErrorKind::not_ample, "class is not ample: tau coordinates (" +
                                              format_rational(tau.coords[0]) + ", " +
                                              format_rational(tau.coords[1]) + ", " +
                                              format_rational(tau.coords[2]) + ")");
    return tau.coords;
}

// (L^n)^(1/n), n = dim X. L^n is exact; the root has a relative error far
// below 1e-12.
inline double root_volume_upper(const SpaceSpec& space, const DivisorClass& L) {
    ample_tau_coords(L, space);
    const Rational volume = top_self_intersection(to_ring(L, space), space);
    if (volume <= 0)
        throw Error(ErrorKind::inconsistency,
                    "ample class with nonpositive top self-intersection " +
                        format_rational(volume));
    return static_cast<double>(std::exp(log_positive(volume) / space.dim()));
}

// ----- case analysis ---------------------------------------------------------

namespace detail {

inline bool normalized_rank2(const HNData& e) {
    return e.normalized && total_rank(e) == 2 && !is_semistable(e);
}

// A B_- tag only makes sense when the corresponding pullback class is not
// nef, i.e. the bundle is unstable with negative minimal quotient slope.
inline void check_point_tag(PointTag point, const HNData& e1, const HNData& e2) {
    auto check = [](const HNData& e, std::string_view which) {
        if (is_semistable(e) || min_quotient_slope(e) >= 0)
            throw Error(ErrorKind::hypothesis,
                        std::string("point declared in B_- of the pullback of ") +
                            std::string(which) +
                            ", but that class is nef (bundle semistable or minimal quotient "
                            "slope >= 0), so its restricted base locus is empty");
    };
    if (point == PointTag::in_bminus_tau1) check(e1, "eta1");
    if (point == PointTag::in_bminus_tau2) check(e2, "eta2");
}

} // namespace detail

inline SeshadriResult seshadri_at_point(const SpaceSpec& space, const HNData& e1,
                                        const HNData& e2, const DivisorClass& L,
                                        PointTag point) {
    check_consistent(space, e1, e2);
    const auto [a, b, c] = ample_tau_coords(L, space);
    detail::check_point_tag(point, e1, e2);

    const bool unstable1 = !is_semistable(e1);
    const bool unstable2 = !is_semistable(e2);
    const Rational lower = min_of(a, b, c);
    const Rational upper = min_of(a, b);

    if (a <= b && a <= c)
        return SeshadriResult::exact(a, CaseTag::fibre_line_first, {"ample", "a<=b", "a<=c"});
    if (b <= a && b <= c)
        return SeshadriResult::exact(b, CaseTag::fibre_line_second, {"ample", "b<=a", "b<=c"});

    // From here on c < a and c < b.
    if (point == PointTag::on_delta3bar_curve && unstable1 && unstable2)
        return SeshadriResult::exact(c, CaseTag::horizontal_curve,
                                     {"ample", "c<a", "c<b", "e1_unstable", "e2_unstable",
                                      "point_on_delta3bar_curve"});

    if (a <= b && unstable1 && unstable2 && detail::normalized_rank2(e1)) {
        std::vector<std::string> hyps{"ample",       "c<=a",        "a<=b",
                                      "e1_unstable", "e2_unstable", "e1_rank2_normalized"};
        if (point != PointTag::in_bminus_tau1) {
            hyps.emplace_back("point_outside_Bminus_tau1");
            return SeshadriResult::exact(a, CaseTag::first_normalized, std::move(hyps));
        }
        hyps.emplace_back("point_in_Bminus_tau1");
        return SeshadriResult::interval(c, a, CaseTag::first_normalized_bound, std::move(hyps));
    }

    if (b <= a && unstable1 && unstable2 && detail::normalized_rank2(e2)) {
        std::vector<std::string> hyps{"ample",       "c<=b",        "b<=a",
                                      "e1_unstable", "e2_unstable", "e2_rank2_normalized"};
        if (point != PointTag::in_bminus_tau2) {
            hyps.emplace_back("point_outside_Bminus_tau2");
            return SeshadriResult::exact(b, CaseTag::second_normalized, std::move(hyps));
        }
        hyps.emplace_back("point_in_Bminus_tau2");
        return SeshadriResult::interval(c, b, CaseTag::second_normalized_bound, std::move(hyps));
    }

    if (b <= a && !unstable1 && unstable2 && detail::normalized_rank2(e2)) {
        std::vector<std::string> hyps{"ample",         "c<=b",        "b<=a",
                                      "e1_semistable", "e2_unstable", "e2_rank2_normalized"};
        if (point != PointTag::in_bminus_tau2) {
            hyps.emplace_back("point_outside_Bminus_tau2");
            return SeshadriResult::exact(b, CaseTag::semistable_first, std::move(hyps));
        }
        hyps.emplace_back("point_in_Bminus_tau2");
        return SeshadriResult::interval(c, b, CaseTag::semistable_first_bound, std::move(hyps));
    }

    return SeshadriResult::interval(lower, upper, CaseTag::generic_bounds, {"ample"});
}

struct GlobalSeshadri {
    // eps(X, L) = inf over points.
    SeshadriResult global;
    // Bounds for eps(X, L, 1) = sup over points.
    SeshadriResult at_general_point;
    bool hypotheses_hold = false;
    std::vector<std::string> failed_hypotheses;
};

// eps(X, L) = min{a, b, c} when both bundles are unstable and, if c is the
// strict minimum, the rank-2 normalized bundle on the side of min{a, b} is
// present. Otherwise both quantities fall back to [min{a,b,c}, min{a,b}].
inline GlobalSeshadri seshadri_global(const SpaceSpec& space, const HNData& e1,
                                      const HNData& e2, const DivisorClass& L) {
    check_consistent(space, e1, e2);
    const auto [a, b, c] = ample_tau_coords(L, space);
    const Rational lower = min_of(a, b, c);
    const Rational upper = min_of(a, b);

    GlobalSeshadri out;
    if (is_semistable(e1)) out.failed_hypotheses.emplace_back("e1_unstable");
    if (is_semistable(e2)) out.failed_hypotheses.emplace_back("e2_unstable");
    const bool c_strict_min = c < a && c < b;
    if (c_strict_min) {
        const bool first_side = a <= b && detail::normalized_rank2(e1);
        const bool second_side = b <= a && detail::normalized_rank2(e2);
        if (!first_side && !second_side)
            out.failed_hypotheses.emplace_back(a <= b ? "e1_rank2_normalized"
                                                      : "e2_rank2_normalized");
    }
    out.hypotheses_hold = out.failed_hypotheses.empty();
    out.at_general_point =
        SeshadriResult::interval(lower, upper, CaseTag::generic_bounds, {"ample"});

    if (!out.hypotheses_hold) {
        out.global = SeshadriResult::interval(lower, upper, CaseTag::generic_bounds, {"ample"});
        return out;
    }
    std::vector<std::string> hyps{"ample", "e1_unstable", "e2_unstable"};
    if (a <= b && a <= c)
        out.global = SeshadriResult::exact(a, CaseTag::fibre_line_first, std::move(hyps));
    else if (b <= a && b <= c)
        out.global = SeshadriResult::exact(b, CaseTag::fibre_line_second, std::move(hyps));
    else {
        hyps.emplace_back(a <= b ? "e1_rank2_normalized" : "e2_rank2_normalized");
        out.global = SeshadriResult::exact(c, CaseTag::horizontal_curve, std::move(hyps));
    }
    return out;
}

} // namespace fibprod
