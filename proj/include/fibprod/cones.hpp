#pragma once

// Nef cone and closed cone of curves of X.
//
// Nef(X) is spanned by tau1 = h1 - mu11*F, tau2 = h2 - mu21*F and F. The
// cone of curves is spanned by the dual classes
//   delta1    = F * h1^(r1-2) * h2^(r2-1),
//   delta2    = F * h1^(r1-1) * h2^(r2-2),
//   delta3bar = delta3 + mu11*delta1 + mu21*delta2,
// where delta3 = h1^(r1-1) h2^(r2-1) - d1*delta1 - d2*delta2.

#include <array>
#include <string_view>

#include "fibprod/error.hpp"
#include "fibprod/numring.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

using Triple = std::array<Rational, 3>;

enum class DivisorBasis { eta, tau };
enum class CurveBasis { delta, delta_bar };

constexpr std::string_view to_string(DivisorBasis b) noexcept {
    return b == DivisorBasis::eta ? "eta" : "tau";
}
constexpr std::string_view to_string(CurveBasis b) noexcept {
    return b == CurveBasis::delta ? "delta" : "delta-bar";
}

// eta: x*h1 + y*h2 + z*F.  tau: a*tau1 + b*tau2 + c*F.
struct DivisorClass {
    DivisorBasis basis = DivisorBasis::eta;
    Triple coords{0, 0, 0};

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// delta: p*delta1 + q*delta2 + r*delta3.  delta_bar: same with delta3bar.
struct CurveClass {
    CurveBasis basis = CurveBasis::delta_bar;
    Triple coords{0, 0, 0};

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

inline DivisorClass to_tau_coords(const DivisorClass& d, const SpaceSpec& space) {
    if (d.basis == DivisorBasis::tau) return d;
    const auto& [x, y, z] = d.coords;
    return {DivisorBasis::tau, {x, y, z + x * space.mu11() + y * space.mu21()}};
}

inline DivisorClass to_eta_coords(const DivisorClass& d, const SpaceSpec& space) {
    if (d.basis == DivisorBasis::eta) return d;
    const auto& [a, b, c] = d.coords;
    return {DivisorBasis::eta, {a, b, c - a * space.mu11() - b * space.mu21()}};
}

inline CurveClass to_delta_coords(const CurveClass& c, const SpaceSpec& space) {
    if (c.basis == CurveBasis::delta) return c;
    const auto& [p, q, r] = c.coords;
    return {CurveBasis::delta, {p + r * space.mu11(), q + r * space.mu21(), r}};
}

inline CurveClass to_delta_bar_coords(const CurveClass& c, const SpaceSpec& space) {
    if (c.basis == CurveBasis::delta_bar) return c;
    const auto& [p, q, r] = c.coords;
    return {CurveBasis::delta_bar, {p - r * space.mu11(), q - r * space.mu21(), r}};
}

inline DivisorClass scaled(DivisorClass d, const Rational& t) {
    for (auto& x : d.coords) x *= t;
    return d;
}

// ----- ring expansions -------------------------------------------------------

inline RingClass to_ring(const DivisorClass& d, const SpaceSpec& space) {
    const auto eta = to_eta_coords(d, space);
    RingClass out = RingClass::h1(space) * eta.coords[0] + RingClass::h2(space) * eta.coords[1] +
                    RingClass::fiber(space) * eta.coords[2];
    return out;
}

inline RingClass delta1_ring(const SpaceSpec& space) {
    return RingClass::monomial(space, {1, space.r1() - 2, space.r2() - 1});
}

inline RingClass delta2_ring(const SpaceSpec& space) {
    return RingClass::monomial(space, {1, space.r1() - 1, space.r2() - 2});
}

inline RingClass delta3_ring(const SpaceSpec& space) {
    return RingClass::monomial(space, {0, space.r1() - 1, space.r2() - 1}) -
           delta1_ring(space) * Rational(space.d1()) - delta2_ring(space) * Rational(space.d2());
}

inline RingClass to_ring(const CurveClass& c, const SpaceSpec& space) {
    const auto delta = to_delta_coords(c, space);
    return delta1_ring(space) * delta.coords[0] + delta2_ring(space) * delta.coords[1] +
           delta3_ring(space) * delta.coords[2];
}

// D . C computed in the numerical ring.
inline Rational intersect(const DivisorClass& d, const CurveClass& c, const SpaceSpec& space) {
    return degree(multiply(to_ring(d, space), to_ring(c, space), space), space);
}

// ----- generators ------------------------------------------------------------

// tau1, tau2, F in eta coordinates.
inline std::array<DivisorClass, 3> nef_generators(const SpaceSpec& space) {
    return {DivisorClass{DivisorBasis::eta, {1, 0, -space.mu11()}},
            DivisorClass{DivisorBasis::eta, {0, 1, -space.mu21()}},
            DivisorClass{DivisorBasis::eta, {0, 0, 1}}};
}

// delta1, delta2, delta3bar in delta-bar coordinates.
inline std::array<CurveClass, 3> curve_cone_generators(const SpaceSpec&) {
    return {CurveClass{CurveBasis::delta_bar, {1, 0, 0}},
            CurveClass{CurveBasis::delta_bar, {0, 1, 0}},
            CurveClass{CurveBasis::delta_bar, {0, 0, 1}}};
}

using Matrix3 = std::array<Triple, 3>;

// Entry (i, j) = deg(nef generator i . curve generator j).
inline Matrix3 pairing_matrix(const SpaceSpec& space) {
    const auto divisors = nef_generators(space);
    const auto curves = curve_cone_generators(space);
    Matrix3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = intersect(divisors[i], curves[j], space);
    return m;
}

inline bool is_nef(const DivisorClass& d, const SpaceSpec& space) {
    const auto tau = to_tau_coords(d, space);
    return tau.coords[0] >= 0 && tau.coords[1] >= 0 && tau.coords[2] >= 0;
}

// Interior of the nef cone.
inline bool is_ample(const DivisorClass& d, const SpaceSpec& space) {
    const auto tau = to_tau_coords(d, space);
    return tau.coords[0] > 0 && tau.coords[1] > 0 && tau.coords[2] > 0;
}

struct WitnessCycle {
    CurveClass curve;
    RingClass cycle;
};

// The effective 1-cycle h1^(r1-1) h2^(r2-1) + (mu11-d1) delta1 + (mu21-d2) delta2,
// orthogonal to tau1 and tau2. Numerically it is delta3bar.
inline WitnessCycle witness_cycle(const SpaceSpec& space) {
    RingClass cycle = RingClass::monomial(space, {0, space.r1() - 1, space.r2() - 1}) +
                      delta1_ring(space) * (space.mu11() - space.d1()) +
                      delta2_ring(space) * (space.mu21() - space.d2());
    return {CurveClass{CurveBasis::delta_bar, {0, 0, 1}}, std::move(cycle)};
}

// Cross-section of Nef(X) by a + b + c = 1, in eta coordinates.
inline std::array<Triple, 3> cone_slice(const SpaceSpec& space) {
    const auto gens = nef_generators(space);
    return {gens[0].coords, gens[1].coords, gens[2].coords};
}

} // namespace fibprod
