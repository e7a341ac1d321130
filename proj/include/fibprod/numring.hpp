#pragma once

// Numerical ring of X = P(E1) x_C P(E2) over a smooth curve C.
//
// The ring is generated by h1 (pullback of the tautological class of
// P(E1)), h2 (same for P(E2)) and the fibre class F of X -> C, subject to
//
//   F^2 = 0,
//   h1^r1 = d1 * F * h1^(r1-1),   h2^r2 = d2 * F * h2^(r2-1),
//   F * h1^r1 = 0,                F * h2^r2 = 0,
//
// so every class has a unique normal form supported on monomials
// F^e h1^a h2^b with e <= 1, a < r1, b < r2. The point class is
// F * h1^(r1-1) * h2^(r2-1) and has degree 1.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fibprod/error.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

inline constexpr int kDefaultMaxRank = 64;

class SpaceSpec {
public:
    // Validates r_i >= 2, r_i <= max_rank and mu_i1 <= d_i / r_i.
    static SpaceSpec make(int r1, int r2, long d1, long d2, Rational mu11, Rational mu21,
                          int max_rank = kDefaultMaxRank) {
        if (max_rank < 2)
            throw Error(ErrorKind::rank_bound, "rank bound must be at least 2");
        if (r1 < 2 || r2 < 2)
            throw Error(ErrorKind::invalid_space, "both ranks must be at least 2");
        if (r1 > max_rank || r2 > max_rank)
            throw Error(ErrorKind::rank_bound, "rank exceeds the configured bound of " +
                                                   std::to_string(max_rank));
        mu11.canonicalize();
        mu21.canonicalize();
        if (mu11 > make_rational(d1, r1))
            throw Error(ErrorKind::invalid_space, "mu11 exceeds the slope of E1");
        if (mu21 > make_rational(d2, r2))
            throw Error(ErrorKind::invalid_space, "mu21 exceeds the slope of E2");
        SpaceSpec s;
        s.r1_ = r1;
        s.r2_ = r2;
        s.d1_ = d1;
        s.d2_ = d2;
        s.mu11_ = std::move(mu11);
        s.mu21_ = std::move(mu21);
        return s;
    }

    // Both bundles semistable: mu_i1 is the bundle slope.
    static SpaceSpec semistable(int r1, int r2, long d1, long d2,
                                int max_rank = kDefaultMaxRank) {
        return make(r1, r2, d1, d2, make_rational(d1, r1), make_rational(d2, r2), max_rank);
    }

    int r1() const noexcept { return r1_; }
    int r2() const noexcept { return r2_; }
    long d1() const noexcept { return d1_; }
    long d2() const noexcept { return d2_; }
    const Rational& mu11() const noexcept { return mu11_; }
    const Rational& mu21() const noexcept { return mu21_; }

    int dim() const noexcept { return r1_ + r2_ - 1; }
    bool first_semistable() const { return mu11_ == make_rational(d1_, r1_); }
    bool second_semistable() const { return mu21_ == make_rational(d2_, r2_); }

    friend bool operator==(const SpaceSpec& x, const SpaceSpec& y) {
        return x.r1_ == y.r1_ && x.r2_ == y.r2_ && x.d1_ == y.d1_ && x.d2_ == y.d2_ &&
               x.mu11_ == y.mu11_ && x.mu21_ == y.mu21_;
    }

private:
    SpaceSpec() = default;

    int r1_ = 2;
    int r2_ = 2;
    long d1_ = 0;
    long d2_ = 0;
    Rational mu11_;
    Rational mu21_;
};

// F^e * h1^a * h2^b. Ordered lexicographically on (e, a, b).
struct Monomial {
    int e = 0;
    int a = 0;
    int b = 0;

    int codim() const noexcept { return e + a + b; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Unreduced input term; exponents are arbitrary nonnegative integers.
struct RawTerm {
    long e = 0;
    long a = 0;
    long b = 0;
    Rational coeff;
};

class RingClass {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit RingClass(SpaceSpec space) : space_(std::move(space)) {}

    static RingClass zero(const SpaceSpec& space, std::optional<int> grade = std::nullopt) {
        RingClass x(space);
        x.zero_grade_ = grade;
        return x;
    }
    static RingClass one(const SpaceSpec& space) { return monomial(space, {0, 0, 0}); }
    static RingClass h1(const SpaceSpec& space) { return monomial(space, {0, 1, 0}); }
    static RingClass h2(const SpaceSpec& space) { return monomial(space, {0, 0, 1}); }
    static RingClass fiber(const SpaceSpec& space) { return monomial(space, {1, 0, 0}); }

    // Any exponents; the monomial is reduced to normal form.
    static RingClass monomial(const SpaceSpec& space, Monomial m, const Rational& coeff = 1);

    const SpaceSpec& space() const noexcept { return space_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Codimension if homogeneous. A zero class reports the grade it was
    // produced with, or nullopt when it carries none.
    std::optional<int> grade() const {
        if (terms_.empty()) return zero_grade_;
        int g = terms_.begin()->first.codim();
        for (const auto& [m, c] : terms_)
            if (m.codim() != g) return std::nullopt;
        return g;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    RingClass& operator+=(const RingClass& other) {
        check_same_space(other);
        auto g = grade();
        auto og = other.grade();
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        zero_grade_ = (g && og && *g == *og) ? g : std::nullopt;
        return *this;
    }
    RingClass& operator-=(const RingClass& other) { return *this += other * Rational(-1); }
    RingClass& operator*=(const Rational& s) {
        if (s == 0) {
            zero_grade_ = grade();
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend RingClass operator+(RingClass x, const RingClass& y) { return x += y; }
    friend RingClass operator-(RingClass x, const RingClass& y) { return x -= y; }
    friend RingClass operator*(RingClass x, const Rational& s) { return x *= s; }
    friend RingClass operator*(const Rational& s, RingClass x) { return x *= s; }

    friend bool operator==(const RingClass& x, const RingClass& y) {
        return x.space_ == y.space_ && x.terms_ == y.terms_;
    }

    void check_same_space(const RingClass& other) const {
        if (!(space_ == other.space_))
            throw Error(ErrorKind::space_mismatch, "ring classes belong to different spaces");
    }

    // Adds c * m for m already in normal form; drops zero coefficients.
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    SpaceSpec space_;
    Terms terms_;
    std::optional<int> zero_grade_;
};

namespace detail {

// Normal form of coeff * F^e h1^a h2^b: either a single monomial with a
// rescaled coefficient or nothing.
inline std::optional<std::pair<Monomial, Rational>>
normalize_term(long e, long a, long b, Rational coeff, const SpaceSpec& space) {
    const long r1 = space.r1();
    const long r2 = space.r2();
    if (coeff == 0 || e >= 2 || a > r1 || b > r2) return std::nullopt;
    if (a == r1) {
        if (e == 1) return std::nullopt;
        coeff *= space.d1();
        e = 1;
        a = r1 - 1;
    }
    if (b == r2) {
        if (e == 1) return std::nullopt;
        coeff *= space.d2();
        e = 1;
        b = r2 - 1;
    }
    if (coeff == 0) return std::nullopt;
    return std::pair{Monomial{static_cast<int>(e), static_cast<int>(a), static_cast<int>(b)},
                     std::move(coeff)};
}

} // namespace detail

inline RingClass RingClass::monomial(const SpaceSpec& space, Monomial m, const Rational& coeff) {
    RingClass x(space);
    x.zero_grade_ = m.codim();
    if (auto t = detail::normalize_term(m.e, m.a, m.b, coeff, space))
        x.add_term(t->first, t->second);
    return x;
}

inline RingClass reduce(std::span<const RawTerm> raw_terms, const SpaceSpec& space) {
    RingClass out(space);
    std::optional<long> common;
    bool homogeneous = true;
    for (const auto& t : raw_terms) {
        if (t.e < 0 || t.a < 0 || t.b < 0)
            throw Error(ErrorKind::parse, "negative exponent in raw term");
        long g = t.e + t.a + t.b;
        if (!common) common = g;
        else if (*common != g) homogeneous = false;
        if (auto n = detail::normalize_term(t.e, t.a, t.b, t.coeff, space))
            out.add_term(n->first, n->second);
    }
    if (out.is_zero() && homogeneous && common && *common <= space.dim())
        out = RingClass::zero(space, static_cast<int>(*common));
    return out;
}

inline RingClass multiply(const RingClass& x, const RingClass& y, const SpaceSpec& space) {
    if (!(x.space() == space) || !(y.space() == space))
        throw Error(ErrorKind::space_mismatch, "multiply: operand space differs from target space");
    RingClass out(space);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            if (auto t = detail::normalize_term(mx.e + my.e, mx.a + my.a, mx.b + my.b, cx * cy,
                                                space))
                out.add_term(t->first, t->second);
    if (out.is_zero()) {
        auto gx = x.grade();
        auto gy = y.grade();
        if (gx && gy) out = RingClass::zero(space, *gx + *gy);
    }
    return out;
}

inline RingClass power(const RingClass& x, int exponent, const SpaceSpec& space) {
    RingClass out = RingClass::one(space);
    for (int i = 0; i < exponent; ++i) out = multiply(out, x, space);
    return out;
}

inline Monomial point_monomial(const SpaceSpec& space) {
    return {1, space.r1() - 1, space.r2() - 1};
}

// Intersection number of a top-codimension class.
inline Rational degree(const RingClass& x, const SpaceSpec& space) {
    if (!(x.space() == space))
        throw Error(ErrorKind::space_mismatch, "degree: class belongs to a different space");
    auto g = x.grade();
    if (x.is_zero() && !g) return 0;
    if (!g) throw Error(ErrorKind::grade, "degree: class is not homogeneous");
    if (*g != space.dim())
        throw Error(ErrorKind::grade, "degree: class has codimension " + std::to_string(*g) +
                                          ", expected " + std::to_string(space.dim()));
    return x.coefficient(point_monomial(space));
}

inline Rational top_self_intersection(const RingClass& divisor, const SpaceSpec& space) {
    if (divisor.grade() != std::optional<int>(1))
        throw Error(ErrorKind::grade, "top_self_intersection: class is not a divisor class");
    return degree(power(divisor, space.dim(), space), space);
}

} // namespace fibprod
