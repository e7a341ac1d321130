#pragma once

// Harder-Narasimhan data of a vector bundle on a curve, stored as the list
// of graded quotients ordered by strictly increasing slope (the first entry
// is the minimal destabilizing quotient).

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibprod/error.hpp"
#include "fibprod/numring.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

struct HNQuotient {
    long rank = 0;
    long degree = 0;

    Rational slope() const { return make_rational(degree, rank); }

    friend bool operator==(const HNQuotient&, const HNQuotient&) = default;
};

struct HNData {
    std::vector<HNQuotient> quotients;
    // Declared; only meaningful for rank-2 unstable bundles.
    bool normalized = false;
    // Inert metadata.
    std::optional<long> genus;

    friend bool operator==(const HNData&, const HNData&) = default;
};

inline long total_rank(const HNData& data) {
    long r = 0;
    for (const auto& q : data.quotients) r += q.rank;
    return r;
}

inline long total_degree(const HNData& data) {
    long d = 0;
    for (const auto& q : data.quotients) d += q.degree;
    return d;
}

inline bool is_semistable(const HNData& data) { return data.quotients.size() == 1; }

inline const HNData& validate_hn(const HNData& data) {
    if (data.quotients.empty())
        throw Error(ErrorKind::rank, "HN data has no quotients");
    for (const auto& q : data.quotients)
        if (q.rank <= 0)
            throw Error(ErrorKind::rank, "HN quotient rank must be positive, got " +
                                             std::to_string(q.rank));
    for (std::size_t i = 1; i < data.quotients.size(); ++i)
        if (!(data.quotients[i - 1].slope() < data.quotients[i].slope()))
            throw Error(ErrorKind::ordering,
                        "HN quotient slopes must be strictly increasing: " +
                            format_rational(data.quotients[i - 1].slope()) + " then " +
                            format_rational(data.quotients[i].slope()));
    if (data.genus && *data.genus < 0)
        throw Error(ErrorKind::invalid_value, "genus must be nonnegative");
    if (data.normalized) {
        const bool shape_ok = data.quotients.size() == 2 && total_rank(data) == 2 &&
                              data.quotients.front().rank == 1;
        if (!shape_ok)
            throw Error(ErrorKind::normalization,
                        "normalized flag requires an unstable rank-2 bundle");
        if (data.quotients.front().degree > -1)
            throw Error(ErrorKind::normalization,
                        "normalized flag requires minimal quotient degree <= -1");
    }
    return data;
}

inline HNData validated(HNData data) {
    validate_hn(data);
    return data;
}

// HN data of a direct sum of line bundles of the given degrees.
inline HNData hn_from_split(std::span<const long> line_degrees) {
    if (line_degrees.empty())
        throw Error(ErrorKind::empty_input, "split bundle needs at least one line bundle");
    std::map<long, long> multiplicity;
    for (long d : line_degrees) ++multiplicity[d];
    HNData out;
    for (const auto& [d, m] : multiplicity) out.quotients.push_back({m, m * d});
    return out;
}

inline Rational slope(const HNData& data) {
    return make_rational(total_degree(data), total_rank(data));
}

inline Rational min_quotient_slope(const HNData& data) {
    return data.quotients.front().slope();
}

inline SpaceSpec space_from_bundles(const HNData& e1, const HNData& e2,
                                    int max_rank = kDefaultMaxRank) {
    validate_hn(e1);
    validate_hn(e2);
    // Ranks are checked against the bound before narrowing.
    auto rank_of = [max_rank](const HNData& e) {
        long r = total_rank(e);
        if (r > max_rank)
            throw Error(ErrorKind::rank_bound, "rank exceeds the configured bound of " +
                                                   std::to_string(max_rank));
        return static_cast<int>(r);
    };
    return SpaceSpec::make(rank_of(e1), rank_of(e2), total_degree(e1), total_degree(e2),
                           min_quotient_slope(e1), min_quotient_slope(e2), max_rank);
}

// Throws unless the space is the one determined by (e1, e2).
inline void check_consistent(const SpaceSpec& space, const HNData& e1, const HNData& e2) {
    validate_hn(e1);
    validate_hn(e2);
    const bool ok = space.r1() == total_rank(e1) && space.r2() == total_rank(e2) &&
                    space.d1() == total_degree(e1) && space.d2() == total_degree(e2) &&
                    space.mu11() == min_quotient_slope(e1) &&
                    space.mu21() == min_quotient_slope(e2);
    if (!ok)
        throw Error(ErrorKind::invalid_space, "space does not match the given HN data");
}

} // namespace fibprod
