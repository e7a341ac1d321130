#pragma once

// Term-by-term rewriting with the ring relations, applied one step at a
// time in an order chosen by a random generator. Used by the CLI self-test
// to cross-check the direct normal form.

#include <random>
#include <span>
#include <vector>

#include "fibprod/numring.hpp"

namespace fibprod {

template <class Urbg>
RingClass rewrite_to_fixpoint(std::span<const RawTerm> raw_terms, const SpaceSpec& space,
                              Urbg& rng) {
    const long r1 = space.r1();
    const long r2 = space.r2();
    std::vector<RawTerm> work(raw_terms.begin(), raw_terms.end());

    enum Rule { kill_f2, kill_fh1, kill_fh2, kill_h1, kill_h2, lower_h1, lower_h2 };
    auto applicable = [&](const RawTerm& t) {
        std::vector<Rule> rules;
        if (t.e >= 2) rules.push_back(kill_f2);
        if (t.e >= 1 && t.a >= r1) rules.push_back(kill_fh1);
        if (t.e >= 1 && t.b >= r2) rules.push_back(kill_fh2);
        if (t.a >= r1 + 1) rules.push_back(kill_h1);
        if (t.b >= r2 + 1) rules.push_back(kill_h2);
        if (t.e == 0 && t.a >= r1) rules.push_back(lower_h1);
        if (t.e == 0 && t.b >= r2) rules.push_back(lower_h2);
        return rules;
    };

    for (;;) {
        std::vector<std::size_t> reducible;
        for (std::size_t i = 0; i < work.size(); ++i)
            if (!applicable(work[i]).empty()) reducible.push_back(i);
        if (reducible.empty()) break;
        std::uniform_int_distribution<std::size_t> pick_term(0, reducible.size() - 1);
        const std::size_t idx = reducible[pick_term(rng)];
        auto rules = applicable(work[idx]);
        std::uniform_int_distribution<std::size_t> pick_rule(0, rules.size() - 1);
        RawTerm& t = work[idx];
        switch (rules[pick_rule(rng)]) {
        case lower_h1:
            t = {1, t.a - 1, t.b, t.coeff * space.d1()};
            break;
        case lower_h2:
            t = {1, t.a, t.b - 1, t.coeff * space.d2()};
            break;
        default:
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(idx));
            break;
        }
    }

    RingClass out(space);
    for (const auto& t : work)
        out.add_term(Monomial{static_cast<int>(t.e), static_cast<int>(t.a), static_cast<int>(t.b)},
                     t.coeff);
    return out;
}

} // namespace fibprod
