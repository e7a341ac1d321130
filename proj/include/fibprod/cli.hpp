#pragma once

// Job runner behind the command-line tool. A document is either one job
// object or an array of jobs; each job is evaluated independently and
// produces one result document.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "fibprod/bundles.hpp"
#include "fibprod/cones.hpp"
#include "fibprod/error.hpp"
#include "fibprod/json_io.hpp"
#include "fibprod/numring.hpp"
#include "fibprod/rewrite.hpp"
#include "fibprod/seshadri.hpp"

namespace fibprod::cli {

using json_io::Json;

struct RunOptions {
    bool pretty = false;
    std::uint64_t seed = 0;
    int max_rank = kDefaultMaxRank;
    unsigned threads = 0; // 0: hardware concurrency
};

struct JobOutcome {
    Json document;
    int status = 0;
};

inline const char* const kCommands[] = {
    "ring-eval", "volume",  "cone-nef",       "cone-curves",     "cone-check",  "cone-slice",
    "pairing",   "witness", "seshadri-point", "seshadri-global", "hn-validate", "hn-from-split"};

inline Json error_document(const Error& e) {
    return Json{{"error_kind", std::string(to_string(e.error_class()))},
                {"error", std::string(to_string(e.kind()))},
                {"message", e.what()}};
}

namespace detail {

struct Context {
    const Json& job;
    const RunOptions& options;
    std::size_t index;

    SpaceSpec space() const {
        if (job.contains("space")) {
            auto s = json_io::space_from_json(job["space"], options.max_rank);
            if (job.contains("e1") && job.contains("e2")) check_consistent(s, e1(), e2());
            return s;
        }
        if (job.contains("e1") && job.contains("e2"))
            return space_from_bundles(e1(), e2(), options.max_rank);
        throw Error(ErrorKind::parse, "job needs a \"space\" or both \"e1\" and \"e2\"");
    }
    HNData e1() const { return validated(json_io::hn_from_json(json_io::require(job, "e1"))); }
    HNData e2() const { return validated(json_io::hn_from_json(json_io::require(job, "e2"))); }
    DivisorClass divisor() const {
        return json_io::divisor_from_json(json_io::require(job, "divisor"));
    }
    PointTag point() const {
        if (!job.contains("point")) return PointTag::generic;
        const auto& p = job["point"];
        if (!p.is_string()) throw Error(ErrorKind::parse, "point must be a string");
        auto tag = point_tag_from_string(p.get<std::string>());
        if (!tag) throw Error(ErrorKind::parse, "unknown point tag '" + p.get<std::string>() + "'");
        return *tag;
    }
};

inline Json ring_eval(const Context& ctx) {
    const auto space = ctx.space();
    const auto raw = json_io::raw_terms_from_json(json_io::require(ctx.job, "class"));
    const auto nf = reduce(raw, space);
    Json out = Json::object();
    const auto grade = nf.grade();
    if (grade == std::optional<int>(space.dim()) || (nf.is_zero() && !grade))
        out["degree"] = json_io::to_json(degree(nf, space));
    out["normal_form"] = json_io::to_json(nf);
    out["grade"] = grade ? Json(*grade) : Json(nullptr);
    if (ctx.job.contains("self_test")) {
        const long runs = json_io::to_long(ctx.job["self_test"], "self_test");
        if (runs < 0) throw Error(ErrorKind::invalid_value, "self_test must be nonnegative");
        std::mt19937_64 rng(ctx.options.seed + ctx.index);
        bool agree = true;
        for (long i = 0; i < runs; ++i) agree = agree && rewrite_to_fixpoint(raw, space, rng) == nf;
        if (!agree)
            throw Error(ErrorKind::inconsistency,
                        "randomized rewriting disagrees with the direct normal form");
        out["self_test"] = Json{{"runs", runs}, {"agree", agree}};
    }
    return out;
}

inline Json volume(const Context& ctx) {
    const auto space = ctx.space();
    const auto L = ctx.divisor();
    Json out{{"top_self_intersection",
              json_io::to_json(top_self_intersection(to_ring(L, space), space))}};
    const bool ample = is_ample(L, space);
    out["ample"] = ample;
    if (ample) out["root_volume_upper"] = root_volume_upper(space, L);
    return out;
}

inline Json cone_nef(const Context& ctx) {
    const auto space = ctx.space();
    Json gens = Json::array();
    for (const auto& g : nef_generators(space)) gens.push_back(json_io::to_json(g));
    return Json{{"generators", std::move(gens)}};
}

inline Json cone_curves(const Context& ctx) {
    const auto space = ctx.space();
    Json gens = Json::array();
    Json delta = Json::array();
    Json rings = Json::array();
    for (const auto& g : curve_cone_generators(space)) {
        gens.push_back(json_io::to_json(g));
        delta.push_back(json_io::to_json(to_delta_coords(g, space)));
        rings.push_back(json_io::to_json(to_ring(g, space)));
    }
    return Json{{"generators", std::move(gens)},
                {"delta_basis", std::move(delta)},
                {"ring", std::move(rings)}};
}

inline Json cone_check(const Context& ctx) {
    const auto space = ctx.space();
    const auto d = ctx.divisor();
    return Json{{"tau", json_io::to_json(to_tau_coords(d, space))},
                {"eta", json_io::to_json(to_eta_coords(d, space))},
                {"nef", is_nef(d, space)},
                {"ample", is_ample(d, space)}};
}

inline Json cone_slice_doc(const Context& ctx) {
    const auto space = ctx.space();
    Json vertices = Json::array();
    for (const auto& v : cone_slice(space)) vertices.push_back(json_io::to_json(v));
    return Json{{"vertices", std::move(vertices)}};
}

inline Json pairing(const Context& ctx) {
    const auto space = ctx.space();
    const auto m = pairing_matrix(space);
    Json rows = Json::array();
    bool identity = true;
    for (std::size_t i = 0; i < 3; ++i) {
        rows.push_back(json_io::to_json(m[i]));
        for (std::size_t j = 0; j < 3; ++j) identity = identity && m[i][j] == (i == j ? 1 : 0);
    }
    if (!identity)
        throw Error(ErrorKind::inconsistency, "pairing matrix is not the identity");
    return Json{{"matrix", std::move(rows)}, {"identity", identity}};
}

inline Json witness(const Context& ctx) {
    const auto space = ctx.space();
    const auto w = witness_cycle(space);
    const auto gens = nef_generators(space);
    auto pair_with = [&](const DivisorClass& d) {
        return degree(multiply(to_ring(d, space), w.cycle, space), space);
    };
    return Json{{"curve", json_io::to_json(w.curve)},
                {"cycle", json_io::to_json(w.cycle)},
                {"tau1_pairing", json_io::to_json(pair_with(gens[0]))},
                {"tau2_pairing", json_io::to_json(pair_with(gens[1]))},
                {"fiber_pairing", json_io::to_json(pair_with(gens[2]))}};
}

inline Json seshadri_point(const Context& ctx) {
    const auto space = ctx.space();
    return json_io::to_json(seshadri_at_point(space, ctx.e1(), ctx.e2(), ctx.divisor(), ctx.point()));
}

inline JobOutcome seshadri_global_doc(const Context& ctx) {
    const auto space = ctx.space();
    const auto g = seshadri_global(space, ctx.e1(), ctx.e2(), ctx.divisor());
    Json out = Json::object();
    if (!g.hypotheses_hold) {
        out["error_kind"] = std::string(to_string(ErrorClass::hypothesis));
        out["error"] = std::string(to_string(ErrorKind::hypothesis));
        out["message"] = "hypotheses for the exact global value fail; generic bounds only";
        out["failed_hypotheses"] = g.failed_hypotheses;
    }
    out["hypotheses_hold"] = g.hypotheses_hold;
    out["global"] = json_io::to_json(g.global);
    out["at_general_point"] = json_io::to_json(g.at_general_point);
    return {std::move(out), g.hypotheses_hold ? 0 : exit_status(ErrorClass::hypothesis)};
}

inline Json hn_validate(const Context& ctx) {
    const Json& payload = ctx.job.contains("bundle") ? ctx.job["bundle"] : ctx.job;
    const auto e = validated(json_io::hn_from_json(payload));
    Json out = json_io::to_json(e);
    out["valid"] = true;
    out["rank"] = total_rank(e);
    out["degree"] = total_degree(e);
    out["slope"] = json_io::to_json(slope(e));
    out["min_quotient_slope"] = json_io::to_json(min_quotient_slope(e));
    out["semistable"] = is_semistable(e);
    return out;
}

inline Json hn_from_split_doc(const Context& ctx) {
    const auto& list = json_io::require(ctx.job, "split_degrees");
    if (!list.is_array()) throw Error(ErrorKind::parse, "split_degrees must be an array");
    std::vector<long> degrees;
    for (const auto& d : list) degrees.push_back(json_io::to_long(d, "split degree"));
    return json_io::to_json(hn_from_split(degrees));
}

inline JobOutcome dispatch(const Context& ctx) {
    const auto& cmd_json = json_io::require(ctx.job, "command");
    if (!cmd_json.is_string()) throw Error(ErrorKind::parse, "command must be a string");
    const auto cmd = cmd_json.get<std::string>();
    if (cmd == "ring-eval") return {ring_eval(ctx), 0};
    if (cmd == "volume") return {volume(ctx), 0};
    if (cmd == "cone-nef") return {cone_nef(ctx), 0};
    if (cmd == "cone-curves") return {cone_curves(ctx), 0};
    if (cmd == "cone-check") return {cone_check(ctx), 0};
    if (cmd == "cone-slice") return {cone_slice_doc(ctx), 0};
    if (cmd == "pairing") return {pairing(ctx), 0};
    if (cmd == "witness") return {witness(ctx), 0};
    if (cmd == "seshadri-point") return {seshadri_point(ctx), 0};
    if (cmd == "seshadri-global") return seshadri_global_doc(ctx);
    if (cmd == "hn-validate") return {hn_validate(ctx), 0};
    if (cmd == "hn-from-split") return {hn_from_split_doc(ctx), 0};
    throw Error(ErrorKind::parse, "unknown command '" + cmd + "'");
}

} // namespace detail

inline JobOutcome run_job(const Json& job, const RunOptions& options, std::size_t index = 0) {
    try {
        if (!job.is_object()) throw Error(ErrorKind::parse, "job must be a JSON object");
        return detail::dispatch(detail::Context{job, options, index});
    } catch (const Error& e) {
        return {error_document(e), exit_status(e.error_class())};
    } catch (const nlohmann::json::exception& e) {
        Error err(ErrorKind::parse, e.what());
        return {error_document(err), exit_status(ErrorClass::parse)};
    } catch (const std::exception& e) {
        Error err(ErrorKind::inconsistency, e.what());
        return {error_document(err), exit_status(ErrorClass::internal)};
    }
}

// Writes a job's document to its "output_path", if it names one.
inline void write_job_output(const Json& job, const Json& document, const RunOptions& options) {
    if (!job.is_object() || !job.contains("output_path") || !job["output_path"].is_string()) return;
    std::ofstream out(job["output_path"].get<std::string>());
    if (!out) throw Error(ErrorKind::invalid_value, "cannot open output_path for writing");
    out << document.dump(options.pretty ? 2 : -1) << '\n';
}

struct RunResult {
    std::string output;
    int status = 0;
};

inline std::string render(const Json& doc, const RunOptions& options) {
    return doc.dump(options.pretty ? 2 : -1) + "\n";
}

// Batch status: the status of the first failing job, or 0.
inline RunResult run_document(const std::string& text, const RunOptions& options) {
    Json input;
    try {
        input = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        Error err(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
        return {render(error_document(err), options), exit_status(ErrorClass::parse)};
    }

    if (!input.is_array()) {
        auto outcome = run_job(input, options, 0);
        try {
            write_job_output(input, outcome.document, options);
        } catch (const Error& e) {
            return {render(error_document(e), options), exit_status(e.error_class())};
        }
        return {render(outcome.document, options), outcome.status};
    }

    std::vector<JobOutcome> outcomes(input.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < input.size(); i = next++)
            outcomes[i] = run_job(input[i], options, i);
    };
    unsigned n_threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    n_threads = std::clamp<unsigned>(n_threads, 1u,
                                     static_cast<unsigned>(std::max<std::size_t>(input.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Json docs = Json::array();
    int status = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        try {
            write_job_output(input[i], outcomes[i].document, options);
        } catch (const Error& e) {
            outcomes[i] = {error_document(e), exit_status(e.error_class())};
        }
        if (status == 0) status = outcomes[i].status;
        docs.push_back(std::move(outcomes[i].document));
    }
    return {render(docs, options), status};
}

} // namespace fibprod::cli
