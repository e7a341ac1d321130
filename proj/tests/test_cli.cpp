#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "fibprod/cli.hpp"

using namespace fibprod;
using fibprod::cli::Json;

namespace {

cli::RunResult run(const std::string& text) { return cli::run_document(text, cli::RunOptions{}); }

Json run_json(const std::string& text, int expected_status = 0) {
    auto r = run(text);
    EXPECT_EQ(r.status, expected_status) << r.output;
    return Json::parse(r.output);
}

const char* kNormalized = R"({"hn":[{"rank":1,"degree":-1},{"rank":1,"degree":1}],"normalized":true})";

std::string seshadri_job(const std::string& point, const std::string& coords) {
    return std::string(R"({"command":"seshadri-point","e1":)") + kNormalized + R"(,"e2":)" +
           kNormalized + R"(,"divisor":{"basis":"tau","coords":)" + coords + R"(},"point":")" +
           point + R"("})";
}

} // namespace

TEST(Cli, SeshadriPointHorizontalCurve) {
    auto doc = run_json(seshadri_job("on_delta3bar_curve", R"(["2","3","1"])"));
    EXPECT_EQ(doc["kind"], "exact");
    EXPECT_EQ(doc["value"], "1");
    EXPECT_EQ(doc["justification"], "Thm4.3.iii");
}

TEST(Cli, RingEvalDegree) {
    auto doc = run_json(
        R"({"command":"ring-eval","space":{"r1":2,"r2":2,"d1":-1,"d2":0,"mu11":"-1/2","mu21":"0"},"class":[{"e":0,"a":2,"b":1,"c":"1"}]})");
    EXPECT_EQ(doc["degree"], "-1");
    EXPECT_EQ(doc["grade"], 3);
}

TEST(Cli, RingEvalSelfTest) {
    auto doc = run_json(
        R"({"command":"ring-eval","space":{"r1":3,"r2":2,"d1":4,"d2":-1},"class":[{"a":1,"b":1},{"a":5,"b":1,"c":"2"},{"e":1,"a":3},{"a":3,"b":2,"c":"-7/3"}],"self_test":20})");
    EXPECT_EQ(doc["self_test"]["agree"], true);
    EXPECT_FALSE(doc.contains("degree"));
}

TEST(Cli, HnFromSplit) {
    auto doc = run_json(R"({"command":"hn-from-split","split_degrees":[2,2,-1]})");
    EXPECT_EQ(doc.dump(), R"({"hn":[{"rank":1,"degree":-1},{"rank":2,"degree":4}]})");
}

TEST(Cli, HnValidate) {
    auto doc = run_json(std::string(R"({"command":"hn-validate","bundle":)") + kNormalized + "}");
    EXPECT_EQ(doc["valid"], true);
    EXPECT_EQ(doc["min_quotient_slope"], "-1");
    EXPECT_EQ(doc["semistable"], false);
    auto bad = run_json(R"({"command":"hn-validate","bundle":{"hn":[{"rank":1,"degree":1},{"rank":1,"degree":-1}]}})", 3);
    EXPECT_EQ(bad["error_kind"], "validation");
    EXPECT_EQ(bad["error"], "ordering");
}

TEST(Cli, ConeCommands) {
    const std::string space = R"("space":{"r1":2,"r2":3,"d1":3,"d2":0,"mu11":"-1","mu21":"0"})";
    auto nef = run_json(R"({"command":"cone-nef",)" + space + "}");
    EXPECT_EQ(nef["generators"][0].dump(), R"({"basis":"eta","coords":["1","0","1"]})");
    auto slice = run_json(R"({"command":"cone-slice",)" + space + "}");
    EXPECT_EQ(slice["vertices"].dump(), R"([["1","0","1"],["0","1","0"],["0","0","1"]])");
    auto pairing = run_json(R"({"command":"pairing",)" + space + "}");
    EXPECT_EQ(pairing["identity"], true);
    auto curves = run_json(R"({"command":"cone-curves",)" + space + "}");
    EXPECT_EQ(curves["generators"][2].dump(), R"({"basis":"delta-bar","coords":["0","0","1"]})");
    EXPECT_EQ(curves["delta_basis"][2].dump(), R"({"basis":"delta","coords":["-1","0","1"]})");
    auto witness = run_json(R"({"command":"witness",)" + space + "}");
    EXPECT_EQ(witness["tau1_pairing"], "0");
    EXPECT_EQ(witness["tau2_pairing"], "0");
    auto check = run_json(R"({"command":"cone-check",)" + space +
                          R"(,"divisor":{"basis":"eta","coords":["1","1","1"]}})");
    EXPECT_EQ(check["tau"]["coords"].dump(), R"(["1","1","0"])");
    EXPECT_EQ(check["nef"], true);
    EXPECT_EQ(check["ample"], false);
}

TEST(Cli, Volume) {
    auto doc = run_json(
        R"({"command":"volume","space":{"r1":2,"r2":2,"d1":0,"d2":0},"divisor":{"basis":"tau","coords":["2","3","4"]}})");
    EXPECT_EQ(doc["top_self_intersection"], "144");
    EXPECT_NEAR(doc["root_volume_upper"].get<double>(), 5.241482788, 1e-9);
    auto flat = run_json(
        R"({"command":"volume","space":{"r1":2,"r2":2,"d1":0,"d2":0},"divisor":{"basis":"tau","coords":["0","0","1"]}})");
    EXPECT_EQ(flat["top_self_intersection"], "0");
    EXPECT_EQ(flat["ample"], false);
    EXPECT_FALSE(flat.contains("root_volume_upper"));
}

TEST(Cli, SeshadriGlobal) {
    std::string job = std::string(R"({"command":"seshadri-global","e1":)") + kNormalized +
                      R"(,"e2":)" + kNormalized +
                      R"(,"divisor":{"basis":"tau","coords":["2","3","1"]}})";
    auto doc = run_json(job);
    EXPECT_EQ(doc["global"]["value"], "1");
    EXPECT_EQ(doc["at_general_point"]["upper"], "2");
    std::string failing = std::string(R"({"command":"seshadri-global","e1":{"hn":[{"rank":2,"degree":0}]},"e2":)") +
                          kNormalized + R"(,"divisor":{"basis":"tau","coords":["2","3","1"]}})";
    auto bad = run_json(failing, 4);
    EXPECT_EQ(bad["error_kind"], "hypothesis");
    EXPECT_EQ(bad["global"]["justification"], "generic-bounds");
}

TEST(Cli, ErrorStatuses) {
    EXPECT_EQ(run("{not json").status, 2);
    EXPECT_EQ(run(R"({"command":"no-such-command"})").status, 2);
    EXPECT_EQ(run(R"({"command":"cone-nef"})").status, 2);
    EXPECT_EQ(run(R"({"command":"cone-nef","space":{"r1":1,"r2":2,"d1":0,"d2":0}})").status, 3);
    EXPECT_EQ(run(seshadri_job("generic", R"(["0","1","1"])")).status, 3);
    std::string hyp = std::string(R"({"command":"seshadri-point","e1":{"hn":[{"rank":2,"degree":0}]},"e2":)") +
                      kNormalized + R"(,"divisor":{"basis":"tau","coords":["2","3","1"]},"point":"in_Bminus_tau1"})";
    EXPECT_EQ(run(hyp).status, 4);
    auto doc = Json::parse(run("{not json").output);
    EXPECT_EQ(doc["error_kind"], "parse");
    EXPECT_TRUE(doc["message"].is_string());
}

TEST(Cli, MaxRankOption) {
    cli::RunOptions opts;
    opts.max_rank = 3;
    auto r = cli::run_document(R"({"command":"pairing","space":{"r1":4,"r2":2,"d1":0,"d2":0}})", opts);
    EXPECT_EQ(r.status, 3);
    EXPECT_EQ(Json::parse(r.output)["error"], "rank-bound");
}

TEST(Cli, BatchPreservesOrderAndPermutes) {
    std::vector<std::string> jobs{
        R"({"command":"hn-from-split","split_degrees":[1,0]})",
        R"({"command":"cone-slice","space":{"r1":2,"r2":2,"d1":0,"d2":0}})",
        R"({"command":"bogus"})",
        seshadri_job("generic", R"(["2","3","1"])"),
    };
    auto join = [](const std::vector<std::string>& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
        return out + "]";
    };
    auto forward = run(join(jobs));
    EXPECT_EQ(forward.status, 2);
    auto docs = Json::parse(forward.output);
    ASSERT_EQ(docs.size(), jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i)
        EXPECT_EQ(docs[i], Json::parse(run(jobs[i]).output)) << i;

    std::vector<std::string> reversed(jobs.rbegin(), jobs.rend());
    auto back = Json::parse(run(join(reversed)).output);
    for (std::size_t i = 0; i < jobs.size(); ++i) EXPECT_EQ(back[i], docs[jobs.size() - 1 - i]);
}

TEST(Cli, OutputPathWritesFile) {
    auto path = std::filesystem::temp_directory_path() / "fibprod_cli_output_path.json";
    std::filesystem::remove(path);
    auto r = run(R"({"command":"hn-from-split","split_degrees":[3],"output_path":")" + path.string() + "\"}");
    EXPECT_EQ(r.status, 0);
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(content, R"({"hn":[{"rank":1,"degree":3}]})" "\n");
    std::filesystem::remove(path);
}

#ifdef FIBPROD_CLI_PATH
TEST(CliBinary, ExitStatusAndPretty) {
    auto dir = std::filesystem::temp_directory_path();
    auto in = dir / "fibprod_cli_binary_in.json";
    auto out = dir / "fibprod_cli_binary_out.json";
    {
        std::ofstream f(in);
        f << R"({"command":"hn-from-split","split_degrees":[]})";
    }
    std::string cmd = std::string(FIBPROD_CLI_PATH) + " --pretty --input " + in.string() +
                      " --output " + out.string();
    int raw = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(raw));
    EXPECT_EQ(WEXITSTATUS(raw), 3);
    std::ifstream f(out);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_NE(content.find("\n  \"error_kind\": \"validation\""), std::string::npos) << content;
    std::filesystem::remove(in);
    std::filesystem::remove(out);
}
#endif
