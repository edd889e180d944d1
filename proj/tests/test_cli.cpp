#include <gtest/gtest.h>

#include <sstream>

#include "../tools/cli.hpp"

#ifndef MODULISLOPE_DATA_DIR
#error "MODULISLOPE_DATA_DIR must be defined"
#endif

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "modulislope");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = modulislope::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MODULISLOPE_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, SlopeK3) {
    const CliRun r = cli({"slope", "catalog:k3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "7 (= 7.000000)\n");
    EXPECT_EQ(cli({"slope", data("k3.json")}).out, "7 (= 7.000000)\n");
    EXPECT_EQ(cli({"--precision", "2", "slope", "catalog:bn:10"}).out, "78/11 (= 7.09)\n");
}

TEST(Cli, SlopeJson) {
    const CliRun r = cli({"slope", "catalog:k3", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = modulislope::json::parse(r.out);
    EXPECT_EQ(j["slope"], "7");
    EXPECT_EQ(j["infinite"], false);
}

TEST(Cli, CurveDot) {
    EXPECT_EQ(cli({"curve", "dot", "lefschetz:10", "catalog:k3"}).out, "-1\n");
    EXPECT_EQ(cli({"curve", "dot", "lefschetz:11", data("bn11_half.json")}).out, "0\n");
    EXPECT_EQ(cli({"curve", "dot", "R", "catalog:canonical:10:9"}).out, "-4\n");
    const CliRun sym = cli({"curve", "dot", "attached:5:10", "catalog:k3"});
    EXPECT_NE(sym.out.find("B5"), std::string::npos);
    EXPECT_EQ(cli({"curve", "dot", "lefschetz:9", "catalog:k3"}).code, 65);
}

TEST(Cli, CurveShow) {
    const CliRun r = cli({"curve", "show", "T"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("delta_irr = -18"), std::string::npos);
}

TEST(Cli, CatalogRoundTrip) {
    const CliRun r = cli({"catalog", "show", "k3"});
    ASSERT_EQ(r.code, 0);
    const auto nc = modulislope::named_from_json(modulislope::json::parse(r.out));
    EXPECT_EQ(nc.cls, modulislope::k3_class().cls);
    EXPECT_EQ(nc.bounds, modulislope::k3_class().bounds);
    EXPECT_EQ(cli({"catalog", "list"}).code, 0);
    EXPECT_EQ(cli({"catalog", "show", "nope"}).code, 65);
}

TEST(Cli, MapVerbs) {
    const CliRun a = cli({"map", "attach", "--i", "4", "--g", "10", data("k3_b5_15.json")});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, "7*lambda + 14*psi_1 - delta_0 - 12*delta_1 - 9*delta_2 - 5*delta_3\n");
    const CliRun p = cli({"map", "pushforward", data("w3_squared.json")});
    EXPECT_EQ(p.out, "384*lambda - 36*delta_0 - 112*delta_1\n");
    EXPECT_EQ(cli({"map", "pushforward", "catalog:weierstrass:3", "catalog:weierstrass:3"}).out, p.out);
    const CliRun f = cli({"--json", "map", "forget-pullback", "--n", "1", "catalog:bn:4"});
    ASSERT_EQ(f.code, 0);
    EXPECT_EQ(modulislope::class_from_json(modulislope::json::parse(f.out)), modulislope::bn1_pointed_class(4));
}

TEST(Cli, Decompose) {
    const CliRun r = cli({"decompose", "--target", data("target_m4.json"), "--gen", data("lambda_m4.json"), "--gen",
                       data("delta0_m4.json")});
    ASSERT_EQ(r.code, 0);
    const auto j = modulislope::json::parse(r.out);
    EXPECT_EQ(j["kind"], "combination");
    EXPECT_EQ(j["combination"]["lambda"], "3");
    EXPECT_EQ(j["combination"]["delta0"], "1/2");
    EXPECT_EQ(j["verified"], true);
    const CliRun f = cli({"decompose", "--target", data("negative_m4.json"), "--gen", data("lambda_m4.json")});
    EXPECT_EQ(modulislope::json::parse(f.out)["kind"], "farkas");
}

TEST(Cli, Kodaira) {
    EXPECT_EQ(cli({"kodaira", "check", "--n", "10"}).code, 0);
    const CliRun nine = cli({"kodaira", "check", "--n", "9", "--json"});
    EXPECT_EQ(nine.code, 0);
    EXPECT_EQ(modulislope::json::parse(nine.out)["R.K"], "-4");
    EXPECT_EQ(cli({"kodaira", "check", "--n", "11"}).code, 0);
    EXPECT_EQ(cli({"kodaira", "check", "--n", "5"}).code, 64);
}

TEST(Cli, Ineq) {
    const CliRun r = cli({"verify", "ineq", "--genus", "10", "catalog:k3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(a) i=5: residual -6+B5 (worst case 0)  ok"), std::string::npos);
    EXPECT_EQ(cli({"ineq", "--genus", "10", "catalog:k3"}).out, r.out);
    EXPECT_EQ(cli({"ineq", "--genus", "11", "catalog:k3"}).code, 65);
}

TEST(Cli, VerifySingle) {
    EXPECT_EQ(cli({"verify", "slope-k3-equals-7"}).code, 0);
    EXPECT_EQ(cli({"verify", "tails-pullback-m5"}).code, 0);
    EXPECT_EQ(cli({"verify", "no-such-claim"}).code, 64);
    EXPECT_EQ(cli({"verify"}).code, 64);
}

TEST(Cli, Errors) {
    EXPECT_EQ(cli({}).code, 64);
    EXPECT_EQ(cli({"frobnicate"}).code, 64);
    EXPECT_EQ(cli({"slope"}).code, 64);
    EXPECT_EQ(cli({"slope", data("malformed.json")}).code, 65);
    EXPECT_EQ(cli({"slope", data("missing.json")}).code, 65);
    EXPECT_EQ(cli({"slope", "catalog:weierstrass:4"}).code, 65);
    EXPECT_EQ(cli({"slope", "catalog:k3-pullback:20"}).code, 65);
    EXPECT_EQ(cli({"--help"}).code, 0);
}
