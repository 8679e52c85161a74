#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "sumsets/constructions.hpp"
#include "sumsets/json_io.hpp"

using namespace sumsets;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& input = "")
{
    std::string cmd = std::string(SUMSETS_CLI) + " " + args + " 2>/dev/null";
    std::string path;
    if (!input.empty()) {
        path = ::testing::TempDir() + "cli_input.json";
        std::ofstream(path) << input;
        cmd = std::string(SUMSETS_CLI) + " " + args + " --input " + path + " 2>/dev/null";
    }
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST(Json, InstanceRoundTrip)
{
    const auto j = Json::parse(R"({"model":{"kind":"free","rank":2},"ell":2,
        "sets":[[[[0,1]],[[0,1],[1,1]]],[[],[[1,-1]]]]})");
    const auto inst = parse_instance(j);
    ASSERT_TRUE(inst.sets);
    EXPECT_EQ(inst.model, GroupModel::free(2));
    EXPECT_EQ(parse_instance(to_json(inst)).sets->sets(), inst.sets->sets());
    EXPECT_EQ(to_json(parse_instance(to_json(inst))), to_json(inst));

    const auto fa = parse_instance(Json::parse(R"({"model":"Z_2+Z_4","ell":1,"sequence":[[1,3],[0,0]]})"));
    EXPECT_EQ(fa.model, GroupModel::finite_abelian({2, 4}));
    EXPECT_EQ(to_json(fa)["model"], Json::parse(R"({"kind":"finite_abelian","moduli":[2,4]})"));

    const auto words = parse_instance(Json::parse(R"({"model":"F_2","ell":1,"sequence":["xy^-2","1"]})"));
    EXPECT_EQ(words.sequence->terms()[0], Element(Word{{0, 1}, {1, -2}}));
}

TEST(Json, ParseErrors)
{
    EXPECT_THROW(parse_instance(Json::parse(R"({"model":"Z","sets":[[1]]})")), ParseError);
    EXPECT_THROW(parse_instance(Json::parse(R"({"model":"Z","ell":1,"sets":[[1]],"sequence":[1]})")), ParseError);
    EXPECT_THROW(parse_instance(Json::parse(R"({"model":"Z_5","ell":1,"sets":[[7]]})")), ParseError);
    EXPECT_THROW(parse_instance(Json::parse(R"({"model":"Q","ell":1,"sets":[[1]]})")), ParseError);
    EXPECT_THROW(parse_instance(Json::parse(R"({"model":"Z","ell":3,"sets":[[1],[2]]})")), ParseError);
    EXPECT_THROW(parse_instance(Json::parse(R"({"model":"F_2","ell":1,"sets":[[[[0,1],[0,2]]]]})")), ParseError);
    EXPECT_THROW(parse_model(Json::parse(R"({"kind":"cyclic","n":0})")), ParseError);
}

TEST(Cli, ConstructEmitsInstance)
{
    const auto r = run("construct --variant c1 --ell 2 --k 2,2,3 --n 2");
    ASSERT_EQ(r.code, 0);
    const auto inst = parse_instance(Json::parse(r.out));
    EXPECT_EQ(inst.sets->sets(), construct({Variant::C1, 2, {2, 2, 3}, {}, 2}).sets());
}

TEST(Cli, ComputeRoundTrip)
{
    const auto ex = to_json(named_example("example-1.1"), 3).dump();
    const auto r = run("compute --profile", ex);
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["size"], 21);
    const auto g = parse_model(j["model"]);
    EXPECT_EQ(parse_set(g, j["set"]), generalized_sumset(named_example("example-1.1"), 3));
    EXPECT_EQ(j["profile"]["mu_total"], 19);

    const auto trivial = run("compute", R"({"model":"Z","ell":1,"sets":[[4]]})");
    EXPECT_EQ(Json::parse(trivial.out)["size"], 1);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("compute", R"({"model":"Z","ell":1,"sets":[[1],[)").code, 2);
    EXPECT_EQ(run("compute", R"({"model":"Z_5","ell":1,"sets":[[9]]})").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    // Six sets of eight long words: far beyond a 200-element budget.
    std::string sets;
    for (int i = 0; i < 6; ++i) {
        sets += i ? "," : "";
        sets += "[";
        for (int j = 0; j < 8; ++j)
            sets += std::string(j ? "," : "") + "[[0," + std::to_string(i + 1) + "],[1," + std::to_string(j + 1) + "]]";
        sets += "]";
    }
    EXPECT_EQ(run("compute --budget 200", R"({"model":"F_2","ell":4,"sets":[)" + sets + "]}").code, 3);
}

TEST(Cli, BoundAndClassify)
{
    const auto r = run("bound --name dgm", R"({"model":{"kind":"cyclic","n":6},"ell":2,"sets":[[0,3],[0,3]]})");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["witness"]["stabilizer"], Json::parse("[0,3]"));
    EXPECT_EQ(j["value"], 2);

    const auto c1 = run("construct --variant c1 --ell 2 --k 2,2,3 --n 2");
    const auto cl = run("classify", c1.out);
    ASSERT_EQ(cl.code, 0);
    const auto k = Json::parse(cl.out);
    EXPECT_TRUE(k["equality"].get<bool>());
    EXPECT_EQ(k["witnesses"]["union_family"]["g"], 1);
}

TEST(Cli, VerifyIsDeterministic)
{
    const auto a = run("verify bounds --seed 1 --count 50");
    const auto b = run("verify bounds --seed 1 --count 50");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    const auto j = Json::parse(a.out);
    EXPECT_TRUE(j[0]["violations"].empty());
}
