#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(SKEIN_TORI_BIN) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        if (!l.empty()) out.push_back(l);
    return out;
}

}  // namespace

TEST(Cli, AnalyzePasses) {
    const CliRun r = run("analyze --builtin polygon:3 --n 2 --order 4");
    EXPECT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("schema"), 1);
    EXPECT_EQ(doc.at("n"), 2);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run("analyze --builtin polygon:2 --n 2 --order 4").code, 2);
    EXPECT_EQ(run("analyze --builtin polygon:3 --n 2").code, 2);
    EXPECT_EQ(run("analyze --builtin sphere:1 --n 2 --order 4").code, 2);
    EXPECT_EQ(run("analyze --spec /nonexistent.json --n 2 --order 4").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);

    const std::string path = ::testing::TempDir() + "bad_spec.json";
    std::ofstream(path) << R"({"faces": [{"edges": ["a","b","c"]}, {"edges": ["a","d","e"]},
        {"edges": ["a","f","g"]}], "boundary": []})";
    EXPECT_EQ(run("analyze --spec " + path + " --n 2 --order 4").code, 2);
}

TEST(Cli, SpecFileRoundTrip) {
    const std::string path = ::testing::TempDir() + "square.json";
    std::ofstream(path) << R"({"faces": [{"edges": ["a","b","x"]}, {"edges": ["c","d","x"], "flips": [false,false,true]}],
        "boundary": [{"edges_ccw": ["a","b","c","d"]}]})";
    const CliRun r = run("verify --spec " + path + " --n 2,3");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, BatchGrid) {
    const CliRun r = run("batch --builtin polygon:3 --builtin polygon:4 --builtin polygon:5 --builtin polygon:6 "
                      "--n 2,3 --order 2,4,6,8,12 --format csv");
    EXPECT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 41u);
    EXPECT_EQ(ls[0].rfind("surface,n,m_pp,", 0), 0u);
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_NE(ls[i].find(",1,"), std::string::npos) << ls[i];
    // Deterministic output regardless of pool size.
    setenv("SKEIN_TORI_THREADS", "1", 1);
    const CliRun again = run("batch --builtin polygon:3 --builtin polygon:4 --builtin polygon:5 --builtin polygon:6 "
                          "--n 2,3 --order 2,4,6,8,12 --format csv");
    unsetenv("SKEIN_TORI_THREADS");
    EXPECT_EQ(again.out, r.out);
}

TEST(Cli, SkewNormalFormOfMatrixFile) {
    const std::string path = ::testing::TempDir() + "skew.json";
    std::ofstream(path) << "[[0, 2, 4], [-2, 0, 6], [-4, -6, 0]]";
    const CliRun r = run("skewnf --matrix " + path);
    EXPECT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc.at("unimodular").get<bool>());
}
