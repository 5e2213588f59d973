#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

Run run(const std::string& args) {
    const char* cli = std::getenv("DYNKIN_CLI");
    if (!cli) return {};
    Run r;
    FILE* p = popen((std::string(cli) + " " + args + " 2>&1").c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    const int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        if (!std::getenv("DYNKIN_CLI")) GTEST_SKIP() << "DYNKIN_CLI not set";
    }
};

}  // namespace

TEST_F(Cli, QuiverInfo) {
    const auto r = run("quiver info --type D4 --orient '2>1,3>1,4>1'");
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r, "type=D4 orientation=2>1,3>1,4>1 roots=12 h=6")) << r.out;
}

TEST_F(Cli, ExchangeGraph) {
    auto r = run("eg enum --type A3");
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r, "14 hearts, 21 edges")) << r.out;
    r = run("eg faces --type A3");
    EXPECT_TRUE(has(r, "3 squares, 6 pentagons")) << r.out;
    r = run("eg h1 --type D4");
    EXPECT_TRUE(has(r, "H1 = 0")) << r.out;
    r = run("eg export --type A2 --format dot");
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r, "digraph EG")) << r.out;
}

TEST_F(Cli, Paths) {
    const auto r = run("paths enum --type A2");
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r, "paths=2 distance=2 diameter=3")) << r.out;
}

TEST_F(Cli, Strata) {
    EXPECT_EQ(run("strata validate --type A2 --labels \"(0,1) (1,1) (1,0)\"").rc, 0);
    EXPECT_EQ(run("strata validate --type A2 --labels \"(1,0) (0,1) (1,1)\"").rc, 1);
    const auto r = run("strata validate --type A2 --all");
    EXPECT_TRUE(has(r, "16 sequences, 2 strata, 0 disagreements")) << r.out;
}

TEST_F(Cli, Stability) {
    auto r = run("stab check --type E6 --totally-stable");
    EXPECT_EQ(r.rc, 1);
    EXPECT_TRUE(has(r, "unstable (0,1,0,0,1,0)")) << r.out;
    r = run("stab check --type E8 --totally-stable");
    EXPECT_EQ(r.rc, 0) << r.out;
}

TEST_F(Cli, DT) {
    EXPECT_EQ(run("dt verify --type A2").rc, 0);
    EXPECT_EQ(run("dt pentagon --degree 8").rc, 0);
    EXPECT_EQ(run("dt pentagon --degree 2 --flipped").rc, 1);
    EXPECT_EQ(run("dt ls-identity --type A3 --degree 4").rc, 0);
    EXPECT_EQ(run("dt wallcross --type A2 --sink 2").rc, 0);
    const auto r = run("dt compute --type A2 --degree 2 --json");
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r, "\"terms\"")) << r.out;
}

TEST_F(Cli, QuotientAndHall) {
    EXPECT_TRUE(has(run("cy quotient --type A2 --N 3"), "5 hearts"));
    EXPECT_EQ(run("hall verify --bound 4").rc, 0);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run("bogus").rc, 2);
    EXPECT_EQ(run("eg enum --type Z9").rc, 2);
    EXPECT_EQ(run("stab check --type A2 --charges /nonexistent").rc, 2);
    EXPECT_EQ(run("dt wallcross --type A2 --sink 1").rc, 2);
}

TEST_F(Cli, Acceptance) {
    const auto r = run("acceptance --criterion 3");
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r, "criterion 3 [distance and diameter]: PASS")) << r.out;
    EXPECT_EQ(run("acceptance --criterion 7").rc, 1);
    EXPECT_EQ(run("acceptance --criterion 7 --expect-fail 7").rc, 0);
}
