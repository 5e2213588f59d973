#include <gtest/gtest.h>

#include <filesystem>

#include "dynkin/dt.hpp"
#include "dynkin/io.hpp"

using namespace dynkin;
using io::json;

TEST(IO, ChargesFromReferenceFile) {
    const auto j = io::parse_json(io::read_file(std::string(DYNKIN_DATA_DIR) + "/charges/e6.json"), "e6.json");
    const auto z = io::charges_from_json(j, 6);
    ASSERT_EQ(z.z.size(), 6u);
    EXPECT_EQ(z.z[0].re, Rat(258));
    EXPECT_EQ(z.z[5].im, Rat(10));
    EXPECT_EQ(io::charges_from_json(io::to_json(z), 6).z[3].re, Rat(-75));
}

TEST(IO, ChargesErrors) {
    auto bad = [](const char* text, int n) { return io::charges_from_json(json::parse(text), n); };
    EXPECT_THROW(bad(R"([1, 2])", 1), std::invalid_argument);
    EXPECT_THROW(bad(R"({"S1": ["1", "1"]})", 2), std::invalid_argument);
    EXPECT_THROW(bad(R"({"S3": ["1", "1"], "S1": ["1", "1"]})", 2), std::invalid_argument);
    EXPECT_THROW(bad(R"({"X1": ["1", "1"]})", 1), std::invalid_argument);
    EXPECT_THROW(bad(R"({"S1": [1, 1]})", 1), std::invalid_argument);
    EXPECT_THROW(bad(R"({"S1": ["1"]})", 1), std::invalid_argument);
    EXPECT_THROW(bad(R"({"Sx": ["1", "1"]})", 1), std::invalid_argument);
    EXPECT_NO_THROW(bad(R"({"S1": ["-1/3", "2"]})", 1));
}

TEST(IO, FileErrors) {
    EXPECT_THROW(io::read_file("/nonexistent/charges.json"), std::invalid_argument);
    EXPECT_THROW(io::parse_json("{not json", "x"), std::invalid_argument);
}

TEST(IO, QuiverRoundTrip) {
    const Quiver q = build_quiver("D4", "2>1,3>1,4>1");
    EXPECT_TRUE(io::quiver_from_json(io::to_json(q)) == q);
    EXPECT_THROW(io::quiver_from_json(json::parse(R"({"type": "A2"})")), std::invalid_argument);
    EXPECT_THROW(io::quiver_from_json(json::parse(R"({"type": "A2", "arrows": [[1, 3]]})")), std::invalid_argument);
}

TEST(IO, HeartAndStratumRoundTrip) {
    DerivedCategory dc(build_quiver("A3", ""));
    HeartCalculus hc(dc);
    const Heart h = hc.forward_tilt(hc.initial_heart(), hc.initial_heart().simples()[0]);
    EXPECT_TRUE(io::heart_from_json(dc, io::to_json(dc, h)) == h);
    HNStratum s;
    s.labels = {dc.simple(1, 0), dc.simple(2, 0)};
    const auto back = io::stratum_from_json(dc, io::to_json(dc, s));
    EXPECT_EQ(back.labels, s.labels);
    EXPECT_THROW(io::object_from_json(dc, json::parse(R"({"root": [1, 0, 1], "shift": 0})")), std::invalid_argument);
    EXPECT_THROW(io::object_from_json(dc, json::parse(R"({"root": [1, 0, 0]})")), std::invalid_argument);
}

TEST(IO, SeriesRoundTrip) {
    DerivedCategory dc(build_quiver("A2", "1>2"));
    HeartCalculus hc(dc);
    DTEngine dt(hc, 4);
    const Series s = dt.invariant();
    const auto terms = io::series_terms_from_json(json::parse(io::to_json(s).dump()));
    ASSERT_EQ(terms.size(), s.size());
    for (const auto& [e, c] : s.terms()) EXPECT_EQ(terms.at(e), c.to_ratfun()) << dim_str(e);
}

TEST(IO, WriteAndReadFile) {
    const auto path = std::filesystem::temp_directory_path() / "dynkin_io_test.json";
    io::write_file(path.string(), "{\"a\": 1}");
    EXPECT_EQ(io::parse_json(io::read_file(path.string()), "tmp").at("a"), 1);
    std::filesystem::remove(path);
}
