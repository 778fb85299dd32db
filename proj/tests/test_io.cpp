#include "hopi/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace hopi;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

std::size_t count_char(const std::string& s, char c) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), c)); }

}  // namespace

TEST(InstanceJson, RoundTripIsExact) {
    for (auto [q, t, r] : std::vector<std::tuple<int, long long, int>>{{2, 4, 2}, {3, 9, 4}, {5, 40, 12}, {9, 100, 81}}) {
        for (std::uint64_t seed : {0ULL, 1ULL, 0xFFFFFFFFFFFFFFFFULL}) {
            const auto inst = random_instance(q, t, r, seed);
            const auto text = serialize_instance(inst);
            const auto back = parse_instance(text);
            EXPECT_EQ(back, inst);
            EXPECT_EQ(serialize_instance(back), text);
        }
    }
}

TEST(InstanceJson, Layout) {
    const auto text = serialize_instance(random_instance(2, 4, 2, 1));
    const auto ls = lines(text);
    ASSERT_EQ(ls.size(), 10u);
    EXPECT_EQ(ls[0], "{\"version\":1,\"q\":2,\"t\":4,\"r\":2,\"seed\":1,\"sets\":[");
    EXPECT_EQ(ls[1], "[1,2],");
    EXPECT_EQ(ls[8], "[2,3]");
    EXPECT_EQ(ls[9], "]}");
    const auto j = Json::parse(text);
    EXPECT_EQ(j["sets"].size(), 8u);
}

TEST(InstanceJson, Rejections) {
    auto code_of = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::NoInformationSet;
    };
    EXPECT_EQ(code_of("not json"), Errc::ParseError);
    EXPECT_EQ(code_of("[]"), Errc::ParseError);
    EXPECT_EQ(code_of(R"({"version":2,"q":2,"t":4,"r":2,"seed":1,"sets":[]})"), Errc::ParseError);
    EXPECT_EQ(code_of(R"({"version":1,"q":2,"t":4,"r":2,"seed":1})"), Errc::ParseError);
    EXPECT_EQ(code_of(R"({"version":1,"q":6,"t":4,"r":2,"seed":1,"sets":[]})"), Errc::UnsupportedQ);
    EXPECT_EQ(code_of(R"({"version":1,"q":2,"t":9,"r":2,"seed":1,"sets":[]})"), Errc::TOutOfRange);
    EXPECT_EQ(code_of(R"({"version":1,"q":2,"t":4,"r":2,"seed":1,"sets":[[0,1]]})"), Errc::ShapeMismatch);
    EXPECT_EQ(code_of(R"({"version":1,"q":2,"t":4,"r":2,"seed":1,"sets":[[1,0],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1]]})"),
              Errc::ParamOutOfRange);
    EXPECT_EQ(code_of(R"({"version":1,"q":2,"t":4,"r":2,"seed":1,"sets":[[0,4],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1]]})"),
              Errc::ParseError);
    EXPECT_EQ(code_of(R"({"version":1,"q":2,"t":4,"r":5,"seed":1,"sets":[]})"), Errc::ROutOfRange);
}

TEST(CodeInfo, Schema) {
    const auto j = code_info_json(*build_code(2, 4));
    EXPECT_EQ(j.dump(), R"({"q":2,"t":4,"n":8,"k":4,"d_designed":4,"t_dual":4,"basis":[[0,0],[1,0],[0,1],[2,0]]})");
}

TEST(SolveJson, OmitsWallTime) {
    const auto inst = random_instance(2, 4, 2, 1);
    const auto res = prange_solve(inst, 3);
    const auto j = solve_result_to_json(inst, res);
    EXPECT_FALSE(j.contains("elapsed"));
    EXPECT_EQ(j["satisfied"].get<std::size_t>(), res.satisfied);
    EXPECT_EQ(j["msg"].size(), 4u);
    EXPECT_EQ(j["information_set"].size(), 4u);
}

TEST(Csv, Fig1aSchema) {
    std::ostringstream os;
    write_fig1a_csv(os, sweep_fig1a(5));
    const auto ls = lines(os.str());
    EXPECT_EQ(ls[0], "q,n,t,k,rate,ell,dqi_frac,prange_frac");
    EXPECT_EQ(ls.size(), 1u + 106u);  // t = 19..124
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_EQ(count_char(ls[i], ','), 7u);
    // Expected row computed independently in python.
    EXPECT_EQ(ls[7], "5,125,25,16,0.128000000000000,3,0.653049011757672,0.564000000000000");
}

TEST(Csv, Fig1bAndFig2Schemas) {
    std::ostringstream a;
    write_fig1b_csv(a, sweep_fig1b(0.2, {4, 8}));
    auto ls = lines(a.str());
    EXPECT_EQ(ls[0], "q,n,k,rate,ell,dqi_frac,prange_frac");
    EXPECT_EQ(ls.size(), 3u);

    std::ostringstream b;
    write_fig2_csv(b, sweep_fig2(0.2, {4}));
    ls = lines(b.str());
    EXPECT_EQ(ls[0], "q,n,r,r_frac,dqi_frac,prange_frac,ratio");
    EXPECT_EQ(ls.size(), 17u);
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_EQ(count_char(ls[i], ','), 6u);
}

TEST(Csv, FractionsCarryFifteenDigits) {
    EXPECT_EQ(format_fraction(0.6), "0.600000000000000");
    EXPECT_EQ(format_fraction(1.0), "1.00000000000000");
    EXPECT_EQ(format_fraction(1.0 / 3.0), "0.333333333333333");
}
