#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "svcrate/cli.hpp"
#include "support.hpp"

using namespace svcrate;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = SVCRATE_DATA_DIR;

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "svcrate");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return data_dir + "/" + name; }

class TempDir
{
    public:
        fs::path path;
        TempDir() : path(fs::temp_directory_path() / ("svcrate_test_" + std::to_string(::getpid())))
        {
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }
        std::string file(const std::string& name, const std::string& text = "") const
        {
            auto p = (path / name).string();
            if (!text.empty()) write_file(p, text);
            return p;
        }
};

bool has_line(const std::string& text, const std::string& line)
{
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}   // namespace

TEST(GeneratorFile, RoundTripIsByteExact)
{
    for (auto name : {"simplex_k3.gen", "rm_sys_k4.gen", "identity_k2.gen"})
    {
        const std::string text = read_file(data(name));
        EXPECT_EQ(serialize_generator(parse_generator(text)), text) << name;
    }
    const std::string ternary = "3 2 4\n1 0 1 1\n0 1 1 2\n";
    EXPECT_EQ(serialize_generator(parse_generator(ternary)), ternary);
}

TEST(GeneratorFile, ParseErrorsNameTheProblem)
{
    auto msg = [](const std::string& text) {
        try
        {
            parse_generator(text);
        }
        catch (const ParseError& e)
        {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(msg("2 2 3\n1 0 0\n0 1 0\n").find("column 3"), std::string::npos);
    EXPECT_NE(msg("2 2 2\n1 1\n1 1\n").find("rank"), std::string::npos);
    EXPECT_NE(msg("2 2 2\n1 0\n0 2\n").find("row 2, column 2"), std::string::npos);
    EXPECT_NE(msg("2 2 2\n1 0\n0\n").find("row 2"), std::string::npos);
    EXPECT_NE(msg("4 1 1\n1\n").find("prime"), std::string::npos);
    EXPECT_NE(msg("2 2\n").find("header"), std::string::npos);
    EXPECT_NE(msg("2 1 2\n1 x\n").find("column 2"), std::string::npos);
    EXPECT_EQ(msg(""), "generator file is empty");
}

TEST(PolytopeFile, RoundTripIsByteExact)
{
    for (auto f : {CodeFamily::binary_simplex, CodeFamily::rm_nonsystematic, CodeFamily::rm_systematic})
        for (std::size_t k = 2; k <= 5; ++k)
        {
            const std::string text = serialize_polytope(known_region(f, k));
            EXPECT_EQ(serialize_polytope(parse_polytope(text)), text);
        }
    const std::string sample = "dim 2\nV 0/1 0/1\nV 0/1 10/3\nF -1 0 0\nF 0 -1 0\nF 3 3 10\nTAG outer-bound-only\n";
    EXPECT_EQ(serialize_polytope(parse_polytope(sample)), sample);
}

TEST(PolytopeFile, RejectsNonCanonicalNumbers)
{
    EXPECT_THROW(parse_polytope("dim 1\nV 2/4\n"), ParseError);
    EXPECT_THROW(parse_polytope("dim 1\nF 2 4\n"), ParseError);
    EXPECT_THROW(parse_polytope("dim 1\nV 0.5\n"), ParseError);
    EXPECT_THROW(parse_polytope("dim 2\nV 1/1\n"), ParseError);
    EXPECT_THROW(parse_polytope("dim 1\nTAG exact\n"), ParseError);
    EXPECT_THROW(parse_polytope("dims 1\n"), ParseError);
    EXPECT_NO_THROW(parse_polytope("dim 1\nV 2\n"));
}

TEST(Cli, Mindist)
{
    EXPECT_EQ(run({"mindist", "--gen", data("simplex_k3.gen")}).out, "d=4\n");
    EXPECT_EQ(run({"mindist", "--gen", data("rm_nonsys_k4.gen")}).out, "d=4\n");
    EXPECT_EQ(run({"mindist", "--gen", data("identity_k2.gen")}).out, "d=1\n");
    TempDir t;
    auto r = run({"mindist", "--gen", t.file("bad.gen", "2 2 3\n1 0 0\n0 1 0\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("column 3"), std::string::npos);
    EXPECT_EQ(run({"mindist", "--gen", t.file("missing.gen")}).code, 2);
}

TEST(Cli, RegionSimplexTwo)
{
    auto r = run({"region", "--gen", data("simplex_k2.gen"), "--oracle"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "dim 2\nV 0/1 0/1\nV 0/1 2/1\nV 2/1 0/1\nF -1 0 0\nF 0 -1 0\nF 1 1 2\n");
}

TEST(Cli, RegionIdentityIsUnitSquareWithPlot)
{
    TempDir t;
    auto out = t.file("id.poly"), plot = t.file("id.plot");
    EXPECT_EQ(run({"region", "--gen", data("identity_k2.gen"), "--out", out, "--plot", plot}).code, 0);
    auto p = parse_polytope(read_file(out));
    EXPECT_EQ(p.vertices, (std::vector<RationalVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    EXPECT_EQ(read_file(plot), "CYCLE 4\nP 0 0\nP 1 0\nP 1 1\nP 0 1\n");
}

TEST(Cli, RegionSystematicFourFacetFamilies)
{
    auto r = run({"region", "--gen", data("rm_sys_k4.gen")});
    ASSERT_EQ(r.code, 0);
    for (std::size_t i = 0; i < 4; ++i)
    {
        std::string leave = "F", heavy = "F";
        for (std::size_t j = 0; j < 4; ++j)
        {
            leave += i == j ? " 0" : " 1";
            heavy += i == j ? " 3" : " 1";
        }
        EXPECT_TRUE(has_line(r.out, leave + " 4")) << leave;
        EXPECT_TRUE(has_line(r.out, heavy + " 10")) << heavy;
    }
}

TEST(Cli, RegionRatesAndDeterminism)
{
    TempDir t;
    auto mu = t.file("mu.txt", "1 2 1/2\n");
    auto a = run({"region", "--gen", data("simplex_k2.gen"), "--mu", mu});
    auto b = run({"region", "--gen", data("simplex_k2.gen"), "--mu", mu, "--threads", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto u = run({"region", "--gen", data("simplex_k2.gen"), "--uniform", "1/2"});
    EXPECT_TRUE(has_line(u.out, "F 1 1 1"));
    EXPECT_EQ(run({"region", "--gen", data("simplex_k2.gen"), "--mu", t.file("short.txt", "1 1\n")}).code, 2);
    EXPECT_EQ(run({"region", "--gen", data("simplex_k2.gen"), "--uniform", "-1"}).code, 2);
    EXPECT_EQ(run({"region", "--gen", data("rm_sys_k4.gen"), "--plot", t.file("x.plot")}).code, 2);
}

TEST(Cli, RegionOracleLimit)
{
    auto r = run({"region", "--gen", data("simplex_k4.gen"), "--oracle"});
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("368"), std::string::npos);
}

TEST(Cli, Check)
{
    auto in = run({"check", "--gen", data("simplex_k2.gen"), "--lambda", "1,1"});
    EXPECT_EQ(in.code, 0);
    EXPECT_EQ(in.out.substr(0, 7), "inside\n");
    auto out = run({"check", "--gen", data("simplex_k2.gen"), "--lambda", "2,1"});
    EXPECT_EQ(out.code, 1);
    EXPECT_EQ(out.out, "outside\n");
    EXPECT_EQ(run({"check", "--gen", data("rm_sys_k4.gen"), "--lambda", "0,0,0,0"}).out, "inside\n");
    EXPECT_EQ(run({"check", "--gen", data("rm_sys_k4.gen"), "--lambda", "4/3,4/3,4/3,4/3"}).code, 0);
    EXPECT_EQ(run({"check", "--gen", data("simplex_k2.gen"), "--lambda", "1,x"}).code, 2);
    EXPECT_EQ(run({"check", "--gen", data("simplex_k2.gen"), "--lambda", "1"}).code, 2);
    EXPECT_EQ(run({"check", "--gen", data("simplex_k2.gen"), "--lambda", "-1,0"}).code, 2);
}

TEST(Cli, Bounds)
{
    auto s3 = run({"bounds", "--gen", data("simplex_k3.gen")});
    EXPECT_TRUE(has_line(s3.out, "CUT 1 1 1 4"));
    EXPECT_TRUE(has_line(s3.out, "DLOWER 4"));
    auto r4 = run({"bounds", "--gen", data("rm_sys_k4.gen")});
    for (auto line : {"CUT 0 1 1 1 4", "CUT 1 0 1 1 4", "CUT 1 1 0 1 4", "CUT 1 1 1 0 4", "DLOWER 4"})
        EXPECT_TRUE(has_line(r4.out, line)) << line;
    EXPECT_TRUE(has_line(run({"bounds", "--gen", data("identity_k2.gen")}).out, "DLOWER 1"));
}

TEST(Cli, KnownAndVerify)
{
    TempDir t;
    auto n4 = t.file("n4.poly"), y5 = t.file("y5.poly"), s3 = t.file("s3.poly");
    EXPECT_EQ(run({"known", "--family", "rm-nonsys", "--k", "4", "--out", n4}).code, 0);
    EXPECT_EQ(run({"verify", "--gen", data("rm_nonsys_k4.gen"), "--region", n4}).out, "EQUAL\n");
    EXPECT_EQ(run({"known", "--family", "rm-sys", "--k", "5", "--out", y5}).code, 0);
    auto c = run({"verify", "--gen", data("rm_sys_k5.gen"), "--region", y5});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out.substr(0, 10), "CONTAINED\n");
    EXPECT_EQ(run({"known", "--family", "simplex", "--k", "3", "--out", s3}).code, 0);
    auto id3 = t.file("id3.gen", "2 3 3\n1 0 0\n0 1 0\n0 0 1\n");
    auto m = run({"verify", "--gen", id3, "--region", s3});
    EXPECT_EQ(m.code, 1);
    EXPECT_EQ(m.out.substr(0, 9), "MISMATCH\n");
    EXPECT_EQ(run({"known", "--family", "rm-sys", "--k", "11"}).code, 5);
    EXPECT_EQ(run({"known", "--family", "simplex", "--k", "0"}).code, 5);
    EXPECT_EQ(run({"known", "--family", "hamming", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"verify", "--gen", data("simplex_k2.gen"), "--region", s3}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"mindist"}).code, 2);
    EXPECT_EQ(run({"region", "--gen", data("simplex_k2.gen"), "--threads", "0"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
