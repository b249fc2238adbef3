/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "test-util.h"

#include "axtcp/cli.h"
#include "axtcp/report.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace axtcp;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome
Invoke(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = Run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path
Scratch(const std::string& name)
{
    auto dir = fs::temp_directory_path() / "axtcp-cli-tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string
Slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<ResultRow>
Rows(const std::string& csv)
{
    std::istringstream in(csv);
    return ReadResultsCsv(in);
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("simulate writes one metrics row")
    {
        const auto path = Scratch("r.csv");
        const auto r = Invoke({"simulate", "--stations", "4", "--segment", "1460", "--strategy",
                               "3", "--load", "0.03", "--snr", "36.6", "--txops", "200",
                               "--seed", "7", "--out", path.string()});
        CHECK(r.code == 0);
        const auto text = Slurp(path);
        CHECK(text.find("# seed=7\n") != std::string::npos);
        CHECK(text.find("# load=0.03\n") != std::string::npos);
        const auto rows = Rows(text);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].strategy == 3);
        CHECK(rows[0].metrics->meanDlCycles == 1.0);
    }

    TEST_CASE("output is byte-stable")
    {
        const std::vector<std::string> args{"simulate", "--snr", "27.1", "--txops", "100",
                                            "--seed", "3"};
        CHECK(Invoke(args).out == Invoke(args).out);
    }

    TEST_CASE("strategy 3 without a load is a usage error")
    {
        const auto r = Invoke({"simulate", "--strategy", "3"});
        CHECK(r.code == 2);
        CHECK(r.err.starts_with("error,usage,"));
    }

    TEST_CASE("bad flags")
    {
        CHECK(Invoke({"simulate", "--bogus", "1"}).code == 2);
        CHECK(Invoke({}).code == 2);
        CHECK(Invoke({"simulate", "--stations", "5"}).code == 2);
        CHECK(Invoke({"simulate", "--strategy", "4"}).code == 2);
        CHECK(Invoke({"simulate", "--txops", "ten"}).code == 2);
        CHECK(Invoke({"simulate", "--strategy", "2", "--load", "0.5"}).code == 2);
        CHECK(Invoke({"simulate", "--mcs", "11"}).code == 2);
        CHECK(Invoke({"simulate", "--config", "/nonexistent/axtcp.cfg"}).code == 3);
    }

    TEST_CASE("simulation errors are machine readable")
    {
        const auto r = Invoke({"simulate", "--snr", "5", "--txops", "10"});
        CHECK(r.code == 1);
        CHECK(r.err.starts_with("error,channel-unusable,"));
        const auto n = Invoke({"simulate", "--stations", "8", "--txops", "10"});
        CHECK(n.code == 2);
        CHECK(n.err.starts_with("error,config,"));
        CHECK(Invoke({"simulate", "--stations", "8", "--txops", "10", "--assume-same-ber"}).code ==
              0);
    }

    TEST_CASE("help exits cleanly")
    {
        const auto r = Invoke({"simulate", "--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("--assume-same-ber") != std::string::npos);
    }

    TEST_CASE("config file fills in flags and flags win")
    {
        const auto cfg = Scratch("run.cfg");
        {
            std::ofstream f(cfg);
            f << "# scenario\nstrategy=3\nload=0.5\ntxops=50\nseed=11\n";
        }
        const auto a = Invoke({"simulate", "--config", cfg.string()});
        CHECK(a.code == 0);
        CHECK(a.out.find("# load=0.5\n") != std::string::npos);
        CHECK(a.out.find("# seed=11\n") != std::string::npos);
        const auto b = Invoke({"simulate", "--config", cfg.string(), "--load", "0.25"});
        CHECK(b.out.find("# load=0.25\n") != std::string::npos);

        {
            std::ofstream f(cfg);
            f << "colour=blue\n";
        }
        CHECK(Invoke({"simulate", "--config", cfg.string()}).code == 2);
    }

    TEST_CASE("trace file sums to the reported delay")
    {
        const auto trace = Scratch("trace.csv");
        const auto r = Invoke({"simulate", "--txops", "5", "--snr", "27.1", "--trace",
                               trace.string()});
        REQUIRE(r.code == 0);
        std::ifstream in(trace);
        std::string line;
        std::getline(in, line);
        CHECK(line == "txop,phase,start_us,duration_us,bits");
        double total = 0;
        while (std::getline(in, line))
        {
            const auto f = line.substr(line.find(',', line.find(',') + 1) + 1);
            total += std::stod(f.substr(f.find(',') + 1));
        }
        const auto rows = Rows(r.out);
        CHECK(total / 5 / 1000 == doctest::Approx(rows[0].metrics->meanTxopMs));
    }

    TEST_CASE("load sweep over a log grid")
    {
        const auto r = Invoke({"sweep", "--axis", "load", "--values", "0.01:1.0:log20",
                               "--stations", "4", "--segment", "1460", "--snr", "36.6",
                               "--txops", "20"});
        CHECK(r.code == 0);
        const auto rows = Rows(r.out);
        REQUIRE(rows.size() == 20);
        CHECK(rows.front().load == 0.01);
        CHECK(rows.back().load == 1.0);
        CHECK(r.out.find("# axis=load\n") != std::string::npos);
    }

    TEST_CASE("SNR sweep with four series and a failing point")
    {
        const auto path = Scratch("snr.csv");
        const auto r = Invoke({"sweep", "--snr", "5,30.2,36.6", "--series", "1,2,3@0.03,3@0.95",
                               "--txops", "20", "--out", path.string()});
        CHECK(r.code == 0);
        CHECK(r.err.find("warning,channel-unusable,") != std::string::npos);
        const auto rows = Rows(Slurp(path));
        REQUIRE(rows.size() == 12);
        CHECK_FALSE(rows[0].metrics);
        CHECK(rows[1].metrics);

        const auto plot = Invoke({"plot", "--in", path.string(), "--layout", "goodput_vs_snr"});
        CHECK(plot.code == 0);
        for (const char* s : {",s1,", ",s2,", ",s3@0.03,", ",s3@0.95,"})
        {
            CHECK(plot.out.find(s) != std::string::npos);
        }
    }

    TEST_CASE("sweep over the table SNRs")
    {
        const auto r = Invoke({"sweep", "--axis", "snr", "--values", "table", "--txops", "5"});
        CHECK(r.code == 0);
        CHECK(Rows(r.out).size() == 18);
    }

    TEST_CASE("parallel and serial sweeps print the same bytes")
    {
        const std::vector<std::string> base{"sweep", "--axis", "segment", "--values",
                                            "208,536,1460", "--txops", "30", "--snr", "27.1"};
        auto serial = base;
        serial.push_back("--serial");
        CHECK(Invoke(base).out == Invoke(serial).out);
    }

    TEST_CASE("sweep usage errors")
    {
        CHECK(Invoke({"sweep"}).code == 2);
        CHECK(Invoke({"sweep", "--axis", "load", "--values", "0.5", "--strategy", "2"}).code == 2);
        CHECK(Invoke({"sweep", "--axis", "snr", "--values", "1:2:log0"}).code == 2);
        CHECK(Invoke({"sweep", "--axis", "wind", "--values", "1"}).code == 2);
        CHECK(Invoke({"sweep", "--axis", "snr", "--values", "30", "--series", "3"}).code == 2);
    }

    TEST_CASE("value lists")
    {
        CHECK(ParseValueList("1,2.5,4") == std::vector<double>{1, 2.5, 4});
        CHECK(ParseValueList("0:1:lin3") == std::vector<double>{0, 0.5, 1});
        CHECK(ParseValueList("10:30:10") == std::vector<double>{10, 20, 30});
        const auto lg = ParseValueList("0.01:1:log3");
        REQUIRE(lg.size() == 3);
        CHECK(lg[1] == doctest::Approx(0.1));
        CHECK(lg[2] == 1.0);
        CHECK_ERROR_CODE(ParseValueList("1:2"), ErrorCode::Usage);
        CHECK_ERROR_CODE(ParseValueList("0:1:log4"), ErrorCode::Usage);
    }

    TEST_CASE("plot of an empty result set fails")
    {
        const auto path = Scratch("empty.csv");
        {
            std::ofstream f(path);
            f << kResultsHeader << "\n";
        }
        const auto r = Invoke({"plot", "--in", path.string(), "--layout", "goodput_vs_snr"});
        CHECK(r.code == 2);
        CHECK(r.err.starts_with("error,usage,"));
    }

    TEST_CASE("table export re-imports")
    {
        const auto phy = Scratch("phy8.csv");
        CHECK(Invoke({"tables", "--kind", "phy", "--stations", "8", "--out", phy.string()}).code ==
              0);
        const auto again = Invoke({"tables", "--kind", "phy", "--stations", "8", "--phy-table",
                                   phy.string()});
        CHECK(again.code == 0);
        CHECK(again.out == Slurp(phy));

        const auto ber = Scratch("ber.csv");
        CHECK(Invoke({"tables", "--kind", "ber", "--out", ber.string()}).code == 0);
        const auto sim = Invoke({"simulate", "--txops", "10", "--ber-table", ber.string()});
        CHECK(sim.code == 0);
        CHECK(Invoke({"tables"}).code == 2);
    }

    TEST_CASE("packing table")
    {
        const auto r = Invoke({"packing", "--snr", "36.6"});
        CHECK(r.code == 0);
        CHECK(r.out.find("# x_star=7\n") != std::string::npos);
        CHECK(r.out.find("x,u_mbps\n1,") != std::string::npos);
        CHECK(r.out.find("\n7,") != std::string::npos);
    }
}
