#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun cli(const std::string& args, const std::string& env = "")
{
    const std::string command = env + (env.empty() ? "" : " ") + HOPFCHAIN_CLI + std::string(" ") + args + " 2>/dev/null";
    CliRun run;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return run;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string golden(const std::string& name) { return slurp(std::filesystem::path(HOPFCHAIN_GOLDEN) / name); }

}  // namespace

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(cli("--help").code, 0);
    EXPECT_EQ(cli("matrix --algebra sym_p --n 3").code, 2);
    EXPECT_EQ(cli("matrix --algebra nope --n 3").code, 2);
    EXPECT_EQ(cli("matrix --algebra shuffle --n 3").code, 2);
    EXPECT_EQ(cli("matrix --n 3").code, 2);
    EXPECT_EQ(cli("no-such-verb").code, 2);
    EXPECT_EQ(cli("reverse --algebra sym_h --n 3").code, 2);
    EXPECT_EQ(cli("matrix --algebra sym_h --n 6", "HOPFCHAIN_MAX_BASIS=5").code, 2);
    EXPECT_EQ(cli("matrix --algebra sym_h --n 6", "HOPFCHAIN_MAX_BASIS=11").code, 0);
}

TEST(Cli, GoldenTablesAreByteIdentical)
{
    EXPECT_EQ(cli("matrix --algebra sym_schur --n 3 --a 2").out, golden("schur_n3_matrix.tsv"));
    EXPECT_EQ(cli("matrix --algebra sym_h --n 4 --a 2").out, golden("rock_n4_matrix.tsv"));
    EXPECT_EQ(cli("eigenbasis --algebra sym_h --n 4 --a 2 --side right").out, golden("rock_n4_right.tsv"));
    EXPECT_EQ(cli("eigenbasis --algebra sym_h --n 4 --a 2 --side left").out, golden("rock_n4_left.tsv"));
    EXPECT_EQ(cli("eigenbasis --algebra qsym_F --n 4 --a 2 --side right").out, golden("qsym_n4_right.tsv"));
}

TEST(Cli, OutputIsDeterministic)
{
    for (const std::string args : {"matrix --algebra graphs --n 4 --a 3", "eigenbasis --algebra ck_forests --n 4 --side left",
                                   "simulate --chain rock --stat pairs --n 6 --m 2 --trials 2000 --threads 2"}) {
        const CliRun first = cli(args), second = cli(args);
        EXPECT_EQ(first.code, 0) << args;
        EXPECT_EQ(first.out, second.out) << args;
    }
    EXPECT_EQ(cli("simulate --chain riffle --n 6 --m 2 --trials 3000 --threads 1").out,
              cli("simulate --chain riffle --n 6 --m 2 --trials 3000 --threads 3").out);
}

TEST(Cli, JsonAndOutFile)
{
    const CliRun run = cli("matrix --algebra sym_h --n 2 --format json");
    ASSERT_EQ(run.code, 0);
    const auto j = nlohmann::json::parse(run.out);
    EXPECT_EQ(j["corner"], "state");
    EXPECT_EQ(j["rows"], (nlohmann::json{"(2)", "(1,1)"}));
    EXPECT_EQ(j["cells"][0][0], "1/2");
    EXPECT_EQ(j["cells"][1][1], "1");

    const auto path = std::filesystem::temp_directory_path() / "hopfchain_cli_test.tsv";
    std::filesystem::remove(path);
    const CliRun to_file = cli("matrix --algebra sym_h --n 4 --a 2 --out " + path.string());
    EXPECT_EQ(to_file.code, 0);
    EXPECT_TRUE(to_file.out.empty());
    EXPECT_EQ(slurp(path), golden("rock_n4_matrix.tsv"));
    std::filesystem::remove(path);
}

TEST(Cli, Verbs)
{
    const CliRun lump = cli("lump-check --n 4 --a 2");
    EXPECT_EQ(lump.code, 0);
    EXPECT_NE(lump.out.find("\tyes\t"), std::string::npos);

    const CliRun verify = cli("verify --max-degree 3");
    EXPECT_EQ(verify.code, 0);
    EXPECT_NE(verify.out.find("passed"), std::string::npos);
    EXPECT_EQ(verify.out.find("FAIL"), std::string::npos);

    const CliRun stationary = cli("stationary --algebra shuffle --multidegree 2,1");
    EXPECT_EQ(stationary.code, 0);
    EXPECT_NE(stationary.out.find("1/3"), std::string::npos);

    const CliRun named = cli("named --fn rock_f --x 2,1,1,1 --y 3,2");
    EXPECT_EQ(named.code, 0);
    EXPECT_NE(named.out.find("1/15"), std::string::npos);
}

TEST(Cli, SimulateRowFormat)
{
    const CliRun run = cli("simulate --chain riffle --n 5 --m 1 --trials 500");
    ASSERT_EQ(run.code, 0);
    std::istringstream lines(run.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    EXPECT_EQ(header, "stat\tm\ttrials\tmean\texact\tstderr\tz");
    EXPECT_EQ(std::count(row.begin(), row.end(), '\t'), 6);
    EXPECT_EQ(row.rfind("descents\t1\t500\t", 0), 0u);
    EXPECT_EQ(cli("simulate --chain riffle --n 5 --m 1 --trials 500 --no-header").out, row + "\n");
}
