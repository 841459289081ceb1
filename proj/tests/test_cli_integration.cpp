#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" NLKG_CLI_PATH "\" " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("nlkg_cli_") + info->name() + "_" + std::to_string(getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

TEST_F(CliTest, DispersionValues) {
    auto r = run("dispersion --potential duffing --mu 0 --amplitude 1 --method lde --order 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");

    r = run("dispersion --potential pure-quartic --amplitude 1 --method lde --order 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(r.out), 24.0 * std::sqrt(3.0) / 49.0, 1e-15);

    r = run("dispersion --potential sine-gordon --amplitude 1.5707963 --method exact");
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(r.out), 0.847213, 1e-6);

    r = run("dispersion --potential duffing --mu 1 --amplitude 1 --method lim --order 2 --precision 8");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1.3176645\n");
}

TEST_F(CliTest, DispersionWithWavenumber) {
    const auto r = run("dispersion --potential duffing --mu 0 --amplitude 1 --method exact --wavenumber 1.7320508075688772");
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    double omega_cap = 0, omega = 0;
    lines >> omega_cap >> omega;
    EXPECT_NEAR(omega_cap, 1.0, 1e-12);
    EXPECT_NEAR(omega, 2.0, 1e-12);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run("dispersion --potential sine-gordon --amplitude 3.5 --method exact").code, 2);
    EXPECT_EQ(run("dispersion --potential duffing --mu -2 --amplitude 1 --method lde --order 2").code, 2);
    EXPECT_EQ(run("dispersion --potential duffing --mu 1 --amplitude 1 --method lde --order 31").code, 2);
    EXPECT_EQ(run("dispersion --potential duffing --mu 1 --amplitude 1 --method lde").code, 2);
    EXPECT_EQ(run("dispersion --potential duffing --amplitude 1 --method exact").code, 2);
    EXPECT_EQ(run("dispersion --potential toda --amplitude 1 --method exact").code, 2);
    EXPECT_EQ(run("dispersion --potential duffing --mu 1 --amplitude 1 --method exact --precision 3").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("figure --id 4 --out " + dir_.string()).code, 2);
}

TEST_F(CliTest, SweepWritesDeterministicCsv) {
    const auto out = dir_ / "sg.csv";
    const std::string args = "sweep --potential sine-gordon --a-min 0.1 --a-max 3.1 --points 30 --methods lde2,lim2 --out " +
                             out.string();
    auto r = run(args);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, out.string() + "\n");
    const std::string first = slurp(out);
    EXPECT_EQ(first.rfind("# nlkg-dispersion v1.0.0 spec=", 0), 0u);
    EXPECT_NE(first.find("x,exact_omega,lde2_omega,lde2_ratio,lde2_delta,lim2_omega,lim2_ratio,lim2_delta\n"),
              std::string::npos);
    ASSERT_EQ(run(args + " --threads 3").code, 0);
    EXPECT_EQ(slurp(out), first);
}

TEST_F(CliTest, SweepUsageErrors) {
    EXPECT_EQ(run("sweep --potential duffing --mu 1 --methods lde2").code, 2);
    EXPECT_EQ(run("sweep --potential duffing --mu 1 --a-min 0.1 --a-max 1 --mua2-min 1 --mua2-max 2 --methods lde2").code,
              2);
    EXPECT_EQ(run("sweep --potential sine-gordon --mua2-min 1 --mua2-max 2 --methods lde2").code, 2);
    EXPECT_EQ(run("sweep --potential duffing --mua2-min 1 --mua2-max 2 --methods rk4").code, 2);
}

TEST_F(CliTest, FigureWritesFourFiles) {
    const auto r = run("figure --id 3 --points 20 --out " + dir_.string());
    ASSERT_EQ(r.code, 0);
    for (const char* name : {"fig3_ratio.csv", "fig3_delta.csv", "fig3_ratio.svg", "fig3_delta.svg"}) {
        EXPECT_TRUE(fs::exists(dir_ / name)) << name;
        EXPECT_NE(r.out.find((dir_ / name).string()), std::string::npos) << name;
    }
}

TEST_F(CliTest, FigureUnwritableDirectory) {
    const auto blocker = dir_ / "file";
    std::ofstream(blocker) << "x";
    EXPECT_EQ(run("figure --id 3 --points 5 --out " + (blocker / "sub").string()).code, 2);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
    const auto cfg = dir_ / "nlkg.conf";
    std::ofstream(cfg) << "output_dir = " << (dir_ / "from_config").string() << "\ncsv_precision = 6\ngrid_points = 4\n";
    const std::string env = "NLKG_CONFIG=\"" + cfg.string() + "\"";

    auto r = run("dispersion --potential duffing --mu 1 --amplitude 1 --method exact", env);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1.31778\n");
    r = run("dispersion --potential duffing --mu 1 --amplitude 1 --method exact --precision 10", env);
    EXPECT_EQ(r.out, "1.317776065\n");

    r = run("sweep --potential duffing --mua2-min 1 --mua2-max 2 --methods lde0", env);
    ASSERT_EQ(r.code, 0);
    const auto csv = dir_ / "from_config" / "sweep.csv";
    EXPECT_EQ(r.out, csv.string() + "\n");
    const std::string text = slurp(csv);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 4);

    std::ofstream(cfg) << "colour = red\n";
    EXPECT_EQ(run("validate", env).code, 2);
    EXPECT_EQ(run("validate", "NLKG_CONFIG=\"" + (dir_ / "missing.conf").string() + "\"").code, 2);
}

TEST_F(CliTest, ValidatePasses) {
    const auto r = run("validate");
    EXPECT_EQ(r.code, 0);
    for (const char* group :
         {"PASS oracle agreement", "PASS landen identities", "PASS closed-form regressions", "PASS pairing property",
          "PASS error ordering"})
        EXPECT_NE(r.out.find(group), std::string::npos) << group;
    EXPECT_NE(r.out.find("all groups passed"), std::string::npos);
}

}  // namespace
