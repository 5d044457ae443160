// Copyright 2026 The detmit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

#include "detmit/io.h"

using namespace detmit;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string &args) {
    std::string cmd = std::string(DETMIT_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("detmit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string file(const std::string &name, const std::string &content) {
        std::string path = (dir_ / name).string();
        std::ofstream(path) << content;
        return path;
    }
    std::string path(const std::string &name) { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, help_and_usage_errors) {
    ASSERT_EQ(run("--help").code, 0);
    ASSERT_EQ(run("").code, 2);
    ASSERT_EQ(run("no-such-command").code, 2);
    ASSERT_EQ(run("simulate-fig1 --shots abc").code, 2);
}

TEST_F(Cli, calibrate) {
    std::string zeros = file("z.json", R"({"n": 2, "prepared": "00", "counts": {"00": 9700, "10": 300}})");
    std::string ones = file("o.json", R"({"n": 2, "prepared": "11", "counts": {"11": 9500, "01": 500}})");
    Result r = run("calibrate " + zeros + " " + ones);
    ASSERT_EQ(r.code, 0);
    DetectorModel m = parse_model(r.out);
    ASSERT_NEAR(m.rates(0).p0, 0.03, 1e-15);
    ASSERT_NEAR(m.rates(1).p0, 0.0, 1e-15);
    ASSERT_NEAR(m.rates(0).p1, 0.05, 1e-15);
    ASSERT_NE(r.out.find("p0_sigma"), std::string::npos);

    ASSERT_EQ(run("calibrate " + zeros).code, 2);
}

TEST_F(Cli, invert) {
    std::string counts = file("c.json", R"({"n": 1, "counts": {"0": 970, "1": 30}})");
    Result r = run("invert " + counts + " --p 0.03");
    ASSERT_EQ(r.code, 0) << r.out;
    ASSERT_NE(r.out.find("\"schema_version\": 1"), std::string::npos);
    ASSERT_NE(r.out.find("\"sigmas\""), std::string::npos);

    Result same = run("invert " + counts + " --p0 0 --p1 0 --project");
    ASSERT_EQ(same.code, 0);
    ASSERT_NE(same.out.find("0.97"), std::string::npos) << same.out;
    ASSERT_NE(same.out.find("projected"), std::string::npos);

    std::string model = file("m.json", model_to_json(DetectorModel::uniform(1, 0.03, 0.03)));
    ASSERT_EQ(run("invert " + counts + " --model " + model).out, r.out);
    ASSERT_EQ(run("invert " + counts + " --rates 0.03:0.03").out, r.out);

    ASSERT_EQ(run("invert " + counts + " --p 0.5").code, 3);
    ASSERT_EQ(run("invert " + counts + " --p0 0.3 --p1 0.7").code, 3);
    ASSERT_EQ(run("invert " + counts).code, 2);
    ASSERT_EQ(run("invert " + counts + " --p 0.1 --p0 0.1 --p1 0.1").code, 2);
    ASSERT_EQ(run("invert " + counts + " --rates 0.1:0.1,0.1:0.1").code, 2);
    ASSERT_EQ(run("invert " + file("bad.json", "{not json")).code, 2);
    ASSERT_EQ(run("invert " + path("missing.json") + " --p 0.1").code, 2);
}

TEST_F(Cli, collective_invert) {
    std::string counts = file("c.json", "[10, 30, 60]");
    Result r = run("collective-invert " + counts + " --p 0.02");
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("condition_number"), std::string::npos);
    ASSERT_EQ(run("invert --collective " + counts + " --p 0.02").out, r.out);
    ASSERT_EQ(run("collective-invert " + counts + " --rates 0.1:0.1,0.2:0.2").code, 2);
    ASSERT_EQ(run("collective-invert " + counts + " --p 0.5").code, 3);
}

TEST_F(Cli, expect) {
    std::string counts = file("c.json", R"({"n": 2, "setting": "XZ", "counts": {"00": 800, "11": 150, "10": 50}})");
    Result r = run("expect " + counts + " --observable XZ --p 0.03 --bootstrap 50");
    ASSERT_EQ(r.code, 0);
    for (const char *key : {"raw", "corrected", "correction_factor", "bootstrap_sigma"}) {
        ASSERT_NE(r.out.find(key), std::string::npos) << key;
    }
    ASSERT_NE(r.out.find("1.1317"), std::string::npos) << r.out;
    ASSERT_EQ(run("expect " + counts + " --observable ZZ --p 0.03").code, 2);
    ASSERT_EQ(run("expect " + counts + " --observable XZ --p0 0.01 --p1 0.05").code, 0);
}

TEST_F(Cli, squeeze) {
    std::string z = file("z.json", "[1, 4, 6, 4, 1]");
    std::string x = file("x.json", "[90, 10, 0, 0, 0]");
    Result r = run("squeeze --z " + z + " --x " + x + " --p 0.02");
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("xi_corrected"), std::string::npos);
    std::string flat = file("f.json", "[1, 4, 6, 4, 1]");
    ASSERT_EQ(run("squeeze --z " + z + " --x " + flat + " --p 0.02").code, 2);
}

TEST_F(Cli, witness) {
    std::string graph = file("g.json", R"({"n": 2, "edges": [[0, 1]], "coloring": [0, 1]})");
    std::string a = file("a.json", R"({"n": 2, "setting": "XZ", "counts": {"00": 100}})");
    std::string b = file("b.json", R"({"n": 2, "setting": "ZX", "counts": {"00": 100}})");
    Result r = run("witness --graph " + graph + " " + a + " " + b + " --p 0.01");
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("corrected"), std::string::npos);
    ASSERT_EQ(run("witness --graph " + graph + " " + a).code, 2);
}

TEST_F(Cli, simulate_is_deterministic) {
    std::string args = " --n 6 --shots 400 --bootstrap 5 --seed 3";
    Result a = run("simulate-fig1" + args);
    Result b = run("simulate-fig1" + args + " --threads 4");
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(a.out, b.out);
    ASSERT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 13);
    ASSERT_NE(run("simulate-fig1 --n 6 --shots 400 --bootstrap 5 --seed 4").out, a.out);

    Result c = run("simulate-fig2 --n 5 --shots 300 --bootstrap 3 --p-n-grid 0,0.05");
    ASSERT_EQ(c.code, 0);
    ASSERT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 5);

    std::string out = path("fig1.csv");
    ASSERT_EQ(run("simulate-fig1" + args + " -o " + out).code, 0);
    ASSERT_EQ(read_text_file(out), a.out);
}

TEST_F(Cli, simulate_limits) {
    ASSERT_EQ(run("simulate-fig1 --n 30").code, 4);
    ASSERT_EQ(run("simulate-fig2 --n 30 --p-n-grid 0").code, 4);
    ASSERT_EQ(run("simulate-fig1 --n 1").code, 2);
    ASSERT_EQ(run("simulate-fig1 --p-n 2").code, 2);
}
