/*
 * Copyright 2026 The legvar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "legvar/json_io.hpp"

using namespace legvar;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string binary() {
    const char* env = std::getenv("LEGVAR_BIN");
    REQUIRE(env != nullptr);
    return env;
}

std::string tmp_dir() {
    const char* env = std::getenv("LEGVAR_TMP");
    return env ? env : "/tmp";
}

RunResult run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string write_point(const std::string& name, const PhaseVector& p) {
    const std::string path = tmp_dir() + "/" + name;
    write_json_file(path, point_to_json(p));
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("equations: generator families and usage errors") {
    const RunResult r = run("equations --family Y --m 4");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("family") == "Y");
    CHECK(j.at("generators").size() == 30);

    const RunResult r2 = run("equations --family Xdeg --m 2 --k 1");
    CHECK(r2.exit_code == 0);
    CHECK(Json::parse(r2.out).at("generators").size() == 10);

    CHECK(run("equations --family Y --m 1").exit_code == 2);
    CHECK(run("equations --family Nope --m 3").exit_code == 2);
    CHECK(run("equations --m 3").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("classify: strata, membership failures, parse failures") {
    const int m = 2;
    const std::string id_path = write_point(
        "pt_id.json", PhaseVector(MatrixQ::identity(m), MatrixQ::identity(m)));
    RunResult r = run("classify --point " + id_path);
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("kind") == "INV");
    CHECK(j.at("mu_witness") == "1");

    MatrixQ a(3, 3);
    a(2, 2) = Rational(1);
    const std::string p1_path = write_point("pt_p1.json", PhaseVector(a, MatrixQ(3, 3)));
    r = run("classify --point " + p1_path);
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j.at("kind") == "DEG");
    CHECK(j.at("k") == 1);
    CHECK(j.at("l") == 0);

    // on the family with an irrational scale: INV with no mu witness
    const std::string scaled_path = write_point(
        "pt_lambda2.json",
        PhaseVector(MatrixQ::identity(m), Rational(2) * MatrixQ::identity(m)));
    r = run("classify --point " + scaled_path);
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j.at("kind") == "INV");
    CHECK(j.at("lambda_sq") == "2");
    CHECK(j.at("mu_witness").is_null());

    MatrixQ off(2, 2);
    off(0, 0) = Rational(1);
    off(0, 1) = Rational(1);
    const std::string off_path = write_point(
        "pt_off.json", PhaseVector(off, MatrixQ::identity(2)));
    CHECK(run("classify --point " + off_path).exit_code == 3);

    const std::string bad_path = tmp_dir() + "/pt_bad.json";
    std::ofstream(bad_path) << "{\"m\": 2}";
    CHECK(run("classify --point " + bad_path).exit_code == 2);
}

TEST_CASE("tangent-cone subcommand emits chart equations") {
    const RunResult r = run("tangent-cone --family Xdeg --m 3 --k 1");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("family") == "Xdeg");
    bool found_border = false;
    for (const auto& gen : j.at("generators"))
        if (gen.at("poly") == "1*b[1,3]") found_border = true;
    CHECK(found_border);
}

TEST_CASE("verify: pass, inconclusive and failure exit codes") {
    const std::string out = tmp_dir() + "/suite_smoke.json";
    CHECK(run("verify --suite smoothness --m 3 --out " + out).exit_code == 0);
    const Json report = read_json_file(out);
    CHECK(report.at("overall") == "PASS");
    CHECK(report.at("generator_counts").at("Xinv") == 107);

    // The singularity machinery is inconclusive below m = 5 (exit 4).
    CHECK(run("verify --suite singularity --m 3").exit_code == 4);
    CHECK(run("verify --suite nope --m 3").exit_code == 2);
}

TEST_CASE("verify reports are byte-identical across reruns") {
    const std::string out1 = tmp_dir() + "/det_run1.json";
    const std::string out2 = tmp_dir() + "/det_run2.json";
    CHECK(run("verify --suite legendrian --m 2 --seed 17 --out " + out1).exit_code == 0);
    CHECK(run("verify --suite legendrian --m 2 --seed 17 --out " + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
}
