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

// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "legvar/json_io.hpp"
#include "legvar/suites.hpp"

using namespace legvar;
using Clock = std::chrono::steady_clock;

namespace {

constexpr uint64_t kSeed = 2026;

std::map<std::string, std::string> g_reports; // (suite@m) -> serialized report

std::string run_and_record(const std::string& suite, int m, uint64_t seed,
                           SuiteResult* result_out = nullptr) {
    const SuiteResult result = run_suite(suite, m, seed);
    if (result_out) *result_out = result;
    const std::string text = dump_json(suite_report(result));
    g_reports[suite + "@m" + std::to_string(m)] = text;
    return result.overall();
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> check;
};

bool suite_matrix_passes(const std::string& suite, const std::vector<int>& ms,
                         std::string& detail) {
    bool ok = true;
    std::ostringstream ss;
    for (int m : ms) {
        const std::string overall = run_and_record(suite, m, kSeed);
        ss << "m=" << m << ":" << overall << " ";
        ok = ok && overall == "PASS";
    }
    detail = ss.str();
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1. rho-span suite (m = 2..5): images span a bracket-closed space "
                        "of dimension 2(m^2-1) with traceless-pair recovery",
                        4 * 10.0,
                        [](std::string& d) { return suite_matrix_passes("rho-span", {2, 3, 4, 5}, d); }});

    criteria.push_back({"2. Legendrian suite (m = 2..4; sym/skew at m = 2,3): Jacobian-kernel "
                        "tangent spaces are Lagrangian",
                        30.0,
                        [](std::string& d) { return suite_matrix_passes("legendrian", {2, 3, 4}, d); }});

    criteria.push_back({"3. dimension suite (m = 2..5): stratum dimensions match "
                        "(k+l)(2m-k-l)-1 and m^2-1",
                        30.0,
                        [](std::string& d) { return suite_matrix_passes("dimensions", {2, 3, 4, 5}, d); }});

    criteria.push_back({"4. smoothness m=3: codimension 9 at both corner points and 10 samples",
                        10.0, [](std::string& d) {
                            SuiteResult r;
                            const std::string overall = run_and_record("smoothness", 3, kSeed, &r);
                            d = "overall:" + overall;
                            return overall == "PASS";
                        }});

    criteria.push_back({"5. smoothness m=4: exactly 66 quadrics cut codimension 16 at the "
                        "corners and samples",
                        60.0, [](std::string& d) {
                            SuiteResult r;
                            const std::string overall = run_and_record("smoothness", 4, kSeed, &r);
                            bool count_ok = false;
                            for (const auto& c : r.certificates)
                                if (c.claim == "xinv4-quadric-count" && c.verdict == "PASS")
                                    count_ok = true;
                            d = "overall:" + overall + " quadric-count:" +
                                (count_ok ? "66" : "wrong");
                            return overall == "PASS" && count_ok;
                        }});

    criteria.push_back({"6. singularity m = 5, 6: limit-vector span reaches m^2 in the corner "
                        "chart, every curve certified inside the invertible family",
                        360.0, [](std::string& d) {
                            bool ok = true;
                            std::ostringstream ss;
                            for (int m : {5, 6}) {
                                SuiteResult r;
                                run_and_record("singularity", m, kSeed, &r);
                                const Certificate& c = r.certificates.front();
                                const auto span = c.evidence.at("span_dim").get<std::size_t>();
                                bool curves_ok = true;
                                for (const auto& entry : c.evidence.at("curves"))
                                    curves_ok = curves_ok &&
                                                entry.at("curve_in_inv").get<bool>() &&
                                                entry.at("limit_in_zariski_tangent_space").get<bool>();
                                ss << "m=" << m << ":" << c.verdict << " span=" << span << " ";
                                ok = ok && c.verdict == "SINGULAR" &&
                                     span >= std::size_t(m) * m && curves_ok;
                            }
                            d = ss.str();
                            return ok;
                        }});

    criteria.push_back({"7. rank-family boundary: smooth (2,1) and linear cases, non-linear "
                        "cone parts at the corners, parametrization onto the (2,1) equations",
                        30.0,
                        [](std::string& d) { return suite_matrix_passes("segre", {2, 3, 4}, d); }});

    criteria.push_back({"8. complement-minor identity (m = 2..5) and the iterated-compound "
                        "identity (m = 3,4), exact on unimodular samples",
                        60.0, [](std::string& d) {
                            return suite_matrix_passes("minor-identity", {2, 3, 4, 5}, d);
                        }});

    criteria.push_back({"9. Grassmannian slice at m=3: lifts satisfy all exchange relations, "
                        "slice coordinate 1, projections on the invertible family",
                        10.0,
                        [](std::string& d) { return suite_matrix_passes("grassmann", {3}, d); }});

    criteria.push_back({"10. determinism: every suite re-run with identical seeds produces "
                        "byte-identical certificate files",
                        600.0, [](std::string& d) {
                            const char* tmp_env = std::getenv("LEGVAR_TMP");
                            const std::string tmp = tmp_env ? tmp_env : "/tmp";
                            std::size_t compared = 0;
                            for (const auto& [key, first_text] : g_reports) {
                                const auto at = key.find("@m");
                                const std::string suite = key.substr(0, at);
                                const int m = std::stoi(key.substr(at + 2));
                                const std::string rerun =
                                    dump_json(suite_report(run_suite(suite, m, kSeed)));
                                const std::string p1 = tmp + "/accept_" + suite + "_m" +
                                                       std::to_string(m) + "_run1.json";
                                const std::string p2 = tmp + "/accept_" + suite + "_m" +
                                                       std::to_string(m) + "_run2.json";
                                std::ofstream(p1, std::ios::binary) << first_text;
                                std::ofstream(p2, std::ios::binary) << rerun;
                                if (first_text != rerun) {
                                    d = "mismatch for " + key;
                                    return false;
                                }
                                ++compared;
                            }
                            d = std::to_string(compared) + " reports byte-identical";
                            return compared > 0;
                        }});

    // The sym/skew variants are inside criterion 2's suite runs; run their
    // dedicated suites too so the reports land in the determinism set.
    bool extras_ok = true;
    for (int m : {2, 3}) {
        extras_ok = extras_ok && run_and_record("sym", m, kSeed) == "PASS";
        extras_ok = extras_ok && run_and_record("skew", m, kSeed) == "PASS";
    }

    int failures = extras_ok ? 0 : 1;
    if (!extras_ok) std::cout << "[FAIL] variant suites (sym/skew, m = 2,3)\n";

    for (auto& c : criteria) {
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool in_budget = secs < c.budget_seconds;
        if (!in_budget) detail += " [over budget]";
        const bool pass = ok && in_budget;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.name << " — " << detail << " ("
                  << secs << " s)\n";
        std::cout.flush();
        if (!pass) ++failures;
    }

    if (failures == 0) std::cout << "acceptance: all criteria passed\n";
    else std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
