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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "legvar/json_io.hpp"
#include "legvar/suites.hpp"

namespace {

// Exit code contract: 0 pass, 1 mathematical failure, 2 usage error,
// 3 membership error, 4 inconclusive.
constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMembership = 3;
constexpr int kExitInconclusive = 4;

void emit(const legvar::Json& j, const std::string& out_path) {
    if (out_path.empty()) std::cout << legvar::dump_json(j);
    else legvar::write_json_file(out_path, j);
}

legvar::EquationSet build_equations(const std::string& family_name_str, int m, int k) {
    using namespace legvar;
    const Family family = family_from_name(family_name_str);
    switch (family) {
        case Family::Y: return equations_Y(m);
        case Family::Xdeg:
            if (k < 0) throw argument_error("Xdeg needs --k");
            return equations_Xdeg(m, k);
        case Family::Xinv: return equations_Xinv(m);
        case Family::XinvSym: return equations_Xinv_sym(m);
        case Family::XinvSkew: return equations_Xinv_skew(m);
        case Family::Gr36Slice:
            if (m != 3) throw argument_error("Gr36Slice is defined at m = 3");
            return equations_gr36_slice();
    }
    throw argument_error("unknown family");
}

} // namespace

int main(int argc, char** argv) {
    using namespace legvar;

    CLI::App app{"exact certificates for matrix Legendrian varieties"};
    app.require_subcommand(1);

    std::string family, point_path, suite, out_path;
    int m = 0, k = -1, l = -1;
    uint64_t seed = 0;
    int verbosity = 0;

    auto* cmd_equations = app.add_subcommand("equations", "emit a generator family as JSON");
    cmd_equations->add_option("--family", family)->required();
    cmd_equations->add_option("--m", m)->required();
    cmd_equations->add_option("--k", k);
    cmd_equations->add_option("--out", out_path);

    auto* cmd_classify = app.add_subcommand("classify", "classify a point file into its stratum");
    cmd_classify->add_option("--point", point_path)->required();
    cmd_classify->add_option("--out", out_path);

    auto* cmd_verify = app.add_subcommand("verify", "run a certificate suite");
    cmd_verify->add_option("--suite", suite)->required();
    cmd_verify->add_option("--m", m)->required();
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--out", out_path);

    auto* cmd_cone = app.add_subcommand("tangent-cone",
                                        "lowest-degree chart equations at a point");
    cmd_cone->add_option("--family", family)->required();
    cmd_cone->add_option("--m", m)->required();
    cmd_cone->add_option("--k", k);
    cmd_cone->add_option("--point", point_path);
    cmd_cone->add_option("--out", out_path);

    app.add_option("--l", l);
    app.add_flag("-v,--verbose", verbosity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_equations->parsed()) {
            emit(equation_set_to_json(build_equations(family, m, k)), out_path);
            return kExitPass;
        }
        if (cmd_classify->parsed()) {
            PhaseVector p = point_from_json(read_json_file(point_path));
            emit(stratum_to_json(classify(p)), out_path);
            return kExitPass;
        }
        if (cmd_cone->parsed()) {
            const EquationSet eqs = build_equations(family, m, k);
            AffineChart chart = point_path.empty()
                                    ? AffineChart::p1_chart(m)
                                    : AffineChart::at_point(
                                          point_from_json(read_json_file(point_path)));
            emit(equation_set_to_json(cone_candidate(eqs, chart)), out_path);
            return kExitPass;
        }
        if (cmd_verify->parsed()) {
            const SuiteResult result = run_suite(suite, m, seed);
            emit(suite_report(result), out_path);
            if (result.any_failed()) return kExitMathFailure;
            if (result.any_inconclusive()) return kExitInconclusive;
            return kExitPass;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const membership_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMembership;
    } catch (const inconclusive_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
