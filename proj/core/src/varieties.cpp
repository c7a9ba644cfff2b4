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

#include "legvar/varieties.hpp"

#include <algorithm>
#include <unordered_map>

#include "legvar/group_action.hpp"
#include "legvar/prng.hpp"

namespace legvar {

std::string family_name(Family f) {
    switch (f) {
        case Family::Y: return "Y";
        case Family::Xdeg: return "Xdeg";
        case Family::Xinv: return "Xinv";
        case Family::XinvSym: return "XinvSym";
        case Family::XinvSkew: return "XinvSkew";
        case Family::Gr36Slice: return "Gr36Slice";
    }
    throw argument_error("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "Y") return Family::Y;
    if (name == "Xdeg") return Family::Xdeg;
    if (name == "Xinv") return Family::Xinv;
    if (name == "XinvSym") return Family::XinvSym;
    if (name == "XinvSkew") return Family::XinvSkew;
    if (name == "Gr36Slice") return Family::Gr36Slice;
    throw argument_error("unknown family: " + name);
}

std::vector<Polynomial> EquationSet::polys() const {
    std::vector<Polynomial> out;
    out.reserve(generators.size());
    for (const auto& [label, p] : generators) out.push_back(p);
    return out;
}

namespace {

std::string subset_label(const std::vector<std::size_t>& idx0) {
    std::string out;
    for (std::size_t t = 0; t < idx0.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(idx0[t] + 1);
    }
    return out;
}

long index_sum_1based(const std::vector<std::size_t>& idx0) {
    long s = 0;
    for (auto i : idx0) s += long(i) + 1;
    return s;
}

Rational pm(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

} // namespace

Matrix<Polynomial> symbolic_matrix(int m, VarKind kind) {
    Matrix<Polynomial> s(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s(i, j) = Polynomial::variable(m, VarId{kind, uint16_t(i + 1), uint16_t(j + 1)});
    return s;
}

Matrix<Polynomial> symbolic_matrix_sym(int m, VarKind kind) {
    Matrix<Polynomial> s(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int a = std::min(i, j), b = std::max(i, j);
            s(i, j) = Polynomial::variable(m, VarId{kind, uint16_t(a + 1), uint16_t(b + 1)});
        }
    return s;
}

Matrix<Polynomial> symbolic_matrix_skew(int m, VarKind kind) {
    const int n = 2 * m;
    Matrix<Polynomial> s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) { s(i, j) = Polynomial(n); continue; }
            int a = std::min(i, j), b = std::max(i, j);
            Polynomial v = Polynomial::variable(n, VarId{kind, uint16_t(a + 1), uint16_t(b + 1)});
            s(i, j) = (i < j) ? v : -v;
        }
    return s;
}

EquationSet equations_Y(int m) {
    if (m < 2) throw argument_error("Y needs m >= 2");
    EquationSet set;
    set.family = Family::Y;
    set.m = m;
    set.vars = phase_vars(m);

    auto row_prod = [m](int i, int j) { // sum_k a[i,k] b[j,k]
        Polynomial p(m);
        for (int k = 1; k <= m; ++k)
            p += Polynomial::variable(m, var_a(i, k)) * Polynomial::variable(m, var_b(j, k));
        return p;
    };
    auto col_prod = [m](int i, int j) { // sum_k a[k,i] b[k,j]
        Polynomial p(m);
        for (int k = 1; k <= m; ++k)
            p += Polynomial::variable(m, var_a(k, i)) * Polynomial::variable(m, var_b(k, j));
        return p;
    };

    for (int i = 2; i <= m; ++i)
        set.generators.emplace_back("3a[" + std::to_string(i) + "]",
                                    row_prod(i, i) - row_prod(1, 1));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j)
                set.generators.emplace_back(
                    "3b[" + std::to_string(i) + "," + std::to_string(j) + "]", row_prod(i, j));
    for (int i = 2; i <= m; ++i)
        set.generators.emplace_back("3c[" + std::to_string(i) + "]",
                                    col_prod(i, i) - col_prod(1, 1));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j)
                set.generators.emplace_back(
                    "3d[" + std::to_string(i) + "," + std::to_string(j) + "]", col_prod(i, j));
    return set;
}

EquationSet equations_Xdeg(int m, int k) {
    if (m < 2) throw argument_error("Xdeg needs m >= 2");
    if (k < 0 || k > m) throw argument_error("Xdeg needs 0 <= k <= m");
    EquationSet set;
    set.family = Family::Xdeg;
    set.m = m;
    set.k = k;
    set.vars = phase_vars(m);

    const auto sa = symbolic_matrix(m, VarKind::A);
    const auto sb = symbolic_matrix(m, VarKind::B);
    const auto abt = sa * sb.transpose();
    const auto bta = sb.transpose() * sa;

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            set.generators.emplace_back(
                "ab[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", abt(i, j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            set.generators.emplace_back(
                "ba[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", bta(i, j));

    auto add_minors = [&set](const Matrix<Polynomial>& s, int size, const std::string& tag) {
        if (size > int(s.rows())) return; // rank bound is vacuous
        for (const auto& rows : subsets(s.rows(), std::size_t(size)))
            for (const auto& cols : subsets(s.cols(), std::size_t(size)))
                set.generators.emplace_back(
                    tag + "[" + subset_label(rows) + "|" + subset_label(cols) + "]",
                    det_expansion(s.select(rows, cols)));
    };
    add_minors(sa, k + 1, "minorA");
    add_minors(sb, m - k + 1, "minorB");
    return set;
}

EquationSet equations_Xinv(int m) {
    if (m < 2) throw argument_error("Xinv needs m >= 2");
    EquationSet set;
    set.family = Family::Xinv;
    set.m = m;
    set.vars = phase_vars(m);

    for (auto& gen : equations_Y(m).generators) set.generators.push_back(std::move(gen));

    const auto sa = symbolic_matrix(m, VarKind::A);
    const auto sb = symbolic_matrix(m, VarKind::B);

    // det(A del i,j) and det(B del k,l), cached for all single deletions.
    std::vector<std::vector<Polynomial>> det_a(m, std::vector<Polynomial>(m));
    std::vector<std::vector<Polynomial>> det_b(m, std::vector<Polynomial>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            det_a[i][j] = det_expansion(delete_rows_cols(sa, {std::size_t(i)}, {std::size_t(j)}));
            det_b[i][j] = det_expansion(delete_rows_cols(sb, {std::size_t(i)}, {std::size_t(j)}));
        }

    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l) {
                    Polynomial p = det_a[i - 1][j - 1] * Polynomial::variable(m, var_a(k, l));
                    Polynomial q = Polynomial::variable(m, var_b(i, j)) * det_b[k - 1][l - 1];
                    q *= pm(i + j + k + l);
                    set.generators.emplace_back("eq5[" + std::to_string(i) + "," +
                                                    std::to_string(j) + "|" + std::to_string(k) +
                                                    "," + std::to_string(l) + "]",
                                                p - q);
                }

    if (m % 2 == 0) {
        const std::size_t half = std::size_t(m) / 2;
        for (const auto& rows : subsets(std::size_t(m), half))
            for (const auto& cols : subsets(std::size_t(m), half)) {
                auto rows_c = complement_indices(m, rows);
                auto cols_c = complement_indices(m, cols);
                Polynomial p = det_expansion(delete_rows_cols(sa, rows, cols));
                Polynomial q = det_expansion(delete_rows_cols(sb, rows_c, cols_c));
                q *= pm(index_sum_1based(rows) + index_sum_1based(cols));
                set.generators.emplace_back(
                    "cor35a[" + subset_label(rows) + "|" + subset_label(cols) + "]", p - q);
            }
    }

    // Squared-minor equations, homogenized with the exponent m-2k that makes
    // both sides degree 2(m-k).
    Polynomial s11(m);
    for (int t = 1; t <= m; ++t)
        s11 += Polynomial::variable(m, var_a(1, t)) * Polynomial::variable(m, var_b(1, t));
    for (int k = 0; 2 * k < m; ++k) {
        const Polynomial s_pow = s11.pow(unsigned(m - 2 * k));
        for (const auto& rows : subsets(std::size_t(m), std::size_t(k)))
            for (const auto& cols : subsets(std::size_t(m), std::size_t(k))) {
                auto rows_c = complement_indices(m, rows);
                auto cols_c = complement_indices(m, cols);
                Polynomial p = det_expansion(delete_rows_cols(sa, rows, cols));
                Polynomial q = det_expansion(delete_rows_cols(sb, rows_c, cols_c));
                set.generators.emplace_back("cor35b[" + std::to_string(k) + "|" +
                                                subset_label(rows) + "|" + subset_label(cols) +
                                                "]",
                                            p * p - q * q * s_pow);
            }
    }
    return set;
}

std::vector<VarId> sym_vars(int m) {
    std::vector<VarId> vars;
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) vars.push_back(var_a(i, j));
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) vars.push_back(var_b(i, j));
    return vars;
}

std::vector<VarId> skew_vars(int m) {
    const int n = 2 * m;
    std::vector<VarId> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) vars.push_back(var_a(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) vars.push_back(var_b(i, j));
    return vars;
}

EquationSet equations_Xinv_sym(int m) {
    if (m < 2) throw argument_error("XinvSym needs m >= 2");
    EquationSet set;
    set.family = Family::XinvSym;
    set.m = m;
    set.vars = sym_vars(m);

    const auto sa = symbolic_matrix_sym(m, VarKind::A);
    const auto sb = symbolic_matrix_sym(m, VarKind::B);
    const auto ab = sa * sb; // B symmetric, so A B^T = A B

    for (int i = 2; i <= m; ++i)
        set.generators.emplace_back("sym-ab-diag[" + std::to_string(i) + "]",
                                    ab(i - 1, i - 1) - ab(0, 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j)
                set.generators.emplace_back(
                    "sym-ab[" + std::to_string(i) + "," + std::to_string(j) + "]",
                    ab(i - 1, j - 1));

    std::vector<std::vector<Polynomial>> det_a(m, std::vector<Polynomial>(m));
    std::vector<std::vector<Polynomial>> det_b(m, std::vector<Polynomial>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            det_a[i][j] = det_expansion(delete_rows_cols(sa, {std::size_t(i)}, {std::size_t(j)}));
            det_b[i][j] = det_expansion(delete_rows_cols(sb, {std::size_t(i)}, {std::size_t(j)}));
        }
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int l = k; l <= m; ++l) {
                    Polynomial p = det_a[i - 1][j - 1] * sa(k - 1, l - 1);
                    Polynomial q = sb(i - 1, j - 1) * det_b[k - 1][l - 1];
                    q *= pm(i + j + k + l);
                    set.generators.emplace_back("sym-eq5[" + std::to_string(i) + "," +
                                                    std::to_string(j) + "|" + std::to_string(k) +
                                                    "," + std::to_string(l) + "]",
                                                p - q);
                }

    if (m % 2 == 0) {
        const std::size_t half = std::size_t(m) / 2;
        for (const auto& rows : subsets(std::size_t(m), half))
            for (const auto& cols : subsets(std::size_t(m), half)) {
                auto rows_c = complement_indices(m, rows);
                auto cols_c = complement_indices(m, cols);
                Polynomial p = det_expansion(delete_rows_cols(sa, rows, cols));
                Polynomial q = det_expansion(delete_rows_cols(sb, rows_c, cols_c));
                q *= pm(index_sum_1based(rows) + index_sum_1based(cols));
                Polynomial gen = p - q;
                if (gen.is_zero()) continue; // symmetric duplicates can cancel
                set.generators.emplace_back(
                    "sym-cor35a[" + subset_label(rows) + "|" + subset_label(cols) + "]", gen);
            }
    }

    Polynomial s11 = ab(0, 0);
    for (int k = 0; 2 * k < m; ++k) {
        const Polynomial s_pow = s11.pow(unsigned(m - 2 * k));
        for (const auto& rows : subsets(std::size_t(m), std::size_t(k)))
            for (const auto& cols : subsets(std::size_t(m), std::size_t(k))) {
                auto rows_c = complement_indices(m, rows);
                auto cols_c = complement_indices(m, cols);
                Polynomial p = det_expansion(delete_rows_cols(sa, rows, cols));
                Polynomial q = det_expansion(delete_rows_cols(sb, rows_c, cols_c));
                Polynomial gen = p * p - q * q * s_pow;
                if (gen.is_zero()) continue;
                set.generators.emplace_back("sym-cor35b[" + std::to_string(k) + "|" +
                                                subset_label(rows) + "|" + subset_label(cols) +
                                                "]",
                                            gen);
            }
    }
    return set;
}

EquationSet equations_Xinv_skew(int m) {
    if (m < 2) throw argument_error("XinvSkew needs m >= 2");
    const int n = 2 * m;
    EquationSet set;
    set.family = Family::XinvSkew;
    set.m = m;
    set.vars = skew_vars(m);

    const auto sa = symbolic_matrix_skew(m, VarKind::A);
    const auto sb = symbolic_matrix_skew(m, VarKind::B);
    const auto abt = sa * sb.transpose();
    const auto bta = sb.transpose() * sa;

    auto add_quadrics = [&set](const Matrix<Polynomial>& prod, const std::string& tag) {
        const int n_ = int(prod.rows());
        for (int i = 2; i <= n_; ++i) {
            Polynomial gen = prod(i - 1, i - 1) - prod(0, 0);
            if (!gen.is_zero())
                set.generators.emplace_back(tag + "-diag[" + std::to_string(i) + "]", gen);
        }
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                if (i == j) continue;
                if (prod(i - 1, j - 1).is_zero()) continue;
                set.generators.emplace_back(
                    tag + "[" + std::to_string(i) + "," + std::to_string(j) + "]",
                    prod(i - 1, j - 1));
            }
    };
    add_quadrics(abt, "skew-ab");
    add_quadrics(bta, "skew-ba");

    const SkewSignPattern signs = calibrate_skew_signs(m);
    const Rational eps(signs.eps);

    // Sub-Pfaffians pf(A del {i,j}) for all i < j.
    std::map<std::pair<int, int>, Polynomial> pf_a, pf_b;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<std::size_t> del = {std::size_t(i - 1), std::size_t(j - 1)};
            pf_a[{i, j}] = pfaffian_expansion(delete_rows_cols(sa, del, del));
            pf_b[{i, j}] = pfaffian_expansion(delete_rows_cols(sb, del, del));
        }

    if (m == 2) {
        // pf(A del {i,j}) is a single entry; the relation is linear.
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Polynomial gen = Polynomial::variable(n, var_b(i, j)) -
                                 Rational(signs.sign.at({i, j})) * pf_a[{i, j}];
                set.generators.emplace_back(
                    "skew-lin[" + std::to_string(i) + "," + std::to_string(j) + "]", gen);
            }
    }

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const Rational sigma =
                        Rational(signs.sign.at({i, j})) * Rational(signs.sign.at({k, l})) * eps;
                    Polynomial p = pf_a[{i, j}] * Polynomial::variable(n, var_a(k, l));
                    Polynomial q = Polynomial::variable(n, var_b(i, j)) * pf_b[{k, l}];
                    q *= sigma;
                    Polynomial gen = p - q;
                    if (gen.is_zero()) continue;
                    set.generators.emplace_back("skew-pf[" + std::to_string(i) + "," +
                                                    std::to_string(j) + "|" + std::to_string(k) +
                                                    "," + std::to_string(l) + "]",
                                                gen);
                }

    Polynomial s11 = abt(0, 0);
    const Polynomial s_pow = s11.pow(unsigned(m >= 2 ? m - 2 : 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Polynomial b_ij = Polynomial::variable(n, var_b(i, j));
            Polynomial gen = pf_a[{i, j}] * pf_a[{i, j}] - b_ij * b_ij * s_pow;
            if (gen.is_zero()) continue;
            set.generators.emplace_back(
                "skew-sq[" + std::to_string(i) + "," + std::to_string(j) + "]", gen);
        }
    return set;
}

std::vector<Rational> flatten_sym(const PhaseVector& p) {
    const int m = p.m();
    std::vector<Rational> out;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) out.push_back(p.A(i, j));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) out.push_back(p.B(i, j));
    return out;
}

std::vector<Rational> flatten_skew(const PhaseVector& p) {
    const int n = p.m();
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(p.A(i, j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(p.B(i, j));
    return out;
}

PhaseVector unflatten_sym(int m, const std::vector<Rational>& coords) {
    const std::size_t s = std::size_t(m) * (m + 1) / 2;
    if (coords.size() != 2 * s) throw dimension_error("unflatten_sym coordinate count");
    MatrixQ a(m, m), b(m, m);
    std::size_t k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) { a(i, j) = coords[k]; a(j, i) = coords[k]; ++k; }
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) { b(i, j) = coords[k]; b(j, i) = coords[k]; ++k; }
    return PhaseVector(std::move(a), std::move(b));
}

PhaseVector unflatten_skew(int m, const std::vector<Rational>& coords) {
    const int n = 2 * m;
    const std::size_t s = std::size_t(n) * (n - 1) / 2;
    if (coords.size() != 2 * s) throw dimension_error("unflatten_skew coordinate count");
    MatrixQ a(n, n), b(n, n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) { a(i, j) = coords[k]; a(j, i) = -coords[k]; ++k; }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) { b(i, j) = coords[k]; b(j, i) = -coords[k]; ++k; }
    return PhaseVector(std::move(a), std::move(b));
}

std::vector<Rational> coords_for(const EquationSet& set, const PhaseVector& p) {
    switch (set.family) {
        case Family::XinvSym: return flatten_sym(p);
        case Family::XinvSkew: return flatten_skew(p);
        case Family::Gr36Slice:
            throw argument_error("Gr36Slice points are 20-vectors, not matrix pairs");
        default: return p.flatten();
    }
}

std::vector<Rational> evaluate_at_coords(const EquationSet& set,
                                         const std::vector<Rational>& coords) {
    if (coords.size() != set.vars.size())
        throw dimension_error("coordinate count does not match the equation set");
    std::map<VarId, Rational> val;
    for (std::size_t i = 0; i < set.vars.size(); ++i) val[set.vars[i]] = coords[i];
    auto lookup = [&val](VarId v) {
        auto it = val.find(v);
        if (it == val.end()) throw dimension_error("generator variable outside the universe");
        return it->second;
    };
    std::vector<Rational> out;
    out.reserve(set.generators.size());
    for (const auto& [label, p] : set.generators) out.push_back(p.evaluate_rational(lookup));
    return out;
}

bool vanishes_at_coords(const EquationSet& set, const std::vector<Rational>& coords) {
    for (const auto& v : evaluate_at_coords(set, coords))
        if (!v.is_zero()) return false;
    return true;
}

bool vanishes_at(const EquationSet& set, const PhaseVector& p) {
    return vanishes_at_coords(set, coords_for(set, p));
}

PhaseVector sample_inv(int m, uint64_t seed) {
    MatrixQ g = random_sl(m, seed);
    return PhaseVector(g, inverse(g).transpose());
}

PhaseVector deg_base_point(int m, int k, int l) {
    if (k < 0 || l < 0 || k + l > m)
        throw argument_error("DEG stratum (k,l) is empty: need k,l >= 0, k+l <= m");
    if (k + l == 0) throw argument_error("DEG stratum (0,0) is empty in projective space");
    MatrixQ a(m, m), b(m, m);
    if (k == 1 && l == 0) {
        a(m - 1, m - 1) = Rational(1); // distinguished closed-orbit representative
    } else if (k == 0 && l == 1) {
        b(m - 1, m - 1) = Rational(1);
    } else {
        for (int i = 0; i < k; ++i) a(i, i) = Rational(1);
        for (int i = k; i < k + l; ++i) b(i, i) = Rational(1);
    }
    return PhaseVector(std::move(a), std::move(b));
}

PhaseVector sample_deg(int m, int k, int l, uint64_t seed) {
    PhaseVector base = deg_base_point(m, k, l);
    GroupElement e = random_gl_pair(m, seed);
    return act(e, base);
}

PhaseVector sample_inv_sym(int m, uint64_t seed) {
    MatrixQ l = random_sl(m, seed);
    MatrixQ a = l.transpose() * l;
    return PhaseVector(a, inverse(a));
}

MatrixQ standard_skew_form(int m) {
    MatrixQ j0(2 * m, 2 * m);
    for (int b = 0; b < m; ++b) {
        j0(2 * b, 2 * b + 1) = Rational(1);
        j0(2 * b + 1, 2 * b) = Rational(-1);
    }
    return j0;
}

PhaseVector sample_inv_skew(int m, uint64_t seed) {
    MatrixQ g = random_sl(2 * m, seed);
    MatrixQ a = g.transpose() * standard_skew_form(m) * g;
    return PhaseVector(a, -inverse(a));
}

PhaseVector segre_param(const std::array<Rational, 2>& mu, const std::array<Rational, 2>& nu,
                        const std::array<Rational, 2>& xi) {
    auto nonzero = [](const std::array<Rational, 2>& p) {
        return !(p[0].is_zero() && p[1].is_zero());
    };
    if (!nonzero(mu) || !nonzero(nu) || !nonzero(xi))
        throw argument_error("segre_param needs nonzero parameter pairs");
    MatrixQ a(2, 2), b(2, 2);
    a(0, 0) = xi[0] * mu[0] * nu[0];
    a(0, 1) = xi[0] * mu[0] * nu[1];
    a(1, 0) = xi[0] * mu[1] * nu[0];
    a(1, 1) = xi[0] * mu[1] * nu[1];
    b(0, 0) = xi[1] * mu[1] * nu[1];
    b(0, 1) = -(xi[1] * mu[1] * nu[0]);
    b(1, 0) = -(xi[1] * mu[0] * nu[1]);
    b(1, 1) = xi[1] * mu[0] * nu[0];
    return PhaseVector(std::move(a), std::move(b));
}

// --- Grassmannian lift -------------------------------------------------------

namespace {

MatrixQ cofactor_matrix(const MatrixQ& g) {
    const int n = int(g.rows());
    MatrixQ c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c(i, j) = pm(i + j) *
                      minor_deleted(g, {std::size_t(i)}, {std::size_t(j)});
    return c;
}

struct Gr36Coordinates {
    // For each lex 3-subset S of {0..5}: the lifted coordinate p_S equals
    // sign[S] times the paper-ordered variable var[S].
    std::vector<std::vector<std::size_t>> sets;
    std::vector<VarId> var;
    std::vector<int> sign;
    std::map<std::vector<std::size_t>, std::size_t> index_of;
};

const Gr36Coordinates& gr36_coordinates() {
    static const Gr36Coordinates table = [] {
        Gr36Coordinates t;
        const int m = 3;
        // Symbolic [Id | G] with G the generic 3x3 a-matrix.
        Matrix<Polynomial> big(3, 6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                big(i, j) = Polynomial::constant(m, Rational(i == j ? 1 : 0));
        const auto sa = symbolic_matrix(m, VarKind::A);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) big(i, 3 + j) = sa(i, j);

        // Reference polynomials for matching: cofactors and the determinant.
        std::vector<std::vector<Polynomial>> cof(3, std::vector<Polynomial>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                cof[i][j] = pm(i + j) * det_expansion(delete_rows_cols(
                                            sa, {std::size_t(i)}, {std::size_t(j)}));
        const Polynomial detg = det_expansion(sa);

        t.sets = subsets(6, 3);
        const std::vector<std::size_t> all_rows = {0, 1, 2};
        for (std::size_t s = 0; s < t.sets.size(); ++s) {
            const auto& cols = t.sets[s];
            t.index_of[cols] = s;
            Polynomial p = det_expansion(big.select(all_rows, cols));
            VarId v{};
            int sign = 0;
            if (p.degree() == 0) {
                v = var_x(1);
                sign = (p == Polynomial::constant(m, Rational(1))) ? 1 : -1;
            } else if (p.degree() == 1 && p.term_count() == 1) {
                const auto& [mono, c] = *p.terms().begin();
                v = mono.factors[0].first;
                sign = c.sign();
            } else if (p.degree() == 3) {
                v = var_x(2);
                sign = (p == detg) ? 1 : -1;
            } else {
                for (int i = 0; i < 3 && sign == 0; ++i)
                    for (int j = 0; j < 3 && sign == 0; ++j) {
                        if (p == cof[i][j]) { v = var_b(i + 1, j + 1); sign = 1; }
                        else if (p == -cof[i][j]) { v = var_b(i + 1, j + 1); sign = -1; }
                    }
            }
            if (sign == 0) throw error("Gr(3,6) coordinate correspondence failed");
            t.var.push_back(v);
            t.sign.push_back(sign);
        }
        return t;
    }();
    return table;
}

} // namespace

EquationSet equations_gr36_slice() {
    const int m = 3;
    EquationSet set;
    set.family = Family::Gr36Slice;
    set.m = m;
    set.vars.push_back(var_x(1));
    for (const auto& v : phase_vars(m)) set.vars.push_back(v);
    set.vars.push_back(var_x(2));

    set.generators.emplace_back(
        "slice", Polynomial::variable(m, var_x(1)) - Polynomial::variable(m, var_x(2)));

    const auto& table = gr36_coordinates();
    auto coord_poly = [&](std::vector<std::size_t> s, int extra_sign) {
        const std::size_t idx = table.index_of.at(s);
        Polynomial p = Polynomial::variable(m, table.var[idx]);
        p *= Rational(extra_sign * table.sign[idx]);
        return p;
    };

    // Exchange relations: for a 2-subset {a1,a2} and a 4-subset {b1..b4},
    // sum_t (-1)^t [a1 a2 b_t][b \ b_t] vanishes on the Grassmannian.
    std::map<std::string, bool> seen;
    const auto pairs = subsets(6, 2);
    const auto quads = subsets(6, 4);
    for (const auto& ab : pairs)
        for (const auto& bs : quads) {
            Polynomial rel(m);
            for (std::size_t tpos = 0; tpos < 4; ++tpos) {
                const std::size_t bt = bs[tpos];
                if (bt == ab[0] || bt == ab[1]) continue;
                // sort (a1, a2, bt) and track the permutation sign
                std::vector<std::size_t> s1 = {ab[0], ab[1], bt};
                int sign1 = 1;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2 - x; ++y)
                        if (s1[y] > s1[y + 1]) { std::swap(s1[y], s1[y + 1]); sign1 = -sign1; }
                std::vector<std::size_t> s2;
                for (const auto& v : bs)
                    if (v != bt) s2.push_back(v);
                int term_sign = (tpos % 2 == 0 ? 1 : -1) * sign1;
                rel += coord_poly(s1, term_sign) * coord_poly(s2, 1);
            }
            if (rel.is_zero()) continue;
            // Normalize sign and drop duplicates.
            if (rel.terms().begin()->second.sign() < 0) rel = -rel;
            const std::string key = rel.to_string();
            if (seen.count(key)) continue;
            seen[key] = true;
            set.generators.emplace_back(
                "plucker[" + subset_label(ab) + "|" + subset_label(bs) + "]", rel);
        }
    return set;
}

std::vector<Rational> gr36_lift(const MatrixQ& g) {
    if (g.rows() != 3 || g.cols() != 3) throw dimension_error("gr36_lift needs a 3x3 matrix");
    std::vector<Rational> v;
    v.reserve(20);
    v.push_back(Rational(1));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.push_back(g(i, j));
    const MatrixQ cof = cofactor_matrix(g);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.push_back(cof(i, j));
    v.push_back(determinant(g));
    return v;
}

PhaseVector gr36_project(const std::vector<Rational>& lift) {
    if (lift.size() != 20) throw dimension_error("gr36_project needs a 20-vector");
    std::vector<Rational> mid(lift.begin() + 1, lift.end() - 1);
    return PhaseVector::unflatten(3, mid);
}

SkewSignPattern calibrate_skew_signs(int m) {
    if (m < 1) throw argument_error("skew calibration needs m >= 1");
    const int n = 2 * m;
    SkewSignPattern pat;
    pat.m = m;
    bool eps_set = false;
    const int samples = 20;
    for (int s = 0; s < samples; ++s) {
        MatrixQ g = random_sl(n, 0x5CE5ULL + 977 * uint64_t(s) + uint64_t(m));
        MatrixQ a = g.transpose() * standard_skew_form(m) * g; // pf = det(g) pf(J0) = 1
        MatrixQ b = -inverse(a);
        const Rational pf_b = pfaffian(b);
        if (pf_b.abs() != Rational(1))
            throw error("skew calibration: pf(-A^-1) not a unit on the pf=1 family");
        const int eps = pf_b.sign();
        if (!eps_set) { pat.eps = eps; eps_set = true; }
        else if (pat.eps != eps) throw error("skew calibration: inconsistent eps");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                std::vector<std::size_t> del = {std::size_t(i - 1), std::size_t(j - 1)};
                const Rational pf_sub = pfaffian(delete_rows_cols(a, del, del));
                if (pf_sub.is_zero()) continue;
                const Rational ratio = b(i - 1, j - 1) / pf_sub;
                if (ratio.abs() != Rational(1))
                    throw error("skew calibration: non-unit adjugate ratio");
                auto key = std::make_pair(i, j);
                auto it = pat.sign.find(key);
                if (it == pat.sign.end()) pat.sign[key] = ratio.sign();
                else if (it->second != ratio.sign())
                    throw error("skew calibration: inconsistent sign pattern");
            }
    }
    const std::size_t expected = std::size_t(n) * (n - 1) / 2;
    if (pat.sign.size() != expected)
        throw error("skew calibration: pattern incomplete after sampling");
    return pat;
}

} // namespace legvar
