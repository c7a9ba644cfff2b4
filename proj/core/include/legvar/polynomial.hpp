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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "legvar/matrix.hpp"
#include "legvar/rational.hpp"

namespace legvar {

/// Variable kinds: entries of the two matrix blocks, plus two auxiliary
/// coordinates ("x") used only by the Grassmannian-slice equation family.
enum class VarKind : uint8_t { A = 0, B = 1, X = 2 };

/// A coordinate variable a[i,j], b[i,j] or x[1,j]; indices are 1-based.
/// Ordering is the coordinate order a11..a1m, a21..amm, b11..bmm (the "x"
/// block sorts after both matrix blocks).
struct VarId {
    VarKind kind;
    uint16_t i, j;

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string to_string() const;
};

inline VarId var_a(int i, int j) { return {VarKind::A, uint16_t(i), uint16_t(j)}; }
inline VarId var_b(int i, int j) { return {VarKind::B, uint16_t(i), uint16_t(j)}; }
inline VarId var_x(int j) { return {VarKind::X, uint16_t(1), uint16_t(j)}; }

/// Monomial: sorted list of (variable, positive exponent) pairs.
struct Monomial {
    std::vector<std::pair<VarId, uint32_t>> factors;

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [v, e] : factors) d += e;
        return d;
    }
    bool is_one() const { return factors.empty(); }
    Monomial times(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order used everywhere a canonical term sequence is needed: higher
/// total degree first; within a degree, the monomial with the larger exponent
/// on the earliest differing variable comes first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals in the coordinates of a
/// fixed ambient size m. No zero coefficients are stored; equality is term-map
/// equality. Serialization follows the term order of MonomialOrder.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() : m_(0) {}
    explicit Polynomial(int m) : m_(m) {}

    static Polynomial constant(int m, const Rational& c);
    static Polynomial variable(int m, VarId v);
    static Polynomial parse(int m, const std::string& text);

    int m() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; the zero polynomial reports 0.
    unsigned degree() const;
    unsigned lowest_degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& mono, const Rational& coeff);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned e) const;

    /// Sum of the terms of minimal total degree; undefined for zero input.
    Polynomial lowest_degree_part() const;

    Polynomial derivative(VarId v) const;

    /// Substitute an exact value for one variable.
    Polynomial substitute(VarId v, const Rational& value) const;

    /// Substitute v -> v + delta for every listed variable (chart translation).
    Polynomial shift(const std::vector<std::pair<VarId, Rational>>& deltas) const;

    /// Swap the a- and b-blocks (the coordinate involution exchanging them).
    Polynomial swap_ab() const;

    /// Evaluate in any commutative ring: `value_of(v)` supplies variable
    /// values, T must be constructible from Rational.
    template <typename T, typename F>
    T evaluate(F&& value_of) const {
        T acc = T(Rational(0));
        for (const auto& [mono, coeff] : terms_) {
            T term = T(coeff);
            bool dead = false;
            for (const auto& [v, e] : mono.factors) {
                T val = value_of(v);
                if (val == T(Rational(0))) { dead = true; break; }
                for (uint32_t k = 0; k < e; ++k) term = term * val;
            }
            if (!dead) acc = acc + term;
        }
        return acc;
    }

    Rational evaluate_rational(const std::function<Rational(VarId)>& value_of) const;

    std::string to_string() const;

private:
    int m_;
    TermMap terms_;
};

template <>
struct RingOne<Polynomial> {
    static Polynomial value() { return Polynomial::constant(0, Rational(1)); }
};

/// The 2m^2 phase-space coordinates in their canonical order.
std::vector<VarId> phase_vars(int m);

/// Gradient of `p` with respect to `vars`, evaluated exactly at `x`.
std::vector<Rational> gradient_at(const Polynomial& p, const std::vector<VarId>& vars,
                                  const std::vector<Rational>& x);

/// Jacobian of a generator list with respect to an explicit variable list.
MatrixQ jacobian_at(const std::vector<Polynomial>& eqs, const std::vector<VarId>& vars,
                    const std::vector<Rational>& x);

/// Jacobian with respect to the full 2m^2 phase coordinates; x must have
/// exactly 2m^2 entries in the canonical order.
MatrixQ jacobian_at(const std::vector<Polynomial>& eqs, const std::vector<Rational>& x);

/// Sum of terms of minimal total degree (operation form of the member).
Polynomial lowest_degree_part(const Polynomial& p);

} // namespace legvar
