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

#include "legvar/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace legvar {

std::string VarId::to_string() const {
    const char* name = kind == VarKind::A ? "a" : kind == VarKind::B ? "b" : "x";
    return std::string(name) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    std::size_t p = 0, q = 0;
    while (p < factors.size() && q < o.factors.size()) {
        if (factors[p].first < o.factors[q].first) r.factors.push_back(factors[p++]);
        else if (o.factors[q].first < factors[p].first) r.factors.push_back(o.factors[q++]);
        else {
            r.factors.emplace_back(factors[p].first, factors[p].second + o.factors[q].second);
            ++p; ++q;
        }
    }
    for (; p < factors.size(); ++p) r.factors.push_back(factors[p]);
    for (; q < o.factors.size(); ++q) r.factors.push_back(o.factors[q]);
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // Compare exponent sequences along the variable order.
    std::size_t p = 0, q = 0;
    while (p < a.factors.size() && q < b.factors.size()) {
        const auto& [va, ea] = a.factors[p];
        const auto& [vb, eb] = b.factors[q];
        if (va < vb) return true;        // a has positive exponent where b has zero
        if (vb < va) return false;
        if (ea != eb) return ea > eb;
        ++p; ++q;
    }
    if (p < a.factors.size()) return true;
    return false;
}

Polynomial Polynomial::constant(int m, const Rational& c) {
    Polynomial p(m);
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(int m, VarId v) {
    if (v.kind == VarKind::X) {
        if (v.i != 1 || v.j < 1 || v.j > 2)
            throw argument_error("auxiliary variable out of range");
    } else if (v.i < 1 || v.j < 1 || int(v.i) > m || int(v.j) > m) {
        throw argument_error("variable index out of range for m=" + std::to_string(m));
    }
    Polynomial p(m);
    Monomial mono;
    mono.factors.emplace_back(v, 1);
    p.terms_.emplace(std::move(mono), Rational(1));
    return p;
}

unsigned Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned Polynomial::lowest_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || degree() == lowest_degree();
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(mono, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(m_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (m_ == 0) m_ = o.m_;
    else if (o.m_ != 0 && o.m_ != m_) throw dimension_error("polynomial size mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (m_ == 0) m_ = o.m_;
    else if (o.m_ != 0 && o.m_ != m_) throw dimension_error("polynomial size mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.m_ != 0 && b.m_ != 0 && a.m_ != b.m_)
        throw dimension_error("polynomial size mismatch");
    Polynomial r(a.m_ ? a.m_ : b.m_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::vector<std::pair<Monomial, Rational>> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            prods.emplace_back(ma.times(mb), ca * cb);
    MonomialOrder cmp;
    std::sort(prods.begin(), prods.end(),
              [&cmp](const auto& x, const auto& y) { return cmp(x.first, y.first); });
    // Merge equal monomials.
    for (std::size_t k = 0; k < prods.size();) {
        Monomial mono = std::move(prods[k].first);
        Rational c = prods[k].second;
        std::size_t j = k + 1;
        while (j < prods.size() && prods[j].first == mono) {
            c += prods[j].second;
            ++j;
        }
        if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), std::move(mono), c);
        k = j;
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(m_, Rational(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

Polynomial Polynomial::lowest_degree_part() const {
    if (terms_.empty()) throw undefined_input_error("lowest_degree_part of zero polynomial");
    const unsigned d = lowest_degree();
    Polynomial r(m_);
    for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.degree() == d; ++it)
        r.terms_.emplace(it->first, it->second);
    return r;
}

Polynomial Polynomial::derivative(VarId v) const {
    Polynomial r(m_);
    for (const auto& [mono, c] : terms_) {
        for (std::size_t k = 0; k < mono.factors.size(); ++k) {
            if (!(mono.factors[k].first == v)) continue;
            Monomial d = mono;
            const uint32_t e = d.factors[k].second;
            if (e == 1) d.factors.erase(d.factors.begin() + k);
            else d.factors[k].second = e - 1;
            r.add_term(d, c * Rational(long(e)));
            break;
        }
    }
    return r;
}

Polynomial Polynomial::substitute(VarId v, const Rational& value) const {
    Polynomial r(m_);
    for (const auto& [mono, c] : terms_) {
        Rational coeff = c;
        Monomial rest;
        rest.factors.reserve(mono.factors.size());
        for (const auto& [w, e] : mono.factors) {
            if (w == v) coeff *= value.pow(long(e));
            else rest.factors.emplace_back(w, e);
        }
        r.add_term(rest, coeff);
    }
    return r;
}

Polynomial Polynomial::shift(const std::vector<std::pair<VarId, Rational>>& deltas) const {
    std::map<VarId, Rational> delta;
    for (const auto& [v, d] : deltas)
        if (!d.is_zero()) delta[v] = d;
    if (delta.empty()) return *this;
    Polynomial r(m_);
    for (const auto& [mono, c] : terms_) {
        Polynomial term = Polynomial::constant(m_, c);
        for (const auto& [v, e] : mono.factors) {
            auto it = delta.find(v);
            Polynomial base = Polynomial::variable(m_, v);
            if (it != delta.end()) base += Polynomial::constant(m_, it->second);
            term = term * base.pow(e);
        }
        r += term;
    }
    return r;
}

Polynomial Polynomial::swap_ab() const {
    Polynomial r(m_);
    for (const auto& [mono, c] : terms_) {
        Monomial sw;
        sw.factors.reserve(mono.factors.size());
        for (auto [v, e] : mono.factors) {
            if (v.kind == VarKind::A) v.kind = VarKind::B;
            else if (v.kind == VarKind::B) v.kind = VarKind::A;
            sw.factors.emplace_back(v, e);
        }
        std::sort(sw.factors.begin(), sw.factors.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        r.add_term(sw, c);
    }
    return r;
}

Rational Polynomial::evaluate_rational(const std::function<Rational(VarId)>& value_of) const {
    Rational acc(0);
    for (const auto& [mono, c] : terms_) {
        Rational term = c;
        bool dead = false;
        for (const auto& [v, e] : mono.factors) {
            const Rational val = value_of(v);
            if (val.is_zero()) { dead = true; break; }
            term *= val.pow(long(e));
        }
        if (!dead) acc += term;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += c.abs().to_string();
        for (const auto& [v, e] : mono.factors) {
            out += "*" + v.to_string();
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of polynomial text");
        return s[pos];
    }
    char take() {
        char c = peek();
        ++pos;
        return c;
    }
    void expect(char c) {
        if (take() != c)
            throw parse_error(std::string("expected '") + c + "' in polynomial text");
    }
    unsigned long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer in polynomial text");
        return std::stoul(s.substr(start, pos - start));
    }
};

} // namespace

Polynomial Polynomial::parse(int m, const std::string& text) {
    Cursor cur{text};
    Polynomial out(m);
    if (cur.done()) throw parse_error("empty polynomial text");
    if (cur.peek() == '0') {
        std::size_t save = cur.pos;
        cur.take();
        if (cur.done()) return out;
        cur.pos = save;
    }
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (!first) {
            char op = cur.take();
            if (op == '-') sign = -1;
            else if (op != '+') throw parse_error("expected '+' or '-' between terms");
        } else if (cur.peek() == '-') {
            cur.take();
            sign = -1;
        }
        first = false;

        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            mpz_class num(cur.integer());
            mpz_class den(1);
            if (!cur.done() && cur.peek() == '/') {
                cur.take();
                den = mpz_class(cur.integer());
            }
            coeff = Rational(num, den);
            saw_coeff = true;
        }
        Monomial mono;
        bool expect_factor = !saw_coeff;
        while (true) {
            if (!expect_factor) {
                if (cur.done() || cur.peek() != '*') break;
                cur.take();
            }
            expect_factor = false;
            char name = cur.take();
            VarKind kind;
            if (name == 'a') kind = VarKind::A;
            else if (name == 'b') kind = VarKind::B;
            else if (name == 'x') kind = VarKind::X;
            else throw parse_error("expected variable name a/b/x");
            cur.expect('[');
            unsigned long i = cur.integer();
            cur.expect(',');
            unsigned long j = cur.integer();
            cur.expect(']');
            uint32_t e = 1;
            if (!cur.done() && cur.peek() == '^') {
                cur.take();
                e = static_cast<uint32_t>(cur.integer());
                if (e == 0) throw parse_error("zero exponent not allowed");
            }
            VarId v{kind, uint16_t(i), uint16_t(j)};
            // Validates the index range.
            (void)Polynomial::variable(m, v);
            Monomial f;
            f.factors.emplace_back(v, e);
            mono = mono.times(f);
        }
        if (sign < 0) coeff = -coeff;
        out.add_term(mono, coeff);
    }
    return out;
}

std::vector<VarId> phase_vars(int m) {
    std::vector<VarId> vars;
    vars.reserve(2 * m * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) vars.push_back(var_a(i, j));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) vars.push_back(var_b(i, j));
    return vars;
}

std::vector<Rational> gradient_at(const Polynomial& p, const std::vector<VarId>& vars,
                                  const std::vector<Rational>& x) {
    if (vars.size() != x.size()) throw dimension_error("gradient coordinate mismatch");
    std::map<VarId, std::size_t> pos;
    for (std::size_t k = 0; k < vars.size(); ++k) pos[vars[k]] = k;

    std::vector<Rational> grad(vars.size(), Rational(0));
    for (const auto& [mono, c] : p.terms()) {
        const std::size_t n = mono.factors.size();
        if (n == 0) continue;
        std::vector<Rational> val(n);
        std::vector<std::size_t> at(n);
        for (std::size_t k = 0; k < n; ++k) {
            auto it = pos.find(mono.factors[k].first);
            if (it == pos.end())
                throw dimension_error("polynomial uses a variable outside the chart");
            at[k] = it->second;
            val[k] = x[it->second];
        }
        // prefix[k] = prod_{t<k} val[t]^e[t], suffix analogous.
        std::vector<Rational> prefix(n + 1, Rational(1)), suffix(n + 1, Rational(1));
        for (std::size_t k = 0; k < n; ++k)
            prefix[k + 1] = prefix[k] * val[k].pow(long(mono.factors[k].second));
        for (std::size_t k = n; k-- > 0;)
            suffix[k] = suffix[k + 1] * val[k].pow(long(mono.factors[k].second));
        for (std::size_t k = 0; k < n; ++k) {
            const uint32_t e = mono.factors[k].second;
            Rational d = c * Rational(long(e)) * prefix[k] * suffix[k + 1];
            if (e > 1) d *= val[k].pow(long(e - 1));
            grad[at[k]] += d;
        }
    }
    return grad;
}

MatrixQ jacobian_at(const std::vector<Polynomial>& eqs, const std::vector<VarId>& vars,
                    const std::vector<Rational>& x) {
    MatrixQ jac(eqs.size(), vars.size());
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        auto grad = gradient_at(eqs[r], vars, x);
        for (std::size_t c = 0; c < vars.size(); ++c) jac(r, c) = grad[c];
    }
    return jac;
}

MatrixQ jacobian_at(const std::vector<Polynomial>& eqs, const std::vector<Rational>& x) {
    int m = 0;
    for (const auto& p : eqs)
        if (p.m() != 0) { m = p.m(); break; }
    if (m == 0 && !eqs.empty()) m = eqs.front().m();
    if (std::size_t(2 * m * m) != x.size())
        throw dimension_error("jacobian_at expects 2m^2 coordinates");
    return jacobian_at(eqs, phase_vars(m), x);
}

Polynomial lowest_degree_part(const Polynomial& p) { return p.lowest_degree_part(); }

} // namespace legvar
