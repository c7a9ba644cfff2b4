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

#include "legvar/rational.hpp"

#include <ostream>

namespace legvar {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw argument_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw argument_error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw argument_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw argument_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class acc;
    mpz_pow_ui(acc.get_num_mpz_t(), base.v_.get_num_mpz_t(), n);
    mpz_pow_ui(acc.get_den_mpz_t(), base.v_.get_den_mpz_t(), n);
    return Rational(acc);
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw parse_error("bad rational literal: " + text);
    if (sgn(q.get_den()) == 0) throw parse_error("zero denominator: " + text);
    q.canonicalize();
    return Rational(q.get_num(), q.get_den());
}

std::optional<Rational> Rational::sqrt_exact() const {
    return nth_root_exact(2);
}

std::optional<Rational> Rational::nth_root_exact(unsigned long n) const {
    if (n == 0) throw argument_error("0-th root");
    if (n == 1) return *this;
    if (sign() < 0 && n % 2 == 0) return std::nullopt;
    mpz_class rn, rd;
    // mpz_root wants a non-negative operand for even n; handle sign manually.
    mpz_class an = ::abs(num());
    int exact_n = mpz_root(rn.get_mpz_t(), an.get_mpz_t(), n);
    int exact_d = mpz_root(rd.get_mpz_t(), den().get_mpz_t(), n);
    if (!exact_n || !exact_d) return std::nullopt;
    if (sign() < 0) rn = -rn;
    return Rational(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace legvar
