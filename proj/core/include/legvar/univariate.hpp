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

#include <cstddef>
#include <vector>

#include "legvar/rational.hpp"

namespace legvar {

/// Dense univariate polynomial in t over the rationals; used for exact curve
/// arithmetic (Taylor coefficients are read off the coefficient list).
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    static UPoly t_power(unsigned e, const Rational& c = Rational(1)) {
        UPoly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(e + 1, Rational(0));
            p.coeffs_[e] = c;
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    /// Order of vanishing at t = 0 (index of first nonzero coefficient).
    std::size_t low_order() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero()) return k;
        return 0;
    }

    Rational eval(const Rational& t) const {
        Rational acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
        return acc;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
            r.coeffs_[k] = a.coeff(k) + b.coeff(k);
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        UPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_; // coeffs_[k] multiplies t^k
};

} // namespace legvar
