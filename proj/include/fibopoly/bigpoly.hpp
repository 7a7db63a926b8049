// Copyright 2026 The fibopoly Authors
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

#ifndef FIBOPOLY_BIGPOLY_HPP
#define FIBOPOLY_BIGPOLY_HPP

/**
 * @file bigpoly.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * DensePoly<Ring> stores coefficients in ascending order of degree
 * (coeffs()[i] is the coefficient of x^i). Every constructor and every
 * arithmetic operation leaves the value in canonical form: the zero
 * polynomial is the empty coefficient list, otherwise the last stored
 * coefficient is nonzero. Equality is therefore plain structural equality.
 *
 * Two instantiations are used throughout the library:
 *
 *   PolyX  = DensePoly<BigInt>   polynomials in x with integer coefficients
 *   PolyZX = DensePoly<PolyX>    polynomials in z whose coefficients are PolyX
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibopoly {

using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

/// Index triple or sequence index outside the admitted domain.
class InvalidIndex : public Error {
   public:
    using Error::Error;
};

class UnknownIdentity : public Error {
   public:
    using Error::Error;
};

template <class Ring>
class DensePoly {
   public:
    using coefficient_type = Ring;

    /// Degree reported for the zero polynomial.
    static constexpr std::ptrdiff_t kZeroDegree = -1;

    DensePoly() = default;
    explicit DensePoly(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<Ring> coeffs) : coeffs_(coeffs) { trim(); }

    static DensePoly constant(Ring c) { return DensePoly(std::vector<Ring>{std::move(c)}); }

    /// c * x^degree
    static DensePoly monomial(Ring c, std::size_t degree) {
        std::vector<Ring> v(degree + 1);
        v[degree] = std::move(c);
        return DensePoly(std::move(v));
    }

    std::ptrdiff_t degree() const noexcept {
        return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Ring> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero past the end.
    Ring coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Ring{}; }

    const Ring& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    DensePoly& operator+=(const DensePoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    DensePoly& operator*=(const DensePoly& rhs) { return *this = *this * rhs; }

    DensePoly& operator*=(const Ring& scalar) {
        if (scalar == Ring{}) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= scalar;
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, const Ring& s) { return a *= s; }
    friend DensePoly operator*(const Ring& s, DensePoly a) { return a *= s; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Ring> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == Ring{}) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == Ring{}) continue;
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return DensePoly(std::move(out));
    }

    /// Product of a and b with every term of degree > max_degree dropped.
    friend DensePoly mul_trunc(const DensePoly& a, const DensePoly& b, std::size_t max_degree) {
        if (a.is_zero() || b.is_zero()) return {};
        const std::size_t len = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, max_degree + 1);
        std::vector<Ring> out(len);
        for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
            if (a.coeffs_[i] == Ring{}) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
                if (b.coeffs_[j] == Ring{}) continue;
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return DensePoly(std::move(out));
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Ring{}) coeffs_.pop_back();
    }

    std::vector<Ring> coeffs_;
};

using PolyX = DensePoly<BigInt>;
using PolyZX = DensePoly<PolyX>;

/// Multiplicative identity of BigInt, PolyX or PolyZX.
template <class Ring>
Ring one() {
    if constexpr (std::same_as<Ring, BigInt>) {
        return BigInt(1);
    } else {
        return Ring::constant(one<typename Ring::coefficient_type>());
    }
}

/// The polynomial x (or z, for PolyZX).
template <class Ring>
DensePoly<Ring> variable() {
    return DensePoly<Ring>::monomial(one<Ring>(), 1);
}

/// Keeps only the terms of degree <= max_degree.
template <class Ring>
DensePoly<Ring> truncate(const DensePoly<Ring>& p, std::size_t max_degree) {
    auto c = p.coeffs();
    const std::size_t n = std::min(c.size(), max_degree + 1);
    return DensePoly<Ring>(std::vector<Ring>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)));
}

/// p * x^k
template <class Ring>
DensePoly<Ring> shift(const DensePoly<Ring>& p, std::size_t k) {
    if (p.is_zero()) return {};
    std::vector<Ring> v(k);
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return DensePoly<Ring>(std::move(v));
}

/// p(-x): odd-degree coefficients change sign.
template <class Ring>
DensePoly<Ring> negate_variable(const DensePoly<Ring>& p) {
    std::vector<Ring> v(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return DensePoly<Ring>(std::move(v));
}

/// Reflects p about degree `width`: coefficient of x^m moves to x^(width - m).
/// Requires degree(p) <= width.
template <class Ring>
DensePoly<Ring> reflect(const DensePoly<Ring>& p, std::size_t width) {
    if (p.degree() > static_cast<std::ptrdiff_t>(width))
        throw std::invalid_argument("reflect: degree exceeds reflection width");
    std::vector<Ring> v(width + 1);
    auto c = p.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) v[width - m] = c[m];
    return DensePoly<Ring>(std::move(v));
}

template <class Ring>
DensePoly<Ring> pow(DensePoly<Ring> base, unsigned exponent) {
    auto result = DensePoly<Ring>::constant(one<Ring>());
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

/// Horner evaluation.
template <class Ring>
Ring evaluate(const DensePoly<Ring>& p, const Ring& at) {
    Ring acc{};
    auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
    return acc;
}

/// Formal derivative d/dx.
inline PolyX derivative(const PolyX& p) {
    if (p.size() <= 1) return {};
    std::vector<BigInt> v(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p.coeffs()[i] * static_cast<unsigned long long>(i);
    return PolyX(std::move(v));
}

/// Exact quotient a / b over the integers. Long division from the top; any
/// leading-coefficient step that is not an integer, or a nonzero final
/// remainder, raises NotDivisible. There is no rational fallback.
inline PolyX exact_div(const PolyX& a, const PolyX& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NotDivisible("exact_div: dividend degree below divisor degree");

    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const BigInt& lead = bc.back();
    std::vector<BigInt> quot(rem.size() - db);

    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top] == 0) continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(rem[top], lead, q, r);
        if (r != 0) throw NotDivisible("exact_div: leading coefficient step is not integral");
        const std::size_t shift_by = top - db;
        for (std::size_t i = 0; i <= db; ++i) rem[shift_by + i] -= q * bc[i];
        quot[shift_by] = std::move(q);
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (rem[i] != 0) throw NotDivisible("exact_div: nonzero remainder");
    }
    return PolyX(std::move(quot));
}

inline std::string to_string(const PolyX& p, char var = 'x') {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const BigInt& c = p.coeffs()[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag;
            if (i > 0) os << '*';
        }
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

inline std::string to_string(const PolyZX& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const PolyX& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << to_string(c) << ')';
        if (i >= 1) os << "*z";
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const PolyX& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const PolyZX& p) { return os << to_string(p); }

}  // namespace fibopoly

#endif  // FIBOPOLY_BIGPOLY_HPP
