/*
 * qlaurent.hpp
 * ------------
 * Exact Laurent polynomials in one variable q with arbitrary-precision
 * integer coefficients, i.e. elements of Z[q,q^-1].
 *
 * Terms are kept in canonical form: a map from exponent to coefficient
 * with no zero coefficient stored.  The zero polynomial is the empty map.
 */
#pragma once

#include <map>
#include <string>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace kostka {

using BigInt = boost::multiprecision::cpp_int;

class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long c) {
        if (c != 0) terms_[0] = c;
    }

    static QLaurent monomial(BigInt coeff, int exp) {
        QLaurent p;
        if (coeff != 0) p.terms_[exp] = std::move(coeff);
        return p;
    }
    static QLaurent q_power(int exp) { return monomial(1, exp); }

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    int degree() const {
        if (is_zero()) throw std::domain_error("degree of zero polynomial");
        return terms_.rbegin()->first;
    }
    int low_degree() const {
        if (is_zero()) throw std::domain_error("low degree of zero polynomial");
        return terms_.begin()->first;
    }
    BigInt leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool has_nonnegative_exponents() const {
        return is_zero() || terms_.begin()->first >= 0;
    }
    bool has_nonnegative_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }
    // True polynomial in q with nonnegative coefficients.
    bool is_poly_nonneg() const {
        return has_nonnegative_exponents() && has_nonnegative_coeffs();
    }

    QLaurent& operator+=(const QLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QLaurent& operator-=(const QLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    QLaurent operator-() const {
        QLaurent r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    // Multiply by q^e.
    QLaurent shifted(int e) const {
        QLaurent r;
        for (const auto& [exp, c] : terms_) r.terms_[exp + e] = c;
        return r;
    }

    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

    void add_term(int exp, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Descending-exponent human form, e.g. "q^7+q^6+2q^5+q^4+q^3".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            BigInt c = it->second;
            if (!first) os << (c > 0 ? "+" : "-");
            else if (c < 0) os << "-";
            first = false;
            BigInt a = c < 0 ? BigInt(-c) : c;
            int e = it->first;
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    // Parses the output of str().  Accepts terms like 2q^5, q, -3, q^-2.
    static QLaurent parse(const std::string& s);

private:
    std::map<int, BigInt> terms_;
};

// (q^a - 1)/(q^s - 1) = 1 + q^s + ... + q^(a-s), for s | a, a >= 0, s > 0.
inline QLaurent geometric_ratio(int a, int s) {
    if (s <= 0 || a < 0 || a % s != 0)
        throw std::invalid_argument("geometric_ratio: need s > 0, a >= 0, s | a");
    QLaurent r;
    for (int e = 0; e <= a - s; e += s) r.add_term(e, 1);
    return r;
}

inline QLaurent QLaurent::parse(const std::string& s) {
    QLaurent r;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return r;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
        int exp = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) eneg = (s[i++] == '-');
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
                if (ed.empty()) throw std::invalid_argument("QLaurent::parse: missing exponent");
                exp = std::stoi(ed);
                if (eneg) exp = -exp;
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("QLaurent::parse: expected term at '" + s.substr(i) + "'");
        }
        r.add_term(exp, sign * coeff);
        skip_ws();
    }
    return r;
}

} // namespace kostka
