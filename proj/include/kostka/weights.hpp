/*
 * weights.hpp
 * -----------
 * Weight vectors for the classical root systems A, B, C, D in the
 * coordinates (beta_nbar, ..., beta_1bar), together with dominant
 * (generalized-partition) weights.
 *
 * Coordinates are exact half-integers stored doubled, so a weight never
 * touches floating point.  Families A and C only admit integer
 * coordinates; B and D additionally admit all-half-integer (spin)
 * weights, and D allows a negative last coordinate.
 */
#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostka {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
    }
    throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

struct RootSystemId {
    Family family;
    int rank;  // A uses `rank` coordinates and means A_{rank-1}

    RootSystemId(Family f, int n) : family(f), rank(n) {
        int floor = (f == Family::D || f == Family::A) ? 2 : 1;
        if (n < floor)
            throw std::invalid_argument("rank too small for family");
    }
};

// Coordinate vector (beta_nbar, ..., beta_1bar), stored doubled.
class Weight {
public:
    Weight() = default;
    explicit Weight(int rank) : twice_(rank, 0) {}
    explicit Weight(std::vector<int> twice) : twice_(std::move(twice)) {}

    static Weight from_ints(const std::vector<int>& v) {
        std::vector<int> t(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) t[i] = 2 * v[i];
        return Weight(std::move(t));
    }

    int rank() const { return static_cast<int>(twice_.size()); }

    // Doubled coordinate in print order: index 0 is 2*beta_nbar.
    int twice_at(int idx) const { return twice_.at(idx); }
    int& twice_at(int idx) { return twice_.at(idx); }

    // Doubled coordinate 2*beta_ibar, i = 1..n (i = 1 is the last printed).
    int twice_bar(int i) const { return twice_.at(twice_.size() - i); }
    int& twice_bar(int i) { return twice_.at(twice_.size() - i); }

    // Integer coordinate beta_ibar; throws if it is a strict half-integer.
    int int_bar(int i) const {
        int t = twice_bar(i);
        if (t % 2 != 0) throw std::domain_error("weight coordinate is not an integer");
        return t / 2;
    }

    bool all_integer() const {
        for (int t : twice_) if (t % 2 != 0) return false;
        return true;
    }
    bool all_half_integer() const {  // every coordinate in 1/2 + Z
        for (int t : twice_) if ((t % 2 + 2) % 2 != 1) return false;
        return true;
    }

    // Unit vector epsilon_ibar.
    static Weight eps(int rank, int i) {
        Weight w(rank);
        w.twice_bar(i) = 2;
        return w;
    }

    Weight operator+(const Weight& o) const {
        check_rank(o);
        Weight r = *this;
        for (std::size_t i = 0; i < twice_.size(); ++i) r.twice_[i] += o.twice_[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        check_rank(o);
        Weight r = *this;
        for (std::size_t i = 0; i < twice_.size(); ++i) r.twice_[i] -= o.twice_[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (int& t : r.twice_) t = -t;
        return r;
    }
    Weight scaled(int k) const {
        Weight r = *this;
        for (int& t : r.twice_) t *= k;
        return r;
    }

    bool is_zero() const {
        return std::all_of(twice_.begin(), twice_.end(), [](int t) { return t == 0; });
    }

    // Sum of coordinates, doubled.
    int twice_total() const { return std::accumulate(twice_.begin(), twice_.end(), 0); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.twice_ == b.twice_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.twice_ < b.twice_; }

    // Comma-separated values in order (beta_nbar,...,beta_1bar), halves as "3/2".
    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < twice_.size(); ++i) {
            if (i) os << ",";
            if (twice_[i] % 2 == 0) os << twice_[i] / 2;
            else os << twice_[i] << "/2";
        }
        return os.str();
    }

    static Weight parse(const std::string& s) {
        std::vector<int> t;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty weight coordinate");
            std::size_t slash = tok.find('/');
            if (slash == std::string::npos) {
                t.push_back(2 * std::stoi(tok));
            } else {
                int num = std::stoi(tok.substr(0, slash));
                int den = std::stoi(tok.substr(slash + 1));
                if (den != 2) throw std::invalid_argument("weight denominators must be 2");
                t.push_back(num);
            }
        }
        return Weight(std::move(t));
    }

private:
    void check_rank(const Weight& o) const {
        if (twice_.size() != o.twice_.size())
            throw std::invalid_argument("weight rank mismatch");
    }
    std::vector<int> twice_;
};

// Per-family coordinate legality: A and C admit only integer coordinates.
inline bool weight_legal(Family f, const Weight& w) {
    if (f == Family::A || f == Family::C) return w.all_integer();
    return w.all_integer() || w.all_half_integer();
}

// Dominance in the paper's coordinates:
//   B, C: beta_nbar >= ... >= beta_1bar >= 0
//   D:    beta_nbar >= ... >= beta_2bar >= |beta_1bar|
//   A:    weakly decreasing integers
inline bool is_dominant(Family f, const Weight& w) {
    int n = w.rank();
    if (n == 0) return true;
    if (!weight_legal(f, w)) return false;
    for (int idx = 0; idx + 1 < n - 1; ++idx)
        if (w.twice_at(idx) < w.twice_at(idx + 1)) return false;
    int second_last = (n >= 2) ? w.twice_at(n - 2) : 0;
    int last = w.twice_at(n - 1);
    switch (f) {
        case Family::A:
            return n < 2 || second_last >= last;
        case Family::B:
        case Family::C:
            return (n < 2 || second_last >= last) && last >= 0;
        case Family::D:
            return second_last >= std::abs(last);
    }
    return false;
}

// A dominant weight, identified with the generalized partition
// (lambda_nbar, ..., lambda_1bar).
struct GenPartition {
    Family family;
    Weight wt;

    GenPartition(Family f, Weight w) : family(f), wt(std::move(w)) {
        if (!is_dominant(family, wt))
            throw std::invalid_argument("weight is not dominant for family " +
                                        std::string(1, family_letter(family)) + ": " + wt.str());
    }

    int rank() const { return wt.rank(); }
    bool integer_parts() const { return wt.all_integer(); }

    // Number of boxes |lambda| (last part counted by absolute value).
    int boxes() const {
        if (!integer_parts()) throw std::domain_error("boxes(): half-integer shape");
        int s = 0;
        for (int i = 2; i <= rank(); ++i) s += wt.int_bar(i);
        if (rank() >= 1) s += std::abs(wt.int_bar(1));
        return s;
    }

    // lambda' : drop the largest coordinate lambda_nbar.
    GenPartition truncated() const {
        if (rank() == 0) throw std::domain_error("truncated(): empty partition");
        std::vector<int> t(rank() - 1);
        for (int i = 1; i < rank(); ++i) t[i - 1] = wt.twice_at(i);
        return GenPartition(family, Weight(std::move(t)));
    }

    // lambda* : negate the last coordinate (type D symmetry).
    GenPartition star() const {
        Weight w = wt;
        if (rank() >= 1) w.twice_bar(1) = -w.twice_bar(1);
        return GenPartition(family, w);
    }

    // Row lengths of the displayed Young diagram (last part by absolute
    // value), trailing zeros removed.
    std::vector<int> display_rows() const {
        if (!integer_parts()) throw std::domain_error("display_rows(): half-integer shape");
        std::vector<int> rows;
        for (int idx = 0; idx < rank(); ++idx) {
            int v = wt.twice_at(idx) / 2;
            rows.push_back(std::abs(v));
        }
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        return rows;
    }

    friend bool operator==(const GenPartition& a, const GenPartition& b) {
        return a.family == b.family && a.wt == b.wt;
    }
    friend bool operator!=(const GenPartition& a, const GenPartition& b) { return !(a == b); }
    friend bool operator<(const GenPartition& a, const GenPartition& b) { return a.wt < b.wt; }

    std::string str() const { return wt.str(); }
};

} // namespace kostka
