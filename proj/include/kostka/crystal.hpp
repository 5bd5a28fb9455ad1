/*
 * crystal.hpp
 * -----------
 * Crystal graphs of tensor powers of the vector representations for the
 * families A, B, C, D, realized on words.
 *
 * A word x1 x2 ... xl is read as the tensor product x1 (x) x2 (x) ... (x) xl.
 * The raising / lowering operators are computed by the signature rule:
 * every letter contributes "-"^eps "+"^phi for the given color, adjacent
 * "+-" pairs cancel, e acts on the letter owning the rightmost surviving
 * "-" and f on the letter owning the leftmost surviving "+".
 *
 * Letters are signed integers: i > 0 is the unbarred letter i, -i the
 * barred letter, and 0 the extra letter of family B.  Family A uses the
 * unbarred letters 1..n with colors 1..n-1; B, C, D use colors 0..n-1.
 */
#pragma once

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "kostka/weights.hpp"

namespace kostka {

using Word = std::vector<int>;
using OpPath = std::vector<int>;  // colors of the recorded raising sequence

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComponentCapExceeded : std::length_error {
    using std::length_error::length_error;
};

// Letter-level crystal of the vector representation: per color, the e / f
// transitions of each letter.
class VectorCrystal {
public:
    static constexpr int kNone = INT_MIN;

    Family family;
    int rank;

    VectorCrystal(Family f, int n) : family(f), rank(n) {
        int floor = (f == Family::D || f == Family::A) ? 2 : 1;
        if (n < floor) throw std::invalid_argument("VectorCrystal: rank too small");
        fnext_.assign(n, std::vector<int>(2 * n + 1, kNone));
        enext_.assign(n, std::vector<int>(2 * n + 1, kNone));
        for (auto [from, color, to] : edges()) {
            fnext_[color][idx(from)] = to;
            enext_[color][idx(to)] = from;
        }
        // eps/phi of a letter are string lengths, not arrow indicators: the
        // B color-0 string 1bar -> 0 -> 1 has phi(1bar) = eps(1) = 2.
        eps_.assign(n, std::vector<int>(2 * n + 1, 0));
        phi_.assign(n, std::vector<int>(2 * n + 1, 0));
        for (int c = 0; c < n; ++c)
            for (int x = -n; x <= n; ++x) {
                if (!letter_valid(x)) continue;
                for (int y = fnext_[c][idx(x)]; y != kNone; y = fnext_[c][idx(y)])
                    ++phi_[c][idx(x)];
                for (int y = enext_[c][idx(x)]; y != kNone; y = enext_[c][idx(y)])
                    ++eps_[c][idx(x)];
            }
    }

    // Colored edges from -> to of the vector crystal.
    std::vector<std::tuple<int, int, int>> edges() const {
        std::vector<std::tuple<int, int, int>> e;
        int n = rank;
        switch (family) {
            case Family::A:
                for (int i = 1; i < n; ++i) e.emplace_back(i, i, i + 1);
                break;
            case Family::B:
                for (int i = n; i >= 2; --i) e.emplace_back(-i, i - 1, -(i - 1));
                e.emplace_back(-1, 0, 0);
                e.emplace_back(0, 0, 1);
                for (int i = 1; i < n; ++i) e.emplace_back(i, i, i + 1);
                break;
            case Family::C:
                for (int i = n; i >= 2; --i) e.emplace_back(-i, i - 1, -(i - 1));
                e.emplace_back(-1, 0, 1);
                for (int i = 1; i < n; ++i) e.emplace_back(i, i, i + 1);
                break;
            case Family::D:
                for (int i = n; i >= 3; --i) e.emplace_back(-i, i - 1, -(i - 1));
                e.emplace_back(-2, 0, 1);
                e.emplace_back(-2, 1, -1);
                e.emplace_back(1, 1, 2);
                e.emplace_back(-1, 0, 2);
                for (int i = 2; i < n; ++i) e.emplace_back(i, i, i + 1);
                break;
        }
        return e;
    }

    int color_lo() const { return family == Family::A ? 1 : 0; }
    int color_hi() const { return rank - 1; }

    bool letter_valid(int x) const {
        if (x == 0) return family == Family::B;
        int a = std::abs(x);
        if (a < 1 || a > rank) return false;
        return family != Family::A || x > 0;
    }

    int f_letter(int x, int color) const { return fnext_[color][idx(x)]; }
    int e_letter(int x, int color) const { return enext_[color][idx(x)]; }
    int letter_phi(int x, int color) const { return phi_[color][idx(x)]; }
    int letter_eps(int x, int color) const { return eps_[color][idx(x)]; }

private:
    int idx(int letter) const { return letter + rank; }
    std::vector<std::vector<int>> fnext_, enext_, eps_, phi_;
};

// Shared, lazily built vector crystals.
inline const VectorCrystal& crystal(Family f, int n) {
    static std::mutex mu;
    static std::map<std::pair<Family, int>, std::unique_ptr<VectorCrystal>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{f, n}];
    if (!slot) slot = std::make_unique<VectorCrystal>(f, n);
    return *slot;
}

inline void validate_word(const VectorCrystal& cr, const Word& w) {
    for (int x : w)
        if (!cr.letter_valid(x))
            throw std::invalid_argument("letter out of range for family/rank");
}

namespace detail {

// Runs the signature cancellation; reports the acting positions and counts.
struct Signature {
    int eps = 0, phi = 0;
    int e_pos = -1;  // letter owning the rightmost surviving "-"
    int f_pos = -1;  // letter owning the leftmost surviving "+"
};

inline Signature signature(const VectorCrystal& cr, const Word& w, int color) {
    Signature sig;
    std::vector<int> plus_stack;  // positions of surviving "+"
    for (std::size_t p = 0; p < w.size(); ++p) {
        // each letter contributes "-"^eps then "+"^phi
        for (int k = cr.letter_eps(w[p], color); k > 0; --k) {
            if (!plus_stack.empty()) plus_stack.pop_back();
            else {
                ++sig.eps;
                sig.e_pos = static_cast<int>(p);
            }
        }
        for (int k = cr.letter_phi(w[p], color); k > 0; --k)
            plus_stack.push_back(static_cast<int>(p));
    }
    sig.phi = static_cast<int>(plus_stack.size());
    if (!plus_stack.empty()) sig.f_pos = plus_stack.front();
    return sig;
}

} // namespace detail

inline std::pair<int, int> eps_phi(const VectorCrystal& cr, const Word& w, int color) {
    auto sig = detail::signature(cr, w, color);
    return {sig.eps, sig.phi};
}
inline std::pair<int, int> eps_phi(Family f, int n, const Word& w, int color) {
    return eps_phi(crystal(f, n), w, color);
}

inline std::optional<Word> e_op(const VectorCrystal& cr, const Word& w, int color) {
    auto sig = detail::signature(cr, w, color);
    if (sig.eps == 0) return std::nullopt;
    Word r = w;
    r[sig.e_pos] = cr.e_letter(w[sig.e_pos], color);
    return r;
}
inline std::optional<Word> e_op(Family f, int n, const Word& w, int color) {
    return e_op(crystal(f, n), w, color);
}

inline std::optional<Word> f_op(const VectorCrystal& cr, const Word& w, int color) {
    auto sig = detail::signature(cr, w, color);
    if (sig.phi == 0) return std::nullopt;
    Word r = w;
    r[sig.f_pos] = cr.f_letter(w[sig.f_pos], color);
    return r;
}
inline std::optional<Word> f_op(Family f, int n, const Word& w, int color) {
    return f_op(crystal(f, n), w, color);
}

// wt(w): coordinate ibar counts letters -i minus letters i; the B letter 0
// contributes nothing.  For family A, coordinate ibar counts the letters
// n-i+1 (contents in crystal order).
inline Weight weight_of(const VectorCrystal& cr, const Word& w) {
    Weight wt(cr.rank);
    for (int x : w) {
        if (x == 0) continue;
        if (cr.family == Family::A) wt.twice_bar(cr.rank - x + 1) += 2;
        else if (x < 0) wt.twice_bar(-x) += 2;
        else wt.twice_bar(x) -= 2;
    }
    return wt;
}
inline Weight weight_of(Family f, int n, const Word& w) {
    return weight_of(crystal(f, n), w);
}

inline bool is_highest_weight(const VectorCrystal& cr, const Word& w) {
    for (int c = cr.color_lo(); c <= cr.color_hi(); ++c)
        if (detail::signature(cr, w, c).eps > 0) return false;
    return true;
}

struct RaiseResult {
    Word highest;
    OpPath path;  // colors in application order
};

// Applies e for the smallest applicable color until none applies.
inline RaiseResult raise_to_highest(const VectorCrystal& cr, const Word& w) {
    RaiseResult res{w, {}};
    for (;;) {
        bool moved = false;
        for (int c = cr.color_lo(); c <= cr.color_hi(); ++c) {
            if (auto up = e_op(cr, res.highest, c)) {
                res.highest = std::move(*up);
                res.path.push_back(c);
                moved = true;
                break;
            }
        }
        if (!moved) return res;
    }
}
inline RaiseResult raise_to_highest(Family f, int n, const Word& w) {
    return raise_to_highest(crystal(f, n), w);
}

// Replays a recorded raising path downward from another highest-weight
// vertex; every lowering step must succeed.
inline Word transport(const VectorCrystal& cr, const OpPath& path, const Word& target) {
    Word w = target;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto down = f_op(cr, w, *it);
        if (!down)
            throw TransportError("transport: f_" + std::to_string(*it) + " undefined");
        w = std::move(*down);
    }
    return w;
}
inline Word transport(Family f, int n, const OpPath& path, const Word& target) {
    return transport(crystal(f, n), path, target);
}

// s_i(u) = f^(phi-eps)(u) or e^(eps-phi)(u)  (crystal Weyl group action).
inline Word weyl_crystal_action(const VectorCrystal& cr, const Word& w, int color) {
    auto [eps, phi] = eps_phi(cr, w, color);
    Word r = w;
    for (int k = 0; k < phi - eps; ++k) r = *f_op(cr, r, color);
    for (int k = 0; k < eps - phi; ++k) r = *e_op(cr, r, color);
    return r;
}
inline Word weyl_crystal_action(Family f, int n, const Word& w, int color) {
    return weyl_crystal_action(crystal(f, n), w, color);
}

// BFS closure of a seed under all e and f operators, sorted.
inline std::vector<Word> generate_component(const VectorCrystal& cr, const Word& seed,
                                            std::size_t cap = 1'000'000) {
    validate_word(cr, seed);
    std::set<Word> seen{seed};
    std::vector<Word> queue{seed};
    while (!queue.empty()) {
        Word w = std::move(queue.back());
        queue.pop_back();
        for (int c = cr.color_lo(); c <= cr.color_hi(); ++c) {
            for (auto neigh : {e_op(cr, w, c), f_op(cr, w, c)}) {
                if (!neigh) continue;
                if (seen.insert(*neigh).second) {
                    if (seen.size() > cap)
                        throw ComponentCapExceeded("crystal component exceeds cap");
                    queue.push_back(std::move(*neigh));
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}
inline std::vector<Word> generate_component(Family f, int n, const Word& seed,
                                            std::size_t cap = 1'000'000) {
    return generate_component(crystal(f, n), seed, cap);
}

// Machine form: space-separated letters, bars as a leading "-".
inline std::string word_str(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i];
    }
    return os.str();
}

// Human form: bars rendered as a trailing overbar marker, e.g. "2~ 0 1".
inline std::string word_human(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        if (w[i] < 0) os << -w[i] << "~";
        else os << w[i];
    }
    return os.str();
}

inline Word parse_word(const std::string& s) {
    Word w;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok.size() > 1 && tok.back() == '~') w.push_back(-std::stoi(tok.substr(0, tok.size() - 1)));
        else w.push_back(std::stoi(tok));
    }
    return w;
}

// DOT export of the colored graph spanned by the given vertices.
inline std::string component_dot(const VectorCrystal& cr, const std::vector<Word>& vertices) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    std::map<Word, int> id;
    int next = 0;
    for (const Word& w : vertices) id.emplace(w, next++);
    for (const auto& [w, i] : id)
        os << "  n" << i << " [label=\"" << word_human(w) << "\"];\n";
    for (const auto& [w, i] : id)
        for (int c = cr.color_lo(); c <= cr.color_hi(); ++c)
            if (auto down = f_op(cr, w, c)) {
                auto it = id.find(*down);
                if (it != id.end())
                    os << "  n" << i << " -> n" << it->second << " [label=\"" << c << "\"];\n";
            }
    os << "}\n";
    return os.str();
}

} // namespace kostka
