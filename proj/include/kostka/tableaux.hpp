/*
 * tableaux.hpp
 * ------------
 * Kashiwara-Nakashima tableaux with integer-part shapes, realized as
 * vertices of the crystal of words: a filling is a tableau of shape
 * lambda exactly when its column reading lies in the connected component
 * of the reading of the highest tableau T_lambda.  The column reading
 * runs over columns right to left, each top to bottom.
 *
 * P-symbols are computed by component transport: raise a word to its
 * highest-weight vertex recording the colors, then replay the reversed
 * path from the tableau realization of the same highest weight.  This
 * subsumes the insertion algorithms, contractions included.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/crystal.hpp"
#include "kostka/weights.hpp"

namespace kostka {

// Column reading of a grid given row by row.
inline Word reading_from_rows(const std::vector<std::vector<int>>& grid) {
    Word w;
    int ncols = grid.empty() ? 0 : static_cast<int>(grid[0].size());
    for (int c = ncols - 1; c >= 0; --c)
        for (const auto& row : grid)
            if (c < static_cast<int>(row.size())) w.push_back(row[c]);
    return w;
}

// Reading of T_lambda: row k holds letters (n-k+1)bar; for a type D shape
// with negative last coordinate the letters 1bar become 1; family A fills
// row k with the letter k.
inline Word highest_reading(Family f, int n, const GenPartition& shape) {
    if (!shape.integer_parts())
        throw std::invalid_argument("highest_reading: half-integer shape unsupported");
    if (shape.rank() != n) throw std::invalid_argument("highest_reading: rank mismatch");
    bool negative_last = n >= 1 && shape.wt.twice_bar(1) < 0;
    if (negative_last && f != Family::D)
        throw std::invalid_argument("highest_reading: negative part only in type D");
    std::vector<int> row_len = shape.display_rows();
    std::vector<std::vector<int>> grid;
    for (std::size_t k = 0; k < row_len.size(); ++k) {
        int letter;
        if (f == Family::A) letter = static_cast<int>(k) + 1;
        else letter = -(n - static_cast<int>(k));
        if (negative_last && letter == -1) letter = 1;
        grid.emplace_back(row_len[k], letter);
    }
    return reading_from_rows(grid);
}

struct Tableau {
    Family family;
    int rank;
    GenPartition shape;
    Word reading;

    // Membership is definitional: the reading must lie in the component of
    // the reading of T_shape, i.e. raise exactly to it.
    Tableau(Family f, int n, GenPartition sh, Word rd)
        : family(f), rank(n), shape(std::move(sh)), reading(std::move(rd)) {
        if (shape.rank() != rank) throw std::invalid_argument("Tableau: shape rank mismatch");
        if (!shape.integer_parts()) throw std::invalid_argument("Tableau: half-integer shape");
        if (static_cast<int>(reading.size()) != shape.boxes())
            throw std::invalid_argument("Tableau: reading length != box count");
        if (rank > 0) {
            const VectorCrystal& cr = crystal(family, rank);
            validate_word(cr, reading);
            if (raise_to_highest(cr, reading).highest != highest_reading(family, rank, shape))
                throw std::invalid_argument("Tableau: reading is not a vertex of B(shape)");
        }
    }

    bool empty() const { return reading.empty(); }

    // Rows of the displayed diagram (shape, or its last part negated for
    // type D shapes with a negative last coordinate).
    std::vector<std::vector<int>> rows() const {
        std::vector<int> row_len = shape.display_rows();
        int ncols = row_len.empty() ? 0 : row_len[0];
        // column c (1-based from the left) has height #{rows >= c}
        std::vector<int> height(ncols, 0);
        for (int len : row_len)
            for (int c = 0; c < len; ++c) ++height[c];
        std::vector<std::vector<int>> grid(row_len.size());
        for (std::size_t r = 0; r < row_len.size(); ++r) grid[r].resize(row_len[r]);
        std::size_t pos = 0;
        for (int c = ncols - 1; c >= 0; --c)
            for (int r = 0; r < height[c]; ++r) {
                if (pos >= reading.size()) throw std::logic_error("Tableau: malformed reading");
                grid[r][c] = reading[pos++];
            }
        return grid;
    }

    int column_count() const {
        auto rl = shape.display_rows();
        return rl.empty() ? 0 : rl[0];
    }

    std::string str() const {
        std::string s;
        for (const auto& row : rows()) {
            if (!s.empty()) s += " / ";
            s += word_human(row);
        }
        return s.empty() ? "(empty)" : s;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.family == b.family && a.shape.wt == b.shape.wt && a.reading == b.reading;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
    friend bool operator<(const Tableau& a, const Tableau& b) {
        if (a.shape.wt != b.shape.wt) return a.shape.wt < b.shape.wt;
        return a.reading < b.reading;
    }
};

// T_lambda as a tableau.
inline Tableau highest_tableau(Family f, int n, const GenPartition& shape) {
    return Tableau(f, n, shape, highest_reading(f, n, shape));
}

inline GenPartition weight_as_shape(Family f, const Weight& w) { return GenPartition(f, w); }

// The unique tableau whose reading is crystal-equivalent to the word:
// raise recording the path, then transport onto the highest tableau of the
// resulting weight.
inline Tableau p_symbol(Family f, int n, const Word& word) {
    const VectorCrystal& cr = crystal(f, n);
    validate_word(cr, word);
    auto raised = raise_to_highest(cr, word);
    GenPartition lambda(f, weight_of(cr, raised.highest));
    Tableau t_lambda = highest_tableau(f, n, lambda);
    Word reading = transport(cr, raised.path, t_lambda.reading);
    return Tableau(f, n, lambda, std::move(reading));
}

// P computed without contraction: the symbol stabilizes once two
// consecutive ranks agree (shape and reading).
inline std::pair<Tableau, int> p_stable(Family f, const Word& word, int rank_cap = 0) {
    int floor = (f == Family::D || f == Family::A) ? 2 : 1;
    int n0 = floor;
    for (int x : word) n0 = std::max(n0, std::abs(x));
    if (rank_cap <= 0) rank_cap = n0 + static_cast<int>(word.size()) + 1;
    // The same filling at a higher rank keeps its displayed diagram (for a
    // type D shape with negative last part the diagram is already the
    // star), so stabilization is: same reading, same displayed rows.
    std::optional<Tableau> prev;
    for (int k = n0; k <= rank_cap; ++k) {
        Tableau cur = p_symbol(f, k, word);
        if (prev && prev->reading == cur.reading &&
            prev->shape.display_rows() == cur.shape.display_rows())
            return {*prev, k - 1};
        prev = std::move(cur);
    }
    throw std::length_error("p_stable: no stabilization below rank cap");
}

// Lemma-style row factorization: w(T) is equivalent to w(R) (x) w(T'),
// with R a one-row tableau of length lambda_nbar and T' of shape lambda'
// at rank n-1.
inline std::pair<Tableau, Tableau> factor_row(const Tableau& t) {
    Family f = t.family;
    int n = t.rank;
    if (n < 1) throw std::invalid_argument("factor_row: rank 0");
    if (t.shape.wt.twice_bar(1) < 0)
        throw std::invalid_argument("factor_row: negative last part unsupported");
    const VectorCrystal& cr = crystal(f, n);
    int top = t.shape.wt.int_bar(n);
    GenPartition lambda_p = t.shape.truncated();
    Word target(top, -n);
    if (n >= 2) {
        Word tail = highest_tableau(f, n - 1, lambda_p).reading;
        target.insert(target.end(), tail.begin(), tail.end());
    }
    auto raised = raise_to_highest(cr, t.reading);
    Word moved = transport(cr, raised.path, target);
    Word r_read(moved.begin(), moved.begin() + top);
    Word tp_read(moved.begin() + top, moved.end());
    // the lemma-style pair needs wt(T) dominant; otherwise the tail can
    // retain letters nbar / n and no rank-(n-1) factor exists
    for (int x : tp_read)
        if (std::abs(x) >= n)
            throw std::invalid_argument(
                "factor_row: tail keeps rank-n letters (weight of T not dominant)");
    std::vector<int> row_shape(n, 0);
    row_shape[0] = 2 * top;
    Tableau row(f, n, GenPartition(f, Weight(std::move(row_shape))), std::move(r_read));
    if (n == 1) return {row, Tableau(f, 0, GenPartition(f, Weight(0)), {})};
    return {row, Tableau(f, n - 1, lambda_p, std::move(tp_read))};
}

// Reading of the one-row tableau R with every letter nbar and n erased
// (the B letter 0 is kept).
inline Word strip_extremes(const Tableau& row, int n) {
    if (row.shape.display_rows().size() > 1)
        throw std::invalid_argument("strip_extremes: not a one-row tableau");
    Word out;
    for (int x : row.reading)
        if (x != n && x != -n) out.push_back(x);
    return out;
}

// All tableaux of the given shape, grouped by weight.
inline std::map<Weight, std::vector<Tableau>> tableaux_by_weight(Family f, int n,
                                                                 const GenPartition& lambda,
                                                                 std::size_t cap = 1'000'000) {
    const VectorCrystal& cr = crystal(f, n);
    Tableau t_lambda = highest_tableau(f, n, lambda);
    std::map<Weight, std::vector<Tableau>> out;
    for (Word& w : generate_component(cr, t_lambda.reading, cap)) {
        Weight mu = weight_of(cr, w);
        out[mu].emplace_back(f, n, lambda, std::move(w));
    }
    return out;
}

// All tableaux of shape lambda and weight mu.
inline std::vector<Tableau> tableaux_of(Family f, int n, const GenPartition& lambda,
                                        const Weight& mu, std::size_t cap = 1'000'000) {
    auto by_weight = tableaux_by_weight(f, n, lambda, cap);
    auto it = by_weight.find(mu);
    return it == by_weight.end() ? std::vector<Tableau>{} : std::move(it->second);
}

} // namespace kostka
