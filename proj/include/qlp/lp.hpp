#pragma once

#include "qlp/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qlp {

enum class Relation { eq, ge };

struct LinearRow {
    std::vector<Rational> coeffs;
    Relation relation = Relation::eq;
    Rational rhs;
};

/*
 * Feasibility system over exact rationals:
 *
 *     coeffs_r . x  (= or >=)  rhs_r     for every row r
 *     x_j >= 0                           for j in nonneg_vars
 *
 * Variables outside nonneg_vars are free.
 */
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<LinearRow> rows;
    std::vector<std::size_t> nonneg_vars; // sorted, unique

    void add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs);
    void mark_nonneg(std::size_t var);
    bool is_nonneg(std::size_t var) const;

    // Throws std::invalid_argument when a row has the wrong width or a
    // nonneg index is out of range.
    void validate() const;

    // Stable text form; two programs serialize identically iff they are the
    // same system up to rational canonicalization.
    std::string canonical_text() const;
    // Hex SHA-256 of canonical_text().
    std::string hash() const;
};

/*
 * FEASIBLE: values is a point satisfying every row and bound exactly.
 *
 * INFEASIBLE: values holds one multiplier per row followed by one per
 * nonneg variable (ascending index). Multipliers are >= 0 on GE rows and
 * bounds, free on EQ rows; the weighted sum of all rows has a zero
 * coefficient vector and a strictly positive right-hand side, i.e. it
 * reads 0 >= positive.
 */
struct Certificate {
    enum class Kind { feasible, infeasible };
    Kind kind = Kind::feasible;
    std::vector<Rational> values;

    bool feasible() const { return kind == Kind::feasible; }
};

// Exact phase-I simplex with Bland's rule. Deterministic.
Certificate solve_feasibility(const LinearProgram& lp);

// Independent exact re-check. Throws std::invalid_argument when the
// certificate's length does not fit the program.
bool verify_certificate(const LinearProgram& lp, const Certificate& cert);

} // namespace qlp
