#pragma once

#include "qlp/enumerator.hpp"
#include "qlp/lp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qlp {

// abs: variables A_0..A_n (weight enumerator, B and S eliminated).
// cd:  variables C_0..C_n, D_0..D_n; the code dimension enters one row
//      family only, which is what makes the bound visibly monotone in K.
enum class Formulation { abs, cd };

const char* formulation_name(Formulation f);
Formulation parse_formulation(const std::string& name);

LinearProgram build_constraints_abs(const CodeParams& params);
// Requires K > 1.
LinearProgram build_constraints_cd(const CodeParams& params);
LinearProgram build_constraints(const CodeParams& params, Formulation formulation);

// Direct check of the C/D system on explicit polynomials.
bool cd_constraints_hold(const EnumeratorCD& cd, const CodeParams& params);

struct BoundResult {
    CodeParams params;
    // The formulation actually solved; K = 1 requests always run as abs.
    Formulation formulation = Formulation::abs;
    LinearProgram lp;
    Certificate certificate;
    // Present when feasible: A is the solved (or reconstructed) weight
    // enumerator and passes check_membership.
    std::optional<EnumeratorABS> witness;
    // Present when feasible in the cd formulation.
    std::optional<EnumeratorCD> witness_cd;

    bool feasible() const { return certificate.feasible(); }
};

// Build, solve and verify. Throws std::logic_error if the solver returns a
// certificate or witness that fails its independent re-check.
BoundResult check(const CodeParams& params, Formulation formulation = Formulation::abs);

enum class SearchStrategy { binary, linear };

// Largest integer K in [1, 2^n] with a feasible system, or nullopt when K = 1
// is already infeasible. binary relies on monotonicity in K; linear scans
// downward from 2^n and does not.
std::optional<std::uint64_t> max_k(unsigned n, unsigned d, bool pure, SearchStrategy strategy = SearchStrategy::binary,
                                   Formulation formulation = Formulation::abs);

struct AuditEntry {
    Rational subcode_dim;
    HomPoly averaged; // A^ at subcode_dim
    MembershipReport report;
    // Low-weight coefficients of A^ vanish whenever those of A do.
    bool purity_preserved = true;
};

struct AuditReport {
    BoundResult start;
    std::vector<AuditEntry> entries; // every integer K' in [1, K)

    bool passed() const;
};

// Throws domain_error when the starting system is infeasible.
AuditReport monotonicity_audit(const CodeParams& params);

struct TableCell {
    unsigned n = 0;
    unsigned d = 0;
    std::optional<std::uint64_t> max_k;
};

struct BoundTable {
    bool pure = false;
    std::vector<TableCell> cells; // ordered by n, then d

    // Header "n,d,max_k,pure"; a missing maximum is written as NONE.
    std::string to_csv() const;
};

inline constexpr unsigned default_table_limit = 12;

// max_k over 1 <= n <= n_max, 1 <= d <= min(n, d_max). Cells are evaluated
// on up to `jobs` threads. Throws limit_error when n_max > limit.
BoundTable table(unsigned n_max, unsigned d_max, bool pure, unsigned jobs = 1,
                 unsigned limit = default_table_limit);

} // namespace qlp
