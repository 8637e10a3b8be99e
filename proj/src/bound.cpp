#include "qlp/bound.hpp"

#include "qlp/errors.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qlp {

const char* formulation_name(Formulation f) { return f == Formulation::abs ? "abs" : "cd"; }

Formulation parse_formulation(const std::string& name)
{
    if (name == "abs")
        return Formulation::abs;
    if (name == "cd")
        return Formulation::cd;
    throw domain_error("unknown formulation '" + name + "' (expected abs or cd)");
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::vector<Rational> unit_row(std::size_t width, std::size_t at, const Rational& value = 1)
{
    std::vector<Rational> row(width);
    row[at] = value;
    return row;
}

} // namespace

LinearProgram build_constraints_abs(const CodeParams& params)
{
    params.validate();
    const unsigned n = params.n;
    const std::size_t w = n + 1;
    const Matrix dual = substitution_matrix(n, LinearMap2::macwilliams());
    const Matrix shadow = substitution_matrix(n, LinearMap2::shadow());
    const Rational inv_k = Rational(1) / params.K;

    LinearProgram lp;
    lp.num_vars = w;
    for (std::size_t i = 0; i < w; ++i)
        lp.mark_nonneg(i);
    lp.add_row(unit_row(w, 0), Relation::eq, params.K * params.K);
    for (unsigned j = 0; j <= n; ++j) {
        std::vector<Rational> excess = dual[j];
        excess[j] -= inv_k;
        lp.add_row(std::move(excess), j < params.d ? Relation::eq : Relation::ge, 0);
    }
    for (unsigned j = 0; j <= n; ++j)
        lp.add_row(shadow[j], Relation::ge, 0);
    if (params.pure)
        for (unsigned j = 1; j < params.d; ++j)
            lp.add_row(unit_row(w, j), Relation::eq, 0);
    return lp;
}

LinearProgram build_constraints_cd(const CodeParams& params)
{
    params.validate();
    if (params.K <= 1)
        throw domain_error("the C/D formulation requires K > 1 (got K=" + to_string(params.K) + ")");
    const unsigned n = params.n;
    const std::size_t w = 2 * (n + 1);
    const std::size_t d_off = n + 1;
    const Matrix dual = substitution_matrix(n, LinearMap2::macwilliams());
    const Matrix shadow = substitution_matrix(n, LinearMap2::shadow());
    // C - r (C - D) = (1 - r) C + r D with r = (K-1)/(2K)
    const Rational r = (params.K - 1) / (2 * params.K);

    LinearProgram lp;
    lp.num_vars = w;
    for (unsigned j = 0; j <= n; ++j) { // C fixed by the MacWilliams map
        std::vector<Rational> row(w);
        for (unsigned i = 0; i <= n; ++i)
            row[i] = dual[j][i];
        row[j] -= 1;
        lp.add_row(std::move(row), Relation::eq, 0);
    }
    for (unsigned j = 0; j <= n; ++j) { // D negated by it
        std::vector<Rational> row(w);
        for (unsigned i = 0; i <= n; ++i)
            row[d_off + i] = dual[j][i];
        row[d_off + j] += 1;
        lp.add_row(std::move(row), Relation::eq, 0);
    }
    lp.add_row(unit_row(w, 0), Relation::eq, 1);
    for (unsigned j = 0; j < params.d; ++j) {
        std::vector<Rational> row = unit_row(w, j);
        row[d_off + j] = -1;
        lp.add_row(std::move(row), Relation::eq, 0);
    }
    for (unsigned j = 0; j <= n; ++j) {
        std::vector<Rational> row = unit_row(w, j, 1 - r);
        row[d_off + j] = r;
        lp.add_row(std::move(row), Relation::ge, 0);
    }
    for (unsigned j = 0; j <= n; ++j) {
        std::vector<Rational> row = unit_row(w, j);
        row[d_off + j] = -1;
        lp.add_row(std::move(row), Relation::ge, 0);
    }
    for (std::size_t off : {std::size_t{0}, d_off}) {
        for (unsigned j = 0; j <= n; ++j) {
            std::vector<Rational> row(w);
            for (unsigned i = 0; i <= n; ++i)
                row[off + i] = shadow[j][i];
            lp.add_row(std::move(row), Relation::ge, 0);
        }
    }
    if (params.pure)
        for (unsigned j = 1; j < params.d; ++j)
            lp.add_row(unit_row(w, j), Relation::eq, 0);
    return lp;
}

LinearProgram build_constraints(const CodeParams& params, Formulation formulation)
{
    return formulation == Formulation::abs ? build_constraints_abs(params) : build_constraints_cd(params);
}

bool cd_constraints_hold(const EnumeratorCD& cd, const CodeParams& params)
{
    const unsigned n = params.n;
    if (cd.C.degree() != n || cd.D.degree() != n || params.K <= 1)
        return false;
    if (dual_transform(cd.C) != cd.C || dual_transform(cd.D) != -cd.D)
        return false;
    if (cd.C[0] != 1)
        return false;
    const HomPoly gap = cd.C - cd.D;
    for (unsigned j = 0; j < params.d; ++j)
        if (gap[j] != 0)
            return false;
    const Rational r = (params.K - 1) / (2 * params.K);
    if (!is_nonnegative(cd.C - r * gap) || !is_nonnegative(gap))
        return false;
    if (!is_nonnegative(shadow_transform(cd.C)) || !is_nonnegative(shadow_transform(cd.D)))
        return false;
    if (params.pure)
        for (unsigned j = 1; j < params.d; ++j)
            if (cd.C[j] != 0)
                return false;
    return true;
}

BoundResult check(const CodeParams& params, Formulation formulation)
{
    params.validate();
    if (params.K == 1)
        formulation = Formulation::abs;
    BoundResult result{params, formulation, build_constraints(params, formulation), {}, std::nullopt, std::nullopt};
    result.certificate = solve_feasibility(result.lp);
    if (!verify_certificate(result.lp, result.certificate))
        throw std::logic_error("solver produced an invalid certificate");
    if (!result.feasible())
        return result;

    const auto& point = result.certificate.values;
    const unsigned n = params.n;
    HomPoly A(n);
    if (formulation == Formulation::abs) {
        for (unsigned i = 0; i <= n; ++i)
            A[i] = point[i];
    } else {
        EnumeratorCD cd{HomPoly(n), HomPoly(n)};
        for (unsigned i = 0; i <= n; ++i) {
            cd.C[i] = point[i];
            cd.D[i] = point[n + 1 + i];
        }
        if (!cd_constraints_hold(cd, params))
            throw std::logic_error("C/D witness fails its own constraint list");
        auto [a, b] = ab_from_cd(cd, params.K);
        if (dual_transform(a) != b)
            throw std::logic_error("reconstructed A/B pair is not MacWilliams-dual");
        A = a;
        result.witness_cd = cd;
    }
    MembershipReport report = check_membership(A, params);
    if (!report.passed())
        throw std::logic_error("feasible point fails enumerator membership:\n" + report.summary());
    result.witness = report.enumerator;
    return result;
}

std::optional<std::uint64_t> max_k(unsigned n, unsigned d, bool pure, SearchStrategy strategy, Formulation formulation)
{
    if (n < 1 || n > 62)
        throw domain_error("n must lie in [1, 62] for a K search");
    if (d < 1 || d > n)
        throw domain_error("minimum distance must satisfy 1 <= d <= n");
    const std::uint64_t top = std::uint64_t{1} << n;
    auto feasible = [&](std::uint64_t K) {
        return check(CodeParams{n, Rational(Integer(std::to_string(K))), d, pure}, formulation).feasible();
    };

    if (strategy == SearchStrategy::linear) {
        for (std::uint64_t K = top; K >= 1; --K)
            if (feasible(K))
                return K;
        return std::nullopt;
    }

    if (!feasible(1))
        return std::nullopt;
    std::uint64_t lo = 1, hi = top; // lo feasible; answer in [lo, hi]
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (feasible(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

bool AuditReport::passed() const
{
    for (const auto& e : entries)
        if (!e.report.passed() || !e.purity_preserved)
            return false;
    return true;
}

AuditReport monotonicity_audit(const CodeParams& params)
{
    AuditReport audit{check(params, Formulation::abs), {}};
    if (!audit.start.feasible())
        throw domain_error("monotonicity audit needs a feasible starting system");
    const EnumeratorABS& w = *audit.start.witness;
    auto vanishes_low = [&](const HomPoly& p) {
        for (unsigned j = 1; j < params.d; ++j)
            if (p[j] != 0)
                return false;
        return true;
    };
    const bool start_pure = vanishes_low(w.A);
    for (Rational Kp = 1; Kp < params.K; Kp += 1) {
        auto [a_hat, b_hat] = average_subcode(w.A, w.B, params.K, Kp);
        CodeParams sub = params;
        sub.K = Kp;
        AuditEntry entry{Kp, a_hat, check_membership(a_hat, sub), true};
        entry.purity_preserved = !start_pure || vanishes_low(a_hat);
        audit.entries.push_back(std::move(entry));
    }
    return audit;
}

std::string BoundTable::to_csv() const
{
    std::ostringstream os;
    os << "n,d,max_k,pure\n";
    for (const auto& cell : cells) {
        os << cell.n << ',' << cell.d << ',';
        if (cell.max_k)
            os << *cell.max_k;
        else
            os << "NONE";
        os << ',' << (pure ? "true" : "false") << '\n';
    }
    return os.str();
}

BoundTable table(unsigned n_max, unsigned d_max, bool pure, unsigned jobs, unsigned limit)
{
    if (n_max < 1 || d_max < 1)
        throw domain_error("table bounds must be positive");
    if (n_max > limit)
        throw limit_error("table size n_max=" + std::to_string(n_max) + " exceeds the limit " + std::to_string(limit));
    BoundTable out{pure, {}};
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned d = 1; d <= std::min(n, d_max); ++d)
            out.cells.push_back({n, d, std::nullopt});

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < out.cells.size(); i = next++)
                out.cells[i].max_k = max_k(out.cells[i].n, out.cells[i].d, pure);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
            next = out.cells.size();
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(out.cells.size())));
    std::vector<std::jthread> threads;
    for (unsigned t = 1; t < jobs; ++t)
        threads.emplace_back(worker);
    worker();
    threads.clear();
    if (error)
        std::rethrow_exception(error);

    for (std::size_t i = 1; i < out.cells.size(); ++i) {
        const auto& prev = out.cells[i - 1];
        const auto& cur = out.cells[i];
        if (prev.n == cur.n && cur.max_k.value_or(0) > prev.max_k.value_or(0))
            throw std::logic_error("max_k increased with d at n=" + std::to_string(cur.n));
    }
    return out;
}

} // namespace qlp
