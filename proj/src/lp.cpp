#include "qlp/lp.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qlp {

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs)
{
    if (coeffs.size() != num_vars)
        throw std::invalid_argument("row width " + std::to_string(coeffs.size()) + " != num_vars " +
                                    std::to_string(num_vars));
    for (auto& c : coeffs)
        c.canonicalize();
    rhs.canonicalize();
    rows.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::mark_nonneg(std::size_t var)
{
    if (var >= num_vars)
        throw std::invalid_argument("nonneg index out of range");
    auto it = std::lower_bound(nonneg_vars.begin(), nonneg_vars.end(), var);
    if (it == nonneg_vars.end() || *it != var)
        nonneg_vars.insert(it, var);
}

bool LinearProgram::is_nonneg(std::size_t var) const
{
    return std::binary_search(nonneg_vars.begin(), nonneg_vars.end(), var);
}

void LinearProgram::validate() const
{
    for (const auto& row : rows)
        if (row.coeffs.size() != num_vars)
            throw std::invalid_argument("row width does not match num_vars");
    for (std::size_t i = 0; i < nonneg_vars.size(); ++i) {
        if (nonneg_vars[i] >= num_vars)
            throw std::invalid_argument("nonneg index out of range");
        if (i > 0 && nonneg_vars[i] <= nonneg_vars[i - 1])
            throw std::invalid_argument("nonneg indices must be sorted and unique");
    }
}

std::string LinearProgram::canonical_text() const
{
    std::ostringstream os;
    os << "qlp-lp 1\nvars " << num_vars << "\nnonneg";
    for (auto j : nonneg_vars)
        os << ' ' << j;
    os << '\n';
    for (const auto& row : rows) {
        os << (row.relation == Relation::eq ? "eq" : "ge");
        for (const auto& c : row.coeffs)
            os << ' ' << to_string(c);
        os << " : " << to_string(row.rhs) << '\n';
    }
    return os.str();
}

std::string LinearProgram::hash() const
{
    const std::string text = canonical_text();
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

using Row = std::vector<Rational>;

// row -= factor * pivot_row, skipping zeros of the pivot row
void subtract_multiple(Row& row, const Row& pivot_row, const Rational& factor)
{
    for (std::size_t k = 0; k < row.size(); ++k)
        if (sgn(pivot_row[k]) != 0)
            row[k] -= factor * pivot_row[k];
}

void divide(Row& row, const Rational& by)
{
    for (auto& v : row)
        if (sgn(v) != 0)
            v /= by;
}

/*
 * Working form. Columns of the standard-form system are the original
 * variables followed by one surplus column per GE row:
 *
 *     coeffs_r . x - s_r = rhs_r   (GE),     coeffs_r . x = rhs_r   (EQ)
 *
 * Each working row also carries its expression as a combination of the
 * original rows (the `combo` block), so that dual multipliers found on the
 * working rows map back to the caller's rows.
 */
class Solver {
  public:
    explicit Solver(const LinearProgram& lp) : lp_(lp)
    {
        num_rows_ = lp.rows.size();
        for (std::size_t r = 0; r < num_rows_; ++r)
            if (lp.rows[r].relation == Relation::ge)
                surplus_of_.push_back(r);
        num_cols_ = lp.num_vars + surplus_of_.size();

        for (std::size_t r = 0; r < num_rows_; ++r) {
            Row coeffs(num_cols_);
            std::copy(lp.rows[r].coeffs.begin(), lp.rows[r].coeffs.end(), coeffs.begin());
            Row combo(num_rows_);
            combo[r] = 1;
            work_.push_back({std::move(coeffs), lp.rows[r].rhs, std::move(combo)});
        }
        for (std::size_t k = 0; k < surplus_of_.size(); ++k)
            work_[surplus_of_[k]].coeffs[lp.num_vars + k] = -1;
    }

    Certificate run()
    {
        eliminate_free_variables();
        return phase_one();
    }

  private:
    struct WorkRow {
        Row coeffs;
        Rational rhs;
        Row combo;
    };

    bool column_is_nonneg(std::size_t col) const { return col >= lp_.num_vars || lp_.is_nonneg(col); }

    // Gauss-Jordan on each free column. The pivot row becomes the definition
    // of that variable and leaves the system handed to phase I.
    void eliminate_free_variables()
    {
        std::vector<bool> used(work_.size(), false);
        for (std::size_t j = 0; j < lp_.num_vars; ++j) {
            if (lp_.is_nonneg(j))
                continue;
            std::optional<std::size_t> pivot;
            for (std::size_t r = 0; r < work_.size() && !pivot; ++r)
                if (!used[r] && sgn(work_[r].coeffs[j]) != 0)
                    pivot = r;
            if (!pivot)
                continue; // absent from every remaining row; fixed at 0
            WorkRow& p = work_[*pivot];
            const Rational lead = p.coeffs[j];
            divide(p.coeffs, lead);
            divide(p.combo, lead);
            p.rhs /= lead;
            for (std::size_t r = 0; r < work_.size(); ++r) {
                if (r == *pivot || sgn(work_[r].coeffs[j]) == 0)
                    continue;
                const Rational factor = work_[r].coeffs[j];
                subtract_multiple(work_[r].coeffs, p.coeffs, factor);
                subtract_multiple(work_[r].combo, p.combo, factor);
                work_[r].rhs -= factor * p.rhs;
            }
            used[*pivot] = true;
            definitions_.push_back({j, *pivot});
        }
        for (std::size_t r = 0; r < work_.size(); ++r)
            if (!used[r])
                reduced_rows_.push_back(r);
        for (std::size_t c = 0; c < num_cols_; ++c)
            if (column_is_nonneg(c))
                phase_cols_.push_back(c);
    }

    /*
     * Phase I on the reduced rows:  M z + a = b,  z, a >= 0,  b >= 0,
     * minimizing sum(a). Tableau columns are phase_cols_ followed by one
     * artificial per row; the last entry of each row is the rhs.
     */
    Certificate phase_one()
    {
        const std::size_t m = reduced_rows_.size();
        const std::size_t nz = phase_cols_.size();
        const std::size_t width = nz + m + 1;
        std::vector<Row> tab(m, Row(width));
        std::vector<Row> combos(m);
        for (std::size_t i = 0; i < m; ++i) {
            const WorkRow& w = work_[reduced_rows_[i]];
            const bool flip = w.rhs < 0;
            for (std::size_t k = 0; k < nz; ++k)
                tab[i][k] = flip ? Rational(-w.coeffs[phase_cols_[k]]) : w.coeffs[phase_cols_[k]];
            tab[i][nz + i] = 1;
            tab[i][width - 1] = flip ? Rational(-w.rhs) : w.rhs;
            combos[i] = w.combo;
            if (flip)
                for (auto& v : combos[i])
                    v = -v;
        }
        // Reduced costs of the phase-I objective; obj[width-1] is -(objective).
        Row obj(width);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < width; ++k)
                if (k < nz || k == width - 1)
                    obj[k] -= tab[i][k];
        std::vector<std::size_t> basis(m);
        for (std::size_t i = 0; i < m; ++i)
            basis[i] = nz + i;

        for (;;) {
            // Bland: lowest-index improving column, then lowest-index
            // basic variable among tied ratios.
            std::optional<std::size_t> entering;
            for (std::size_t k = 0; k < nz + m && !entering; ++k)
                if (sgn(obj[k]) < 0)
                    entering = k;
            if (!entering)
                break;
            const std::size_t e = *entering;
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t i = 0; i < m; ++i) {
                if (sgn(tab[i][e]) <= 0)
                    continue;
                Rational ratio = tab[i][width - 1] / tab[i][e];
                if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            // The phase-I objective is bounded below by 0, so an improving
            // column always has a positive entry.
            if (!leave)
                throw std::logic_error("phase I unbounded; tableau corrupted");
            pivot(tab, obj, *leave, e);
            basis[*leave] = e;
        }

        if (sgn(obj[width - 1]) != 0)
            return farkas(obj, combos, nz);

        Row column_values(num_cols_);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < nz)
                column_values[phase_cols_[basis[i]]] = tab[i][width - 1];
        for (const auto& [var, row] : definitions_) {
            const WorkRow& w = work_[row];
            Rational value = w.rhs;
            for (std::size_t c = 0; c < num_cols_; ++c)
                if (c != var && sgn(w.coeffs[c]) != 0)
                    value -= w.coeffs[c] * column_values[c];
            column_values[var] = value;
        }
        Certificate cert{Certificate::Kind::feasible, {}};
        cert.values.assign(column_values.begin(), column_values.begin() + static_cast<std::ptrdiff_t>(lp_.num_vars));
        return cert;
    }

    static void pivot(std::vector<Row>& tab, Row& obj, std::size_t row, std::size_t col)
    {
        const Rational lead = tab[row][col];
        divide(tab[row], lead);
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (i == row || sgn(tab[i][col]) == 0)
                continue;
            const Rational factor = tab[i][col];
            subtract_multiple(tab[i], tab[row], factor);
        }
        if (sgn(obj[col]) != 0) {
            const Rational factor = obj[col];
            subtract_multiple(obj, tab[row], factor);
        }
    }

    // At a phase-I optimum with positive value, y_i = 1 - (reduced cost of
    // artificial i) satisfies y.M <= 0 and y.b > 0.
    Certificate farkas(const Row& obj, const std::vector<Row>& combos, std::size_t nz) const
    {
        Row lambda(num_rows_);
        for (std::size_t i = 0; i < combos.size(); ++i) {
            const Rational y = 1 - obj[nz + i];
            if (sgn(y) == 0)
                continue;
            for (std::size_t r = 0; r < num_rows_; ++r)
                if (sgn(combos[i][r]) != 0)
                    lambda[r] += y * combos[i][r];
        }
        Certificate cert{Certificate::Kind::infeasible, lambda};
        for (auto j : lp_.nonneg_vars) {
            Rational mu = 0;
            for (std::size_t r = 0; r < num_rows_; ++r)
                if (sgn(lambda[r]) != 0)
                    mu -= lambda[r] * lp_.rows[r].coeffs[j];
            cert.values.push_back(mu);
        }
        return cert;
    }

    const LinearProgram& lp_;
    std::size_t num_rows_ = 0;
    std::size_t num_cols_ = 0;
    std::vector<std::size_t> surplus_of_;
    std::vector<WorkRow> work_;
    std::vector<std::pair<std::size_t, std::size_t>> definitions_; // (variable, work row)
    std::vector<std::size_t> reduced_rows_;
    std::vector<std::size_t> phase_cols_;
};

} // namespace

Certificate solve_feasibility(const LinearProgram& lp)
{
    lp.validate();
    return Solver(lp).run();
}

bool verify_certificate(const LinearProgram& lp, const Certificate& cert)
{
    lp.validate();
    if (cert.feasible()) {
        if (cert.values.size() != lp.num_vars)
            throw std::invalid_argument("point has " + std::to_string(cert.values.size()) + " entries, expected " +
                                        std::to_string(lp.num_vars));
        for (auto j : lp.nonneg_vars)
            if (cert.values[j] < 0)
                return false;
        for (const auto& row : lp.rows) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < lp.num_vars; ++j)
                lhs += row.coeffs[j] * cert.values[j];
            if (row.relation == Relation::eq ? lhs != row.rhs : lhs < row.rhs)
                return false;
        }
        return true;
    }

    const std::size_t expected = lp.rows.size() + lp.nonneg_vars.size();
    if (cert.values.size() != expected)
        throw std::invalid_argument("dual has " + std::to_string(cert.values.size()) + " entries, expected " +
                                    std::to_string(expected));
    std::vector<Rational> combined(lp.num_vars);
    Rational rhs = 0;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const Rational& lambda = cert.values[r];
        if (lp.rows[r].relation == Relation::ge && lambda < 0)
            return false;
        for (std::size_t j = 0; j < lp.num_vars; ++j)
            combined[j] += lambda * lp.rows[r].coeffs[j];
        rhs += lambda * lp.rows[r].rhs;
    }
    for (std::size_t k = 0; k < lp.nonneg_vars.size(); ++k) {
        const Rational& mu = cert.values[lp.rows.size() + k];
        if (mu < 0)
            return false;
        combined[lp.nonneg_vars[k]] += mu;
    }
    for (const auto& c : combined)
        if (c != 0)
            return false;
    return rhs > 0;
}

} // namespace qlp
