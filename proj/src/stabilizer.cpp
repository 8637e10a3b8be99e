#include "qlp/stabilizer.hpp"

#include "qlp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qlp {

PauliString PauliString::parse(std::string_view text)
{
    PauliString out;
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        out.phase = 1;
        text.remove_prefix(1);
    }
    if (negative)
        out.phase += 2;
    if (text.empty())
        throw parse_error("empty Pauli string");
    for (char c : text) {
        switch (c) {
        case 'I': out.letters.push_back(Pauli::I); break;
        case 'X': out.letters.push_back(Pauli::X); break;
        case 'Y': out.letters.push_back(Pauli::Y); break;
        case 'Z': out.letters.push_back(Pauli::Z); break;
        default:
            throw parse_error(std::string("invalid Pauli letter '") + c + "'");
        }
    }
    return out;
}

std::string PauliString::str() const
{
    static constexpr const char* prefix[] = {"+", "+i", "-", "-i"};
    std::string out = prefix[phase % 4];
    for (Pauli p : letters)
        out += "IXYZ"[static_cast<int>(p)];
    return out;
}

unsigned weight(const PauliString& e)
{
    return static_cast<unsigned>(std::count_if(e.letters.begin(), e.letters.end(), [](Pauli p) { return p != Pauli::I; }));
}

StabilizerCode StabilizerCode::parse(std::string_view text)
{
    StabilizerCode code;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
            line.remove_prefix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.remove_suffix(1);
        if (line.empty())
            continue;
        PauliString g;
        try {
            g = PauliString::parse(line);
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (code.generators.empty())
            code.n = g.size();
        else if (g.size() != code.n)
            throw parse_error("line " + std::to_string(line_no) + ": generator length " + std::to_string(g.size()) +
                              " differs from " + std::to_string(code.n));
        code.generators.push_back(std::move(g));
    }
    if (code.generators.empty())
        throw parse_error("stabilizer code file has no generators");
    return code;
}

namespace {

struct Gauss {
    std::int64_t re = 0;
    std::int64_t im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    friend bool operator==(const Gauss&, const Gauss&) = default;
    friend auto operator<=>(const Gauss&, const Gauss&) = default;
    Gauss& operator+=(const Gauss& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend Gauss operator*(const Gauss& a, const Gauss& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

// Dense square matrix over the Gaussian integers, row-major.
struct Dense {
    std::size_t dim = 0;
    std::vector<Gauss> data;

    explicit Dense(std::size_t d = 0) : dim(d), data(d * d) {}
    static Dense identity(std::size_t d, Gauss scale = {1, 0})
    {
        Dense m(d);
        for (std::size_t i = 0; i < d; ++i)
            m(i, i) = scale;
        return m;
    }
    Gauss& operator()(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    const Gauss& operator()(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
    friend bool operator==(const Dense&, const Dense&) = default;
    friend auto operator<=>(const Dense& a, const Dense& b) { return a.data <=> b.data; }
};

Dense multiply(const Dense& a, const Dense& b)
{
    // Row-wise nonzeros of b keep Pauli products (one nonzero per row) cheap.
    std::vector<std::vector<std::pair<std::size_t, Gauss>>> b_rows(b.dim);
    for (std::size_t j = 0; j < b.dim; ++j)
        for (std::size_t k = 0; k < b.dim; ++k)
            if (!b(j, k).is_zero())
                b_rows[j].emplace_back(k, b(j, k));
    Dense c(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            const Gauss& aij = a(i, j);
            if (aij.is_zero())
                continue;
            for (const auto& [k, bjk] : b_rows[j])
                c(i, k) += aij * bjk;
        }
    return c;
}

Gauss trace(const Dense& m)
{
    Gauss t;
    for (std::size_t i = 0; i < m.dim; ++i)
        t += m(i, i);
    return t;
}

// Tr(m m) without forming the product.
Gauss trace_of_square(const Dense& m)
{
    Gauss t;
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t k = 0; k < m.dim; ++k)
            if (!m(i, k).is_zero())
                t += m(i, k) * m(k, i);
    return t;
}

Dense kron(const Dense& a, const Dense& b)
{
    Dense c(a.dim * b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                for (std::size_t l = 0; l < b.dim; ++l)
                    c(i * b.dim + k, j * b.dim + l) = a(i, j) * b(k, l);
    return c;
}

Dense single_qubit(Pauli p)
{
    Dense m(2);
    switch (p) {
    case Pauli::I: m(0, 0) = {1, 0}; m(1, 1) = {1, 0}; break;
    case Pauli::X: m(0, 1) = {1, 0}; m(1, 0) = {1, 0}; break;
    case Pauli::Y: m(0, 1) = {0, -1}; m(1, 0) = {0, 1}; break;
    case Pauli::Z: m(0, 0) = {1, 0}; m(1, 1) = {-1, 0}; break;
    }
    return m;
}

Dense to_dense(const PauliString& s)
{
    Dense m = Dense::identity(1);
    for (Pauli p : s.letters)
        m = kron(m, single_qubit(p));
    static constexpr Gauss phases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (auto& v : m.data)
        v = v * phases[s.phase % 4];
    return m;
}

} // namespace

StabilizerEnumerators enumerators_dense(const StabilizerCode& code, unsigned max_n)
{
    const unsigned n = code.n;
    if (n == 0 || code.generators.empty())
        throw invalid_code_error("stabilizer code has no generators");
    if (n > max_n)
        throw limit_error("dense oracle limited to n <= " + std::to_string(max_n) + " qubits (got " +
                          std::to_string(n) + ")");
    const std::size_t dim = std::size_t{1} << n;

    std::vector<Dense> gens;
    for (const auto& g : code.generators) {
        if (g.size() != n)
            throw invalid_code_error("generator " + g.str() + " has the wrong length");
        gens.push_back(to_dense(g));
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (multiply(gens[i], gens[j]) != multiply(gens[j], gens[i]))
                throw invalid_code_error("generators " + code.generators[i].str() + " and " +
                                         code.generators[j].str() + " anticommute");

    // Close the group under multiplication.
    std::set<Dense> group{Dense::identity(dim)};
    std::vector<Dense> frontier{Dense::identity(dim)};
    while (!frontier.empty()) {
        std::vector<Dense> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                Dense prod = multiply(h, g);
                if (group.insert(prod).second)
                    next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    if (group.contains(Dense::identity(dim, {-1, 0})))
        throw invalid_code_error("stabilizer group contains -I");

    // |G| P as an explicit matrix.
    Dense projector(dim);
    for (const auto& g : group)
        for (std::size_t k = 0; k < g.data.size(); ++k)
            projector.data[k] += g.data[k];

    std::vector<std::int64_t> a_raw(n + 1, 0), b_raw(n + 1, 0);
    PauliString e;
    e.letters.assign(n, Pauli::I);
    const std::size_t total = std::size_t{1} << (2 * n);
    for (std::size_t index = 0; index < total; ++index) {
        std::size_t rest = index;
        for (unsigned q = 0; q < n; ++q, rest >>= 2)
            e.letters[q] = static_cast<Pauli>(rest & 3);
        const Dense pe = multiply(projector, to_dense(e));
        const Gauss t1 = trace(pe);
        const Gauss t2 = trace_of_square(pe);
        if (t1.im != 0 || t2.im != 0)
            throw std::logic_error("non-real trace for Hermitian operators");
        a_raw[weight(e)] += t1.re * t1.re;
        b_raw[weight(e)] += t2.re;
    }

    const Integer group_size(static_cast<unsigned long>(group.size()));
    const Rational norm = Rational(1) / Rational(group_size * group_size);
    StabilizerEnumerators out{HomPoly(n), HomPoly(n), Rational(Integer(static_cast<unsigned long>(dim)), group_size)};
    out.K.canonicalize();
    for (unsigned i = 0; i <= n; ++i) {
        out.A[i] = Rational(Integer(std::to_string(a_raw[i]))) * norm;
        out.B[i] = Rational(Integer(std::to_string(b_raw[i]))) * norm;
    }
    return out;
}

} // namespace qlp
