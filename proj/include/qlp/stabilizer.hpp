#pragma once

#include "qlp/hompoly.hpp"
#include "qlp/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qlp {

enum class Pauli : std::uint8_t { I, X, Y, Z };

struct PauliString {
    std::vector<Pauli> letters;
    // Overall phase i^phase, phase in {0,1,2,3} (+1, +i, -1, -i).
    unsigned phase = 0;

    unsigned size() const { return static_cast<unsigned>(letters.size()); }

    // Letters from IXYZ with an optional leading +, -, +i, -i or i.
    static PauliString parse(std::string_view text);
    std::string str() const;
};

// Number of non-identity tensor factors.
unsigned weight(const PauliString& e);

struct StabilizerCode {
    unsigned n = 0;
    std::vector<PauliString> generators;

    // One generator per line; blank lines and '#' comments are ignored.
    static StabilizerCode parse(std::string_view text);
};

struct StabilizerEnumerators {
    HomPoly A;
    HomPoly B;
    Rational K; // 2^(n - rank of the stabilizer group)
};

inline constexpr unsigned default_oracle_max_n = 6;

/*
 * Brute force over all 4^n Hermitian Pauli errors e with the projector
 * P = (1/|G|) sum_{g in G} g formed as an explicit 2^n x 2^n matrix:
 *
 *     A_i = sum_{wt(e)=i} Tr(P e)^2,      B_i = sum_{wt(e)=i} Tr(P e P e).
 *
 * Throws invalid_code_error when generators anticommute or the group
 * contains -I, limit_error when n > max_n.
 */
StabilizerEnumerators enumerators_dense(const StabilizerCode& code, unsigned max_n = default_oracle_max_n);

} // namespace qlp
