#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdbox/arith.hpp"
#include "zdbox/representation.hpp"
#include "zdbox/verdict.hpp"
#include "zdbox/witness.hpp"

namespace zdbox {

enum class CaseLabel { prime, prime_square, prime_power_cube_plus, case_2mod4_small_exponents, general, boolean };

/// Stable identifier used in JSON ("case-2mod4-small-exponents").
const char* to_string(CaseLabel c);
/// Human-readable form for reports ("2 mod 4, exponents <= 2").
const char* describe(CaseLabel c);
CaseLabel parse_case_label(const std::string& s);

struct TheoremValue {
    Nat box = 0;
    CaseLabel label = CaseLabel::general;
};

/// Predicted boxicity of Gamma(Z_N): 0 for p and p^2, 1 for p^n (n >= 3), a - 1 when
/// N = 2 mod 4 with all odd exponents <= 2, and a otherwise.
TheoremValue theorem_box_value(const Factorization& fact);

struct Bounds {
    Nat lo = 0;
    Nat hi = 0;
    std::string note;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// [a - 1, a]; degenerate [0, 1] with a note when a < 2.
Bounds threshold_dim_bounds(const Factorization& fact);

struct CubicityBounds {
    double lower = 0.0;      ///< log2(floor(sqrt(N / p_1^2)) - 1) / 2, clamped at 0
    std::string lower_expr;  ///< the exact expression that produced `lower`
    bool lower_clamped = false;
    Nat upper = 0;           ///< a * ceil(log2 N)

    friend bool operator==(const CubicityBounds&, const CubicityBounds&) = default;
};

/// All logarithms base 2.
CubicityBounds cubicity_bounds(const Factorization& fact);

/// [floor(k/2), k]
Bounds boolean_bounds(unsigned k);

Nat cograph_dim_upper(const Factorization& fact);
Nat cograph_dim_upper_boolean(unsigned k);

struct ClassRow {
    Label representative = 0;
    std::vector<Label> members;

    std::size_t size() const { return members.size(); }
    friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

/// Equal-neighbourhood classes of Gamma(Z_N), ordered by representative.
struct ClassSizeTable {
    Nat N = 0;
    std::vector<ClassRow> rows;

    std::size_t total() const;
    const ClassRow* row_containing(Label l) const;
};

ClassSizeTable class_size_table(Nat N);

/// The certified answer for one Gamma(Z_N) or Gamma(Z_2^k).
struct BoxicityReport {
    enum class Kind { zn, boolean };

    Kind kind = Kind::zn;
    Nat parameter = 0;  ///< N or k
    Factorization factorization;
    CaseLabel case_label = CaseLabel::general;

    Nat box_lo = 0;  ///< verified lower bound
    Nat box_hi = 0;  ///< verified upper bound
    std::optional<Nat> theorem_box;
    Bounds dim_th;
    Nat dim_cog_upper = 0;
    std::optional<CubicityBounds> cubicity;

    Construction construction;
    RobertsWitness roberts;
    IndependenceWitness independence;
    std::vector<Verdict> verdicts;
    std::vector<std::string> notes;
    bool ok = false;

    bool exact() const { return box_lo == box_hi; }
    bool all_verdicts_pass() const;
    /// Bit width used to print labels (k for boolean reports, 0 otherwise).
    unsigned label_bits() const { return kind == Kind::boolean ? static_cast<unsigned>(parameter) : 0; }
};

}  // namespace zdbox
