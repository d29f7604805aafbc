#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zdbox/arith.hpp"

namespace zdbox {

/// Exact rational in canonical form: gcd(|num|, den) = 1 and den >= 1.
///
/// Intermediates are computed in 128 bits; a result that does not fit back
/// into 64 bits raises std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    /// k/m for naturals; throws InvalidInput when m = 0.
    static Rational of_fraction(Nat k, Nat m);

    /// Parses "num/den" or a bare integer. Throws InvalidInput on malformed text.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    /// Canonical "num/den" text, den always present ("2/1", "-1/3").
    std::string str() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace zdbox
