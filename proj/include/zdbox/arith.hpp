#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdbox {

using Nat = std::uint64_t;

/// Raised when an operation is called outside its domain (N < 2, x = 0, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a construction is asked for on an N it does not apply to.
class CaseMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct PrimePower {
    Nat p = 0;
    unsigned n = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of N with strictly increasing primes.
struct Factorization {
    Nat N = 0;
    std::vector<PrimePower> factors;

    std::size_t size() const { return factors.size(); }
    const PrimePower& operator[](std::size_t i) const { return factors[i]; }

    /// Index of the factor with prime p, or size() if p does not divide N.
    std::size_t index_of(Nat p) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to sqrt(N). Throws InvalidInput for N < 2.
Factorization factorize(Nat N);

/// Largest e with q^e | x. Throws InvalidInput for x = 0 or q < 2.
unsigned prime_valuation(Nat q, Nat x);

/// Throws InvalidInput for gcd(0, 0).
Nat gcd(Nat u, Nat v);

/// ceil(log2(x)) for x >= 1.
unsigned ceil_log2(Nat x);

/// floor(sqrt(x)), exact.
Nat isqrt(Nat x);

std::string to_string(const Factorization& f);

}  // namespace zdbox
