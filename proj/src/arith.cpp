#include "zdbox/arith.hpp"

#include <bit>
#include <numeric>
#include <sstream>

namespace zdbox {

std::size_t Factorization::index_of(Nat p) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].p == p) return i;
    return factors.size();
}

Factorization factorize(Nat N) {
    if (N < 2) throw InvalidInput("factorize: N must be at least 2, got " + std::to_string(N));
    Factorization f;
    f.N = N;
    Nat rest = N;
    auto strip = [&](Nat p) {
        unsigned n = 0;
        while (rest % p == 0) {
            rest /= p;
            ++n;
        }
        if (n > 0) f.factors.push_back({p, n});
    };
    strip(2);
    for (Nat p = 3; p <= rest / p; p += 2) strip(p);
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

unsigned prime_valuation(Nat q, Nat x) {
    if (q < 2) throw InvalidInput("prime_valuation: q must be prime");
    if (x == 0) throw InvalidInput("prime_valuation: valuation of 0 is undefined");
    unsigned e = 0;
    while (x % q == 0) {
        x /= q;
        ++e;
    }
    return e;
}

Nat gcd(Nat u, Nat v) {
    if (u == 0 && v == 0) throw InvalidInput("gcd(0, 0) is undefined");
    return std::gcd(u, v);
}

unsigned ceil_log2(Nat x) {
    if (x == 0) throw InvalidInput("ceil_log2(0)");
    return x == 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

Nat isqrt(Nat x) {
    if (x < 2) return x;
    // Newton from above; r stays >= floor(sqrt(x)).
    Nat r = Nat{1} << ((std::bit_width(x) + 1) / 2);
    while (true) {
        Nat next = (r + x / r) / 2;
        if (next >= r) break;
        r = next;
    }
    return r;
}

std::string to_string(const Factorization& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) os << " * ";
        os << f.factors[i].p;
        if (f.factors[i].n > 1) os << '^' << f.factors[i].n;
    }
    return os.str();
}

}  // namespace zdbox
