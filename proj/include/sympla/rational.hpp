#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sympla {

/// Exact rational scalar. All algebra in this library is exact; no floating
/// point anywhere. GMP keeps values in lowest terms with positive denominator
/// as long as construction goes through the helpers below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" with optional leading '-' on p and positive q.
inline Rat parse_rat(const std::string& s) {
    auto fail = [&]() -> Rat {
        throw std::invalid_argument("malformed rational '" + s + "'");
    };
    if (s.empty()) return fail();
    std::size_t pos = 0;
    if (s[0] == '-') pos = 1;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return fail();
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) {
        if (s[pos] != '/') return fail();
        std::size_t den_start = ++pos;
        if (pos >= s.size()) return fail();
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) return fail();
        if (mpz_class(s.substr(den_start)) == 0) return fail();
    }
    Rat q(s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) {
    return q.get_str();
}

inline int sign(const Rat& q) { return sgn(q); }

/// q^k for k >= 0.
inline Rat rat_pow(const Rat& q, unsigned k) {
    Rat r(1);
    for (unsigned i = 0; i < k; ++i) r *= q;
    return r;
}

}  // namespace sympla
