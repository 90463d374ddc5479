#ifndef CENTERFOCUS_RATIONAL_HPP
#define CENTERFOCUS_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cf {

// Exact rationals. mpq_class keeps values reduced with a positive denominator
// after every arithmetic operation; parse() canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw parse_error("empty rational", 0);
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(s[k]))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else if (s[k] == '/' && !seen_slash) {
            seen_slash = true;
        } else {
            throw parse_error("malformed rational '" + s + "'", k);
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw parse_error("malformed rational '" + s + "'", 0);
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw parse_error("malformed rational '" + s + "'", 0);
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_pow(const Rational& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return rational_pow(1 / base, -e);
    }
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace cf

#endif  // CENTERFOCUS_RATIONAL_HPP
