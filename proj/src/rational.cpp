#include "pcbf/rational.hpp"

#include <cctype>
#include <cmath>

namespace pcbf {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    // strip surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw ParseError("sign without digits in rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction literal: " + text);
        mpz_class den_z(den);
        if (den_z == 0) throw ParseError("zero denominator: " + text);
        Rat r{mpz_class(num), den_z};
        r.canonicalize();
        if (negative) r = -r;
        return r;
    }

    // decimal with optional exponent
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string etail = s.substr(epos + 1);
        s = s.substr(0, epos);
        if (etail.empty()) throw ParseError("malformed exponent: " + text);
        bool eneg = false;
        if (etail[0] == '+' || etail[0] == '-') {
            eneg = (etail[0] == '-');
            etail.erase(etail.begin());
        }
        if (!all_digits(etail) || etail.size() > 6)
            throw ParseError("malformed exponent: " + text);
        exp10 = std::stol(etail);
        if (eneg) exp10 = -exp10;
    }

    std::string digits = s;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        digits = s.substr(0, dot) + frac;
        exp10 -= static_cast<long>(frac.size());
    }
    if (digits.empty()) digits = "0";
    if (!all_digits(digits)) throw ParseError("malformed rational literal: " + text);

    mpz_class mantissa(digits);
    Rat r(mantissa);
    if (exp10 > 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
        r *= Rat(scale);
    } else if (exp10 < 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
        r /= Rat(scale);
    }
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

Rat rat_from_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite double");
    Rat r;
    mpq_set_d(r.get_mpq_t(), value);
    return r;
}

double rat_to_double(const Rat& value) { return value.get_d(); }

std::string rat_to_string(const Rat& value) {
    mpz_class den = value.get_den();
    // count factors of 2 and 5
    unsigned long twos = 0, fives = 0;
    mpz_class d = den;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
        ++fives;
    }
    if (d != 1) {
        return value.get_num().get_str() + "/" + value.get_den().get_str();
    }
    unsigned long k = std::max(twos, fives);
    mpz_class scale_num;  // 10^k / den, integral by construction
    mpz_ui_pow_ui(scale_num.get_mpz_t(), 10, k);
    mpz_class scaled = value.get_num() * (scale_num / den);
    bool neg = scaled < 0;
    mpz_class abs_scaled = abs(scaled);
    std::string digits = abs_scaled.get_str();
    std::string out;
    if (k == 0) {
        out = digits;
    } else {
        if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
        // trim trailing zeros after the decimal point
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

Rat rat_frac(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace pcbf
