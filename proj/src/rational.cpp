#include "bunklab/rational.hpp"

#include <mpfr.h>

#include <cctype>

namespace bunklab {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s = text;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s = s.substr(1);
    }

    Rat value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal: " + text);
        Int n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        value = Rat(n, d);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal literal: " + text);
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Int digits(whole + frac);
        value = Rat(digits, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed integer literal: " + text);
        value = Rat(Int(s));
    }
    return negative ? Rat(-value) : value;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    // base is canonical, so num^k/den^k already is.
    return out;
}

bool is_probability(const Rat& r) { return r >= 0 && r <= 1; }

double rat_log10_abs(const Rat& r) {
    if (r == 0) throw std::invalid_argument("log10 of zero");
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_q(x, r.get_mpq_t(), MPFR_RNDN);
    mpfr_abs(x, x, MPFR_RNDN);
    mpfr_log10(x, x, MPFR_RNDN);
    double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

}  // namespace bunklab
