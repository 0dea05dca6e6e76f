#include "diffbody/rat.hpp"

#include <cctype>

namespace diffbody {

namespace {

bool valid_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false))
        throw ParseError("malformed rational: \"" + text + "\"");
    Int n(num), d(den);
    if (d == 0) throw ParseError("malformed rational (zero denominator): \"" + text + "\"");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return out;  // power of a canonical rational is canonical
}

Int factorial(unsigned n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rat snap_dyadic(const Rat& x, unsigned bits) {
    // round(x * 2^bits) / 2^bits with ties toward +inf
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rat scaled = x * Rat(scale);
    Int twice_num = scaled.get_num() * 2 + scaled.get_den();
    Int rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice_num.get_mpz_t(), Int(scaled.get_den() * 2).get_mpz_t());
    return rat(rounded, scale);
}

}  // namespace diffbody
