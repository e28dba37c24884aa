#include "hyparith/bigfloat.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

namespace hyparith {

BigReal BigReal::from_decimal(const std::string& s, Precision prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0) {
        throw ParseError("not a decimal number: '" + s + "'");
    }
    return r;
}

std::string BigReal::to_decimal(size_t digits) const {
    if (!is_finite()) return is_zero() ? "0" : "nan";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* raw_str = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw_str);
    mpfr_free_str(raw_str);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    // strip trailing zeros but keep at least one digit
    size_t last = body.find_last_not_of('0');
    if (last != std::string::npos) body.erase(last + 1);
    if (body.empty()) body = "0";
    std::ostringstream out;
    if (neg) out << '-';
    out << "0." << body << 'e' << e;
    return out.str();
}

}  // namespace hyparith
