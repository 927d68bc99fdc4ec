#include "cutcalc/laurent.hpp"

#include <sstream>

namespace cutcalc {

LaurentPoly LaurentPoly::term(Int coeff, int exp) {
    LaurentPoly p;
    p.set(exp, std::move(coeff));
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly::set(int exp, Int c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_)
        set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_)
        set(e, coeff(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
    return out;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_)
        out.coeffs_[-e] = c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_)
        out.coeffs_[e + k] = c;
    return out;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1)
                out << a.get_str() << "*";
            out << var;
            if (e != 1)
                out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace cutcalc
