#pragma once

#include "cutcalc/rational.hpp"

#include <map>
#include <string>

namespace cutcalc {

/// Finitely supported integer Laurent polynomial in one variable t.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly one() { return term(1, 0); }
    static LaurentPoly term(Int coeff, int exp);

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    Int coeff(int exp) const;
    bool is_zero() const { return coeffs_.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Substitution t -> 1/t.
    LaurentPoly reversed() const;
    /// Multiplication by t^k.
    LaurentPoly shifted(int k) const;

    bool operator==(const LaurentPoly& other) const = default;

    std::string str(const std::string& var = "t") const;

private:
    void set(int exp, Int c);
    std::map<int, Int> coeffs_;  // no zero entries stored
};

}  // namespace cutcalc
