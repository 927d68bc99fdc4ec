#pragma once

#include "cutcalc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cutcalc {

struct Generator {
    std::string name;
    int degree = 0;

    bool operator==(const Generator&) const = default;
};

/// Monomial over a fixed ordered generator list, stored as an exponent vector.
/// Generators of odd degree square to zero, so their exponents are 0 or 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t ngens) { return Monomial(std::vector<unsigned>(ngens, 0)); }
    static Monomial generator(std::size_t ngens, std::size_t i);

    const std::vector<unsigned>& exps() const { return exps_; }
    unsigned exp(std::size_t i) const { return exps_[i]; }
    std::size_t ngens() const { return exps_.size(); }
    bool is_unit() const;

    int degree(const std::vector<Generator>& gens) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<unsigned> exps_;
};

/// Within one degree this is graded-lex: u^2 before u*v before v^2 when u is
/// declared first. Used as the map order everywhere, so term order is uniform.
struct MonoLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exps() > b.exps();
    }
};

using Poly = std::map<Monomial, Rat, MonoLexDesc>;

struct MonoProduct {
    bool zero = false;  // an odd generator appeared squared
    int sign = 1;       // Koszul sign from reordering odd generators
    Monomial mono;
};

/// Product in the free graded-commutative algebra; sign convention: generators
/// are sorted into declaration order and each transposition of two odd
/// generators contributes -1.
MonoProduct mono_mul(const Monomial& a, const Monomial& b, const std::vector<Generator>& gens);

/// All monomials of exact degree d, odd exponents capped at 1, in
/// lexicographic-descending order (first generator's exponent highest first).
std::vector<Monomial> enumerate_monomials(const std::vector<Generator>& gens, int d);

Poly poly_zero();
Poly poly_term(const Rat& c, Monomial m);
Poly& poly_add_in_place(Poly& a, const Poly& b);
Poly poly_scale(const Poly& p, const Rat& c);
Poly poly_mul(const Poly& a, const Poly& b, const std::vector<Generator>& gens);
bool poly_is_zero(const Poly& p);

/// Common degree of all terms, or nullopt for the zero polynomial.
/// Throws AlgebraError when the polynomial is not homogeneous.
std::optional<int> poly_degree(const Poly& p, const std::vector<Generator>& gens);

std::string mono_str(const Monomial& m, const std::vector<Generator>& gens);
std::string poly_str(const Poly& p, const std::vector<Generator>& gens);

/// Generators-and-relations description of a graded-commutative algebra over Q.
/// Everything in degree > top_degree is declared zero; relations of degree
/// above the bound are accepted (they are vacuous under that convention).
struct Presentation {
    std::vector<Generator> generators;
    std::vector<Poly> relations;
    int top_degree = 0;

    bool operator==(const Presentation&) const = default;
};

/// Unique generator names, degrees >= 1, homogeneous relations, top_degree >= 0.
void validate_presentation(const Presentation& p);

std::string presentation_str(const Presentation& p);

}  // namespace cutcalc
