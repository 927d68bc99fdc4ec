#include "cutcalc/presentation.hpp"

#include "cutcalc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cutcalc {

Monomial Monomial::generator(std::size_t ngens, std::size_t i) {
    std::vector<unsigned> e(ngens, 0);
    e[i] = 1;
    return Monomial(std::move(e));
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

int Monomial::degree(const std::vector<Generator>& gens) const {
    if (exps_.size() != gens.size())
        throw AlgebraError("monomial width does not match generator count");
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += static_cast<int>(exps_[i]) * gens[i].degree;
    return d;
}

MonoProduct mono_mul(const Monomial& a, const Monomial& b, const std::vector<Generator>& gens) {
    if (a.ngens() != gens.size() || b.ngens() != gens.size())
        throw AlgebraError("monomial width does not match generator count");
    MonoProduct out;
    std::vector<unsigned> e(gens.size());
    // Each odd generator of b crosses every odd generator of a declared later.
    unsigned odd_suffix = 0;  // odd-degree exponents of a strictly after position i
    std::vector<unsigned> a_odd_after(gens.size() + 1, 0);
    for (std::size_t i = gens.size(); i-- > 0;) {
        a_odd_after[i] = odd_suffix;
        if (gens[i].degree % 2 != 0)
            odd_suffix += a.exp(i);
    }
    unsigned crossings = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        e[i] = a.exp(i) + b.exp(i);
        if (gens[i].degree % 2 != 0) {
            if (e[i] > 1) {
                out.zero = true;
                return out;
            }
            crossings += b.exp(i) * a_odd_after[i];
        }
    }
    out.sign = (crossings % 2 == 0) ? 1 : -1;
    out.mono = Monomial(std::move(e));
    return out;
}

namespace {

void enumerate_rec(const std::vector<Generator>& gens, std::size_t i, int remaining,
                   std::vector<unsigned>& exps, std::vector<Monomial>& out) {
    if (i == gens.size()) {
        if (remaining == 0)
            out.emplace_back(exps);
        return;
    }
    const int d = gens[i].degree;
    int emax = remaining / d;
    if (d % 2 != 0)
        emax = std::min(emax, 1);
    for (int e = emax; e >= 0; --e) {
        exps[i] = static_cast<unsigned>(e);
        enumerate_rec(gens, i + 1, remaining - e * d, exps, out);
    }
    exps[i] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const std::vector<Generator>& gens, int d) {
    if (d < 0)
        throw AlgebraError("monomial degree must be nonnegative");
    std::vector<Monomial> out;
    std::vector<unsigned> exps(gens.size(), 0);
    enumerate_rec(gens, 0, d, exps, out);
    return out;
}

Poly poly_zero() {
    return Poly{};
}

Poly poly_term(const Rat& c, Monomial m) {
    Poly p;
    if (c != 0)
        p.emplace(std::move(m), c);
    return p;
}

Poly& poly_add_in_place(Poly& a, const Poly& b) {
    for (const auto& [m, c] : b) {
        auto it = a.find(m);
        if (it == a.end()) {
            a.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                a.erase(it);
        }
    }
    return a;
}

Poly poly_scale(const Poly& p, const Rat& c) {
    Poly out;
    if (c == 0)
        return out;
    for (const auto& [m, x] : p)
        out.emplace(m, x * c);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b, const std::vector<Generator>& gens) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            MonoProduct prod = mono_mul(ma, mb, gens);
            if (prod.zero)
                continue;
            Rat c = ca * cb;
            if (prod.sign < 0)
                c = -c;
            auto it = out.find(prod.mono);
            if (it == out.end()) {
                if (c != 0)
                    out.emplace(prod.mono, c);
            } else {
                it->second += c;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

bool poly_is_zero(const Poly& p) {
    return p.empty();
}

std::optional<int> poly_degree(const Poly& p, const std::vector<Generator>& gens) {
    std::optional<int> deg;
    for (const auto& [m, c] : p) {
        (void)c;
        const int d = m.degree(gens);
        if (!deg)
            deg = d;
        else if (*deg != d)
            throw AlgebraError("polynomial is not homogeneous: has terms of degree " +
                               std::to_string(*deg) + " and " + std::to_string(d));
    }
    return deg;
}

std::string mono_str(const Monomial& m, const std::vector<Generator>& gens) {
    if (m.is_unit())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (m.exp(i) == 0)
            continue;
        if (!first)
            out << "*";
        first = false;
        out << gens[i].name;
        if (m.exp(i) > 1)
            out << "^" << m.exp(i);
    }
    return out.str();
}

std::string poly_str(const Poly& p, const std::vector<Generator>& gens) {
    if (p.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p) {
        Rat a = c;
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
        if (m.is_unit()) {
            out << rat_str(a);
        } else {
            if (a != 1)
                out << rat_str(a) << "*";
            out << mono_str(m, gens);
        }
    }
    return out.str();
}

void validate_presentation(const Presentation& p) {
    if (p.top_degree < 0)
        throw AlgebraError("top degree must be nonnegative");
    std::set<std::string> seen;
    for (const Generator& g : p.generators) {
        if (g.name.empty())
            throw AlgebraError("generator with empty name");
        if (g.degree < 1)
            throw AlgebraError("generator '" + g.name + "' must have degree >= 1");
        if (!seen.insert(g.name).second)
            throw AlgebraError("duplicate generator name '" + g.name + "'");
    }
    for (const Poly& r : p.relations) {
        for (const auto& [m, c] : r) {
            (void)c;
            if (m.ngens() != p.generators.size())
                throw AlgebraError("relation references a different generator list");
        }
        poly_degree(r, p.generators);  // throws when inhomogeneous
    }
}

std::string presentation_str(const Presentation& p) {
    std::ostringstream out;
    out << "Q[";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i)
            out << ", ";
        out << p.generators[i].name << ":" << p.generators[i].degree;
    }
    out << "]";
    if (!p.relations.empty()) {
        out << " / (";
        for (std::size_t i = 0; i < p.relations.size(); ++i) {
            if (i)
                out << ", ";
            out << poly_str(p.relations[i], p.generators);
        }
        out << ")";
    }
    out << ", zero above degree " << p.top_degree;
    return out.str();
}

}  // namespace cutcalc
