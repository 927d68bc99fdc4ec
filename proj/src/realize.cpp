#include "cutcalc/realize.hpp"

#include "cutcalc/errors.hpp"

#include <algorithm>
#include <map>

namespace cutcalc {

const std::vector<Monomial>& Realization::monomials(int d) const {
    if (d < 0 || d > pres_.top_degree)
        throw AlgebraError("degree out of range");
    return monomials_[static_cast<std::size_t>(d)];
}

const la::Subspace& Realization::relation_span(int d) const {
    if (d < 0 || d > pres_.top_degree)
        throw AlgebraError("degree out of range");
    return relation_spans_[static_cast<std::size_t>(d)];
}

const std::vector<std::size_t>& Realization::basis_monomials(int d) const {
    if (d < 0 || d > pres_.top_degree)
        throw AlgebraError("degree out of range");
    return basis_cols_[static_cast<std::size_t>(d)];
}

namespace {

std::size_t monomial_column(const std::vector<Monomial>& monos, const Monomial& m) {
    auto it = std::find(monos.begin(), monos.end(), m);
    if (it == monos.end())
        throw AlgebraError("monomial not found in its degree's enumeration");
    return static_cast<std::size_t>(it - monos.begin());
}

}  // namespace

Element Realization::eval(const Poly& p, std::optional<int> expected_degree) const {
    std::optional<int> deg = poly_degree(p, pres_.generators);
    if (expected_degree && deg && *deg != *expected_degree)
        throw AlgebraError("polynomial has degree " + std::to_string(*deg) + ", expected " +
                           std::to_string(*expected_degree));
    if (!deg) {
        if (!expected_degree)
            throw AlgebraError("cannot infer the degree of the zero polynomial");
        deg = expected_degree;
    }
    if (*deg < 0 || *deg > pres_.top_degree)
        throw AlgebraError("degree " + std::to_string(*deg) + " outside 0.." +
                           std::to_string(pres_.top_degree));
    const auto& monos = monomials(*deg);
    QVec full = zero_vec(monos.size());
    for (const auto& [m, c] : p)
        full[monomial_column(monos, m)] += c;
    QVec residual = relation_span(*deg).reduce(std::move(full));
    const auto& cols = basis_monomials(*deg);
    QVec coords(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
        coords[i] = residual[cols[i]];
    return Element{*deg, std::move(coords)};
}

Element Realization::generator_class(std::size_t i) const {
    if (i >= pres_.generators.size())
        throw AlgebraError("generator index out of range");
    const Monomial m = Monomial::generator(pres_.generators.size(), i);
    return monomial_class(m);
}

Element Realization::monomial_class(const Monomial& m) const {
    return eval(poly_term(Rat(1), m));
}

Realization realize(const Presentation& p) {
    validate_presentation(p);
    const int top = p.top_degree;
    const auto& gens = p.generators;

    Realization r;
    r.pres_ = p;
    r.monomials_.resize(static_cast<std::size_t>(top) + 1);
    r.relation_spans_.resize(static_cast<std::size_t>(top) + 1);
    r.basis_cols_.resize(static_cast<std::size_t>(top) + 1);

    // Relations of degree > top impose nothing inside the bound.
    std::vector<std::pair<int, const Poly*>> active;
    for (const Poly& rel : p.relations) {
        std::optional<int> deg = poly_degree(rel, gens);
        if (deg && *deg <= top)
            active.emplace_back(*deg, &rel);
    }

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        auto& monos = r.monomials_[static_cast<std::size_t>(d)];
        monos = enumerate_monomials(gens, d);

        std::vector<QVec> rows;
        for (const auto& [rel_deg, rel] : active) {
            if (rel_deg > d)
                continue;
            for (const Monomial& m : enumerate_monomials(gens, d - rel_deg)) {
                QVec row = zero_vec(monos.size());
                bool nonzero = false;
                for (const auto& [t, c] : *rel) {
                    MonoProduct prod = mono_mul(m, t, gens);
                    if (prod.zero)
                        continue;
                    Rat coeff = c;
                    if (prod.sign < 0)
                        coeff = -coeff;
                    row[monomial_column(monos, prod.mono)] += coeff;
                    nonzero = true;
                }
                if (nonzero)
                    rows.push_back(std::move(row));
            }
        }
        auto& span = r.relation_spans_[static_cast<std::size_t>(d)];
        span = la::Subspace::span(monos.size(), rows);

        std::vector<bool> is_pivot(monos.size(), false);
        for (std::size_t c : span.pivots())
            is_pivot[c] = true;
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (!is_pivot[c]) {
                r.basis_cols_[static_cast<std::size_t>(d)].push_back(c);
                labels[static_cast<std::size_t>(d)].push_back(mono_str(monos[c], gens));
            }
        }
    }

    if (r.basis_cols_[0].empty())
        throw AlgebraError("relations annihilate the unit: degree-0 dimension is 0");

    // Structure constants: the product of two basis monomials is a single
    // signed monomial, reduced to normal form in the target degree.
    std::vector<std::vector<QVec>> mult(
        (static_cast<std::size_t>(top) + 1) * (static_cast<std::size_t>(top) + 1));
    for (int d1 = 0; d1 <= top; ++d1) {
        for (int d2 = 0; d1 + d2 <= top; ++d2) {
            const auto& cols1 = r.basis_cols_[static_cast<std::size_t>(d1)];
            const auto& cols2 = r.basis_cols_[static_cast<std::size_t>(d2)];
            const auto& monos1 = r.monomials_[static_cast<std::size_t>(d1)];
            const auto& monos2 = r.monomials_[static_cast<std::size_t>(d2)];
            const int dp = d1 + d2;
            const auto& monos_p = r.monomials_[static_cast<std::size_t>(dp)];
            const auto& span_p = r.relation_spans_[static_cast<std::size_t>(dp)];
            const auto& cols_p = r.basis_cols_[static_cast<std::size_t>(dp)];

            std::vector<QVec> table;
            table.reserve(cols1.size() * cols2.size());
            for (std::size_t i : cols1) {
                for (std::size_t j : cols2) {
                    MonoProduct prod = mono_mul(monos1[i], monos2[j], gens);
                    QVec coords = zero_vec(cols_p.size());
                    if (!prod.zero) {
                        QVec full = zero_vec(monos_p.size());
                        full[monomial_column(monos_p, prod.mono)] = Rat(prod.sign);
                        QVec residual = span_p.reduce(std::move(full));
                        for (std::size_t k = 0; k < cols_p.size(); ++k)
                            coords[k] = residual[cols_p[k]];
                    }
                    table.push_back(std::move(coords));
                }
            }
            mult[static_cast<std::size_t>(d1) * (static_cast<std::size_t>(top) + 1) +
                 static_cast<std::size_t>(d2)] = std::move(table);
        }
    }

    QVec unit = zero_vec(r.basis_cols_[0].size());
    // Degree 0 has the single monomial 1; if it survived, it is basis index 0.
    unit[0] = 1;

    r.alg_ = std::make_shared<GradedAlgebra>(top, std::move(labels), std::move(unit),
                                             std::move(mult));
    return r;
}

}  // namespace cutcalc
