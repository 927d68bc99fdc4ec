#include "cutcalc/extract.hpp"

#include "cutcalc/errors.hpp"
#include "cutcalc/hom.hpp"
#include "cutcalc/subspace.hpp"

#include <map>

namespace cutcalc {

std::vector<std::vector<Element>> minimal_generators(const GradedAlgebra& a) {
    if (a.dim(0) != 1)
        throw AlgebraError("minimal_generators requires a connected algebra "
                           "(degree-0 dimension 1, got " + std::to_string(a.dim(0)) + ")");
    const int top = a.top_degree();
    std::vector<std::vector<Element>> out(static_cast<std::size_t>(top) + 1);
    for (int d = 1; d <= top; ++d) {
        // Decomposables: spans of all products from positive degrees.
        std::vector<QVec> rows;
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            for (std::size_t i = 0; i < a.dim(d1); ++i)
                for (std::size_t j = 0; j < a.dim(d2); ++j)
                    rows.push_back(a.product_row(d1, d2, i, j));
        }
        const la::Subspace dec = la::Subspace::span(a.dim(d), rows);
        for (const QVec& rep : la::quotient_basis(la::Subspace::full(a.dim(d)), dec))
            out[static_cast<std::size_t>(d)].push_back(Element{d, rep});
    }
    return out;
}

ExtractedPresentation extract_presentation(const GradedAlgebra& a) {
    const int top = a.top_degree();
    ExtractedPresentation out;
    for (const auto& per_degree : minimal_generators(a))
        for (const Element& g : per_degree)
            out.generator_images.push_back(g);

    Presentation& pres = out.presentation;
    pres.top_degree = top;
    for (std::size_t i = 0; i < out.generator_images.size(); ++i)
        pres.generators.push_back(
            Generator{"x" + std::to_string(i + 1), out.generator_images[i].degree});
    const auto& gens = pres.generators;

    // Evaluate free monomials in A, splitting off the first generator.
    std::map<std::vector<unsigned>, Element> memo;
    auto phi = [&](const Monomial& m, auto&& self) -> Element {
        auto it = memo.find(m.exps());
        if (it != memo.end())
            return it->second;
        Element value = a.unit();
        if (!m.is_unit()) {
            std::size_t lead = 0;
            while (m.exp(lead) == 0)
                ++lead;
            std::vector<unsigned> rest = m.exps();
            rest[lead] -= 1;
            value = a.multiply(out.generator_images[lead], self(Monomial(std::move(rest)), self));
        }
        memo.emplace(m.exps(), value);
        return value;
    };

    // Per degree: kernel of the evaluation map, minus multiples of the
    // relations already chosen in lower degrees.
    for (int d = 1; d <= top; ++d) {
        const std::vector<Monomial> monos = enumerate_monomials(gens, d);
        if (monos.empty())
            continue;
        la::QMatrix eval(monos.size(), a.dim(d));
        for (std::size_t r = 0; r < monos.size(); ++r)
            eval.set_row(r, phi(monos[r], phi).coords);
        const la::Subspace kernel = la::Subspace::left_kernel(eval);

        std::vector<QVec> lower_rows;
        for (const Poly& rel : pres.relations) {
            const int rel_deg = *poly_degree(rel, gens);
            if (rel_deg >= d)
                continue;
            for (const Monomial& m : enumerate_monomials(gens, d - rel_deg)) {
                QVec row = zero_vec(monos.size());
                bool nonzero = false;
                for (const auto& [t, c] : rel) {
                    MonoProduct prod = mono_mul(m, t, gens);
                    if (prod.zero)
                        continue;
                    for (std::size_t col = 0; col < monos.size(); ++col) {
                        if (monos[col] == prod.mono) {
                            row[col] += prod.sign < 0 ? -c : c;
                            nonzero = true;
                            break;
                        }
                    }
                }
                if (nonzero)
                    lower_rows.push_back(std::move(row));
            }
        }
        const la::Subspace lower = la::Subspace::span(monos.size(), lower_rows);
        for (const QVec& rep : la::quotient_basis(kernel, lower)) {
            Poly rel;
            for (std::size_t col = 0; col < monos.size(); ++col)
                if (rep[col] != 0)
                    rel.emplace(monos[col], rep[col]);
            pres.relations.push_back(std::move(rel));
        }
    }
    return out;
}

IsoVerdict verify_presentation_iso(const Presentation& p, const AlgebraPtr& a,
                                   const std::vector<Element>& images) {
    if (!a)
        throw AlgebraError("verify_presentation_iso: null algebra");
    if (images.size() != p.generators.size())
        throw AlgebraError("expected " + std::to_string(p.generators.size()) +
                           " generator images, got " + std::to_string(images.size()));
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i].degree != p.generators[i].degree)
            throw AlgebraError("image of generator '" + p.generators[i].name +
                               "' has degree " + std::to_string(images[i].degree) +
                               ", expected " + std::to_string(p.generators[i].degree));

    IsoVerdict verdict;
    if (p.top_degree != a->top_degree()) {
        verdict.failure = "top degrees differ: " + std::to_string(p.top_degree) + " vs " +
                          std::to_string(a->top_degree());
        return verdict;
    }

    Realization realized = realize(p);
    for (int d = 0; d <= p.top_degree; ++d) {
        if (realized.algebra()->dim(d) != a->dim(d)) {
            verdict.failure = "dimension mismatch in degree " + std::to_string(d) + ": " +
                              std::to_string(realized.algebra()->dim(d)) + " vs " +
                              std::to_string(a->dim(d));
            return verdict;
        }
    }

    GradedHom h;
    try {
        h = build_hom(realized, a, images);
    } catch (const ValidationError& e) {
        verdict.failure = e.what();
        return verdict;
    }

    const std::vector<int> failing = non_surjective_degrees(h);
    if (!failing.empty()) {
        verdict.failure = "induced map is not surjective in degree " +
                          std::to_string(failing.front());
        return verdict;
    }
    verdict.ok = true;
    return verdict;
}

}  // namespace cutcalc
