#include "cutcalc/hom.hpp"

#include "cutcalc/errors.hpp"

#include <map>
#include <utility>

namespace cutcalc {

GradedHom::GradedHom(AlgebraPtr source, AlgebraPtr target, std::vector<la::QMatrix> mats)
    : src_(std::move(source)), tgt_(std::move(target)), mats_(std::move(mats)) {
    if (!src_ || !tgt_)
        throw AlgebraError("hom with null endpoint");
    if (src_->top_degree() != tgt_->top_degree())
        throw AlgebraError("hom endpoints must share one top degree");
    if (mats_.size() != static_cast<std::size_t>(src_->top_degree()) + 1)
        throw AlgebraError("hom must carry one matrix per degree");
    for (int d = 0; d <= src_->top_degree(); ++d) {
        const la::QMatrix& m = mats_[static_cast<std::size_t>(d)];
        if (m.rows() != src_->dim(d) || m.cols() != tgt_->dim(d))
            throw AlgebraError("hom matrix in degree " + std::to_string(d) +
                               " has wrong shape");
    }
}

const la::QMatrix& GradedHom::matrix(int d) const {
    if (d < 0 || d > src_->top_degree())
        throw AlgebraError("degree out of range");
    return mats_[static_cast<std::size_t>(d)];
}

Element GradedHom::apply(const Element& x) const {
    return Element{x.degree, matrix(x.degree).apply_row(x.coords)};
}

GradedHom build_hom(const Realization& source, const AlgebraPtr& target,
                    const std::vector<Element>& images) {
    if (!target)
        throw AlgebraError("build_hom: null target");
    const Presentation& pres = source.presentation();
    const AlgebraPtr& src = source.algebra();
    if (src->top_degree() != target->top_degree())
        throw AlgebraError("build_hom: top degrees differ");
    if (images.size() != pres.generators.size())
        throw AlgebraError("build_hom: expected " + std::to_string(pres.generators.size()) +
                           " generator images, got " + std::to_string(images.size()));
    for (std::size_t i = 0; i < images.size(); ++i) {
        const Generator& g = pres.generators[i];
        if (images[i].degree != g.degree)
            throw AlgebraError("image of generator '" + g.name + "' has degree " +
                               std::to_string(images[i].degree) + ", expected " +
                               std::to_string(g.degree));
        if (images[i].coords.size() != target->dim(g.degree))
            throw AlgebraError("image of generator '" + g.name +
                               "' has wrong coordinate length");
    }

    // phi(monomial) by splitting off the first generator; memoized per monomial.
    std::map<std::vector<unsigned>, Element> memo;
    auto phi = [&](const Monomial& m, auto&& self) -> Element {
        auto it = memo.find(m.exps());
        if (it != memo.end())
            return it->second;
        Element value = target->unit();
        if (!m.is_unit()) {
            std::size_t lead = 0;
            while (m.exp(lead) == 0)
                ++lead;
            std::vector<unsigned> rest = m.exps();
            rest[lead] -= 1;
            value = target->multiply(images[lead], self(Monomial(std::move(rest)), self));
        }
        memo.emplace(m.exps(), value);
        return value;
    };
    auto phi_poly = [&](const Poly& p, int degree) -> Element {
        Element acc = target->zero(degree);
        for (const auto& [m, c] : p)
            acc = element_sum(acc, element_scaled(phi(m, phi), c));
        return acc;
    };

    // Every relation inside the bound must die in the target.
    for (const Poly& rel : pres.relations) {
        std::optional<int> deg = poly_degree(rel, pres.generators);
        if (!deg || *deg > pres.top_degree)
            continue;
        const Element image = phi_poly(rel, *deg);
        if (!image.is_zero())
            throw ValidationError("map does not kill the relation '" +
                                  poly_str(rel, pres.generators) + "': its image is " +
                                  target->element_str(image));
    }

    std::vector<la::QMatrix> mats;
    mats.reserve(static_cast<std::size_t>(src->top_degree()) + 1);
    for (int d = 0; d <= src->top_degree(); ++d) {
        const auto& cols = source.basis_monomials(d);
        const auto& monos = source.monomials(d);
        la::QMatrix m(cols.size(), target->dim(d));
        for (std::size_t r = 0; r < cols.size(); ++r)
            m.set_row(r, phi(monos[cols[r]], phi).coords);
        mats.push_back(std::move(m));
    }
    return GradedHom(src, target, std::move(mats));
}

GradedHom identity_hom(const Realization& a) {
    std::vector<Element> images;
    images.reserve(a.presentation().generators.size());
    for (std::size_t i = 0; i < a.presentation().generators.size(); ++i)
        images.push_back(a.generator_class(i));
    return build_hom(a, a.algebra(), images);
}

std::vector<bool> is_surjective_degreewise(const GradedHom& h) {
    std::vector<bool> out;
    for (int d = 0; d <= h.source()->top_degree(); ++d)
        out.push_back(la::rank(h.matrix(d)) == h.target()->dim(d));
    return out;
}

std::vector<int> non_surjective_degrees(const GradedHom& h) {
    std::vector<int> out;
    const std::vector<bool> verdicts = is_surjective_degreewise(h);
    for (int d = 0; d < static_cast<int>(verdicts.size()); ++d)
        if (!verdicts[static_cast<std::size_t>(d)])
            out.push_back(d);
    return out;
}

void check_hom_multiplicative(const GradedHom& h) {
    const GradedAlgebra& src = *h.source();
    const GradedAlgebra& tgt = *h.target();
    if (h.apply(src.unit()) != tgt.unit())
        throw AlgebraError("hom does not preserve the unit");
    for (int d1 = 0; d1 <= src.top_degree(); ++d1) {
        for (int d2 = 0; d1 + d2 <= src.top_degree(); ++d2) {
            for (std::size_t i = 0; i < src.dim(d1); ++i) {
                const Element x = src.basis_element(d1, i);
                for (std::size_t j = 0; j < src.dim(d2); ++j) {
                    const Element y = src.basis_element(d2, j);
                    if (h.apply(src.multiply(x, y)) != tgt.multiply(h.apply(x), h.apply(y)))
                        throw AlgebraError("hom is not multiplicative on basis pair (" +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           ") in degrees (" + std::to_string(d1) + "," +
                                           std::to_string(d2) + ")");
                }
            }
        }
    }
}

}  // namespace cutcalc
