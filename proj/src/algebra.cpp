#include "cutcalc/algebra.hpp"

#include "cutcalc/errors.hpp"

#include <sstream>
#include <utility>

namespace cutcalc {

Element element_sum(const Element& a, const Element& b) {
    if (a.degree != b.degree)
        throw AlgebraError("cannot add elements of degrees " + std::to_string(a.degree) +
                           " and " + std::to_string(b.degree));
    return Element{a.degree, vec_sum(a.coords, b.coords)};
}

Element element_diff(const Element& a, const Element& b) {
    if (a.degree != b.degree)
        throw AlgebraError("cannot subtract elements of degrees " + std::to_string(a.degree) +
                           " and " + std::to_string(b.degree));
    return Element{a.degree, vec_diff(a.coords, b.coords)};
}

Element element_scaled(const Element& a, const Rat& c) {
    return Element{a.degree, scaled(a.coords, c)};
}

GradedAlgebra::GradedAlgebra(int top_degree,
                             std::vector<std::vector<std::string>> labels,
                             QVec unit_coords,
                             std::vector<std::vector<QVec>> mult)
    : top_(top_degree),
      labels_(std::move(labels)),
      unit_(std::move(unit_coords)),
      mult_(std::move(mult)) {
    if (top_ < 0)
        throw AlgebraError("top degree must be nonnegative");
    if (labels_.size() != static_cast<std::size_t>(top_) + 1)
        throw AlgebraError("label table does not cover degrees 0..top");
    if (unit_.size() != labels_[0].size())
        throw AlgebraError("unit coordinates do not match degree-0 dimension");
    const std::size_t grid = (static_cast<std::size_t>(top_) + 1) * (static_cast<std::size_t>(top_) + 1);
    if (mult_.size() != grid)
        throw AlgebraError("product table grid has wrong size");
    for (int d1 = 0; d1 <= top_; ++d1) {
        for (int d2 = 0; d2 + d1 <= top_; ++d2) {
            const auto& table = mult_[pair_index(d1, d2)];
            if (table.size() != dim(d1) * dim(d2))
                throw AlgebraError("product table for degrees (" + std::to_string(d1) + "," +
                                   std::to_string(d2) + ") has wrong row count");
            for (const QVec& row : table)
                if (row.size() != dim(d1 + d2))
                    throw AlgebraError("product row has wrong length");
        }
    }
}

std::size_t GradedAlgebra::pair_index(int d1, int d2) const {
    return static_cast<std::size_t>(d1) * (static_cast<std::size_t>(top_) + 1) +
           static_cast<std::size_t>(d2);
}

std::size_t GradedAlgebra::dim(int d) const {
    if (d < 0 || d > top_)
        return 0;
    return labels_[static_cast<std::size_t>(d)].size();
}

std::vector<std::size_t> GradedAlgebra::dims() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(top_) + 1);
    for (int d = 0; d <= top_; ++d)
        out[static_cast<std::size_t>(d)] = dim(d);
    return out;
}

std::size_t GradedAlgebra::total_dim() const {
    std::size_t n = 0;
    for (int d = 0; d <= top_; ++d)
        n += dim(d);
    return n;
}

const std::vector<std::string>& GradedAlgebra::labels(int d) const {
    if (d < 0 || d > top_)
        throw AlgebraError("degree out of range");
    return labels_[static_cast<std::size_t>(d)];
}

Element GradedAlgebra::zero(int degree) const {
    if (degree < 0 || degree > top_)
        throw AlgebraError("degree out of range");
    return Element{degree, zero_vec(dim(degree))};
}

Element GradedAlgebra::basis_element(int degree, std::size_t i) const {
    Element e = zero(degree);
    if (i >= e.coords.size())
        throw AlgebraError("basis index out of range");
    e.coords[i] = 1;
    return e;
}

const QVec& GradedAlgebra::product_row(int d1, int d2, std::size_t i, std::size_t j) const {
    return mult_[pair_index(d1, d2)][i * dim(d2) + j];
}

la::QMatrix GradedAlgebra::product_matrix(int d1, int d2) const {
    if (d1 < 0 || d2 < 0 || d1 + d2 > top_)
        throw AlgebraError("degree pair out of range");
    const auto& table = mult_[pair_index(d1, d2)];
    la::QMatrix m(table.size(), dim(d1 + d2));
    for (std::size_t r = 0; r < table.size(); ++r)
        m.set_row(r, table[r]);
    return m;
}

void GradedAlgebra::check_element(const Element& e, const char* what) const {
    if (e.degree < 0 || e.degree > top_)
        throw AlgebraError(std::string(what) + ": degree " + std::to_string(e.degree) +
                           " out of range 0.." + std::to_string(top_));
    if (e.coords.size() != dim(e.degree))
        throw AlgebraError(std::string(what) + ": coordinate length " +
                           std::to_string(e.coords.size()) + " does not match dimension " +
                           std::to_string(dim(e.degree)) + " in degree " +
                           std::to_string(e.degree));
}

Element GradedAlgebra::multiply(const Element& x, const Element& y) const {
    check_element(x, "multiply");
    check_element(y, "multiply");
    if (x.degree + y.degree > top_)
        throw DegreeOverflowError("product degree " + std::to_string(x.degree + y.degree) +
                                  " exceeds the truncation bound " + std::to_string(top_));
    Element out = zero(x.degree + y.degree);
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.coords.size(); ++j) {
            if (y.coords[j] == 0)
                continue;
            add_scaled(out.coords, x.coords[i] * y.coords[j], product_row(x.degree, y.degree, i, j));
        }
    }
    return out;
}

Element GradedAlgebra::power(const Element& x, unsigned e) const {
    Element out = unit();
    for (unsigned k = 0; k < e; ++k)
        out = multiply(out, x);
    return out;
}

std::string GradedAlgebra::element_str(const Element& e) const {
    check_element(e, "element_str");
    return vec_str(e.coords, labels(e.degree));
}

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!a || !b)
        throw AlgebraError("direct_sum of null algebra");
    if (a->top_degree() != b->top_degree())
        throw AlgebraError("direct_sum requires equal top degrees (" +
                           std::to_string(a->top_degree()) + " vs " +
                           std::to_string(b->top_degree()) + ")");
    const int top = a->top_degree();
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        for (const std::string& l : a->labels(d))
            labels[static_cast<std::size_t>(d)].push_back("(" + l + ", 0)");
        for (const std::string& l : b->labels(d))
            labels[static_cast<std::size_t>(d)].push_back("(0, " + l + ")");
    }
    QVec unit = a->unit_coords();
    unit.insert(unit.end(), b->unit_coords().begin(), b->unit_coords().end());

    std::vector<std::vector<QVec>> mult(
        (static_cast<std::size_t>(top) + 1) * (static_cast<std::size_t>(top) + 1));
    for (int d1 = 0; d1 <= top; ++d1) {
        for (int d2 = 0; d2 + d1 <= top; ++d2) {
            const std::size_t na1 = a->dim(d1), nb1 = b->dim(d1);
            const std::size_t na2 = a->dim(d2), nb2 = b->dim(d2);
            const std::size_t nap = a->dim(d1 + d2), nbp = b->dim(d1 + d2);
            std::vector<QVec> table;
            table.reserve((na1 + nb1) * (na2 + nb2));
            for (std::size_t i = 0; i < na1 + nb1; ++i) {
                for (std::size_t j = 0; j < na2 + nb2; ++j) {
                    QVec row = zero_vec(nap + nbp);
                    if (i < na1 && j < na2) {
                        const QVec& r = a->product_row(d1, d2, i, j);
                        for (std::size_t k = 0; k < nap; ++k)
                            row[k] = r[k];
                    } else if (i >= na1 && j >= na2) {
                        const QVec& r = b->product_row(d1, d2, i - na1, j - na2);
                        for (std::size_t k = 0; k < nbp; ++k)
                            row[nap + k] = r[k];
                    }
                    // Cross terms vanish: the product is componentwise.
                    table.push_back(std::move(row));
                }
            }
            mult[static_cast<std::size_t>(d1) * (static_cast<std::size_t>(top) + 1) +
                 static_cast<std::size_t>(d2)] = std::move(table);
        }
    }
    return std::make_shared<GradedAlgebra>(top, std::move(labels), std::move(unit),
                                           std::move(mult));
}

Element direct_sum_element(const GradedAlgebra& a, const GradedAlgebra& b,
                           const Element& xa, const Element& xb) {
    if (xa.degree != xb.degree)
        throw AlgebraError("direct-sum components must share one degree");
    if (xa.coords.size() != a.dim(xa.degree) || xb.coords.size() != b.dim(xb.degree))
        throw AlgebraError("direct-sum component has wrong coordinate length");
    Element out{xa.degree, xa.coords};
    out.coords.insert(out.coords.end(), xb.coords.begin(), xb.coords.end());
    return out;
}

LaurentPoly poincare(const GradedAlgebra& a) {
    LaurentPoly p;
    for (int d = 0; d <= a.top_degree(); ++d)
        if (a.dim(d) > 0)
            p += LaurentPoly::term(Int(static_cast<long>(a.dim(d))), d);
    return p;
}

void check_unital(const GradedAlgebra& a) {
    const Element one = a.unit();
    for (int d = 0; d <= a.top_degree(); ++d) {
        for (std::size_t i = 0; i < a.dim(d); ++i) {
            const Element x = a.basis_element(d, static_cast<std::size_t>(i));
            if (a.multiply(one, x) != x || a.multiply(x, one) != x)
                throw AlgebraError("unit fails on basis element " + std::to_string(i) +
                                   " of degree " + std::to_string(d));
        }
    }
}

void check_graded_commutative(const GradedAlgebra& a) {
    for (int d1 = 0; d1 <= a.top_degree(); ++d1) {
        for (int d2 = d1; d1 + d2 <= a.top_degree(); ++d2) {
            const int sign = (d1 % 2 != 0 && d2 % 2 != 0) ? -1 : 1;
            for (std::size_t i = 0; i < a.dim(d1); ++i) {
                for (std::size_t j = 0; j < a.dim(d2); ++j) {
                    QVec lhs = a.product_row(d1, d2, i, j);
                    const QVec& rhs = a.product_row(d2, d1, j, i);
                    if (sign < 0)
                        lhs = scaled(lhs, Rat(-1));
                    if (lhs != rhs)
                        throw AlgebraError("graded commutativity fails for basis pair (" +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           ") in degrees (" + std::to_string(d1) + "," +
                                           std::to_string(d2) + ")");
                }
            }
        }
    }
}

void check_associative(const GradedAlgebra& a) {
    for (int d1 = 0; d1 <= a.top_degree(); ++d1) {
        for (int d2 = 0; d1 + d2 <= a.top_degree(); ++d2) {
            for (int d3 = 0; d1 + d2 + d3 <= a.top_degree(); ++d3) {
                for (std::size_t i = 0; i < a.dim(d1); ++i) {
                    const Element x = a.basis_element(d1, i);
                    for (std::size_t j = 0; j < a.dim(d2); ++j) {
                        const Element y = a.basis_element(d2, j);
                        const Element xy = a.multiply(x, y);
                        for (std::size_t k = 0; k < a.dim(d3); ++k) {
                            const Element z = a.basis_element(d3, k);
                            const Element lhs = a.multiply(xy, z);
                            const Element rhs = a.multiply(x, a.multiply(y, z));
                            if (lhs != rhs)
                                throw AlgebraError(
                                    "associativity fails on basis triple (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) +
                                    ") in degrees (" + std::to_string(d1) + "," +
                                    std::to_string(d2) + "," + std::to_string(d3) + ")");
                        }
                    }
                }
            }
        }
    }
}

AlgebraPtr truncated(const GradedAlgebra& a, int new_top) {
    if (new_top < 0 || new_top > a.top_degree())
        throw AlgebraError("truncation degree out of range");
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(new_top) + 1);
    for (int d = 0; d <= new_top; ++d)
        labels[static_cast<std::size_t>(d)] = a.labels(d);
    std::vector<std::vector<QVec>> mult(
        (static_cast<std::size_t>(new_top) + 1) * (static_cast<std::size_t>(new_top) + 1));
    for (int d1 = 0; d1 <= new_top; ++d1) {
        for (int d2 = 0; d1 + d2 <= new_top; ++d2) {
            std::vector<QVec> table;
            table.reserve(a.dim(d1) * a.dim(d2));
            for (std::size_t i = 0; i < a.dim(d1); ++i)
                for (std::size_t j = 0; j < a.dim(d2); ++j)
                    table.push_back(a.product_row(d1, d2, i, j));
            mult[static_cast<std::size_t>(d1) * (static_cast<std::size_t>(new_top) + 1) +
                 static_cast<std::size_t>(d2)] = std::move(table);
        }
    }
    return std::make_shared<GradedAlgebra>(new_top, std::move(labels), a.unit_coords(),
                                           std::move(mult));
}

}  // namespace cutcalc
