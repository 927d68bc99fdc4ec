#pragma once

#include "cutcalc/laurent.hpp"
#include "cutcalc/matrix.hpp"
#include "cutcalc/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cutcalc {

/// Homogeneous element of a graded algebra: degree plus coordinates over that
/// degree's basis. Elements carry no back-pointer; the owning algebra checks
/// coordinate lengths on use.
struct Element {
    int degree = 0;
    QVec coords;

    bool is_zero() const { return is_zero_vec(coords); }
    bool operator==(const Element&) const = default;
};

Element element_sum(const Element& a, const Element& b);
Element element_diff(const Element& a, const Element& b);
Element element_scaled(const Element& a, const Rat& c);

/// Finite-dimensional graded-commutative algebra over Q, realized degreewise:
/// a labeled basis for every degree 0..top_degree and the products of all
/// basis pairs within the bound, expressed in the target degree's basis.
class GradedAlgebra {
public:
    GradedAlgebra(int top_degree,
                  std::vector<std::vector<std::string>> labels,
                  QVec unit_coords,
                  std::vector<std::vector<QVec>> mult);

    int top_degree() const { return top_; }
    std::size_t dim(int d) const;
    std::vector<std::size_t> dims() const;
    std::size_t total_dim() const;

    const std::vector<std::string>& labels(int d) const;

    /// Coordinates of 1 in the degree-0 basis; empty for the zero ring.
    const QVec& unit_coords() const { return unit_; }
    Element unit() const { return Element{0, unit_}; }

    Element zero(int degree) const;
    Element basis_element(int degree, std::size_t i) const;

    /// Product of basis elements i (degree d1) and j (degree d2) in the
    /// degree-(d1+d2) basis.
    const QVec& product_row(int d1, int d2, std::size_t i, std::size_t j) const;

    /// All basis products for one degree pair as rows (row index i*dim(d2)+j).
    la::QMatrix product_matrix(int d1, int d2) const;

    /// Bilinear extension of the structure constants. Throws
    /// DegreeOverflowError when deg x + deg y exceeds the truncation bound.
    Element multiply(const Element& x, const Element& y) const;

    Element power(const Element& x, unsigned e) const;

    std::string element_str(const Element& e) const;

    bool operator==(const GradedAlgebra&) const = default;

private:
    std::size_t pair_index(int d1, int d2) const;
    void check_element(const Element& e, const char* what) const;

    int top_ = 0;
    std::vector<std::vector<std::string>> labels_;
    QVec unit_;
    // mult_[d1 * (top_+1) + d2], filled iff d1 + d2 <= top_; row i*dim(d2)+j.
    std::vector<std::vector<QVec>> mult_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Componentwise product with unit (1,1); component order is fixed as
/// (first argument, second argument) and basis labels are tagged pairs.
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b);

/// Coordinates of an element of a ⊕ b given its components.
Element direct_sum_element(const GradedAlgebra& a, const GradedAlgebra& b,
                           const Element& xa, const Element& xb);

LaurentPoly poincare(const GradedAlgebra& a);

/// Exhaustive structural checks; each throws AlgebraError with a counterexample.
void check_unital(const GradedAlgebra& a);
void check_graded_commutative(const GradedAlgebra& a);
void check_associative(const GradedAlgebra& a);

/// Copy of `a` with all data above new_top dropped. new_top <= a.top_degree().
AlgebraPtr truncated(const GradedAlgebra& a, int new_top);

}  // namespace cutcalc
