#pragma once

#include "cutcalc/matrix.hpp"

#include <optional>
#include <vector>

namespace cutcalc::la {

/// Subspace of Q^n stored through its canonical reduced-row-echelon basis.
/// Two subspaces are equal as sets iff their stored bases are identical.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<QVec>& gens);
    static Subspace row_space(const QMatrix& m);

    /// Null space {v : m v = 0}.
    static Subspace kernel(const QMatrix& m);
    /// Left null space {x : x m = 0}; matches the row-vector convention used
    /// for elements and homomorphism matrices.
    static Subspace left_kernel(const QMatrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivot coordinates; zero iff v is a member.
    QVec reduce(QVec v) const;
    bool contains(const QVec& v) const;
    bool contains_subspace(const Subspace& other) const;

    /// Coefficients of v over the stored basis, or nullopt when v is not a member.
    std::optional<QVec> coordinates(const QVec& v) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_ = 0;
    QMatrix basis_;  // rref rows, no zero rows
    std::vector<std::size_t> pivots_;
};

/// Representatives whose classes form a basis of ambient/sub. Deterministic:
/// the ambient basis vectors at the earliest non-pivot coordinates of sub
/// (expressed in ambient coordinates). Throws AlgebraError when sub ⊄ ambient.
std::vector<QVec> quotient_basis(const Subspace& ambient, const Subspace& sub);

}  // namespace cutcalc::la
