#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutcalc/errors.hpp"
#include "cutcalc/matrix.hpp"
#include "cutcalc/subspace.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using cutcalc::AlgebraError;
using cutcalc::QVec;
using cutcalc::Rat;
using cutcalc::la::Echelon;
using cutcalc::la::QMatrix;
using cutcalc::la::quotient_basis;
using cutcalc::la::rank;
using cutcalc::la::rref;
using cutcalc::la::Subspace;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec out;
    for (long x : xs)
        out.push_back(Rat(x));
    return out;
}

QMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> entry(-9, 9);
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = Rat(entry(rng));
    return m;
}

}  // namespace

TEST_CASE("rref: identity is fixed") {
    const QMatrix id = QMatrix::identity(3);
    const Echelon e = rref(id);
    CHECK(e.mat == id);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref: rank-1 matrix") {
    QMatrix m(2, 2);
    m.set_row(0, qv({1, 2}));
    m.set_row(1, qv({2, 4}));
    const Echelon e = rref(m);
    CHECK(e.pivots == std::vector<std::size_t>{0});
    CHECK(e.mat.row(0) == qv({1, 2}));
    CHECK(e.mat.row(1) == qv({0, 0}));
}

TEST_CASE("rref: rank agrees with the minor-expansion oracle on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 25; ++trial) {
        const QMatrix m = random_int_matrix(rng, 5, 5);
        CHECK(rank(m) == oracle::minor_rank(m));
    }
}

TEST_CASE("rref: idempotent and rank-nullity on random rectangular matrices") {
    std::mt19937 rng(987123);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const QMatrix m = random_int_matrix(rng, size(rng), size(rng));
        const Echelon once = rref(m);
        const Echelon twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivots == twice.pivots);
        CHECK(rank(m) + Subspace::kernel(m).dim() == m.cols());
        CHECK(rank(m) == oracle::bareiss_rank_q(m));
    }
}

TEST_CASE("kernel: zero matrix has full kernel") {
    CHECK(Subspace::kernel(QMatrix(2, 3)).dim() == 3);
    CHECK(Subspace::kernel(QMatrix(2, 3)) == Subspace::full(3));
}

TEST_CASE("kernel: identity has zero kernel") {
    CHECK(Subspace::kernel(QMatrix::identity(4)).dim() == 0);
}

TEST_CASE("kernel: single equation x = y") {
    QMatrix m(1, 2);
    m.set_row(0, qv({1, -1}));
    const Subspace k = Subspace::kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis().row(0) == qv({1, 1}));
}

TEST_CASE("coordinates_in_span") {
    const Subspace s = Subspace::span(2, {qv({1, 0})});
    CHECK(s.coordinates(qv({3, 0})) == QVec{Rat(3)});
    CHECK(!s.coordinates(qv({0, 1})).has_value());

    const Subspace t = Subspace::span(2, {qv({1, 1}), qv({0, 2})});
    const auto coords = t.coordinates(qv({2, 4}));
    REQUIRE(coords.has_value());
    // Canonical (rref) basis of the span is {(1,0),(0,1)}.
    QVec back = cutcalc::zero_vec(2);
    for (std::size_t i = 0; i < coords->size(); ++i)
        cutcalc::add_scaled(back, (*coords)[i], t.basis().row(i));
    CHECK(back == qv({2, 4}));
}

TEST_CASE("coordinates_in_span: dimension mismatch is an error") {
    const Subspace s = Subspace::span(2, {qv({1, 0})});
    CHECK_THROWS_AS(s.coordinates(qv({1, 0, 0})), AlgebraError);
}

TEST_CASE("quotient_basis") {
    CHECK(quotient_basis(Subspace::full(2), Subspace::zero(2)).size() == 2);
    CHECK(quotient_basis(Subspace::full(2), Subspace::full(2)).empty());

    const auto reps = quotient_basis(Subspace::full(3), Subspace::span(3, {qv({1, 1, 0})}));
    REQUIRE(reps.size() == 2);
    // Pivot of the subspace is coordinate 0, so representatives are e1, e2.
    CHECK(reps[0] == qv({0, 1, 0}));
    CHECK(reps[1] == qv({0, 0, 1}));

    CHECK_THROWS_AS(quotient_basis(Subspace::span(3, {qv({1, 0, 0})}),
                                   Subspace::span(3, {qv({0, 1, 0})})),
                    AlgebraError);
}

TEST_CASE("subspace canonicity: permuted generating sets give identical bases") {
    std::mt19937 rng(55001);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<QVec> gens;
        for (int g = 0; g < 4; ++g) {
            QVec v(4);
            for (auto& x : v)
                x = Rat(entry(rng));
            gens.push_back(v);
        }
        const Subspace a = Subspace::span(4, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        // Scaling a generator must not change the span either.
        gens[0] = cutcalc::scaled(gens[0], Rat(-7));
        const Subspace b = Subspace::span(4, gens);
        CHECK(a == b);
    }
}

TEST_CASE("determinant oracle sanity") {
    QMatrix m(2, 2);
    m.set_row(0, qv({2, 1}));
    m.set_row(1, qv({7, 4}));
    CHECK(oracle::det_cofactor(m) == Rat(1));
    CHECK(oracle::minor_rank(m) == 2);
}
