#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cutcalc {

// Exact rationals. mpq_class keeps canonical form (lowest terms, positive
// denominator) under arithmetic as long as every value starts canonical,
// which rat() and rat_parse() guarantee.
using Rat = mpq_class;
using Int = mpz_class;
using QVec = std::vector<Rat>;

Rat rat(long num, long den = 1);

/// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument otherwise.
Rat rat_parse(const std::string& text);

/// Canonical rendering: "p/q", or just "p" for integers.
std::string rat_str(const Rat& q);

bool is_zero_vec(const QVec& v);
QVec zero_vec(std::size_t n);
void add_scaled(QVec& acc, const Rat& c, const QVec& v);
QVec scaled(const QVec& v, const Rat& c);
QVec vec_sum(const QVec& a, const QVec& b);
QVec vec_diff(const QVec& a, const QVec& b);

/// Linear-combination rendering over named coordinates, e.g. "a + 3/2*b"; "0" when zero.
std::string vec_str(const QVec& v, const std::vector<std::string>& labels);

}  // namespace cutcalc
