#include "cutcalc/rational.hpp"

#include "cutcalc/errors.hpp"

#include <sstream>

namespace cutcalc {

Rat rat(long num, long den) {
    if (den == 0)
        throw AlgebraError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_parse(const std::string& text) {
    Rat q(text, 10);  // throws std::invalid_argument on malformed input
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

bool is_zero_vec(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0)
            return false;
    return true;
}

QVec zero_vec(std::size_t n) {
    return QVec(n, Rat(0));
}

void add_scaled(QVec& acc, const Rat& c, const QVec& v) {
    if (acc.size() != v.size())
        throw AlgebraError("vector length mismatch in add_scaled");
    for (std::size_t i = 0; i < v.size(); ++i)
        acc[i] += c * v[i];
}

QVec scaled(const QVec& v, const Rat& c) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = c * v[i];
    return out;
}

QVec vec_sum(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw AlgebraError("vector length mismatch in vec_sum");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

QVec vec_diff(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw AlgebraError("vector length mismatch in vec_diff");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

std::string vec_str(const QVec& v, const std::vector<std::string>& labels) {
    if (v.size() != labels.size())
        throw AlgebraError("label count does not match vector length");
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        Rat c = v[i];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (c != 1)
            out << rat_str(c) << "*";
        out << labels[i];
    }
    if (first)
        return "0";
    return out.str();
}

}  // namespace cutcalc
