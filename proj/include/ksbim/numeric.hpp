#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ksbim/error.hpp"

namespace ksbim {

using Int = long long;
using Rat = mpq_class;
using BigInt = mpz_class;

// Weight-lattice vector in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
using Weight = std::vector<Int>;

// Small integer matrix, row-major; used for Weyl actions on weight coordinates.
using IMat = std::vector<std::vector<Int>>;

inline Weight weight_add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Weight weight_scaled(const Weight& a, Int c) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool weight_is_zero(const Weight& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline IMat imat_identity(int n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IMat r(n, std::vector<Int>(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            Int aij = a[i][j];
            if (aij == 0) continue;
            for (size_t l = 0; l < p; ++l) r[i][l] += aij * b[j][l];
        }
    return r;
}

inline Weight imat_apply(const IMat& m, const Weight& v) {
    Weight r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

// base^e for integer e; base must be nonzero when e < 0.
inline Rat rat_pow(const Rat& base, Int e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long ue = static_cast<unsigned long>(inv ? -e : e);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
    if (inv) {
        if (num == 0) fail("DivisionByZero", "0 raised to a negative power");
        std::swap(num, den);
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace ksbim
