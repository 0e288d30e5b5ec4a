#pragma once

#include "coeff.hpp"
#include "crossed.hpp"

#include <doctest.h>

namespace tcsd::test {

inline AlgebraPtr scalar_algebra() { return CStarAlgebra::make({1}); }
inline AlgebraPtr m2() { return CStarAlgebra::make({2}); }
inline AlgebraPtr c2() { return CStarAlgebra::make({1, 1}); }

inline AlgebraElement pauli_x(const AlgebraPtr& a) {
    Mat x(2, 2);
    x << 0, 1, 1, 0;
    return AlgebraElement(a, {x});
}

inline AlgebraElement pauli_z(const AlgebraPtr& a) {
    Mat z(2, 2);
    z << 1, 0, 0, -1;
    return AlgebraElement(a, {z});
}

inline SystemPtr pauli_system() { return builtin_system("pauli"); }
inline SystemPtr flip_system() { return builtin_system("flip"); }
inline SystemPtr m2_system() { return builtin_system("m2_inner"); }
inline SystemPtr s3_system() { return builtin_system("s3"); }
inline SystemPtr trivial_z2() { return builtin_system("trivial"); }

}  // namespace tcsd::test
