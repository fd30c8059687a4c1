#ifndef PENTACC_FORMULAS_GEN_HPP
#define PENTACC_FORMULAS_GEN_HPP

// Machine-generated polynomial bodies (see tools/ generator note in README).
// Do not edit by hand.

#include <vector>

namespace pentacc::formulas {

template <typename T>
T h1(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3) {
    std::vector<T> x3p;
    x3p.push_back(T(1));
    for (int i = 0; i < 6; ++i) x3p.push_back(x3p.back() * x3);
    std::vector<T> y5p;
    y5p.push_back(T(1));
    for (int i = 0; i < 2; ++i) y5p.push_back(y5p.back() * y5);
    std::vector<T> E1p;
    E1p.push_back(T(1));
    for (int i = 0; i < 2; ++i) E1p.push_back(E1p.back() * E1);
    std::vector<T> E2p;
    E2p.push_back(T(1));
    for (int i = 0; i < 2; ++i) E2p.push_back(E2p.back() * E2);
    T acc(0);
    acc = acc + T(-64L) * x3p[6] * y5p[2] * E1p[2] * E3;
    acc = acc + T(1024L) * x3p[6] * y5p[2] * E1p[2];
    acc = acc + T(64L) * x3p[5] * y5p[2] * E1p[2] * E3;
    acc = acc + T(512L) * x3p[5] * y5p[2] * E1p[2];
    acc = acc + T(-512L) * x3p[5] * y5p[2] * E1p[1];
    acc = acc + T(-64L) * x3p[5] * y5p[1] * E1p[2] * E2p[1] * E3;
    acc = acc + T(256L) * x3p[5] * y5p[1] * E1p[2] * E2p[1];
    acc = acc + T(128L) * x3p[4] * y5p[2] * E1p[2] * E3;
    acc = acc + T(-256L) * x3p[4] * y5p[2] * E1p[2];
    acc = acc + T(-32L) * x3p[4] * y5p[2] * E1p[1] * E3;
    acc = acc + T(-512L) * x3p[4] * y5p[2] * E1p[1];
    acc = acc + T(16L) * x3p[4] * y5p[2] * E3;
    acc = acc + T(-80L) * x3p[4] * y5p[1] * E1p[2] * E2p[1] * E3;
    acc = acc + T(256L) * x3p[4] * y5p[1] * E1p[2] * E2p[1];
    acc = acc + T(16L) * x3p[4] * y5p[1] * E1p[1] * E2p[1] * E3;
    acc = acc + T(128L) * x3p[4] * y5p[1] * E1p[1] * E2p[1];
    acc = acc + T(4L) * x3p[4] * E1p[2] * E2p[2] * E3;
    acc = acc + T(48L) * x3p[3] * y5p[2] * E1p[2] * E3;
    acc = acc + T(-128L) * x3p[3] * y5p[2] * E1p[2];
    acc = acc + T(-32L) * x3p[3] * y5p[2] * E1p[1] * E3;
    acc = acc + T(-128L) * x3p[3] * y5p[2] * E1p[1];
    acc = acc + T(16L) * x3p[3] * y5p[2] * E3;
    acc = acc + T(-32L) * x3p[3] * y5p[1] * E1p[2] * E2p[1] * E3;
    acc = acc + T(64L) * x3p[3] * y5p[1] * E1p[2] * E2p[1];
    acc = acc + T(24L) * x3p[3] * y5p[1] * E1p[1] * E2p[1] * E3;
    acc = acc + T(64L) * x3p[3] * y5p[1] * E1p[1] * E2p[1];
    acc = acc + T(-8L) * x3p[3] * y5p[1] * E2p[1] * E3;
    acc = acc + T(4L) * x3p[3] * E1p[2] * E2p[2] * E3;
    acc = acc + T(-4L) * x3p[3] * E1p[1] * E2p[2] * E3;
    acc = acc + T(-12L) * x3p[2] * y5p[2] * E1p[2] * E3;
    acc = acc + T(128L) * x3p[2] * y5p[2] * E1p[2];
    acc = acc + T(-8L) * x3p[2] * y5p[2] * E1p[1] * E3;
    acc = acc + T(4L) * x3p[2] * y5p[2] * E3;
    acc = acc + T(4L) * x3p[2] * y5p[1] * E1p[2] * E2p[1] * E3;
    acc = acc + T(-64L) * x3p[2] * y5p[1] * E1p[2] * E2p[1];
    acc = acc + T(8L) * x3p[2] * y5p[1] * E1p[1] * E2p[1] * E3;
    acc = acc + T(-4L) * x3p[2] * y5p[1] * E2p[1] * E3;
    acc = acc + T(1L) * x3p[2] * E1p[2] * E2p[2] * E3;
    acc = acc + T(-2L) * x3p[2] * E1p[1] * E2p[2] * E3;
    acc = acc + T(1L) * x3p[2] * E2p[2] * E3;
    acc = acc + T(-16L) * x3p[1] * y5p[2] * E1p[2] * E3;
    acc = acc + T(128L) * x3p[1] * y5p[2] * E1p[2];
    acc = acc + T(8L) * x3p[1] * y5p[1] * E1p[2] * E2p[1] * E3;
    acc = acc + T(-64L) * x3p[1] * y5p[1] * E1p[2] * E2p[1];
    acc = acc + T(-4L) * y5p[2] * E1p[2] * E3;
    acc = acc + T(32L) * y5p[2] * E1p[2];
    acc = acc + T(2L) * y5p[1] * E1p[2] * E2p[1] * E3;
    acc = acc + T(-16L) * y5p[1] * E1p[2] * E2p[1];
    return acc;
}

template <typename T>
T L1(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3) {
    std::vector<T> x3p;
    x3p.push_back(T(1));
    for (int i = 0; i < 4; ++i) x3p.push_back(x3p.back() * x3);
    T acc(0);
    acc = acc + T(-8L) * x3p[4] * y5 * E1 * E3;
    acc = acc + T(-4L) * x3p[3] * y5 * E3;
    acc = acc + T(-2L) * x3p[3] * E1 * E2 * E3;
    acc = acc + T(2L) * x3p[2] * y5 * E1 * E3;
    acc = acc + T(-2L) * x3p[2] * y5 * E3;
    acc = acc + T(-1L) * x3p[2] * E1 * E2 * E3;
    acc = acc + T(1L) * x3p[2] * E2 * E3;
    acc = acc + T(16L) * x3p[1] * y5 * E1;
    acc = acc + T(8L) * y5 * E1;
    return acc;
}

template <typename T>
T L2(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3) {
    std::vector<T> x3p;
    x3p.push_back(T(1));
    for (int i = 0; i < 4; ++i) x3p.push_back(x3p.back() * x3);
    T acc(0);
    acc = acc + T(24L) * x3p[4] * y5 * E1 * E3;
    acc = acc + T(-128L) * x3p[4] * y5 * E1;
    acc = acc + T(8L) * x3p[3] * y5 * E1 * E3;
    acc = acc + T(-64L) * x3p[3] * y5 * E1;
    acc = acc + T(4L) * x3p[3] * y5 * E3;
    acc = acc + T(2L) * x3p[3] * E1 * E2 * E3;
    acc = acc + T(-2L) * x3p[2] * y5 * E1 * E3;
    acc = acc + T(2L) * x3p[2] * y5 * E3;
    acc = acc + T(1L) * x3p[2] * E1 * E2 * E3;
    acc = acc + T(-1L) * x3p[2] * E2 * E3;
    acc = acc + T(-2L) * x3p[1] * y5 * E1 * E3;
    acc = acc + T(-1L) * y5 * E1 * E3;
    return acc;
}

template <typename T>
T g1(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam) {
    std::vector<T> x3p;
    x3p.push_back(T(1));
    for (int i = 0; i < 4; ++i) x3p.push_back(x3p.back() * x3);
    std::vector<T> E3p;
    E3p.push_back(T(1));
    for (int i = 0; i < 2; ++i) E3p.push_back(E3p.back() * E3);
    std::vector<T> lamp;
    lamp.push_back(T(1));
    for (int i = 0; i < 2; ++i) lamp.push_back(lamp.back() * lam);
    T acc(0);
    acc = acc + T(8L) * x3p[4] * y5 * E1 * E3p[2] * lamp[2];
    acc = acc + T(8L) * x3p[4] * y5 * E1 * E3p[2] * lamp[1];
    acc = acc + T(64L) * x3p[4] * y5 * E1 * E3p[1] * lamp[1];
    acc = acc + T(64L) * x3p[4] * y5 * E1 * E3p[1];
    acc = acc + T(16L) * x3p[3] * y5 * E1 * E3p[2] * lamp[1];
    acc = acc + T(8L) * x3p[3] * y5 * E1 * E3p[2];
    acc = acc + T(-192L) * x3p[3] * y5 * E1 * E3p[1] * lamp[1];
    acc = acc + T(-64L) * x3p[3] * y5 * E1 * E3p[1];
    acc = acc + T(512L) * x3p[3] * y5 * E1 * lamp[1];
    acc = acc + T(-4L) * x3p[3] * y5 * E3p[2] * lamp[2];
    acc = acc + T(-4L) * x3p[3] * y5 * E3p[2] * lamp[1];
    acc = acc + T(-32L) * x3p[3] * y5 * E3p[1] * lamp[1];
    acc = acc + T(-32L) * x3p[3] * y5 * E3p[1];
    acc = acc + T(-6L) * x3p[3] * E1 * E2 * E3p[2] * lamp[2];
    acc = acc + T(-10L) * x3p[3] * E1 * E2 * E3p[2] * lamp[1];
    acc = acc + T(-4L) * x3p[3] * E1 * E2 * E3p[2];
    acc = acc + T(32L) * x3p[3] * E1 * E2 * E3p[1] * lamp[2];
    acc = acc + T(48L) * x3p[3] * E1 * E2 * E3p[1] * lamp[1];
    acc = acc + T(16L) * x3p[3] * E1 * E2 * E3p[1];
    acc = acc + T(2L) * x3p[2] * y5 * E1 * E3p[2] * lamp[2];
    acc = acc + T(2L) * x3p[2] * y5 * E1 * E3p[2] * lamp[1];
    acc = acc + T(16L) * x3p[2] * y5 * E1 * E3p[1] * lamp[1];
    acc = acc + T(16L) * x3p[2] * y5 * E1 * E3p[1];
    acc = acc + T(-2L) * x3p[2] * y5 * E3p[2] * lamp[2];
    acc = acc + T(-2L) * x3p[2] * y5 * E3p[2] * lamp[1];
    acc = acc + T(-16L) * x3p[2] * y5 * E3p[1] * lamp[1];
    acc = acc + T(-16L) * x3p[2] * y5 * E3p[1];
    acc = acc + T(-1L) * x3p[2] * E1 * E2 * E3p[2] * lamp[2];
    acc = acc + T(-1L) * x3p[2] * E1 * E2 * E3p[2] * lamp[1];
    acc = acc + T(-8L) * x3p[2] * E1 * E2 * E3p[1] * lamp[1];
    acc = acc + T(-8L) * x3p[2] * E1 * E2 * E3p[1];
    acc = acc + T(1L) * x3p[2] * E2 * E3p[2] * lamp[2];
    acc = acc + T(1L) * x3p[2] * E2 * E3p[2] * lamp[1];
    acc = acc + T(8L) * x3p[2] * E2 * E3p[1] * lamp[1];
    acc = acc + T(8L) * x3p[2] * E2 * E3p[1];
    acc = acc + T(1L) * y5 * E1 * E3p[2] * lamp[2];
    acc = acc + T(16L) * y5 * E1 * E3p[1] * lamp[1];
    acc = acc + T(64L) * y5 * E1;
    return acc;
}

template <typename T>
T mass_den(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam) {
    std::vector<T> x3p;
    x3p.push_back(T(1));
    for (int i = 0; i < 3; ++i) x3p.push_back(x3p.back() * x3);
    T acc(0);
    acc = acc + T(4L) * x3p[3] * y5 * E1 * E3 * lam;
    acc = acc + T(-4L) * x3p[3] * y5 * E1 * E3;
    acc = acc + T(64L) * x3p[3] * y5 * E1;
    acc = acc + T(2L) * x3p[3] * E1 * E2 * E3 * lam;
    acc = acc + T(2L) * x3p[3] * E1 * E2 * E3;
    acc = acc + T(-2L) * x3p[2] * y5 * E1 * E3 * lam;
    acc = acc + T(-2L) * x3p[2] * y5 * E1 * E3;
    acc = acc + T(2L) * x3p[2] * y5 * E3 * lam;
    acc = acc + T(2L) * x3p[2] * y5 * E3;
    acc = acc + T(1L) * x3p[2] * E1 * E2 * E3 * lam;
    acc = acc + T(1L) * x3p[2] * E1 * E2 * E3;
    acc = acc + T(-1L) * x3p[2] * E2 * E3 * lam;
    acc = acc + T(-1L) * x3p[2] * E2 * E3;
    acc = acc + T(-1L) * y5 * E1 * E3 * lam;
    acc = acc + T(-8L) * y5 * E1;
    return acc;
}

template <typename T>
T f1_num(const T& x3, const T& E1, const T& E3, const T& lam, const T& m1, const T& m3) {
    T acc(0);
    acc = acc + T(2L) * x3 * E1 * E3 * m3;
    acc = acc + T(-1L) * E1 * E3 * lam;
    acc = acc + T(-2L) * E1 * E3 * m1;
    acc = acc + T(-1L) * E1 * E3 * m3;
    acc = acc + T(16L) * E1 * m1;
    acc = acc + T(16L) * E1 * m3;
    acc = acc + T(-8L) * E1;
    acc = acc + T(-1L) * E3 * m3;
    return acc;
}

template <typename T>
T f1_den(const T& E1, const T& E3) {
    T acc(0);
    acc = acc + T(2L) * E1 * E3;
    return acc;
}

template <typename T>
T f1(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam, const T& m1, const T& m3) {
    return f1_num(x3, E1, E3, lam, m1, m3) / f1_den(E1, E3);
}

template <typename T>
T f2_num(const T& x3, const T& E1, const T& lam, const T& m1, const T& m3) {
    std::vector<T> x3p;
    x3p.push_back(T(1));
    for (int i = 0; i < 3; ++i) x3p.push_back(x3p.back() * x3);
    T acc(0);
    acc = acc + T(-4L) * x3p[3] * E1 * lam;
    acc = acc + T(4L) * x3p[3] * E1 * m1;
    acc = acc + T(8L) * x3p[3] * E1 * m3;
    acc = acc + T(-4L) * x3p[3] * E1;
    acc = acc + T(2L) * x3p[2] * E1 * m1;
    acc = acc + T(-2L) * x3p[2] * m1;
    acc = acc + T(-1L) * E1 * m3;
    return acc;
}

template <typename T>
T f2_den(const T& x3, const T& E1) {
    std::vector<T> x3p;
    x3p.push_back(T(1));
    for (int i = 0; i < 2; ++i) x3p.push_back(x3p.back() * x3);
    T acc(0);
    acc = acc + T(4L) * x3p[2] * E1;
    return acc;
}

template <typename T>
T f2(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam, const T& m1, const T& m3) {
    return f2_num(x3, E1, lam, m1, m3) / f2_den(x3, E1);
}

template <typename T>
T f3_num(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam, const T& m1, const T& m3) {
    T acc(0);
    acc = acc + T(-8L) * x3 * y5 * E1 * E3 * lam * m1;
    acc = acc + T(-8L) * x3 * y5 * E1 * E3 * lam * m3;
    acc = acc + T(4L) * x3 * y5 * E1 * E3 * lam;
    acc = acc + T(-64L) * x3 * y5 * E1 * m1;
    acc = acc + T(-64L) * x3 * y5 * E1 * m3;
    acc = acc + T(32L) * x3 * y5 * E1;
    acc = acc + T(4L) * x3 * E1 * E2 * E3 * lam * m3;
    acc = acc + T(2L) * x3 * E1 * E2 * E3 * m3;
    acc = acc + T(-4L) * y5 * E1 * E3 * lam * m1;
    acc = acc + T(-4L) * y5 * E1 * E3 * lam * m3;
    acc = acc + T(2L) * y5 * E1 * E3 * lam;
    acc = acc + T(-32L) * y5 * E1 * m1;
    acc = acc + T(-32L) * y5 * E1 * m3;
    acc = acc + T(16L) * y5 * E1;
    acc = acc + T(2L) * E1 * E2 * E3 * lam * m3;
    acc = acc + T(1L) * E1 * E2 * E3 * m3;
    acc = acc + T(1L) * E2 * E3 * m3;
    return acc;
}

template <typename T>
T f3_den(const T& x3, const T& E1, const T& E3) {
    T acc(0);
    acc = acc + T(4L) * x3 * E1 * E3;
    acc = acc + T(2L) * E1 * E3;
    return acc;
}

template <typename T>
T f3(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam, const T& m1, const T& m3) {
    return f3_num(x3, y5, E1, E2, E3, lam, m1, m3) / f3_den(x3, E1, E3);
}

template <typename T>
T f4_num(const T& x3, const T& y5, const T& E1, const T& E2, const T& lam, const T& m1, const T& m3) {
    T acc(0);
    acc = acc + T(-8L) * x3 * y5 * E1 * lam * m1;
    acc = acc + T(-8L) * x3 * y5 * E1 * lam * m3;
    acc = acc + T(4L) * x3 * y5 * E1 * lam;
    acc = acc + T(-8L) * x3 * y5 * E1 * m1;
    acc = acc + T(-8L) * x3 * y5 * E1 * m3;
    acc = acc + T(4L) * x3 * y5 * E1;
    acc = acc + T(4L) * x3 * E1 * E2 * lam * m3;
    acc = acc + T(-2L) * x3 * E1 * E2 * lam;
    acc = acc + T(2L) * x3 * E1 * E2 * m1;
    acc = acc + T(4L) * x3 * E1 * E2 * m3;
    acc = acc + T(-2L) * x3 * E1 * E2;
    acc = acc + T(-4L) * y5 * E1 * lam * m1;
    acc = acc + T(-4L) * y5 * E1 * lam * m3;
    acc = acc + T(2L) * y5 * E1 * lam;
    acc = acc + T(-4L) * y5 * E1 * m1;
    acc = acc + T(-4L) * y5 * E1 * m3;
    acc = acc + T(2L) * y5 * E1;
    acc = acc + T(2L) * E1 * E2 * lam * m3;
    acc = acc + T(-1L) * E1 * E2 * lam;
    acc = acc + T(1L) * E1 * E2 * m1;
    acc = acc + T(2L) * E1 * E2 * m3;
    acc = acc + T(-1L) * E1 * E2;
    acc = acc + T(-1L) * E2 * m1;
    return acc;
}

template <typename T>
T f4_den(const T& x3, const T& E1) {
    T acc(0);
    acc = acc + T(4L) * x3 * E1;
    acc = acc + T(2L) * E1;
    return acc;
}

template <typename T>
T f4(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam, const T& m1, const T& m3) {
    return f4_num(x3, y5, E1, E2, lam, m1, m3) / f4_den(x3, E1);
}

template <typename T>
T f5_num(const T& y5, const T& E2, const T& E3, const T& lam, const T& m1, const T& m3) {
    T acc(0);
    acc = acc + T(-2L) * y5 * E3 * lam * m1;
    acc = acc + T(-2L) * y5 * E3 * lam * m3;
    acc = acc + T(-2L) * y5 * E3 * m3;
    acc = acc + T(-16L) * y5 * m1;
    acc = acc + T(1L) * E2 * E3 * lam * m3;
    acc = acc + T(1L) * E2 * E3 * m3;
    return acc;
}

template <typename T>
T f5_den(const T& E3) {
    T acc(0);
    acc = acc + T(1L) * E3;
    return acc;
}

template <typename T>
T f5(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam, const T& m1, const T& m3) {
    return f5_num(y5, E2, E3, lam, m1, m3) / f5_den(E3);
}

}  // namespace pentacc::formulas

#endif
