#include "rng.hpp"

#include <cmath>

namespace tcsd {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_cached_) {
        have_cached_ = false;
        return cached_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
}

Cplx Rng::cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return Cplx(re, im) * M_SQRT1_2;
}

Vec Rng::cgaussian_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cgaussian();
    return v;
}

Mat Rng::ginibre(int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cgaussian();
    return m;
}

Mat Rng::haar_unitary(int n) {
    Mat g = ginibre(n, n);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the diagonal phases of R so the distribution is Haar
    for (int i = 0; i < n; ++i) {
        Cplx d = r(i, i);
        double a = std::abs(d);
        q.col(i) *= (a > 0.0 ? d / a : Cplx(1.0, 0.0));
    }
    return q;
}

Rng Rng::fork(std::uint64_t salt) {
    return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL));
}

}  // namespace tcsd
