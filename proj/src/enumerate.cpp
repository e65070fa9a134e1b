#include "platy/enumerate.hpp"

#include <cmath>
#include <functional>

namespace platy {

QMat qmat(const Mat3& g) {
    QMat m(3, QVec(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = g[i][j];
    return m;
}

static Q qform(const QMat& G, const QVec& v) {
    Q r = 0;
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Q row = 0;
        for (size_t j = 0; j < n; ++j)
            if (v[j] != 0) row += G[i][j] * v[j];
        r += v[i] * row;
    }
    return r;
}

std::vector<std::vector<long long>> close_vectors(const QMat& G, const QVec& c, const Q& bound) {
    int n = static_cast<int>(G.size());
    std::vector<std::vector<long long>> out;
    if (bound < 0) return out;
    // q-form decomposition: Q(x) = sum_i qd[i] (x_i - ctr_i + sum_{j>i} mu[i][j] (x_j - ctr_j))^2
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = G[i][j].get_d();
    std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
    std::vector<double> qd(n);
    for (int i = 0; i < n; ++i) {
        double s = a[i][i];
        for (int k = 0; k < i; ++k) s -= mu[k][i] * mu[k][i] * qd[k];
        qd[i] = s;
        if (!(s > 0)) throw DomainError("NotPositiveDefinite", "enumeration on a non positive definite form");
        for (int j = i + 1; j < n; ++j) {
            double t = a[i][j];
            for (int k = 0; k < i; ++k) t -= mu[k][i] * mu[k][j] * qd[k];
            mu[i][j] = t / s;
        }
    }
    std::vector<double> cd(n);
    for (int i = 0; i < n; ++i) cd[i] = c[i].get_d();
    double R = bound.get_d();
    double slack = 1e-7 * (1.0 + R);
    std::vector<long long> x(n);
    std::function<void(int, double)> rec = [&](int i, double rem) {
        if (i < 0) {
            QVec d(n);
            for (int k = 0; k < n; ++k) d[k] = Q(static_cast<long>(x[k])) - c[k];
            if (qform(G, d) <= bound) out.push_back(x);
            return;
        }
        double centre = cd[i];
        for (int j = i + 1; j < n; ++j) centre -= mu[i][j] * (static_cast<double>(x[j]) - cd[j]);
        double r = std::sqrt(std::max(0.0, rem + slack) / qd[i]);
        long long lo = static_cast<long long>(std::ceil(centre - r - 1e-9));
        long long hi = static_cast<long long>(std::floor(centre + r + 1e-9));
        for (long long v = lo; v <= hi; ++v) {
            x[i] = v;
            double t = static_cast<double>(v) - centre;
            double used = qd[i] * t * t;
            if (used > rem + slack) continue;
            rec(i - 1, rem - used);
        }
    };
    rec(n - 1, R);
    return out;
}

ClosestResult closest_vector(const QMat& G, const QVec& c) {
    int n = static_cast<int>(G.size());
    // any rounded point gives a valid radius
    QVec d(n);
    std::vector<long long> r0(n);
    for (int i = 0; i < n; ++i) {
        Q shifted = c[i] + Q(1, 2);
        Z f;
        mpz_fdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        r0[i] = f.get_si();
        d[i] = Q(static_cast<long>(r0[i])) - c[i];
    }
    Q best = qform(G, d);
    ClosestResult res{best, r0};
    for (auto& x : close_vectors(G, c, best)) {
        for (int i = 0; i < n; ++i) d[i] = Q(static_cast<long>(x[i])) - c[i];
        Q v = qform(G, d);
        if (v < res.dist_sq) res = {v, x};
    }
    return res;
}

std::vector<std::vector<long long>> short_vectors(const QMat& G, const Q& bound) {
    QVec zero(G.size(), Q(0));
    std::vector<std::vector<long long>> out;
    for (auto& x : close_vectors(G, zero, bound)) {
        bool nz = false;
        for (auto v : x) nz = nz || v != 0;
        if (nz) out.push_back(x);
    }
    return out;
}

}  // namespace platy
