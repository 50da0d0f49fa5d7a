#include "pcbf/exact_roots.hpp"

namespace pcbf {

namespace {

int degree_of(const std::vector<Rat>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;  // zero polynomial
}

std::vector<Rat> derivative(const std::vector<Rat>& p) {
    if (p.size() <= 1) return {};
    std::vector<Rat> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
    return d;
}

Rat eval(const std::vector<Rat>& p, const Rat& x) {
    Rat acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

/// Remainder of a / b over the rationals.
std::vector<Rat> remainder(std::vector<Rat> a, const std::vector<Rat>& b) {
    int db = degree_of(b);
    int da = degree_of(a);
    while (da >= db && da >= 0) {
        Rat factor = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
        a[da] = 0;  // clear rounding of the exact cancellation
        da = degree_of(a);
    }
    a.resize(da + 1 > 0 ? da + 1 : 0);
    return a;
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

std::vector<Rat> characteristic_polynomial(const RatMat& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("characteristic_polynomial: square matrix required");
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    RatMat mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // mk = m * (mk_prev + c_{k-1} I)
            RatMat shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - (k - 1)];
            mk = m * shifted;
        }
        Rat trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += mk(i, i);
        coeffs[n - k] = -trace / Rat(static_cast<long>(k));
    }
    return coeffs;
}

int count_real_roots_geq(const std::vector<Rat>& poly, const Rat& a) {
    int deg = degree_of(poly);
    if (deg <= 0) return 0;

    // Sturm chain p0, p1, -rem(...), ...
    std::vector<std::vector<Rat>> chain;
    chain.push_back(poly);
    chain.push_back(derivative(poly));
    while (degree_of(chain.back()) > 0) {
        std::vector<Rat> r = remainder(chain[chain.size() - 2], chain.back());
        if (degree_of(r) < 0) break;
        for (Rat& c : r) c = -c;
        chain.push_back(std::move(r));
    }

    std::vector<int> at_a, at_inf;
    for (const auto& p : chain) {
        int d = degree_of(p);
        at_a.push_back(d < 0 ? 0 : sign_of(eval(p, a)));
        at_inf.push_back(d < 0 ? 0 : sign_of(p[d]));
    }
    int roots_above = sign_variations(at_a) - sign_variations(at_inf);
    int at_point = (eval(poly, a) == 0) ? 1 : 0;
    return roots_above + at_point;
}

bool max_eigenvalue_geq(const RatMat& symmetric, const Rat& c) {
    return count_real_roots_geq(characteristic_polynomial(symmetric), c) > 0;
}

bool max_squared_singular_value_geq(const RatMat& a, const Rat& c) {
    return max_eigenvalue_geq(a.transpose() * a, c);
}

}  // namespace pcbf
