#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcbf/rational.hpp"

namespace pcbf {

/// Multivariate polynomial over a fixed number of variables. Terms map
/// exponent vectors to coefficients; zero coefficients are never stored.
/// The ordered map keeps iteration deterministic.
template <typename Coef>
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

    static Polynomial constant(int num_vars, const Coef& c) {
        Polynomial p(num_vars);
        p.add_term(Exponents(num_vars, 0), c);
        return p;
    }

    static Polynomial variable(int num_vars, int index, const Coef& c = Coef(1)) {
        Polynomial p(num_vars);
        Exponents e(num_vars, 0);
        e[index] = 1;
        p.add_term(e, c);
        return p;
    }

    int num_vars() const { return num_vars_; }
    const std::map<Exponents, Coef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Exponents& exps, const Coef& c) {
        if (static_cast<int>(exps.size()) != num_vars_)
            throw std::invalid_argument("Polynomial: exponent vector length mismatch");
        if (c == Coef(0)) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second == Coef(0)) terms_.erase(it);
        }
    }

    Coef coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Coef(0) : it->second;
    }

    Polynomial operator+(const Polynomial& rhs) const {
        check_vars(rhs);
        Polynomial out = *this;
        for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
        return out;
    }

    Polynomial operator-(const Polynomial& rhs) const {
        check_vars(rhs);
        Polynomial out = *this;
        for (const auto& [e, c] : rhs.terms_) out.add_term(e, Coef(-c));
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(num_vars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, Coef(-c));
        return out;
    }

    Polynomial operator*(const Polynomial& rhs) const {
        check_vars(rhs);
        Polynomial out(num_vars_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : rhs.terms_) {
                Exponents e(num_vars_);
                for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    Polynomial operator*(const Coef& s) const {
        Polynomial out(num_vars_);
        if (s == Coef(0)) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, Coef(c * s));
        return out;
    }

    template <typename Point>
    auto evaluate(const std::vector<Point>& x) const {
        if (static_cast<int>(x.size()) != num_vars_)
            throw std::invalid_argument("Polynomial: evaluation point dimension mismatch");
        Point acc(0);
        for (const auto& [e, c] : terms_) {
            Point t(c);
            for (int i = 0; i < num_vars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Substitutes x_i := subs[i]; the substituted polynomials share a
    /// common variable count which becomes the result's.
    Polynomial compose(const std::vector<Polynomial>& subs) const {
        if (static_cast<int>(subs.size()) != num_vars_)
            throw std::invalid_argument("Polynomial: substitution arity mismatch");
        int out_vars = subs.empty() ? num_vars_ : subs[0].num_vars();
        Polynomial out(out_vars);
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(out_vars, c);
            for (int i = 0; i < num_vars_; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * subs[i];
            out = out + term;
        }
        return out;
    }

    bool operator==(const Polynomial& rhs) const {
        return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
    }

private:
    void check_vars(const Polynomial& rhs) const {
        if (num_vars_ != rhs.num_vars_)
            throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    int num_vars_ = 0;
    std::map<Exponents, Coef> terms_;
};

using Poly = Polynomial<Rat>;
using PolyD = Polynomial<double>;

PolyD to_double(const Poly& p);

/// Largest absolute coefficient; zero polynomial gives 0.
double max_abs_coefficient(const PolyD& p);

}  // namespace pcbf
