#ifndef ARTEMIS_POLYNOMIAL_HPP
#define ARTEMIS_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "artemis/domain.hpp"
#include "artemis/errors.hpp"

namespace artemis {

enum class PolyForm { Coefficient, Lagrange };

// Dense polynomial, lowest-degree coefficient first. Lagrange-form instances
// are evaluation vectors over a domain of matching size.
template <typename Fx>
struct Polynomial {
    std::vector<Fx> values;
    PolyForm form = PolyForm::Coefficient;

    static Polynomial from_coeffs(std::vector<Fx> coeffs) {
        return Polynomial{std::move(coeffs), PolyForm::Coefficient};
    }
    static Polynomial lagrange(std::vector<Fx> evals) {
        return Polynomial{std::move(evals), PolyForm::Lagrange};
    }
    static Polynomial constant(const Fx& c) { return from_coeffs({c}); }

    size_t degree_bound() const { return values.empty() ? 0 : values.size() - 1; }

    Polynomial to_coefficient(const EvaluationDomain<Fx>& d) const {
        if (form == PolyForm::Coefficient) return *this;
        return from_coeffs(d.intt(values));
    }
    Polynomial to_lagrange(const EvaluationDomain<Fx>& d) const {
        if (form == PolyForm::Lagrange) return *this;
        std::vector<Fx> padded = values;
        if (padded.size() > d.size) throw DomainSizeMismatch("degree exceeds domain");
        padded.resize(d.size, Fx::zero());
        return lagrange(d.ntt(std::move(padded)));
    }
};

template <typename Fx>
Fx horner_eval(const std::vector<Fx>& coeffs, const Fx& x) {
    Fx acc = Fx::zero();
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

template <typename Fx>
Fx horner_eval(const Polynomial<Fx>& g, const Fx& x) {
    return horner_eval(g.values, x);
}

template <typename Fx>
std::vector<Fx> poly_add(const std::vector<Fx>& a, const std::vector<Fx>& b) {
    std::vector<Fx> out = a.size() >= b.size() ? a : b;
    const std::vector<Fx>& small = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < small.size(); i++) out[i] += small[i];
    return out;
}

template <typename Fx>
std::vector<Fx> poly_scale(std::vector<Fx> a, const Fx& c) {
    for (auto& v : a) v *= c;
    return a;
}

// schoolbook product (test scale only)
template <typename Fx>
std::vector<Fx> poly_mul(const std::vector<Fx>& a, const std::vector<Fx>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Fx> out(a.size() + b.size() - 1, Fx::zero());
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) out[i + j] += a[i] * b[j];
    return out;
}

// g(X) = q(X) * (X - x) + r with r = g(x)
template <typename Fx>
std::pair<std::vector<Fx>, Fx> poly_divide_linear(const std::vector<Fx>& g, const Fx& x) {
    if (g.empty()) return {{}, Fx::zero()};
    std::vector<Fx> q(g.size() > 1 ? g.size() - 1 : 0, Fx::zero());
    Fx rem = g.back();
    for (size_t i = g.size() - 1; i-- > 0;) {
        if (i < q.size()) q[i] = rem;
        rem = rem * x + g[i];
    }
    return {std::move(q), rem};
}

// exact division by X^n - 1; throws if the remainder is nonzero
template <typename Fx>
std::vector<Fx> divide_by_vanishing(const std::vector<Fx>& g, size_t n) {
    if (g.size() <= n) {
        for (const auto& c : g)
            if (!c.is_zero()) throw NotDivisibleByVanishing();
        return {};
    }
    std::vector<Fx> q(g.size() - n, Fx::zero());
    for (size_t i = g.size(); i-- > n;) {
        q[i - n] = g[i] + (i < q.size() ? q[i] : Fx::zero());
    }
    for (size_t j = 0; j < n; j++) {
        Fx r = g[j] + (j < q.size() ? q[j] : Fx::zero());
        if (!r.is_zero()) throw NotDivisibleByVanishing();
    }
    return q;
}

template <typename Fx>
std::vector<Fx> divide_by_vanishing(const std::vector<Fx>& g, const EvaluationDomain<Fx>& d) {
    return divide_by_vanishing(g, d.size);
}

} // namespace artemis

#endif
