#ifndef ARTEMIS_DOMAIN_HPP
#define ARTEMIS_DOMAIN_HPP

#include <cstdint>
#include <vector>

#include "artemis/errors.hpp"

namespace artemis {

template <typename Fx>
void batch_inverse(std::vector<Fx>& v) {
    std::vector<Fx> prefix(v.size());
    Fx acc = Fx::one();
    for (size_t i = 0; i < v.size(); i++) {
        prefix[i] = acc;
        if (!v[i].is_zero()) acc *= v[i];
    }
    Fx inv = acc.inverse();
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i].is_zero()) continue;
        Fx cur = v[i];
        v[i] = inv * prefix[i];
        inv *= cur;
    }
}

template <typename Fx>
std::vector<Fx> powers(const Fx& x, size_t count) {
    std::vector<Fx> out(count);
    Fx acc = Fx::one();
    for (size_t i = 0; i < count; i++) {
        out[i] = acc;
        acc *= x;
    }
    return out;
}

namespace detail {

// twiddles laid out per level: for each len = 2,4,...,n the powers of
// omega^(n/len) from 0 to len/2-1, concatenated (n-1 entries total)
template <typename Fx>
std::vector<Fx> twiddle_table(const Fx& omega, size_t n) {
    std::vector<Fx> table;
    table.reserve(n);
    for (size_t len = 2; len <= n; len <<= 1) {
        Fx wlen = omega;
        for (size_t l = len; l < n; l <<= 1) wlen = wlen.square();
        Fx w = Fx::one();
        for (size_t j = 0; j < len / 2; j++) {
            table.push_back(w);
            w *= wlen;
        }
    }
    return table;
}

template <typename Fx>
void ntt_in_place(std::vector<Fx>& a, const std::vector<Fx>& twiddles) {
    size_t n = a.size();
    // bit reversal
    for (size_t i = 1, j = 0; i < n; i++) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    size_t level = 0;
    for (size_t len = 2; len <= n; len <<= 1) {
        const Fx* w = twiddles.data() + level;
        for (size_t i = 0; i < n; i += len) {
            for (size_t j = 0; j < len / 2; j++) {
                Fx u = a[i + j];
                Fx v = a[i + j + len / 2] * w[j];
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
        level += len / 2;
    }
}

} // namespace detail

// Multiplicative subgroup {w^0 .. w^{n-1}} of size n = 2^k; the vanishing
// polynomial over the domain is X^n - 1.
template <typename Fx>
struct EvaluationDomain {
    uint32_t log_size = 0;
    size_t size = 0;
    Fx omega;
    Fx omega_inv;
    Fx size_inv;
    std::vector<Fx> twiddles;
    std::vector<Fx> inv_twiddles;

    static EvaluationDomain make(uint32_t log_size) {
        EvaluationDomain d;
        d.log_size = log_size;
        d.size = size_t(1) << log_size;
        d.omega = Fx::root_of_unity(log_size);
        d.omega_inv = d.omega.inverse();
        d.size_inv = Fx::from_u64(d.size).inverse();
        d.twiddles = detail::twiddle_table(d.omega, d.size);
        d.inv_twiddles = detail::twiddle_table(d.omega_inv, d.size);
        return d;
    }

    std::vector<Fx> elements() const { return powers(omega, size); }

    // coefficients -> evaluations over the domain
    std::vector<Fx> ntt(std::vector<Fx> values) const {
        if (values.size() != size) throw DomainSizeMismatch("ntt input size != domain size");
        detail::ntt_in_place(values, twiddles);
        return values;
    }

    // evaluations over the domain -> coefficients
    std::vector<Fx> intt(std::vector<Fx> values) const {
        if (values.size() != size) throw DomainSizeMismatch("intt input size != domain size");
        detail::ntt_in_place(values, inv_twiddles);
        for (auto& v : values) v *= size_inv;
        return values;
    }

    // coefficients -> evaluations over the coset g*H (g the field generator)
    std::vector<Fx> coset_ntt(std::vector<Fx> values) const {
        if (values.size() != size) throw DomainSizeMismatch("coset ntt size mismatch");
        Fx g = Fx::generator();
        Fx acc = Fx::one();
        for (auto& v : values) {
            v *= acc;
            acc *= g;
        }
        detail::ntt_in_place(values, twiddles);
        return values;
    }

    std::vector<Fx> coset_intt(std::vector<Fx> values) const {
        if (values.size() != size) throw DomainSizeMismatch("coset intt size mismatch");
        detail::ntt_in_place(values, inv_twiddles);
        Fx ginv = Fx::generator().inverse();
        Fx acc = size_inv;
        for (auto& v : values) {
            v *= acc;
            acc *= ginv;
        }
        return values;
    }

    // single Lagrange basis value L_j(x) for x outside the domain
    Fx lagrange_eval(size_t j, const Fx& x) const {
        Fx wj = omega.pow(j);
        Fx zx = x.pow(size) - Fx::one();
        return wj * size_inv * zx * (x - wj).inverse();
    }

    // evaluate the polynomial interpolating `values` over the domain at x
    // (barycentric; x must not be a domain element)
    Fx eval_from_lagrange(const std::vector<Fx>& values, const Fx& x) const {
        if (values.size() != size) throw DomainSizeMismatch("eval size mismatch");
        std::vector<Fx> denoms(size);
        Fx wj = Fx::one();
        for (size_t j = 0; j < size; j++) {
            denoms[j] = x - wj;
            wj *= omega;
        }
        batch_inverse(denoms);
        Fx sum = Fx::zero();
        wj = Fx::one();
        for (size_t j = 0; j < size; j++) {
            sum += values[j] * wj * denoms[j];
            wj *= omega;
        }
        Fx zx = x.pow(size) - Fx::one();
        return sum * zx * size_inv;
    }
};

} // namespace artemis

#endif
