#include "stunted/witt.hpp"

#include <stdexcept>
#include <string>

namespace stunted {

WittRing::WittRing(std::uint32_t p, std::uint32_t m, std::uint32_t precision_exponent)
    : p_(p), m_(m), N_(precision_exponent), residue_(p, m) {
    if (N_ == 0)
        throw std::invalid_argument("WittRing: precision must be positive");
    pN_ = 1;
    for (std::uint32_t i = 0; i < N_; ++i) {
        if (pN_ > (1ULL << 62) / p_)
            throw std::invalid_argument("WittRing: p^N too large");
        pN_ *= p_;
    }
    modulus_.assign(residue_.modulus().begin(), residue_.modulus().end());
}

std::uint64_t WittRing::mod_mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % pN_);
}

WittRing::Elem WittRing::one() const {
    Elem e(m_, 0);
    e[0] = 1 % pN_;
    return e;
}

WittRing::Elem WittRing::from_int(long long v) const {
    Elem e(m_, 0);
    long long r = v % static_cast<long long>(pN_);
    if (r < 0)
        r += static_cast<long long>(pN_);
    e[0] = static_cast<std::uint64_t>(r);
    return e;
}

WittRing::Elem WittRing::add(const Elem& a, const Elem& b) const {
    Elem c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t s = a[i] + b[i];
        c[i] = s >= pN_ ? s - pN_ : s;
    }
    return c;
}

WittRing::Elem WittRing::sub(const Elem& a, const Elem& b) const {
    Elem c(m_);
    for (std::uint32_t i = 0; i < m_; ++i)
        c[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + pN_ - b[i];
    return c;
}

WittRing::Elem WittRing::neg(const Elem& a) const {
    Elem c(m_);
    for (std::uint32_t i = 0; i < m_; ++i)
        c[i] = a[i] == 0 ? 0 : pN_ - a[i];
    return c;
}

WittRing::Elem WittRing::mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> conv(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (a[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < m_; ++j) {
            std::uint64_t t = conv[i + j] + mod_mul(a[i], b[j]);
            conv[i + j] = t >= pN_ ? t - pN_ : t;
        }
    }
    // Reduce by the monic modulus from the top down.
    for (std::uint32_t d = 2 * m_ - 2; d >= m_; --d) {
        std::uint64_t lead = conv[d];
        if (lead != 0) {
            conv[d] = 0;
            for (std::uint32_t i = 0; i < m_; ++i) {
                std::uint64_t t = mod_mul(lead, modulus_[i]);
                std::uint64_t cur = conv[d - m_ + i];
                conv[d - m_ + i] = cur >= t ? cur - t : cur + pN_ - t;
            }
        }
        if (d == m_)
            break;
    }
    return Elem(conv.begin(), conv.begin() + m_);
}

WittRing::Elem WittRing::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

WittRing::Elem WittRing::mul_scalar(const Elem& a, std::uint64_t s) const {
    Elem c(m_);
    s %= pN_;
    for (std::uint32_t i = 0; i < m_; ++i)
        c[i] = mod_mul(a[i], s);
    return c;
}

bool WittRing::is_zero(const Elem& a) const {
    for (auto v : a)
        if (v != 0)
            return false;
    return true;
}

std::uint32_t WittRing::residue(const Elem& a) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i)
        d[i] = static_cast<std::uint32_t>(a[i] % p_);
    return residue_.from_digits(d);
}

const WittRing::Elem& WittRing::teichmuller(std::uint32_t a) const {
    auto it = teich_cache_.find(a);
    if (it != teich_cache_.end())
        return it->second;
    Elem z(m_, 0);
    auto digits = residue_.digits(a);
    for (std::uint32_t i = 0; i < m_; ++i)
        z[i] = digits[i];
    std::uint64_t q = residue_.order();
    for (std::uint32_t iter = 0; iter <= N_ + 1; ++iter) {
        Elem nz = pow(z, q);
        if (nz == z)
            return teich_cache_.emplace(a, std::move(z)).first->second;
        z = std::move(nz);
    }
    throw internal_error("WittRing: Teichmuller iteration did not converge");
}

std::vector<std::uint32_t> WittRing::teichmuller_digits(Elem w, std::size_t count) const {
    if (count > N_)
        throw std::invalid_argument("WittRing: requested digits exceed precision");
    std::vector<std::uint32_t> out(count);
    for (std::size_t j = 0; j < count; ++j) {
        std::uint32_t d = residue(w);
        out[j] = d;
        w = sub(w, teichmuller(d));
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (w[i] % p_ != 0)
                throw internal_error("WittRing: inexact division in digit extraction");
            w[i] /= p_;
        }
    }
    return out;
}

WittRing::Elem WittRing::from_teichmuller_digits(const std::vector<std::uint32_t>& d) const {
    Elem acc = zero();
    std::uint64_t pj = 1;
    for (std::size_t j = 0; j < d.size() && j < N_; ++j) {
        acc = add(acc, mul_scalar(teichmuller(d[j]), pj));
        pj = j + 1 < N_ ? pj * p_ : pj;
    }
    return acc;
}

WittRing::Elem WittRing::frobenius(const Elem& a) const {
    auto digits = teichmuller_digits(a, N_);
    for (auto& d : digits)
        d = residue_.frobenius(d);
    return from_teichmuller_digits(digits);
}

}  // namespace stunted
