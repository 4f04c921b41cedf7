#include "stunted/fields.hpp"

#include <algorithm>
#include <stdexcept>

namespace stunted {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

long long ipow(std::uint32_t base, std::uint32_t exp) {
    long long r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > (1LL << 62) / std::max<long long>(base, 1))
            throw std::overflow_error("ipow: value exceeds 2^62");
        r *= base;
    }
    return r;
}

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(prime) +
                                    " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p == 0)
        throw std::invalid_argument("PrimeField: inverse of zero");
    return pow(a, p - 2);
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

// Remainder of a mod b over F_p, b monic.
Poly poly_rem(Poly a, const Poly& b, const PrimeField& f) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

// A monic polynomial of degree >= 2 is reducible over F_p iff it has a
// monic factor of degree <= deg/2; trial division is exhaustive and cheap
// at the sizes used here.
bool poly_irreducible(const Poly& f, const PrimeField& fp) {
    const std::size_t m = f.size() - 1;
    if (m == 1)
        return true;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= fp.p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t v = t;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % fp.p);
                v /= fp.p;
            }
            if (poly_rem(f, g, fp).empty())
                return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

}  // namespace

ExtField::ExtField(std::uint32_t p, std::uint32_t m) : base_(p), m_(m) {
    if (m == 0)
        throw std::invalid_argument("ExtField: extension degree must be positive");
    q_ = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q_ > (1ULL << 31) / p)
            throw std::invalid_argument("ExtField: p^m too large for dense encoding");
        q_ *= p;
    }

    // Smallest monic irreducible x^m + c_{m-1} x^{m-1} + ... + c_0, ordered by
    // the base-p value of (c_0, ..., c_{m-1}).
    for (std::uint64_t t = 0;; ++t) {
        if (t >= q_)
            throw internal_error("ExtField: no irreducible modulus found");
        Poly f(m + 1, 0);
        f[m] = 1;
        std::uint64_t v = t;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (poly_irreducible(f, base_)) {
            modulus_ = f;
            break;
        }
    }

    // x^(m+j) mod f for j = 0..m-2, used by mul().
    xpow_red_.resize(m >= 1 ? m - 1 : 0);
    Poly cur(modulus_.begin(), modulus_.end() - 1);  // x^m = -(c_0 + ... )
    for (auto& c : cur)
        c = base_.neg(c);
    for (std::uint32_t j = 0; j + 1 < m; ++j) {
        xpow_red_[j] = cur;
        // multiply by x and reduce
        Poly nxt(m, 0);
        for (std::uint32_t i = 0; i + 1 < m; ++i)
            nxt[i + 1] = cur[i];
        std::uint32_t top = cur[m - 1];
        if (top != 0)
            for (std::uint32_t i = 0; i < m; ++i)
                nxt[i] = base_.sub(nxt[i], base_.mul(top, modulus_[i]));
        cur = nxt;
    }

    // Smallest multiplicative generator.
    auto factors = prime_factors(q_ - 1);
    for (std::uint32_t a = 1; a < q_; ++a) {
        bool gen = true;
        for (auto ell : factors)
            if (pow(a, (q_ - 1) / ell) == one()) {
                gen = false;
                break;
            }
        if (gen) {
            generator_ = a;
            break;
        }
    }
    if (generator_ == 0 && q_ > 2)
        throw internal_error("ExtField: no multiplicative generator found");
    if (q_ == 2)
        generator_ = 1;
}

std::vector<std::uint32_t> ExtField::digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = a % base_.p;
        a /= base_.p;
    }
    return d;
}

std::uint32_t ExtField::from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint64_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        a = a * base_.p + d[i] % base_.p;
    return static_cast<std::uint32_t>(a);
}

std::uint32_t ExtField::add(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < m_; ++i)
        da[i] = base_.add(da[i], db[i]);
    return from_digits(da);
}

std::uint32_t ExtField::sub(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < m_; ++i)
        da[i] = base_.sub(da[i], db[i]);
    return from_digits(da);
}

std::uint32_t ExtField::neg(std::uint32_t a) const {
    auto da = digits(a);
    for (auto& c : da)
        c = base_.neg(c);
    return from_digits(da);
}

std::uint32_t ExtField::mul(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1)
        return base_.mul(a, b);
    auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> conv(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            conv[i + j] = base_.add(conv[i + j], base_.mul(da[i], db[j]));
    }
    std::vector<std::uint32_t> res(conv.begin(), conv.begin() + m_);
    for (std::uint32_t j = 0; j + 1 < m_; ++j) {
        std::uint32_t c = conv[m_ + j];
        if (c == 0)
            continue;
        for (std::uint32_t i = 0; i < m_; ++i)
            res[i] = base_.add(res[i], base_.mul(c, xpow_red_[j][i]));
    }
    return from_digits(res);
}

std::uint32_t ExtField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = one(), b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t ExtField::inv(std::uint32_t a) const {
    if (a == 0)
        throw std::invalid_argument("ExtField: inverse of zero");
    return pow(a, q_ - 2);
}

std::uint32_t ExtField::frobenius_iter(std::uint32_t a, std::uint32_t r) const {
    std::uint32_t x = a;
    for (std::uint32_t i = 0; i < r % m_; ++i)
        x = frobenius(x);
    return x;
}

std::uint64_t ExtField::element_order(std::uint32_t a) const {
    if (a == 0)
        throw std::invalid_argument("ExtField: order of zero");
    std::uint64_t ord = q_ - 1;
    for (auto ell : prime_factors(q_ - 1))
        while (ord % ell == 0 && pow(a, ord / ell) == one())
            ord /= ell;
    return ord;
}

ExtField make_ext_field(std::uint32_t p, std::uint32_t m) {
    return ExtField(p, m);
}

}  // namespace stunted
