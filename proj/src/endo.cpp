#include "stunted/endo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stunted {

struct EndoRing::Impl {
    std::uint32_t p, n, M, N;
    WittRing W;

    Impl(std::uint32_t p_, std::uint32_t n_, std::uint32_t M_)
        : p(p_), n(n_), M(M_), N((M_ + n_ - 1) / n_ + 1), W(p_, n_, N) {}

    // Regroup digits into Witt coefficients w_r = sum_j tau(a_{r+jn}) p^j.
    std::vector<WittRing::Elem> to_witt(const std::vector<std::uint32_t>& digits) const {
        std::vector<WittRing::Elem> w(n, W.zero());
        for (std::uint32_t r = 0; r < n; ++r) {
            std::vector<std::uint32_t> d;
            for (std::uint32_t i = r; i < M; i += n)
                d.push_back(digits[i]);
            w[r] = W.from_teichmuller_digits(d);
        }
        return w;
    }

    std::vector<std::uint32_t> to_digits(const std::vector<WittRing::Elem>& w) const {
        std::vector<std::uint32_t> digits(M, 0);
        for (std::uint32_t r = 0; r < n; ++r) {
            std::size_t count = (M - r + n - 1) / n;
            auto d = W.teichmuller_digits(w[r], count);
            for (std::size_t j = 0; j < d.size(); ++j)
                digits[r + j * n] = d[j];
        }
        return digits;
    }
};

EndoRing::EndoRing(std::uint32_t p, std::uint32_t n, std::uint32_t t_precision) {
    if (!is_prime(p))
        throw std::invalid_argument("EndoRing: p must be prime");
    if (n == 0)
        throw std::invalid_argument("EndoRing: height must be positive");
    if (t_precision == 0)
        throw std::invalid_argument("EndoRing: T-precision must be positive");
    impl_ = std::make_shared<const Impl>(p, n, t_precision);
}

std::uint32_t EndoRing::p() const { return impl_->p; }
std::uint32_t EndoRing::n() const { return impl_->n; }
std::uint32_t EndoRing::t_precision() const { return impl_->M; }
const WittRing& EndoRing::witt() const { return impl_->W; }
const ExtField& EndoRing::residue_field() const { return impl_->W.residue_field(); }

bool EndoRing::same_ring(const EndoRing& o) const {
    return impl_->p == o.impl_->p && impl_->n == o.impl_->n && impl_->M == o.impl_->M;
}

EndoElement EndoRing::zero() const {
    return EndoElement(*this, std::vector<std::uint32_t>(impl_->M, 0));
}

EndoElement EndoRing::one() const {
    std::vector<std::uint32_t> d(impl_->M, 0);
    d[0] = 1;
    return EndoElement(*this, std::move(d));
}

EndoElement EndoRing::t_power(std::uint32_t j) const {
    if (j >= impl_->M)
        return zero();
    std::vector<std::uint32_t> d(impl_->M, 0);
    d[j] = 1;
    return EndoElement(*this, std::move(d));
}

EndoElement EndoRing::from_int(long long v) const {
    std::vector<WittRing::Elem> w(impl_->n, impl_->W.zero());
    w[0] = impl_->W.from_int(v);
    return EndoElement(*this, impl_->to_digits(w));
}

EndoElement EndoRing::from_digits(std::vector<std::uint32_t> digits) const {
    digits.resize(impl_->M, 0);
    const std::uint64_t q = residue_field().order();
    for (auto d : digits)
        if (d >= q)
            throw std::invalid_argument("EndoRing: digit outside the residue field");
    return EndoElement(*this, std::move(digits));
}

EndoElement::EndoElement(EndoRing ring, std::vector<std::uint32_t> digits)
    : ring_(std::move(ring)), digits_(std::move(digits)) {}

bool EndoElement::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(),
                       [](std::uint32_t d) { return d == 0; });
}

bool EndoElement::operator==(const EndoElement& o) const {
    return ring_.same_ring(o.ring_) && digits_ == o.digits_;
}

namespace {

void require_same_ring(const EndoElement& x, const EndoElement& y, const char* op) {
    if (!x.ring().same_ring(y.ring()))
        throw std::invalid_argument(std::string(op) + ": mismatched ring parameters");
}

}  // namespace

EndoElement endo_mul(const EndoElement& x, const EndoElement& y) {
    require_same_ring(x, y, "endo_mul");
    const auto& impl = *x.ring().impl_;
    const auto& W = impl.W;
    const std::uint32_t n = impl.n;

    auto xw = impl.to_witt(x.digits());
    auto yw = impl.to_witt(y.digits());

    // phi_pow[r][s] = phi^r(y_s); T^r w = phi^r(w) T^r.
    std::vector<std::vector<WittRing::Elem>> phi_pow(n);
    phi_pow[0] = yw;
    for (std::uint32_t r = 1; r < n; ++r) {
        phi_pow[r].resize(n);
        for (std::uint32_t s = 0; s < n; ++s)
            phi_pow[r][s] = W.frobenius(phi_pow[r - 1][s]);
    }

    std::vector<WittRing::Elem> acc(n, W.zero());
    for (std::uint32_t r = 0; r < n; ++r) {
        if (W.is_zero(xw[r]))
            continue;
        for (std::uint32_t s = 0; s < n; ++s) {
            WittRing::Elem term = W.mul(xw[r], phi_pow[r][s]);
            std::uint32_t t = (r + s) % n;
            if (r + s >= n)
                term = W.mul_scalar(term, impl.p);  // T^n = p, u = 1
            acc[t] = W.add(acc[t], term);
        }
    }
    return EndoElement(x.ring(), impl.to_digits(acc));
}

EndoElement endo_add(const EndoElement& x, const EndoElement& y) {
    require_same_ring(x, y, "endo_add");
    const auto& impl = *x.ring().impl_;
    auto xw = impl.to_witt(x.digits());
    auto yw = impl.to_witt(y.digits());
    for (std::uint32_t r = 0; r < impl.n; ++r)
        xw[r] = impl.W.add(xw[r], yw[r]);
    return EndoElement(x.ring(), impl.to_digits(xw));
}

EndoElement endo_sub(const EndoElement& x, const EndoElement& y) {
    require_same_ring(x, y, "endo_sub");
    const auto& impl = *x.ring().impl_;
    auto xw = impl.to_witt(x.digits());
    auto yw = impl.to_witt(y.digits());
    for (std::uint32_t r = 0; r < impl.n; ++r)
        xw[r] = impl.W.sub(xw[r], yw[r]);
    return EndoElement(x.ring(), impl.to_digits(xw));
}

EndoElement endo_pow(const EndoElement& x, std::uint32_t e) {
    EndoElement r = x.ring().one();
    EndoElement b = x;
    while (e) {
        if (e & 1)
            r = endo_mul(r, b);
        if (e >>= 1)
            b = endo_mul(b, b);
    }
    return r;
}

TValuation t_valuation(const EndoElement& x) {
    const auto& d = x.digits();
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] != 0)
            return TValuation{static_cast<long long>(j), x.ring().n(), false};
    return TValuation{0, x.ring().n(), true};
}

namespace {

// Index of the first nonzero digit of zeta^p - 1, or M if none.
std::uint32_t order_defect(const EndoRing& ring, const EndoElement& zeta, std::uint32_t p) {
    EndoElement f = endo_sub(endo_pow(zeta, p), ring.one());
    const auto& d = f.digits();
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] != 0)
            return static_cast<std::uint32_t>(j);
    return ring.t_precision();
}

// Digit-by-digit successive approximation with backtracking: after placing
// the digit at position i, zeta^p - 1 must vanish through T-degree n + i.
bool solve_digits(const EndoRing& ring, std::vector<std::uint32_t>& digits,
                  std::uint32_t i, std::uint32_t p, std::uint32_t k) {
    const std::uint32_t M = ring.t_precision();
    const std::uint32_t n = ring.n();
    if (i == M)
        return true;
    const std::uint64_t q = ring.residue_field().order();
    const std::uint32_t target = std::min(n + i + 1, M);
    for (std::uint64_t a = (i == k ? 1 : 0); a < q; ++a) {
        digits[i] = static_cast<std::uint32_t>(a);
        EndoElement zeta = ring.from_digits(digits);
        if (order_defect(ring, zeta, p) >= target && solve_digits(ring, digits, i + 1, p, k))
            return true;
    }
    digits[i] = 0;
    return false;
}

}  // namespace

EndoElement find_order_p_unit(std::uint32_t p, std::uint32_t k, std::uint32_t t_precision) {
    if (!is_prime(p))
        throw std::invalid_argument("find_order_p_unit: p must be prime");
    if (k == 0)
        throw std::invalid_argument("find_order_p_unit: k must be positive");
    if (t_precision <= k)
        throw std::invalid_argument("find_order_p_unit: T-precision must exceed k");
    const std::uint32_t n = k * (p - 1);
    double field_size = std::pow(double(p), double(n));
    if (field_size > 100000.0)
        throw std::invalid_argument(
            "find_order_p_unit: residue field too large for the exhaustive digit search");

    // Solve at internal precision M + n so every returned digit is pinned by
    // a visible vanishing condition, then truncate back to M.
    EndoRing wide(p, n, t_precision + n);
    std::vector<std::uint32_t> digits(wide.t_precision(), 0);
    digits[0] = 1;
    if (!solve_digits(wide, digits, k, p, k))
        throw internal_error("find_order_p_unit: no digit sequence satisfies zeta^p = 1");

    EndoRing ring(p, n, t_precision);
    digits.resize(t_precision);
    EndoElement zeta = ring.from_digits(digits);
    if (order_defect(ring, zeta, p) < t_precision)
        throw internal_error("find_order_p_unit: postcondition zeta^p = 1 failed");
    return zeta;
}

std::vector<std::uint32_t> tbar_coefficients(const EndoElement& zeta) {
    if (!zeta.is_unit())
        throw std::invalid_argument("tbar_coefficients: element is not a unit");
    EndoElement c = endo_sub(zeta, zeta.ring().one());
    const auto& d = c.digits();
    return std::vector<std::uint32_t>(d.begin() + 1, d.end());
}

TkLemmaReport verify_tk_lemma(std::uint32_t p, std::uint32_t k, std::uint32_t t_precision) {
    if (t_precision <= k)
        throw std::invalid_argument("verify_tk_lemma: T-precision must exceed k");
    EndoElement zeta = find_order_p_unit(p, k, t_precision);
    const EndoRing& ring = zeta.ring();

    TkLemmaReport rep{};
    rep.p = p;
    rep.k = k;
    rep.n = ring.n();
    rep.t_precision = t_precision;
    rep.tbar_digits = tbar_coefficients(zeta);

    EndoElement c = endo_sub(zeta, ring.one());
    rep.v_zeta_minus_1 = t_valuation(c);
    rep.zeta_has_order_p =
        endo_pow(zeta, p) == ring.one() && !(zeta == ring.one());
    rep.digits_below_k_vanish = true;
    for (std::uint32_t i = 1; i < k; ++i)
        if (rep.tbar_digits[i - 1] != 0)
            rep.digits_below_k_vanish = false;
    rep.digit_k_is_unit = rep.tbar_digits[k - 1] != 0;
    rep.valuation_is_k_over_n =
        !rep.v_zeta_minus_1.infinite && rep.v_zeta_minus_1.num == static_cast<long long>(k);
    return rep;
}

}  // namespace stunted
