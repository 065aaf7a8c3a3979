#include "drinfeld/ore.hpp"

#include <stdexcept>

namespace drinfeld {

OrePoly::OrePoly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw std::invalid_argument("OrePoly requires a field context");
    for (const FieldElem& c : c_)
        if (!c.ctx() || !c.ctx()->same_field(*ctx_))
            throw std::invalid_argument("coefficient field mismatch");
    normalize();
}

OrePoly OrePoly::zero(FieldCtxPtr ctx) { return OrePoly(std::move(ctx)); }

OrePoly OrePoly::one(FieldCtxPtr ctx) {
    FieldElem c = ctx->one();
    return OrePoly(std::move(ctx), {std::move(c)});
}

OrePoly OrePoly::constant(const FieldElem& c) { return OrePoly(c.ctx(), {c}); }

OrePoly OrePoly::tau(FieldCtxPtr ctx, std::size_t k) {
    std::vector<FieldElem> v(k + 1, ctx->zero());
    v[k] = ctx->one();
    return OrePoly(std::move(ctx), std::move(v));
}

OrePoly OrePoly::monomial(const FieldElem& c, std::size_t k) {
    std::vector<FieldElem> v(k + 1, c.ctx()->zero());
    v[k] = c;
    return OrePoly(c.ctx(), std::move(v));
}

void OrePoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void OrePoly::check_same(const OrePoly& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same_field(*o.ctx_))
        throw std::invalid_argument("OrePoly field mismatch");
}

FieldElem OrePoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : ctx_->zero();
}

const FieldElem& OrePoly::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading coefficient of zero");
    return c_.back();
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
    check_same(o);
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return OrePoly(ctx_, std::move(r));
}

OrePoly OrePoly::operator-(const OrePoly& o) const {
    check_same(o);
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return OrePoly(ctx_, std::move(r));
}

OrePoly OrePoly::operator*(const OrePoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, ctx_->zero());
    // (a tau^i)(b tau^j) = a b^{q^i} tau^{i+j}; the Frobenius iterates of
    // each right-hand coefficient are shared across the i-loop
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        FieldElem twisted = o.c_[j];
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i > 0) twisted = frob_power(twisted, 1);
            if (c_[i].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * twisted;
        }
    }
    return OrePoly(ctx_, std::move(r));
}

OrePoly OrePoly::operator*(const FieldElem& c) const {
    std::vector<FieldElem> r(c_.size(), ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c * c_[i];
    return OrePoly(ctx_, std::move(r));
}

bool OrePoly::operator==(const OrePoly& o) const {
    check_same(o);
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<OrePoly, OrePoly> OrePoly::right_divmod(const OrePoly& f, const OrePoly& g) {
    f.check_same(g);
    if (g.is_zero()) throw std::invalid_argument("division by zero");
    const auto& ctx = f.ctx();
    OrePoly r = f;
    OrePoly quot = zero(ctx);
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - g.degree());
        // leading of (a tau^k) * g is a * lc(g)^{q^k}
        FieldElem a = r.leading() * frob_power(g.leading(), k).inverse();
        OrePoly term = monomial(a, k);
        quot = quot + term;
        r = r - term * g;
    }
    return {quot, r};
}

FieldElem OrePoly::apply(const FieldElem& x) const {
    if (!x.ctx()) throw std::invalid_argument("empty element");
    const bool same = x.ctx()->same_field(*ctx_);
    FieldElem acc = x.ctx()->zero();
    FieldElem y = x;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j > 0) y = frob_power(y, 1);
        if (c_[j].is_zero()) continue;
        FieldElem c = same ? x.ctx()->element(c_[j].coords()) : embed(c_[j], x.ctx());
        acc = acc + c * y;
    }
    return acc;
}

OrePoly OrePoly::shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (!c_[i].is_zero()) throw std::invalid_argument("low coefficients are not zero");
    if (c_.size() <= k) return zero(ctx_);
    std::vector<FieldElem> r(c_.begin() + k, c_.end());
    return OrePoly(ctx_, std::move(r));
}

int height(const OrePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("height of zero polynomial");
    int h = 0;
    while (f.coeffs()[h].is_zero()) ++h;
    return h;
}

}  // namespace drinfeld
