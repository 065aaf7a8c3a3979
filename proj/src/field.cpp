#include "drinfeld/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

bool vec_is_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar c) { return c == 0; });
}

}  // namespace

FieldCtx::FieldCtx(Key, std::shared_ptr<const BaseField> fq, FieldCtxPtr base,
                   std::vector<std::vector<Scalar>> defining)
    : fq_(std::move(fq)), base_(std::move(base)), defining_(std::move(defining)) {
    ext_degree_ = static_cast<std::uint32_t>(defining_.size());
    degree_ = ext_degree_ * (base_ ? base_->degree_ : 1);
    size_ = 1;
    for (std::uint32_t i = 0; i < degree_; ++i) size_ *= fq_->q();
    signature_ = base_ ? base_->signature_
                       : "F" + std::to_string(fq_->p()) + "^" + std::to_string(fq_->s());
    signature_ += "|" + std::to_string(ext_degree_) + ":";
    for (const auto& c : defining_)
        for (Scalar v : c) signature_ += std::to_string(v) + ",";
}

FieldCtxPtr FieldCtx::make(std::uint32_t p, std::uint32_t s, std::uint32_t k,
                           std::uint64_t size_cap) {
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    auto fq = base_field(p, s);
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        size *= fq->q();
        if (size > size_cap) throw CapExceeded("field size exceeds configured cap");
    }
    static std::mutex mtx;
    static std::map<std::string, FieldCtxPtr> cache;
    std::string key = std::to_string(p) + ":" + std::to_string(s) + ":" + std::to_string(k);
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    APoly g = (k == 1) ? APoly::t(fq) : lex_min_irreducible(fq, k);
    std::vector<std::vector<Scalar>> defining(k);
    for (std::uint32_t j = 0; j < k; ++j) defining[j] = {g.coeff(j)};
    auto ctx = std::make_shared<const FieldCtx>(Key{}, fq, nullptr, std::move(defining));
    cache.emplace(std::move(key), ctx);
    return ctx;
}

// --- dense polynomials with FieldElem coefficients, used only for the
// --- deterministic defining-polynomial search of tower extensions

namespace {

using FPoly = std::vector<FieldElem>;

void fp_normalize(FPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    const auto& ctx = a[0].ctx();
    FPoly r(a.size() + b.size() - 1, ctx->zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    fp_normalize(r);
    return r;
}

FPoly fp_sub(const FPoly& a, const FPoly& b, const FieldCtxPtr& ctx) {
    FPoly r(std::max(a.size(), b.size()), ctx->zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        FieldElem x = i < a.size() ? a[i] : ctx->zero();
        FieldElem y = i < b.size() ? b[i] : ctx->zero();
        r[i] = x - y;
    }
    fp_normalize(r);
    return r;
}

FPoly fp_mod(const FPoly& f, const FPoly& g, const FieldCtxPtr&) {
    FPoly r = f;
    fp_normalize(r);
    FieldElem lg_inv = g.back().inverse();
    while (r.size() >= g.size()) {
        std::size_t k = r.size() - g.size();
        FieldElem a = r.back() * lg_inv;
        for (std::size_t j = 0; j < g.size(); ++j) r[k + j] = r[k + j] - a * g[j];
        fp_normalize(r);
        if (r.empty()) break;
    }
    return r;
}

FPoly fp_powmod(FPoly base, std::uint64_t e, const FPoly& mod, const FieldCtxPtr& ctx) {
    FPoly res{ctx->one()};
    base = fp_mod(base, mod, ctx);
    while (e != 0) {
        if (e & 1) res = fp_mod(fp_mul(res, base), mod, ctx);
        base = fp_mod(fp_mul(base, base), mod, ctx);
        e >>= 1;
    }
    return res;
}

FPoly fp_gcd(FPoly a, FPoly b, const FieldCtxPtr& ctx) {
    fp_normalize(a);
    fp_normalize(b);
    while (!b.empty()) {
        FPoly r = fp_mod(a, b, ctx);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool fp_irreducible(const FPoly& f, const FieldCtxPtr& ctx) {
    if (f.size() < 2) return false;
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    const std::uint64_t big_q = ctx->size();
    FPoly x{ctx->zero(), ctx->one()};
    std::vector<FPoly> frob(k + 1);
    frob[0] = fp_mod(x, f, ctx);
    for (std::size_t i = 1; i <= k; ++i) frob[i] = fp_powmod(frob[i - 1], big_q, f, ctx);
    if (!fp_sub(frob[k], frob[0], ctx).empty()) return false;
    for (std::size_t l = 2; l <= k; ++l) {
        if (k % l != 0 || !is_prime(l)) continue;
        FPoly g = fp_gcd(fp_sub(frob[k / l], frob[0], ctx), f, ctx);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldCtxPtr FieldCtx::extend(const FieldCtxPtr& base, std::uint32_t k, std::uint64_t size_cap) {
    if (!base) throw std::invalid_argument("null base field");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (size > size_cap / base->size()) throw CapExceeded("field size exceeds configured cap");
        size *= base->size();
    }
    static std::mutex mtx;
    static std::map<std::string, FieldCtxPtr> cache;
    std::string key = base->signature() + "#" + std::to_string(k);
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<Scalar>> defining;
    if (k == 1) {
        defining.push_back(std::vector<Scalar>(base->degree(), 0));
    } else {
        // lex-smallest monic irreducible of degree k over the base; the
        // constant-term-zero block is divisible by Y, so the odometer starts
        // at coefficient ranks (1, 0, ..., 0)
        const std::uint64_t bq = base->size();
        std::vector<std::uint64_t> ranks(k, 0);
        ranks[0] = 1;
        while (true) {
            FPoly f(k + 1, base->zero());
            f[k] = base->one();
            for (std::uint32_t j = 0; j < k; ++j) f[j] = base->element_at(ranks[j]);
            if (fp_irreducible(f, base)) {
                for (std::uint32_t j = 0; j < k; ++j) defining.push_back(f[j].coords());
                break;
            }
            std::uint32_t pos = k;
            bool wrapped = false;
            while (pos-- > 0) {
                if (++ranks[pos] < bq) break;
                ranks[pos] = 0;
                if (pos == 0) wrapped = true;
            }
            if (wrapped) throw ConsistencyError("no irreducible polynomial over extension");
        }
    }
    auto ctx = std::make_shared<const FieldCtx>(Key{}, base->fq(), base, std::move(defining));
    cache.emplace(std::move(key), ctx);
    return ctx;
}

std::vector<Scalar> FieldCtx::mul_vec(const std::vector<Scalar>& a,
                                      const std::vector<Scalar>& b) const {
    const BaseField& F = *fq_;
    const std::uint32_t k = ext_degree_;
    const std::uint32_t bd = base_ ? base_->degree_ : 1;
    auto base_mul = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        return base_ ? base_->mul_vec(x, y) : std::vector<Scalar>{F.mul(x[0], y[0])};
    };
    if (k == 1) return base_mul(a, b);
    std::vector<std::vector<Scalar>> prod(2 * k - 1, std::vector<Scalar>(bd, 0));
    std::vector<Scalar> ai(bd), bj(bd);
    for (std::uint32_t i = 0; i < k; ++i) {
        std::copy_n(a.begin() + i * bd, bd, ai.begin());
        if (vec_is_zero(ai)) continue;
        for (std::uint32_t j = 0; j < k; ++j) {
            std::copy_n(b.begin() + j * bd, bd, bj.begin());
            if (vec_is_zero(bj)) continue;
            std::vector<Scalar> t = base_mul(ai, bj);
            auto& dst = prod[i + j];
            for (std::uint32_t w = 0; w < bd; ++w) dst[w] = F.add(dst[w], t[w]);
        }
    }
    for (std::uint32_t t = 2 * k - 2; t >= k; --t) {
        if (!vec_is_zero(prod[t])) {
            for (std::uint32_t j = 0; j < k; ++j) {
                if (vec_is_zero(defining_[j])) continue;
                std::vector<Scalar> s = base_mul(prod[t], defining_[j]);
                auto& dst = prod[t - k + j];
                for (std::uint32_t w = 0; w < bd; ++w) dst[w] = F.sub(dst[w], s[w]);
            }
        }
        if (t == k) break;
    }
    std::vector<Scalar> out(std::size_t(k) * bd);
    for (std::uint32_t i = 0; i < k; ++i) std::copy_n(prod[i].begin(), bd, out.begin() + i * bd);
    return out;
}

FieldElem FieldCtx::zero() const {
    return FieldElem(shared_from_this(), std::vector<Scalar>(degree_, 0));
}

FieldElem FieldCtx::one() const { return from_scalar(1); }

FieldElem FieldCtx::from_scalar(Scalar c) const {
    if (c >= fq_->q()) throw std::invalid_argument("scalar out of range");
    std::vector<Scalar> v(degree_, 0);
    v[0] = c;
    return FieldElem(shared_from_this(), std::move(v));
}

FieldElem FieldCtx::from_int(std::int64_t v) const { return from_scalar(fq_->from_int(v)); }

FieldElem FieldCtx::gen() const {
    const std::uint32_t bd = base_ ? base_->degree_ : 1;
    if (ext_degree_ == 1) {
        // quotient by a monic linear Y + c sends the variable to -c
        std::vector<Scalar> v(degree_, 0);
        for (std::uint32_t w = 0; w < bd; ++w) v[w] = fq_->neg(defining_[0][w]);
        return FieldElem(shared_from_this(), std::move(v));
    }
    std::vector<Scalar> v(degree_, 0);
    v[bd] = 1;
    return FieldElem(shared_from_this(), std::move(v));
}

FieldElem FieldCtx::element(std::vector<Scalar> flat_coords) const {
    if (flat_coords.size() != degree_) throw std::invalid_argument("wrong coordinate length");
    for (Scalar c : flat_coords)
        if (c >= fq_->q()) throw std::invalid_argument("coordinate out of range");
    return FieldElem(shared_from_this(), std::move(flat_coords));
}

FieldElem FieldCtx::element_at(std::uint64_t idx) const {
    if (idx >= size_) throw std::invalid_argument("element index out of range");
    const Scalar q = fq_->q();
    std::vector<Scalar> v(degree_);
    for (std::uint32_t j = degree_; j-- > 0;) {
        v[j] = fq_->label_at_lex(static_cast<Scalar>(idx % q));
        idx /= q;
    }
    return FieldElem(shared_from_this(), std::move(v));
}

bool FieldElem::is_zero() const { return vec_is_zero(coords_); }

std::optional<Scalar> FieldElem::as_scalar() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return std::nullopt;
    return coords_.empty() ? std::nullopt : std::optional<Scalar>(coords_[0]);
}

namespace {
void check_ctx(const FieldElem& a, const FieldElem& b) {
    if (!a.ctx() || !b.ctx() || !a.ctx()->same_field(*b.ctx()))
        throw std::invalid_argument("field mismatch");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_ctx(*this, o);
    std::vector<Scalar> v(coords_.size());
    const BaseField& F = *ctx_->fq();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(coords_[i], o.coords_[i]);
    return FieldElem(ctx_, std::move(v));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_ctx(*this, o);
    std::vector<Scalar> v(coords_.size());
    const BaseField& F = *ctx_->fq();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(coords_[i], o.coords_[i]);
    return FieldElem(ctx_, std::move(v));
}

FieldElem FieldElem::operator-() const {
    std::vector<Scalar> v(coords_.size());
    const BaseField& F = *ctx_->fq();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.neg(coords_[i]);
    return FieldElem(ctx_, std::move(v));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_ctx(*this, o);
    return FieldElem(ctx_, ctx_->mul_vec(coords_, o.coords_));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem res = ctx_->one();
    FieldElem base = *this;
    while (e != 0) {
        if (e & 1) res = res * base;
        base = base * base;
        e >>= 1;
    }
    return res;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return pow(ctx_->size() - 2);
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_ctx(*this, o);
    return coords_ == o.coords_;
}

bool FieldElem::lex_less(const FieldElem& a, const FieldElem& b) {
    check_ctx(a, b);
    const BaseField& F = *a.ctx()->fq();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] != b.coords_[i]) return F.lex_less(a.coords_[i], b.coords_[i]);
    }
    return false;
}

FieldElem frob_power(const FieldElem& x, std::uint64_t k) {
    if (!x.ctx()) throw std::invalid_argument("empty element");
    k %= x.ctx()->degree();
    if (k == 0) return x;
    std::uint64_t e = 1;
    for (std::uint64_t i = 0; i < k; ++i) e *= x.ctx()->fq()->q();
    return x.pow(e);
}

APoly min_poly(const FieldElem& x) {
    if (!x.ctx()) throw std::invalid_argument("empty element");
    const auto& ctx = x.ctx();
    const BaseField& F = *ctx->fq();
    const std::uint32_t n = ctx->degree();
    // rows are reduced F_q-coordinate vectors of powers of x, each carrying
    // the combination of powers it came from
    struct Row {
        std::vector<Scalar> v;
        std::vector<Scalar> combo;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    FieldElem power = ctx->one();
    for (std::uint32_t j = 0; j <= n; ++j) {
        std::vector<Scalar> v = power.coords();
        std::vector<Scalar> combo(j + 1, 0);
        combo[j] = 1;
        for (const Row& r : rows) {
            Scalar f = v[r.pivot];
            if (f == 0) continue;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(f, r.v[i]));
            for (std::size_t i = 0; i < r.combo.size(); ++i)
                combo[i] = F.sub(combo[i], F.mul(f, r.combo[i]));
        }
        if (vec_is_zero(v)) return APoly(ctx->fq(), std::move(combo));
        std::size_t pivot = 0;
        while (v[pivot] == 0) ++pivot;
        Scalar inv = F.inv(v[pivot]);
        for (auto& c : v) c = F.mul(c, inv);
        for (auto& c : combo) c = F.mul(c, inv);
        rows.push_back(Row{std::move(v), std::move(combo), pivot});
        power = power * x;
    }
    throw ConsistencyError("no minimal polynomial found");
}

FieldElem eval(const APoly& a, const FieldElem& x) {
    if (!x.ctx()) throw std::invalid_argument("empty element");
    const auto& ctx = x.ctx();
    if (*a.field() != *ctx->fq()) throw std::invalid_argument("field mismatch");
    FieldElem acc = ctx->zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        acc = acc * x + ctx->from_scalar(a.coeffs()[i]);
    return acc;
}

FieldElem embed(const FieldElem& x, const FieldCtxPtr& target) {
    const FieldCtxPtr& src = x.ctx();
    if (!src || !target) throw std::invalid_argument("empty field context");
    if (src->same_field(*target)) return target->element(x.coords());
    if (*src->fq() != *target->fq()) throw std::invalid_argument("incompatible base fields");
    if (target->degree() % src->degree() != 0)
        throw std::invalid_argument("incompatible degrees");
    if (src->base())
        throw std::invalid_argument("embedding from a tower level is not supported");

    const std::uint32_t n0 = src->degree();
    // target continuing the source chain: the roots of the source defining
    // polynomial are the Frobenius conjugates of the lifted generator, so the
    // smallest root is found without scanning
    for (FieldCtxPtr anc = target; anc; anc = anc->base()) {
        if (anc->same_field(*src)) {
            FieldElem best = src->gen();
            std::uint32_t best_i = 0;
            FieldElem cur = best;
            for (std::uint32_t i = 1; i < n0; ++i) {
                cur = frob_power(cur, 1);
                if (FieldElem::lex_less(cur, best)) {
                    best = cur;
                    best_i = i;
                }
            }
            FieldElem y = frob_power(x, best_i);
            std::vector<Scalar> flat(target->degree(), 0);
            std::copy(y.coords().begin(), y.coords().end(), flat.begin());
            return target->element(std::move(flat));
        }
    }

    // unrelated target: scan for the smallest root of the source defining
    // polynomial in element lex order
    if (target->size() > (1ull << 20)) throw CapExceeded("embedding root scan cap exceeded");
    std::vector<Scalar> g(n0 + 1, 0);
    g[n0] = 1;
    for (std::uint32_t j = 0; j < n0; ++j) g[j] = src->defining()[j][0];
    std::optional<FieldElem> root;
    for (std::uint64_t idx = 0; idx < target->size(); ++idx) {
        FieldElem r = target->element_at(idx);
        FieldElem acc = target->zero();
        for (std::uint32_t j = n0 + 1; j-- > 0;) acc = acc * r + target->from_scalar(g[j]);
        if (acc.is_zero()) {
            root = r;
            break;
        }
    }
    if (!root) throw ConsistencyError("no root of defining polynomial in target");
    FieldElem acc = target->zero();
    for (std::size_t j = x.coords().size(); j-- > 0;)
        acc = acc * (*root) + target->from_scalar(x.coords()[j]);
    return acc;
}

}  // namespace drinfeld
