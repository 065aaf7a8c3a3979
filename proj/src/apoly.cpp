#include "drinfeld/apoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

APoly::APoly(std::shared_ptr<const BaseField> fq, std::vector<Scalar> coeffs)
    : fq_(std::move(fq)), c_(std::move(coeffs)) {
    if (!fq_) throw std::invalid_argument("APoly requires a field");
    for (Scalar c : c_)
        if (c >= fq_->q()) throw std::invalid_argument("coefficient out of range");
    normalize();
}

APoly APoly::zero(std::shared_ptr<const BaseField> fq) { return APoly(std::move(fq)); }
APoly APoly::one(std::shared_ptr<const BaseField> fq) { return APoly(std::move(fq), {1}); }
APoly APoly::t(std::shared_ptr<const BaseField> fq) { return APoly(std::move(fq), {0, 1}); }

APoly APoly::constant(std::shared_ptr<const BaseField> fq, Scalar c) {
    return APoly(std::move(fq), {c});
}

APoly APoly::monomial(std::shared_ptr<const BaseField> fq, Scalar c, std::size_t deg) {
    std::vector<Scalar> v(deg + 1, 0);
    v[deg] = c;
    return APoly(std::move(fq), std::move(v));
}

APoly APoly::from_int(std::shared_ptr<const BaseField> fq, std::int64_t v) {
    Scalar c = fq->from_int(v);
    return APoly(std::move(fq), {c});
}

void APoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void APoly::check_same(const APoly& o) const {
    if (!fq_ || !o.fq_ || *fq_ != *o.fq_) throw std::invalid_argument("APoly field mismatch");
}

APoly APoly::operator+(const APoly& o) const {
    check_same(o);
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fq_->add(coeff(i), o.coeff(i));
    return APoly(fq_, std::move(r));
}

APoly APoly::operator-(const APoly& o) const {
    check_same(o);
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fq_->sub(coeff(i), o.coeff(i));
    return APoly(fq_, std::move(r));
}

APoly APoly::operator-() const {
    std::vector<Scalar> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = fq_->neg(c_[i]);
    return APoly(fq_, std::move(r));
}

APoly APoly::operator*(const APoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return zero(fq_);
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = fq_->add(r[i + j], fq_->mul(c_[i], o.c_[j]));
    }
    return APoly(fq_, std::move(r));
}

APoly APoly::operator*(Scalar c) const {
    std::vector<Scalar> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = fq_->mul(c_[i], c);
    return APoly(fq_, std::move(r));
}

std::pair<APoly, APoly> APoly::divmod(const APoly& f, const APoly& g) {
    f.check_same(g);
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const auto& fq = f.fq_;
    APoly r = f;
    std::vector<Scalar> q(f.c_.size() > g.c_.size() ? f.c_.size() - g.c_.size() + 1 : 1, 0);
    Scalar lg_inv = fq->inv(g.leading());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - g.degree());
        Scalar a = fq->mul(r.leading(), lg_inv);
        q[k] = a;
        // r -= a T^k g, done in place
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            r.c_[k + j] = fq->sub(r.c_[k + j], fq->mul(a, g.c_[j]));
        r.normalize();
    }
    return {APoly(fq, std::move(q)), r};
}

APoly APoly::operator%(const APoly& o) const { return divmod(*this, o).second; }
APoly APoly::operator/(const APoly& o) const { return divmod(*this, o).first; }

APoly APoly::gcd(const APoly& a, const APoly& b) {
    a.check_same(b);
    APoly x = a, y = b;
    while (!y.is_zero()) {
        APoly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

APoly APoly::lcm(const APoly& a, const APoly& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

APoly APoly::monic() const {
    if (is_zero()) return *this;
    return *this * fq_->inv(leading());
}

APoly APoly::pow(std::uint64_t e) const {
    APoly res = one(fq_);
    APoly base = *this;
    while (e != 0) {
        if (e & 1) res = res * base;
        base = base * base;
        e >>= 1;
    }
    return res;
}

bool APoly::divides(const APoly& other) const {
    if (is_zero()) return other.is_zero();
    return (other % *this).is_zero();
}

Scalar APoly::eval_scalar(Scalar x) const {
    Scalar acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = fq_->add(fq_->mul(acc, x), c_[i]);
    return acc;
}

bool APoly::is_irreducible() const {
    int d = degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // f irreducible of degree d over F_q iff T^{q^d} = T mod f and
    // gcd(T^{q^{d/l}} - T, f) = 1 for every prime l | d. Frobenius powers are
    // iterated with exponent q per step so no large exponent arises.
    const auto& fq = fq_;
    const std::uint64_t q = fq->q();
    APoly f = monic();
    APoly x = t(fq) % f;
    std::vector<APoly> frob(static_cast<std::size_t>(d) + 1, zero(fq));
    frob[0] = x;
    for (int i = 1; i <= d; ++i) {
        // frob[i] = frob[i-1]^q mod f
        APoly b = frob[i - 1], acc = one(fq);
        std::uint64_t e = q;
        while (e != 0) {
            if (e & 1) acc = (acc * b) % f;
            b = (b * b) % f;
            e >>= 1;
        }
        frob[i] = acc;
    }
    if (frob[d] != x) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0 || !is_prime(static_cast<std::uint64_t>(l))) continue;
        APoly g = gcd(frob[d / l] - x, f);
        if (!g.is_one()) return false;
    }
    return true;
}

bool APoly::operator==(const APoly& o) const {
    check_same(o);
    return c_ == o.c_;
}

std::string APoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
            out += (i == 1) ? "T" : "T^" + std::to_string(i);
        }
    }
    return out;
}

bool poly_less(const APoly& a, const APoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& fq = *a.field();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] != b.coeffs()[i]) return fq.lex_less(a.coeffs()[i], b.coeffs()[i]);
    }
    return false;
}

std::vector<APoly> monic_polys(const std::shared_ptr<const BaseField>& fq, unsigned degree) {
    const Scalar q = fq->q();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < degree; ++i) total *= q;
    std::vector<APoly> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Scalar> c(degree + 1, 0);
        c[degree] = 1;
        std::uint64_t v = idx;
        // idx digits, most significant first, give c_0, c_1, ... in lex order
        for (unsigned j = degree; j-- > 0;) {
            c[j] = fq->label_at_lex(static_cast<Scalar>(v % q));
            v /= q;
        }
        out.emplace_back(fq, std::move(c));
    }
    return out;
}

std::vector<APoly> monic_irreducibles(const std::shared_ptr<const BaseField>& fq, unsigned degree) {
    std::vector<APoly> out;
    for (const APoly& f : monic_polys(fq, degree))
        if (f.is_irreducible()) out.push_back(f);
    return out;
}

APoly lex_min_irreducible(const std::shared_ptr<const BaseField>& fq, unsigned degree) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    if (degree == 1) return APoly::t(fq);
    const Scalar q = fq->q();
    // Candidates with constant term 0 are divisible by T, so the odometer
    // starts at coefficient sequence (1, 0, ..., 0).
    std::vector<Scalar> ranks(degree, 0);
    ranks[0] = 1;
    while (true) {
        std::vector<Scalar> c(degree + 1, 0);
        c[degree] = 1;
        for (unsigned j = 0; j < degree; ++j) c[j] = fq->label_at_lex(ranks[j]);
        APoly f(fq, std::move(c));
        if (f.is_irreducible()) return f;
        unsigned pos = degree;
        while (pos-- > 0) {
            if (++ranks[pos] < q) break;
            ranks[pos] = 0;
            if (pos == 0) throw ConsistencyError("no irreducible polynomial found");
        }
    }
}

std::vector<APoly> prime_factors(const APoly& a) {
    if (a.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
    const auto& fq = a.field();
    std::vector<APoly> out;
    APoly rest = a.monic();
    for (unsigned d = 1; rest.degree() > 0 && 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
        for (const APoly& p : monic_irreducibles(fq, d)) {
            if (p.divides(rest)) {
                out.push_back(p);
                while (p.divides(rest)) rest = rest / p;
            }
            if (2 * d > static_cast<unsigned>(rest.degree())) break;
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<APoly> monic_divisors(const APoly& a) {
    if (a.is_zero()) throw std::invalid_argument("divisors of the zero polynomial");
    const auto& fq = a.field();
    APoly rest = a.monic();
    std::vector<std::pair<APoly, unsigned>> fact;
    for (const APoly& p : prime_factors(a)) {
        unsigned e = 0;
        while (p.divides(rest)) {
            rest = rest / p;
            ++e;
        }
        fact.emplace_back(p, e);
    }
    std::vector<APoly> out{APoly::one(fq)};
    for (const auto& [p, e] : fact) {
        std::vector<APoly> next;
        APoly pk = APoly::one(fq);
        for (unsigned i = 0; i <= e; ++i) {
            for (const APoly& d : out) next.push_back(d * pk);
            pk = pk * p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

}  // namespace drinfeld
