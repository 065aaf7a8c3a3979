#include "drinfeld/fq.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "drinfeld/apoly.hpp"

namespace drinfeld {

namespace {
constexpr Scalar kMulTableLimit = 256;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

BaseField::BaseField(std::uint32_t p, std::uint32_t s) : p_(p), s_(s) {
    if (!is_prime(p)) throw std::invalid_argument("p not prime");
    if (s == 0) throw std::invalid_argument("s must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > (1ull << 24)) throw std::invalid_argument("base field size exceeds 2^24");
    }
    q_ = static_cast<Scalar>(q);
    if (s_ > 1) {
        auto prime = std::make_shared<const BaseField>(p, 1);
        APoly f = lex_min_irreducible(prime, s_);
        defining_ = f.coeffs();
    }
    if (q_ <= kMulTableLimit) {
        mul_table_.resize(std::size_t(q_) * q_);
        for (Scalar a = 0; a < q_; ++a)
            for (Scalar b = 0; b < q_; ++b) mul_table_[std::size_t(a) * q_ + b] = mul_direct(a, b);
        inv_table_.resize(q_, 0);
        for (Scalar a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
    }
}

Scalar BaseField::add(Scalar a, Scalar b) const {
    if (s_ == 1) return (a + b) % p_;
    Scalar res = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        res += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return res;
}

Scalar BaseField::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar BaseField::neg(Scalar a) const {
    if (s_ == 1) return (p_ - a) % p_;
    Scalar res = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        res += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return res;
}

Scalar BaseField::mul(Scalar a, Scalar b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    return mul_direct(a, b);
}

Scalar BaseField::mul_direct(Scalar a, Scalar b) const {
    if (s_ == 1) return static_cast<Scalar>((std::uint64_t(a) * b) % p_);
    std::vector<Scalar> da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * s_ - 1, 0);
    for (std::uint32_t i = 0; i < s_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < s_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    }
    // reduce modulo the defining polynomial: y^s = -sum defining_[j] y^j
    for (std::uint32_t t = 2 * s_ - 2; t >= s_; --t) {
        std::uint64_t c = prod[t] % p_;
        if (c != 0) {
            for (std::uint32_t j = 0; j < s_; ++j)
                prod[t - s_ + j] += c * ((p_ - defining_[j]) % p_);
        }
        if (t == s_) break;
    }
    Scalar res = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        res += static_cast<Scalar>(prod[i] % p_) * mult;
        mult *= p_;
    }
    return res;
}

Scalar BaseField::inv(Scalar a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

Scalar BaseField::pow(Scalar a, std::uint64_t e) const {
    Scalar res = 1, base = a;
    while (e != 0) {
        if (e & 1) res = mul(res, base);
        base = mul(base, base);
        e >>= 1;
    }
    return res;
}

Scalar BaseField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
}

std::vector<Scalar> BaseField::digits(Scalar a) const {
    std::vector<Scalar> d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Scalar BaseField::from_digits(const std::vector<Scalar>& d) const {
    if (d.size() != s_) throw std::invalid_argument("wrong number of digits");
    Scalar res = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        if (d[i] >= p_) throw std::invalid_argument("digit out of range");
        res += d[i] * mult;
        mult *= p_;
    }
    return res;
}

bool BaseField::lex_less(Scalar a, Scalar b) const {
    if (s_ == 1) return a < b;
    for (std::uint32_t i = 0; i < s_; ++i) {
        Scalar da = a % p_, db = b % p_;
        if (da != db) return da < db;
        a /= p_;
        b /= p_;
    }
    return false;
}

Scalar BaseField::label_at_lex(Scalar rank) const {
    if (s_ == 1) return rank;
    // rank digits, most significant first, are the coordinates d_0, d_1, ...
    std::vector<Scalar> d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        d[s_ - 1 - i] = rank % p_;
        rank /= p_;
    }
    Scalar res = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        res += d[i] * mult;
        mult *= p_;
    }
    return res;
}

std::shared_ptr<const BaseField> base_field(std::uint32_t p, std::uint32_t s) {
    static std::mutex mtx;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const BaseField>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto fq = std::make_shared<const BaseField>(p, s);
    cache.emplace(key, fq);
    return fq;
}

}  // namespace drinfeld
