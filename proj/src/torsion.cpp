#include "drinfeld/torsion.hpp"

#include <stdexcept>
#include <unordered_map>

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

struct ElemHash {
    std::size_t operator()(const std::vector<Scalar>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Scalar c : v) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

OrePoly TorsionModule::phi_ambient(const APoly& b) const {
    OrePoly res = OrePoly::zero(ambient);
    for (std::size_t i = b.coeffs().size(); i-- > 0;)
        res = res * phi_t_ambient + OrePoly::constant(ambient->from_scalar(b.coeffs()[i]));
    return res;
}

FieldElem TorsionModule::apply(const APoly& b, const FieldElem& x) const {
    return phi_ambient(b).apply(x);
}

APoly TorsionModule::point_order(const FieldElem& x) const {
    for (const APoly& b : monic_divisors(a))
        if (apply(b, x).is_zero()) return b;
    throw ConsistencyError("point is not annihilated by its torsion modulus");
}

TorsionModule torsion_points(const DrinfeldModule& dm, const APoly& a, const Caps& caps) {
    if (a.is_zero() || a.leading() != 1) throw std::invalid_argument("a must be monic");
    if (!APoly::gcd(a, dm.a_char()).is_one())
        throw std::invalid_argument("a must be coprime to the A-characteristic");
    const unsigned deg_a = static_cast<unsigned>(a.degree());
    const auto& fq = dm.ctx()->fq();
    const std::uint64_t expected = ipow(fq->q(), 2 * deg_a);
    if (expected > caps.point_cap) throw CapExceeded("torsion point count exceeds cap");

    const OrePoly phi_a = dm.phi(a);
    for (unsigned k = 1; k <= caps.k_max; ++k) {
        FieldCtxPtr ambient;
        try {
            ambient = (k == 1) ? dm.ctx() : FieldCtx::extend(dm.ctx(), k, caps.field_size_cap);
        } catch (const CapExceeded&) {
            throw CapExceeded("field size cap reached before the full torsion module was found");
        }
        OrePoly phi_a_amb = phi_a;
        OrePoly phi_t_amb = dm.phi_t();
        if (k > 1) {
            std::vector<FieldElem> ca, ct;
            for (const FieldElem& c : phi_a.coeffs()) ca.push_back(embed(c, ambient));
            for (const FieldElem& c : dm.phi_t().coeffs()) ct.push_back(embed(c, ambient));
            phi_a_amb = OrePoly(ambient, std::move(ca));
            phi_t_amb = OrePoly(ambient, std::move(ct));
        }
        FqMatrix m = linear_map_matrix(
            [&phi_a_amb](const FieldElem& x) { return phi_a_amb.apply(x); }, ambient);
        std::vector<std::vector<Scalar>> kb = m.kernel_basis();
        if (kb.size() < 2 * deg_a) continue;
        if (kb.size() > 2 * deg_a)
            throw ConsistencyError("torsion kernel larger than rank 2 allows");

        TorsionModule tm;
        tm.a = a;
        tm.ambient = ambient;
        tm.k = k;
        tm.phi_t_ambient = phi_t_amb;
        // all F_q-combinations of the kernel basis, odometer order with the
        // last basis vector fastest
        const Scalar q = fq->q();
        std::vector<FieldElem> basis;
        for (const auto& v : kb) basis.push_back(ambient->element(v));
        const std::size_t r = basis.size();
        std::vector<Scalar> t(r, 0);
        for (std::uint64_t count = 0;; ++count) {
            FieldElem pt = ambient->zero();
            for (std::size_t i = 0; i < r; ++i)
                if (t[i] != 0) pt = pt + ambient->from_scalar(t[i]) * basis[i];
            tm.points.push_back(pt);
            std::size_t pos = r;
            bool done = r == 0;
            while (pos-- > 0) {
                if (++t[pos] < q) break;
                t[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
        if (tm.points.size() != expected)
            throw ConsistencyError("torsion point count mismatch");

        tm.e1 = ambient->zero();
        tm.e2 = ambient->zero();
        if (deg_a > 0) {
            // e1: first point of maximal order; e2: first point spanning the
            // rest together with e1
            for (const FieldElem& x : tm.points)
                if (tm.point_order(x) == a.monic()) {
                    tm.e1 = x;
                    break;
                }
            std::vector<APoly> residues;
            {
                std::vector<Scalar> digits(deg_a, 0);
                for (std::uint64_t idx = 0;; ++idx) {
                    residues.emplace_back(fq, std::vector<Scalar>(digits.begin(), digits.end()));
                    std::size_t pos = deg_a;
                    bool done = false;
                    while (pos-- > 0) {
                        if (++digits[pos] < q) break;
                        digits[pos] = 0;
                        if (pos == 0) done = true;
                    }
                    if (done) break;
                }
            }
            std::vector<FieldElem> span1;
            for (const APoly& al : residues) span1.push_back(tm.apply(al, tm.e1));
            bool found = false;
            for (const FieldElem& x : tm.points) {
                std::unordered_map<std::vector<Scalar>, bool, ElemHash> seen;
                for (const APoly& be : residues) {
                    FieldElem w = tm.apply(be, x);
                    for (const FieldElem& s : span1) seen.emplace((s + w).coords(), true);
                }
                if (seen.size() == tm.points.size()) {
                    tm.e2 = x;
                    found = true;
                    break;
                }
            }
            if (!found) throw ConsistencyError("no second torsion basis point found");
        }
        return tm;
    }
    throw CapExceeded("extension search cap reached before the full torsion module was found");
}

FrobMatrix frobenius_matrix(const DrinfeldModule& dm, const APoly& a, const Caps& caps) {
    return frobenius_matrix(dm, torsion_points(dm, a, caps));
}

FrobMatrix frobenius_matrix(const DrinfeldModule& dm, const TorsionModule& tm) {
    const auto& fq = dm.ctx()->fq();
    const APoly& a = tm.a;
    FrobMatrix out;
    out.a = a;
    out.k = tm.k;
    out.point_count = tm.points.size();
    out.e1 = tm.e1;
    out.e2 = tm.e2;
    const unsigned deg_a = a.degree() < 0 ? 0 : static_cast<unsigned>(a.degree());
    if (deg_a == 0) {
        out.m00 = out.m01 = out.m10 = out.m11 = APoly::zero(fq);
        out.trace = out.det = APoly::zero(fq);
        return out;
    }

    const Scalar q = fq->q();
    std::vector<APoly> residues;
    {
        std::vector<Scalar> digits(deg_a, 0);
        for (;;) {
            residues.emplace_back(fq, std::vector<Scalar>(digits.begin(), digits.end()));
            std::size_t pos = deg_a;
            bool done = false;
            while (pos-- > 0) {
                if (++digits[pos] < q) break;
                digits[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    }
    // coordinates of every point in the basis (e1, e2), also re-proving that
    // the basis generates freely
    std::unordered_map<std::vector<Scalar>, std::pair<std::size_t, std::size_t>, ElemHash> coords;
    std::vector<FieldElem> img1, img2;
    for (const APoly& al : residues) img1.push_back(tm.apply(al, tm.e1));
    for (const APoly& be : residues) img2.push_back(tm.apply(be, tm.e2));
    for (std::size_t i = 0; i < residues.size(); ++i)
        for (std::size_t j = 0; j < residues.size(); ++j)
            coords.emplace((img1[i] + img2[j]).coords(), std::make_pair(i, j));
    if (coords.size() != tm.points.size())
        throw ConsistencyError("torsion coordinate solve failed");

    const unsigned n = dm.n();
    auto coords_of = [&](const FieldElem& x) {
        auto it = coords.find(x.coords());
        if (it == coords.end()) throw ConsistencyError("point outside the torsion module");
        return it->second;
    };
    auto [a1, b1] = coords_of(frob_power(tm.e1, n));
    auto [a2, b2] = coords_of(frob_power(tm.e2, n));
    out.m00 = residues[a1];
    out.m10 = residues[b1];
    out.m01 = residues[a2];
    out.m11 = residues[b2];
    out.trace = (out.m00 + out.m11) % a;
    out.det = (out.m00 * out.m11 - out.m01 * out.m10) % a;

    FrobCharPoly cp = frobenius_charpoly(dm);
    APoly pm = dm.a_char().pow(dm.m()) * cp.mu;
    if (out.trace != (cp.c % a)) throw ConsistencyError("trace of M_F is not congruent to c");
    if (out.det != (pm % a))
        throw ConsistencyError("determinant of M_F is not congruent to mu P^m");

    // the matrix must reproduce the Frobenius on every point
    for (const FieldElem& x : tm.points) {
        auto [al, be] = coords_of(x);
        APoly na = (out.m00 * residues[al] + out.m01 * residues[be]) % a;
        APoly nb = (out.m10 * residues[al] + out.m11 * residues[be]) % a;
        FieldElem lhs = frob_power(x, n);
        FieldElem rhs = tm.apply(na, tm.e1) + tm.apply(nb, tm.e2);
        if (lhs != rhs) throw ConsistencyError("M_F does not act as the Frobenius");
    }
    return out;
}

std::pair<APoly, APoly> fixed_submodule_structure(const DrinfeldModule& dm,
                                                  const TorsionModule& tm) {
    const auto& fq = dm.ctx()->fq();
    const unsigned n = dm.n();
    std::vector<FieldElem> fixed;
    for (const FieldElem& x : tm.points)
        if (frob_power(x, n) == x) fixed.push_back(x);

    // b1 = annihilator of the fixed submodule
    APoly b1 = APoly::one(fq);
    for (const APoly& b : monic_divisors(tm.a)) {
        bool kills = true;
        for (const FieldElem& x : fixed)
            if (!tm.apply(b, x).is_zero()) {
                kills = false;
                break;
            }
        if (kills) {
            b1 = b;
            break;
        }
    }
    FieldElem x1 = tm.ambient->zero();
    for (const FieldElem& x : fixed)
        if (tm.point_order(x) == b1) {
            x1 = x;
            break;
        }
    // orbit of x1
    std::unordered_map<std::vector<Scalar>, bool, ElemHash> orbit;
    {
        const Scalar q = fq->q();
        unsigned deg_a = tm.a.degree() < 0 ? 0 : static_cast<unsigned>(tm.a.degree());
        std::vector<Scalar> digits(deg_a, 0);
        for (;;) {
            APoly al(fq, std::vector<Scalar>(digits.begin(), digits.end()));
            orbit.emplace(tm.apply(al, x1).coords(), true);
            std::size_t pos = deg_a;
            bool done = deg_a == 0;
            while (pos-- > 0) {
                if (++digits[pos] < q) break;
                digits[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    }
    // b2 = annihilator of the quotient by the cyclic module on x1
    APoly b2 = b1;
    for (const APoly& g : monic_divisors(b1)) {
        bool into = true;
        for (const FieldElem& x : fixed)
            if (orbit.find(tm.apply(g, x).coords()) == orbit.end()) {
                into = false;
                break;
            }
        if (into) {
            b2 = g;
            break;
        }
    }
    std::uint64_t expected = ipow(fq->q(), static_cast<unsigned>(b1.degree() + b2.degree()));
    if (expected != fixed.size())
        throw ConsistencyError("fixed submodule cardinality does not match its factors");
    return {b1, b2};
}

MatrixClass matrix_class(const APoly& m00, const APoly& m01, const APoly& m10, const APoly& m11,
                         const APoly& modulus) {
    const auto& fq = modulus.field();
    MatrixClass mc;
    mc.trace = (m00 + m11) % modulus;
    mc.det = (m00 * m11 - m01 * m10) % modulus;
    const unsigned deg = modulus.degree() < 0 ? 0 : static_cast<unsigned>(modulus.degree());
    if (deg == 0) {
        mc.b1 = mc.b2 = APoly::one(fq);
        return mc;
    }
    const Scalar q = fq->q();
    std::vector<APoly> residues;
    {
        std::vector<Scalar> digits(deg, 0);
        for (;;) {
            residues.emplace_back(fq, std::vector<Scalar>(digits.begin(), digits.end()));
            std::size_t pos = deg;
            bool done = false;
            while (pos-- > 0) {
                if (++digits[pos] < q) break;
                digits[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    }
    APoly a00 = m00 - APoly::one(fq), a11 = m11 - APoly::one(fq);
    // kernel of M - I on (A/modulus)^2
    std::vector<std::pair<APoly, APoly>> kernel;
    for (const APoly& v1 : residues)
        for (const APoly& v2 : residues) {
            if (((a00 * v1 + m01 * v2) % modulus).is_zero() &&
                ((m10 * v1 + a11 * v2) % modulus).is_zero())
                kernel.emplace_back(v1, v2);
        }
    auto order_of = [&](const APoly& v1, const APoly& v2) {
        APoly g = APoly::gcd(APoly::gcd(modulus, v1), v2);
        return (modulus / g).monic();
    };
    APoly b1 = APoly::one(fq);
    for (const auto& [v1, v2] : kernel) b1 = APoly::lcm(b1, order_of(v1, v2));
    std::pair<APoly, APoly> w{APoly::zero(fq), APoly::zero(fq)};
    for (const auto& v : kernel)
        if (order_of(v.first, v.second) == b1) {
            w = v;
            break;
        }
    APoly b2 = b1;
    for (const APoly& g : monic_divisors(b1)) {
        bool into = true;
        for (const auto& [v1, v2] : kernel) {
            bool member = false;
            for (const APoly& al : residues)
                if (((al * w.first - g * v1) % modulus).is_zero() &&
                    ((al * w.second - g * v2) % modulus).is_zero()) {
                    member = true;
                    break;
                }
            if (!member) {
                into = false;
                break;
            }
        }
        if (into) {
            b2 = g;
            break;
        }
    }
    std::uint64_t expected = ipow(q, static_cast<unsigned>(b1.degree() + b2.degree()));
    if (expected != kernel.size())
        throw ConsistencyError("matrix kernel cardinality does not match its factors");
    mc.b1 = b1;
    mc.b2 = b2;
    return mc;
}

}  // namespace drinfeld
