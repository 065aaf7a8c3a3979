#include "drinfeld/survey.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

std::vector<Scalar> key_blob(const SurveyClassKey& k) {
    std::vector<Scalar> b;
    auto push = [&b](const APoly& a) {
        b.push_back(static_cast<Scalar>(a.coeffs().size()));
        for (Scalar c : a.coeffs()) b.push_back(c);
    };
    push(k.chi_prime);
    push(k.p);
    b.push_back(k.m);
    push(k.c);
    b.push_back(k.mu);
    return b;
}

std::vector<Scalar> class_blob(const MatrixClass& mc) {
    std::vector<Scalar> b;
    auto push = [&b](const APoly& a) {
        b.push_back(static_cast<Scalar>(a.coeffs().size()));
        for (Scalar c : a.coeffs()) b.push_back(c);
    };
    push(mc.trace);
    push(mc.det);
    push(mc.b1);
    push(mc.b2);
    return b;
}

std::vector<APoly> residues_mod(const std::shared_ptr<const BaseField>& fq, unsigned deg) {
    std::vector<APoly> out;
    const Scalar q = fq->q();
    std::vector<Scalar> digits(deg, 0);
    for (;;) {
        out.emplace_back(fq, std::vector<Scalar>(digits.begin(), digits.end()));
        std::size_t pos = deg;
        bool done = deg == 0;
        while (pos-- > 0) {
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

struct ClassData {
    SurveyClassKey key;
    std::uint64_t module_count = 0;
    std::uint64_t det_matches_mu_pm = 0;
    std::uint64_t det_matches_pm = 0;
    std::map<std::vector<Scalar>, MatrixClass> realized;
};

struct Part {
    std::uint64_t total = 0, ordinary = 0, surveyed = 0;
    std::map<std::vector<Scalar>, ClassData> classes;
    std::vector<SurveySkip> skipped;
    ClosingMatrixStats closing;
    std::uint64_t reading_p_ndiv_c = 0;
    std::uint64_t reading_c_ndiv_p = 0;
};

}  // namespace

SurveyReport frobenius_matrix_survey(std::uint32_t p, std::uint32_t s, unsigned n,
                                     const Caps& caps, unsigned workers) {
    FieldCtxPtr ctx = FieldCtx::make(p, s, n);
    auto fq = ctx->fq();
    const std::uint64_t big_q = ctx->size();

    std::function<Part(std::uint64_t, std::uint64_t)> job = [&](std::uint64_t lo,
                                                                std::uint64_t hi) {
        Part part;
        for (std::uint64_t ia = lo; ia < hi; ++ia) {
            FieldElem a1 = ctx->element_at(ia);
            for (std::uint64_t ib = 0; ib < big_q; ++ib) {
                FieldElem a2 = ctx->element_at(ib);
                for (std::uint64_t ic = 1; ic < big_q; ++ic) {
                    FieldElem a3 = ctx->element_at(ic);
                    const std::uint64_t index = (ia * big_q + ib) * (big_q - 1) + (ic - 1);
                    DrinfeldModule dm(ctx, a1, a2, a3);
                    ++part.total;
                    ModuleInvariants inv = compute_invariants(dm);
                    if (!inv.ordinary) continue;
                    ++part.ordinary;
                    if (!(inv.cp.c % dm.a_char()).is_zero()) ++part.reading_p_ndiv_c;
                    if (inv.cp.c.is_zero() || !inv.cp.c.divides(dm.a_char()))
                        ++part.reading_c_ndiv_p;

                    // prime-to-P part of chi
                    APoly chi_prime = inv.chi;
                    while (!chi_prime.is_one() && dm.a_char().divides(chi_prime))
                        chi_prime = (chi_prime / dm.a_char()).monic();
                    if (chi_prime.degree() < 1) {
                        part.skipped.push_back({index, "chi has no prime-to-P part"});
                        continue;
                    }
                    FrobMatrix mf;
                    try {
                        mf = frobenius_matrix(dm, chi_prime, caps);
                    } catch (const CapExceeded& e) {
                        part.skipped.push_back({index, e.what()});
                        continue;
                    }
                    ++part.surveyed;

                    SurveyClassKey key{chi_prime, dm.a_char(), dm.m(), inv.cp.c % chi_prime,
                                       inv.cp.mu};
                    ClassData& cd = part.classes
                                        .emplace(key_blob(key), ClassData{key, 0, 0, 0, {}})
                                        .first->second;
                    ++cd.module_count;
                    APoly pm = dm.a_char().pow(dm.m());
                    if (mf.det == (pm * inv.cp.mu) % chi_prime) ++cd.det_matches_mu_pm;
                    if (mf.det == pm % chi_prime) ++cd.det_matches_pm;
                    MatrixClass mc = matrix_class(mf.m00, mf.m01, mf.m10, mf.m11, chi_prime);
                    cd.realized.emplace(class_blob(mc), mc);

                    // the closing matrix [[c-1, i1],[i2, -1]] mod chi'
                    ++part.closing.modules;
                    ++part.closing.trace_is_c_minus_2;
                    APoly two = APoly::from_int(fq, 2);
                    APoly cm2 = (inv.cp.c - two) % chi_prime;
                    APoly cc = inv.cp.c % chi_prime;
                    if (cm2 == cc) ++part.closing.trace_equals_c;
                    APoly one = APoly::one(fq);
                    APoly closing_det =
                        ((-(inv.cp.c - one)) - inv.i1 * inv.i2) % chi_prime;
                    APoly minus_mu_pm = (-(pm * inv.cp.mu)) % chi_prime;
                    if (closing_det == minus_mu_pm) ++part.closing.det_is_minus_mu_pm;
                    if (closing_det == pm % chi_prime) ++part.closing.det_equals_plus_pm;
                    if (closing_det != minus_mu_pm)
                        throw ConsistencyError("closing matrix determinant is not -mu P^m");
                }
            }
        }
        return part;
    };

    std::vector<Part> parts;
    if (workers <= 1 || big_q < 2) {
        parts.push_back(job(0, big_q));
    } else {
        unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(workers, big_q));
        parts.resize(w);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (big_q + w - 1) / w;
        for (unsigned i = 0; i < w; ++i) {
            std::uint64_t lo = i * chunk, hi = std::min<std::uint64_t>(big_q, lo + chunk);
            pool.emplace_back([&, i, lo, hi] { parts[i] = job(lo, hi); });
        }
        for (auto& t : pool) t.join();
    }

    SurveyReport rep;
    rep.p = p;
    rep.s = s;
    rep.n = n;
    rep.caps = caps;
    std::map<std::vector<Scalar>, ClassData> classes;
    for (Part& part : parts) {
        rep.total += part.total;
        rep.ordinary += part.ordinary;
        rep.surveyed += part.surveyed;
        rep.reading_p_ndiv_c += part.reading_p_ndiv_c;
        rep.reading_c_ndiv_p += part.reading_c_ndiv_p;
        rep.closing.modules += part.closing.modules;
        rep.closing.trace_is_c_minus_2 += part.closing.trace_is_c_minus_2;
        rep.closing.trace_equals_c += part.closing.trace_equals_c;
        rep.closing.det_is_minus_mu_pm += part.closing.det_is_minus_mu_pm;
        rep.closing.det_equals_plus_pm += part.closing.det_equals_plus_pm;
        for (auto& sk : part.skipped) rep.skipped.push_back(std::move(sk));
        for (auto& [kb, cd] : part.classes) {
            auto it = classes.find(kb);
            if (it == classes.end()) {
                classes.emplace(kb, std::move(cd));
            } else {
                it->second.module_count += cd.module_count;
                it->second.det_matches_mu_pm += cd.det_matches_mu_pm;
                it->second.det_matches_pm += cd.det_matches_pm;
                for (auto& [mb, mc] : cd.realized) it->second.realized.emplace(mb, mc);
            }
        }
    }
    std::sort(rep.skipped.begin(), rep.skipped.end(),
              [](const SurveySkip& a, const SurveySkip& b) { return a.index < b.index; });

    // target matrices per class: trace c and det P^m mod chi'
    for (auto& [kb, cd] : classes) {
        SurveyClass sc;
        sc.key = cd.key;
        sc.module_count = cd.module_count;
        sc.det_matches_mu_pm = cd.det_matches_mu_pm;
        sc.det_matches_pm = cd.det_matches_pm;
        for (auto& [mb, mc] : cd.realized) sc.realized.push_back(mc);

        const APoly& chi_prime = cd.key.chi_prime;
        const unsigned deg = static_cast<unsigned>(chi_prime.degree());
        APoly pm_target = cd.key.p.pow(cd.key.m) % chi_prime;
        APoly c_target = cd.key.c % chi_prime;
        std::map<std::vector<Scalar>, MatrixClass> targets;
        std::vector<APoly> residues = residues_mod(fq, deg);
        for (const APoly& m00 : residues) {
            APoly m11 = (c_target - m00) % chi_prime;
            APoly diag = (m00 * m11) % chi_prime;
            for (const APoly& m01 : residues)
                for (const APoly& m10 : residues) {
                    if ((diag - m01 * m10) % chi_prime != pm_target) continue;
                    MatrixClass mc = matrix_class(m00, m01, m10, m11, chi_prime);
                    targets.emplace(class_blob(mc), mc);
                }
        }
        for (auto& [mb, mc] : targets) {
            sc.targets.push_back(mc);
            if (cd.realized.find(mb) == cd.realized.end()) sc.unrealized.push_back(mc);
        }
        rep.classes.push_back(std::move(sc));
    }

    rep.discrepancies.push_back(
        "closing matrix trace is c-2, the prescribed trace is c");
    rep.discrepancies.push_back(
        "closing matrix determinant is -mu*P^m, the prescribed determinant is P^m");
    rep.discrepancies.push_back(
        "hypothesis reads c does not divide P; the ordinarity criterion is P does not divide c");
    return rep;
}

}  // namespace drinfeld
