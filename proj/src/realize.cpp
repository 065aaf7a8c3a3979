#include "drinfeld/realize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "drinfeld/errors.hpp"

namespace drinfeld {

EnumerationRecord analyze_module(const DrinfeldModule& dm, std::uint64_t index) {
    ModuleInvariants inv = compute_invariants(dm);
    EnumerationRecord r;
    r.index = index;
    r.a1 = dm.a1();
    r.a2 = dm.a2();
    r.a3 = dm.a3();
    r.p = dm.a_char();
    r.d = dm.d();
    r.m = dm.m();
    r.c = inv.cp.c;
    r.mu = inv.cp.mu;
    r.chi = inv.chi;
    r.p_phi_1 = inv.p_phi_1;
    r.i1 = inv.i1;
    r.i2 = inv.i2;
    r.delta = inv.delta;
    r.phi_p_height = inv.phi_p_height;
    r.ordinary = inv.ordinary;
    r.cyclic = inv.cyclic;
    r.checks = verify_predicates(dm, inv);
    return r;
}

namespace {

/// Runs fn over [0, q^n) blocks of a1 lexicographic indices, one worker per
/// block, and concatenates the per-worker results in block order.
template <class Part>
std::vector<Part> run_blocks(std::uint64_t range, unsigned workers,
                             const std::function<Part(std::uint64_t, std::uint64_t)>& fn) {
    if (workers <= 1 || range < 2) return {fn(0, range)};
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, range));
    std::vector<Part> parts(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (range + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(range, lo + chunk);
        pool.emplace_back([&, w, lo, hi] { parts[w] = fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
    return parts;
}

}  // namespace

std::uint64_t enumerate_all(std::uint32_t p, std::uint32_t s, unsigned n,
                            const std::function<void(const DrinfeldModule&, std::uint64_t)>& visit) {
    FieldCtxPtr ctx = FieldCtx::make(p, s, n);
    const std::uint64_t big_q = ctx->size();
    std::uint64_t index = 0;
    for (std::uint64_t i1 = 0; i1 < big_q; ++i1) {
        FieldElem a1 = ctx->element_at(i1);
        for (std::uint64_t i2 = 0; i2 < big_q; ++i2) {
            FieldElem a2 = ctx->element_at(i2);
            for (std::uint64_t i3 = 0; i3 < big_q; ++i3) {
                FieldElem a3 = ctx->element_at(i3);
                if (a3.is_zero()) continue;
                visit(DrinfeldModule(ctx, a1, a2, a3), index++);
            }
        }
    }
    return index;
}

EnumerationSummary enumeration_summary(std::uint32_t p, std::uint32_t s, unsigned n,
                                       unsigned workers,
                                       std::vector<EnumerationRecord>* all_records) {
    FieldCtxPtr ctx = FieldCtx::make(p, s, n);
    const std::uint64_t big_q = ctx->size();

    struct Part {
        EnumerationSummary sum;
        std::vector<EnumerationRecord> records;
    };
    const bool keep = all_records != nullptr;
    std::function<Part(std::uint64_t, std::uint64_t)> job = [&, keep](std::uint64_t lo,
                                                                      std::uint64_t hi) {
        Part part;
        for (std::uint64_t ia = lo; ia < hi; ++ia) {
            FieldElem a1 = ctx->element_at(ia);
            for (std::uint64_t ib = 0; ib < big_q; ++ib) {
                FieldElem a2 = ctx->element_at(ib);
                // zero is always lex index 0, so nonzero a3 are indices >= 1
                for (std::uint64_t ic = 1; ic < big_q; ++ic) {
                    FieldElem a3 = ctx->element_at(ic);
                    std::uint64_t index = (ia * big_q + ib) * (big_q - 1) + (ic - 1);
                    DrinfeldModule dm(ctx, a1, a2, a3);
                    EnumerationRecord rec = analyze_module(dm, index);
                    ++part.sum.total;
                    if (rec.ordinary) ++part.sum.ordinary;
                    if (rec.cyclic) ++part.sum.cyclic;
                    if (!rec.checks.all_ok()) part.sum.failures.push_back(rec);
                    if (keep) part.records.push_back(std::move(rec));
                }
            }
        }
        return part;
    };
    std::vector<Part> parts = run_blocks<Part>(big_q, workers, job);
    EnumerationSummary out;
    for (Part& part : parts) {
        out.total += part.sum.total;
        out.ordinary += part.sum.ordinary;
        out.cyclic += part.sum.cyclic;
        for (auto& f : part.sum.failures) out.failures.push_back(std::move(f));
        if (keep)
            for (auto& r : part.records) all_records->push_back(std::move(r));
    }
    return out;
}

namespace {

void validate_target(const RealizationTarget& t) {
    if (t.i1.is_zero() || t.i2.is_zero()) throw std::invalid_argument("target factors must be nonzero");
    if (t.i1.leading() != 1 || t.i2.leading() != 1)
        throw std::invalid_argument("target factors must be monic");
    if (!t.i2.divides(t.i1)) throw std::invalid_argument("target requires i2 | i1");
    if ((t.i1 * t.i2).degree() < 1) throw std::invalid_argument("target is trivial");
}

}  // namespace

bool target_admissible(std::uint32_t p, std::uint32_t s, const RealizationTarget& target) {
    validate_target(target);
    auto fq = base_field(p, s);
    const APoly chi_t = (target.i1 * target.i2).monic();
    const unsigned n = static_cast<unsigned>(chi_t.degree());
    const APoly two = APoly::from_int(fq, 2);

    std::vector<APoly> cs{APoly::zero(fq)};
    for (unsigned e = 0; 2 * e <= n; ++e)
        for (const APoly& c : monic_polys(fq, e)) cs.push_back(c);
    for (const APoly& c : cs) {
        if (!((c - two) % target.i2).is_zero()) continue;
        for (Scalar mu = 1; mu < fq->q(); ++mu) {
            for (unsigned d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                const unsigned m = n / d;
                for (const APoly& prime : monic_irreducibles(fq, d)) {
                    APoly cand = APoly::one(fq) - c + APoly::constant(fq, mu) * prime.pow(m);
                    if (!cand.is_zero() && cand.monic() == chi_t) return true;
                }
            }
        }
    }
    return false;
}

RealizeResult realize(std::uint32_t p, std::uint32_t s, const RealizationTarget& target) {
    validate_target(target);
    const APoly chi_t = (target.i1 * target.i2).monic();
    RealizeResult res;
    res.n = static_cast<unsigned>(chi_t.degree());

    FieldCtxPtr ctx = FieldCtx::make(p, s, res.n);
    const std::uint64_t big_q = ctx->size();
    for (std::uint64_t ia = 0; ia < big_q && !res.found; ++ia) {
        FieldElem a1 = ctx->element_at(ia);
        for (std::uint64_t ib = 0; ib < big_q && !res.found; ++ib) {
            FieldElem a2 = ctx->element_at(ib);
            for (std::uint64_t ic = 1; ic < big_q; ++ic) {
                FieldElem a3 = ctx->element_at(ic);
                std::uint64_t index = (ia * big_q + ib) * (big_q - 1) + (ic - 1);
                DrinfeldModule dm(ctx, a1, a2, a3);
                ++res.scanned;
                if (euler_characteristic(dm) != chi_t) continue;
                EnumerationRecord rec = analyze_module(dm, index);
                if (rec.ordinary && rec.i1 == target.i1 && rec.i2 == target.i2) {
                    res.found = true;
                    res.witness = std::move(rec);
                    break;
                }
            }
        }
    }
    res.admissible = target_admissible(p, s, target);
    return res;
}

CensusReport census(std::uint32_t p, std::uint32_t s, unsigned n, unsigned workers) {
    FieldCtxPtr ctx = FieldCtx::make(p, s, n);
    auto fq = ctx->fq();
    const std::uint64_t big_q = ctx->size();

    using Key = std::tuple<std::vector<Scalar>, std::vector<Scalar>, bool>;
    using Counts = std::map<Key, std::uint64_t>;
    std::function<Counts(std::uint64_t, std::uint64_t)> job = [&](std::uint64_t lo,
                                                                  std::uint64_t hi) {
        Counts counts;
        for (std::uint64_t ia = lo; ia < hi; ++ia) {
            FieldElem a1 = ctx->element_at(ia);
            for (std::uint64_t ib = 0; ib < big_q; ++ib) {
                FieldElem a2 = ctx->element_at(ib);
                for (std::uint64_t ic = 1; ic < big_q; ++ic) {
                    FieldElem a3 = ctx->element_at(ic);
                    if (a3.is_zero()) continue;
                    DrinfeldModule dm(ctx, a1, a2, a3);
                    ModuleInvariants inv = compute_invariants(dm);
                    counts[{inv.i1.coeffs(), inv.i2.coeffs(), inv.ordinary}] += 1;
                }
            }
        }
        return counts;
    };
    std::vector<Counts> parts = run_blocks<Counts>(big_q, workers, job);
    Counts counts;
    std::uint64_t total = 0;
    for (const Counts& part : parts)
        for (const auto& [k, v] : part) {
            counts[k] += v;
            total += v;
        }

    CensusReport rep;
    rep.p = p;
    rep.s = s;
    rep.n = n;
    rep.total = total;
    for (const auto& [k, v] : counts) {
        CensusRow row;
        row.i1 = APoly(fq, std::get<0>(k));
        row.i2 = APoly(fq, std::get<1>(k));
        row.ordinary = std::get<2>(k);
        row.count = v;
        rep.rows.push_back(std::move(row));
    }
    std::sort(rep.rows.begin(), rep.rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.i1 != b.i1) return poly_less(a.i1, b.i1);
        if (a.i2 != b.i2) return poly_less(a.i2, b.i2);
        return a.ordinary < b.ordinary;
    });

    // admissible target coverage: every shape the realization theorem
    // promises must occur among the ordinary rows
    for (unsigned e2 = 0; 2 * e2 <= n; ++e2) {
        for (const APoly& i2 : monic_polys(fq, e2)) {
            for (const APoly& i1 : monic_polys(fq, n - e2)) {
                if (!i2.divides(i1)) continue;
                RealizationTarget t{i1, i2};
                if (!target_admissible(p, s, t)) continue;
                bool realized = counts.count({i1.coeffs(), i2.coeffs(), true}) > 0;
                rep.admissible.push_back({i1, i2, realized});
                if (!realized) rep.unrealized.push_back(t);
            }
        }
    }
    return rep;
}

}  // namespace drinfeld
