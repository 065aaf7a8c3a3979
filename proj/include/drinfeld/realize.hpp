#ifndef DRINFELD_REALIZE_HPP
#define DRINFELD_REALIZE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "drinfeld/structure.hpp"

namespace drinfeld {

/// One enumerated module together with everything derived from it.
/// Reproducible from (q, n) and the enumeration index alone.
struct EnumerationRecord {
    std::uint64_t index = 0;
    FieldElem a1, a2, a3;
    APoly p;
    unsigned d = 0, m = 0;
    APoly c;
    Scalar mu = 1;
    APoly chi, p_phi_1, i1, i2, delta;
    int phi_p_height = 0;
    bool ordinary = false;
    bool cyclic = false;
    VerificationRecord checks;
};

EnumerationRecord analyze_module(const DrinfeldModule& dm, std::uint64_t index = 0);

/// Visits every (a1, a2, a3) in L x L x L*, lexicographic coordinate order,
/// a1 outermost. Returns the number of modules visited, q^n * q^n * (q^n - 1).
std::uint64_t enumerate_all(std::uint32_t p, std::uint32_t s, unsigned n,
                            const std::function<void(const DrinfeldModule&, std::uint64_t)>& visit);

struct EnumerationSummary {
    std::uint64_t total = 0, ordinary = 0, cyclic = 0;
    std::vector<EnumerationRecord> failures;  // records with a false predicate
};
/// Full predicate sweep; workers partition the a1 range, results are merged
/// in index order so the summary does not depend on the worker count.
EnumerationSummary enumeration_summary(std::uint32_t p, std::uint32_t s, unsigned n,
                                       unsigned workers = 1,
                                       std::vector<EnumerationRecord>* all_records = nullptr);

struct RealizationTarget {
    APoly i1, i2;  // monic, i2 | i1
};

struct RealizeResult {
    bool found = false;
    std::optional<EnumerationRecord> witness;
    bool admissible = false;
    std::uint64_t scanned = 0;
    unsigned n = 0;
};

/// Exhaustive realization search for L^phi = A/(i1) + A/(i2) by an ordinary
/// module over F_{q^n}, n = deg(i1 i2). The first witness in enumeration
/// order is returned. An exhausted search on an admissible target is a
/// counterexample to the realization theorem and is reported by the caller.
RealizeResult realize(std::uint32_t p, std::uint32_t s, const RealizationTarget& target);

/// A target is admissible when some c (zero or monic, deg c <= n/2) with
/// i2 | c - 2, some unit mu and some prime P with d m = n give
/// monic(1 - c + mu P^m) = monic(i1 i2).
bool target_admissible(std::uint32_t p, std::uint32_t s, const RealizationTarget& target);

struct CensusRow {
    APoly i1, i2;
    bool ordinary = false;
    std::uint64_t count = 0;
};
struct AdmissibleTarget {
    APoly i1, i2;
    bool realized = false;
};
struct CensusReport {
    std::uint32_t p = 0, s = 0;
    unsigned n = 0;
    std::uint64_t total = 0;
    std::vector<CensusRow> rows;
    std::vector<AdmissibleTarget> admissible;
    std::vector<RealizationTarget> unrealized;  // admissible but never ordinary
};
CensusReport census(std::uint32_t p, std::uint32_t s, unsigned n, unsigned workers = 1);

}  // namespace drinfeld

#endif
