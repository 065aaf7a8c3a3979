#ifndef DRINFELD_SURVEY_HPP
#define DRINFELD_SURVEY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/realize.hpp"
#include "drinfeld/torsion.hpp"

namespace drinfeld {

/// Empirical exploration of which Frobenius matrices occur. For each
/// ordinary module the Frobenius matrix is computed modulo chi', the
/// prime-to-P part of chi, and bucketed by conjugacy invariants. Matrices
/// with the prescribed trace c and determinant P^m mod chi' are enumerated
/// as targets and compared against the realized buckets. Nothing here
/// asserts the underlying statement; the report is the outcome.
struct SurveyClassKey {
    APoly chi_prime;
    APoly p;
    unsigned m = 0;
    APoly c;
    Scalar mu = 1;
};

struct SurveyClass {
    SurveyClassKey key;
    std::uint64_t module_count = 0;
    std::uint64_t det_matches_mu_pm = 0;  // det(M_F) = mu P^m mod chi'
    std::uint64_t det_matches_pm = 0;     // det(M_F) = P^m mod chi'
    std::vector<MatrixClass> realized;
    std::vector<MatrixClass> targets;
    std::vector<MatrixClass> unrealized;
};

struct SurveySkip {
    std::uint64_t index = 0;
    std::string reason;
};

/// Trace and determinant of the matrix [[c-1, i1], [i2, -1]] compared with
/// the prescribed values c and P^m.
struct ClosingMatrixStats {
    std::uint64_t modules = 0;
    std::uint64_t trace_is_c_minus_2 = 0;     // always, by construction
    std::uint64_t trace_equals_c = 0;         // c - 2 = c mod chi'
    std::uint64_t det_is_minus_mu_pm = 0;     // det = -mu P^m mod chi'
    std::uint64_t det_equals_plus_pm = 0;     // det = +P^m mod chi'
};

struct SurveyReport {
    std::uint32_t p = 0, s = 0;
    unsigned n = 0;
    Caps caps;
    std::uint64_t total = 0, ordinary = 0, surveyed = 0;
    std::vector<SurveyClass> classes;
    std::vector<SurveySkip> skipped;
    ClosingMatrixStats closing;
    std::uint64_t reading_p_ndiv_c = 0;  // modules with P not dividing c
    std::uint64_t reading_c_ndiv_p = 0;  // modules with c not dividing P
    std::vector<std::string> discrepancies;
};

SurveyReport frobenius_matrix_survey(std::uint32_t p, std::uint32_t s, unsigned n,
                                     const Caps& caps = {}, unsigned workers = 1);

}  // namespace drinfeld

#endif
