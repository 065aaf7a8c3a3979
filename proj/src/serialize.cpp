#include "drinfeld/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace drinfeld {

namespace {

Json coeff_to_json(const BaseField& fq, Scalar c) {
    if (fq.s() == 1) return Json(c);
    Json arr = Json::array();
    for (Scalar d : fq.digits(c)) arr.push_back(d);
    return arr;
}

Scalar coeff_from_json(const BaseField& fq, const Json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        std::int64_t v = j.get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(fq.q()))
            throw std::invalid_argument("coefficient label out of range");
        return static_cast<Scalar>(v);
    }
    if (j.is_array()) {
        std::vector<Scalar> d;
        for (const auto& e : j) {
            std::int64_t v = e.get<std::int64_t>();
            if (v < 0 || v >= static_cast<std::int64_t>(fq.p()))
                throw std::invalid_argument("digit out of range");
            d.push_back(static_cast<Scalar>(v));
        }
        return fq.from_digits(d);
    }
    throw std::invalid_argument("coefficient must be an integer or a digit list");
}

}  // namespace

Json to_json(const APoly& a) {
    Json arr = Json::array();
    for (Scalar c : a.coeffs()) arr.push_back(coeff_to_json(*a.field(), c));
    return arr;
}

Json to_json(const FieldElem& x) {
    Json arr = Json::array();
    for (Scalar c : x.coords()) arr.push_back(coeff_to_json(*x.ctx()->fq(), c));
    return arr;
}

Json to_json(const OrePoly& f) {
    Json arr = Json::array();
    for (const FieldElem& c : f.coeffs()) arr.push_back(to_json(c));
    return arr;
}

APoly poly_from_json(const std::shared_ptr<const BaseField>& fq, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of coefficients");
    std::vector<Scalar> c;
    for (const auto& e : j) c.push_back(coeff_from_json(*fq, e));
    return APoly(fq, std::move(c));
}

FieldElem elem_from_json(const FieldCtxPtr& ctx, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("element must be a list of coordinates");
    std::vector<Scalar> c;
    for (const auto& e : j) c.push_back(coeff_from_json(*ctx->fq(), e));
    if (c.size() > ctx->degree()) throw std::invalid_argument("too many coordinates");
    c.resize(ctx->degree(), 0);
    return ctx->element(std::move(c));
}

Json field_descriptor(const FieldCtxPtr& ctx) {
    Json j;
    j["p"] = ctx->fq()->p();
    j["s"] = ctx->fq()->s();
    j["q"] = ctx->fq()->q();
    j["n"] = ctx->degree();
    j["order"] = ctx->size();
    Json chain = Json::array();
    if (ctx->fq()->s() > 1) {
        Json lvl = Json::array();
        for (Scalar c : ctx->fq()->defining()) lvl.push_back(c);
        chain.push_back(lvl);
    }
    std::vector<FieldCtxPtr> levels;
    for (FieldCtxPtr c = ctx; c; c = c->base()) levels.push_back(c);
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        const FieldCtxPtr& lvl = *it;
        if (lvl->ext_degree() == 1 && !lvl->base()) continue;  // trivial top over F_q
        const BaseField& fq = *lvl->fq();
        const bool direct = lvl->base() == nullptr;
        auto coeff_json = [&](const std::vector<Scalar>& coeff) -> Json {
            if (direct) return coeff_to_json(fq, coeff[0]);
            Json c = Json::array();
            for (Scalar v : coeff) c.push_back(coeff_to_json(fq, v));
            return c;
        };
        Json poly = Json::array();
        for (const auto& coeff : lvl->defining()) poly.push_back(coeff_json(coeff));
        std::vector<Scalar> lead(direct ? 1 : lvl->base()->degree(), 0);
        lead[0] = 1;
        poly.push_back(coeff_json(lead));
        chain.push_back(poly);
    }
    j["defining_chain"] = chain;
    return j;
}

Json to_json(const VerificationRecord& r) {
    Json j;
    j["two_factor_form"] = r.two_factor_form;
    j["chi_matches"] = r.chi_matches;
    j["i2_divides_c_minus_2"] = r.i2_divides_c_minus_2;
    j["gcd_square_divides"] = r.gcd_square_divides;
    j["trace_degree_bound"] = r.trace_degree_bound;
    j["heights_consistent"] = r.heights_consistent;
    j["quotient_implies_noncyclic"] = r.quotient_implies_noncyclic;
    j["all"] = r.all_ok();
    return j;
}

Json to_json(const EnumerationRecord& r) {
    Json j;
    j["index"] = r.index;
    j["a1"] = to_json(r.a1);
    j["a2"] = to_json(r.a2);
    j["a3"] = to_json(r.a3);
    j["P"] = to_json(r.p);
    j["d"] = r.d;
    j["m"] = r.m;
    j["c"] = to_json(r.c);
    j["mu"] = r.mu;
    j["chi"] = to_json(r.chi);
    j["p_phi_1"] = to_json(r.p_phi_1);
    j["i1"] = to_json(r.i1);
    j["i2"] = to_json(r.i2);
    j["delta"] = to_json(r.delta);
    j["height"] = r.phi_p_height;
    j["ordinary"] = r.ordinary;
    j["cyclic"] = r.cyclic;
    j["checks"] = to_json(r.checks);
    return j;
}

Json to_json(const CensusReport& r) {
    Json j;
    j["p"] = r.p;
    j["s"] = r.s;
    j["n"] = r.n;
    j["total"] = r.total;
    Json rows = Json::array();
    for (const CensusRow& row : r.rows) {
        Json jr;
        jr["i1"] = to_json(row.i1);
        jr["i2"] = to_json(row.i2);
        jr["ordinary"] = row.ordinary;
        jr["count"] = row.count;
        rows.push_back(jr);
    }
    j["rows"] = rows;
    Json adm = Json::array();
    for (const AdmissibleTarget& t : r.admissible) {
        Json jt;
        jt["i1"] = to_json(t.i1);
        jt["i2"] = to_json(t.i2);
        jt["realized"] = t.realized;
        adm.push_back(jt);
    }
    j["admissible_targets"] = adm;
    Json un = Json::array();
    for (const RealizationTarget& t : r.unrealized) {
        Json jt;
        jt["i1"] = to_json(t.i1);
        jt["i2"] = to_json(t.i2);
        un.push_back(jt);
    }
    j["unrealized_admissible"] = un;
    return j;
}

std::string census_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "i1,i2,ordinary,count\n";
    for (const CensusRow& row : r.rows) {
        out << '"' << to_json(row.i1).dump() << "\",\"" << to_json(row.i2).dump() << "\","
            << (row.ordinary ? "true" : "false") << ',' << row.count << '\n';
    }
    return out.str();
}

Json to_json(const FrobMatrix& m) {
    Json j;
    j["a"] = to_json(m.a);
    j["k"] = m.k;
    j["point_count"] = m.point_count;
    j["e1"] = to_json(m.e1);
    j["e2"] = to_json(m.e2);
    j["matrix"] = Json::array({Json::array({to_json(m.m00), to_json(m.m01)}),
                               Json::array({to_json(m.m10), to_json(m.m11)})});
    j["trace"] = to_json(m.trace);
    j["det"] = to_json(m.det);
    return j;
}

Json to_json(const MatrixClass& mc) {
    Json j;
    j["trace"] = to_json(mc.trace);
    j["det"] = to_json(mc.det);
    j["fixed_kernel"] = Json::array({to_json(mc.b1), to_json(mc.b2)});
    return j;
}

Json to_json(const SurveyReport& r) {
    Json j;
    j["p"] = r.p;
    j["s"] = r.s;
    j["n"] = r.n;
    j["caps"] = Json{{"field_size_cap", r.caps.field_size_cap},
                     {"k_max", r.caps.k_max},
                     {"point_cap", r.caps.point_cap}};
    j["total"] = r.total;
    j["ordinary"] = r.ordinary;
    j["surveyed"] = r.surveyed;
    Json classes = Json::array();
    for (const SurveyClass& sc : r.classes) {
        Json jc;
        jc["chi_prime"] = to_json(sc.key.chi_prime);
        jc["P"] = to_json(sc.key.p);
        jc["m"] = sc.key.m;
        jc["c"] = to_json(sc.key.c);
        jc["mu"] = sc.key.mu;
        jc["modules"] = sc.module_count;
        jc["det_matches_mu_pm"] = sc.det_matches_mu_pm;
        jc["det_matches_pm"] = sc.det_matches_pm;
        Json realized = Json::array(), targets = Json::array(), unreal = Json::array();
        for (const MatrixClass& mc : sc.realized) realized.push_back(to_json(mc));
        for (const MatrixClass& mc : sc.targets) targets.push_back(to_json(mc));
        for (const MatrixClass& mc : sc.unrealized) unreal.push_back(to_json(mc));
        jc["realized"] = realized;
        jc["targets"] = targets;
        jc["unrealized"] = unreal;
        jc["coverage"] = Json{{"realized", sc.targets.size() - sc.unrealized.size()},
                              {"targets", sc.targets.size()}};
        classes.push_back(jc);
    }
    j["classes"] = classes;
    Json skipped = Json::array();
    for (const SurveySkip& sk : r.skipped) {
        skipped.push_back(Json{{"index", sk.index}, {"reason", sk.reason}});
    }
    j["skipped"] = skipped;
    j["closing_matrix"] = Json{{"trace_expression", "c-2"},
                               {"modules", r.closing.modules},
                               {"trace_is_c_minus_2", r.closing.trace_is_c_minus_2},
                               {"trace_equals_c", r.closing.trace_equals_c},
                               {"det_expression", "-mu*P^m"},
                               {"det_is_minus_mu_pm", r.closing.det_is_minus_mu_pm},
                               {"det_equals_plus_pm", r.closing.det_equals_plus_pm}};
    j["hypothesis_readings"] =
        Json{{"p_ndiv_c", r.reading_p_ndiv_c}, {"c_ndiv_p", r.reading_c_ndiv_p}};
    j["discrepancies"] = r.discrepancies;
    return j;
}

}  // namespace drinfeld
