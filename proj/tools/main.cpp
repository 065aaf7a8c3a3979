#include <CLI11.hpp>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include "drinfeld/errors.hpp"
#include "drinfeld/serialize.hpp"

using namespace drinfeld;

namespace {

struct Opts {
    std::uint32_t p = 2, s = 1;
    unsigned n = 2;
    std::string a1, a2, a3, i1, i2, rho, a;
    unsigned kmax = 12;
    std::uint64_t field_cap = kDefaultFieldCap;
    std::uint64_t point_cap = 1ull << 16;
    unsigned workers = 1;
    std::string format = "json";
    std::string out;
    bool no_timestamp = false;
    bool full = false;
};

void add_field_options(CLI::App* cmd, Opts& o, bool with_n) {
    cmd->add_option("--p", o.p, "characteristic of the base field");
    cmd->add_option("--s", o.s, "q = p^s");
    if (with_n) cmd->add_option("--n", o.n, "degree of L over F_q");
}

void add_output_options(CLI::App* cmd, Opts& o) {
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "omit the generated_at field");
    cmd->add_option("--workers", o.workers, "worker threads for enumeration sweeps");
}

void add_cap_options(CLI::App* cmd, Opts& o) {
    cmd->add_option("--kmax", o.kmax, "largest extension degree searched for torsion")
        ->envname("DRINFELD_KMAX");
    cmd->add_option("--cap", o.field_cap, "largest allowed field size")
        ->envname("DRINFELD_FIELD_CAP");
    cmd->add_option("--point-cap", o.point_cap, "largest allowed torsion point count")
        ->envname("DRINFELD_POINT_CAP");
}

Caps caps_of(const Opts& o) { return Caps{o.field_cap, o.kmax, o.point_cap}; }

void emit(const Opts& o, Json j, const std::string& command) {
    Json out;
    out["schema"] = 1;
    out["command"] = command;
    for (auto& [k, v] : j.items()) out[k] = v;
    if (!o.no_timestamp) {
        char buf[32];
        std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
        out["generated_at"] = buf;
    }
    std::string text = out.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file " + o.out);
        f << text;
    }
}

void emit_text(const Opts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file " + o.out);
        f << text;
    }
}

Json parse_json_arg(const std::string& str, const char* what) {
    try {
        return Json::parse(str);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("cannot parse ") + what + ": " + str);
    }
}

DrinfeldModule module_from_opts(const Opts& o, const FieldCtxPtr& ctx) {
    if (o.a1.empty() || o.a2.empty() || o.a3.empty())
        throw std::invalid_argument("--a1, --a2 and --a3 are required");
    FieldElem a1 = elem_from_json(ctx, parse_json_arg(o.a1, "--a1"));
    FieldElem a2 = elem_from_json(ctx, parse_json_arg(o.a2, "--a2"));
    FieldElem a3 = elem_from_json(ctx, parse_json_arg(o.a3, "--a3"));
    return DrinfeldModule(ctx, a1, a2, a3);
}

Json division_point_row(const DrinfeldModule& dm, const ModuleInvariants& inv,
                        const APoly& rho) {
    const auto& fq = dm.ctx()->fq();
    Json row;
    row["rho"] = to_json(rho);
    row["divides_i2"] = rho.divides(inv.i2);
    bool present = frob_minus_one_quotient(dm, rho).has_value();
    row["quotient_present"] = present;
    bool pre = (inv.p_phi_1 % (rho * rho)).is_zero() &&
               ((inv.cp.c - APoly::from_int(fq, 2)) % rho).is_zero();
    row["preconditions"] = pre;
    row["order_in_end"] = pre ? order_in_endomorphism_ring(dm, rho) : false;
    return row;
}

int cmd_analyze(const Opts& o) {
    FieldCtxPtr ctx = FieldCtx::make(o.p, o.s, o.n, o.field_cap);
    DrinfeldModule dm = module_from_opts(o, ctx);
    ModuleInvariants inv = compute_invariants(dm);
    EnumerationRecord rec = analyze_module(dm);

    Json j;
    j["field"] = field_descriptor(ctx);
    j["module"] = Json{{"a1", to_json(dm.a1())}, {"a2", to_json(dm.a2())},
                       {"a3", to_json(dm.a3())}};
    j["record"] = to_json(rec);
    Json rows = Json::array();
    if (!inv.p_phi_1.is_zero()) {
        for (const APoly& rho : prime_factors(inv.p_phi_1)) {
            if (rho == dm.a_char()) continue;
            rows.push_back(division_point_row(dm, inv, rho));
        }
    }
    if (!o.rho.empty()) {
        APoly rho = poly_from_json(ctx->fq(), parse_json_arg(o.rho, "--rho"));
        rows.push_back(division_point_row(dm, inv, rho));
    }
    j["division_points"] = rows;
    emit(o, j, "analyze");
    return rec.checks.all_ok() ? 0 : 1;
}

int cmd_enumerate(const Opts& o) {
    std::vector<EnumerationRecord> records;
    EnumerationSummary sum =
        enumeration_summary(o.p, o.s, o.n, o.workers, o.full ? &records : nullptr);
    Json j;
    j["field"] = field_descriptor(FieldCtx::make(o.p, o.s, o.n, o.field_cap));
    j["total"] = sum.total;
    j["ordinary"] = sum.ordinary;
    j["cyclic"] = sum.cyclic;
    j["failure_count"] = sum.failures.size();
    Json fails = Json::array();
    for (const auto& r : sum.failures) fails.push_back(to_json(r));
    j["failures"] = fails;
    if (o.full) {
        Json rs = Json::array();
        for (const auto& r : records) rs.push_back(to_json(r));
        j["records"] = rs;
    }
    emit(o, j, "enumerate");
    return sum.failures.empty() ? 0 : 1;
}

int cmd_realize(const Opts& o) {
    if (o.i1.empty() || o.i2.empty())
        throw std::invalid_argument("--i1 and --i2 are required");
    auto fq = base_field(o.p, o.s);
    RealizationTarget target{poly_from_json(fq, parse_json_arg(o.i1, "--i1")),
                             poly_from_json(fq, parse_json_arg(o.i2, "--i2"))};
    RealizeResult r = realize(o.p, o.s, target);
    Json j;
    j["target"] = Json{{"i1", to_json(target.i1)}, {"i2", to_json(target.i2)}};
    j["n"] = r.n;
    j["admissible"] = r.admissible;
    j["found"] = r.found;
    j["scanned"] = r.scanned;
    if (r.witness) j["witness"] = to_json(*r.witness);
    emit(o, j, "realize");
    if (r.found) return 0;
    return r.admissible ? 1 : 0;  // an admissible target with no witness is a counterexample
}

int cmd_census(const Opts& o) {
    CensusReport rep = census(o.p, o.s, o.n, o.workers);
    if (o.format == "csv") {
        emit_text(o, census_csv(rep));
    } else {
        emit(o, to_json(rep), "census");
    }
    return rep.unrealized.empty() ? 0 : 1;
}

int cmd_frobmatrix(const Opts& o) {
    FieldCtxPtr ctx = FieldCtx::make(o.p, o.s, o.n, o.field_cap);
    DrinfeldModule dm = module_from_opts(o, ctx);
    if (o.a.empty()) throw std::invalid_argument("--a is required");
    APoly a = poly_from_json(ctx->fq(), parse_json_arg(o.a, "--a"));
    TorsionModule tm = torsion_points(dm, a, caps_of(o));
    FrobMatrix fm = frobenius_matrix(dm, tm);
    ModuleInvariants inv = compute_invariants(dm);
    auto [b1, b2] = fixed_submodule_structure(dm, tm);
    bool matches = b1 == APoly::gcd(a, inv.i1) && b2 == APoly::gcd(a, inv.i2);

    Json j;
    j["field"] = field_descriptor(ctx);
    j["module"] = Json{{"a1", to_json(dm.a1())}, {"a2", to_json(dm.a2())},
                       {"a3", to_json(dm.a3())}};
    j["frobenius_matrix"] = to_json(fm);
    j["checks"] = Json{{"trace_congruent_to_c", true},
                       {"det_congruent_to_mu_pm", true},
                       {"fixed_kernel", Json::array({to_json(b1), to_json(b2)})},
                       {"matches_structure", matches}};
    emit(o, j, "frobmatrix");
    return matches ? 0 : 1;
}

int cmd_conjecture(const Opts& o) {
    SurveyReport rep = frobenius_matrix_survey(o.p, o.s, o.n, caps_of(o), o.workers);
    emit(o, to_json(rep), "conjecture");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-2 Drinfeld module computations over finite fields"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a file");

    Opts o;
    CLI::App* analyze = app.add_subcommand("analyze", "full report for one module");
    add_field_options(analyze, o, true);
    analyze->add_option("--a1", o.a1, "a1 as a JSON coordinate list");
    analyze->add_option("--a2", o.a2, "a2 as a JSON coordinate list");
    analyze->add_option("--a3", o.a3, "a3 as a JSON coordinate list");
    analyze->add_option("--rho", o.rho, "extra prime to include in the division point table");
    add_cap_options(analyze, o);
    add_output_options(analyze, o);

    CLI::App* enumerate = app.add_subcommand("enumerate", "predicate sweep over all modules");
    add_field_options(enumerate, o, true);
    enumerate->add_flag("--full", o.full, "include every record in the report");
    add_cap_options(enumerate, o);
    add_output_options(enumerate, o);

    CLI::App* realize_cmd = app.add_subcommand("realize", "search for a module with a given structure");
    add_field_options(realize_cmd, o, false);
    realize_cmd->add_option("--i1", o.i1, "larger invariant factor, JSON coefficient list");
    realize_cmd->add_option("--i2", o.i2, "smaller invariant factor, JSON coefficient list");
    add_cap_options(realize_cmd, o);
    add_output_options(realize_cmd, o);

    CLI::App* census_cmd = app.add_subcommand("census", "structure census over all modules");
    add_field_options(census_cmd, o, true);
    add_cap_options(census_cmd, o);
    add_output_options(census_cmd, o);

    CLI::App* frob = app.add_subcommand("frobmatrix", "Frobenius matrix on the a-torsion");
    add_field_options(frob, o, true);
    frob->add_option("--a1", o.a1, "a1 as a JSON coordinate list");
    frob->add_option("--a2", o.a2, "a2 as a JSON coordinate list");
    frob->add_option("--a3", o.a3, "a3 as a JSON coordinate list");
    frob->add_option("--a", o.a, "torsion modulus, JSON coefficient list");
    add_cap_options(frob, o);
    add_output_options(frob, o);

    CLI::App* conj = app.add_subcommand("conjecture", "Frobenius matrix coverage survey");
    add_field_options(conj, o, true);
    add_cap_options(conj, o);
    add_output_options(conj, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(o);
        if (enumerate->parsed()) return cmd_enumerate(o);
        if (realize_cmd->parsed()) return cmd_realize(o);
        if (census_cmd->parsed()) return cmd_census(o);
        if (frob->parsed()) return cmd_frobmatrix(o);
        if (conj->parsed()) return cmd_conjecture(o);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
