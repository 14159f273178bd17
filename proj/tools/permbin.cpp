// permbin — classify which binomials a*x + x^{r(q-1)+1} permute GF(q^2),
// inspect the underlying character-sum machinery, and regenerate the
// bundled coefficient tables.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pb/binomial.hpp"
#include "pb/gf.hpp"
#include "pb/hermite.hpp"
#include "pb/search.hpp"
#include "pb/symbolic.hpp"
#include "pb/verify.hpp"

using json = nlohmann::json;  // map-backed: keys come out sorted
using namespace pb;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kMismatch = 3 };

std::string join_u32(const std::vector<u32>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

json make_meta(const std::string& command, json params) {
    json meta;
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["params"] = std::move(params);
    return meta;
}

void emit_json(const json& meta, const json& records, const json& summary) {
    json doc;
    doc["meta"] = meta;
    doc["records"] = records;
    doc["summary"] = summary;
    std::cout << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------- check

int cmd_check(u32 q, u32 r, std::optional<i64> a_power, const std::string& a_coeffs,
              const std::string& format) {
    PrimePower pp = PrimePower::from_q(q);
    FieldCtx F(pp.p, 2 * pp.n);

    FieldElem a;
    if (a_power) {
        a = F.pow(F.generator(), *a_power);
    } else {
        std::vector<u32> cs;
        std::stringstream ss(a_coeffs);
        std::string tok;
        while (std::getline(ss, tok, ','))
            cs.push_back(static_cast<u32>(std::stoul(tok)));
        a = F.from_coeffs(cs);
    }
    if (a.v == 0) throw CLI::ValidationError("--a-power/--a-coeffs", "a must be nonzero");

    BinomialSpec spec(F, q, r, a);
    const bool pp_verdict = is_permutation(spec);
    const bool zor = zero_only_root(spec);
    const bool hermite = hermite_check(spec);
    const bool has_b = (q + 1) % r == 0;
    FieldElem b = has_b ? b_class(spec).b : F.zero();

    if (format == "json") {
        json rec;
        rec["q"] = q;
        rec["p"] = pp.p;
        rec["n"] = pp.n;
        rec["r"] = r;
        rec["exponent"] = spec.e;
        rec["a_index"] = a.v;
        rec["a_power"] = F.log(a);
        rec["a_coeffs"] = F.coeffs(a);
        if (has_b) {
            rec["b_index"] = b.v;
            rec["b_power"] = F.log(b);
            rec["b_coeffs"] = F.coeffs(b);
        }
        rec["is_permutation"] = pp_verdict;
        rec["zero_only_root"] = zor;
        rec["hermite_check"] = hermite;
        rec["hermite_agrees"] = hermite == pp_verdict;
        json params{{"q", q}, {"r", r}};
        emit_json(make_meta("check", params), json::array({rec}), json::object());
    } else {
        std::printf("q = %u = %u^%u, r = %u, f = a*x + x^%llu over GF(%u)\n", q, pp.p, pp.n, r,
                    static_cast<unsigned long long>(spec.e), static_cast<unsigned>(F.size()));
        std::printf("a = g^%llu  coeffs [%s]\n", static_cast<unsigned long long>(F.log(a)),
                    join_u32(F.coeffs(a)).c_str());
        if (has_b)
            std::printf("b = a^%u = g^%llu  coeffs [%s]\n", (q + 1) / r,
                        static_cast<unsigned long long>(F.log(b)), join_u32(F.coeffs(b)).c_str());
        else
            std::printf("b undefined (%u does not divide q+1)\n", r);
        std::printf("is_permutation : %s\n", pp_verdict ? "yes" : "no");
        std::printf("zero_only_root : %s\n", zor ? "yes" : "no");
        std::printf("hermite_check  : %s (%s)\n", hermite ? "yes" : "no",
                    hermite == pp_verdict ? "agrees" : "DISAGREES");
    }
    return pp_verdict ? kOk : kNegative;
}

// ---------------------------------------------------------------- search

int cmd_search(u32 r, u32 q_max, const std::string& format, unsigned jobs, double cross_check) {
    SearchOptions opts;
    opts.jobs = jobs;
    opts.cross_check_fraction = cross_check;

    std::vector<ClassificationReport> reports;
    for (const PrimePower& pp : enumerate_prime_powers(q_max, r)) {
        if (pp.q < r) continue;
        reports.push_back(classify(pp.q, r, opts));
    }

    if (format == "json") {
        json records = json::array();
        json summaries = json::array();
        for (const auto& rep : reports) {
            for (const auto& row : rep.rows) {
                records.push_back(json{{"q", row.q},
                                       {"p", row.p},
                                       {"n", row.n},
                                       {"r", row.r},
                                       {"b_index", row.b_index},
                                       {"a_rep_index", row.a_rep_index},
                                       {"is_pp", row.is_pp},
                                       {"matched_theorem_case", row.matched_case}});
            }
            summaries.push_back(json{{"q", rep.q},
                                     {"classes", rep.rows.size()},
                                     {"pp_classes", rep.pp_count},
                                     {"predicate_diffs", rep.diff_b.size()}});
        }
        json params{{"r", r}, {"q_max", q_max}, {"jobs", jobs}};
        emit_json(make_meta("search", params), records, json{{"per_q", summaries}});
    } else if (format == "csv") {
        std::printf("q,p,n,r,b_index,a_rep_index,is_pp,matched_theorem_case\n");
        for (const auto& rep : reports)
            for (const auto& row : rep.rows)
                std::printf("%u,%u,%u,%u,%u,%u,%d,%d\n", row.q, row.p, row.n, row.r, row.b_index,
                            row.a_rep_index, row.is_pp ? 1 : 0, row.matched_case);
        for (const auto& rep : reports)
            std::fprintf(stderr, "summary q=%u classes=%zu pp=%u diffs=%zu\n", rep.q,
                         rep.rows.size(), rep.pp_count, rep.diff_b.size());
    } else {
        std::printf("%6s %4s %3s %3s %10s %12s %6s %8s\n", "q", "p", "n", "r", "b_index",
                    "a_rep_index", "is_pp", "case");
        for (const auto& rep : reports)
            for (const auto& row : rep.rows)
                std::printf("%6u %4u %3u %3u %10u %12u %6s %8d\n", row.q, row.p, row.n, row.r,
                            row.b_index, row.a_rep_index, row.is_pp ? "yes" : "no",
                            row.matched_case);
        std::printf("--\n");
        for (const auto& rep : reports)
            std::printf("summary q=%u: %zu classes, %u permutation classes, %zu predicate diffs\n",
                        rep.q, rep.rows.size(), rep.pp_count, rep.diff_b.size());
    }
    return kOk;
}

// ---------------------------------------------------------------- scan

int cmd_scan(u32 r, u32 q_max, const std::string& format, unsigned jobs) {
    SearchOptions opts;
    opts.jobs = jobs;
    auto findings = conjecture_scan(r, q_max, opts);
    if (format == "json") {
        json records = json::array();
        u64 sporadic = 0;
        for (const auto& f : findings) {
            records.push_back(json{{"q", f.q},
                                   {"b_index", f.b_index},
                                   {"a_rep_power", f.a_rep_power},
                                   {"b_is_rth_root", f.b_is_rth_root}});
            if (!f.b_is_rth_root) ++sporadic;
        }
        json params{{"r", r}, {"q_max", q_max}};
        emit_json(make_meta("scan", params), records,
                  json{{"findings", findings.size()}, {"sporadic", sporadic}});
    } else {
        std::printf("%6s %10s %12s %s\n", "q", "b_index", "a_rep_power", "kind");
        u64 sporadic = 0;
        for (const auto& f : findings) {
            std::printf("%6u %10u %12u %s\n", f.q, f.b_index, f.a_rep_power,
                        f.b_is_rth_root ? "root-of-unity" : "sporadic");
            if (!f.b_is_rth_root) ++sporadic;
        }
        std::printf("-- %zu findings, %llu sporadic\n", findings.size(),
                    static_cast<unsigned long long>(sporadic));
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& target, std::optional<u32> q_max, unsigned jobs,
               unsigned samples) {
    if (target == "thm1.1" || target == "thm1.2") {
        const u32 r = target == "thm1.1" ? 5 : 7;
        SearchOptions opts;
        opts.jobs = jobs;
        TheoremVerification v = verify_theorem(r, q_max.value_or(default_q_max(r)), opts);
        for (const auto& res : v.per_q) {
            if (res.divides)
                std::printf("q=%-4u classes checked exhaustively: %u permutation classes, %s\n",
                            res.q, res.pp_classes,
                            res.pass ? "matches case table"
                                     : ("DIFF at b in {" + join_u32(res.diff_b) + "}").c_str());
            else
                std::printf("q=%-4u r does not divide q+1: no permutations (%s), %s\n", res.q,
                            res.exhaustive ? "all a" : "sampled a", res.pass ? "ok" : "VIOLATED");
            if (!res.pass) {
                std::printf("verify %s: FAIL (first mismatch at q=%u)\n", target.c_str(), res.q);
                return kMismatch;
            }
        }
        std::printf("verify %s: PASS (%zu prime powers, %u <= q <= %u)\n", target.c_str(),
                    v.per_q.size(), r, v.q_max);
        return kOk;
    }

    CheckResult res;
    if (target == "appendix")
        res = verify_fixture_regeneration();
    else if (target == "resultants") {
        res = verify_resultant_gcd();
        if (res.pass) {
            CheckResult chars = verify_char_gcds();
            res.pass = chars.pass;
            res.detail += "; " + chars.detail;
        }
    }
    else if (target == "lemma-2.4")
        res = verify_closed_form_equivalence(samples);
    else if (target == "lemma-2.6")
        res = verify_special_value_pattern();
    else
        throw CLI::ValidationError("target", "unknown verify target: " + target);
    std::printf("verify %s: %s\n  %s\n", target.c_str(), res.pass ? "PASS" : "FAIL",
                res.detail.c_str());
    return res.pass ? kOk : kMismatch;
}

// ---------------------------------------------------------------- galpha

int cmd_galpha(u32 alpha, const std::string& format) {
    GPoly gp = extract_g(alpha);
    bool have_fixture = true;
    bool matches = false;
    try {
        matches = (gp.g == fixture_g(alpha));
    } catch (const std::invalid_argument&) {
        have_fixture = false;
    }
    const std::string status = have_fixture ? (matches ? "match" : "MISMATCH")
                                            : "experimental (no fixture)";
    if (format == "json") {
        json records = json::array();
        for (std::size_t i = 0; i < gp.g.c.size(); ++i)
            records.push_back(json{{"degree", i}, {"coefficient", gp.g.c[i].get_str()}});
        json params{{"alpha", alpha}};
        emit_json(make_meta("galpha", params), records,
                  json{{"alpha", alpha},
                       {"e", gp.e},
                       {"degree", gp.g.degree()},
                       {"fixture", status}});
    } else if (format == "csv") {
        std::printf("degree,coefficient\n");
        for (std::size_t i = 0; i < gp.g.c.size(); ++i)
            std::printf("%zu,%s\n", i, gp.g.c[i].get_str().c_str());
        std::fprintf(stderr, "alpha=%u e=%u degree=%d fixture=%s\n", alpha, gp.e, gp.g.degree(),
                     status.c_str());
    } else {
        std::printf("g_%u: degree %d, denominator power e = %u, fixture: %s\n", alpha,
                    gp.g.degree(), gp.e, status.c_str());
        for (std::size_t i = 0; i < gp.g.c.size(); ++i)
            std::printf("  x^%-3zu %s\n", i, gp.g.c[i].get_str().c_str());
    }
    return (have_fixture && !matches) ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation binomial toolkit: brute-force classification over GF(q^2), "
                 "character-sum cross-checks, and exact coefficient-table regeneration"};
    app.require_subcommand(1);
    std::string fixtures;
    app.add_option("--fixtures", fixtures, "directory holding g_poly_fixtures.txt")
        ->envname("PB_FIXTURE_DIR");

    // check
    auto* check = app.add_subcommand("check", "test one binomial for the permutation property");
    u32 ck_q = 0, ck_r = 5;
    i64 ck_apow = 0;
    std::string ck_acoeffs, ck_format = "table";
    check->add_option("--q", ck_q, "base field order (prime power); f acts on GF(q^2)")->required();
    check->add_option("--r", ck_r, "odd prime exponent parameter");
    auto* opt_pow = check->add_option("--a-power", ck_apow, "a = g^k for the canonical generator g");
    auto* opt_cof = check->add_option("--a-coeffs", ck_acoeffs, "a as comma-separated coefficients");
    opt_pow->excludes(opt_cof);
    check->add_option("--format", ck_format, "table|json")->check(CLI::IsMember({"table", "json"}));

    // search
    auto* search = app.add_subcommand("search", "classify all b-classes for every q with r | q+1");
    u32 se_r = 5, se_qmax = 0;
    unsigned se_jobs = 1;
    double se_cross = 0.0;
    std::string se_format = "table";
    search->add_option("--r", se_r, "odd prime exponent parameter");
    search->add_option("--q-max", se_qmax, "sweep bound (default depends on r)");
    search->add_option("--jobs", se_jobs, "worker threads per classification");
    search->add_option("--cross-check", se_cross, "fraction of classes re-tested via power sums");
    search->add_option("--format", se_format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // scan
    auto* scan = app.add_subcommand("scan", "list permutation classes split by b an r-th root of unity");
    u32 sc_r = 5, sc_qmax = 0;
    unsigned sc_jobs = 1;
    std::string sc_format = "table";
    scan->add_option("--r", sc_r, "odd prime exponent parameter");
    scan->add_option("--q-max", sc_qmax, "sweep bound");
    scan->add_option("--jobs", sc_jobs, "worker threads");
    scan->add_option("--format", sc_format, "table|json")->check(CLI::IsMember({"table", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run one built-in verification target");
    std::string vf_target;
    u32 vf_qmax = 0;
    unsigned vf_jobs = 1, vf_samples = 20;
    verify->add_option("target", vf_target, "thm1.1|thm1.2|appendix|resultants|lemma-2.4|lemma-2.6")
        ->required()
        ->check(CLI::IsMember({"thm1.1", "thm1.2", "appendix", "resultants", "lemma-2.4", "lemma-2.6"}));
    verify->add_option("--q-max", vf_qmax, "override the sweep bound");
    verify->add_option("--jobs", vf_jobs, "worker threads");
    verify->add_option("--samples", vf_samples, "random a per (q, alpha) for lemma-2.4");

    // galpha
    auto* galpha = app.add_subcommand("galpha", "emit the exact coefficient table g_alpha");
    u32 ga_alpha = 0;
    std::string ga_format = "table";
    galpha->add_option("alpha", ga_alpha, "alpha with alpha+1 divisible by 5")->required();
    galpha->add_option("--format", ga_format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (!fixtures.empty()) set_fixture_dir(fixtures);

    try {
        if (check->parsed()) {
            if (opt_pow->count() + opt_cof->count() != 1)
                throw CLI::ValidationError("check", "exactly one of --a-power/--a-coeffs required");
            return cmd_check(ck_q, ck_r,
                             opt_pow->count() ? std::optional<i64>(ck_apow) : std::nullopt,
                             ck_acoeffs, ck_format);
        }
        if (search->parsed())
            return cmd_search(se_r, se_qmax ? se_qmax : default_q_max(se_r), se_format, se_jobs,
                              se_cross);
        if (scan->parsed())
            return cmd_scan(sc_r, sc_qmax ? sc_qmax : default_q_max(sc_r), sc_format, sc_jobs);
        if (verify->parsed())
            return cmd_verify(vf_target, vf_qmax ? std::optional<u32>(vf_qmax) : std::nullopt,
                              vf_jobs, vf_samples);
        if (galpha->parsed()) return cmd_galpha(ga_alpha, ga_format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
