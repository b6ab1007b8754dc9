#pragma once

/// Command-line front end: construction, analysis, repair and bound
/// certification as reproducible JSON (or aligned-text) reports.
/// Exit codes: 0 success, 1 a verified prediction was refuted, 2 usage
/// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrc/analyze.hpp"

namespace lrc {

constexpr const char* kToolVersion = "1.0.0";

namespace clidetail {

inline std::vector<int64_t> parse_csv(const std::string& s) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

inline void render_table(const json& j, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
                out << pad << key << ":\n";
                render_table(v, out, indent + 1);
            } else {
                out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        int idx = 0;
        for (const auto& v : j) {
            out << pad << "- [" << idx++ << "]\n";
            render_table(v, out, indent + 1);
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

inline void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "table")
        render_table(j, out);
    else
        out << j.dump(2) << "\n";
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

struct CommonFlags {
    uint64_t budget = kDefaultBudget;
    unsigned jobs = 0;
    bool step_search = false;
    bool no_profile = false;
    bool no_projection = false;
    int rmax = -1;
    std::string kopt_path;
    std::string out_path;
    std::string format = "json";
    bool do_analyze = false;
};

inline void add_common(CLI::App* cmd, CommonFlags& fl, bool with_analyze_flag) {
    cmd->add_option("--budget", fl.budget, "codeword enumeration budget (default 2^26)");
    cmd->add_option("--jobs", fl.jobs, "enumeration worker threads (0 = all cores)");
    cmd->add_flag("--step-search", fl.step_search, "maximize the BCH run over all steps coprime to n");
    cmd->add_flag("--no-profile", fl.no_profile, "skip the locality/availability profile");
    cmd->add_flag("--no-projection", fl.no_projection, "skip the additive projection");
    cmd->add_option("--rmax", fl.rmax, "locality search radius (default: claimed r)");
    cmd->add_option("--kopt-table", fl.kopt_path, "extra k_opt table file (merged over the bundled one)");
    cmd->add_option("--out", fl.out_path, "write the constructed code to this JSON file");
    cmd->add_option("--format", fl.format, "output format: json | table")
        ->check(CLI::IsMember({"json", "table"}));
    if (with_analyze_flag) cmd->add_flag("--analyze", fl.do_analyze, "run the full verification suite");
}

inline KOptProvider make_provider(const CommonFlags& fl) {
    KOptProvider p = KOptProvider::bundled();
    if (!fl.kopt_path.empty()) p.merge(KOptProvider::from_file(fl.kopt_path));
    return p;
}

inline AnalyzeOptions make_options(const CommonFlags& fl) {
    AnalyzeOptions opt;
    opt.budget = fl.budget;
    opt.jobs = fl.jobs;
    opt.step_search = fl.step_search;
    opt.with_profile = !fl.no_profile;
    opt.with_projection = !fl.no_projection;
    if (fl.rmax >= 0) opt.rmax = static_cast<uint32_t>(fl.rmax);
    return opt;
}

inline json invocation(const std::string& command, const json& params) {
    return json{{"command", command}, {"parameters", params}, {"version", kToolVersion}};
}

inline int finish_construct(const ConstructionResult& res, const CommonFlags& fl, const json& inv,
                            std::ostream& out) {
    if (!fl.out_path.empty()) {
        std::ofstream f(fl.out_path);
        if (!f) throw std::runtime_error("cannot write " + fl.out_path);
        f << construction_to_json(res).dump(2) << "\n";
    }
    json rep;
    std::vector<std::string> refuted;
    if (fl.do_analyze) {
        rep = full_report(res, make_provider(fl), make_options(fl), refuted);
    } else {
        rep = construction_to_json(res);
    }
    rep["invocation"] = inv;
    emit(rep, fl.format, out);
    return refuted.empty() ? 0 : 1;
}

}  // namespace clidetail

/// Entry point shared by the binary and the tests; args exclude the program
/// name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace clidetail;
    CLI::App app{"construct and verify locally repairable cyclic and linear codes over small fields"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // field
    auto* field_cmd = app.add_subcommand("field", "print the canonical GF(p^s) descriptor");
    uint32_t fp = 2, fs = 1;
    std::string field_format = "json";
    field_cmd->add_option("--p", fp, "characteristic")->required();
    field_cmd->add_option("--s", fs, "extension degree")->required();
    field_cmd->add_option("--format", field_format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // coset
    auto* coset_cmd = app.add_subcommand("coset", "q-cyclotomic coset of a residue modulo n");
    uint32_t cn = 0, cq = 2, ci = 0;
    std::string coset_format = "json";
    coset_cmd->add_option("--n", cn, "length")->required();
    coset_cmd->add_option("--q", cq, "field order")->required();
    coset_cmd->add_option("--i", ci, "residue")->required();
    coset_cmd->add_option("--format", coset_format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // construct + kinds
    auto* construct_cmd = app.add_subcommand("construct", "build one of the code families");
    construct_cmd->require_subcommand(1);

    CommonFlags rev_fl;
    uint32_t rev_m = 5;
    auto* rev_cmd = construct_cmd->add_subcommand("reversible", "binary 2-local code of length 2^m+1");
    rev_cmd->add_option("--m", rev_m, "odd exponent")->required();
    add_common(rev_cmd, rev_fl, true);

    CommonFlags sim_fl;
    uint32_t sim_a = 3, sim_m = 6;
    auto* sim_cmd = construct_cmd->add_subcommand("simplex", "binary code with Simplex locality");
    sim_cmd->add_option("--a", sim_a, "Simplex exponent")->required();
    sim_cmd->add_option("--m", sim_m, "length exponent (a | m)")->required();
    add_common(sim_cmd, sim_fl, true);

    CommonFlags rm_fl;
    uint32_t rm_q = 3, rm_m = 4;
    auto* rm_cmd = construct_cmd->add_subcommand("rm", "q-ary code with Reed-Muller locality");
    rm_cmd->add_option("--q", rm_q, "field order (> 2)")->required();
    rm_cmd->add_option("--m", rm_m, "even length exponent")->required();
    add_common(rm_cmd, rm_fl, true);

    CommonFlags cc_fl;
    uint32_t cc_r = 3;
    auto* cc_cmd = construct_cmd->add_subcommand("concat", "concatenated r-local binary code");
    cc_cmd->add_option("--r", cc_r, "locality")->required();
    add_common(cc_cmd, cc_fl, true);

    CommonFlags pr_fl;
    uint32_t pr_n = 0;
    std::string pr_lpath, pr_extra;
    auto* pr_cmd = construct_cmd->add_subcommand("product", "block-replicated cyclic code from a locality code");
    pr_cmd->add_option("--L", pr_lpath, "locality code JSON file (cyclic)")->required();
    pr_cmd->add_option("--n", pr_n, "target length")->required();
    pr_cmd->add_option("--R", pr_extra, "extra residues, comma separated");
    add_common(pr_cmd, pr_fl, true);

    CommonFlags cy_fl;
    uint32_t cy_n = 0, cy_q = 2;
    std::string cy_defset;
    auto* cy_cmd = construct_cmd->add_subcommand("cyclic", "cyclic code from an explicit defining set");
    cy_cmd->add_option("--n", cy_n, "length")->required();
    cy_cmd->add_option("--q", cy_q, "field order")->required();
    cy_cmd->add_option("--defset", cy_defset, "residues, comma separated")->required();
    add_common(cy_cmd, cy_fl, false);

    // analyze
    CommonFlags an_fl;
    std::string an_code;
    auto* an_cmd = app.add_subcommand("analyze", "verify a stored code or construction result");
    an_cmd->add_option("--code", an_code, "code JSON file")->required();
    add_common(an_cmd, an_fl, false);

    // repair
    CommonFlags rp_fl;
    std::string rp_code, rp_word, rp_erasures;
    auto* rp_cmd = app.add_subcommand("repair", "repair erased symbols through local parity checks");
    rp_cmd->add_option("--code", rp_code, "code JSON file")->required();
    rp_cmd->add_option("--word", rp_word, "received word, comma-separated symbol indices")->required();
    rp_cmd->add_option("--erasures", rp_erasures, "erased positions, comma separated")->required();
    add_common(rp_cmd, rp_fl, false);

    // bounds
    CommonFlags bd_fl;
    uint32_t bd_n = 0, bd_d = 0, bd_r = 0, bd_q = 2, bd_delta = 2;
    int64_t bd_k = -1;
    auto* bd_cmd = app.add_subcommand("bounds", "print the bound report for given parameters");
    bd_cmd->add_option("--n", bd_n, "length")->required();
    bd_cmd->add_option("--d", bd_d, "distance")->required();
    bd_cmd->add_option("--r", bd_r, "locality")->required();
    bd_cmd->add_option("--q", bd_q, "field order");
    bd_cmd->add_option("--delta", bd_delta, "per-block erasure tolerance");
    bd_cmd->add_option("--k", bd_k, "dimension (enables the Singleton d-bound)");
    add_common(bd_cmd, bd_fl, false);

    // certify
    CommonFlags ct_fl;
    std::string ct_code;
    auto* ct_cmd = app.add_subcommand("certify", "dimension-optimality certificate for a construction result");
    ct_cmd->add_option("--code", ct_code, "construction result JSON file")->required();
    add_common(ct_cmd, ct_fl, false);

    // parse
    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("lrc");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (*field_cmd) {
            const Field& f = Field::get(fp, fs);
            json rep{{"invocation", invocation("field", json{{"p", fp}, {"s", fs}})},
                     {"field", field_to_json(f)}};
            emit(rep, field_format, out);
            return 0;
        }
        if (*coset_cmd) {
            const auto coset = cyclotomic_coset(ci, cn, cq);
            json rep{{"invocation", invocation("coset", json{{"n", cn}, {"q", cq}, {"i", ci}})},
                     {"coset", coset},
                     {"size", coset.size()}};
            emit(rep, coset_format, out);
            return 0;
        }
        if (*rev_cmd)
            return finish_construct(reversible_binary(rev_m), rev_fl,
                                    invocation("construct reversible", json{{"m", rev_m}}), out);
        if (*sim_cmd)
            return finish_construct(simplex_lrc(sim_a, sim_m), sim_fl,
                                    invocation("construct simplex", json{{"a", sim_a}, {"m", sim_m}}), out);
        if (*rm_cmd)
            return finish_construct(rm_qary(rm_q, rm_m), rm_fl,
                                    invocation("construct rm", json{{"q", rm_q}, {"m", rm_m}}), out);
        if (*cc_cmd)
            return finish_construct(concatenated_rlocal(cc_r), cc_fl,
                                    invocation("construct concat", json{{"r", cc_r}}), out);
        if (*pr_cmd) {
            json lj = load_json(pr_lpath);
            if (lj.contains("construction")) lj = lj.at("code");
            if (lj.at("type") != "cyclic")
                throw std::invalid_argument("--L must name a cyclic code");
            const CyclicCode l = cyclic_from_json(lj);
            const auto extra = parse_csv(pr_extra);
            return finish_construct(
                product_lrc(l, pr_n, extra), pr_fl,
                invocation("construct product", json{{"L", pr_lpath}, {"n", pr_n}, {"R", pr_extra}}), out);
        }
        if (*cy_cmd) {
            const Field& f = Field::get(bndetail::prime_power(cy_q).first, bndetail::prime_power(cy_q).second);
            const auto norm = normalize_defset(cy_n, cy_q, parse_csv(cy_defset));
            CyclicCode code(f, norm.ds);
            json rep = cyclic_to_json(code);
            rep["was_closed"] = norm.was_closed;
            rep["bch"] = bch_bound(norm.ds, cy_fl.step_search);
            rep["invocation"] =
                invocation("construct cyclic", json{{"n", cy_n}, {"q", cy_q}, {"defset", cy_defset}});
            if (!cy_fl.out_path.empty()) {
                std::ofstream fo(cy_fl.out_path);
                if (!fo) throw std::runtime_error("cannot write " + cy_fl.out_path);
                fo << cyclic_to_json(code).dump(2) << "\n";
            }
            emit(rep, cy_fl.format, out);
            return 0;
        }
        if (*an_cmd) {
            const json doc = load_json(an_code);
            const json inv = invocation("analyze", json{{"code", an_code}, {"budget", an_fl.budget}});
            if (doc.contains("construction")) {
                const auto res = construction_from_json(doc);
                std::vector<std::string> refuted;
                json rep = full_report(res, make_provider(an_fl), make_options(an_fl), refuted);
                rep["invocation"] = inv;
                emit(rep, an_fl.format, out);
                return refuted.empty() ? 0 : 1;
            }
            // bare code: distance / bch / optional profile
            std::optional<CyclicCode> cyc;
            const LinearCode code = code_as_linear(doc, cyc);
            json rep{{"invocation", inv},
                     {"code", json{{"n", code.n()}, {"k", code.k()}, {"q", code.field().order()}}}};
            if (cyc) rep["bch"] = json{{"value", bch_bound(cyc->defining_set(), an_fl.step_search)},
                                       {"method", "bch"}};
            try {
                json jd = weight_report_to_json(weight_report(code, an_fl.budget, an_fl.jobs));
                jd["method"] = "enumeration";
                jd["exact"] = true;
                rep["distance"] = std::move(jd);
            } catch (const EnumerationInfeasible&) {
                rep["distance"] = json{{"exact", false}, {"method", "bound_only"}};
            }
            if (an_fl.rmax >= 0) {
                const auto prof = locality_availability_profile(code, static_cast<uint32_t>(an_fl.rmax));
                rep["locality"] = profile_to_json(prof);
                rep["locality"]["method"] = "rank_search";
            }
            emit(rep, an_fl.format, out);
            return 0;
        }
        if (*rp_cmd) {
            const json doc = load_json(rp_code);
            std::optional<CyclicCode> cyc;
            int64_t claimed_r = -1;
            LinearCode code = [&]() -> LinearCode {
                if (doc.contains("construction")) {
                    const auto res = construction_from_json(doc);
                    claimed_r = res.predicted.r;
                    return res.code;
                }
                return code_as_linear(doc, cyc);
            }();
            const uint32_t rmax = rp_fl.rmax >= 0 ? static_cast<uint32_t>(rp_fl.rmax)
                                  : claimed_r >= 0 ? static_cast<uint32_t>(claimed_r)
                                                   : throw std::invalid_argument("--rmax required for bare codes");
            const auto prof = locality_availability_profile(code, rmax);
            const auto wordcsv = parse_csv(rp_word);
            std::vector<uint32_t> word(wordcsv.begin(), wordcsv.end());
            const auto erascsv = parse_csv(rp_erasures);
            std::vector<uint32_t> erasures(erascsv.begin(), erascsv.end());
            const auto outc = local_repair(code, word, erasures, prof);
            json reads = json::array();
            for (const auto& [i, cnt] : outc.reads) reads.push_back(json{{"i", i}, {"symbols_read", cnt}});
            json rep{{"invocation", invocation("repair", json{{"code", rp_code}, {"erasures", rp_erasures}})},
                     {"repaired_word", outc.word},
                     {"residual", outc.residual},
                     {"reads", reads},
                     {"complete", outc.residual.empty()}};
            emit(rep, rp_fl.format, out);
            return 0;
        }
        if (*bd_cmd) {
            const auto provider = make_provider(bd_fl);
            json rep{{"invocation",
                      invocation("bounds", json{{"n", bd_n}, {"d", bd_d}, {"r", bd_r}, {"q", bd_q}})}};
            rep["cm"] = cm_to_json(cm_bound(bd_n, bd_d, bd_r, provider, bd_q));
            const auto kv = kopt_upper(bd_n, bd_d, bd_q, provider);
            rep["kopt"] = json{{"k", kv.k}, {"source", kv.source}};
            if (bd_k > 0)
                rep["generalized_singleton"] =
                    generalized_singleton(bd_n, static_cast<uint32_t>(bd_k), bd_r, bd_delta);
            emit(rep, bd_fl.format, out);
            return 0;
        }
        if (*ct_cmd) {
            const auto res = construction_from_json(load_json(ct_code));
            CertifyInput ci;
            ci.budget = ct_fl.budget;
            try {
                ci.d_exact = weight_report(res.code, ct_fl.budget, ct_fl.jobs).d;
            } catch (const EnumerationInfeasible&) {
            }
            try {
                const auto proj = project_additive(res.code, res.locality_code, res.blocks(), ct_fl.budget,
                                                   ct_fl.jobs, ci.d_exact ? *ci.d_exact : res.predicted.d_lb);
                ci.d_prime_exact = proj.d_prime;
            } catch (const EnumerationInfeasible&) {
            }
            const auto brep = certify_dimension_optimality(res, make_provider(ct_fl), ci);
            json rep{{"invocation", invocation("certify", json{{"code", ct_code}})},
                     {"bounds", bound_report_to_json(brep)},
                     {"k", res.code.k()}};
            emit(rep, ct_fl.format, out);
            return brep.bound_violated ? 1 : 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace lrc
