#include "fibgf/cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "fibgf/classifier.hpp"
#include "fibgf/error.hpp"
#include "fibgf/pell_descent.hpp"
#include "fibgf/quad_ring.hpp"
#include "fibgf/sequences.hpp"

namespace fibgf::cli {

namespace {

using nlohmann::json;

struct Output {
    bool as_json = false;
    std::string out_path;
    std::string subcommand;
    json params = nullptr;
    json result = nullptr;
    std::string human;

    void line(const std::string& s) {
        human += s;
        human += '\n';
    }

    void emit() const {
        std::string text;
        if (as_json) {
            json doc{{"subcommand", subcommand},
                     {"params", params},
                     {"result", result},
                     {"error", nullptr}};
            text = doc.dump(2) + "\n";
        } else {
            text = human;
        }
        std::cout << text;
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw_precondition("cannot open output file " + out_path);
            f << text;
        }
    }
};

json json_rat(const Rat& r) {
    return r.str();
}

json json_poly(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.num().get_str() + "/" + c.den().get_str());
    return json{{"text", format_poly(p)}, {"coeffs", coeffs}};
}

json json_ratfn(const RatFn& f) {
    return json{{"text", format_ratfn(f)}, {"num", json_poly(f.num())}, {"den", json_poly(f.den())}};
}

unsigned long checked_positive(unsigned long v, const char* what) {
    if (v == 0) throw_precondition(std::string(what) + " must be a positive integer");
    return v;
}

struct Common {
    unsigned long a = 0, b = 0;
    Params make_params() const { return Params(Int(a), Int(b)); }
};

void add_params_flags(CLI::App* sub, Common& c) {
    sub->add_option("--a", c.a, "recurrence coefficient a (positive)")->required();
    sub->add_option("--b", c.b, "recurrence coefficient b (positive)")->required();
}

void add_output_flags(CLI::App* sub, Output& out) {
    sub->add_flag("--json", out.as_json, "emit a JSON object instead of text");
    sub->add_option("--out", out.out_path, "also write the output to this file");
}

json json_params(const Common& c) {
    return json{{"a", c.a}, {"b", c.b}};
}

void render_classify(Output& out, const ClassifyResult& r) {
    json j{{"verdict", verdict_name(r.verdict)}};
    out.line(std::string("verdict: ") + verdict_name(r.verdict));
    if (r.verdict != Verdict::NotInteger) {
        j["index"] = r.index;
        j["value"] = json_poly(*r.value);
        j["witness"] = json_ratfn(*r.witness);
        out.line("index: " + std::to_string(r.index));
        out.line("value: " + format_poly(*r.value));
        out.line("witness: " + format_ratfn(*r.witness));
    }
    out.result = j;
}

void render_classify_rational(Output& out, const ClassifyRationalResult& r) {
    json j{{"verdict", verdict_name(r.verdict)}};
    out.line(std::string("verdict: ") + verdict_name(r.verdict));
    if (r.verdict != Verdict::NotInteger) {
        j["index"] = r.index;
        j["value"] = json_rat(*r.value);
        j["witness"] = json_rat(*r.witness);
        out.line("index: " + std::to_string(r.index));
        out.line("value: " + r.value->str());
        out.line("witness: " + r.witness->str());
    }
    out.result = j;
}

int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::InternalConsistency ? 2 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Exact arithmetic for generalized Fibonacci/Lucas polynomial sequences: "
                 "generating-function evaluation, integrality classification, Pell descent, "
                 "and quadratic-ring checks"};
    app.require_subcommand(1);

    Output out;

    // seq
    struct {
        Common c;
        std::string kind = "F";
        int n = 0;
        std::string at;
        unsigned long d = 1;
    } seq_args;
    auto* seq = app.add_subcommand("seq", "print F_n(x) or L_n(x), optionally evaluated at a point");
    add_params_flags(seq, seq_args.c);
    seq->add_option("--kind", seq_args.kind, "F or L")->check(CLI::IsMember({"F", "L"}));
    seq->add_option("--n", seq_args.n, "index n >= 0")->required();
    seq->add_option("--at", seq_args.at, "evaluation point, e.g. \"1 - 1/2*sqrt(2)\"");
    seq->add_option("--d", seq_args.d, "square-free d for the evaluation point (default 1)");
    add_output_flags(seq, out);
    seq->callback([&] {
        Params params = seq_args.c.make_params();
        out.subcommand = "seq";
        out.params = json_params(seq_args.c);
        SeqKind kind = seq_args.kind == "F" ? SeqKind::Fib : SeqKind::Lucas;
        if (seq_args.n < 0) throw_precondition("n must be non-negative");
        if (seq_args.at.empty()) {
            Poly p = kind == SeqKind::Fib ? fib_poly(params, seq_args.n)
                                          : lucas_poly(params, seq_args.n);
            out.result = json{{"kind", seq_args.kind}, {"n", seq_args.n}, {"poly", json_poly(p)}};
            out.line(seq_args.kind + "_" + std::to_string(seq_args.n) + "(x) = " + format_poly(p));
        } else {
            Int d(checked_positive(seq_args.d, "d"));
            QuadNum point = parse_quad(seq_args.at, d);
            QuadNum value = seq_at(params, kind, seq_args.n, point);
            out.params["d"] = seq_args.d;
            out.result = json{{"kind", seq_args.kind},
                              {"n", seq_args.n},
                              {"point", format_quad(point)},
                              {"value", format_quad(value)}};
            out.line(seq_args.kind + "_" + std::to_string(seq_args.n) + "(" +
                     format_quad(point) + ") = " + format_quad(value));
        }
    });

    // identities
    struct {
        Common c;
        int max_n = 10;
    } id_args;
    auto* ident = app.add_subcommand("identities", "check the identity toolbox up to an index bound");
    add_params_flags(ident, id_args.c);
    ident->add_option("--max-n", id_args.max_n, "largest n to check")->required();
    add_output_flags(ident, out);
    ident->callback([&] {
        Params params = id_args.c.make_params();
        out.subcommand = "identities";
        out.params = json_params(id_args.c);
        if (id_args.max_n < 1) throw_precondition("--max-n must be at least 1");
        static const IdentityId all[] = {IdentityId::I5,  IdentityId::I6,  IdentityId::I7,
                                         IdentityId::I8,  IdentityId::I9,  IdentityId::I10,
                                         IdentityId::I11, IdentityId::I12, IdentityId::I13,
                                         IdentityId::I14, IdentityId::Norm};
        json checks = json::array();
        bool all_ok = true;
        for (IdentityId id : all) {
            int from = identity_min_n(id);
            bool ok = true;
            for (int n = from; n <= id_args.max_n; ++n) ok = ok && check_identity(params, id, n);
            all_ok = all_ok && ok;
            checks.push_back(json{{"id", identity_name(id)},
                                  {"n_from", from},
                                  {"n_to", id_args.max_n},
                                  {"ok", ok}});
            out.line(std::string(identity_name(id)) + ": " + (ok ? "ok" : "FAILED") + " (n = " +
                     std::to_string(from) + ".." + std::to_string(id_args.max_n) + ")");
        }
        out.result = json{{"checks", checks}, {"all_ok", all_ok}};
        out.line(std::string("all: ") + (all_ok ? "ok" : "FAILED"));
        if (!all_ok) throw_internal("an identity check failed");
    });

    // descend
    struct {
        Common c;
        std::string p, q;
    } desc_args;
    auto* desc = app.add_subcommand("descend", "name the index of a polynomial Pell solution");
    add_params_flags(desc, desc_args.c);
    desc->add_option("--p", desc_args.p, "polynomial P(x)")->required();
    desc->add_option("--q", desc_args.q, "polynomial Q(x)")->required();
    add_output_flags(desc, out);
    desc->callback([&] {
        Params params = desc_args.c.make_params();
        out.subcommand = "descend";
        out.params = json_params(desc_args.c);
        DescentResult r = descend(params, parse_poly(desc_args.p), parse_poly(desc_args.q));
        json trace = json::array();
        std::string trace_text;
        for (auto [dp, dq] : r.trace) {
            trace.push_back(json::array({dp, dq}));
            if (!trace_text.empty()) trace_text += " ";
            trace_text += "(" + std::to_string(dp) + "," + std::to_string(dq) + ")";
        }
        out.result = json{{"n", r.n}, {"trace", trace}};
        out.line("n: " + std::to_string(r.n));
        out.line("trace: " + (trace_text.empty() ? "(none)" : trace_text));
    });

    // descend-int
    struct {
        Common c;
        std::string p, q;
    } di_args;
    auto* dint = app.add_subcommand("descend-int", "name the odd index of an integer Pell solution");
    add_params_flags(dint, di_args.c);
    dint->add_option("--p", di_args.p, "positive integer P")->required();
    dint->add_option("--q", di_args.q, "positive integer Q")->required();
    add_output_flags(dint, out);
    dint->callback([&] {
        Params params = di_args.c.make_params();
        out.subcommand = "descend-int";
        out.params = json_params(di_args.c);
        Int p, q;
        try {
            p = Int(di_args.p, 10);
            q = Int(di_args.q, 10);
        } catch (const std::invalid_argument&) {
            throw_precondition("--p and --q must be decimal integers");
        }
        long index = descend_int(params, p, q);
        out.result = json{{"index", index}};
        out.line("index: " + std::to_string(index));
    });

    // classify-f / classify-l
    struct {
        Common c;
        std::string q;
    } cf_args, cl_args;
    auto* cf = app.add_subcommand("classify-f", "classify f(x, q) for a rational function q");
    add_params_flags(cf, cf_args.c);
    cf->add_option("--q", cf_args.q, "rational function, e.g. \"(x)/(x^2+1)\"")->required();
    add_output_flags(cf, out);
    cf->callback([&] {
        Params params = cf_args.c.make_params();
        out.subcommand = "classify-f";
        out.params = json_params(cf_args.c);
        render_classify(out, classify_f(params, parse_ratfn(cf_args.q)));
    });
    auto* cl = app.add_subcommand("classify-l", "classify l(x, q) for a rational function q");
    add_params_flags(cl, cl_args.c);
    cl->add_option("--q", cl_args.q, "rational function")->required();
    add_output_flags(cl, out);
    cl->callback([&] {
        Params params = cl_args.c.make_params();
        out.subcommand = "classify-l";
        out.params = json_params(cl_args.c);
        render_classify(out, classify_l(params, parse_ratfn(cl_args.q)));
    });

    // solve-f / solve-l
    struct {
        Common c;
        std::string k;
    } sf_args, sl_args;
    auto* sf = app.add_subcommand("solve-f", "all q with f(x, q) = k");
    add_params_flags(sf, sf_args.c);
    sf->add_option("--k", sf_args.k, "integer-coefficient polynomial k(x)")->required();
    add_output_flags(sf, out);
    auto solve_cb = [&out](const Common& c, const std::string& k_text, GenFn fn) {
        Params params = c.make_params();
        Poly k = parse_poly(k_text);
        auto sols = fn == GenFn::F ? solve_f(params, k) : solve_l(params, k);
        json list = json::array();
        for (const auto& s : sols) list.push_back(json_ratfn(s));
        out.result = json{{"k", json_poly(k)}, {"solutions", list}};
        out.line("solutions: " + std::to_string(sols.size()));
        for (const auto& s : sols) out.line("  " + format_ratfn(s));
    };
    sf->callback([&] {
        out.subcommand = "solve-f";
        out.params = json_params(sf_args.c);
        solve_cb(sf_args.c, sf_args.k, GenFn::F);
    });
    auto* sl = app.add_subcommand("solve-l", "all q with l(x, q) = k");
    add_params_flags(sl, sl_args.c);
    sl->add_option("--k", sl_args.k, "integer-coefficient polynomial k(x)")->required();
    add_output_flags(sl, out);
    sl->callback([&] {
        out.subcommand = "solve-l";
        out.params = json_params(sl_args.c);
        solve_cb(sl_args.c, sl_args.k, GenFn::L);
    });

    // classify-rational-f / classify-rational-l
    struct {
        Common c;
        std::string q;
    } crf_args, crl_args;
    auto* crf = app.add_subcommand("classify-rational-f", "classify f(q) for rational q (x = 1)");
    add_params_flags(crf, crf_args.c);
    crf->add_option("--q", crf_args.q, "rational number, e.g. \"3/5\"")->required();
    add_output_flags(crf, out);
    crf->callback([&] {
        Params params = crf_args.c.make_params();
        out.subcommand = "classify-rational-f";
        out.params = json_params(crf_args.c);
        render_classify_rational(out, classify_f_rational(params, Rat::parse(crf_args.q)));
    });
    auto* crl = app.add_subcommand("classify-rational-l", "classify l(q) for rational q (x = 1)");
    add_params_flags(crl, crl_args.c);
    crl->add_option("--q", crl_args.q, "rational number")->required();
    add_output_flags(crl, out);
    crl->callback([&] {
        Params params = crl_args.c.make_params();
        out.subcommand = "classify-rational-l";
        out.params = json_params(crl_args.c);
        render_classify_rational(out, classify_l_rational(params, Rat::parse(crl_args.q)));
    });

    // scan-f / scan-l
    struct {
        Common c;
        long max_den = 0;
    } scf_args, scl_args;
    auto scan_cb = [&out](const Common& c, long max_den, GenFn fn) {
        Params params = c.make_params();
        auto items = fn == GenFn::F ? scan_f(params, max_den) : scan_l(params, max_den);
        json list = json::array();
        for (const auto& it : items) {
            list.push_back(json{{"q", it.q.str()}, {"value", it.value.get_str()}});
            out.line("q = " + it.q.str() + "  value = " + it.value.get_str());
        }
        out.result = json{{"max_den", max_den}, {"items", list}};
        out.line("count: " + std::to_string(items.size()));
    };
    auto* scf = app.add_subcommand("scan-f", "integer points of f inside the convergence interval");
    add_params_flags(scf, scf_args.c);
    scf->add_option("--max-den", scf_args.max_den, "largest denominator to enumerate")->required();
    add_output_flags(scf, out);
    scf->callback([&] {
        out.subcommand = "scan-f";
        out.params = json_params(scf_args.c);
        scan_cb(scf_args.c, scf_args.max_den, GenFn::F);
    });
    auto* scl = app.add_subcommand("scan-l", "integer points of l inside the convergence interval");
    add_params_flags(scl, scl_args.c);
    scl->add_option("--max-den", scl_args.max_den, "largest denominator to enumerate")->required();
    add_output_flags(scl, out);
    scl->callback([&] {
        out.subcommand = "scan-l";
        out.params = json_params(scl_args.c);
        scan_cb(scl_args.c, scl_args.max_den, GenFn::L);
    });

    // quad-eval
    struct {
        Common c;
        unsigned long d = 0;
        std::string t;
        std::string fn = "f";
    } qe_args;
    auto* qe = app.add_subcommand("quad-eval", "evaluate f or l at a point of Q(sqrt(d))");
    add_params_flags(qe, qe_args.c);
    qe->add_option("--d", qe_args.d, "square-free positive d")->required();
    qe->add_option("--t", qe_args.t, "point, e.g. \"6/7 - 5/7*sqrt(2)\"")->required();
    qe->add_option("--fn", qe_args.fn, "f or l")->check(CLI::IsMember({"f", "l"}));
    add_output_flags(qe, out);
    qe->callback([&] {
        Params params = qe_args.c.make_params();
        out.subcommand = "quad-eval";
        out.params = json_params(qe_args.c);
        out.params["d"] = qe_args.d;
        Int d(checked_positive(qe_args.d, "d"));
        QuadNum t = parse_quad(qe_args.t, d);
        QuadNum value = qe_args.fn == "f" ? eval_f_quad(params, d, t) : eval_l_quad(params, d, t);
        bool in_ring = in_z_sqrt_d(value);
        bool inside = within_radius(RadiusSpec{params, d}, t);
        out.result = json{{"fn", qe_args.fn},
                          {"t", format_quad(t)},
                          {"value", format_quad(value)},
                          {"in_z_sqrt_d", in_ring},
                          {"within_radius", inside}};
        out.line("value: " + format_quad(value));
        out.line(std::string("in_z_sqrt_d: ") + (in_ring ? "true" : "false"));
        out.line(std::string("within_radius: ") + (inside ? "true" : "false"));
    });

    // counterexamples
    auto* ce = app.add_subcommand("counterexamples", "recompute the d = 2 counterexample report");
    add_output_flags(ce, out);
    ce->callback([&] {
        out.subcommand = "counterexamples";
        CounterexampleReport report = counterexample_report();
        json entries = json::array();
        for (const auto& e : report.entries) {
            out.line("entry " + e.id + " (a=" + e.a.get_str() + ", b=" + e.b.get_str() +
                     ", d=" + e.d.get_str() + ", t = " + e.t_text + "): " +
                     (e.ok ? "OK" : "FAILED"));
            json claims = json::array();
            for (const auto& c : e.claims) {
                claims.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                out.line("  [" + std::string(c.pass ? "ok" : "FAILED") + "] " + c.name);
            }
            entries.push_back(json{{"id", e.id},
                                   {"a", e.a.get_str()},
                                   {"b", e.b.get_str()},
                                   {"d", e.d.get_str()},
                                   {"t", e.t_text},
                                   {"expected", e.expected_text},
                                   {"claims", claims},
                                   {"ok", e.ok},
                                   {"d1_flipped_claim", e.d1_flipped_claim},
                                   {"d1_note", e.d1_note},
                                   {"d1_counterexample", e.d1_counterexample}});
            out.line("  d=1: " + e.d1_note);
        }
        out.result = json{{"entries", entries}, {"all_ok", report.all_ok}};
        out.line(std::string("all: ") + (report.all_ok ? "OK" : "FAILED"));
        if (!report.all_ok) throw_internal("counterexample report has failing claims");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        if (out.as_json) {
            json doc{{"subcommand", out.subcommand},
                     {"params", out.params},
                     {"result", nullptr},
                     {"error", json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
            std::cout << doc.dump(2) << "\n";
        }
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    }
    out.emit();
    return 0;
}

}  // namespace fibgf::cli
