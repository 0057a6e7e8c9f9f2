#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "fibgf/classifier.hpp"
#include "fibgf/error.hpp"
#include "fibgf/pell_descent.hpp"
#include "fibgf/quad_ring.hpp"
#include "fibgf/sequences.hpp"

namespace py = pybind11;
using namespace fibgf;

namespace {

Params make_params(long long a, long long b) {
    return Params(Int(static_cast<long>(a)), Int(static_cast<long>(b)));
}

Int int_from_py(const py::object& v) {
    return Int(py::str(v).cast<std::string>(), 10);
}

py::object py_from_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(py::str(v.get_str()));
}

IdentityId identity_or_throw(const std::string& name) {
    auto id = identity_from_name(name);
    if (!id) throw_precondition("unknown identity id: " + name);
    return *id;
}

py::dict classify_dict(const ClassifyResult& r) {
    py::dict d;
    d["verdict"] = verdict_name(r.verdict);
    if (r.verdict != Verdict::NotInteger) {
        d["index"] = r.index;
        d["value"] = format_poly(*r.value);
        d["witness"] = format_ratfn(*r.witness);
    }
    return d;
}

py::dict classify_rational_dict(const ClassifyRationalResult& r) {
    py::dict d;
    d["verdict"] = verdict_name(r.verdict);
    if (r.verdict != Verdict::NotInteger) {
        d["index"] = r.index;
        d["value"] = r.value->str();
        d["witness"] = r.witness->str();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(fibgf, m) {
    m.doc() = "Exact arithmetic for generalized Fibonacci/Lucas polynomial sequences: "
              "generating-function evaluation, integrality classification, Pell descent, "
              "and quadratic-ring checks. Polynomials, rational functions, and quadratic "
              "numbers travel as the CLI's text formats.";

    py::register_exception<Error>(m, "FibgfError");

    m.def("fib_poly",
          [](long long a, long long b, int n) {
              return format_poly(fib_poly(make_params(a, b), n));
          },
          py::arg("a"), py::arg("b"), py::arg("n"), "F_n(x) as text");
    m.def("lucas_poly",
          [](long long a, long long b, int n) {
              return format_poly(lucas_poly(make_params(a, b), n));
          },
          py::arg("a"), py::arg("b"), py::arg("n"), "L_n(x) as text");
    m.def("fib_number",
          [](long long a, long long b, int n) {
              return py_from_int(fib_number(make_params(a, b), n));
          },
          py::arg("a"), py::arg("b"), py::arg("n"), "F_n(1)");
    m.def("lucas_number",
          [](long long a, long long b, int n) {
              return py_from_int(lucas_number(make_params(a, b), n));
          },
          py::arg("a"), py::arg("b"), py::arg("n"), "L_n(1)");

    m.def("check_identity",
          [](long long a, long long b, const std::string& id, int n) {
              return check_identity(make_params(a, b), identity_or_throw(id), n);
          },
          py::arg("a"), py::arg("b"), py::arg("id"), py::arg("n"),
          "exact polynomial identity check; id is one of I5..I14, NORM");

    m.def("seq_at",
          [](long long a, long long b, const std::string& kind, int n, const std::string& point,
             long long d) {
              QuadNum p = parse_quad(point, Int(static_cast<long>(d)));
              return format_quad(
                  seq_at(make_params(a, b), kind == "L" ? SeqKind::Lucas : SeqKind::Fib, n, p));
          },
          py::arg("a"), py::arg("b"), py::arg("kind"), py::arg("n"), py::arg("point"),
          py::arg("d") = 1);

    m.def("descend",
          [](long long a, long long b, const std::string& p, const std::string& q) {
              DescentResult r = descend(make_params(a, b), parse_poly(p), parse_poly(q));
              py::dict d;
              d["n"] = r.n;
              py::list trace;
              for (auto [dp, dq] : r.trace) trace.append(py::make_tuple(dp, dq));
              d["trace"] = std::move(trace);
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));

    m.def("descend_int",
          [](long long a, long long b, const py::object& p, const py::object& q) {
              return descend_int(make_params(a, b), int_from_py(p), int_from_py(q));
          },
          py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));

    m.def("eval_f",
          [](long long a, long long b, const std::string& q) {
              return format_ratfn(eval_f(make_params(a, b), parse_ratfn(q)));
          },
          py::arg("a"), py::arg("b"), py::arg("q"));
    m.def("eval_l",
          [](long long a, long long b, const std::string& q) {
              return format_ratfn(eval_l(make_params(a, b), parse_ratfn(q)));
          },
          py::arg("a"), py::arg("b"), py::arg("q"));

    m.def("classify_f",
          [](long long a, long long b, const std::string& q) {
              return classify_dict(classify_f(make_params(a, b), parse_ratfn(q)));
          },
          py::arg("a"), py::arg("b"), py::arg("q"));
    m.def("classify_l",
          [](long long a, long long b, const std::string& q) {
              return classify_dict(classify_l(make_params(a, b), parse_ratfn(q)));
          },
          py::arg("a"), py::arg("b"), py::arg("q"));

    m.def("solve_f",
          [](long long a, long long b, const std::string& k) {
              std::vector<std::string> out;
              for (const auto& s : solve_f(make_params(a, b), parse_poly(k)))
                  out.push_back(format_ratfn(s));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("k"));
    m.def("solve_l",
          [](long long a, long long b, const std::string& k) {
              std::vector<std::string> out;
              for (const auto& s : solve_l(make_params(a, b), parse_poly(k)))
                  out.push_back(format_ratfn(s));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("k"));

    m.def("classify_f_rational",
          [](long long a, long long b, const std::string& q) {
              return classify_rational_dict(classify_f_rational(make_params(a, b), Rat::parse(q)));
          },
          py::arg("a"), py::arg("b"), py::arg("q"));
    m.def("classify_l_rational",
          [](long long a, long long b, const std::string& q) {
              return classify_rational_dict(classify_l_rational(make_params(a, b), Rat::parse(q)));
          },
          py::arg("a"), py::arg("b"), py::arg("q"));

    m.def("scan_f",
          [](long long a, long long b, long max_den) {
              py::list out;
              for (const auto& it : scan_f(make_params(a, b), max_den))
                  out.append(py::make_tuple(it.q.str(), py_from_int(it.value)));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("max_den"));
    m.def("scan_l",
          [](long long a, long long b, long max_den) {
              py::list out;
              for (const auto& it : scan_l(make_params(a, b), max_den))
                  out.append(py::make_tuple(it.q.str(), py_from_int(it.value)));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("max_den"));

    m.def("eval_f_quad",
          [](long long a, long long b, long long d, const std::string& t) {
              Int dd(static_cast<long>(d));
              return format_quad(eval_f_quad(make_params(a, b), dd, parse_quad(t, dd)));
          },
          py::arg("a"), py::arg("b"), py::arg("d"), py::arg("t"));
    m.def("eval_l_quad",
          [](long long a, long long b, long long d, const std::string& t) {
              Int dd(static_cast<long>(d));
              return format_quad(eval_l_quad(make_params(a, b), dd, parse_quad(t, dd)));
          },
          py::arg("a"), py::arg("b"), py::arg("d"), py::arg("t"));

    m.def("in_z_sqrt_d",
          [](const std::string& t, long long d) {
              return in_z_sqrt_d(parse_quad(t, Int(static_cast<long>(d))));
          },
          py::arg("t"), py::arg("d"));

    m.def("within_radius",
          [](long long a, long long b, long long d, const std::string& t) {
              Int dd(static_cast<long>(d));
              return within_radius(RadiusSpec{make_params(a, b), dd}, parse_quad(t, dd));
          },
          py::arg("a"), py::arg("b"), py::arg("d"), py::arg("t"));

    m.def("quad_family_membership",
          [](long long a, long long b, long long d, const std::string& t,
             const std::string& which) {
              Int dd(static_cast<long>(d));
              auto report = quad_family_membership(make_params(a, b), dd, parse_quad(t, dd),
                                                   which == "l" ? GenFn::L : GenFn::F);
              py::dict out;
              for (const auto& fm : report) {
                  if (fm.index)
                      out[verdict_name(fm.family)] = *fm.index;
                  else
                      out[verdict_name(fm.family)] = py::none();
              }
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("d"), py::arg("t"), py::arg("which"));

    m.def("counterexample_report", [] {
        CounterexampleReport report = counterexample_report();
        py::dict out;
        py::list entries;
        for (const auto& e : report.entries) {
            py::dict entry;
            entry["id"] = e.id;
            entry["a"] = py_from_int(e.a);
            entry["b"] = py_from_int(e.b);
            entry["d"] = py_from_int(e.d);
            entry["t"] = e.t_text;
            entry["expected"] = e.expected_text;
            py::list claims;
            for (const auto& c : e.claims) {
                py::dict claim;
                claim["name"] = c.name;
                claim["pass"] = c.pass;
                claim["detail"] = c.detail;
                claims.append(std::move(claim));
            }
            entry["claims"] = std::move(claims);
            entry["ok"] = e.ok;
            entry["d1_flipped_claim"] = e.d1_flipped_claim;
            entry["d1_note"] = e.d1_note;
            entry["d1_counterexample"] = e.d1_counterexample;
            entries.append(std::move(entry));
        }
        out["entries"] = std::move(entries);
        out["all_ok"] = report.all_ok;
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
