#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skmaass/bessel.hpp"
#include "skmaass/errors.hpp"
#include "skmaass/qforms.hpp"
#include "skmaass/series.hpp"
#include "skmaass/sk.hpp"
#include "skmaass/table_io.hpp"

namespace py = pybind11;
using namespace skmaass;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rational_str(r));
}

py::object to_pyint(const Integer& z) {
    static py::object pyint = py::module_::import("builtins").attr("int");
    return pyint(z.get_str());
}

Rational as_rational(py::handle obj) {
    // int, str or fractions.Fraction; str() of each parses as num[/den]
    return parse_rational(py::str(obj).cast<std::string>());
}

QForm as_form(py::handle obj) {
    auto seq = py::cast<py::sequence>(obj);
    if (seq.size() != 3)
        throw std::invalid_argument("form must be a (a, b, c) triple");
    return {seq[0].cast<std::int64_t>(), seq[1].cast<std::int64_t>(),
            seq[2].cast<std::int64_t>()};
}

py::tuple form_tuple(const QForm& f) { return py::make_tuple(f.a, f.b, f.c); }

QuadExt as_trace(long q, py::handle obj) {
    if (py::isinstance<QuadExt>(obj))
        return obj.cast<QuadExt>();
    return QuadExt(q, as_rational(obj));
}

const char* kind_name(BesselKind k) {
    switch (k) {
        case BesselKind::SKType: return "sk-type";
        case BesselKind::Exceptional: return "exceptional";
        case BesselKind::Generic: return "generic";
    }
    return "?";
}

const char* verdict_name(SKVerdict v) {
    switch (v) {
        case SKVerdict::SpezialscharConsistent: return "SpezialscharConsistent";
        case SKVerdict::Fails: return "Fails";
        case SKVerdict::BaseVanishes: return "BaseVanishes";
    }
    return "?";
}

SKLiftSpec make_lift(int k, const py::dict& eigen, const py::dict& base) {
    SKLiftSpec lift;
    lift.hecke.k = k;
    for (auto item : eigen) {
        Integer c;
        if (mpz_set_str(c.get_mpz_t(),
                        py::str(item.second).cast<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument("eigenvalues must be integers");
        lift.hecke.eigen[item.first.cast<std::int64_t>()] = c;
    }
    for (auto item : base)
        lift.base[item.first.cast<std::int64_t>()] = as_rational(item.second);
    return lift;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for Saito-Kurokawa coefficient tables, local "
              "spherical Bessel values and Maass relations.";

    py::register_exception<config_error>(m, "ConfigError");
    py::register_exception<incomplete_error>(m, "IncompleteError");
    py::register_exception<format_error>(m, "FormatError");

    py::class_<QuadExt>(m, "QuadExt")
        .def(py::init([](long q, py::object x, py::object y) {
                 return QuadExt(q, as_rational(x), as_rational(y));
             }),
             py::arg("q"), py::arg("x") = py::int_(0), py::arg("y") = py::int_(0))
        .def_property_readonly("q", &QuadExt::radicand)
        .def_property_readonly("x", [](const QuadExt& v) { return to_fraction(v.rational_part()); })
        .def_property_readonly("y", [](const QuadExt& v) { return to_fraction(v.surd_part()); })
        .def("is_rational", &QuadExt::is_rational)
        .def("is_zero", &QuadExt::is_zero)
        .def("__add__", [](const QuadExt& a, const QuadExt& b) { return a + b; })
        .def("__sub__", [](const QuadExt& a, const QuadExt& b) { return a - b; })
        .def("__mul__", [](const QuadExt& a, const QuadExt& b) { return a * b; })
        .def("__truediv__", [](const QuadExt& a, const QuadExt& b) { return a / b; })
        .def("__neg__", [](const QuadExt& a) { return -a; })
        .def("__eq__", [](const QuadExt& a, const QuadExt& b) { return a == b; })
        .def("__repr__", [](const QuadExt& v) { return "QuadExt(" + v.str() + ")"; })
        .def("__str__", &QuadExt::str);

    m.def("sqrt_q", &QuadExt::sqrt_q, py::arg("q"));
    m.def("half_power", &QuadExt::half_power, py::arg("q"), py::arg("n"),
          "q**(n/2) as an exact element of Q(sqrt q)");
    m.def("chebyshev_u", &chebyshev_u, py::arg("A"), py::arg("m"));
    m.def("sk_trace", &sk_trace_value, py::arg("q"), "q**(1/2) + q**(-1/2)");

    m.def("series_div",
          [](const std::vector<QuadExt>& numer, const std::vector<QuadExt>& denom, int order) {
              return series_div(numer, denom, order);
          },
          py::arg("numer"), py::arg("denom"), py::arg("order"));

    py::class_<SphericalParams>(m, "SphericalParams")
        .def(py::init([](long q, py::object A, py::object B, int delta) {
                 return SphericalParams(q, as_trace(q, A), as_trace(q, B), delta);
             }),
             py::arg("q"), py::arg("A"), py::arg("B"), py::arg("delta"))
        .def_readonly("q", &SphericalParams::q)
        .def_readonly("A", &SphericalParams::A)
        .def_readonly("B", &SphericalParams::B)
        .def_readonly("delta", &SphericalParams::delta);

    m.def("classify", [](const SphericalParams& p) { return kind_name(classify(p).kind); });
    m.def("b0", &b0, py::arg("params"), py::arg("m"));
    m.def("b0_closed_sk", &b0_closed_sk, py::arg("params"), py::arg("m"));
    m.def("blm_sk", &blm_sk, py::arg("params"), py::arg("l"), py::arg("m"));
    m.def("siegel_series_value", &siegel_series_value, py::arg("params"), py::arg("l"),
          py::arg("m"));
    m.def("obstruction", &obstruction, py::arg("params"));

    m.def("reduce", [](py::handle s) {
        auto [r, t] = reduce(as_form(s));
        return py::make_tuple(form_tuple(r),
                              py::make_tuple(py::make_tuple(t.m00, t.m01),
                                             py::make_tuple(t.m10, t.m11)));
    });
    m.def("disc_content", [](py::handle s) {
        QForm f = as_form(s);
        return py::make_tuple(f.disc(), f.content());
    });
    m.def("is_fundamental_discriminant", &is_fundamental_discriminant, py::arg("d"));
    m.def("fundamental_split", [](std::int64_t D) {
        auto s = fundamental_split(D);
        return py::make_tuple(s.d, s.n1);
    });
    m.def("kronecker_symbol", &kronecker_symbol, py::arg("d"), py::arg("p"));
    m.def("enumerate_classes", [](std::int64_t D, std::int64_t L) {
        py::list out;
        for (const auto& f : enumerate_classes(D, L))
            out.append(form_tuple(f));
        return out;
    }, py::arg("D"), py::arg("L") = 1);
    m.def("class_count_formula", &class_count_formula, py::arg("d"), py::arg("M"),
          py::arg("L") = 1);
    m.def("s_d", [](std::int64_t d) { return form_tuple(s_d(d)); });
    m.def("coset_invariants", [](py::handle s, std::int64_t p) {
        auto ci = coset_invariants(as_form(s), p);
        return py::make_tuple(ci.l, ci.m);
    });
    m.def("arch_decompose", [](py::handle s) {
        auto d = arch_decompose(as_form(s));
        py::dict out;
        out["u"] = d.u;
        out["x"] = d.x;
        out["y"] = d.y;
        out["lambda"] = d.lambda;
        out["zeta"] = d.zeta;
        return out;
    });
    m.def("bessel_arch", [](py::handle s, int k) { return bessel_arch(as_form(s), k); },
          py::arg("s"), py::arg("k"));

    py::class_<SKLiftSpec>(m, "LiftSpec")
        .def(py::init(&make_lift), py::arg("k"), py::arg("eigen"), py::arg("base"))
        .def_property_readonly("k", [](const SKLiftSpec& l) { return l.hecke.k; });

    m.def("hecke_power", [](const SKLiftSpec& lift, std::int64_t p, int mu) {
        return to_pyint(hecke_power(lift.hecke, p, mu));
    });
    m.def("sk_coefficient", [](const SKLiftSpec& lift, py::handle s) {
        return to_fraction(sk_coefficient(lift, as_form(s)));
    });
    m.def("sk_coefficient_dks", [](const SKLiftSpec& lift, py::handle t, std::int64_t n) {
        return to_fraction(sk_coefficient_dks(lift, as_form(t), n));
    });
    m.def("sk_coefficient_bessel",
          [](const SKLiftSpec& lift, std::int64_t d, std::int64_t L, std::int64_t M,
             std::int64_t p) { return to_fraction(sk_coefficient_bessel(lift, d, L, M, p)); });

    py::class_<CoefficientTable>(m, "Table")
        .def_property_readonly("weight", [](const CoefficientTable& t) { return t.k; })
        .def("__len__", [](const CoefficientTable& t) { return t.entries.size(); })
        .def("entries",
             [](const CoefficientTable& t) {
                 py::dict out;
                 for (const auto& [f, v] : t.entries)
                     out[form_tuple(f)] = to_fraction(v);
                 return out;
             })
        .def("get",
             [](const CoefficientTable& t, py::handle s) {
                 auto it = t.entries.find(as_form(s));
                 if (it == t.entries.end())
                     throw py::key_error("form not in table");
                 return to_fraction(it->second);
             })
        .def("set",
             [](CoefficientTable& t, py::handle s, py::object v) {
                 t.entries[as_form(s)] = as_rational(v);
             })
        .def("save", [](const CoefficientTable& t, const std::string& path) {
            save_table(t, path);
        })
        .def_static("load", [](const std::string& path) { return load_table(path); });

    m.def("generate_table", &generate_table, py::arg("lift"), py::arg("disc_bound"),
          py::arg("jobs") = 1);
    m.def("maass_check", [](const CoefficientTable& t) {
        auto rep = maass_check(t);
        py::dict out;
        out["all_pass"] = rep.all_pass();
        out["relations_checked"] = rep.relations.size();
        out["failed"] = rep.failed_count();
        out["class_function_violations"] = rep.violations.size();
        out["incomplete"] = rep.incomplete.size();
        return out;
    });
    m.def("average_coeff", [](const CoefficientTable& t, std::int64_t D, std::int64_t L) {
        return to_fraction(average_coeff(t, D, L));
    });
    m.def("detect_sk", [](const CoefficientTable& t, std::int64_t d, std::int64_t p) {
        auto res = detect_sk(t, d, p);
        py::dict out;
        out["verdict"] = verdict_name(res.verdict);
        out["avg_d_1"] = to_fraction(res.base_avg);
        out["lhs"] = to_fraction(res.lhs);
        out["rhs"] = to_fraction(res.rhs);
        return out;
    });
    m.def("detect_asymptotic",
          [](const CoefficientTable& t, std::int64_t d, const std::vector<std::int64_t>& primes) {
              py::list out;
              for (const auto& pt : detect_asymptotic(t, d, primes)) {
                  py::dict item;
                  item["p"] = pt.p;
                  item["complete"] = pt.complete;
                  if (pt.complete)
                      item["value"] = to_fraction(pt.value);
                  out.append(item);
              }
              return out;
          });
}
