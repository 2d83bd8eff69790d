#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zpg/catalog.hpp"
#include "zpg/explicit.hpp"
#include "zpg/measure.hpp"
#include "zpg/schur.hpp"
#include "zpg/verify.hpp"

namespace py = pybind11;
using namespace zpg;

namespace {

py::object pyint(const BigInt& x) {
    std::string s = to_string(x);
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object fraction(const Rational& x) {
    static py::object F = py::module_::import("fractions").attr("Fraction");
    return F(pyint(numerator(x)), pyint(denominator(x)));
}

ModuleType T(Int Q, const std::vector<Int>& parts) { return make_type(Q, parts); }

py::dict bracket(const Bracket& b) {
    py::dict d;
    d["lo"] = fraction(b.lo);
    d["hi"] = fraction(b.hi);
    d["heuristic"] = b.heuristic;
    return d;
}

}  // namespace

PYBIND11_MODULE(zpgamma, m) {
    m.doc() = "Bindings for the zpg core library";
    m.attr("__version__") = kVersion;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("idempotents", [](const std::string& gamma, Int p) {
        py::list out;
        for (auto& e : enumerate_idempotents(parse_group(gamma), p)) {
            py::dict d;
            d["n"] = e.n;
            d["e_ram"] = e.e_ram;
            d["f"] = e.f;
            d["Q"] = e.Q;
            d["uniformizer"] = to_string(e.uniformizer);
            d["Ie_valuation"] = threshold_ideal(e).d;
            d["orbit_size"] = e.orbit.size();
            out.append(d);
        }
        return out;
    }, py::arg("gamma"), py::arg("p"));

    m.def("hom_count", [](Int Q, const std::vector<Int>& M, const std::vector<Int>& N) { return pyint(hom_count(T(Q, M), T(Q, N))); });
    m.def("sur_count", [](Int Q, const std::vector<Int>& M, const std::vector<Int>& N) { return pyint(sur_count(T(Q, M), T(Q, N))); });
    m.def("aut_count", [](Int Q, const std::vector<Int>& M) { return pyint(aut_count(T(Q, M))); });
    m.def("weight", [](Int Q, const std::vector<Int>& M, const std::vector<Int>& H, Int d) { return pyint(weight(T(Q, M), T(Q, H), d)); });

    m.def("oracle_counts", [](const std::string& gamma, Int p, Int index, const std::vector<Int>& M, const std::vector<Int>& N) {
        auto all = enumerate_idempotents(parse_group(gamma), p);
        if (index < 0 || index >= static_cast<Int>(all.size())) throw InputError("idempotent index out of range");
        const Idempotent& e = all[static_cast<size_t>(index)];
        OracleCounts oc = oracle_counts(realize(e, T(e.Q, M)), realize(e, T(e.Q, N)));
        return py::make_tuple(pyint(oc.hom), pyint(oc.sur));
    });

    m.def("b_exact", [](const std::vector<Int>& H, Int q, Int n) { return pyint(b_exact(H, q, n)); });
    m.def("b_closed", [](const std::vector<Int>& H, Int v, Int n) { return pyint(b_closed(H, v, n)); });
    m.def("moment_ratio", [](const std::vector<Int>& H, Int v) { return fraction(moment_ratio(H, v)); });

    m.def("measure", [](Int Q, const std::vector<Int>& M) { return bracket(measure(Q, T(Q, M))); });
    m.def("moment", [](Int Q, const std::vector<Int>& V, Int B) { return bracket(moment_truncated(Q, T(Q, V), B).bracket); });
    m.def("cokernel_law", [](Int Q, Int n, const std::vector<Int>& M) { return fraction(exact_cokernel_prob(Q, n, T(Q, M))); });
    m.def("sample", [](Int Q, Int n, Int prec, Int trials, std::uint64_t seed, Int threads) {
        SampleTable t;
        {
            py::gil_scoped_release nogil;
            t = sample(Q, n, prec, trials, seed, threads);
        }
        return t.counts;
    }, py::arg("Q"), py::arg("n"), py::arg("prec"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);

    m.def("verify", [](const std::string& suite) {
        std::vector<CheckResult> res;
        {
            py::gil_scoped_release nogil;
            res = run_suite(suite);
        }
        py::object loads = py::module_::import("json").attr("loads");
        py::list out;
        for (auto& r : res) out.append(loads(to_json(r).dump()));
        return out;
    });
}
