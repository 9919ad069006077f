// python bindings: thin string/dict wrappers over the C++ core so the
// module stays usable without exposing gmp types

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rankbound/ap.hpp"
#include "rankbound/batch.hpp"
#include "rankbound/curve.hpp"
#include "rankbound/errors.hpp"
#include "rankbound/formula.hpp"
#include "rankbound/gamma_term.hpp"
#include "rankbound/kernel.hpp"
#include "rankbound/special.hpp"
#include "rankbound/table.hpp"
#include "rankbound/zeros.hpp"

namespace py = pybind11;
using namespace rankbound;

namespace {

const char* reduction_name(reduction_type t) {
    switch (t) {
        case reduction_type::good: return "good";
        case reduction_type::multiplicative_split: return "multiplicative_split";
        case reduction_type::multiplicative_nonsplit: return "multiplicative_nonsplit";
        default: return "additive";
    }
}

const char* source_name(ap_source s) {
    switch (s) {
        case ap_source::naive: return "naive";
        case ap_source::bsgs: return "bsgs";
        default: return "bad_prime";
    }
}

parity_type parity_from(const std::string& s) {
    if (s == "even") return parity_type::even;
    if (s == "odd") return parity_type::odd;
    if (s == "unknown") return parity_type::unknown;
    throw error("parity must be even, odd or unknown");
}

const char* parity_name(parity_type p) {
    switch (p) {
        case parity_type::even: return "even";
        case parity_type::odd: return "odd";
        default: return "unknown";
    }
}

engine_options make_engine(uint64_t naive_threshold, int workers,
                           const std::string& cache_dir) {
    engine_options opt;
    opt.naive_threshold = naive_threshold;
    opt.workers = workers;
    opt.cache_dir = cache_dir;
    return opt;
}

py::dict breakdown_dict(const ef_breakdown& b) {
    py::dict d;
    d["conductor_term"] = b.conductor_term;
    d["log2pi_term"] = b.log2pi_term;
    d["gamma_term"] = b.gamma_term;
    d["gamma_quad_error"] = b.gamma_quad_error;
    d["prime_term"] = b.prime_term;
    d["total"] = b.total;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "conditional analytic rank bounds for elliptic curves";
    m.attr("__version__") = "0.1.0";

    // translators run most-recent-first, so the base class goes first
    py::register_exception<error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<singular_model_error>(m, "SingularModelError",
                                                 PyExc_ValueError);

    m.def(
        "curve_info",
        [](const std::string& text) {
            weierstrass_curve e = parse_curve_literal(text);
            py::dict d;
            d["model"] = curve_to_string(e);
            d["c4"] = e.c4.get_str();
            d["c6"] = e.c6.get_str();
            d["disc"] = e.disc.get_str();
            d["hash"] = curve_hash(e);
            return d;
        },
        py::arg("ainvs"),
        "invariants of an integral model given as '[a1,a2,a3,a4,a6]'");

    m.def(
        "classify_reduction",
        [](const std::string& text, uint64_t p) {
            local_data ld = classify_reduction(parse_curve_literal(text), p);
            py::dict d;
            d["p"] = ld.p;
            d["type"] = reduction_name(ld.type);
            d["ap"] = ld.ap;
            return d;
        },
        py::arg("ainvs"), py::arg("p"));

    m.def(
        "ap_naive",
        [](const std::string& text, uint64_t p) {
            return ap_naive(parse_curve_literal(text), p).ap;
        },
        py::arg("ainvs"), py::arg("p"));

    m.def(
        "ap_bsgs",
        [](const std::string& text, uint64_t p) {
            return ap_bsgs(parse_curve_literal(text), p).ap;
        },
        py::arg("ainvs"), py::arg("p"));

    m.def(
        "ap_list",
        [](const std::string& text, uint64_t x_max, uint64_t naive_threshold,
           int workers, const std::string& cache_dir) {
            weierstrass_curve e = parse_curve_literal(text);
            std::vector<py::tuple> out;
            ap_stream(e, x_max, {}, make_engine(naive_threshold, workers, cache_dir),
                      [&](const ap_record& r) {
                          out.push_back(py::make_tuple(r.p, r.ap, source_name(r.source)));
                      });
            return out;
        },
        py::arg("ainvs"), py::arg("x_max"), py::arg("naive_threshold") = 2000,
        py::arg("workers") = 1, py::arg("cache_dir") = std::string(),
        "(p, a_p, source) for all primes up to x_max");

    m.def(
        "fejer_kernel",
        [](double t, double delta) { return fejer_kernel(t, kernel_params(delta)); },
        py::arg("t"), py::arg("delta"));
    m.def(
        "fejer_hat",
        [](double x, double delta) { return fejer_hat(x, kernel_params(delta)); },
        py::arg("x"), py::arg("delta"));
    m.def("digamma_re", &digamma_re, py::arg("sigma"), py::arg("t"));
    m.def("si", &si, py::arg("x"));

    m.def(
        "gamma_term",
        [](double delta, double error_target) {
            gamma_term_result r = gamma_term(kernel_params(delta), error_target);
            py::dict d;
            d["value"] = r.value;
            d["quad_error"] = r.quad_error;
            return d;
        },
        py::arg("delta"), py::arg("error_target") = 1e-8);

    m.def(
        "prime_cutoff",
        [](double delta) { return prime_cutoff(kernel_params(delta)); },
        py::arg("delta"));

    m.def(
        "heuristic_baseline",
        [](double log_conductor, double delta) {
            return heuristic_baseline(log_conductor, kernel_params(delta));
        },
        py::arg("log_conductor"), py::arg("delta"));

    m.def(
        "zero_sum_bound",
        [](const std::string& text, double log_conductor, double delta,
           const std::string& parity, uint64_t naive_threshold, int workers,
           const std::string& cache_dir) {
            rank_bound_result r = zero_sum_bound(
                parse_curve_literal(text), log_conductor, kernel_params(delta),
                parity_from(parity), make_engine(naive_threshold, workers, cache_dir));
            py::dict d;
            d["sum"] = r.sum;
            d["floor_bound"] = r.floor_bound;
            d["refined_bound"] = r.refined_bound;
            d["parity"] = parity_name(r.parity);
            d["delta"] = r.delta;
            d["log_conductor"] = r.log_conductor;
            d["negative_sum_warning"] = r.negative_sum_warning;
            d["breakdown"] = breakdown_dict(r.breakdown);
            return d;
        },
        py::arg("ainvs"), py::arg("log_conductor"), py::arg("delta"),
        py::arg("parity") = "unknown", py::arg("naive_threshold") = 2000,
        py::arg("workers") = 1, py::arg("cache_dir") = std::string());

    py::class_<zero_list>(m, "ZeroList")
        .def_static("load", &load_zeros, py::arg("path"))
        .def_property_readonly("count",
                               [](const zero_list& z) { return z.ordinates.size(); })
        .def_readonly("height", &zero_list::height)
        .def_readonly("central_multiplicity", &zero_list::central_multiplicity)
        .def("first",
             [](const zero_list& z, size_t n) {
                 n = std::min(n, z.ordinates.size());
                 return std::vector<double>(z.ordinates.begin(), z.ordinates.begin() + n);
             },
             py::arg("n"));

    m.def(
        "direct_zero_sum",
        [](const zero_list& z, double delta, std::optional<double> log_conductor_hint) {
            zero_sum_eval s = direct_zero_sum(z, kernel_params(delta), log_conductor_hint);
            py::dict d;
            d["value"] = s.value;
            d["tail_bound"] = s.tail_bound;
            return d;
        },
        py::arg("zeros"), py::arg("delta"),
        py::arg("log_conductor_hint") = std::optional<double>());

    m.def(
        "compare_methods",
        [](const std::string& text, double log_conductor, const zero_list& z,
           double delta) {
            compare_report rep = compare_methods(parse_curve_literal(text),
                                                 log_conductor, z, kernel_params(delta));
            py::dict d;
            d["explicit_total"] = rep.explicit_total;
            d["direct_value"] = rep.direct_value;
            d["difference"] = rep.difference;
            d["tail_bound"] = rep.tail_bound;
            d["pass"] = rep.pass;
            d["breakdown"] = breakdown_dict(rep.breakdown);
            return d;
        },
        py::arg("ainvs"), py::arg("log_conductor"), py::arg("zeros"), py::arg("delta"));

    m.def(
        "sweep_statistic",
        [](const std::string& records_path) {
            return sweep_statistic(load_batch_records(records_path));
        },
        py::arg("records_path"), "tightness statistic of a finished batch run");
}
