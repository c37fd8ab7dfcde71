#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/names.hpp"
#include "bisetkit/report.hpp"

namespace py = pybind11;
using namespace bisetkit;

namespace {

// One long-lived context per interpreter; computations are memoized inside.
Context& ctx() {
    static Context instance;
    return instance;
}

}  // namespace

PYBIND11_MODULE(_bisetkit, m) {
    m.doc() = "Exact computations in double Burnside algebras of small finite groups";

    m.def("group_order", [](const std::string& spec) { return ctx().parse_group(spec)->order(); },
          py::arg("group"));

    m.def("group_name", [](const std::string& spec) { return group_name(*ctx().parse_group(spec)); },
          py::arg("group"));

    m.def("subgroup_class_count",
          [](const std::string& spec) { return ctx().subgroups(ctx().parse_group(spec)).class_count(); },
          py::arg("group"));

    m.def("basis",
          [](const std::string& g, const std::string& h) {
              const PairBasis& b = ctx().pair_basis(ctx().parse_group(g), ctx().parse_group(h));
              std::vector<std::string> keys;
              for (const auto& lab : b.labels())
                  keys.push_back(lab.key);
              return keys;
          },
          py::arg("g"), py::arg("h"), "Canonical basis labels of B(G, H)");

    m.def("subquotients",
          [](const std::string& g) {
              std::vector<std::string> names;
              for (const auto& e : ctx().sigma(ctx().parse_group(g)))
                  names.push_back(e.name);
              return names;
          },
          py::arg("group"));

    m.def("dim_delta",
          [](const std::string& g, const std::string& h, const std::string& v) {
              GroupPtr gp = ctx().parse_group(g);
              int sigma = ctx().sigma_index_by_name(gp, h);
              const auto& simples = ctx().out_simples(ctx().sigma(gp)[static_cast<std::size_t>(sigma)].rep);
              for (std::size_t i = 0; i < simples.size(); ++i)
                  if (simples[i].name == v)
                      return ctx().delta(gp, sigma, static_cast<int>(i)).module.dim;
              throw UsageError("unknown Out-simple " + v);
          },
          py::arg("g"), py::arg("h"), py::arg("v"));

    m.def("dim_simple",
          [](const std::string& g, const std::string& h, const std::string& v) {
              GroupPtr gp = ctx().parse_group(g);
              int sigma = ctx().sigma_index_by_name(gp, h);
              const auto& simples = ctx().out_simples(ctx().sigma(gp)[static_cast<std::size_t>(sigma)].rep);
              for (std::size_t i = 0; i < simples.size(); ++i)
                  if (simples[i].name == v)
                      return ctx().simple(gp, sigma, static_cast<int>(i)).module.dim;
              throw UsageError("unknown Out-simple " + v);
          },
          py::arg("g"), py::arg("h"), py::arg("v"));

    m.def("nv",
          [](const std::string& g) {
              std::vector<SimpleLabel> offenders;
              bool ok = nv_check(ctx(), ctx().parse_group(g), &offenders);
              std::vector<std::pair<std::string, std::string>> offs;
              for (const auto& o : offenders)
                  offs.emplace_back(o.h_name, o.v_name);
              return py::make_tuple(ok, offs);
          },
          py::arg("group"), "Returns (nv, offenders)");

    m.def("qh_verdict",
          [](const std::string& g) {
              QHCertificate cert = qh_certificate(ctx(), ctx().parse_group(g));
              return cert.verdict;
          },
          py::arg("group"));

    m.def("report_json", [](const std::string& g) { return full_report_json(ctx(), ctx().parse_group(g)); },
          py::arg("group"), "Full structural report as a JSON document");

    m.def("a5_report_json", []() { return a5_report_json(a5_report(ctx())); });

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
