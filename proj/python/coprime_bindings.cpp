#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coprime/errors.hpp"
#include "coprime/harness.hpp"
#include "coprime/json_io.hpp"
#include "coprime/prism_pattern.hpp"

namespace py = pybind11;
using namespace coprime;

namespace {

Family family_from(const std::string& kind, int n, int m, int k) {
  if (kind == "prism") return Prism{n};
  if (kind == "gp2") return GP2{n};
  if (kind == "y3") return StackedPrism{3, n};
  if (kind == "y5") return StackedPrism{5, n};
  if (kind == "stacked_prism") return StackedPrism{m, n};
  if (kind == "gpstar") return GPStar{k};
  throw ParameterOutOfRange("unknown family '" + kind + "'");
}

Labeling as_labeling(const Graph& g, const std::vector<Label>& labels) {
  if (static_cast<int>(labels.size()) != g.order())
    throw MissingVertex("expected " + std::to_string(g.order()) + " labels, got " + std::to_string(labels.size()));
  return Labeling{labels};
}

}  // namespace

PYBIND11_MODULE(_coprime, m) {
  m.doc() = "coprime labelings of prisms, generalized Petersen graphs and stacked prisms";

  auto base = py::register_exception<Error>(m, "CoprimeError", PyExc_RuntimeError);
  py::register_exception<ParameterOutOfRange>(m, "ParameterOutOfRange", base.ptr());
  py::register_exception<HypothesisViolated>(m, "HypothesisViolated", base.ptr());
  py::register_exception<ConstructionUnavailable>(m, "ConstructionUnavailable", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<InfeasibleAtCap>(m, "InfeasibleAtCap", base.ptr());
  py::register_exception<MissingVertex>(m, "MissingVertex", base.ptr());

  m.def("gcd", &coprime::gcd, py::arg("a"), py::arg("b"));
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("find_s", &find_s, py::arg("n"), "smallest s with n+s+1 and 2n+s+2 both prime, or None");
  m.def("prime_factors", &prime_factors, py::arg("n"));

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("name", &Graph::name)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("vertices",
                             [](const Graph& g) {
                               std::vector<std::string> out;
                               for (auto& v : g.vertices()) out.push_back(v.name());
                               return out;
                             })
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, int v) {
             auto nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           })
      .def("adjacent", &Graph::adjacent)
      .def("index_of", [](const Graph& g, const std::string& id) { return g.index_of(VertexId::parse(id)); })
      .def("to_dot",
           [](const Graph& g, std::optional<std::vector<Label>> labels) {
             return to_dot(g, labels ? &*labels : nullptr);
           },
           py::arg("labels") = py::none())
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + g.name() + " |V|=" + std::to_string(g.order()) + " |E|=" + std::to_string(g.size()) + ">";
      });

  m.def("graph", [](const std::string& family, int n, int mm, int k) { return build(family_from(family, n, mm, k)); },
        py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("k") = 0);
  m.def("gp", &build_gp, py::arg("n"), py::arg("k"));

  py::class_<Certificate>(m, "Certificate")
      .def_property_readonly("theorem", [](const Certificate& c) { return std::string(rule_id(c.rule)); })
      .def_readonly("case", &Certificate::case_tag)
      .def_readonly("witness", &Certificate::witness)
      .def("__repr__", [](const Certificate& c) { return certificate_json(c).dump(); });

  py::class_<Construction>(m, "Construction")
      .def_readonly("graph", &Construction::graph)
      .def_property_readonly("labels", [](const Construction& c) { return c.labeling.labels; })
      .def_readonly("certificate", &Construction::certificate)
      .def_property_readonly("max_label", [](const Construction& c) { return c.labeling.max_label(); })
      .def("to_json", [](const Construction& c) {
        return labeling_json(c.graph, c.labeling, c.certificate, verify(c.graph, c.labeling).ok()).dump();
      });

  m.def("construct",
        [](const std::string& family, int n, int mm, int k, std::optional<std::string> theorem, bool allow_fallback) {
          Family f = family_from(family, n, mm, k);
          if (auto* p = std::get_if<Prism>(&f)) {
            if (theorem) {
              auto r = parse_rule(*theorem);
              if (!r) throw ParameterOutOfRange("unknown construction id '" + *theorem + "'");
              return label_prism_by(*r, p->n);
            }
            return label_prism(p->n, allow_fallback);
          }
          if (theorem) throw ParameterOutOfRange("only prism constructions can be chosen by id");
          return construct(f);
        },
        py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("k") = 0, py::arg("theorem") = py::none(),
        py::arg("allow_fallback") = true);
  m.def("expected_max_label", [](const std::string& family, int n, int mm, int k) {
        return expected_max_label(family_from(family, n, mm, k));
      },
      py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("k") = 0);
  m.def("load_json", [](const std::string& text) {
    auto l = labeling_from_json(nlohmann::json::parse(text));
    return py::make_tuple(l.graph, l.labeling.labels);
  });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("ok", &VerificationReport::ok)
      .def_readonly("prime_labeling", &VerificationReport::prime_labeling)
      .def_property_readonly("conflicts",
                             [](const VerificationReport& r) {
                               std::vector<std::tuple<int, int, Label>> out;
                               for (auto& c : r.conflicts) out.emplace_back(c.a, c.b, c.gcd);
                               return out;
                             })
      .def_property_readonly("duplicates",
                             [](const VerificationReport& r) {
                               std::vector<std::pair<Label, std::vector<int>>> out;
                               for (auto& d : r.duplicates) out.emplace_back(d.label, d.vertices);
                               return out;
                             })
      .def("describe", &VerificationReport::describe);

  m.def("verify", [](const Graph& g, const std::vector<Label>& labels) { return verify(g, as_labeling(g, labels)); },
        py::arg("graph"), py::arg("labels"));

  py::class_<SolverReport>(m, "SolverReport")
      .def_readonly("pr", &SolverReport::pr_value)
      .def_property_readonly("labels", [](const SolverReport& r) { return r.optimal_labeling.labels; })
      .def_readonly("nodes", &SolverReport::nodes_explored)
      .def_readonly("proven_optimal", &SolverReport::proven_optimal)
      .def_readonly("lower_bound", &SolverReport::lower_bound_used)
      .def_readonly("alpha", &SolverReport::alpha);

  m.def("solve",
        [](const Graph& g, int cap, std::uint64_t budget, int threads, std::optional<double> time_limit,
           std::optional<std::vector<Label>> incumbent) {
          SolverConfig cfg;
          cfg.max_label_cap = cap;
          cfg.node_budget = budget;
          cfg.parallel_width = threads;
          cfg.time_limit_seconds = time_limit;
          std::optional<Labeling> inc;
          if (incumbent) inc = as_labeling(g, *incumbent);
          py::gil_scoped_release nogil;
          return solve(g, cfg, inc ? &*inc : nullptr);
        },
        py::arg("graph"), py::arg("cap") = 255, py::arg("budget") = 200'000'000ULL, py::arg("threads") = 0,
        py::arg("time_limit") = py::none(), py::arg("incumbent") = py::none());
  m.def("lower_bound", &lower_bound, py::arg("graph"));
  m.def("independence_number", [](const Graph& g) { return independence_exact(g).alpha; }, py::arg("graph"));
  m.def("confirm_no_prime_labeling",
        [](const Graph& g, std::uint64_t budget) {
          py::gil_scoped_release nogil;
          return confirm_no_prime_labeling(g, budget);
        },
        py::arg("graph"), py::arg("budget") = 500'000'000ULL);

  // results as JSON lines; the Python side decodes them
  m.def("scan_json",
        [](const std::string& family, int lo, int hi, bool allow_fallback, int workers) {
          auto fam = parse_scan_family(family);
          if (!fam) throw ParameterOutOfRange("unknown scan family '" + family + "'");
          ScanOptions opts;
          opts.allow_fallback = allow_fallback;
          opts.workers = workers;
          std::vector<std::string> lines;
          {
            py::gil_scoped_release nogil;
            scan(*fam, lo, hi, opts, [&](const ScanResult& r) { lines.push_back(scan_json(r).dump()); });
          }
          return lines;
        },
        py::arg("family"), py::arg("lo"), py::arg("hi"), py::arg("allow_fallback") = true, py::arg("workers") = 0);
}
