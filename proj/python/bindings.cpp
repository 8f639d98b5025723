// Apache License, Version 2.0, refer to LICENSE.txt

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tilt/coherence.hpp"
#include "tilt/io.hpp"
#include "tilt/optimizer.hpp"
#include "tilt/update.hpp"

namespace py = pybind11;
using namespace tilt;

namespace {

Outcome to_outcome(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return Outcome(obj.cast<std::string>());
  return Outcome(obj.cast<double>());
}

py::object from_outcome(const Outcome& o) {
  if (o.is_numeric()) return py::float_(o.numeric());
  return py::str(o.label());
}

std::vector<Outcome> to_outcomes(const py::sequence& seq) {
  std::vector<Outcome> out;
  for (const auto& item : seq) out.push_back(to_outcome(item));
  return out;
}

std::map<Outcome, double> to_table(const py::dict& d) {
  std::map<Outcome, double> out;
  for (const auto& [k, v] : d) out.emplace(to_outcome(k), v.cast<double>());
  return out;
}

}  // namespace

PYBIND11_MODULE(_tilt, m) {
  m.doc() = "belief updates from loss-encoded information";

  py::register_exception<Error>(m, "TiltError");

  py::class_<DiscreteMeasure>(m, "DiscreteMeasure")
      .def(py::init([](const py::sequence& points,
                       const std::vector<double>& weights) {
             return make_discrete(to_outcomes(points), weights);
           }),
           py::arg("points"), py::arg("weights"))
      .def_property_readonly("points",
                             [](const DiscreteMeasure& d) {
                               py::list out;
                               for (const auto& p : d.points())
                                 out.append(from_outcome(p));
                               return out;
                             })
      .def_property_readonly("weights",
                             [](const DiscreteMeasure& d) {
                               return d.weights();
                             })
      .def("__len__", &DiscreteMeasure::size);

  py::class_<GridMeasure>(m, "GridMeasure")
      .def(py::init<double, double, std::vector<double>>(), py::arg("lo"),
           py::arg("hi"), py::arg("density"))
      .def_property_readonly("lo", &GridMeasure::lo)
      .def_property_readonly("hi", &GridMeasure::hi)
      .def_property_readonly("density",
                             [](const GridMeasure& g) { return g.density(); })
      .def("to_discrete", &GridMeasure::to_discrete)
      .def("__len__", &GridMeasure::n);

  py::class_<JointTable>(m, "JointTable")
      .def(py::init([](const py::sequence& xs, const py::sequence& ys,
                       const std::vector<std::vector<double>>& mass) {
             return JointTable(to_outcomes(xs), to_outcomes(ys), mass);
           }),
           py::arg("x_labels"), py::arg("y_labels"), py::arg("mass"))
      .def_property_readonly("mass",
                             [](const JointTable& j) { return j.mass(); });

  py::class_<LossFunction>(m, "LossFunction")
      .def("__call__",
           [](const LossFunction& h, const py::handle& y) {
             return h(to_outcome(y));
           })
      .def_property_readonly("scale", &LossFunction::scale);

  m.def("zero_loss", &zero_loss);
  m.def(
      "tabular_loss",
      [](const py::dict& values, double k) {
        return tabular_loss(to_table(values), k);
      },
      py::arg("values"), py::arg("k") = 1.0);
  m.def("quadratic_loss", &quadratic_loss, py::arg("w"), py::arg("k") = 1.0);
  m.def(
      "restriction_loss",
      [](const py::sequence& allowed, double k) {
        auto pts = to_outcomes(allowed);
        return restriction_loss(std::set<Outcome>(pts.begin(), pts.end()), k);
      },
      py::arg("allowed"), py::arg("k") = 1.0);
  m.def("combine", &combine, py::arg("hI"), py::arg("hJ"));
  m.def("self_information_loss", &self_information_loss, py::arg("joint"),
        py::arg("x_index"));

  py::class_<GDivergenceGenerator>(m, "GDivergenceGenerator")
      .def_property_readonly("name", &GDivergenceGenerator::name)
      .def("g", &GDivergenceGenerator::g)
      .def("g_prime", &GDivergenceGenerator::g_prime);
  m.def("generator", &generator_from_name, py::arg("name"),
        py::return_value_policy::reference);

  m.def("divergence", &divergence, py::arg("gen"), py::arg("q1"),
        py::arg("q2"));
  m.def("kl", &kl, py::arg("q1"), py::arg("q2"));

  py::class_<UpdateReport>(m, "UpdateReport")
      .def_readonly("posterior", &UpdateReport::posterior)
      .def_readonly("log_normalizer", &UpdateReport::log_normalizer)
      .def_readonly("cumulative_loss",
                    &UpdateReport::cumulative_loss_at_posterior)
      .def_readonly("integrable", &UpdateReport::integrable)
      .def_readonly("multiplier", &UpdateReport::multiplier)
      .def_readonly("degenerate", &UpdateReport::degenerate);

  py::class_<GridUpdateReport>(m, "GridUpdateReport")
      .def_readonly("posterior", &GridUpdateReport::posterior)
      .def_readonly("log_normalizer", &GridUpdateReport::log_normalizer)
      .def_readonly("cumulative_loss",
                    &GridUpdateReport::cumulative_loss_at_posterior);

  m.def("tilt",
        py::overload_cast<const DiscreteMeasure&, const LossFunction&>(
            &tilt::tilt),
        py::arg("prior"), py::arg("loss"));
  m.def("tilt_grid",
        py::overload_cast<const GridMeasure&, const LossFunction&>(
            &tilt::tilt),
        py::arg("prior"), py::arg("loss"));
  m.def("conditional_from_joint", &conditional_from_joint, py::arg("joint"),
        py::arg("x_index"));
  m.def("marginals", &marginals, py::arg("joint"));
  m.def("cumulative_loss", &cumulative_loss, py::arg("loss"), py::arg("lam"),
        py::arg("prior"), py::arg("gen"));

  m.def(
      "minimize_simplex",
      [](const DiscreteMeasure& prior, const LossFunction& h,
         const GDivergenceGenerator& gen, int max_iters, double tol) {
        SimplexOptions opts;
        opts.max_iters = max_iters;
        opts.tol = tol;
        return minimize_simplex(prior, h, gen, opts);
      },
      py::arg("prior"), py::arg("loss"), py::arg("gen"),
      py::arg("max_iters") = 10000, py::arg("tol") = 1e-10);
  m.def("two_point_stationary", &two_point_stationary, py::arg("p0"),
        py::arg("delta_h"), py::arg("gen"));
  m.def(
      "kl_constraint_project",
      [](const DiscreteMeasure& prior, const py::function& moment,
         double bound) {
        return kl_constraint_project(
            prior,
            [&](const Outcome& y) {
              return moment(from_outcome(y)).cast<double>();
            },
            bound);
      },
      py::arg("prior"), py::arg("moment"), py::arg("bound"));

  py::class_<CoherenceResult>(m, "CoherenceResult")
      .def_readonly("p_joint", &CoherenceResult::p_joint)
      .def_readonly("p_seq", &CoherenceResult::p_seq)
      .def_readonly("gap", &CoherenceResult::gap);

  py::class_<CoherenceInstance>(m, "CoherenceInstance")
      .def_readonly("p0", &CoherenceInstance::p0)
      .def_readonly("hI_delta", &CoherenceInstance::hI_delta)
      .def_readonly("hJ_delta", &CoherenceInstance::hJ_delta)
      .def_readonly("generator", &CoherenceInstance::generator);

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("instance", &SearchOutcome::instance)
      .def_readonly("result", &SearchOutcome::result)
      .def_readonly("trials_run", &SearchOutcome::trials_run)
      .def_readonly("trials_skipped", &SearchOutcome::trials_skipped);

  m.def("coherence_gap", &coherence_gap, py::arg("prior"), py::arg("hI"),
        py::arg("hJ"), py::arg("gen"));
  m.def("search_counterexample", &search_counterexample, py::arg("gen"),
        py::arg("trials"), py::arg("seed"));
  m.def("gprime_additivity_residual", &gprime_additivity_residual,
        py::arg("gen"), py::arg("n_samples"), py::arg("seed"));
}
