// Copyright 2026 The gmplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "gmplab/boxes.hpp"
#include "gmplab/error.hpp"
#include "gmplab/eta.hpp"
#include "gmplab/gentle.hpp"
#include "gmplab/info.hpp"
#include "gmplab/linalg.hpp"
#include "gmplab/sqt.hpp"
#include "gmplab/vandam.hpp"

namespace py = pybind11;
using namespace gmplab;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

HermitianOperator to_operator(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ValidationError("expected a square matrix");
  const auto d = static_cast<std::size_t>(a.shape(0));
  std::vector<Complex> entries(a.data(), a.data() + d * d);
  return HermitianOperator(ComplexMatrix(d, std::move(entries)));
}

CArray to_array(const HermitianOperator& op) {
  const auto d = static_cast<py::ssize_t>(op.dim());
  CArray out({d, d});
  const auto entries = op.matrix().entries();
  std::copy(entries.begin(), entries.end(), out.mutable_data());
  return out;
}

EtaFunction make_eta(const std::string& name) {
  if (name == "quantum") return EtaFunction::quantum();
  if (name.rfind("file:", 0) == 0) return EtaFunction::from_csv(name.substr(5));
  throw ValidationError("eta must be 'quantum' or 'file:PATH'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gentle measurement, stretched qubit theories and nonlocality bounds";

  static py::exception<Error> base(m, "GmplabError", PyExc_RuntimeError);
  static py::exception<ValidationError> validation(m, "ValidationError", PyExc_ValueError);
  static py::exception<ThresholdOverflowError> overflow(m, "ThresholdOverflowError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(validation, e.what());
    } catch (const ThresholdOverflowError& e) {
      py::set_error(overflow, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  // Linear algebra
  m.def("trace_distance", [](const CArray& a, const CArray& b) {
    return trace_distance(to_operator(a), to_operator(b));
  });
  m.def("eigvalsh", [](const CArray& a) { return eigh(to_operator(a)).eigenvalues; },
        "Eigenvalues in descending order.");

  // Stretched qubit theory
  m.attr("THETA") = sqt::kTheta;
  m.def("q_of_tau", &sqt::q_of_tau);
  m.def("epsilon_of_tau", &sqt::epsilon_of_tau);
  m.def("rho_kl", [](int k, int l, double tau) {
    return to_array(sqt::rho_kl(k, l, sqt::SqtParams(tau)).op());
  });
  m.def("state_membership", [](const CArray& a, double tau) {
    const auto r = sqt::state_membership(to_operator(a), sqt::SqtParams(tau));
    py::dict d;
    d["member"] = r.member;
    d["trace_error"] = r.trace_error;
    d["comp_diag"] = r.comp_diag;
    d["fourier_diag"] = r.fourier_diag;
    d["spectral"] = r.spectral;
    return d;
  });
  m.def("effect_membership", [](const CArray& a, double tau) {
    const auto r = sqt::qubit_effect_report(to_operator(a), sqt::SqtParams(tau));
    py::dict d;
    d["member"] = r.member;
    d["min_eigenvalue"] = r.min_eigenvalue;
    d["min_probability"] = r.min_probability;
    d["worst_state"] = py::make_tuple(r.worst_state.x, r.worst_state.y, r.worst_state.z);
    return d;
  });

  // Gentle measurement
  m.def("eta_quantum", &eta_quantum);
  m.def("eta_inverse", [](double y, const std::string& eta) { return eta_inverse(make_eta(eta), y); },
        py::arg("y"), py::arg("eta") = "quantum");
  m.def("gentle_lemma", [](const CArray& rho, const CArray& x) {
    const auto r = gentle_lemma_check(to_operator(rho), to_operator(x));
    return py::make_tuple(r.lhs, r.rhs);
  });
  m.def("gmp_disturbance", [](const std::vector<CArray>& effects, const std::vector<double>& probs,
                              const std::vector<CArray>& states) {
    std::vector<HermitianOperator> ops;
    for (const auto& e : effects) ops.push_back(to_operator(e));
    if (probs.size() != states.size()) throw ValidationError("probabilities and states differ in length");
    std::vector<CqItem> items;
    for (std::size_t i = 0; i < probs.size(); ++i) items.push_back({probs[i], std::to_string(i), to_operator(states[i])});
    py::list out;
    for (const auto& r : gmp_disturbance(Povm::from_operators(std::move(ops)), CqEnsemble(std::move(items)))) {
      out.append(py::make_tuple(r.distance, r.bound));
    }
    return out;
  }, "Per-state (distance, bound) pairs for a POVM acting on a classical-quantum ensemble.");

  // Nonlocal boxes
  m.def("chsh_isotropic", [](double lambda) { return chsh_value(isotropic_box(lambda)); });
  m.def("isotropic_box", [](double lambda) { return isotropic_box(lambda).table(); },
        "Table indexed by ((r*2+s)*2+i)*2+j.");
  m.def("signalling_witness", [](const BoxTable& table) {
    const auto r = signalling_witness(table);
    return py::make_tuple(r.is_ns, r.max_violation);
  });
  m.def("lambda_bound", [](const std::string& eta) { return lambda_bound(make_eta(eta)); },
        py::arg("eta") = "quantum");

  // Information theory
  m.def("binary_entropy", &binary_entropy);
  m.def("binary_capacity", &binary_capacity);
  m.def("mutual_information", [](const RArray& joint) {
    if (joint.ndim() != 2) throw ValidationError("expected a 2-d joint distribution");
    std::vector<double> t(joint.data(), joint.data() + joint.size());
    return mutual_information(
        JointDistribution(static_cast<std::size_t>(joint.shape(0)), static_cast<std::size_t>(joint.shape(1)), t));
  });
  m.def("fano_lower_bound", [](double tau, const std::string& eta) {
    return fano_lower_bound(tau, make_eta(eta));
  }, py::arg("tau"), py::arg("eta") = "quantum");
  m.def("tau_bound", [](const std::string& eta) {
    const auto r = tau_bound_solver(make_eta(eta));
    py::dict d;
    d["tau_star"] = r.tau_star;
    d["fano_at_tau_star"] = r.fano_at_tau_star;
    d["bracket"] = py::make_tuple(r.bracket_lo, r.bracket_hi);
    d["trivial"] = r.trivial;
    d["closed_form_argument"] = r.closed_form_argument;
    return d;
  }, py::arg("eta") = "quantum");
  m.def("jn_lower_bound", &jn_lower_bound);
  m.def("pinsker_like_gap", &pinsker_like_gap);

  // van Dam protocol
  m.attr("MAX_LAYERS") = vandam::kMaxLayers;
  m.def("tau_prime", &vandam::tau_prime);
  m.def("success_probability", &vandam::exact_success_probability, py::arg("n"), py::arg("tau"));
  m.def("jn_exact", &vandam::jn_exact, py::arg("n"), py::arg("tau"));
  m.def("violation_threshold", [](double tau) {
    const auto t = vandam::violation_threshold(tau);
    return py::make_tuple(t.n_star, t.jn_at_n_star);
  });
  m.def("simulate", [](int n, double tau, std::uint64_t trials, std::uint64_t seed,
                       std::vector<std::size_t> targets, std::size_t threads) {
    const auto rep = [&] {
      py::gil_scoped_release release;
      return vandam::simulate({n, tau, trials, seed}, targets, threads);
    }();
    py::list out;
    for (const auto& t : rep.targets) {
      py::dict d;
      d["index"] = t.index;
      d["successes"] = t.successes;
      d["frequency"] = t.frequency;
      d["sigma"] = t.sigma;
      out.append(d);
    }
    py::dict d;
    d["p_exact"] = rep.p_exact;
    d["targets"] = out;
    return d;
  }, py::arg("n"), py::arg("tau"), py::arg("trials"), py::arg("seed"), py::arg("targets"),
     py::arg("threads") = 1);
}
