// Copyright 2026 The stabkit Authors
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

// Python bindings. Integers cross the boundary as Python ints and rationals
// as fractions.Fraction, so no precision is lost in either direction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/cp.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/farkas.hpp"
#include "stabkit/formulas.hpp"
#include "stabkit/proof_io.hpp"
#include "stabkit/rcp.hpp"
#include "stabkit/solver.hpp"
#include "stabkit/sp.hpp"
#include "stabkit/text.hpp"
#include "stabkit/transforms.hpp"
#include "stabkit/tseitin_refuter.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    std::string digits = py::str(src);
    return value.set_str(digits, 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    std::string digits = v.get_str();
    return PyLong_FromString(digits.c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      std::string digits = py::str(src);
      if (value.get_num().set_str(digits, 10) != 0) return false;
      value.get_den() = 1;
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    std::string num = py::str(src.attr("numerator"));
    std::string den = py::str(src.attr("denominator"));
    if (value.get_num().set_str(num, 10) != 0 || value.get_den().set_str(den, 10) != 0) {
      return false;
    }
    if (value.get_den() == 0) return false;
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num = py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
    py::int_ den = py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace stabkit {
namespace {

LinearInequality make_inequality(const std::vector<std::pair<std::uint32_t, BigInt>>& terms,
                                 const BigInt& bound) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [var, coeff] : terms) out.push_back({VarId{var}, coeff});
  return LinearInequality(std::move(out), bound);
}

std::vector<std::pair<std::uint32_t, BigInt>> inequality_terms(const LinearInequality& e) {
  std::vector<std::pair<std::uint32_t, BigInt>> out;
  for (const auto& t : e.terms()) out.emplace_back(t.var.index, t.coeff);
  return out;
}

std::vector<std::pair<std::string, Rational>> certificate_terms(const FarkasCertificate& c) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& t : c.terms()) out.emplace_back(t.ref.to_string(), t.coeff);
  return out;
}

Assignment to_assignment(const std::vector<int>& bits) {
  std::vector<std::uint8_t> values;
  values.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("assignment entries must be 0 or 1");
    values.push_back(static_cast<std::uint8_t>(b));
  }
  return Assignment(std::move(values));
}

std::vector<int> from_assignment(const Assignment& a) {
  return std::vector<int>(a.values().begin(), a.values().end());
}

VertexLabeling labeling_for(const Graph& g, const std::optional<std::string>& labeling,
                            std::uint64_t seed) {
  return labeling ? parse_labeling(*labeling) : odd_labeling(g.vertex_count(), seed);
}

py::dict sp_stats_dict(const SpStats& s) {
  py::dict d;
  d["length"] = s.length;
  d["depth"] = s.depth;
  d["bitsize"] = s.bitsize;
  d["leaves"] = s.leaves;
  d["queries"] = s.queries;
  d["max_abs_coeff"] = py::cast(s.max_abs_coeff);
  return d;
}

py::dict line_report_dict(const LineReport& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["failing_line"] = r.failing_line ? py::cast(*r.failing_line) : py::none();
  d["message"] = r.message;
  return d;
}

struct PySolveResult {
  std::string status;
  std::optional<SpProof> proof;
  std::optional<std::vector<int>> assignment;
  std::string reason;
  SolveStats stats;
};

}  // namespace
}  // namespace stabkit

PYBIND11_MODULE(_core, m) {
  using namespace stabkit;
  m.doc() = "Stabbing Planes proofs: verification, translation, refutation and search";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<DimensionError>(m, "DimensionError", error);
  py::register_exception<ReferenceError>(m, "ReferenceError", error);
  py::register_exception<EncodingError>(m, "EncodingError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<ResourceError>(m, "ResourceError", error);
  py::register_exception<InvalidProofError>(m, "InvalidProofError", error);
  py::register_exception<InvalidCertificateError>(m, "InvalidCertificateError", error);
  py::register_exception<ShapeError>(m, "ShapeError", error);

  py::class_<LinearInequality>(m, "Inequality",
                               "Integer inequality sum(coeff * x[var]) >= bound.")
      .def(py::init(&make_inequality), py::arg("terms"), py::arg("bound"))
      .def_static(
          "parse", [](const std::string& text) { return parse_inequality(text, 1); },
          py::arg("text"))
      .def_property_readonly("terms", &inequality_terms)
      .def_property_readonly("bound", [](const LinearInequality& e) { return e.bound(); })
      .def("negation", &integer_negation)
      .def("evaluate",
           [](const LinearInequality& e, const std::vector<int>& bits) {
             return evaluate(e, to_assignment(bits));
           })
      .def("is_contradiction", &LinearInequality::is_contradiction)
      .def("__str__", &LinearInequality::to_string)
      .def("__repr__",
           [](const LinearInequality& e) { return "Inequality('" + e.to_string() + "')"; })
      .def("__eq__", [](const LinearInequality& a, const LinearInequality& b) { return a == b; })
      .def("__hash__", &LinearInequality::hash);

  py::class_<InequalitySystem>(m, "System")
      .def(py::init<std::size_t, std::vector<LinearInequality>, bool>(), py::arg("nvars"),
           py::arg("inequalities"), py::arg("box") = true)
      .def_static(
          "from_dimacs", [](const std::string& text) { return cnf_to_system(parse_dimacs(text)); },
          py::arg("text"))
      .def_static("from_opb", &parse_opb, py::arg("text"))
      .def("to_opb", [](const InequalitySystem& s) { return write_opb(s); })
      .def_property_readonly("nvars", &InequalitySystem::nvars)
      .def_property_readonly("box", &InequalitySystem::include_box)
      .def_property_readonly("inequalities",
                             [](const InequalitySystem& s) {
                               return std::vector<LinearInequality>(s.inequalities().begin(),
                                                                    s.inequalities().end());
                             })
      .def_property_readonly("axioms",
                             [](const InequalitySystem& s) {
                               return std::vector<LinearInequality>(s.axioms().begin(),
                                                                    s.axioms().end());
                             })
      .def("__eq__", [](const InequalitySystem& a, const InequalitySystem& b) { return a == b; })
      .def("__repr__", [](const InequalitySystem& s) {
        return "System(nvars=" + std::to_string(s.nvars()) +
               ", inequalities=" + std::to_string(s.explicit_count()) + ")";
      });

  py::class_<FarkasCertificate>(m, "Certificate")
      .def_property_readonly("terms", &certificate_terms)
      .def("verify",
           [](const FarkasCertificate& c, const InequalitySystem& s) {
             return verify_certificate(AxiomContext(s.axioms()), c);
           })
      .def("__str__", &FarkasCertificate::to_string)
      .def("__repr__",
           [](const FarkasCertificate& c) { return "Certificate('" + c.to_string() + "')"; });

  m.def(
      "find_certificate",
      [](const InequalitySystem& s) -> py::object {
        FarkasResult r = find_certificate(AxiomContext(s.axioms()), s.nvars());
        if (auto* c = std::get_if<FarkasCertificate>(&r)) return py::cast(*c);
        return py::cast(std::get<Witness>(r).point);
      },
      py::arg("system"),
      "A Certificate if the rational polytope is empty, otherwise a point in it as a list of "
      "Fractions.");
  m.def(
      "reduce_support",
      [](const InequalitySystem& s, const FarkasCertificate& c) {
        return reduce_support(AxiomContext(s.axioms()), c);
      },
      py::arg("system"), py::arg("certificate"));

  py::class_<SpProof>(m, "SpProof")
      .def_static("from_text", &parse_sp, py::arg("text"))
      .def("to_text", &write_sp)
      .def_property_readonly("system", [](const SpProof& p) { return p.system; })
      .def(
          "verify",
          [](const SpProof& p, unsigned jobs) {
            VerifyReport r = verify_sp(p, jobs);
            py::dict d;
            d["ok"] = r.ok;
            d["failing_node"] = r.failing_node ? py::cast(*r.failing_node) : py::none();
            d["path"] = r.path;
            d["message"] = r.message;
            d["nodes"] = r.nodes;
            return d;
          },
          py::arg("jobs") = 1)
      .def("stats", [](const SpProof& p) { return sp_stats_dict(sp_stats(p)); })
      .def(
          "evaluate_search",
          [](const SpProof& p, const std::vector<int>& bits) {
            return evaluate_search(p, to_assignment(bits)).index;
          },
          py::arg("assignment"),
          "Index of the system axiom the search tree blames for the assignment.");

  py::class_<CpProof>(m, "CpProof")
      .def_static("from_text", &parse_cp, py::arg("text"))
      .def("to_text", &write_cp)
      .def_property_readonly("system", [](const CpProof& p) { return p.system; })
      .def("__len__", [](const CpProof& p) { return p.lines.size(); })
      .def("verify", [](const CpProof& p) { return line_report_dict(verify_cp(p)); })
      .def("shape", [](const CpProof& p) {
        CpShape s = cp_shape(p);
        py::dict d;
        d["length"] = s.length;
        d["rank"] = s.rank;
        d["is_tree"] = s.is_tree;
        return d;
      })
      .def("replay", &replay_as_config, py::arg("erase_dead") = true,
           "The proof as a configuration derivation.");

  py::class_<CpConfigProof>(m, "CpConfigProof")
      .def_static("from_text", &parse_cp_config, py::arg("text"))
      .def("to_text", &write_cp_config)
      .def("verify", [](const CpConfigProof& p) {
        CpConfigReport r = verify_cp_config(p);
        py::dict d = line_report_dict(r.report);
        d["space"] = r.space;
        d["length"] = r.length;
        return d;
      });

  py::class_<RcpProof>(m, "RcpProof")
      .def_static("from_text", &parse_rcp, py::arg("text"))
      .def("to_text", &write_rcp)
      .def("__len__", [](const RcpProof& p) { return p.lines.size(); })
      .def("verify", [](const RcpProof& p) { return line_report_dict(verify_rcp(p)); })
      .def("shape", [](const RcpProof& p) {
        RcpShape s = rcp_shape(p);
        py::dict d;
        d["length"] = s.length;
        d["depth"] = s.depth;
        d["width"] = s.width;
        d["is_tree"] = s.is_tree;
        return d;
      });

  m.def("cp_to_sp_size", &cp_to_sp_size, py::arg("proof"));
  m.def("cp_tree_to_sp_depth", &cp_tree_to_sp_depth, py::arg("proof"));
  m.def("cp_tree_to_sp_balanced", &cp_tree_to_sp_balanced, py::arg("proof"));
  m.def("cp_space_to_sp", &cp_space_to_sp, py::arg("proof"));
  m.def("sp_to_rcp", &sp_to_rcp, py::arg("proof"));
  m.def("rcp_to_sp", &rcp_to_sp, py::arg("proof"));

  m.def(
      "tseitin_dimacs",
      [](const std::string& graph, const std::optional<std::string>& labeling,
         std::uint64_t seed) {
        Graph g = graph_from_spec(graph, seed);
        VertexLabeling lab = labeling_for(g, labeling, seed);
        Cnf cnf = tseitin_cnf(g, lab);
        cnf.comments = {"graph=" + graph, "labeling=" + labeling_to_string(lab)};
        return write_dimacs(cnf);
      },
      py::arg("graph"), py::arg("labeling") = py::none(), py::arg("seed") = 1);
  m.def(
      "pebbling_dimacs",
      [](std::size_t height) { return write_dimacs(pebbling_cnf(pyramid_dag(height))); },
      py::arg("height"));
  m.def(
      "tseitin_system",
      [](const std::string& graph, const std::optional<std::string>& labeling,
         std::uint64_t seed) {
        Graph g = graph_from_spec(graph, seed);
        return tseitin_system(g, labeling_for(g, labeling, seed));
      },
      py::arg("graph"), py::arg("labeling") = py::none(), py::arg("seed") = 1);
  m.def(
      "refute_tseitin",
      [](const std::string& graph, const std::optional<std::string>& labeling,
         std::uint64_t seed, bool lp_certificates) {
        Graph g = graph_from_spec(graph, seed);
        TseitinOptions opts;
        opts.lp_certificates = lp_certificates;
        py::gil_scoped_release release;
        return refute_tseitin(g, labeling_for(g, labeling, seed), opts);
      },
      py::arg("graph"), py::arg("labeling") = py::none(), py::arg("seed") = 1,
      py::arg("lp_certificates") = false);

  py::class_<PySolveResult>(m, "SolveResult")
      .def_readonly("status", &PySolveResult::status)
      .def_readonly("proof", &PySolveResult::proof)
      .def_readonly("assignment", &PySolveResult::assignment)
      .def_readonly("reason", &PySolveResult::reason)
      .def_property_readonly("nodes", [](const PySolveResult& r) { return r.stats.nodes; })
      .def_property_readonly("lp_calls", [](const PySolveResult& r) { return r.stats.lp_calls; })
      .def("__repr__", [](const PySolveResult& r) { return "SolveResult('" + r.status + "')"; });

  m.def(
      "sp_solve",
      [](const InequalitySystem& s, const std::string& heuristic, std::size_t max_nodes,
         std::uint64_t seed) {
        auto h = parse_heuristic(heuristic);
        if (!h) throw DomainError("unknown heuristic " + heuristic);
        SolveLimits limits;
        limits.max_nodes = max_nodes;
        limits.seed = seed;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = sp_solve(s, *h, limits);
        }
        PySolveResult out;
        out.stats = r.stats;
        if (auto* p = std::get_if<SpProof>(&r.outcome)) {
          out.status = "unsat";
          out.proof = std::move(*p);
        } else if (auto* a = std::get_if<Assignment>(&r.outcome)) {
          out.status = "sat";
          out.assignment = from_assignment(*a);
        } else {
          out.status = "unknown";
          out.reason = std::get<ResourceExceeded>(r.outcome).reason;
        }
        return out;
      },
      py::arg("system"), py::arg("heuristic") = "variable",
      py::arg("max_nodes") = SolveLimits{}.max_nodes, py::arg("seed") = 0);

  m.def(
      "brute_force_unsat",
      [](const InequalitySystem& s) {
        BruteForceResult r = brute_force_unsat(s);
        std::optional<std::vector<int>> witness;
        if (r.witness) witness = from_assignment(*r.witness);
        return std::make_pair(r.unsat, witness);
      },
      py::arg("system"), "(unsat, witness) by exhaustive search; at most 25 variables.");
}
