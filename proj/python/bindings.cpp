#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "classdist/arith.hpp"
#include "classdist/classes.hpp"
#include "classdist/errors.hpp"
#include "classdist/matrices.hpp"
#include "classdist/theorems.hpp"

namespace py = pybind11;
using namespace classdist;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

py::list matrix_to_py(const DivisorMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.side(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.side(); ++c) row.append(fraction(m.at(r, c)));
    rows.append(row);
  }
  return rows;
}

py::dict report_to_py(const VerificationReport& report) {
  return py::module_::import("json").attr("loads")(to_json(report).dump());
}

py::list reports_to_py(const std::vector<VerificationReport>& reports) {
  py::list out;
  for (const auto& r : reports) out.append(report_to_py(r));
  return out;
}

py::dict table_to_py(const ClassTable& table) {
  py::dict out;
  py::list classes;
  for (const auto& cls : table.classes) {
    py::dict c;
    c["representative"] = cls.representative.to_cycles();
    c["size"] = cls.size();
    c["coset_order"] = cls.coset_order;
    c["centralizing_index"] = cls.centralizing_index;
    classes.append(c);
  }
  out["classes"] = classes;
  py::dict counts;
  for (long long c : divisor_set(table.cs.n).divisors)
    for (long long d : divisor_set(c).divisors)
      counts[py::make_tuple(d, c)] = table.count(d, c);
  out["counts"] = counts;
  auto map_to_py = [](const std::map<long long, long long>& m) {
    py::dict d;
    for (auto [k, v] : m) d[py::int_(k)] = v;
    return d;
  };
  out["coset_totals"] = map_to_py(table.coset_totals);
  out["subgroup_totals"] = map_to_py(table.subgroup_totals);
  out["own_counts"] = map_to_py(table.own_counts);
  out["n"] = table.cs.n;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification of conjugacy-class distribution over cosets";

  py::register_exception<ParseError>(m, "GroupSpecParseError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "ArgumentDomainError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "OrderCapError", PyExc_RuntimeError);

  m.def("divisor_set", [](long long n) { return divisor_set(n).divisors; },
        py::arg("n"), "All divisors of n, ascending.");
  m.def("totient", &totient, py::arg("n"));
  m.def("mobius", &mobius, py::arg("n"));
  m.def("tau", &tau, py::arg("n"));
  m.def(
      "generating_coset_profile",
      [](long long i, long long j) {
        auto p = generating_coset_profile(i, j);
        py::dict out;
        out["i"] = p.i;
        out["j"] = p.j;
        out["u"] = p.u;
        out["v"] = p.v;
        py::dict counts;
        for (auto [order, count] : p.order_counts) counts[py::int_(order)] = count;
        out["order_counts"] = counts;
        return out;
      },
      py::arg("i"), py::arg("j"),
      "Element-order census of a generating coset of C_i inside C_j.");

  py::class_<FiniteGroup>(m, "Group")
      .def_static(
          "from_generators",
          [](uint32_t degree, const std::vector<std::string>& cycles, std::size_t order_cap) {
            std::vector<Permutation> gens;
            for (const auto& c : cycles) gens.push_back(Permutation::parse_cycles(degree, c));
            return FiniteGroup::from_generators(degree, std::move(gens), order_cap);
          },
          py::arg("degree"), py::arg("generators"), py::arg("order_cap") = kDefaultOrderCap)
      .def("order", &FiniteGroup::order)
      .def("degree", &FiniteGroup::degree)
      .def("elements",
           [](const FiniteGroup& g) {
             std::vector<std::string> out;
             for (const auto& e : g.elements()) out.push_back(e.to_cycles());
             return out;
           })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group of order " + std::to_string(g.order()) + " on " +
               std::to_string(g.degree()) + " points>";
      });

  py::class_<CosetStructure>(m, "CosetStructure")
      .def_readonly("n", &CosetStructure::n)
      .def_readwrite("label", &CosetStructure::label)
      .def("coset_of",
           [](const CosetStructure& cs, const std::string& cycles) {
             return cs.coset_of(Permutation::parse_cycles(cs.group.degree(), cycles));
           })
      .def("coset_order_of", [](const CosetStructure& cs, const std::string& cycles) {
        return cs.coset_order_of(Permutation::parse_cycles(cs.group.degree(), cycles));
      });

  m.def(
      "parse_group_spec",
      [](const std::string& text, std::size_t order_cap) {
        auto [g, h] = parse_group_spec(text, order_cap);
        return py::make_tuple(g, h);
      },
      py::arg("text"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("build_coset_structure", &build_coset_structure, py::arg("group"), py::arg("subgroup"));
  m.def("class_table", [](const CosetStructure& cs) { return table_to_py(build_class_table(cs)); },
        py::arg("coset_structure"));

  m.def("matrix_index", [](long long n) { return DivisorMatrix(n).index(); }, py::arg("n"));
  m.def("lhs_matrix", [](long long n) { return matrix_to_py(lhs_matrix(n)); }, py::arg("n"));
  m.def("rhs_matrix", [](long long n) { return matrix_to_py(rhs_matrix(n)); }, py::arg("n"));
  m.def("transfer_matrix", [](long long n) { return matrix_to_py(transfer_matrix(n)); },
        py::arg("n"));
  m.def("lhs_determinant", [](long long n) { return fraction(det_exact(lhs_matrix(n))); },
        py::arg("n"));
  m.def(
      "eigenspace_dimensions",
      [](long long n) {
        auto m_ = transfer_matrix(n);
        py::dict out;
        for (const auto& [lambda, mult] : predicted_spectrum(n))
          out[fraction(lambda)] = eigenspace_dimension(m_, lambda);
        return out;
      },
      py::arg("n"), "Exact eigenspace dimensions of the transfer matrix at each eigenvalue.");
  m.def(
      "kernel_witness",
      [](long long p, long long a, long long b) {
        py::list out;
        for (const auto& q : kernel_witness(p, a, b)) out.append(fraction(q));
        return out;
      },
      py::arg("p"), py::arg("a"), py::arg("b"));

  m.def(
      "verify_group",
      [](const std::string& text, const std::string& label, std::size_t order_cap) {
        auto [g, h] = parse_group_spec(text, order_cap);
        CosetStructure cs = build_coset_structure(g, h);
        cs.label = label;
        return reports_to_py(verify_group_suite(build_class_table(cs)));
      },
      py::arg("text"), py::arg("label") = "", py::arg("order_cap") = kDefaultOrderCap,
      "Run the full check suite on one group-spec document.");
  m.def("verify_spectrum", [](long long n) { return report_to_py(verify_spectrum(n)); },
        py::arg("n"));
  m.def("verify_prime_power_kernel",
        [](long long p, long long a) { return report_to_py(verify_prime_power_kernel(p, a)); },
        py::arg("p"), py::arg("a"));
  m.def("verify_tensor_factorization",
        [](long long m_, long long big) { return report_to_py(verify_tensor_factorization(m_, big)); },
        py::arg("m"), py::arg("M"));
  m.def(
      "run_corpus",
      [](const std::vector<std::pair<std::string, std::string>>& specs, long long n_max,
         std::size_t order_cap) {
        std::vector<CorpusSpec> cs;
        for (const auto& [name, text] : specs) cs.push_back({name, text});
        return reports_to_py(run_corpus(cs, n_max, order_cap));
      },
      py::arg("specs"), py::arg("n_max"), py::arg("order_cap") = kDefaultOrderCap);
}
