#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siegelmult/arithmetic.hpp"
#include "siegelmult/certificates.hpp"
#include "siegelmult/errors.hpp"
#include "siegelmult/genus1_table.hpp"
#include "siegelmult/multipliers.hpp"

namespace py = pybind11;
using namespace siegelmult;

namespace {

// Python ints cross the boundary as decimal strings.
BigInt big(const py::int_& v) { return BigInt(static_cast<std::string>(pybind11::str(static_cast<py::handle>(v)))); }

CocycleConvention convention_of(const std::string& s) {
  if (s == "definition") return CocycleConvention::Definition;
  if (s == "automorphy") return CocycleConvention::Automorphy;
  throw PreconditionError("convention must be 'definition' or 'automorphy'");
}

ThetaConvention theta_convention_of(const std::string& s) {
  if (s == "standard") return ThetaConvention::Standard;
  if (s == "doubled") return ThetaConvention::Doubled;
  throw PreconditionError("theta convention must be 'standard' or 'doubled'");
}

}  // namespace

PYBIND11_MODULE(_siegelmult, m) {
  m.doc() = "Integer cocycles and multiplier systems on Sp(2g, Z).";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<NotSymplecticError>(m, "NotSymplecticError", precondition.ptr());
  py::register_exception<GenusMismatchError>(m, "GenusMismatchError", precondition.ptr());
  py::register_exception<ParseError>(m, "ParseError", precondition.ptr());
  py::register_exception<ContinuationError>(m, "ContinuationError", error.ptr());
  py::register_exception<ResidualGuardError>(m, "ResidualGuardError", error.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", error.ptr());
  py::register_exception<MultiplierError>(m, "MultiplierError", error.ptr());
  py::register_exception<SearchExhaustedError>(m, "SearchExhaustedError", error.ptr());

  m.def("normalize", [](const std::string& lit) { return parse_symplectic(lit).literal(); }, py::arg("m"),
        "Validate a matrix literal and return it in canonical form.");
  m.def("multiply", [](const std::string& a, const std::string& b) {
    return (parse_symplectic(a) * parse_symplectic(b)).literal();
  });
  m.def("inverse", [](const std::string& a) { return inverse(parse_symplectic(a)).literal(); });

  m.def(
      "w",
      [](const std::string& a, const std::string& b, const std::string& conv) {
        const auto v = cocycle(parse_symplectic(a), parse_symplectic(b), convention_of(conv));
        return py::make_tuple(v.w, v.residual);
      },
      py::arg("m"), py::arg("n"), py::arg("convention") = "definition",
      "(w, residual) by argument continuation.");
  m.def(
      "w_exact",
      [](const std::string& a, const std::string& b, const std::string& conv) {
        return genus1_cocycle(parse_symplectic(a), parse_symplectic(b), convention_of(conv));
      },
      py::arg("m"), py::arg("n"), py::arg("convention") = "automorphy", "Genus 1 closed-form table.");

  m.def("kronecker", [](const py::int_& c, const py::int_& d) { return kronecker(big(c), big(d)); });

  m.def(
      "theta_value",
      [](const std::vector<std::vector<Complex>>& rows, const std::string& conv) {
        const auto g = static_cast<Eigen::Index>(rows.size());
        CMatrix z(g, g);
        for (Eigen::Index i = 0; i < g; ++i) {
          if (static_cast<Eigen::Index>(rows[i].size()) != g) throw PreconditionError("theta_value: Z must be square");
          for (Eigen::Index j = 0; j < g; ++j) z(i, j) = rows[i][j];
        }
        return theta_value(SiegelPoint::make(z), theta_convention_of(conv));
      },
      py::arg("z"), py::arg("convention") = "standard");
  m.def(
      "theta_multiplier",
      [](const std::string& a, const std::string& conv) {
        return theta_multiplier(parse_symplectic(a), theta_convention_of(conv)).value;
      },
      py::arg("m"), py::arg("convention") = "standard");
  m.def("delta_multiplier",
        [](double r, const std::string& a) { return delta_multiplier(r, parse_symplectic(a)).value; });
  m.def("rademacher", [](const std::string& a) { return rademacher_integer(parse_symplectic(a)); });

  // certificates come back as their canonical JSON text
  m.def("lemma_tags", &lemma_tags);
  m.def("verify_lemma", [](const std::string& tag, int samples, std::uint64_t seed) {
    return verify_lemma(tag, samples, seed).dump();
  }, py::arg("tag"), py::arg("samples") = 1000, py::arg("seed") = 1);
  m.def("deligne", [](long q, long bound) { return deligne_certificate(q, bound).dump(); }, py::arg("q") = 4,
        py::arg("bound") = 10000);
  m.def("krons", [](long q, long bound) { return krons_certificate(q, bound).dump(); }, py::arg("q") = 4,
        py::arg("bound") = 10000);
  m.def("zpir", [](const std::string& a, long q) { return zpir_check(parse_symplectic(a), q).dump(); });
  m.def(
      "bms",
      [](const py::int_& a, const py::int_& c1, const py::int_& c2) {
        return bms_w_check(bms_parameters(big(a), big(c1), big(c2))).dump();
      },
      py::arg("a") = 5, py::arg("c1") = 4, py::arg("c2") = 4);
  m.def("small_identities", [] { return small_identities().dump(); });
  m.def(
      "mennicke",
      [](long q, int samples, std::uint64_t seed, int doublings) {
        return mennicke_axiom_check(q, samples, seed, doublings).to_json().dump(2);
      },
      py::arg("q") = 4, py::arg("samples") = 20, py::arg("seed") = 1, py::arg("doublings") = 4);
}
