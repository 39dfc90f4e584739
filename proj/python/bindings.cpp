#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quotidx/cli.hpp"

namespace py = pybind11;
using namespace quotidx;

namespace {

ProblemDescription parse_or_throw(const std::string &document) {
  try {
    return parse_problem(document);
  } catch (const InputError &e) {
    throw py::value_error(e.what());
  }
}

RunOptions make_options(std::uint64_t seed, double tol_root, double tol_classify,
                        int max_degree, bool with_oracle) {
  RunOptions o;
  o.seed = seed;
  o.tol_root = tol_root;
  o.tol_classify = tol_classify;
  o.max_degree = max_degree;
  o.with_oracle = with_oracle;
  return o;
}

}  // namespace

PYBIND11_MODULE(quotidx, m) {
  m.doc() = "radial index of invariant 1-forms on real quotient singularities";

  m.def(
      "run",
      [](const std::string &command, const std::string &document,
         std::uint64_t seed, double tol_root, double tol_classify,
         int max_degree, bool with_oracle) {
        ProblemDescription desc = parse_or_throw(document);
        std::ostringstream out, err;
        int code = run_command(
            command, desc,
            make_options(seed, tol_root, tol_classify, max_degree, with_oracle),
            out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("command"), py::arg("document"), py::arg("seed") = 1,
      py::arg("tol_root") = 1e-10, py::arg("tol_classify") = 1e-6,
      py::arg("max_degree") = 4, py::arg("with_oracle") = false,
      "Run a command on a problem document; returns (exit_code, report, errors).");

  m.def(
      "radial_index",
      [](const std::string &document) {
        ProblemDescription desc = parse_or_throw(document);
        RadialIndexReport rep = radial_index_report(desc.form(), desc.action());
        return rep.index;
      },
      py::arg("document"),
      "Signature of the invariant residue pairing (= the radial index).");

  m.def(
      "signature_report",
      [](const std::string &document) {
        ProblemDescription desc = parse_or_throw(document);
        RadialIndexReport rep = radial_index_report(desc.form(), desc.action());
        py::dict d;
        d["dim"] = rep.dim;
        d["invariant_dim"] = rep.invariant_dim;
        d["index"] = rep.index;
        if (rep.dim > 0) {
          d["inertia_full"] =
              py::make_tuple(rep.pairing.inertia_full.n_plus,
                             rep.pairing.inertia_full.n_zero,
                             rep.pairing.inertia_full.n_minus);
          d["inertia_invariant"] =
              py::make_tuple(rep.pairing.inertia_invariant.n_plus,
                             rep.pairing.inertia_invariant.n_zero,
                             rep.pairing.inertia_invariant.n_minus);
        }
        py::list blocks;
        for (const SignatureBlock &b : rep.blocks) {
          py::dict bd;
          bd["orders"] = b.cyclotomic_orders;
          bd["dim"] = b.basis.size();
          bd["signature"] = b.inertia.signature();
          blocks.append(bd);
        }
        d["blocks"] = blocks;
        return d;
      },
      py::arg("document"), "Full signature report as a dictionary.");

  m.def(
      "quantum_totals",
      [](const std::string &document) {
        ProblemDescription desc = parse_or_throw(document);
        if (!desc.f) throw py::value_error("the quantum route needs f");
        if (desc.diagonal) {
          DiagonalReport rep = diagonal_sector_dims(*desc.f, desc.diagonal_action());
          return py::tuple(py::make_tuple(rep.total_dim, rep.orbifold_dim, py::none()));
        }
        QuantumReport rep = quantum_report(*desc.f, desc.action());
        return py::tuple(py::make_tuple(rep.total_dim, rep.orbifold_dim,
                                        rep.real_signature));
      },
      py::arg("document"),
      "(total_dim, orbifold_dim, real_signature) of the sector decomposition.");

  m.def(
      "oracle_sum",
      [](const std::string &document, std::uint64_t seed, int max_degree) {
        ProblemDescription desc = parse_or_throw(document);
        OracleOptions o;
        o.seed = seed;
        o.max_degree = max_degree;
        return oracle_check(desc.form(), desc.action(), o).sum;
      },
      py::arg("document"), py::arg("seed") = 1, py::arg("max_degree") = 4,
      "Numeric conservation-law sum for the document's form and group.");

  m.def(
      "format_document",
      [](const std::string &document) {
        return format_problem(parse_or_throw(document));
      },
      py::arg("document"), "Canonical re-rendering of a problem document.");

  py::register_exception<NonIsolatedError>(m, "NonIsolatedError");
  py::register_exception<DegeneratePairingError>(m, "DegeneratePairingError");
}
