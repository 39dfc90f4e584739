#include "quotidx/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "quotidx/burnside.hpp"

namespace quotidx {

namespace {

std::string inertia_str(const InertiaTriple &t) {
  std::ostringstream out;
  out << "(" << t.n_plus << ", " << t.n_zero << ", " << t.n_minus << ")";
  return out.str();
}

std::string cplx_str(const Cplx &c) {
  std::ostringstream out;
  out << std::setprecision(12) << c.real();
  if (c.imag() != 0.0) {
    out << (c.imag() > 0 ? " + " : " - ") << std::setprecision(12)
        << std::abs(c.imag()) << "i";
  }
  return out.str();
}

std::string elem_str(const GroupElem &g) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < g.size(); ++i) out << (i ? ", " : "") << g[i];
  out << ")";
  return out.str();
}

void render_oracle(const OracleReport &rep, std::ostream &out) {
  out << "oracle_points = " << rep.points.size() << "\n";
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    out << "point[" << i << "] = (";
    for (std::size_t j = 0; j < rep.points[i].coordinates.size(); ++j)
      out << (j ? ", " : "") << cplx_str(rep.points[i].coordinates[j]);
    out << ")\n";
  }
  for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
    const ClassifiedOrbit &o = rep.orbits[i];
    out << "orbit[" << i << "] = size " << o.point_indices.size()
        << ", isotropy " << o.isotropy.size()
        << (o.isotropy_in_kernel ? " (in ker det)" : " (not in ker det)")
        << ", real " << (o.real_in_closure ? "yes" : "no") << ", k "
        << o.stratum_k << ", contribution " << o.contribution
        << (o.inside_ball ? "" : " [outside ball]") << "\n";
  }
  out << "oracle_escapees = " << rep.escapees << "\n";
  out << "oracle_sum = " << rep.sum << "\n";
}

int cmd_signature(const ProblemDescription &desc, const RunOptions &options,
                  std::ostream &out, std::ostream &err, bool oracle_only) {
  if (!desc.f && desc.components.empty()) {
    err << "error: the document has no [form] section\n";
    return kInputError;
  }
  MatrixAction action = desc.action();
  OneForm omega = desc.form();
  RadialIndexReport rep = radial_index_report(omega, action);

  if (!oracle_only) {
    out << "command = signature\n";
    out << "group_order = " << action.group().order() << "\n";
    out << "algebra_dim = " << rep.dim << "\n";
    out << "invariant_dim = " << rep.invariant_dim << "\n";
    if (rep.dim > 0) {
      out << "inertia_full = " << inertia_str(rep.pairing.inertia_full) << "\n";
      out << "inertia_invariant = " << inertia_str(rep.pairing.inertia_invariant)
          << "\n";
    }
    out << "signature = " << rep.index << "\n";
    out << "radial_index = " << rep.index << "\n";
    for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
      const SignatureBlock &b = rep.blocks[i];
      out << "block[" << i << "] = orders (";
      for (std::size_t j = 0; j < b.cyclotomic_orders.size(); ++j)
        out << (j ? ", " : "") << b.cyclotomic_orders[j];
      out << "), dim " << b.basis.size() << ", inertia " << inertia_str(b.inertia);
      if (b.is_sign_character) {
        out << ", character (";
        for (std::size_t j = 0; j < b.character.size(); ++j)
          out << (j ? ", " : "") << (b.character[j] > 0 ? "+1" : "-1");
        out << ")";
      }
      out << "\n";
    }
  }

  if (oracle_only || options.with_oracle) {
    OracleOptions oo;
    oo.seed = options.seed;
    oo.max_degree = options.max_degree;
    oo.tol_root = options.tol_root;
    oo.tol_classify = options.tol_classify;
    OracleReport orep = oracle_check(omega, action, oo);
    if (oracle_only) {
      out << "command = oracle-check\n";
      out << "symbolic_signature = " << rep.index << "\n";
    }
    render_oracle(orep, out);
    bool agree = orep.sum == rep.index;
    out << "verdict = " << (agree ? "AGREE" : "DISAGREE") << " (" << orep.sum
        << " vs " << rep.index << ")\n";
    if (!agree) {
      err << "error: oracle sum " << orep.sum
          << " disagrees with the symbolic signature " << rep.index << "\n";
      return kVerificationFailure;
    }
  }
  return kOk;
}

int cmd_quantum(const ProblemDescription &desc, std::ostream &out,
                std::ostream &err) {
  if (!desc.f) {
    err << "error: the quantum command needs f in the [form] section\n";
    return kInputError;
  }
  out << "command = quantum\n";
  if (desc.diagonal) {
    DiagonalReport rep = diagonal_sector_dims(*desc.f, desc.diagonal_action());
    for (std::size_t i = 0; i < rep.sectors.size(); ++i) {
      const DiagonalSector &s = rep.sectors[i];
      out << "sector[" << i << "] = g " << elem_str(s.g) << ", fixed " << s.n_g
          << ", dim " << s.dim << "\n";
    }
    out << "total_dim = " << rep.total_dim << "\n";
    out << "orbifold_dim = " << rep.orbifold_dim << "\n";
    return kOk;
  }
  QuantumReport rep = quantum_report(*desc.f, desc.action());
  for (std::size_t i = 0; i < rep.sectors.size(); ++i) {
    const Sector &s = rep.sectors[i];
    out << "sector[" << i << "] = g " << elem_str(s.g) << ", fixed " << s.n_g
        << ", dim " << s.inv_dim << ", inertia " << inertia_str(s.inertia)
        << "\n";
  }
  out << "total_dim = " << rep.total_dim << "\n";
  out << "orbifold_dim = " << rep.orbifold_dim << "\n";
  out << "real_signature = " << rep.real_signature << "\n";
  return kOk;
}

int cmd_burnside(const ProblemDescription &desc, std::ostream &out,
                 std::ostream &err) {
  if (desc.diagonal) {
    err << "error: the burnside command needs invariant_factors\n";
    return kInputError;
  }
  BurnsideRing ring((AbelianGroup(desc.invariant_factors)));
  const SubgroupLattice &lat = ring.lattice();
  if (desc.burnside_coeffs.empty()) {
    err << "error: the document has no [burnside] element line\n";
    return kInputError;
  }
  if (desc.burnside_coeffs.size() != lat.subgroups.size()) {
    err << "error: expected " << lat.subgroups.size()
        << " coefficients, one per subgroup\n";
    return kInputError;
  }
  BurnsideElement a;
  for (std::size_t i = 0; i < desc.burnside_coeffs.size(); ++i)
    if (desc.burnside_coeffs[i] != 0) a.coeffs[i] = desc.burnside_coeffs[i];

  out << "command = burnside\n";
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    out << "subgroup[" << i << "] = order " << lat.subgroups[i].size() << ", {";
    for (std::size_t j = 0; j < lat.subgroups[i].size(); ++j)
      out << (j ? ", " : "") << elem_str(lat.subgroups[i][j]);
    out << "}\n";
  }
  out << "element = " << ring.to_string(a) << "\n";
  out << "r0 = " << ring.r0(a) << "\n";
  out << "r1 = " << ring.r1(a) << "\n";
  RepRingElement rep = ring.to_rep_ring(a);
  std::vector<GroupElem> elems = ring.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    out << "character" << elem_str(elems[i]) << " = " << rep.values[i].to_string()
        << "\n";
  return kOk;
}

}  // namespace

int run_command(const std::string &command, const ProblemDescription &desc,
                const RunOptions &options, std::ostream &out, std::ostream &err) {
  try {
    if (command == "signature")
      return cmd_signature(desc, options, out, err, false);
    if (command == "oracle-check")
      return cmd_signature(desc, options, out, err, true);
    if (command == "quantum") return cmd_quantum(desc, out, err);
    if (command == "burnside") return cmd_burnside(desc, out, err);
    err << "error: unknown command '" << command << "'\n";
    return kInputError;
  } catch (const NonIsolatedError &e) {
    err << "error: non-isolated singularity: " << e.what() << "\n";
    return kNonIsolated;
  } catch (const NonInvariantFormError &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace quotidx
