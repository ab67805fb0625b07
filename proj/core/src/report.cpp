#include "coralg/report.hpp"

#include <sstream>

#include <json.hpp>

namespace coralg {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const Theorem3Report& rep, const std::string& fixture_hash) {
    ordered_json j;
    j["schema"] = "cover-report/1";
    j["fixture_hash"] = fixture_hash;
    ordered_json dims;
    dims["B"] = rep.dim_b;
    dims["A"] = rep.dim_a;
    dims["C"] = rep.dim_c;
    dims["Bc"] = rep.dim_bc;
    dims["coinvariants"] = rep.coinvariant_dim;
    j["dimensions"] = std::move(dims);
    ordered_json checks;
    checks["complete"] = rep.complete;
    checks["coring_axioms"] = rep.coring_axioms_ok;
    checks["coproduct_four_forms"] = rep.four_forms_ok;
    checks["phi_isomorphisms"] = rep.phi_dims_ok;
    checks["chi_bijective"] = rep.chi_bijective;
    checks["chi_explicit_inverses"] = rep.chi_inverses_ok;
    checks["chi_unit_to_grouplike"] = rep.chi_unit_to_grouplike;
    checks["sweedler_transport"] = rep.transport_ok;
    checks["grouplike"] = rep.grouplike_ok;
    checks["coinvariants_equal_kappa_image"] = rep.coinvariants_equal_kappa_image;
    checks["galois"] = rep.galois;
    checks["canonical_map_is_coring_map"] = rep.can_coring_map;
    checks["kappa_tensor_left_split"] = rep.kappa.left_split;
    checks["kappa_tensor_right_split"] = rep.kappa.right_split;
    checks["kappa_tensor_left_bijective"] = rep.kappa.left_bijective;
    checks["kappa_tensor_right_bijective"] = rep.kappa.right_bijective;
    if (rep.projective_left) checks["projective_left"] = *rep.projective_left;
    if (rep.projective_right) checks["projective_right"] = *rep.projective_right;
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string report_to_text(const Theorem3Report& rep, const std::string& fixture_hash,
                           double elapsed_seconds) {
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "fixture " << fixture_hash << "\n";
    os << "  dim B = " << rep.dim_b << ", dim A = " << rep.dim_a << ", dim C = " << rep.dim_c
       << ", dim B_c = " << rep.dim_bc << "\n";
    os << "  complete covering:          " << yn(rep.complete) << "\n";
    os << "  coring axioms:              " << yn(rep.coring_axioms_ok) << "\n";
    os << "  coproduct four forms agree: " << yn(rep.four_forms_ok) << "\n";
    os << "  phi isomorphisms:           " << yn(rep.phi_dims_ok) << "\n";
    os << "  chi bijective:              " << yn(rep.chi_bijective) << "\n";
    os << "  chi explicit inverses:      " << yn(rep.chi_inverses_ok) << "\n";
    os << "  chi(1⊗1) = g:               " << yn(rep.chi_unit_to_grouplike) << "\n";
    os << "  Sweedler transport:         " << yn(rep.transport_ok) << "\n";
    os << "  g grouplike:                " << yn(rep.grouplike_ok) << "\n";
    os << "  coinvariant dim:            " << rep.coinvariant_dim << "\n";
    os << "  coinvariants = κ(B):        " << yn(rep.coinvariants_equal_kappa_image) << "\n";
    os << "  Galois coring:              " << yn(rep.galois) << "\n";
    os << "  canonical map coring map:   " << yn(rep.can_coring_map) << "\n";
    os << "  κ⊗A / A⊗κ split by mult:    " << yn(rep.kappa.left_split) << " / "
       << yn(rep.kappa.right_split) << "\n";
    os << "  κ⊗A / A⊗κ bijective:        " << yn(rep.kappa.left_bijective) << " / "
       << yn(rep.kappa.right_bijective) << "\n";
    if (rep.projective_left && rep.projective_right)
        os << "  A projective over B (l/r):  " << yn(*rep.projective_left) << " / "
           << yn(*rep.projective_right) << "\n";
    else
        os << "  A projective over B (l/r):  skipped\n";
    os << "  elapsed: " << elapsed_seconds << " s\n";
    return os.str();
}

} // namespace coralg
