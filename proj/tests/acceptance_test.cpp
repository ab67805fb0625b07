// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "coralg/report.hpp"

using namespace coralg;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

struct SuiteEntry {
    std::string name;
    FixtureDocument doc;
    bool open_cover = false;
};

std::vector<SuiteEntry> build_suite() {
    std::vector<SuiteEntry> suite;
    suite.push_back({"fn3", build_open_cover_fixture(3, {{0, 1}, {1, 2}}), true});
    suite.push_back({"oc2", build_open_cover_fixture(2, {{0}, {1}}), true});
    suite.push_back({"oc4", build_open_cover_fixture(4, {{0, 1}, {1, 2}, {2, 3}}), true});
    suite.push_back({"oc3-f5",
                     build_open_cover_fixture(3, {{0, 1}, {1, 2}}, Field::prime(5)), true});
    suite.push_back({"nil3", build_nil3_fixture(), false});
    {
        // trivial covering: the zero ideal of k^2
        FixtureDocument doc = build_open_cover_fixture(2, {{0, 1}});
        doc.name = "trivial";
        suite.push_back({"trivial", doc, true});
    }
    GeneratorProfile profiles[3] = {GeneratorProfile::two_ideal, GeneratorProfile::semisimple,
                                    GeneratorProfile::mixed};
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GeneratorProfile p = profiles[seed % 3];
        suite.push_back({"random-" + std::to_string(seed), random_covering(seed, p), false});
    }
    return suite;
}

struct Prepared {
    SuiteEntry entry;
    Covering cov;
    CoveringCoring coring;
};

} // namespace

int main() {
    std::vector<SuiteEntry> suite = build_suite();
    std::vector<Prepared> prepared;

    // 1. coring axioms on every fixture (named + 100 randomized), < 60 s
    criterion(1, "coring axioms hold on every fixture (exact, < 60 s)", [&] {
        auto start = std::chrono::steady_clock::now();
        bool all = true;
        for (const SuiteEntry& e : suite) {
            Covering cov = e.doc.covering();
            CoveringCoring cc = covering_coring(cov);
            if (!verify_coring(cc.coring).ok) {
                std::cerr << "  coring axioms fail on " << e.name << "\n";
                all = false;
            }
            prepared.push_back({e, std::move(cov), std::move(cc)});
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "  (" << suite.size() << " fixtures, " << secs << " s)\n";
        return all && secs < 60.0;
    });

    // 2. all four coproduct expressions agree on every carrier basis element
    criterion(2, "four coproduct forms agree on every fixture", [&] {
        for (const Prepared& p : prepared) {
            std::size_t cd = p.coring.coring.carrier.dim;
            for (std::size_t e = 0; e < cd; ++e) {
                Vec el = unit_vec(cd, e);
                Vec via = row_apply(el, p.coring.coring.coproduct);
                for (const Vec& form : coproduct_four_forms(p.coring, el))
                    if (form != via) return false;
            }
        }
        return true;
    });

    // 3. Φ/Θ/χ bijective with explicit two-sided inverses, χ(1⊗1) = g,
    //    and χ transports the Sweedler structure
    criterion(3, "gluing pipeline: phi/theta/chi inverses, chi(1⊗1)=g, transport", [&] {
        for (const Prepared& p : prepared) {
            const Field& f = p.cov.base.field();
            GluingMaps glue = gluing_maps(p.cov);
            for (std::size_t i = 0; i < p.cov.count; ++i)
                for (std::size_t j = 0; j < p.cov.count; ++j) {
                    const PhiData& ph = glue.phis[i][j];
                    std::size_t dij = p.cov.pair[i][j].quotient.dim();
                    if (ph.tensor.dim() != dij) return false;
                    if (ph.fwd * ph.inv != Matrix::identity(f, ph.tensor.dim())) return false;
                    if (ph.inv * ph.fwd != Matrix::identity(f, dij)) return false;
                }
            std::size_t taa = glue.tensor_aa.dim();
            std::size_t cd = p.coring.coring.carrier.dim;
            if (taa != cd) return false;
            if (glue.chi_fwd * glue.chi_inv != Matrix::identity(f, taa)) return false;
            if (glue.chi_inv * glue.chi_fwd != Matrix::identity(f, cd)) return false;
            if (glue.theta_fwd * glue.theta_inv != Matrix::identity(f, taa)) return false;
            if (glue.theta_inv * glue.theta_fwd !=
                Matrix::identity(f, glue.theta_inv.rows()))
                return false;
            CoveringCompletion comp = covering_completion(p.cov);
            Vec unit2 = glue.tensor_aa.pure(comp.a.sum.unit(), comp.a.sum.unit());
            if (row_apply(unit2, glue.chi_fwd) != p.coring.grouplike) return false;
            if (!sweedler_transport_check(p.coring, glue).ok) return false;
        }
        return true;
    });

    // 4. every complete covering is Galois with coinvariants = κ(B);
    //    the function-algebra example has dims (3, 4, 6, 3)
    criterion(4, "complete coverings are Galois with coinvariants = kappa(B)", [&] {
        for (const Prepared& p : prepared) {
            if (!is_complete(p.cov)) continue;
            CoveringCompletion comp = covering_completion(p.cov);
            CoinvariantAlgebra coin = coinvariants(p.coring.coring, p.coring.grouplike);
            if (Subspace::span(comp.kappa) != coin.space) return false;
            if (!galois_verdict(p.coring.coring, p.coring.grouplike).is_galois) return false;
        }
        Theorem3Report fn3 = theorem3_report(prepared[0].cov, true);
        return fn3.dim_b == 3 && fn3.dim_a == 4 && fn3.dim_c == 6 && fn3.dim_bc == 3 &&
               fn3.complete && fn3.galois;
    });

    // 5. the nil covering is incomplete with dim B_c = 4; dropping its third
    //    ideal restores completeness
    criterion(5, "incompleteness detected and repaired on the nil covering", [&] {
        Covering nil = build_nil3_fixture().covering();
        CoveringCompletion comp = covering_completion(nil);
        if (is_complete(nil) || comp.bc.dim() != 4 || nil.base.dim() != 3) return false;
        Covering two = validate_covering(nil.base, {nil.ideals[0], nil.ideals[1]});
        return is_complete(two);
    });

    // 6. κ⊗A and A⊗κ are split by the multiplication map on every fixture
    //    (incomplete ones included) and are bijective on every complete one
    criterion(6, "kappa tensor factorization on every fixture", [&] {
        for (const Prepared& p : prepared) {
            KappaTensorCheck k = kappa_tensor_isos(p.cov);
            if (!k.left_split || !k.right_split) return false;
            if (is_complete(p.cov) && !(k.left_bijective && k.right_bijective)) return false;
        }
        return true;
    });

    // 7. 100 randomized two-ideal coverings are all complete
    criterion(7, "100 random two-ideal coverings are complete", [&] {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            FixtureDocument doc = random_covering(seed, GeneratorProfile::two_ideal);
            Covering cov = doc.covering();
            if (cov.count != 2 || !is_complete(cov)) return false;
        }
        return true;
    });

    // 8. projectivity is consistent with completeness: open covers are
    //    projective and complete, the nil covering is neither, and no
    //    fixture is projective yet incomplete
    criterion(8, "projectivity/completeness consistency", [&] {
        for (const Prepared& p : prepared) {
            bool complete = is_complete(p.cov);
            if (p.entry.open_cover) {
                if (!complete) return false;
                if (!is_projective(p.cov.base, left_action_on_a(p.cov)).ok) return false;
                if (!is_projective(opposite(p.cov.base), right_action_on_a(p.cov)).ok)
                    return false;
            } else if (!complete) {
                // projective ∧ incomplete must never occur
                if (is_projective(p.cov.base, left_action_on_a(p.cov)).ok) return false;
                if (is_projective(opposite(p.cov.base), right_action_on_a(p.cov)).ok)
                    return false;
            }
        }
        Covering nil = build_nil3_fixture().covering();
        return !is_projective(nil.base, left_action_on_a(nil)).ok;
    });

    // 9. identical fixture ⇒ byte-identical JSON report (tolerance 0 throughout)
    criterion(9, "JSON reports are byte-deterministic", [&] {
        for (const std::string& which : {"fn3", "nil3", "random"}) {
            FixtureDocument doc = which == "fn3"
                                      ? build_open_cover_fixture(3, {{0, 1}, {1, 2}})
                                  : which == "nil3"
                                      ? build_nil3_fixture()
                                      : random_covering(5, GeneratorProfile::mixed);
            std::string first =
                report_to_json(theorem3_report(doc.covering()), fixture_hash(doc));
            std::string second =
                report_to_json(theorem3_report(doc.covering()), fixture_hash(doc));
            if (first != second || first.empty()) return false;
        }
        return true;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 9 acceptance criteria passed" << std::endl;
    return 0;
}
