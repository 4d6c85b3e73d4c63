#pragma once

#include <map>
#include <string>
#include <vector>

#include "tqd/charged.hpp"
#include "tqd/modular.hpp"
#include "tqd/qdilog.hpp"

namespace tqd {

struct IdentityReport {
    std::string name;
    std::string params;
    double max_residual = 0.0;
    int points_checked = 0;
    bool passed = false;
};

// Registered tolerance per identity; the single source of truth cited by both
// run_suite and the acceptance tests.
const std::map<std::string, double>& identity_tolerances();

// Inversion relation: D_b(x,n) D_b(-x,-n) = <(x,n)> / zeta_inv on a grid.
IdentityReport check_inversion(const ModularParam& p, int points = 15);

// Unitarity, regime-dependent conjugation rule.
IdentityReport check_unitarity(const ModularParam& p, int points = 15);

// Both +- difference equations ("Faddeev ladder") on a grid.
IdentityReport check_difference_equations(const ModularParam& p, int points = 15);

// Self-duality D_b(x,-n) = D_{1/b}(x,n).
IdentityReport check_duality(const ModularParam& p, int points = 15);

// Agreement of the Phi-product and Pochhammer-ratio representations
// (requires Im b > 0).
IdentityReport check_representation(const ModularParam& p, int points = 15);

// Fourier transformation formula at one (w,c) datum: the two closed forms
// against each other and the A_N integral against them.
IdentityReport check_fourier_formula(cplx w, int c, const ModularParam& p);

// Summation formula at (u,v,w,a,b,c): validates the convergence conditions,
// compares the two closed forms (1e-10) and the integral (1e-6).
IdentityReport check_summation(cplx u, cplx v, cplx w, int a, int b, int c,
                               const ModularParam& p);

// Integral pentagon relation in its absolutely convergent charged form at a
// pair of A_N points; charges solve the pentagon charge conditions.
IdentityReport check_integral_pentagon(const ANPoint& x, const ANPoint& y,
                                       const ModularParam& p, double charge_scale = 1.0);

// Charged transformation identities over a default grid.
IdentityReport check_charged_symmetries(const ModularParam& p);

// Execute the named suites over a parameter grid; unknown names throw Error.
// Each (identity x parameter) cell contributes one report entry.
std::vector<IdentityReport> run_suite(const std::vector<std::string>& names,
                                      const std::vector<cplx>& b_grid,
                                      const std::vector<int>& n_grid);

// The default grids of the acceptance criteria.
std::vector<cplx> default_b_grid();
std::vector<int> default_n_grid();
std::vector<std::string> all_suite_names();

}  // namespace tqd
