#pragma once

#include "hv/lie.hpp"
#include "hv/modules.hpp"
#include "hv/poly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hv {

/// m2*d1 - m1*d2
Poly x_index(Index m);
/// p2*d1 - p1*d2
Poly x_params(const AlgebraParams& p);
/// p2*m1 - p1*m2
Scalar delta(Index m, const AlgebraParams& p);

/// Basis of {F : deg F <= max_degree, F(d1, d2) = F(d1 - q1, d2 - q2)},
/// obtained as an exact nullspace. Each basis element is monic in its
/// graded-lex leading term; elements are ordered by that leading term,
/// ascending.
std::vector<Poly> solve_translation_invariance(const Scalar& q1, const Scalar& q2, std::uint32_t max_degree);

/// Dimension of the invariant space: everything when q = 0, otherwise the
/// polynomials in the single linear form q2*d1 - q1*d2 (degree + 1).
///
/// For q1 != 0 != q2 this exceeds 2 from degree 2 on: (d1 - d2)^2 is
/// invariant under q = (1, 1), so invariants are not affine-linear in
/// general.
std::size_t translation_invariant_dimension(const Scalar& q1, const Scalar& q2, std::uint32_t max_degree);

/// Unknown actions E(m)1 = g_m(d)1, t^m 1 = h_m(d)1 over a finite window.
struct ActionFamily {
    std::vector<Index> window;
    std::map<Index, Poly> g;
    std::map<Index, Poly> h;
};

/// Throws WindowError unless the window is duplicate-free, symmetric and
/// contains 0.
void validate_window(const std::vector<Index>& window);

/// The family of the classified module, built from the closed forms
///   p != 0: g_m = lambda^m (X_p - Delta_m alpha + X_m),   h_m = lambda^m b0
///   p == 0: g_m = lambda^m (m2(d1+beta1) - m1(d2+beta2)), h_m = lambda^m k (m != 0), h_0 = b0
ActionFamily classified_family(const ModuleSpec& spec, const std::vector<Index>& window);

/// Which commutator a residual comes from.
enum class Constraint {
    TT, ///< [t^m, t^n] = 0
    ET, ///< [E(m), t^n] = |n+p, m+p| t^{m+n}
    EE, ///< [E(m), E(n)] = |n+p, m+p| E(m+n)
};

const char* to_string(Constraint c);

struct ConstraintResidual {
    Constraint equation;
    Index m;
    Index n;
    Poly residual;
};

/// Residuals of the three functional equations for every ordered pair
/// (m, n) in the window whose sum is also in the window (all pairs for the
/// t-t equation). Throws WindowError if the family is not defined exactly
/// on a valid window.
std::vector<ConstraintResidual> constraint_residuals(const ActionFamily& fam, const AlgebraParams& p);

/// Result of solving the E-t equation for h with g held at its classified form.
struct HLinearSolution {
    std::vector<Index> window;
    std::uint32_t degree = 0;
    std::size_t unknowns = 0;
    std::size_t equations = 0;    // nonzero equation rows generated
    std::vector<std::map<Index, Poly>> basis;
    bool classified_in_span = false;
    bool classified_passes_quadratic = false;
    std::size_t quadratic_survivors = 0; // basis elements passing the t-t filter
};

/// Exact nullspace of the (linear in h) E-t equations over the window, with
/// unknown coefficients ordered by graded-lex monomial, then window order.
/// g comes from `g_source` (lambda and alpha, or lambda and beta); the
/// classified h of `g_source` is checked for membership. Throws
/// WindowError if the window is invalid or produces no nonzero equation.
HLinearSolution solve_h_linear(const ModuleSpec& g_source, const std::vector<Index>& window, std::uint32_t degree);

/// Answers (g_m, h_m) for a probe index.
using ActionOracle = std::function<std::pair<Poly, Poly>(Index)>;

struct Recovery {
    ModuleSpec spec;
    std::vector<std::string> log; // probe order actually used, one line per parameter
};

/// The probes recovery needs: (1,0), (0,1), (-1,0), (0,-1), (0,0).
std::vector<Index> required_probes();

/// Reads lambda, alpha / beta, b0, k off the oracle's g and h at the probes,
/// then checks every probe against the classified shapes. Throws
/// PreconditionError if a required probe is missing and NotClassifiedError
/// when the responses fit no module of the family.
Recovery recover_parameters(const ActionOracle& oracle, const AlgebraParams& p, const std::vector<Index>& probes);

/// Uses the module itself as oracle: g_m = E(m)1, h_m = t^m 1.
Recovery recover_parameters(const ModuleSpec& oracle, const std::vector<Index>& probes);

} // namespace hv
