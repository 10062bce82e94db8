#pragma once

#include "hv/lie.hpp"
#include "hv/modules.hpp"
#include "hv/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hv {

/// The intertwiner between two modules of the same variant with equal p and
/// lambda, as an affine change of coordinates:
///   p != 0: f(d) -> f(d1 - p1(alpha-gamma), d2 - p2(alpha-gamma))
///   p == 0: f(d) -> f(d1 - (beta1-beta1'), d2 - (beta2-beta2'))
/// Throws IncompatibleSpecError on a variant, p or lambda mismatch.
Poly phi_map(const Poly& f, const ModuleSpec& src, const ModuleSpec& dst);

/// phi(x f) - x phi(f), with x acting in src on the left and dst on the right.
Poly intertwine_residual(const Generator& x, const Poly& f, const ModuleSpec& src, const ModuleSpec& dst);

/// Isomorphism decision by parameter comparison. Throws
/// IncompatibleSpecError unless a and b share variant and p.
bool are_isomorphic(const ModuleSpec& a, const ModuleSpec& b, Flavor flavor);

struct IsoCaseFailure {
    std::string case_id;
    std::string expected;
    std::string actual;
};

/// Residual sweep backing a decision.
struct IsoCertificate {
    bool decision = false;
    bool plain_decision = false;       // decision under PlainL, for context
    std::int64_t cases = 0;            // residuals evaluated
    std::vector<IsoCaseFailure> failures;
    /// Set when PlainL holds but ExtendedL does not: a derivation and f = 1
    /// whose residual is nonzero.
    std::optional<std::string> separating_generator;
    std::optional<Poly> separating_residual;
};

/// Decides are_isomorphic(a, b, flavor) and certifies it: for positive
/// decisions every T(m), E(m) (and D1, D2 for ExtendedL) over the window and
/// every monomial of degree <= max_degree must give a zero residual; a
/// positive PlainL / negative ExtendedL pair must be separated by D1 or D2
/// on f = 1. Negative PlainL decisions are not certified here (phi is only
/// defined for equal lambda).
IsoCertificate certify_isomorphism(const ModuleSpec& a, const ModuleSpec& b, Flavor flavor, std::int64_t window,
                                   std::uint32_t max_degree);

} // namespace hv
