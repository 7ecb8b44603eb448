#pragma once

#include "asph/assembly.hpp"

#include <optional>
#include <string>

namespace asph::recipes {

enum class FillingStatus { Constructed, UnknownOpen };

struct FillingOutcome {
    FillingStatus status = FillingStatus::UnknownOpen;
    /// The manifold being filled: T(target) or N(target).
    catalog::PortKind target_kind = catalog::PortKind::TorusBundle;
    sl2z::MatrixZ target;
    /// Present when Constructed; its only free port is `residual`.
    std::optional<assembly::Assembly> assembly;
    std::optional<assembly::PortRef> residual;
    long cover_degree = 1;
    std::string notes;
};

/// Closed aspherical X_n with chi = sigma = n; X_0 is the 4-torus.
assembly::Assembly recipe_xn(long n);

/// Filling of T(psi) for psi in the derived subgroup, driven by a
/// commutator certificate. Free port: T(psi).
assembly::Assembly commutator_filling(const sl2z::MatrixZ& psi);

/// chi = 0 filling of T(phi) when the abelian class of phi is even.
FillingOutcome recipe_fill_torus_bundle(const sl2z::MatrixZ& phi);

/// chi = 0 filling of N(psi); exists exactly when T(psi) gets one.
FillingOutcome recipe_fill_semibundle(const sl2z::MatrixZ& psi);

/// Filling of T(phi^d), d the order of the abelian class of phi
/// (d = 12 when `force_twelve`). T(phi^d) covers T(phi) with degree d.
FillingOutcome recipe_virtual_filling(const sl2z::MatrixZ& phi, bool force_twelve = false);

std::string status_name(FillingStatus s);

}  // namespace asph::recipes
