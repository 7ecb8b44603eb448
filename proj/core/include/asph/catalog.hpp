#pragma once

#include "asph/sl2z.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asph::catalog {

enum class PortKind { TorusBundle, SemiBundle };

/// One boundary component: T(phi) or N(phi), with sign -1 meaning the
/// orientation-reversed manifold.
struct BoundaryPort {
    PortKind kind = PortKind::TorusBundle;
    sl2z::MatrixZ monodromy;
    int sign = 1;

    /// Torus bundles: phi for sign +, phi^-1 for sign - (T(phi^-1) = -T(phi)).
    /// Semi-bundles: the monodromy itself.
    sl2z::MatrixZ effective() const;
    BoundaryPort reversed() const { return {kind, monodromy, -sign}; }

    bool operator==(const BoundaryPort&) const = default;

    /// e.g. "T(1,1,0,1)", "-N(1,0,0,1)"
    std::string to_string() const;
};

/// Formal non-negative combination of named simplicial-volume atoms.
class FormalVolume {
public:
    FormalVolume() = default;
    static FormalVolume atom(const std::string& name, const Rational& coefficient = 1);

    const std::map<std::string, Rational>& atoms() const { return atoms_; }
    bool is_zero() const { return atoms_.empty(); }
    Rational coefficient(const std::string& name) const;

    FormalVolume& operator+=(const FormalVolume& rhs);
    FormalVolume operator+(const FormalVolume& rhs) const;
    bool operator==(const FormalVolume&) const = default;

    /// "0", "v_alpha", "3*v_alpha"
    std::string to_string() const;

private:
    std::map<std::string, Rational> atoms_;
};

inline constexpr std::string_view kVolumeAlpha = "v_alpha";

using L2Betti = std::array<Rational, 5>;

enum class BlockKind { DiCerboStover, PuncturedSphere, SemibundleTrick, TorusTrick, FlatCap, ClosedFlat };

/// File-format kind names: dicerbo_stover, punctured_sphere, ...
std::string_view kind_name(BlockKind kind);
BlockKind parse_kind(std::string_view name);

struct Block {
    std::string name;
    BlockKind kind = BlockKind::ClosedFlat;
    /// Constructor arguments (monodromies) in constructor order.
    std::vector<sl2z::MatrixZ> params;
    bool reversed = false;

    Integer euler = 0;
    std::optional<Integer> signature;
    std::vector<BoundaryPort> ports;
    bool aspherical = true;
    std::optional<L2Betti> l2_betti;
    FormalVolume sv;
};

/// chi = sigma = 1, boundary T(B) + T(B^3), positive simplicial volume v_alpha.
Block dicerbo_stover_block();

/// Torus bundle over the n-punctured sphere; requires phi_n ... phi_1 = id.
Block punctured_sphere_bundle(std::span<const sl2z::MatrixZ> monodromies);

/// Boundary -N(phi) + N(phi) + T(phi tau phi^-1 tau).
Block semibundle_trick_block(const sl2z::MatrixZ& phi);

/// Boundary -N(phi) + T(psi^-1) + N(psi phi); signature unknown.
Block torus_trick_block(const sl2z::MatrixZ& phi, const sl2z::MatrixZ& psi);

/// Filling of T(-id) = N(id).
Block flat_cap_block();

/// The 4-torus.
Block closed_flat_block();

/// Rebuilds a block from its kind and parameters (used by the file loader).
Block make_block(BlockKind kind, const std::vector<sl2z::MatrixZ>& params);

}  // namespace asph::catalog
