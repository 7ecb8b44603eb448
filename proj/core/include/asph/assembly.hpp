#pragma once

#include "asph/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asph::assembly {

/// (block index, port index)
struct PortRef {
    std::size_t block = 0;
    std::size_t port = 0;

    bool operator==(const PortRef&) const = default;
};

struct Gluing {
    PortRef a;
    PortRef b;
};

struct PortMatch {
    bool compatible = false;
    /// Why the ports do or do not match.
    std::string reason;
    /// Torus bundles: g with g * eff(q) * g^-1 == eff(p)^-1.
    std::optional<sl2z::MatrixZ> conjugator;
};

/// Torus-bundle ports match when eff(q) is conjugate to eff(p)^-1.
/// Semi-bundle ports match only with equal monodromy and opposite signs;
/// N(id) is treated as T(-id).
PortMatch port_compatible(const catalog::BoundaryPort& p, const catalog::BoundaryPort& q);

struct Node {
    std::string id;
    catalog::Block block;
};

/// Gluing graph of blocks. Every recorded gluing passed port_compatible.
class Assembly {
public:
    /// Adds a block; an empty id becomes "b<index>". Returns its index.
    std::size_t add_block(catalog::Block block, std::string id = "");

    /// Records a gluing after checking both ports are free and compatible.
    /// Throws GluingError otherwise.
    void connect(PortRef a, PortRef b);

    /// Copies every block and gluing of `other`, prefixing ids.
    /// Returns the index offset of the copied blocks.
    std::size_t append(const Assembly& other, const std::string& prefix);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Gluing>& gluings() const { return gluings_; }
    std::optional<std::size_t> find(const std::string& id) const;
    bool is_glued(PortRef p) const;
    const catalog::BoundaryPort& port(PortRef p) const;

private:
    std::vector<Node> nodes_;
    std::vector<Gluing> gluings_;
};

/// Value-returning gluing; the input is left untouched.
Assembly glue(Assembly a, PortRef end1, PortRef end2);

catalog::Block orientation_reverse(catalog::Block b);

struct ResidualPort {
    std::string block_id;
    std::size_t port = 0;
    catalog::BoundaryPort boundary;
};

struct InvariantReport {
    std::size_t blocks = 0;
    std::size_t gluings = 0;
    Integer euler = 0;
    std::optional<Integer> signature;
    bool closed = true;
    bool aspherical = true;
    catalog::FormalVolume sv;
    std::optional<catalog::L2Betti> l2_betti;
    /// Unmatched ports sorted by (block id, port index).
    std::vector<ResidualPort> residual_boundary;
    /// Ids of blocks whose signature / L2-Betti numbers are unknown.
    std::vector<std::string> unknown_signature;
    std::vector<std::string> unknown_l2;
};

InvariantReport compute_invariants(const Assembly& a);

std::string format_report_text(const InvariantReport& r);
std::string format_report_json(const InvariantReport& r, int indent = 2);

}  // namespace asph::assembly
