#include "asph/catalog.hpp"

#include "asph/error.hpp"
#include "asph/meyer.hpp"
#include "asph/wall.hpp"

namespace asph::catalog {

namespace {

L2Betti acyclic() { return {0, 0, 0, 0, 0}; }

void require_params(BlockKind kind, const std::vector<sl2z::MatrixZ>& params, std::size_t n) {
    if (params.size() != n) {
        throw InvalidInput(std::string(kind_name(kind)) + " takes " + std::to_string(n) +
                           " monodromy parameter(s), got " + std::to_string(params.size()));
    }
}

}  // namespace

sl2z::MatrixZ BoundaryPort::effective() const {
    if (kind == PortKind::TorusBundle && sign < 0) return monodromy.inverse();
    return monodromy;
}

std::string BoundaryPort::to_string() const {
    std::string out = sign < 0 ? "-" : "";
    out += kind == PortKind::TorusBundle ? "T(" : "N(";
    return out + monodromy.to_string() + ")";
}

FormalVolume FormalVolume::atom(const std::string& name, const Rational& coefficient) {
    FormalVolume v;
    if (coefficient < 0) throw InvalidInput("volume coefficients must be non-negative");
    if (coefficient != 0) v.atoms_[name] = coefficient;
    return v;
}

Rational FormalVolume::coefficient(const std::string& name) const {
    auto it = atoms_.find(name);
    return it == atoms_.end() ? Rational(0) : it->second;
}

FormalVolume& FormalVolume::operator+=(const FormalVolume& rhs) {
    for (const auto& [name, c] : rhs.atoms_) atoms_[name] += c;
    return *this;
}

FormalVolume FormalVolume::operator+(const FormalVolume& rhs) const {
    FormalVolume out = *this;
    out += rhs;
    return out;
}

std::string FormalVolume::to_string() const {
    if (atoms_.empty()) return "0";
    std::string out;
    for (const auto& [name, c] : atoms_) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.get_str() + "*";
        out += name;
    }
    return out;
}

std::string_view kind_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::DiCerboStover: return "dicerbo_stover";
        case BlockKind::PuncturedSphere: return "punctured_sphere";
        case BlockKind::SemibundleTrick: return "semibundle_trick";
        case BlockKind::TorusTrick: return "torus_trick";
        case BlockKind::FlatCap: return "flat_cap";
        case BlockKind::ClosedFlat: return "closed_flat";
    }
    return "unknown";
}

BlockKind parse_kind(std::string_view name) {
    for (auto k : {BlockKind::DiCerboStover, BlockKind::PuncturedSphere, BlockKind::SemibundleTrick,
                   BlockKind::TorusTrick, BlockKind::FlatCap, BlockKind::ClosedFlat}) {
        if (kind_name(k) == name) return k;
    }
    throw InvalidInput("unknown block kind '" + std::string(name) + "'");
}

Block dicerbo_stover_block() {
    Block b;
    b.name = "W_alpha";
    b.kind = BlockKind::DiCerboStover;
    b.euler = 1;
    b.signature = Integer(1);
    b.ports = {{PortKind::TorusBundle, sl2z::dehn_twist(), 1},
               {PortKind::TorusBundle, sl2z::dehn_twist().pow(3), 1}};
    b.l2_betti = L2Betti{0, 0, 1, 0, 0};
    b.sv = FormalVolume::atom(std::string(kVolumeAlpha));
    return b;
}

Block punctured_sphere_bundle(std::span<const sl2z::MatrixZ> monodromies) {
    if (monodromies.empty()) {
        throw InvalidInput("punctured sphere bundle needs at least one boundary monodromy");
    }
    for (const auto& m : monodromies) sl2z::require_special(m, "monodromy");
    if (!sl2z::ordered_product(monodromies).is_identity()) {
        throw InvalidInput("punctured sphere bundle requires phi_n ... phi_1 = id; product is " +
                           sl2z::ordered_product(monodromies).to_string());
    }
    Block b;
    b.name = "punctured_sphere";
    b.kind = BlockKind::PuncturedSphere;
    b.params.assign(monodromies.begin(), monodromies.end());
    b.euler = 0;
    b.signature = meyer::fiber_sum_signature(monodromies);
    for (const auto& m : monodromies) b.ports.push_back({PortKind::TorusBundle, m, 1});
    b.l2_betti = acyclic();
    return b;
}

Block semibundle_trick_block(const sl2z::MatrixZ& phi) {
    sl2z::require_special(phi, "phi");
    Block b;
    b.name = "semibundle_trick";
    b.kind = BlockKind::SemibundleTrick;
    b.params = {phi};
    b.euler = 0;
    b.signature = Integer(wall::semibundle_trick_signature(phi));
    b.ports = {{PortKind::SemiBundle, phi, -1},
               {PortKind::SemiBundle, phi, 1},
               {PortKind::TorusBundle, sl2z::semibundle_relator(phi), 1}};
    b.l2_betti = acyclic();
    return b;
}

Block torus_trick_block(const sl2z::MatrixZ& phi, const sl2z::MatrixZ& psi) {
    sl2z::require_special(phi, "phi");
    sl2z::require_special(psi, "psi");
    Block b;
    b.name = "torus_trick";
    b.kind = BlockKind::TorusTrick;
    b.params = {phi, psi};
    b.euler = 0;
    b.ports = {{PortKind::SemiBundle, phi, -1},
               {PortKind::TorusBundle, psi.inverse(), 1},
               {PortKind::SemiBundle, psi * phi, 1}};
    b.l2_betti = acyclic();
    return b;
}

Block flat_cap_block() {
    Block b;
    b.name = "flat_cap";
    b.kind = BlockKind::FlatCap;
    b.euler = 0;
    b.signature = Integer(0);
    b.ports = {{PortKind::TorusBundle, sl2z::minus_identity(), 1}};
    b.l2_betti = acyclic();
    return b;
}

Block closed_flat_block() {
    Block b;
    b.name = "T4";
    b.kind = BlockKind::ClosedFlat;
    b.euler = 0;
    b.signature = Integer(0);
    b.l2_betti = acyclic();
    return b;
}

Block make_block(BlockKind kind, const std::vector<sl2z::MatrixZ>& params) {
    switch (kind) {
        case BlockKind::DiCerboStover:
            require_params(kind, params, 0);
            return dicerbo_stover_block();
        case BlockKind::PuncturedSphere:
            return punctured_sphere_bundle(params);
        case BlockKind::SemibundleTrick:
            require_params(kind, params, 1);
            return semibundle_trick_block(params[0]);
        case BlockKind::TorusTrick:
            require_params(kind, params, 2);
            return torus_trick_block(params[0], params[1]);
        case BlockKind::FlatCap:
            require_params(kind, params, 0);
            return flat_cap_block();
        case BlockKind::ClosedFlat:
            require_params(kind, params, 0);
            return closed_flat_block();
    }
    throw InvalidInput("unknown block kind");
}

}  // namespace asph::catalog
