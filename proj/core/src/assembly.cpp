#include "asph/assembly.hpp"

#include "asph/error.hpp"
#include "json_util.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace asph::assembly {

using catalog::BoundaryPort;
using catalog::PortKind;

namespace {

BoundaryPort canonical_port(const BoundaryPort& p) {
    if (p.kind == PortKind::SemiBundle && p.monodromy.is_identity()) {
        return {PortKind::TorusBundle, sl2z::minus_identity(), p.sign};
    }
    return p;
}

std::string kind_word(PortKind k) { return k == PortKind::TorusBundle ? "torus bundle" : "semi-bundle"; }

}  // namespace

PortMatch port_compatible(const BoundaryPort& p0, const BoundaryPort& q0) {
    BoundaryPort p = canonical_port(p0);
    BoundaryPort q = canonical_port(q0);
    if (p.kind != q.kind) {
        return {false, "kind mismatch: " + kind_word(p.kind) + " " + p0.to_string() + " vs " +
                           kind_word(q.kind) + " " + q0.to_string(), std::nullopt};
    }
    if (p.kind == PortKind::SemiBundle) {
        if (p.monodromy != q.monodromy) {
            return {false, "monodromy mismatch: semi-bundles " + p0.to_string() + " and " +
                               q0.to_string() + " need equal monodromy", std::nullopt};
        }
        if (p.sign == q.sign) {
            return {false, "sign mismatch: " + p0.to_string() + " and " + q0.to_string() +
                               " have the same orientation", std::nullopt};
        }
        return {true, "identity gluing of " + p0.to_string() + " to " + q0.to_string(),
                sl2z::identity()};
    }
    sl2z::MatrixZ target = p.effective().inverse();
    sl2z::MatrixZ source = q.effective();
    auto result = sl2z::are_conjugate(source, target);
    if (!result.conjugate) {
        return {false, "monodromy mismatch: effective monodromy " + source.to_string() + " of " +
                           q0.to_string() + " is not conjugate to " + target.to_string() +
                           ", the inverse effective monodromy of " + p0.to_string(),
                std::nullopt};
    }
    return {true, q0.to_string() + " = -" + p0.to_string() + " via conjugator " +
                      result.witness->to_string(),
            result.witness};
}

std::size_t Assembly::add_block(catalog::Block block, std::string id) {
    if (id.empty()) id = "b" + std::to_string(nodes_.size());
    if (find(id)) throw InvalidInput("duplicate block id '" + id + "'");
    nodes_.push_back({std::move(id), std::move(block)});
    return nodes_.size() - 1;
}

std::optional<std::size_t> Assembly::find(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id == id) return i;
    }
    return std::nullopt;
}

const BoundaryPort& Assembly::port(PortRef p) const {
    if (p.block >= nodes_.size()) {
        throw GluingError("no block with index " + std::to_string(p.block));
    }
    const auto& ports = nodes_[p.block].block.ports;
    if (p.port >= ports.size()) {
        throw GluingError("block '" + nodes_[p.block].id + "' has no port " +
                          std::to_string(p.port));
    }
    return ports[p.port];
}

bool Assembly::is_glued(PortRef p) const {
    return std::any_of(gluings_.begin(), gluings_.end(),
                       [&](const Gluing& g) { return g.a == p || g.b == p; });
}

void Assembly::connect(PortRef a, PortRef b) {
    const auto& pa = port(a);
    const auto& pb = port(b);
    auto label = [&](PortRef r) { return nodes_[r.block].id + ":" + std::to_string(r.port); };
    if (a == b) throw GluingError("cannot glue port " + label(a) + " to itself");
    if (is_glued(a)) throw GluingError("port already glued: " + label(a));
    if (is_glued(b)) throw GluingError("port already glued: " + label(b));
    auto match = port_compatible(pa, pb);
    if (!match.compatible) {
        throw GluingError("cannot glue " + label(a) + " to " + label(b) + ": " + match.reason);
    }
    gluings_.push_back({a, b});
}

std::size_t Assembly::append(const Assembly& other, const std::string& prefix) {
    std::size_t offset = nodes_.size();
    for (const auto& node : other.nodes_) add_block(node.block, prefix + node.id);
    for (const auto& g : other.gluings_) {
        gluings_.push_back({{g.a.block + offset, g.a.port}, {g.b.block + offset, g.b.port}});
    }
    return offset;
}

Assembly glue(Assembly a, PortRef end1, PortRef end2) {
    a.connect(end1, end2);
    return a;
}

catalog::Block orientation_reverse(catalog::Block b) {
    b.reversed = !b.reversed;
    if (b.signature) b.signature = -*b.signature;
    for (auto& p : b.ports) p.sign = -p.sign;
    return b;
}

InvariantReport compute_invariants(const Assembly& a) {
    InvariantReport r;
    r.blocks = a.nodes().size();
    r.gluings = a.gluings().size();
    Integer signature = 0;
    catalog::L2Betti l2{0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < a.nodes().size(); ++i) {
        const auto& node = a.nodes()[i];
        const auto& b = node.block;
        r.euler += b.euler;
        if (b.signature) {
            signature += *b.signature;
        } else {
            r.unknown_signature.push_back(node.id);
        }
        if (b.l2_betti) {
            for (std::size_t k = 0; k < 5; ++k) l2[k] += (*b.l2_betti)[k];
        } else {
            r.unknown_l2.push_back(node.id);
        }
        r.aspherical = r.aspherical && b.aspherical;
        r.sv += b.sv;
        for (std::size_t p = 0; p < b.ports.size(); ++p) {
            if (!a.is_glued({i, p})) r.residual_boundary.push_back({node.id, p, b.ports[p]});
        }
    }
    std::sort(r.unknown_signature.begin(), r.unknown_signature.end());
    std::sort(r.unknown_l2.begin(), r.unknown_l2.end());
    std::sort(r.residual_boundary.begin(), r.residual_boundary.end(),
              [](const ResidualPort& x, const ResidualPort& y) {
                  return std::tie(x.block_id, x.port) < std::tie(y.block_id, y.port);
              });
    if (r.unknown_signature.empty()) r.signature = signature;
    if (r.unknown_l2.empty()) r.l2_betti = l2;
    r.closed = r.residual_boundary.empty();
    return r;
}

namespace {

std::string l2_text(const catalog::L2Betti& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

}  // namespace

std::string format_report_text(const InvariantReport& r) {
    std::ostringstream out;
    auto line = [&](const std::string& key, const std::string& value) {
        out << key << std::string(key.size() < 18 ? 18 - key.size() : 1, ' ') << value << '\n';
    };
    line("blocks", std::to_string(r.blocks));
    line("gluings", std::to_string(r.gluings));
    line("euler", r.euler.get_str());
    line("signature", r.signature ? r.signature->get_str()
                                  : "unknown (from " + join(r.unknown_signature) + ")");
    line("closed", r.closed ? "true" : "false");
    line("aspherical", r.aspherical ? "true" : "false");
    line("simplicial volume", r.sv.to_string());
    line("l2 betti", r.l2_betti ? l2_text(*r.l2_betti)
                                : "unknown (from " + join(r.unknown_l2) + ")");
    if (r.residual_boundary.empty()) {
        line("residual boundary", "none");
    } else {
        line("residual boundary", std::to_string(r.residual_boundary.size()));
        for (const auto& p : r.residual_boundary) {
            out << "  " << p.block_id << ":" << p.port << "  " << p.boundary.to_string() << '\n';
        }
    }
    return out.str();
}

std::string format_report_json(const InvariantReport& r, int indent) {
    return detail::report_to_json(r).dump(indent);
}

}  // namespace asph::assembly
