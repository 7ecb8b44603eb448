#pragma once

#include "asph/assembly.hpp"

#include <json.hpp>

namespace asph::detail {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

inline Json rational_json(const Rational& q) {
    if (q.get_den() == 1) return integer_json(q.get_num());
    return Json(q.get_str());
}

inline Json port_json(const catalog::BoundaryPort& p) {
    Json j;
    j["kind"] = p.kind == catalog::PortKind::TorusBundle ? "torus_bundle" : "semi_bundle";
    j["monodromy"] = p.monodromy.to_string();
    j["sign"] = p.sign < 0 ? "-" : "+";
    return j;
}

inline Json volume_json(const catalog::FormalVolume& v) {
    Json j = Json::object();
    for (const auto& [name, c] : v.atoms()) j[name] = rational_json(c);
    return j;
}

inline Json report_to_json(const assembly::InvariantReport& r) {
    Json j;
    j["blocks"] = r.blocks;
    j["gluings"] = r.gluings;
    j["euler"] = integer_json(r.euler);
    j["signature"] = r.signature ? integer_json(*r.signature) : Json("unknown");
    j["closed"] = r.closed;
    j["aspherical"] = r.aspherical;
    j["sv"] = volume_json(r.sv);
    if (r.l2_betti) {
        Json l2 = Json::array();
        for (const auto& b : *r.l2_betti) l2.push_back(rational_json(b));
        j["l2_betti"] = l2;
    } else {
        j["l2_betti"] = "unknown";
    }
    Json residual = Json::array();
    for (const auto& p : r.residual_boundary) {
        Json e = port_json(p.boundary);
        e["block"] = p.block_id;
        e["port"] = p.port;
        residual.push_back(e);
    }
    j["residual_boundary"] = residual;
    j["unknown_signature"] = r.unknown_signature;
    j["unknown_l2"] = r.unknown_l2;
    return j;
}

}  // namespace asph::detail
