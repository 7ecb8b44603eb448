#include "asph/recipes.hpp"

#include "asph/error.hpp"

namespace asph::recipes {

using assembly::Assembly;
using assembly::PortRef;
using catalog::PortKind;
using sl2z::MatrixZ;

namespace {

const char* kOpenQuestion =
    "open question: no aspherical filling with vanishing Euler characteristic is known "
    "for torus bundles of odd abelian class";

// Self-glued three-port bundle with free port T(c^-1), for c = [g, h].
Assembly commutator_cap(const MatrixZ& g, const MatrixZ& h) {
    MatrixZ c = sl2z::commutator(g, h);
    std::vector<MatrixZ> ms{h.inverse(), c * h, c.inverse()};
    Assembly a;
    a.add_block(catalog::punctured_sphere_bundle(ms), "pants");
    a.connect({0, 0}, {0, 1});
    return a;
}

// The unique free port of a filling assembly.
PortRef single_residual(const Assembly& a) {
    std::optional<PortRef> found;
    for (std::size_t i = 0; i < a.nodes().size(); ++i) {
        for (std::size_t p = 0; p < a.nodes()[i].block.ports.size(); ++p) {
            if (a.is_glued({i, p})) continue;
            if (found) throw ConsistencyError("filling assembly has more than one free port");
            found = PortRef{i, p};
        }
    }
    if (!found) throw ConsistencyError("filling assembly has no free port");
    return *found;
}

FillingOutcome constructed(Assembly a, PortKind kind, const MatrixZ& target, std::string notes) {
    auto report = assembly::compute_invariants(a);
    if (report.euler != 0) {
        throw ConsistencyError("filling of " + target.to_string() + " has euler " +
                               report.euler.get_str());
    }
    FillingOutcome out;
    out.status = FillingStatus::Constructed;
    out.target_kind = kind;
    out.target = target;
    out.residual = single_residual(a);
    out.assembly = std::move(a);
    out.notes = std::move(notes);
    return out;
}

// Self-glued semi-bundle trick block; free port T(phi tau phi^-1 tau).
Assembly trick_filling(const MatrixZ& phi) {
    Assembly a;
    a.add_block(catalog::semibundle_trick_block(phi), "trick");
    a.connect({0, 0}, {0, 1});
    return a;
}

}  // namespace

std::string status_name(FillingStatus s) {
    return s == FillingStatus::Constructed ? "Constructed" : "UnknownOpen";
}

Assembly recipe_xn(long n) {
    if (n < 0) throw InvalidInput("n must be non-negative, got " + std::to_string(n));
    Assembly a;
    if (n == 0) {
        a.add_block(catalog::closed_flat_block(), "T4");
        return a;
    }
    const MatrixZ& b = sl2z::dehn_twist();
    std::vector<MatrixZ> ms;
    for (long i = 0; i < n; ++i) {
        ms.push_back(b);
        ms.push_back(b.pow(3));
    }
    ms.push_back(b.pow(-4 * n));
    std::size_t sphere = a.add_block(catalog::punctured_sphere_bundle(ms), "W_beta");
    std::size_t trick = a.add_block(catalog::semibundle_trick_block(b.pow(2 * n)), "W_gamma");
    a.connect({trick, 0}, {trick, 1});
    a.connect({trick, 2}, {sphere, ms.size() - 1});
    for (long i = 0; i < n; ++i) {
        std::size_t w = a.add_block(assembly::orientation_reverse(catalog::dicerbo_stover_block()),
                                    "W_alpha_" + std::to_string(i));
        a.connect({w, 0}, {sphere, static_cast<std::size_t>(2 * i)});
        a.connect({w, 1}, {sphere, static_cast<std::size_t>(2 * i + 1)});
    }
    return a;
}

Assembly commutator_filling(const MatrixZ& psi) {
    auto cert = sl2z::commutator_decomposition(psi);
    std::vector<MatrixZ> ms{psi};
    for (const auto& [g, h] : cert.pairs) ms.push_back(sl2z::commutator(g, h).inverse());
    Assembly a;
    std::size_t base = a.add_block(catalog::punctured_sphere_bundle(ms), "base");
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
        const auto& [g, h] = cert.pairs[i];
        // Free port T([h, g]^-1) = T([g, h]) caps T([g, h]^-1).
        std::size_t offset = a.append(commutator_cap(h, g), "c" + std::to_string(i) + ".");
        a.connect({offset, 2}, {base, i + 1});
    }
    return a;
}

FillingOutcome recipe_fill_torus_bundle(const MatrixZ& phi) {
    sl2z::require_special(phi, "phi");
    auto nf = sl2z::conjugacy_normal_form(phi);
    if (nf.type == sl2z::ConjugacyType::Parabolic && nf.canonical.a() == 1) {
        Integer e = nf.canonical.b();
        if (e % 2 == 0) {
            // phi ~ B^e: T(B^e) is the free port of the self-glued trick block for B^(e/2).
            return constructed(trick_filling(sl2z::dehn_twist().pow(Integer(e / 2))),
                               PortKind::TorusBundle, phi,
                               "phi is conjugate to B^" + e.get_str() +
                                   "; self-glued semi-bundle trick block on B^" +
                                   Integer(e / 2).get_str());
        }
    }

    int j = sl2z::abelianization_class(phi).value();
    if (j % 2 != 0) {
        FillingOutcome out;
        out.target = phi;
        out.notes = "abelian class " + std::to_string(j) + " is odd; " + kOpenQuestion;
        return out;
    }
    if (j == 0) {
        return constructed(commutator_filling(phi), PortKind::TorusBundle, phi,
                           "phi lies in the derived subgroup; commutator filling");
    }

    const MatrixZ bj = sl2z::dehn_twist().pow(static_cast<long>(j));
    const MatrixZ h = bj.inverse() * phi;
    std::vector<MatrixZ> ms{phi, bj.inverse(), h.inverse()};
    Assembly a;
    std::size_t sphere = a.add_block(catalog::punctured_sphere_bundle(ms), "sphere");
    std::size_t trick = a.append(trick_filling(sl2z::dehn_twist().pow(static_cast<long>(j / 2))),
                                 "even.");
    a.connect({trick, 2}, {sphere, 1});
    std::size_t comm = a.append(commutator_filling(h), "comm.");
    a.connect({comm, 0}, {sphere, 2});
    return constructed(std::move(a), PortKind::TorusBundle, phi,
                       "phi = B^" + std::to_string(j) + " * h with h = " + h.to_string() +
                           " in the derived subgroup; trick block on B^" +
                           std::to_string(j / 2) + " plus commutator filling of T(h)");
}

FillingOutcome recipe_fill_semibundle(const MatrixZ& psi) {
    sl2z::require_special(psi, "psi");
    FillingOutcome inner = recipe_fill_torus_bundle(psi);
    if (inner.status != FillingStatus::Constructed) {
        FillingOutcome out;
        out.target_kind = PortKind::SemiBundle;
        out.target = psi;
        out.notes = "N(psi) has such a filling iff T(psi) does; " + inner.notes;
        return out;
    }
    Assembly a;
    std::size_t tt = a.add_block(catalog::torus_trick_block(sl2z::identity(), psi), "torus_trick");
    std::size_t cap = a.add_block(catalog::flat_cap_block(), "flat_cap");
    a.connect({tt, 0}, {cap, 0});
    std::size_t offset = a.append(*inner.assembly, "fill.");
    PortRef inner_free{inner.residual->block + offset, inner.residual->port};
    a.connect({tt, 1}, inner_free);
    return constructed(std::move(a), PortKind::SemiBundle, psi,
                       "torus trick block with N(id) = T(-id) capped flat and T(psi^-1) capped by: " +
                           inner.notes);
}

FillingOutcome recipe_virtual_filling(const MatrixZ& phi, bool force_twelve) {
    sl2z::require_special(phi, "phi");
    long d = force_twelve ? 12 : sl2z::abelianization_class(phi).order();
    MatrixZ power = phi.pow(d);
    FillingOutcome out = constructed(commutator_filling(power), PortKind::TorusBundle, power,
                                     "T(phi^" + std::to_string(d) + ") covers T(phi) with degree " +
                                         std::to_string(d) + "; commutator filling");
    out.cover_degree = d;
    return out;
}

}  // namespace asph::recipes
