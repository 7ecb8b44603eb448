#include "asph/spectrum.hpp"

#include "asph/error.hpp"

namespace asph::spectrum {

std::string Factor::name() const {
    switch (kind) {
        case Kind::X: return "X_" + std::to_string(parameter);
        case Kind::Surface: return "Sigma_" + std::to_string(parameter);
        case Kind::Torus: return "T^" + std::to_string(parameter);
    }
    return "?";
}

long omega(long m) {
    if (m % 4 == 0) return 1;
    if (m % 4 == 2) return -2;
    return 0;
}

Realization realize_spec_chi(long m, const Integer& n) {
    if (m < 1) throw InvalidInput("dimension must be at least 1, got " + std::to_string(m));
    Realization r{m, n, {}, ""};
    long w = omega(m);
    std::string obstruction = "chi = " + n.get_str() + " is not in omega(" + std::to_string(m) +
                              ") * N = ";
    if (w == 0) {
        if (n != 0) {
            throw InvalidInput(obstruction + "{0}: odd-dimensional closed manifolds have chi = 0");
        }
        r.factors.push_back({Factor::Kind::Torus, m, m, 0});
    } else if (w == 1) {
        if (n < 0) {
            throw InvalidInput(obstruction + "{0, 1, 2, ...}: no negative value is realized");
        }
        if (!n.fits_slong_p()) throw InvalidInput("chi = " + n.get_str() + " is too large");
        for (long i = 0; i < m / 4 - 1; ++i) r.factors.push_back({Factor::Kind::X, 1, 4, 1});
        r.factors.push_back({Factor::Kind::X, n.get_si(), 4, n});
    } else {
        if (n > 0 || n % 2 != 0) {
            throw InvalidInput(obstruction +
                               "{0, -2, -4, ...}: chi must be even and non-positive");
        }
        Integer g = 1 - n / 2;
        if (!g.fits_slong_p()) throw InvalidInput("chi = " + n.get_str() + " is too large");
        for (long i = 0; i < (m - 2) / 4; ++i) r.factors.push_back({Factor::Kind::X, 1, 4, 1});
        r.factors.push_back({Factor::Kind::Surface, g.get_si(), 2, n});
    }
    Integer product = 1;
    long dim = 0;
    for (const auto& f : r.factors) {
        if (!r.derivation.empty()) r.derivation += " * ";
        r.derivation += f.euler < 0 ? "(" + f.euler.get_str() + ")" : f.euler.get_str();
        product *= f.euler;
        dim += f.dimension;
    }
    r.derivation += " = " + product.get_str();
    if (product != n || dim != m) {
        throw ConsistencyError("factorization " + r.derivation + " does not realize chi = " +
                               n.get_str() + " in dimension " + std::to_string(m));
    }
    return r;
}

}  // namespace asph::spectrum
