#pragma once

#include "asph/sl2z.hpp"

#include <string>
#include <vector>

namespace asph::spectrum {

/// One factor of a product manifold.
struct Factor {
    enum class Kind { X, Surface, Torus };
    Kind kind;
    /// n for X_n, genus for a surface, dimension for a torus.
    long parameter;
    long dimension;
    Integer euler;

    /// "X_5", "Sigma_3", "T^3"
    std::string name() const;
};

struct Realization {
    long dimension;
    Integer euler;
    std::vector<Factor> factors;
    /// e.g. "1 * (-4) = -4"
    std::string derivation;
};

/// 1 when m = 0 mod 4, -2 when m = 2 mod 4, 0 for odd m.
long omega(long m);

/// Closed aspherical m-manifold with Euler characteristic n built as a
/// product of X_1 copies with X_n, a surface, or a torus. Requires m >= 1
/// and n in omega(m) * N; throws InvalidInput otherwise.
Realization realize_spec_chi(long m, const Integer& n);

}  // namespace asph::spectrum
