#pragma once

#include "asph/sl2z.hpp"

#include <span>
#include <string>

namespace asph::meyer {

/// Dedekind sum s(h, k) = sum_{i=1}^{k-1} ((i/k)) ((hi/k)). Requires k >= 1.
Rational dedekind_sum(const Integer& h, const Integer& k);

/// Rademacher function; always an integer.
Integer rademacher_phi(const sl2z::MatrixZ& m);

/// Meyer function of genus one, with values in (1/3)Z.
/// M(B^k) = sign(k) - k/3, M(m^-1) = -M(m), conjugation invariant.
Rational meyer_function(const sl2z::MatrixZ& m);

/// Signature of the torus bundle over the punctured sphere with the given
/// boundary monodromies: the sum of their Meyer values. Requires the ordered
/// product m_n ... m_1 to be the identity.
Integer fiber_sum_signature(std::span<const sl2z::MatrixZ> monodromies);

/// "p/q" or "p".
std::string format_rational(const Rational& q);

}  // namespace asph::meyer
