#pragma once

#include "asph/sl2z.hpp"
#include "asph/wall.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using asph::Integer;
using asph::Rational;
using asph::sl2z::MatrixZ;

// Deterministic sampler for words, matrices and product-id tuples.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi);
    asph::sl2z::GeneratorWord word(long max_length, long max_exponent = 3);
    MatrixZ matrix(long max_length = 8);
    /// Tuple whose ordered product m_n ... m_1 is the identity.
    std::vector<MatrixZ> product_id_tuple(long max_size, long max_length = 6);
    /// Random vector with entries in [-bound, bound].
    asph::wall::Vector4 vector(long bound);
    /// Random Lagrangian plane for (a1 b2 - b1 a2) + (a3 b4 - a4 b3).
    asph::wall::QSubspace lagrangian(long bound);
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// sum_{i=1}^{k-1} ((i/k)) ((hi/k)) with exact sawtooth values.
Rational dedekind_direct(long h, long k);

/// Some g with entries in [-bound, bound] and g m1 g^-1 = m2.
std::optional<MatrixZ> brute_force_conjugator(const MatrixZ& m1, const MatrixZ& m2, long bound);

/// Cyclically reduced word in a = S, b = ST of the image in PSL2(Z),
/// rotated to its lexicographically least form.
std::string psl_cyclic_form(const MatrixZ& m);

/// Conjugacy in SL2(Z) from the PSL cyclic form, trace and abelian class.
bool conjugate_by_cyclic_form(const MatrixZ& m1, const MatrixZ& m2);

/// Signature of Meyer's form on ker[(A^-1 - I) | (B - I)],
/// <(x1,y1),(x2,y2)> = omega(x1 + y1, (B - I) y2).
int meyer_cocycle(const MatrixZ& a, const MatrixZ& b);

/// Meyer function from M(T) = 2/3 and the cocycle alone, evaluated along
/// the S/T word of m.
Rational meyer_by_recursion(const MatrixZ& m);

/// Psi([a],[a']) = Phi(a, b') with a' + b' + c' = 0, solved with the C
/// basis first and pivots taken from the last column.
Rational wall_psi(const asph::wall::WallTriple& t, const asph::wall::Vector4& a,
                  const asph::wall::Vector4& a2);

}  // namespace oracle
