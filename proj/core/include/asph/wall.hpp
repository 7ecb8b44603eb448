#pragma once

#include "asph/sl2z.hpp"

#include <array>
#include <string>
#include <vector>

namespace asph::wall {

using Vector4 = std::array<Rational, 4>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Subspace of Q^4 stored by its reduced row echelon basis, so equal
/// subspaces have identical bases.
class QSubspace {
public:
    /// Zero subspace.
    QSubspace() = default;

    static QSubspace span(const std::vector<Vector4>& vectors);
    static QSubspace whole();

    const std::vector<Vector4>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }
    bool contains(const Vector4& v) const;

    QSubspace operator+(const QSubspace& rhs) const;
    QSubspace intersect(const QSubspace& rhs) const;
    bool operator==(const QSubspace& rhs) const { return basis_ == rhs.basis_; }

    /// "<(1,0,1,0), (0,1,0,-1)>"
    std::string to_string() const;

private:
    std::vector<Vector4> basis_;
};

/// Intersection form on V = H1(T1) + H1(T2) in the basis e1..e4:
/// (a1 b2 - b1 a2) + (a3 b4 - a4 b3).
Rational intersection_form(const Vector4& a, const Vector4& b);

bool is_isotropic(const QSubspace& s);

/// Null space over Q of a 2x4 integer matrix.
QSubspace kernel_subspace(const std::array<std::array<Integer, 4>, 2>& rows);

/// (#positive) - (#negative) of a symmetric rational form, by exact
/// congruence diagonalization. Throws InvalidInput on asymmetric input.
int symmetric_signature(const RationalMatrix& gram);

struct WallTriple {
    QSubspace a_minus;
    QSubspace b_core;
    QSubspace c_plus;
};

/// U = A∩(B+C) / ((A∩B)+(A∩C)) with the form Psi([a],[a']) = Phi(a, b'),
/// where a' + b' + c' = 0.
struct WallForm {
    std::vector<Vector4> u_basis;
    RationalMatrix gram;
    int signature = 0;
};

WallForm compute_wall_form(const WallTriple& t);
int wall_correction(const WallTriple& t);

/// A = ker[tau | phi^-1], B = <e2, e4>, C = ker[phi | tau].
WallTriple semibundle_wall_data(const sl2z::MatrixZ& phi);

/// -wall_correction(semibundle_wall_data(phi)).
int semibundle_trick_signature(const sl2z::MatrixZ& phi);

}  // namespace asph::wall
