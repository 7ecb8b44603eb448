#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asph {

using Integer = mpz_class;
using Rational = mpq_class;

namespace sl2z {

/// 2x2 integer matrix (a b; c d) with determinant +1 or -1.
///
/// Most operations require determinant +1; the reflection `tau()` is the
/// only determinant -1 value the library itself produces.
class MatrixZ {
public:
    /// Identity matrix.
    MatrixZ();
    /// Throws InvalidInput unless ad - bc is +1 or -1.
    MatrixZ(Integer a, Integer b, Integer c, Integer d);
    MatrixZ(long a, long b, long c, long d);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    Integer det() const { return a_ * d_ - b_ * c_; }
    Integer trace() const { return a_ + d_; }
    bool is_special() const { return det() == 1; }
    bool is_identity() const;

    MatrixZ inverse() const;
    MatrixZ pow(long exponent) const;
    MatrixZ pow(const Integer& exponent) const;

    MatrixZ operator*(const MatrixZ& rhs) const;
    MatrixZ operator-() const;
    bool operator==(const MatrixZ& rhs) const;
    bool operator!=(const MatrixZ& rhs) const { return !(*this == rhs); }

    /// "a,b,c,d", row-major decimal.
    std::string to_string() const;
    /// Parses "a,b,c,d" (whitespace around entries allowed).
    static MatrixZ parse(std::string_view text);

private:
    Integer a_, b_, c_, d_;
};

/// Throws InvalidInput("... not in SL2(Z)") when det(m) != 1.
void require_special(const MatrixZ& m, std::string_view what = "matrix");

// Distinguished constants.
const MatrixZ& identity();
const MatrixZ& minus_identity();
/// Positive Dehn twist (1 1; 0 1).
const MatrixZ& dehn_twist();
/// (0 -1; 1 0)
const MatrixZ& gen_s();
/// (1 1; 0 1), equal to the Dehn twist.
const MatrixZ& gen_t();
/// Orientation-reversing reflection (-1 0; 0 1).
const MatrixZ& tau();

/// g h g^-1 h^-1
MatrixZ commutator(const MatrixZ& g, const MatrixZ& h);

enum class Generator { S, T };

struct Letter {
    Generator generator;
    Integer exponent;

    bool operator==(const Letter&) const = default;
};

/// Word in the generators S and T. Construction merges adjacent letters of
/// the same generator and drops zero exponents, so stored words are reduced.
class GeneratorWord {
public:
    GeneratorWord() = default;
    explicit GeneratorWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    GeneratorWord inverse() const;
    GeneratorWord operator*(const GeneratorWord& rhs) const;
    bool operator==(const GeneratorWord&) const = default;

    /// Whitespace-separated letters, e.g. "T^3 S T^-1". Empty word prints "1".
    std::string to_string() const;
    /// Inverse of to_string; also accepts "1" or "" for the empty word.
    static GeneratorWord parse(std::string_view text);

private:
    std::vector<Letter> letters_;
};

MatrixZ word_to_matrix(const GeneratorWord& word);

/// Euclidean reduction on the first column; requires det +1.
GeneratorWord matrix_to_word(const MatrixZ& m);

/// Residue in the abelianization Z/12 of SL2(Z); the Dehn twist maps to 1.
class AbelianClass {
public:
    AbelianClass() = default;
    explicit AbelianClass(long value);

    int value() const { return value_; }
    /// Additive order in Z/12.
    int order() const;

    AbelianClass operator+(AbelianClass rhs) const { return AbelianClass(value_ + rhs.value_); }
    AbelianClass operator-() const { return AbelianClass(-value_); }
    bool operator==(const AbelianClass&) const = default;

private:
    int value_ = 0;
};

AbelianClass abelianization_class(const MatrixZ& m);
bool is_in_derived_subgroup(const MatrixZ& m);

/// Ordered product of commutators [g_i, h_i] that equals `target`.
struct CommutatorCertificate {
    std::vector<std::pair<MatrixZ, MatrixZ>> pairs;
    MatrixZ target;

    MatrixZ product() const;
    bool verify() const { return product() == target; }
};

/// Writes m in the free basis [S, ST], [S, (ST)^2] of the derived subgroup.
/// Throws InvalidInput naming the abelian class when m is not a product of
/// commutators.
CommutatorCertificate commutator_decomposition(const MatrixZ& m);

enum class ConjugacyType { Central, Elliptic, Parabolic, Hyperbolic };

/// Canonical representative of a conjugacy class together with a conjugator:
/// conjugator * m * conjugator^-1 == canonical.
struct ConjugacyNormalForm {
    ConjugacyType type;
    MatrixZ canonical;
    MatrixZ conjugator;
};

ConjugacyNormalForm conjugacy_normal_form(const MatrixZ& m);

struct ConjugacyResult {
    bool conjugate = false;
    /// When conjugate: witness * m1 * witness^-1 == m2.
    std::optional<MatrixZ> witness;
};

ConjugacyResult are_conjugate(const MatrixZ& m1, const MatrixZ& m2);

/// phi tau phi^-1 tau
MatrixZ semibundle_relator(const MatrixZ& phi);

/// Ordered product m_n ... m_1 (the last element multiplies on the left).
MatrixZ ordered_product(std::span<const MatrixZ> factors);

}  // namespace sl2z
}  // namespace asph
