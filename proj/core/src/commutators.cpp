#include "asph/error.hpp"
#include "asph/sl2z.hpp"

namespace asph::sl2z {

namespace {

// Upper bound on PSL letters processed during rewriting.
constexpr long kMaxRewriteSteps = 1L << 22;

// Reidemeister-Schreier rewriting of a word in a = S, b = ST (PSL2(Z) = Z/2 * Z/3)
// into the free basis x1 = [a, b], x2 = [a, b^2] of the derived subgroup.
// Letters are encoded as +-1 (x1) and +-2 (x2).
class Rewriter {
public:
    void step_a() {
        if (j_ != 0) emit(i_ == 1 ? j_ : -j_);
        i_ ^= 1;
    }
    void step_b() { j_ = (j_ + 1) % 3; }

    const std::vector<int>& letters() const { return out_; }

private:
    void emit(int x) {
        if (!out_.empty() && out_.back() == -x) {
            out_.pop_back();
        } else {
            out_.push_back(x);
        }
    }

    int i_ = 0;
    int j_ = 0;
    std::vector<int> out_;
};

}  // namespace

CommutatorCertificate commutator_decomposition(const MatrixZ& m) {
    AbelianClass cls = abelianization_class(m);
    if (cls.value() != 0) {
        throw InvalidInput("matrix " + m.to_string() + " has abelian class " +
                           std::to_string(cls.value()) +
                           " mod 12; only class 0 is a product of commutators");
    }
    GeneratorWord word = matrix_to_word(m);
    Integer total = 0;
    for (const auto& letter : word.letters()) total += abs(letter.exponent);
    if (total > kMaxRewriteSteps) {
        throw InvalidInput("matrix " + m.to_string() + " is too large for commutator rewriting");
    }

    Rewriter rw;
    for (const auto& letter : word.letters()) {
        long e = letter.exponent.get_si();
        if (letter.generator == Generator::S) {
            if (e % 2 != 0) rw.step_a();
        } else if (e > 0) {
            for (long k = 0; k < e; ++k) {
                rw.step_a();
                rw.step_b();
            }
        } else {
            for (long k = 0; k < -e; ++k) {
                rw.step_b();
                rw.step_b();
                rw.step_a();
            }
        }
    }

    const MatrixZ st = gen_s() * gen_t();
    const MatrixZ st2 = st * st;
    CommutatorCertificate cert{{}, m};
    for (int x : rw.letters()) {
        switch (x) {
            case 1: cert.pairs.emplace_back(gen_s(), st); break;
            case -1: cert.pairs.emplace_back(st, gen_s()); break;
            case 2: cert.pairs.emplace_back(gen_s(), st2); break;
            default: cert.pairs.emplace_back(st2, gen_s()); break;
        }
    }
    if (!cert.verify()) {
        throw ConsistencyError("commutator rewriting of " + m.to_string() +
                               " produced product " + cert.product().to_string());
    }
    return cert;
}

}  // namespace asph::sl2z
