#include "asph/sl2z.hpp"

#include "asph/error.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace asph::sl2z {

namespace {

Integer parse_integer(std::string_view token, std::string_view context) {
    std::string text(token);
    auto first = text.find_first_not_of(" \t\n\r");
    auto last = text.find_last_not_of(" \t\n\r");
    if (first == std::string::npos) {
        throw InvalidInput("empty integer in " + std::string(context));
    }
    text = text.substr(first, last - first + 1);
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw InvalidInput("malformed integer '" + text + "' in " + std::string(context));
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InvalidInput("malformed integer '" + text + "' in " + std::string(context));
        }
    }
    if (text[0] == '+') text.erase(0, 1);
    return Integer(text);
}

// Exponent of S reduced to {0,1,2,3}.
long s_residue(const Integer& e) {
    Integer r = e % 4;
    if (r < 0) r += 4;
    return r.get_si();
}

}  // namespace

MatrixZ::MatrixZ() : a_(1), b_(0), c_(0), d_(1) {}

MatrixZ::MatrixZ(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Integer det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1) {
        throw InvalidInput("matrix " + to_string() + " has determinant " + det.get_str() +
                           ", expected +1 or -1");
    }
}

MatrixZ::MatrixZ(long a, long b, long c, long d)
    : MatrixZ(Integer(a), Integer(b), Integer(c), Integer(d)) {}

bool MatrixZ::is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

MatrixZ MatrixZ::inverse() const {
    if (is_special()) return MatrixZ(d_, -b_, -c_, a_);
    return MatrixZ(-d_, b_, c_, -a_);
}

MatrixZ MatrixZ::pow(long exponent) const { return pow(Integer(exponent)); }

MatrixZ MatrixZ::pow(const Integer& exponent) const {
    MatrixZ base = exponent < 0 ? inverse() : *this;
    Integer e = abs(exponent);
    MatrixZ result;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

MatrixZ MatrixZ::operator*(const MatrixZ& r) const {
    return MatrixZ(a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_,
                   c_ * r.a_ + d_ * r.c_, c_ * r.b_ + d_ * r.d_);
}

MatrixZ MatrixZ::operator-() const { return MatrixZ(-a_, -b_, -c_, -d_); }

bool MatrixZ::operator==(const MatrixZ& r) const {
    return a_ == r.a_ && b_ == r.b_ && c_ == r.c_ && d_ == r.d_;
}

std::string MatrixZ::to_string() const {
    return a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," + d_.get_str();
}

MatrixZ MatrixZ::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        parts.push_back(text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                         : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (parts.size() != 4) {
        throw InvalidInput("matrix '" + std::string(text) +
                           "' must have four comma-separated entries a,b,c,d");
    }
    return MatrixZ(parse_integer(parts[0], text), parse_integer(parts[1], text),
                   parse_integer(parts[2], text), parse_integer(parts[3], text));
}

void require_special(const MatrixZ& m, std::string_view what) {
    if (!m.is_special()) {
        throw InvalidInput(std::string(what) + " " + m.to_string() +
                           " has determinant -1: not in SL2(Z)");
    }
}

const MatrixZ& identity() {
    static const MatrixZ m;
    return m;
}
const MatrixZ& minus_identity() {
    static const MatrixZ m(-1, 0, 0, -1);
    return m;
}
const MatrixZ& dehn_twist() {
    static const MatrixZ m(1, 1, 0, 1);
    return m;
}
const MatrixZ& gen_s() {
    static const MatrixZ m(0, -1, 1, 0);
    return m;
}
const MatrixZ& gen_t() { return dehn_twist(); }
const MatrixZ& tau() {
    static const MatrixZ m(-1, 0, 0, 1);
    return m;
}

MatrixZ commutator(const MatrixZ& g, const MatrixZ& h) {
    return g * h * g.inverse() * h.inverse();
}

MatrixZ ordered_product(std::span<const MatrixZ> factors) {
    MatrixZ result;
    for (const auto& f : factors) result = f * result;
    return result;
}

// ---------------------------------------------------------------- words

GeneratorWord::GeneratorWord(std::vector<Letter> letters) {
    for (auto& letter : letters) {
        if (letter.exponent == 0) continue;
        if (!letters_.empty() && letters_.back().generator == letter.generator) {
            letters_.back().exponent += letter.exponent;
            if (letters_.back().exponent == 0) letters_.pop_back();
        } else {
            letters_.push_back(std::move(letter));
        }
    }
}

GeneratorWord GeneratorWord::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back({it->generator, -it->exponent});
    }
    return GeneratorWord(std::move(out));
}

GeneratorWord GeneratorWord::operator*(const GeneratorWord& rhs) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return GeneratorWord(std::move(out));
}

std::string GeneratorWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& letter : letters_) {
        if (!out.empty()) out += ' ';
        out += letter.generator == Generator::S ? 'S' : 'T';
        if (letter.exponent != 1) out += "^" + letter.exponent.get_str();
    }
    return out;
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Letter> letters;
    std::string token;
    while (in >> token) {
        if (token == "1" && letters.empty()) continue;
        Generator gen;
        if (token[0] == 'S' || token[0] == 's') {
            gen = Generator::S;
        } else if (token[0] == 'T' || token[0] == 't') {
            gen = Generator::T;
        } else {
            throw InvalidInput("word letter '" + token + "' must start with S or T");
        }
        Integer exponent = 1;
        if (token.size() > 1) {
            if (token[1] != '^' || token.size() == 2) {
                throw InvalidInput("word letter '" + token + "' must look like S, T^k or S^-k");
            }
            exponent = parse_integer(std::string_view(token).substr(2), token);
        }
        letters.push_back({gen, exponent});
    }
    return GeneratorWord(std::move(letters));
}

MatrixZ word_to_matrix(const GeneratorWord& word) {
    MatrixZ result;
    for (const auto& letter : word.letters()) {
        if (letter.generator == Generator::T) {
            result = result * MatrixZ(Integer(1), letter.exponent, Integer(0), Integer(1));
        } else {
            result = result * gen_s().pow(s_residue(letter.exponent));
        }
    }
    return result;
}

GeneratorWord matrix_to_word(const MatrixZ& m) {
    require_special(m, "matrix");
    // Left-multiply by T^-q and S^-1 until the first column is (+-1, 0);
    // record the inverse operations so that m = (recorded) * remainder.
    std::vector<Letter> prefix;
    Integer a = m.a(), b = m.b(), c = m.c(), d = m.d();
    while (c != 0) {
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        if (q != 0) {
            a -= q * c;
            b -= q * d;
            prefix.push_back({Generator::T, q});
        }
        // S^-1 (a b; c d) = (c d; -a -b)
        Integer na = c, nb = d;
        c = -a;
        d = -b;
        a = std::move(na);
        b = std::move(nb);
        prefix.push_back({Generator::S, Integer(1)});
    }
    // Remainder is (a b; 0 a) with a = +-1, i.e. S^(1-a) T^(ab).
    if (a == -1) prefix.push_back({Generator::S, Integer(2)});
    prefix.push_back({Generator::T, a * b});

    // Stack pass: merge equal generators and keep S exponents in {-1, 1, 2}.
    std::vector<Letter> letters;
    for (auto& letter : prefix) {
        if (!letters.empty() && letters.back().generator == letter.generator) {
            letters.back().exponent += letter.exponent;
        } else {
            letters.push_back(std::move(letter));
        }
        auto& back = letters.back();
        if (back.generator == Generator::S) {
            long r = s_residue(back.exponent);
            back.exponent = r == 3 ? -1 : r;
        }
        if (back.exponent == 0) letters.pop_back();
    }
    return GeneratorWord(std::move(letters));
}

// ---------------------------------------------------------------- abelianization

AbelianClass::AbelianClass(long value) : value_(static_cast<int>(((value % 12) + 12) % 12)) {}

int AbelianClass::order() const { return 12 / std::gcd(value_, 12); }

AbelianClass abelianization_class(const MatrixZ& m) {
    require_special(m, "matrix");
    // Abelianizing <S, T | S^4, (ST)^3 S^-2> with T -> 1 forces S -> -3 = 9.
    Integer total = 0;
    const GeneratorWord word = matrix_to_word(m);
    for (const auto& letter : word.letters()) {
        if (letter.generator == Generator::T) {
            total += letter.exponent;
        } else {
            total += 9 * letter.exponent;
        }
    }
    Integer r = total % 12;
    return AbelianClass(r.get_si());
}

bool is_in_derived_subgroup(const MatrixZ& m) { return abelianization_class(m).value() == 0; }

MatrixZ semibundle_relator(const MatrixZ& phi) {
    require_special(phi, "phi");
    return phi * tau() * phi.inverse() * tau();
}

MatrixZ CommutatorCertificate::product() const {
    MatrixZ result;
    for (const auto& [g, h] : pairs) result = result * commutator(g, h);
    return result;
}

}  // namespace asph::sl2z
