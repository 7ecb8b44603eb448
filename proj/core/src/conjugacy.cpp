#include "asph/error.hpp"
#include "asph/sl2z.hpp"

#include <algorithm>

namespace asph::sl2z {

namespace {

int sign_of(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }

int sign_of(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Elements u + v*sqrt(D) of the quadratic field Q(sqrt(D)), D not a square.
struct Quad {
    Rational u;
    Rational v;
};

class QuadField {
public:
    explicit QuadField(Integer discriminant) : D_(std::move(discriminant)) {}

    Quad mul(const Quad& x, const Quad& y) const {
        return {x.u * y.u + D_ * x.v * y.v, x.u * y.v + x.v * y.u};
    }

    Rational norm(const Quad& x) const { return x.u * x.u - D_ * x.v * x.v; }

    Quad inv(const Quad& x) const {
        Rational n = norm(x);
        return {x.u / n, -x.v / n};
    }

    // Möbius action of (a b; c d).
    Quad act(const MatrixZ& g, const Quad& y) const {
        Quad num{g.a() * y.u + g.b(), g.a() * y.v};
        Quad den{g.c() * y.u + g.d(), g.c() * y.v};
        return mul(num, inv(den));
    }

    // Sign of a real element (D > 0).
    int sign(const Quad& x) const {
        int su = sign_of(x.u);
        int sv = sign_of(x.v);
        if (sv == 0) return su;
        if (su == 0 || su == sv) return sv;
        return (x.u * x.u > D_ * x.v * x.v) ? su : sv;
    }

    // Floor of a real element (D > 0).
    Integer floor(const Quad& x) const {
        if (x.v == 0) return floor_of(x.u);
        Rational v2D = x.v * x.v * D_;
        Integer root = isqrt(floor_of(v2D));
        Integer fw = sign_of(x.v) > 0 ? root : Integer(-root - 1);
        Integer n = floor_of(x.u + fw) + 1;
        return sign(Quad{x.u - n, x.v}) >= 0 ? n : Integer(n - 1);
    }

private:
    Integer D_;
};

const MatrixZ& gen_r() { return gen_t(); }
const MatrixZ& gen_l() {
    static const MatrixZ m(1, 0, 1, 1);
    return m;
}

MatrixZ t_power(const Integer& k) { return MatrixZ(Integer(1), k, Integer(0), Integer(1)); }

ConjugacyNormalForm parabolic_form(const MatrixZ& m) {
    // m = eps (I + N) with N nilpotent; take a primitive kernel vector of N.
    int eps = sign_of(m.trace()) > 0 ? 1 : -1;
    Integer p = m.a() - eps, q = m.b();
    if (p == 0 && q == 0) {
        p = m.c();
        q = m.d() - eps;
    }
    Integer g = gcd(p, q);
    Integer x = q / g, y = -p / g;
    // Complete (x, y) to G = (x r; y s) with x s - r y = 1.
    Integer gg, s, negr;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), negr.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (gg < 0) {
        s = -s;
        negr = -negr;
    }
    MatrixZ basis(x, -negr, y, s);
    MatrixZ conj = basis.inverse();
    MatrixZ canonical = conj * m * basis;
    if (canonical.c() != 0 || canonical.a() != eps || canonical.d() != eps) {
        throw ConsistencyError("parabolic reduction of " + m.to_string() + " produced " +
                               canonical.to_string());
    }
    return {ConjugacyType::Parabolic, canonical, conj};
}

ConjugacyNormalForm elliptic_form(const MatrixZ& m) {
    Integer t = m.trace();
    QuadField field(t * t - 4);
    // Fixed point in the upper half plane: (a - d + sqrt(t^2-4)) / 2c, with
    // the square-root branch chosen so the imaginary part is positive.
    Integer two_c = 2 * m.c();
    Quad z{make_rational(m.a() - m.d(), two_c), make_rational(Integer(1), abs(two_c))};
    MatrixZ g;
    auto apply = [&](const MatrixZ& h) {
        z = field.act(h, z);
        g = h * g;
    };
    while (true) {
        Integer n = floor_of(z.u + Rational(1, 2));
        if (n != 0) apply(t_power(-n));
        if (field.norm(z) < 1) {
            apply(gen_s());
            continue;
        }
        break;
    }
    if (field.norm(z) == 1 && z.u > 0) apply(gen_s());
    return {ConjugacyType::Elliptic, g * m * g.inverse(), g};
}

struct Run {
    bool is_r;
    Integer length;
};

// Unique factorisation of a non-negative matrix into runs of R = (1 1; 0 1)
// and L = (1 0; 1 1).
std::vector<Run> positive_runs(MatrixZ m) {
    std::vector<Run> runs;
    while (!m.is_identity()) {
        Integer a = m.a(), b = m.b(), c = m.c(), d = m.d();
        Integer q;
        bool is_r = a >= c && b >= d;
        auto limit = [](const Integer& num, const Integer& den, std::optional<Integer>& acc) {
            if (den > 0) {
                Integer v = num / den;
                if (!acc || v < *acc) acc = v;
            }
        };
        std::optional<Integer> bound;
        if (is_r) {
            limit(a, c, bound);
            limit(b, d, bound);
        } else {
            limit(c, a, bound);
            limit(d, b, bound);
        }
        if (!bound || *bound < 1) {
            throw ConsistencyError("matrix " + m.to_string() + " is not a positive R/L word");
        }
        q = *bound;
        if (is_r) {
            m = MatrixZ(a - q * c, b - q * d, c, d);
        } else {
            m = MatrixZ(a, b, c - q * a, d - q * b);
        }
        if (!runs.empty() && runs.back().is_r == is_r) {
            runs.back().length += q;
        } else {
            runs.push_back({is_r, q});
        }
    }
    return runs;
}

MatrixZ runs_product(const std::vector<Run>& runs, std::size_t begin, std::size_t end) {
    MatrixZ result;
    for (std::size_t i = begin; i < end; ++i) {
        result = result * (runs[i].is_r ? gen_r() : gen_l()).pow(runs[i].length);
    }
    return result;
}

ConjugacyNormalForm hyperbolic_form(const MatrixZ& m) {
    int eps = sign_of(m.trace()) > 0 ? 1 : -1;
    MatrixZ mp = eps > 0 ? m : -m;
    Integer t = mp.trace();
    QuadField field(t * t - 4);
    Integer two_c = 2 * mp.c();
    // Attracting / repelling fixed points (a - d +- sqrt(t^2 - 4)) / 2c.
    Quad attracting{make_rational(mp.a() - mp.d(), two_c), make_rational(Integer(1), two_c)};
    Quad repelling{attracting.u, -attracting.v};

    MatrixZ g;
    auto apply = [&](const MatrixZ& h) {
        attracting = field.act(h, attracting);
        repelling = field.act(h, repelling);
        g = h * g;
    };
    // Continued-fraction descent until 0 and infinity separate the fixed points.
    while (true) {
        int s1 = field.sign(attracting);
        int s2 = field.sign(repelling);
        if (s1 != s2) break;
        if (s1 < 0) {
            Integer n = std::min(field.floor(Quad{-attracting.u, -attracting.v}),
                                 field.floor(Quad{-repelling.u, -repelling.v}));
            if (n >= 1) apply(t_power(n));
            bool straddle = field.sign(Quad{attracting.u + 1, attracting.v}) !=
                            field.sign(Quad{repelling.u + 1, repelling.v});
            apply(straddle ? gen_t() : gen_s());
        } else {
            Integer n = std::min(field.floor(attracting), field.floor(repelling));
            if (n >= 1) apply(t_power(-n));
            bool straddle = field.sign(Quad{attracting.u - 1, attracting.v}) !=
                            field.sign(Quad{repelling.u - 1, repelling.v});
            apply(straddle ? gen_t().inverse() : gen_s());
        }
    }
    if (field.sign(attracting) < 0) apply(gen_s());

    MatrixZ positive = g * mp * g.inverse();
    if (positive.a() <= 0 || positive.b() <= 0 || positive.c() <= 0 || positive.d() <= 0) {
        throw ConsistencyError("hyperbolic reduction of " + m.to_string() +
                               " did not reach a positive matrix: " + positive.to_string());
    }
    std::vector<Run> runs = positive_runs(positive);
    // Make the run list cyclically alternating: rotate the last run to the
    // front when it repeats the first letter (conjugation by that run).
    if (runs.size() > 1 && runs.front().is_r == runs.back().is_r) {
        MatrixZ last = runs_product(runs, runs.size() - 1, runs.size());
        g = last * g;
        runs.front().length += runs.back().length;
        runs.pop_back();
    }
    // Lexicographically smallest rotation that starts with an R run.
    std::size_t best = runs.size();
    auto rotated_less = [&](std::size_t p, std::size_t q) {
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto& x = runs[(p + i) % runs.size()].length;
            const auto& y = runs[(q + i) % runs.size()].length;
            if (x != y) return x < y;
        }
        return false;
    };
    for (std::size_t p = 0; p < runs.size(); ++p) {
        if (!runs[p].is_r) continue;
        if (best == runs.size() || rotated_less(p, best)) best = p;
    }
    MatrixZ prefix = runs_product(runs, 0, best);
    g = prefix.inverse() * g;
    return {ConjugacyType::Hyperbolic, g * m * g.inverse(), g};
}

}  // namespace

ConjugacyNormalForm conjugacy_normal_form(const MatrixZ& m) {
    require_special(m, "matrix");
    if (m == identity() || m == minus_identity()) {
        return {ConjugacyType::Central, m, identity()};
    }
    Integer t = abs(m.trace());
    if (t < 2) return elliptic_form(m);
    if (t == 2) return parabolic_form(m);
    return hyperbolic_form(m);
}

ConjugacyResult are_conjugate(const MatrixZ& m1, const MatrixZ& m2) {
    require_special(m1, "m1");
    require_special(m2, "m2");
    if (m1.trace() != m2.trace()) return {};
    auto f1 = conjugacy_normal_form(m1);
    auto f2 = conjugacy_normal_form(m2);
    if (f1.canonical != f2.canonical) return {};
    MatrixZ witness = f2.conjugator.inverse() * f1.conjugator;
    if (witness * m1 * witness.inverse() != m2) {
        throw ConsistencyError("conjugator " + witness.to_string() + " does not carry " +
                               m1.to_string() + " to " + m2.to_string());
    }
    return {true, witness};
}

}  // namespace asph::sl2z
