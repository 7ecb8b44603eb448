#include "asph/verification.hpp"

#include "asph/error.hpp"
#include "asph/meyer.hpp"
#include "asph/recipes.hpp"
#include "asph/spectrum.hpp"

#include <random>

namespace asph::verification {

using sl2z::MatrixZ;

namespace {

const MatrixZ& B() { return sl2z::dehn_twist(); }

std::string str(long x) { return std::to_string(x); }

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    sl2z::GeneratorWord word(long max_length, long max_exponent = 3) {
        long length = uniform(0, max_length);
        std::vector<sl2z::Letter> letters;
        auto gen = uniform(0, 1) ? sl2z::Generator::S : sl2z::Generator::T;
        for (long i = 0; i < length; ++i) {
            long e = uniform(1, max_exponent) * (uniform(0, 1) ? 1 : -1);
            letters.push_back({gen, Integer(e)});
            gen = gen == sl2z::Generator::S ? sl2z::Generator::T : sl2z::Generator::S;
        }
        return sl2z::GeneratorWord(std::move(letters));
    }

    MatrixZ matrix(long max_length) { return sl2z::word_to_matrix(word(max_length)); }

private:
    std::mt19937_64 rng_;
};

struct Check {
    bool ok = true;
    std::string computed = "as expected";

    void fail(const std::string& what) {
        if (ok) computed = what;
        ok = false;
    }
};

CriterionResult finish(int id, std::string name, std::string expected, const Check& c) {
    return {id, std::move(name), c.ok, std::move(expected), c.computed};
}

CriterionResult meyer_formula(const Hooks& h) {
    Check c;
    for (long k = -36; k <= 36 && c.ok; ++k) {
        Rational third(k, 3);
        third.canonicalize();
        Rational expected = -third;
        if (k != 0) expected += k > 0 ? 1 : -1;
        Rational got = h.meyer(B().pow(k));
        if (got != expected) {
            c.fail("M(B^" + str(k) + ") = " + got.get_str() + ", want " + expected.get_str());
        }
    }
    return finish(1, "Meyer function on B^k", "M(B^k) = sign(k) - k/3 for |k| <= 36, M(id) = 0", c);
}

CriterionResult w_beta_signature(const Hooks& h) {
    Check c;
    for (long n = 1; n <= 10 && c.ok; ++n) {
        std::vector<MatrixZ> ms;
        for (long i = 0; i < n; ++i) {
            ms.push_back(B());
            ms.push_back(B().pow(3));
        }
        ms.push_back(B().pow(-4 * n));
        if (!sl2z::ordered_product(ms).is_identity()) c.fail("monodromy product is not id");
        Rational total = 0;
        for (const auto& m : ms) total += h.meyer(m);
        if (total != 2 * n - 1) c.fail("n = " + str(n) + ": signature " + total.get_str());
    }
    return finish(2, "punctured sphere signature", "sigma = 2n - 1 for n = 1..10", c);
}

CriterionResult wall_correction(const Hooks& h) {
    Check c;
    for (long k = 1; k <= 20 && c.ok; ++k) {
        auto triple = h.twist_triple(k);
        wall::WallForm form;
        try {
            form = wall::compute_wall_form(triple);
        } catch (const std::exception& e) {
            c.fail("k = " + str(k) + ": " + e.what());
            break;
        }
        if (form.u_basis.size() != 1) {
            c.fail("k = " + str(k) + ": dim U = " + str(static_cast<long>(form.u_basis.size())));
        } else if (form.gram[0][0] != -2 * k) {
            c.fail("k = " + str(k) + ": Gram entry " + form.gram[0][0].get_str());
        } else if (form.signature != -1) {
            c.fail("k = " + str(k) + ": correction " + str(form.signature));
        } else if (wall::compute_wall_form(wall::semibundle_wall_data(B().pow(k))).signature !=
                   form.signature) {
            c.fail("k = " + str(k) + ": semi-bundle wall data disagrees with the explicit triple");
        }
    }
    return finish(3, "Wall correction", "correction -1, dim U = 1, Gram entry -2k for k = 1..20", c);
}

CriterionResult xn_invariants() {
    Check c;
    for (long n = 0; n <= 12 && c.ok; ++n) {
        auto r = assembly::compute_invariants(recipes::recipe_xn(n));
        catalog::L2Betti l2{0, 0, n, 0, 0};
        auto sv = catalog::FormalVolume::atom(std::string(catalog::kVolumeAlpha), n);
        if (!r.closed || !r.aspherical) c.fail("n = " + str(n) + ": not closed aspherical");
        if (r.euler != n) c.fail("n = " + str(n) + ": euler " + r.euler.get_str());
        if (!r.signature || *r.signature != n) c.fail("n = " + str(n) + ": signature wrong");
        if (!r.l2_betti || *r.l2_betti != l2) c.fail("n = " + str(n) + ": l2 betti wrong");
        if (!(r.sv == sv)) c.fail("n = " + str(n) + ": simplicial volume " + r.sv.to_string());
    }
    return finish(4, "X_n invariants",
                  "closed aspherical, chi = sigma = n, l2 = (0,0,n,0,0), sv = n*v_alpha, n = 0..12", c);
}

CriterionResult abelianization() {
    Check c;
    auto cls = sl2z::abelianization_class(B());
    if (cls.value() != 1 || cls.order() != 12) c.fail("class of B has order " + str(cls.order()));
    Sampler s(5);
    for (int i = 0; i < 100 && c.ok; ++i) {
        MatrixZ phi = s.matrix(20);
        if (!sl2z::is_in_derived_subgroup(phi.pow(12))) {
            c.fail("phi^12 not in derived subgroup for phi = " + phi.to_string());
        }
    }
    return finish(5, "abelianization", "class(B) has order 12; phi^12 in derived subgroup", c);
}

CriterionResult relator() {
    Check c;
    for (long k = 1; k <= 20 && c.ok; ++k) {
        auto r = sl2z::semibundle_relator(B().pow(k));
        if (r != B().pow(2 * k)) c.fail("k = " + str(k) + ": " + r.to_string());
    }
    return finish(6, "semi-bundle relator", "B^k tau B^-k tau = B^2k for k = 1..20", c);
}

void enumerate_words(std::vector<sl2z::Letter>& prefix, std::size_t max_length, Check& c,
                     long& count) {
    if (!c.ok) return;
    sl2z::GeneratorWord w(prefix);
    MatrixZ m = sl2z::word_to_matrix(w);
    if (sl2z::word_to_matrix(sl2z::matrix_to_word(m)) != m) c.fail("round trip fails on " + w.to_string());
    ++count;
    if (prefix.size() == max_length) return;
    for (auto gen : {sl2z::Generator::S, sl2z::Generator::T}) {
        if (!prefix.empty() && prefix.back().generator == gen) continue;
        for (long e = -3; e <= 3; ++e) {
            if (e == 0) continue;
            prefix.push_back({gen, Integer(e)});
            enumerate_words(prefix, max_length, c, count);
            prefix.pop_back();
        }
    }
}

CriterionResult word_round_trip() {
    Check c;
    std::vector<sl2z::Letter> prefix;
    long count = 0;
    enumerate_words(prefix, 6, c, count);
    if (c.ok) c.computed = str(count) + " words round-trip";
    return finish(7, "word round trip", "every reduced word of length <= 6, exponents in [-3,3]", c);
}

CriterionResult conjugacy() {
    Check c;
    Sampler s(8);
    for (int i = 0; i < 200 && c.ok; ++i) {
        MatrixZ phi = s.matrix(8), g = s.matrix(8);
        MatrixZ target = g * phi * g.inverse();
        auto r = sl2z::are_conjugate(phi, target);
        if (!r.conjugate || !r.witness || *r.witness * phi * r.witness->inverse() != target) {
            c.fail("pair (" + phi.to_string() + ", " + target.to_string() + ") not certified");
        }
    }
    for (int i = 0; i < 200 && c.ok; ++i) {
        MatrixZ x = s.matrix(6), y = s.matrix(6);
        bool differ = x.trace() != y.trace() ||
                      sl2z::abelianization_class(x) != sl2z::abelianization_class(y);
        if (differ && sl2z::are_conjugate(x, y).conjugate) {
            c.fail(x.to_string() + " and " + y.to_string() + " reported conjugate");
        }
    }
    if (sl2z::are_conjugate(B(), B().pow(2)).conjugate) c.fail("B ~ B^2 reported");
    if (sl2z::are_conjugate(B(), B().inverse()).conjugate) c.fail("B ~ B^-1 reported");
    return finish(8, "conjugacy", "200 certified pairs; invariant mismatches and (B,B^2), (B,B^-1) rejected", c);
}

CriterionResult meyer_integrality(const Hooks& h) {
    Check c;
    Sampler s(9);
    for (int i = 0; i < 500 && c.ok; ++i) {
        long r = s.uniform(1, 5);
        std::vector<MatrixZ> ms;
        for (long j = 0; j + 1 < r; ++j) ms.push_back(s.matrix(6));
        ms.push_back(sl2z::ordered_product(ms).inverse());
        Rational total = 0;
        for (const auto& m : ms) total += h.meyer(m);
        if (total.get_den() != 1) c.fail("Meyer sum " + total.get_str() + " is not an integer");
        if (Rational(meyer::fiber_sum_signature(ms)) != total) c.fail("fiber sum disagrees");
    }
    int rejected = 0;
    for (int i = 0; i < 100; ++i) {
        std::vector<MatrixZ> ms;
        do {
            ms.clear();
            long r = s.uniform(1, 5);
            for (long j = 0; j < r; ++j) ms.push_back(s.matrix(6));
        } while (sl2z::ordered_product(ms).is_identity());
        try {
            meyer::fiber_sum_signature(ms);
        } catch (const InvalidInput&) {
            ++rejected;
        }
    }
    if (rejected != 100) c.fail(str(rejected) + " of 100 non-identity tuples rejected");
    return finish(9, "Meyer integrality", "500 integral sums; 100 rejections", c);
}

CriterionResult spectrum_realizations() {
    Check c;
    auto expect = [&](long m, long n, const std::vector<std::string>& names) {
        auto r = spectrum::realize_spec_chi(m, n);
        std::vector<std::string> got;
        for (const auto& f : r.factors) got.push_back(f.name());
        if (got != names || r.euler != n) c.fail("(" + str(m) + ", " + str(n) + "): " + r.derivation);
    };
    try {
        for (long n = 0; n <= 8; ++n) expect(4, n, {"X_" + str(n)});
        expect(6, 0, {"X_1", "Sigma_1"});
        expect(6, -2, {"X_1", "Sigma_2"});
        expect(6, -4, {"X_1", "Sigma_3"});
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    try {
        spectrum::realize_spec_chi(6, -3);
        c.fail("(6, -3) accepted");
    } catch (const InvalidInput&) {
    }
    return finish(10, "Euler spectrum", "(4, 0..8) -> X_n; (6, 0/-2/-4) -> X_1 x Sigma_g; (6,-3) rejected", c);
}

CriterionResult fillings() {
    Check c;
    using recipes::FillingStatus;
    for (long k = 1; k <= 6 && c.ok; ++k) {
        auto out = recipes::recipe_fill_torus_bundle(B().pow(2 * k));
        if (out.status != FillingStatus::Constructed) {
            c.fail("B^" + str(2 * k) + " not constructed");
            break;
        }
        auto r = assembly::compute_invariants(*out.assembly);
        if (r.euler != 0 || !r.signature || *r.signature != 1) {
            c.fail("B^" + str(2 * k) + ": euler " + r.euler.get_str() + ", signature " +
                   (r.signature ? r.signature->get_str() : "unknown"));
        }
    }
    if (recipes::recipe_fill_torus_bundle(B()).status != FillingStatus::UnknownOpen) {
        c.fail("T(B) reported constructed");
    }
    for (const auto& psi : {sl2z::identity(), B(), B().pow(2)}) {
        auto t = recipes::recipe_fill_torus_bundle(psi);
        auto n = recipes::recipe_fill_semibundle(psi);
        if (t.status != n.status) c.fail("N(" + psi.to_string() + ") does not mirror T");
        if (n.assembly && assembly::compute_invariants(*n.assembly).euler != 0) {
            c.fail("N(" + psi.to_string() + ") filling has nonzero euler");
        }
    }
    return finish(11, "filling outcomes",
                  "T(B^2k) constructed with chi 0, sigma 1; T(B) open; N(psi) mirrors T(psi)", c);
}

template <typename F>
CriterionResult guarded(int id, const std::string& name, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return {id, name, false, "no error", std::string("error: ") + e.what()};
    }
}

}  // namespace

Hooks default_hooks() {
    Hooks h;
    h.meyer = [](const MatrixZ& m) { return meyer::meyer_function(m); };
    h.twist_triple = [](long k) {
        Integer kk(k);
        wall::WallTriple t;
        t.a_minus = wall::kernel_subspace({{{-1, 0, 1, -kk}, {0, 1, 0, 1}}});
        t.b_core = wall::QSubspace::span({wall::Vector4{0, 1, 0, 0}, wall::Vector4{0, 0, 0, 1}});
        t.c_plus = wall::kernel_subspace({{{1, kk, -1, 0}, {0, 1, 0, 1}}});
        return t;
    };
    return h;
}

std::vector<CriterionResult> verify_paper(const Hooks& hooks) {
    return {
        guarded(1, "Meyer function on B^k", [&] { return meyer_formula(hooks); }),
        guarded(2, "punctured sphere signature", [&] { return w_beta_signature(hooks); }),
        guarded(3, "Wall correction", [&] { return wall_correction(hooks); }),
        guarded(4, "X_n invariants", [] { return xn_invariants(); }),
        guarded(5, "abelianization", [] { return abelianization(); }),
        guarded(6, "semi-bundle relator", [] { return relator(); }),
        guarded(7, "word round trip", [] { return word_round_trip(); }),
        guarded(8, "conjugacy", [] { return conjugacy(); }),
        guarded(9, "Meyer integrality", [&] { return meyer_integrality(hooks); }),
        guarded(10, "Euler spectrum", [] { return spectrum_realizations(); }),
        guarded(11, "filling outcomes", [] { return fillings(); }),
    };
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace asph::verification
