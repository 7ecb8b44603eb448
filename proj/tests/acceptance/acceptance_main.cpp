// One line per criterion; exit status is non-zero when any criterion fails.
#include "asph/assembly.hpp"
#include "asph/error.hpp"
#include "asph/meyer.hpp"
#include "asph/recipes.hpp"
#include "asph/spectrum.hpp"
#include "asph/wall.hpp"
#include "oracles.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

using namespace asph;
using sl2z::MatrixZ;

namespace {

const MatrixZ& B() { return sl2z::dehn_twist(); }

std::string str(const Rational& q) { return q.get_str(); }

// Empty string on success, otherwise the first discrepancy.
using Criterion = std::function<std::string()>;

std::string meyer_formula() {
    if (meyer::meyer_function(sl2z::identity()) != 0) return "M(id) != 0";
    for (long k = -36; k <= 36; ++k) {
        if (k == 0) continue;
        Rational want(-k, 3);
        want.canonicalize();
        want += k > 0 ? 1 : -1;
        Rational got = meyer::meyer_function(B().pow(k));
        if (got != want) return "M(B^" + std::to_string(k) + ") = " + str(got) + ", want " + str(want);
        if (std::abs(k) <= 12 && oracle::meyer_by_recursion(B().pow(k)) != want) {
            return "cocycle recursion disagrees at k = " + std::to_string(k);
        }
    }
    return "";
}

std::string w_beta() {
    for (long n = 1; n <= 10; ++n) {
        std::vector<MatrixZ> ms;
        for (long i = 0; i < n; ++i) {
            ms.push_back(B());
            ms.push_back(B().pow(3));
        }
        ms.push_back(B().pow(-4 * n));
        Integer sig = meyer::fiber_sum_signature(ms);
        if (sig != 2 * n - 1) return "n = " + std::to_string(n) + ": " + sig.get_str();
        // Same sum through the cocycle recursion.
        Rational direct = 0;
        for (const auto& m : ms) direct += oracle::meyer_by_recursion(m);
        if (direct != sig) return "n = " + std::to_string(n) + ": recursion gives " + str(direct);
    }
    return "";
}

std::string wall_triple() {
    for (long k = 1; k <= 20; ++k) {
        Integer kk(k);
        wall::WallTriple t;
        t.a_minus = wall::kernel_subspace({{{-1, 0, 1, -kk}, {0, 1, 0, 1}}});
        t.b_core = wall::QSubspace::span({wall::Vector4{0, 1, 0, 0}, wall::Vector4{0, 0, 0, 1}});
        t.c_plus = wall::kernel_subspace({{{1, kk, -1, 0}, {0, 1, 0, 1}}});
        auto form = wall::compute_wall_form(t);
        std::string at = "k = " + std::to_string(k) + ": ";
        if (form.u_basis.size() != 1) return at + "dim U = " + std::to_string(form.u_basis.size());
        if (form.gram[0][0] != -2 * k) return at + "Gram entry " + str(form.gram[0][0]);
        if (form.signature != -1) return at + "correction " + std::to_string(form.signature);
        Rational alt = oracle::wall_psi(t, form.u_basis[0], form.u_basis[0]);
        if (alt != -2 * k) return at + "second solver gives " + str(alt);
    }
    return "";
}

std::string xn() {
    for (long n = 0; n <= 12; ++n) {
        auto r = assembly::compute_invariants(recipes::recipe_xn(n));
        std::string at = "n = " + std::to_string(n) + ": ";
        if (!r.closed || !r.aspherical) return at + "not closed aspherical";
        if (r.euler != n || r.signature != Integer(n)) return at + "euler/signature mismatch";
        if (r.l2_betti != catalog::L2Betti{0, 0, n, 0, 0}) return at + "l2 mismatch";
        if (r.sv != catalog::FormalVolume::atom(std::string(catalog::kVolumeAlpha), n)) {
            return at + "sv = " + r.sv.to_string();
        }
    }
    return "";
}

std::string abelianization() {
    if (sl2z::abelianization_class(B()).order() != 12) return "class(B) order is not 12";
    oracle::Sampler s(5005);
    for (int i = 0; i < 100; ++i) {
        MatrixZ m = sl2z::word_to_matrix(s.word(20));
        MatrixZ p = m.pow(12);
        if (!sl2z::is_in_derived_subgroup(p)) return "phi^12 not in derived subgroup for " + m.to_string();
        if (!sl2z::commutator_decomposition(p).verify()) return "certificate fails for " + m.to_string();
    }
    return "";
}

std::string relator() {
    for (long k = 1; k <= 20; ++k) {
        if (sl2z::semibundle_relator(B().pow(k)) != B().pow(2 * k)) return "k = " + std::to_string(k);
    }
    return "";
}

std::string word_round_trip() {
    long count = 0;
    std::vector<sl2z::Letter> letters;
    std::string failure;
    std::function<void(long, sl2z::Generator)> walk = [&](long remaining, sl2z::Generator next) {
        if (!failure.empty()) return;
        sl2z::GeneratorWord w(letters);
        MatrixZ m = sl2z::word_to_matrix(w);
        ++count;
        if (sl2z::word_to_matrix(sl2z::matrix_to_word(m)) != m) {
            failure = "word " + w.to_string();
            return;
        }
        if (remaining == 0) return;
        auto other = next == sl2z::Generator::S ? sl2z::Generator::T : sl2z::Generator::S;
        for (long e = -3; e <= 3; ++e) {
            if (e == 0) continue;
            letters.push_back({next, Integer(e)});
            walk(remaining - 1, other);
            letters.pop_back();
        }
    };
    walk(0, sl2z::Generator::S);
    for (auto g : {sl2z::Generator::S, sl2z::Generator::T}) {
        auto other = g == sl2z::Generator::S ? sl2z::Generator::T : sl2z::Generator::S;
        for (long e = -3; e <= 3; ++e) {
            if (e == 0) continue;
            letters.push_back({g, Integer(e)});
            walk(5, other);
            letters.pop_back();
        }
    }
    if (!failure.empty()) return failure;
    if (count != 1 + 2 * (6 + 36 + 216 + 1296 + 7776 + 46656)) return "visited " + std::to_string(count);
    return "";
}

std::string conjugacy() {
    oracle::Sampler s(8008);
    for (int i = 0; i < 200; ++i) {
        MatrixZ phi = s.matrix(), g = s.matrix();
        MatrixZ psi = g * phi * g.inverse();
        auto r = sl2z::are_conjugate(phi, psi);
        if (!r.conjugate || !r.witness) return "missed pair " + phi.to_string();
        if (*r.witness * phi * r.witness->inverse() != psi) return "bad witness for " + phi.to_string();
        if (!oracle::conjugate_by_cyclic_form(phi, psi)) return "oracle rejects a constructed pair";
    }
    for (int i = 0; i < 400; ++i) {
        MatrixZ m1 = s.matrix(), m2 = s.matrix();
        bool differ = m1.trace() != m2.trace() ||
                      sl2z::abelianization_class(m1) != sl2z::abelianization_class(m2);
        bool got = sl2z::are_conjugate(m1, m2).conjugate;
        if (differ && got) return "invariants differ but conjugate: " + m1.to_string() + " " + m2.to_string();
        if (got != oracle::conjugate_by_cyclic_form(m1, m2)) return "oracle disagrees on " + m1.to_string();
    }
    if (sl2z::are_conjugate(B(), B().pow(2)).conjugate) return "(B, B^2) reported conjugate";
    if (sl2z::are_conjugate(B(), B().inverse()).conjugate) return "(B, B^-1) reported conjugate";
    if (oracle::conjugate_by_cyclic_form(B(), B().inverse())) return "oracle calls (B, B^-1) conjugate";
    return "";
}

std::string integrality() {
    oracle::Sampler s(9009);
    for (int i = 0; i < 500; ++i) {
        auto ms = s.product_id_tuple(6);
        Integer sig = meyer::fiber_sum_signature(ms);
        Rational sum = 0;
        for (const auto& m : ms) sum += meyer::meyer_function(m);
        if (sum.get_den() != 1 || sum != sig) return "non-integral sum " + str(sum);
    }
    int rejected = 0;
    for (int i = 0; i < 100; ++i) {
        std::vector<MatrixZ> ms;
        do {
            ms.clear();
            long r = s.uniform(1, 5);
            for (long j = 0; j < r; ++j) ms.push_back(s.matrix());
        } while (sl2z::ordered_product(ms).is_identity());
        try {
            meyer::fiber_sum_signature(ms);
        } catch (const InvalidInput&) {
            ++rejected;
        }
    }
    if (rejected != 100) return "rejected " + std::to_string(rejected) + " of 100";
    return "";
}

std::string spectrum_cases() {
    auto names = [](const spectrum::Realization& r) {
        std::string out;
        for (const auto& f : r.factors) out += (out.empty() ? "" : " x ") + f.name();
        return out;
    };
    for (long n = 0; n <= 8; ++n) {
        auto r = spectrum::realize_spec_chi(4, n);
        if (names(r) != "X_" + std::to_string(n)) return "(4, " + std::to_string(n) + "): " + names(r);
    }
    for (long n : {0L, -2L, -4L}) {
        auto r = spectrum::realize_spec_chi(6, n);
        std::string want = "X_1 x Sigma_" + std::to_string(1 - n / 2);
        if (names(r) != want) return "(6, " + std::to_string(n) + "): " + names(r);
    }
    try {
        spectrum::realize_spec_chi(6, -3);
        return "(6, -3) accepted";
    } catch (const InvalidInput&) {
    }
    return "";
}

std::string fillings() {
    for (long k = 1; k <= 6; ++k) {
        auto f = recipes::recipe_fill_torus_bundle(B().pow(2 * k));
        if (f.status != recipes::FillingStatus::Constructed) return "B^" + std::to_string(2 * k) + " not constructed";
        auto r = assembly::compute_invariants(*f.assembly);
        if (r.euler != 0 || r.signature != Integer(1)) return "B^" + std::to_string(2 * k) + " invariants";
        if (r.residual_boundary.size() != 1 ||
            !sl2z::are_conjugate(r.residual_boundary[0].boundary.effective(), B().pow(2 * k)).conjugate) {
            return "B^" + std::to_string(2 * k) + " boundary";
        }
    }
    if (recipes::recipe_fill_torus_bundle(B()).status != recipes::FillingStatus::UnknownOpen) return "T(B) filled";
    for (const auto& psi : {sl2z::identity(), B(), B().pow(2)}) {
        auto t = recipes::recipe_fill_torus_bundle(psi);
        auto n = recipes::recipe_fill_semibundle(psi);
        if (t.status != n.status) return "N(" + psi.to_string() + ") does not mirror T";
    }
    return "";
}

std::string cli_verify() {
    std::string command = std::string(ASPH_CLI_PATH) + " verify-paper > /dev/null 2>&1";
    int status = std::system(command.c_str());
    if (status != 0) return "exit status " + std::to_string(status);
    return "";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"Meyer formula on B^k", meyer_formula},
        {"W_beta signature 2n-1", w_beta},
        {"Wall correction -1 with Gram -2k", wall_triple},
        {"X_n invariants n = 0..12", xn},
        {"abelianization order 12", abelianization},
        {"relator B^k tau B^-k tau = B^2k", relator},
        {"word round trip", word_round_trip},
        {"conjugacy coherence", conjugacy},
        {"Meyer integrality", integrality},
        {"Euler spectrum realizations", spectrum_cases},
        {"filling outcomes", fillings},
        {"verify-paper command", cli_verify},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        bool ok = detail.empty();
        if (!ok) ++failed;
        std::cout << (ok ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first;
        if (!ok) std::cout << ": " << detail;
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
