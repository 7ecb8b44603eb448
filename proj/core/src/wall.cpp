#include "asph/wall.hpp"

#include "asph/error.hpp"

#include <utility>

namespace asph::wall {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Basis of {x : m x = 0}, free variables set to unit vectors in order.
std::vector<std::vector<Rational>> null_space(RationalMatrix m, std::size_t cols) {
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

RationalMatrix to_rows(const std::vector<Vector4>& vs) {
    RationalMatrix m;
    for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
    return m;
}

Vector4 combine(const std::vector<Vector4>& basis, const std::vector<Rational>& coeffs,
                std::size_t offset) {
    Vector4 v{0, 0, 0, 0};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t c = 0; c < 4; ++c) v[c] += coeffs[offset + i] * basis[i][c];
    }
    return v;
}

std::string format_vector(const Vector4& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

// Solves target = sum x_i b_i + sum y_j c_j by echelon back-substitution with
// free variables set to zero; returns the B-part sum x_i b_i.
Vector4 b_component(const std::vector<Vector4>& bb, const std::vector<Vector4>& cb,
                    const Vector4& target) {
    std::size_t n = bb.size() + cb.size();
    RationalMatrix aug(4, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t i = 0; i < bb.size(); ++i) aug[r][i] = bb[i][r];
        for (std::size_t j = 0; j < cb.size(); ++j) aug[r][bb.size() + j] = cb[j][r];
        aug[r][n] = target[r];
    }
    auto pivots = rref(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) {
        throw ConsistencyError("vector " + format_vector(target) + " is not in B + C");
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
    return combine(bb, x, 0);
}

}  // namespace

QSubspace QSubspace::span(const std::vector<Vector4>& vectors) {
    RationalMatrix m = to_rows(vectors);
    rref(m, 4);
    QSubspace s;
    for (const auto& row : m) s.basis_.push_back({row[0], row[1], row[2], row[3]});
    return s;
}

QSubspace QSubspace::whole() {
    return span({Vector4{1, 0, 0, 0}, Vector4{0, 1, 0, 0}, Vector4{0, 0, 1, 0},
                 Vector4{0, 0, 0, 1}});
}

bool QSubspace::contains(const Vector4& v) const {
    auto vs = basis_;
    vs.push_back(v);
    return span(vs).dimension() == dimension();
}

QSubspace QSubspace::operator+(const QSubspace& rhs) const {
    auto vs = basis_;
    vs.insert(vs.end(), rhs.basis_.begin(), rhs.basis_.end());
    return span(vs);
}

QSubspace QSubspace::intersect(const QSubspace& rhs) const {
    std::size_t p = basis_.size(), q = rhs.basis_.size();
    RationalMatrix m(4, std::vector<Rational>(p + q, Rational(0)));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t i = 0; i < p; ++i) m[r][i] = basis_[i][r];
        for (std::size_t j = 0; j < q; ++j) m[r][p + j] = -rhs.basis_[j][r];
    }
    std::vector<Vector4> vs;
    for (const auto& coeffs : null_space(m, p + q)) vs.push_back(combine(basis_, coeffs, 0));
    return span(vs);
}

std::string QSubspace::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) out += ", ";
        out += format_vector(basis_[i]);
    }
    return out + ">";
}

Rational intersection_form(const Vector4& a, const Vector4& b) {
    return (a[0] * b[1] - b[0] * a[1]) + (a[2] * b[3] - a[3] * b[2]);
}

bool is_isotropic(const QSubspace& s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (intersection_form(b[i], b[j]) != 0) return false;
        }
    }
    return true;
}

QSubspace kernel_subspace(const std::array<std::array<Integer, 4>, 2>& rows) {
    RationalMatrix m;
    for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
    std::vector<Vector4> vs;
    for (const auto& v : null_space(m, 4)) vs.push_back({v[0], v[1], v[2], v[3]});
    return QSubspace::span(vs);
}

int symmetric_signature(const RationalMatrix& gram) {
    std::size_t n = gram.size();
    for (const auto& row : gram) {
        if (row.size() != n) throw InvalidInput("Gram matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (gram[i][j] != gram[j][i]) throw InvalidInput("Gram matrix is not symmetric");
        }
    }
    RationalMatrix g = gram;
    int signature = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = i;
        while (p < n && g[p][p] == 0) ++p;
        if (p == n) {
            // All remaining diagonal entries vanish: fold an off-diagonal
            // entry onto the diagonal by adding basis vector q to p.
            std::size_t fp = n, fq = n;
            for (std::size_t r = i; r < n && fp == n; ++r) {
                for (std::size_t c = r + 1; c < n; ++c) {
                    if (g[r][c] != 0) {
                        fp = r;
                        fq = c;
                        break;
                    }
                }
            }
            if (fp == n) break;
            for (std::size_t c = 0; c < n; ++c) g[fp][c] += g[fq][c];
            for (std::size_t r = 0; r < n; ++r) g[r][fp] += g[r][fq];
            p = fp;
        }
        std::swap(g[p], g[i]);
        for (auto& row : g) std::swap(row[p], row[i]);
        const Rational pivot = g[i][i];
        signature += sgn(pivot);
        // Schur complement keeps the remaining block symmetric.
        for (std::size_t r = i + 1; r < n; ++r) {
            if (g[r][i] == 0) continue;
            Rational f = g[r][i] / pivot;
            for (std::size_t c = i + 1; c < n; ++c) g[r][c] -= f * g[i][c];
        }
        for (std::size_t r = i + 1; r < n; ++r) g[r][i] = g[i][r] = 0;
    }
    return signature;
}

WallForm compute_wall_form(const WallTriple& t) {
    const auto& a = t.a_minus;
    const auto& b = t.b_core;
    const auto& c = t.c_plus;
    QSubspace numerator = a.intersect(b + c);
    QSubspace denominator = a.intersect(b) + a.intersect(c);

    // Complement of the denominator inside the numerator.
    WallForm form;
    std::vector<Vector4> spanned = denominator.basis();
    for (const auto& v : numerator.basis()) {
        auto trial = spanned;
        trial.push_back(v);
        if (QSubspace::span(trial).dimension() > spanned.size()) {
            spanned = std::move(trial);
            form.u_basis.push_back(v);
        }
    }

    std::size_t n = form.u_basis.size();
    std::vector<Vector4> b_parts;
    for (const auto& u : form.u_basis) {
        Vector4 neg{-u[0], -u[1], -u[2], -u[3]};
        b_parts.push_back(b_component(b.basis(), c.basis(), neg));
    }
    form.gram.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            form.gram[i][j] = intersection_form(form.u_basis[i], b_parts[j]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (form.gram[i][j] != form.gram[j][i]) {
                throw ConsistencyError("Wall form Psi is not symmetric on U for A = " +
                                       a.to_string() + ", B = " + b.to_string() +
                                       ", C = " + c.to_string());
            }
        }
    }
    form.signature = symmetric_signature(form.gram);
    return form;
}

int wall_correction(const WallTriple& t) { return compute_wall_form(t).signature; }

WallTriple semibundle_wall_data(const sl2z::MatrixZ& phi) {
    sl2z::require_special(phi, "phi");
    const auto inv = phi.inverse();
    const auto& tau = sl2z::tau();
    WallTriple t;
    t.a_minus = kernel_subspace({{{tau.a(), tau.b(), inv.a(), inv.b()},
                                  {tau.c(), tau.d(), inv.c(), inv.d()}}});
    t.b_core = QSubspace::span({Vector4{0, 1, 0, 0}, Vector4{0, 0, 0, 1}});
    t.c_plus = kernel_subspace({{{phi.a(), phi.b(), tau.a(), tau.b()},
                                 {phi.c(), phi.d(), tau.c(), tau.d()}}});
    for (const auto* s : {&t.a_minus, &t.b_core, &t.c_plus}) {
        if (!is_isotropic(*s)) {
            throw ConsistencyError("subspace " + s->to_string() + " for phi = " +
                                   phi.to_string() + " is not isotropic");
        }
    }
    return t;
}

int semibundle_trick_signature(const sl2z::MatrixZ& phi) {
    return 0 + 0 - wall_correction(semibundle_wall_data(phi));
}

}  // namespace asph::wall
