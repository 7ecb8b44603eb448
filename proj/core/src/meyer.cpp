#include "asph/meyer.hpp"

#include "asph/error.hpp"

namespace asph::meyer {

namespace {

// Beyond this modulus the sum is evaluated by reciprocity instead.
const Integer kDirectSumLimit = Integer(1) << 16;

int sign_of(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }

Integer mod_positive(const Integer& h, const Integer& k) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
    return r;
}

// (1 / 4k^2) * sum over i with hi mod k != 0 of (2i - k)(2r_i - k).
Rational direct_sum(const Integer& h, const Integer& k) {
    Integer acc = 0;
    Integer r = 0;
    for (Integer i = 1; i < k; ++i) {
        r += h;
        if (r >= k) r -= k;
        if (r == 0) continue;
        acc += (2 * i - k) * (2 * r - k);
    }
    Rational s(acc, 4 * k * k);
    s.canonicalize();
    return s;
}

// s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12 for coprime h, k >= 1.
Rational reciprocity_sum(Integer h, Integer k) {
    Rational total = 0;
    int sign = 1;
    while (k > 1 && h != 0) {
        if (k <= kDirectSumLimit) {
            total += sign * direct_sum(h, k);
            return total;
        }
        Rational hk(h, k), kh(k, h), inv(1, h * k);
        hk.canonicalize();
        kh.canonicalize();
        inv.canonicalize();
        total += sign * (Rational(-1, 4) + (hk + kh + inv) / 12);
        sign = -sign;
        Integer next = mod_positive(k, h);
        k = h;
        h = next;
    }
    return total;
}

}  // namespace

Rational dedekind_sum(const Integer& h, const Integer& k) {
    if (k <= 0) {
        throw InvalidInput("dedekind_sum: k must be positive, got " + k.get_str());
    }
    Integer hr = mod_positive(h, k);
    Integer g = gcd(hr, k);
    if (hr == 0) return 0;
    Integer h1 = hr / g, k1 = k / g;
    if (k1 <= kDirectSumLimit) return direct_sum(h1, k1);
    return reciprocity_sum(h1, k1);
}

Integer rademacher_phi(const sl2z::MatrixZ& m) {
    sl2z::require_special(m, "matrix");
    if (m.c() == 0) {
        if (!mpz_divisible_p(m.b().get_mpz_t(), m.d().get_mpz_t())) {
            throw ConsistencyError("Rademacher function of " + m.to_string() + " is not integral");
        }
        return m.b() / m.d();
    }
    Integer c = abs(m.c());
    Rational phi(m.trace(), m.c());
    phi.canonicalize();
    phi -= 12 * sign_of(m.c()) * dedekind_sum(m.d(), c);
    if (phi.get_den() != 1) {
        throw ConsistencyError("Rademacher function of " + m.to_string() + " is " +
                               phi.get_str() + ", not an integer");
    }
    return phi.get_num();
}

Rational meyer_function(const sl2z::MatrixZ& m) {
    sl2z::require_special(m, "matrix");
    int delta = 0;
    if (m.c() != 0) {
        delta = sign_of(m.c()) * sign_of(Integer(m.trace() - 2));
    } else if (m.d() == 1) {
        delta = sign_of(m.b());
    }
    Rational value(-rademacher_phi(m), 3);
    value.canonicalize();
    return value + delta;
}

Integer fiber_sum_signature(std::span<const sl2z::MatrixZ> monodromies) {
    if (!sl2z::ordered_product(monodromies).is_identity()) {
        throw InvalidInput("monodromies must satisfy phi_n ... phi_1 = id; product is " +
                           sl2z::ordered_product(monodromies).to_string());
    }
    Rational total = 0;
    for (const auto& m : monodromies) total += meyer_function(m);
    if (total.get_den() != 1) {
        throw ConsistencyError("Meyer sum " + total.get_str() + " is not an integer");
    }
    return total.get_num();
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace asph::meyer
