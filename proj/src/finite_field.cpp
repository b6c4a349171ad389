#include "posetcode/finite_field.hpp"

#include <sstream>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

using Poly = std::vector<int>;  // constant term first, over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int lead = a.back();
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly monic_from_index(int index, int degree, int p) {
    Poly f(degree + 1, 0);
    f[degree] = 1;
    for (int i = 0; i < degree; ++i) {
        f[i] = index % p;
        index /= p;
    }
    return f;
}

int int_pow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool is_irreducible(const Poly& f, int p) {
    const int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        const int count = int_pow(p, d);
        for (int idx = 0; idx < count; ++idx)
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
    return true;
}

Poly decode(int x, int p, int k) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) {
        a[i] = x % p;
        x /= p;
    }
    return a;
}

int encode(const Poly& a, int p) {
    int x = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) x = x * p + a[i];
    return x;
}

int slow_mul(int x, int y, int p, const Poly& modulus) {
    const int k = static_cast<int>(modulus.size()) - 1;
    const Poly a = decode(x, p, k);
    const Poly b = decode(y, p, k);
    Poly c(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return encode(poly_mod(c, modulus, p), p);
}

}  // namespace

bool is_prime_power(int q) {
    if (q < 2) return false;
    int p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

GaloisField make_field(int q) {
    if (q < 2 || q > max_field_order) {
        throw NotPrimePowerError("field order must lie in 2.." + std::to_string(max_field_order) +
                                 ", got " + std::to_string(q));
    }
    if (!is_prime_power(q)) throw NotPrimePowerError(std::to_string(q) + " is not a prime power");
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    for (int r = q; r > 1; r /= p) ++k;

    if (k == 1) return GaloisField(p, 1, Poly{0, 1});
    // Index order with the highest lower coefficient most significant is
    // lexicographic order on (c_{k-1}, ..., c_0).
    for (int idx = 0; idx < q; ++idx) {
        Poly f = monic_from_index(idx, k, p);
        if (is_irreducible(f, p)) return GaloisField(p, k, std::move(f));
    }
    throw std::logic_error("no irreducible polynomial found");
}

GaloisField::GaloisField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(int_pow(p, k)), modulus_(std::move(modulus)) {
    auto t = std::make_shared<Tables>();
    t->add.resize(static_cast<std::size_t>(q_) * q_);
    t->neg.resize(q_);
    for (int a = 0; a < q_; ++a) {
        const Poly da = decode(a, p_, k_);
        Poly dn(k_);
        for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
        t->neg[a] = static_cast<FieldElement>(encode(dn, p_));
        for (int b = 0; b < q_; ++b) {
            const Poly db = decode(b, p_, k_);
            Poly s(k_);
            for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
            t->add[a * q_ + b] = static_cast<FieldElement>(encode(s, p_));
        }
    }

    // Smallest element of multiplicative order q - 1.
    t->exp.assign(q_ - 1, 0);
    t->log.assign(q_, -1);
    for (int g = 1; g < q_; ++g) {
        int x = 1;
        int order = 0;
        do {
            x = slow_mul(x, g, p_, modulus_);
            ++order;
        } while (x != 1);
        if (order != q_ - 1) continue;
        x = 1;
        for (int e = 0; e < q_ - 1; ++e) {
            t->exp[e] = static_cast<FieldElement>(x);
            t->log[x] = e;
            x = slow_mul(x, g, p_, modulus_);
        }
        break;
    }
    tables_ = std::move(t);
}

std::string GaloisField::modulus_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = k_; i >= 0; --i) {
        const int c = modulus_[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << 't';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

FieldElement GaloisField::inv(FieldElement a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    return exp((q_ - 1 - log(a)) % (q_ - 1));
}

FieldElement GaloisField::pow(FieldElement x, std::uint64_t e) const {
    FieldElement result = 1;
    FieldElement base = x;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

std::vector<FieldElement> GaloisField::units() const {
    std::vector<FieldElement> out;
    for (int x = 1; x < q_; ++x) out.push_back(static_cast<FieldElement>(x));
    return out;
}

}  // namespace posetcode
