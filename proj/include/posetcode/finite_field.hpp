#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace posetcode {

// An element of GF(p^k), encoded as the integer sum c_i p^i of its
// coefficient vector in the polynomial basis 1, t, ..., t^(k-1).
using FieldElement = std::uint16_t;

inline constexpr int max_field_order = 512;

class GaloisField {
public:
    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }

    // Coefficients of the monic modulus, constant term first.
    const std::vector<int>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    FieldElement add(FieldElement a, FieldElement b) const { return tables_->add[a * q_ + b]; }
    FieldElement neg(FieldElement a) const { return tables_->neg[a]; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a == 0 || b == 0) return 0;
        const int s = tables_->log[a] + tables_->log[b];
        return tables_->exp[s >= q_ - 1 ? s - (q_ - 1) : s];
    }
    FieldElement inv(FieldElement a) const;
    // 0^0 is 1.
    FieldElement pow(FieldElement x, std::uint64_t e) const;

    // Discrete log base the smallest primitive element; a must be nonzero.
    int log(FieldElement a) const { return tables_->log[a]; }
    FieldElement exp(int e) const { return tables_->exp[e % (q_ - 1)]; }
    FieldElement primitive_element() const { return tables_->exp[1 % (q_ - 1)]; }

    // The q - 1 nonzero elements in ascending encoding order.
    std::vector<FieldElement> units() const;

    bool operator==(const GaloisField& other) const {
        return q_ == other.q_ && modulus_ == other.modulus_;
    }

private:
    friend GaloisField make_field(int q);

    struct Tables {
        std::vector<FieldElement> add;
        std::vector<FieldElement> neg;
        std::vector<FieldElement> exp;
        std::vector<int> log;
    };

    GaloisField(int p, int k, std::vector<int> modulus);

    int p_;
    int k_;
    int q_;
    std::vector<int> modulus_;
    std::shared_ptr<const Tables> tables_;
};

// Deterministic field of order q = p^k, 2 <= q <= 512. The modulus is the
// lexicographically smallest monic irreducible polynomial of degree k.
// Throws NotPrimePowerError.
GaloisField make_field(int q);

// Nonzero prime power check without constructing the field.
bool is_prime_power(int q);

}  // namespace posetcode
