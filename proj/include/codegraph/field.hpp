#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace codegraph {

// Element of GF(q), q = p^e, encoded as an integer in [0, q).
// The base-p digits of the code are the polynomial coefficients,
// low degree first; for prime fields the code is the residue itself.
using Elem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Exact arithmetic in GF(p^e). Immutable after construction; all
// operations are pure and safe to call concurrently.
//
// The modulus is the lexicographically smallest monic irreducible
// polynomial of degree e over GF(p), coefficients compared low-degree
// first. alpha is the element with smallest code whose multiplicative
// order is exactly q-1.
class Field {
public:
    static constexpr std::uint32_t max_q = 1u << 16;

    static FieldPtr make(std::uint32_t p, std::uint32_t e);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    // e+1 coefficients, low degree first; empty when e == 1.
    const std::vector<Elem>& modulus() const { return modulus_; }
    Elem alpha() const { return alpha_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws std::invalid_argument on a == 0
    Elem pow(Elem a, long long n) const;

    bool same_as(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_;
    }

private:
    Field() = default;

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<Elem> modulus_;
    Elem alpha_ = 0;
    std::vector<Elem> exp_;          // alpha^i for i in [0, q-1)
    std::vector<std::uint32_t> log_; // inverse of exp_ on nonzero codes
};

bool is_prime(std::uint32_t n);

// Factors q as p^e with p prime; throws std::invalid_argument when q
// is not a prime power >= 2.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q);

// Convenience: field for a given prime power q.
FieldPtr make_field_for_q(std::uint32_t q);

}  // namespace codegraph
