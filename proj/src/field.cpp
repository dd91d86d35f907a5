#include "codegraph/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace codegraph {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, low degree first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over GF(p), g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    while (f.size() >= g.size()) {
        std::uint32_t lead = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint32_t sub = (lead * g[i]) % p;
            f[shift + i] = (f[shift + i] + p - sub) % p;
        }
        trim(f);
    }
    return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), g, p);
}

Poly decode(std::uint32_t code, std::uint32_t p) {
    Poly f;
    while (code) {
        f.push_back(code % p);
        code /= p;
    }
    return f;
}

std::uint32_t encode(const Poly& f, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
}

// Monic degree-d polynomial whose low coefficients are the base-p digits
// of t read high-to-low, so ascending t walks the low-degree-first
// lexicographic order.
Poly monic_from_index(std::uint32_t t, std::uint32_t d, std::uint32_t p) {
    Poly f(d + 1, 0);
    f[d] = 1;
    for (std::size_t i = d; i-- > 0;) {
        f[i] = t % p;
        t /= p;
    }
    return f;
}

bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
    return poly_mod(f, g, p).empty();
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
    if (deg == 0) return false;
    // trial division by all monic polynomials of degree 1..deg/2
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g = monic_from_index(static_cast<std::uint32_t>(t), d, p);
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        // p is the smallest divisor, hence prime
        std::uint32_t e = 0, rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (rest != 1) throw std::invalid_argument("q is not a prime power");
        return {p, e};
    }
    throw std::invalid_argument("q is not a prime power");
}

FieldPtr make_field_for_q(std::uint32_t q) {
    auto [p, e] = factor_prime_power(q);
    return Field::make(p, e);
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1) throw std::invalid_argument("e must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > max_q) throw std::invalid_argument("p^e exceeds the field size cap");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = static_cast<std::uint32_t>(q);

    Poly mod;
    if (e > 1) {
        std::uint64_t count = 1;  // p^e candidate coefficient tuples
        for (std::uint32_t i = 0; i < e; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly cand = monic_from_index(static_cast<std::uint32_t>(t), e, p);
            if (is_irreducible(cand, p)) {
                mod = cand;
                break;
            }
        }
        f->modulus_.assign(mod.begin(), mod.end());
    }

    auto raw_mul = [&](Elem a, Elem b) -> Elem {
        if (e == 1) return static_cast<Elem>((static_cast<std::uint32_t>(a) * b) % p);
        return static_cast<Elem>(encode(poly_mul_mod(decode(a, p), decode(b, p), mod, p), p));
    };
    auto raw_pow = [&](Elem a, std::uint32_t n) -> Elem {
        Elem r = 1, base = a;
        while (n) {
            if (n & 1) r = raw_mul(r, base);
            base = raw_mul(base, base);
            n >>= 1;
        }
        return r;
    };

    // smallest code with multiplicative order exactly q-1
    std::uint32_t group = f->q_ - 1;
    auto factors = prime_factors(group);
    Elem alpha = 1;
    for (std::uint32_t a = 1; a < f->q_; ++a) {
        bool primitive = true;
        for (std::uint32_t r : factors) {
            if (raw_pow(static_cast<Elem>(a), group / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            alpha = static_cast<Elem>(a);
            break;
        }
    }
    f->alpha_ = alpha;

    f->exp_.resize(group ? group : 1);
    f->log_.assign(f->q_, 0);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < std::max<std::uint32_t>(group, 1); ++i) {
        f->exp_[i] = cur;
        f->log_[cur] = i;
        cur = raw_mul(cur, alpha);
    }
    return f;
}

Elem Field::add(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((static_cast<std::uint32_t>(a) + b) % p_);
    std::uint32_t out = 0, mult = 1, x = a, y = b;
    while (x || y) {
        out += ((x % p_ + y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::neg(Elem a) const {
    if (e_ == 1) return static_cast<Elem>((p_ - a) % p_);
    std::uint32_t out = 0, mult = 1, x = a;
    while (x) {
        out += ((p_ - x % p_) % p_) * mult;
        x /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[s % (q_ - 1)];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    std::uint32_t l = log_[a];
    return exp_[(q_ - 1 - l) % (q_ - 1)];
}

Elem Field::pow(Elem a, long long n) const {
    if (a == 0) {
        if (n > 0) return 0;
        if (n == 0) return 1;
        throw std::invalid_argument("negative power of zero");
    }
    long long group = q_ - 1;
    long long l = (static_cast<long long>(log_[a]) % group) * (n % group) % group;
    l %= group;
    if (l < 0) l += group;
    return exp_[l];
}

}  // namespace codegraph
