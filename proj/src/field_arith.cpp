#include "syncodes/field_arith.hpp"

#include <array>
#include <string>

#include "syncodes/errors.hpp"

namespace syncodes {
namespace {



std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

constexpr std::array<std::uint64_t, 33> kReduction = {
    0x0,        0x3,        0x7,        0xb,        0x13,       0x25,        0x43,
    0x83,       0x11b,      0x203,      0x409,      0x805,      0x1009,      0x201b,
    0x4021,     0x8003,     0x1002b,    0x20009,    0x40009,    0x80027,     0x100009,
    0x200005,   0x400003,   0x800021,   0x100001b,  0x2000009,  0x400001b,   0x8000027,
    0x10000003, 0x20000005, 0x40000003, 0x80000009, 0x10000008d,
};

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            out.push_back(p);
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t y = powmod(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            y = mulmod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t prime_after(std::uint64_t x) {
    std::uint64_t candidate = x + 1;
    while (!is_prime(candidate)) ++candidate;
    return candidate;
}

PrimeField::PrimeField(std::uint64_t modulus) : q_(modulus) {
    if (!is_prime(modulus)) throw InvalidInput("field modulus " + std::to_string(modulus) + " is not prime");
}

Elem PrimeField::add(Elem a, Elem b) const {
    Elem s = a + b;
    return (s >= q_ || s < a) ? s - q_ : s;
}

Elem PrimeField::sub(Elem a, Elem b) const { return a >= b ? a - b : a + (q_ - b); }

Elem PrimeField::mul(Elem a, Elem b) const { return mulmod(a, b, q_); }

Elem PrimeField::pow(Elem a, std::uint64_t e) const { return powmod(a, e, q_); }

Elem PrimeField::inv(Elem a) const {
    if (a % q_ == 0) throw InvalidInput("zero has no inverse");
    return powmod(a, q_ - 2, q_);
}

std::uint64_t reduction_polynomial(unsigned degree) {
    if (degree == 0 || degree > BinaryField::kMaxDegree) {
        throw InvalidInput("binary field degree must be in [1, 32], got " + std::to_string(degree));
    }
    return kReduction[degree];
}

BinaryField::BinaryField(unsigned degree) : l_(degree), poly_(reduction_polynomial(degree)) {
    const std::uint64_t group = order() - 1;
    if (group <= 1) return;
    const auto factors = prime_factors(group);
    for (Elem g = 2; g < order(); ++g) {
        bool full = true;
        for (auto p : factors) {
            if (pow(g, group / p) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            gen_ = g;
            return;
        }
    }
}

Elem BinaryField::mul(Elem a, Elem b) const {
    Elem result = 0;
    const Elem top = Elem{1} << l_;
    while (b != 0) {
        if (b & 1) result ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= poly_;
    }
    return result;
}

Elem BinaryField::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem BinaryField::inv(Elem a) const {
    if (a == 0) throw InvalidInput("zero has no inverse");
    return pow(a, order() - 2);
}

Elem poly_eval(const PrimeField& field, const Poly& p, Elem at) {
    Elem acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = field.add(field.mul(acc, at), *it % field.modulus());
    }
    return acc;
}

Elem poly_eval(const BinaryField& field, const Poly& p, Elem at) {
    Elem acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = field.mul(acc, at) ^ *it;
    }
    return acc;
}

Poly bf_interpolate(const BinaryField& field, std::span<const std::pair<Elem, Elem>> points) {
    const std::size_t count = points.size();
    for (std::size_t i = 0; i < count; ++i) {
        if (points[i].first >= field.order()) throw InvalidInput("interpolation location outside the field");
        for (std::size_t j = i + 1; j < count; ++j) {
            if (points[i].first == points[j].first) throw InvalidInput("duplicate interpolation location");
        }
    }
    Poly result{std::vector<Elem>(count, 0)};
    std::vector<Elem> basis;
    for (std::size_t i = 0; i < count; ++i) {
        // Build prod_{j != i} (x - loc_j) incrementally; in characteristic 2, minus is plus.
        basis.assign(1, 1);
        Elem denom = 1;
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            const Elem loc = points[j].first;
            basis.push_back(0);
            for (std::size_t d = basis.size() - 1; d > 0; --d) {
                basis[d] = basis[d - 1] ^ field.mul(basis[d], loc);
            }
            basis[0] = field.mul(basis[0], loc);
            denom = field.mul(denom, points[i].first ^ loc);
        }
        const Elem scale = field.mul(points[i].second, field.inv(denom));
        for (std::size_t d = 0; d < count; ++d) result.coeffs[d] ^= field.mul(basis[d], scale);
    }
    return result;
}

}  // namespace syncodes
