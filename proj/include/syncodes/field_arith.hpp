#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace syncodes {

__extension__ using u128 = unsigned __int128;

using Elem = std::uint64_t;

bool is_prime(std::uint64_t x);

// Smallest prime strictly greater than x.
std::uint64_t prime_after(std::uint64_t x);

class PrimeField {
public:
    explicit PrimeField(std::uint64_t modulus);

    std::uint64_t modulus() const { return q_; }
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;

private:
    std::uint64_t q_;
};

// GF(2^l) with elements stored as l-bit words.
class BinaryField {
public:
    static constexpr unsigned kMaxDegree = 32;

    explicit BinaryField(unsigned degree);

    unsigned degree() const { return l_; }
    std::uint64_t order() const { return std::uint64_t{1} << l_; }
    // Reduction polynomial including the x^l term.
    std::uint64_t reduction() const { return poly_; }

    Elem add(Elem a, Elem b) const { return a ^ b; }
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;
    // Generator of the multiplicative group (smallest by value).
    Elem generator() const { return gen_; }

private:
    unsigned l_;
    std::uint64_t poly_;
    Elem gen_ = 1;
};

// Fixed lowest-weight irreducible polynomial of the given degree (1..32).
std::uint64_t reduction_polynomial(unsigned degree);

// Coefficient j multiplies x^j; width is kept at degree bound + 1.
struct Poly {
    std::vector<Elem> coeffs;

    std::size_t degree_bound() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    friend bool operator==(const Poly&, const Poly&) = default;
};

Elem poly_eval(const PrimeField& field, const Poly& p, Elem at);
Elem poly_eval(const BinaryField& field, const Poly& p, Elem at);

// Lagrange interpolation through (location, value) pairs; result has
// points.size() coefficients.
Poly bf_interpolate(const BinaryField& field, std::span<const std::pair<Elem, Elem>> points);

}  // namespace syncodes
