#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "syncodes/field_arith.hpp"

namespace syncodes {

// Ground elements and family indices are plain integers; indices start at 1.
using Ground = std::uint64_t;
using Index = std::uint64_t;

// F_i = {(alpha, g_i(alpha))} over F_Q, with (alpha, beta) encoded as alpha*Q + beta.
class PolyFamily {
public:
    // Requires degree * cover < Q and Q^(degree+1) >= size.
    PolyFamily(std::uint64_t Q, unsigned degree, std::uint64_t size, std::uint64_t cover);

    std::uint64_t Q() const { return field_.modulus(); }
    unsigned degree() const { return b_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t cover() const { return r_; }
    std::uint64_t ground_size() const { return Q() * Q(); }

    // Base-Q digits of (i-1), constant term first, degree+1 entries.
    Poly polynomial(Index i) const;
    Elem eval(Index i, Elem alpha) const;
    bool contains(Index i, Ground g) const;
    Ground encode(Elem alpha, Elem beta) const { return alpha * Q() + beta; }

    Ground witness(Index i0, std::span<const Index> others) const;

private:
    void check_index(Index i) const;

    PrimeField field_;
    unsigned b_;
    std::uint64_t size_;
    std::uint64_t r_;
};

// b = ceil(log2 N), Q = prime_after(r*b).
PolyFamily poly_family_params(std::uint64_t N, std::uint64_t r);

inline Ground poly_witness(const PolyFamily& fam, Index i0, std::span<const Index> others) {
    return fam.witness(i0, others);
}

// F_i = {(a, i mod a) : 1 <= a <= A}, with (a, rem) encoded as (a-1)*A + rem.
class DivisorFamily {
public:
    DivisorFamily(std::uint64_t size, std::uint64_t cover);

    std::uint64_t size() const { return size_; }
    std::uint64_t cover() const { return r_; }
    std::uint64_t modulus_range() const { return A_; }
    std::uint64_t ground_size() const { return A_ * A_; }

    bool contains(Index i, Ground g) const;
    Ground encode(std::uint64_t a, std::uint64_t rem) const { return (a - 1) * A_ + rem; }
    Ground witness(Index i0, std::span<const Index> others) const;

private:
    std::uint64_t size_;
    std::uint64_t r_;
    std::uint64_t A_;
};

// A = r * ceil(2^(1.6 log2 N / log2(ln N))) + 1.
std::uint64_t divisor_modulus_range(std::uint64_t N, std::uint64_t r);

inline DivisorFamily divisor_family_params(std::uint64_t N, std::uint64_t r) { return DivisorFamily(N, r); }
inline Ground divisor_witness(const DivisorFamily& fam, Index i0, std::span<const Index> others) {
    return fam.witness(i0, others);
}

// Implicit (r, v, ell) family: e in F_u iff prf(seed, u, e) < p, ground [1, t].
class RvlFamily {
public:
    RvlFamily(std::uint64_t N, std::uint64_t r, std::uint64_t v, std::uint64_t ell, std::uint64_t seed,
              std::optional<std::uint64_t> ground_override = std::nullopt);

    std::uint64_t size() const { return N_; }
    std::uint64_t cover() const { return r_; }
    std::uint64_t group_size() const { return v_; }
    std::uint64_t ell() const { return ell_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t ground_size() const { return t_; }
    double probability() const { return p_; }

    bool contains(Index u, Ground e) const;
    // Smallest e in F_u shared by at most ell members of every group; throws FamilyFailure.
    Ground witness(Index u, std::span<const std::vector<Index>> groups) const;

private:
    std::uint64_t N_, r_, v_, ell_, seed_, t_;
    double p_;
    std::uint64_t threshold_;
};

// ceil(6 r^(1+1/ell) v^2 log2 N)
std::uint64_t rvl_ground_size(std::uint64_t N, std::uint64_t r, std::uint64_t v, std::uint64_t ell);
double rvl_probability(std::uint64_t r, std::uint64_t v, std::uint64_t ell);

inline RvlFamily rvl_family_make(std::uint64_t N, std::uint64_t r, std::uint64_t v, std::uint64_t ell,
                                 std::uint64_t seed) {
    return RvlFamily(N, r, v, ell, seed);
}
inline Ground rvl_witness(const RvlFamily& fam, Index u, std::span<const std::vector<Index>> groups) {
    return fam.witness(u, groups);
}

// Materialized family for exhaustive checks; sets[i-1] is F_i, sorted.
struct ExplicitFamily {
    std::uint64_t ground_size = 0;
    std::vector<std::vector<Ground>> sets;
};

ExplicitFamily materialize(const PolyFamily& fam);
ExplicitFamily materialize(const DivisorFamily& fam);
ExplicitFamily materialize(const RvlFamily& fam);

struct CoverObstruction {
    Index target;
    std::vector<Index> cover;
};

struct RvlObstruction {
    Index target;
    std::vector<std::vector<Index>> groups;  // each contains target
};

// Work is bounded by `budget` subset checks; past it a SizeError is thrown.
std::optional<CoverObstruction> find_cover_obstruction(const ExplicitFamily& fam, std::uint64_t r,
                                                       std::uint64_t budget = 50'000'000);
std::optional<RvlObstruction> find_rvl_obstruction(const ExplicitFamily& fam, std::uint64_t r, std::uint64_t v,
                                                   std::uint64_t ell, std::uint64_t budget = 50'000'000);

inline bool verify_cover_free(const ExplicitFamily& fam, std::uint64_t r, std::uint64_t budget = 50'000'000) {
    return !find_cover_obstruction(fam, r, budget);
}
inline bool verify_cover_free(const ExplicitFamily& fam, std::uint64_t r, std::uint64_t v, std::uint64_t ell,
                              std::uint64_t budget = 50'000'000) {
    return !find_rvl_obstruction(fam, r, v, ell, budget);
}

// |F_i intersect F_j| counted by enumeration.
std::uint64_t intersection_size(const DivisorFamily& fam, Index i, Index j);

}  // namespace syncodes
