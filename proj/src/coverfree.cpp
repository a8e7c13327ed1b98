#include "syncodes/coverfree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "syncodes/errors.hpp"

namespace syncodes {
namespace {

std::vector<Index> distinct(std::span<const Index> values) {
    std::vector<Index> out(values.begin(), values.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Ceiling that tolerates a few ulps of floating error just above an integer.
std::uint64_t ceil_tolerant(long double x) {
    const long double nearest = std::round(x);
    const long double slack = 64 * std::numeric_limits<long double>::epsilon() * std::max<long double>(1, std::fabs(x));
    if (std::fabs(x - nearest) <= slack) return static_cast<std::uint64_t>(nearest);
    return static_cast<std::uint64_t>(std::ceil(x));
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

using Mask = std::vector<std::uint64_t>;

bool covers(const Mask& acc, const Mask& full) {
    for (std::size_t w = 0; w < full.size(); ++w) {
        if ((acc[w] & full[w]) != full[w]) return false;
    }
    return true;
}

// Searches r masks (repetition allowed when `multiset`) whose union is `full`.
bool search_cover(const std::vector<Mask>& masks, const Mask& full, std::size_t start, std::uint64_t depth_left,
                  Mask& acc, bool multiset, std::vector<std::size_t>& chosen) {
    if (covers(acc, full)) return true;
    if (depth_left == 0) return false;
    for (std::size_t i = start; i < masks.size(); ++i) {
        Mask saved = acc;
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= masks[i][w];
        chosen.push_back(i);
        if (search_cover(masks, full, multiset ? i : i + 1, depth_left - 1, acc, multiset, chosen)) return true;
        chosen.pop_back();
        acc = std::move(saved);
    }
    return false;
}

void for_each_subset(std::size_t n, std::size_t k, auto&& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

PolyFamily::PolyFamily(std::uint64_t Q, unsigned degree, std::uint64_t size, std::uint64_t cover)
    : field_(Q), b_(degree), size_(size), r_(cover) {
    if (static_cast<u128>(degree) * cover >= Q) {
        throw InvalidInput("polynomial family needs degree*cover < Q");
    }
    u128 capacity = 1;
    for (unsigned i = 0; i <= degree && capacity < size; ++i) capacity *= Q;
    if (capacity < size) throw InvalidInput("Q^(degree+1) is smaller than the family size");
}

void PolyFamily::check_index(Index i) const {
    if (i < 1 || i > size_) throw InvalidInput("family index " + std::to_string(i) + " outside [1, N]");
}

Poly PolyFamily::polynomial(Index i) const {
    check_index(i);
    Poly p{std::vector<Elem>(b_ + 1, 0)};
    std::uint64_t rest = i - 1;
    for (unsigned j = 0; j <= b_ && rest > 0; ++j) {
        p.coeffs[j] = rest % Q();
        rest /= Q();
    }
    return p;
}

Elem PolyFamily::eval(Index i, Elem alpha) const { return poly_eval(field_, polynomial(i), alpha); }

bool PolyFamily::contains(Index i, Ground g) const {
    if (g >= ground_size()) return false;
    return eval(i, g / Q()) == g % Q();
}

Ground PolyFamily::witness(Index i0, std::span<const Index> others) const {
    check_index(i0);
    const auto rivals = distinct(others);
    if (rivals.size() > r_) throw InvalidInput("witness asked to avoid more than r sets");
    if (std::binary_search(rivals.begin(), rivals.end(), i0)) throw InvalidInput("witness target appears among the sets to avoid");
    // Only nonzero leading digits matter; trimming keeps Horner short.
    auto digits = [&](Index i) {
        check_index(i);
        std::vector<Elem> d;
        for (std::uint64_t rest = i - 1; rest > 0; rest /= Q()) d.push_back(rest % Q());
        return d;
    };
    auto horner = [&](const std::vector<Elem>& d, Elem alpha) {
        Elem acc = 0;
        for (auto it = d.rbegin(); it != d.rend(); ++it) acc = field_.add(field_.mul(acc, alpha), *it);
        return acc;
    };
    const auto own = digits(i0);
    std::vector<std::vector<Elem>> rival_digits;
    rival_digits.reserve(rivals.size());
    for (Index j : rivals) rival_digits.push_back(digits(j));
    for (Elem alpha = 0; alpha < Q(); ++alpha) {
        const Elem value = horner(own, alpha);
        const bool clear = std::none_of(rival_digits.begin(), rival_digits.end(),
                                        [&](const auto& d) { return horner(d, alpha) == value; });
        if (clear) return encode(alpha, value);
    }
    throw InvariantViolation("polynomial family has no uncovered point; degree*cover < Q must have failed");
}

PolyFamily poly_family_params(std::uint64_t N, std::uint64_t r) {
    if (N < 2 || r < 1) throw InvalidInput("poly_family_params needs N >= 2 and r >= 1");
    const auto b = static_cast<unsigned>(std::bit_width(N - 1));
    const std::uint64_t Q = prime_after(r * b);
    return PolyFamily(Q, b, N, r);
}

std::uint64_t divisor_modulus_range(std::uint64_t N, std::uint64_t r) {
    if (N < 3 || r < 1) throw InvalidInput("divisor family needs N >= 3 and r >= 1");
    const long double log_n = std::log2(static_cast<long double>(N));
    const long double exponent = 1.6L * log_n / std::log2(std::log(static_cast<long double>(N)));
    return r * ceil_tolerant(std::exp2(exponent)) + 1;
}

DivisorFamily::DivisorFamily(std::uint64_t size, std::uint64_t cover)
    : size_(size), r_(cover), A_(divisor_modulus_range(size, cover)) {}

bool DivisorFamily::contains(Index i, Ground g) const {
    if (g >= ground_size()) return false;
    const std::uint64_t a = g / A_ + 1;
    return i % a == g % A_;
}

Ground DivisorFamily::witness(Index i0, std::span<const Index> others) const {
    if (i0 < 1 || i0 > size_) throw InvalidInput("family index outside [1, N]");
    const auto rivals = distinct(others);
    if (rivals.size() > r_) throw InvalidInput("witness asked to avoid more than r sets");
    if (std::binary_search(rivals.begin(), rivals.end(), i0)) throw InvalidInput("witness target appears among the sets to avoid");
    for (std::uint64_t a = 1; a <= A_; ++a) {
        const std::uint64_t rem = i0 % a;
        if (std::none_of(rivals.begin(), rivals.end(), [&](Index j) { return j % a == rem; })) return encode(a, rem);
    }
    throw InvariantViolation("divisor family has no uncovered modulus below A");
}

std::uint64_t intersection_size(const DivisorFamily& fam, Index i, Index j) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= fam.modulus_range(); ++a) count += (i % a == j % a) ? 1 : 0;
    return count;
}

std::uint64_t rvl_ground_size(std::uint64_t N, std::uint64_t r, std::uint64_t v, std::uint64_t ell) {
    const long double t = 6.0L * std::pow(static_cast<long double>(r), 1.0L + 1.0L / ell) *
                          static_cast<long double>(v) * v * std::log2(static_cast<long double>(N));
    return std::max<std::uint64_t>(1, ceil_tolerant(t));
}

double rvl_probability(std::uint64_t r, std::uint64_t v, std::uint64_t ell) {
    return std::pow(1.0 / static_cast<double>((ell + 1) * r), 1.0 / static_cast<double>(ell)) / static_cast<double>(v);
}

RvlFamily::RvlFamily(std::uint64_t N, std::uint64_t r, std::uint64_t v, std::uint64_t ell, std::uint64_t seed,
                     std::optional<std::uint64_t> ground_override)
    : N_(N), r_(r), v_(v), ell_(ell), seed_(seed) {
    if (N < 2 || r < 1 || v < 1 || ell < 1) throw InvalidInput("rvl family needs N >= 2 and r, v, ell >= 1");
    t_ = ground_override.value_or(rvl_ground_size(N, r, v, ell));
    p_ = rvl_probability(r, v, ell);
    threshold_ = static_cast<std::uint64_t>(std::ldexp(p_, 53));
}

bool RvlFamily::contains(Index u, Ground e) const {
    if (e < 1 || e > t_) return false;
    const std::uint64_t h = splitmix(splitmix(splitmix(seed_) ^ u) ^ e);
    return (h >> 11) < threshold_;
}

Ground RvlFamily::witness(Index u, std::span<const std::vector<Index>> groups) const {
    if (groups.size() > r_) throw InvalidInput("more than r groups");
    for (const auto& g : groups) {
        if (g.size() > v_) throw InvalidInput("group larger than v");
        if (std::find(g.begin(), g.end(), u) == g.end()) throw InvalidInput("group does not contain the target");
    }
    for (Ground e = 1; e <= t_; ++e) {
        if (!contains(u, e)) continue;
        const bool ok = std::all_of(groups.begin(), groups.end(), [&](const std::vector<Index>& g) {
            std::uint64_t hits = 0;
            for (Index s : g) hits += contains(s, e) ? 1 : 0;
            return hits <= ell_;
        });
        if (ok) return e;
    }
    throw FamilyFailure("rvl family (seed " + std::to_string(seed_) + ") has no witness for index " + std::to_string(u));
}

ExplicitFamily materialize(const PolyFamily& fam) {
    ExplicitFamily out{fam.ground_size(), {}};
    for (Index i = 1; i <= fam.size(); ++i) {
        std::vector<Ground> set;
        for (Elem alpha = 0; alpha < fam.Q(); ++alpha) set.push_back(fam.encode(alpha, fam.eval(i, alpha)));
        out.sets.push_back(std::move(set));
    }
    return out;
}

ExplicitFamily materialize(const DivisorFamily& fam) {
    ExplicitFamily out{fam.ground_size(), {}};
    for (Index i = 1; i <= fam.size(); ++i) {
        std::vector<Ground> set;
        for (std::uint64_t a = 1; a <= fam.modulus_range(); ++a) set.push_back(fam.encode(a, i % a));
        out.sets.push_back(std::move(set));
    }
    return out;
}

ExplicitFamily materialize(const RvlFamily& fam) {
    ExplicitFamily out{fam.ground_size() + 1, {}};
    for (Index u = 1; u <= fam.size(); ++u) {
        std::vector<Ground> set;
        for (Ground e = 1; e <= fam.ground_size(); ++e) {
            if (fam.contains(u, e)) set.push_back(e);
        }
        out.sets.push_back(std::move(set));
    }
    return out;
}

std::optional<CoverObstruction> find_cover_obstruction(const ExplicitFamily& fam, std::uint64_t r,
                                                       std::uint64_t budget) {
    const std::size_t N = fam.sets.size();
    if (N == 0) return std::nullopt;
    const std::uint64_t per_target = binomial_capped(N - 1, std::min<std::uint64_t>(r, N - 1), budget);
    if (per_target > budget || per_target * N > budget) throw SizeError("cover-free scan exceeds the budget");
    for (std::size_t target = 0; target < N; ++target) {
        const auto& own = fam.sets[target];
        const std::size_t words = (own.size() + 63) / 64;
        Mask full(words, 0);
        for (std::size_t e = 0; e < own.size(); ++e) full[e / 64] |= std::uint64_t{1} << (e % 64);
        std::vector<Mask> masks;
        std::vector<Index> owners;
        for (std::size_t j = 0; j < N; ++j) {
            if (j == target) continue;
            Mask m(words, 0);
            const auto& other = fam.sets[j];
            for (std::size_t e = 0; e < own.size(); ++e) {
                if (std::binary_search(other.begin(), other.end(), own[e])) m[e / 64] |= std::uint64_t{1} << (e % 64);
            }
            masks.push_back(std::move(m));
            owners.push_back(j + 1);
        }
        Mask acc(words, 0);
        std::vector<std::size_t> chosen;
        if (search_cover(masks, full, 0, r, acc, false, chosen)) {
            CoverObstruction ob{target + 1, {}};
            for (auto c : chosen) ob.cover.push_back(owners[c]);
            return ob;
        }
    }
    return std::nullopt;
}

std::optional<RvlObstruction> find_rvl_obstruction(const ExplicitFamily& fam, std::uint64_t r, std::uint64_t v,
                                                   std::uint64_t ell, std::uint64_t budget) {
    const std::size_t N = fam.sets.size();
    if (N == 0 || v == 0) return std::nullopt;
    const std::size_t partners = std::min<std::size_t>(v - 1, N - 1);
    const std::uint64_t groups = binomial_capped(N - 1, partners, budget);
    const std::uint64_t tuples = groups > budget ? budget + 1 : binomial_capped(groups + r - 1, r, budget);
    if (tuples > budget || tuples * N > budget) throw SizeError("rvl obstruction scan exceeds the budget");
    for (std::size_t target = 0; target < N; ++target) {
        const auto& own = fam.sets[target];
        if (own.empty()) return RvlObstruction{target + 1, std::vector<std::vector<Index>>(1, {target + 1})};
        const std::size_t words = (own.size() + 63) / 64;
        Mask full(words, 0);
        for (std::size_t e = 0; e < own.size(); ++e) full[e / 64] |= std::uint64_t{1} << (e % 64);
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < N; ++j) {
            if (j != target) others.push_back(j);
        }
        // Element e of F_target is spoiled by a group whose other members hold e at least ell times.
        std::vector<Mask> spoiled;
        std::vector<std::vector<Index>> members;
        for_each_subset(others.size(), partners, [&](const std::vector<std::size_t>& pick) {
            Mask m(words, 0);
            for (std::size_t e = 0; e < own.size(); ++e) {
                std::uint64_t hits = 0;
                for (auto p : pick) {
                    const auto& s = fam.sets[others[p]];
                    hits += std::binary_search(s.begin(), s.end(), own[e]) ? 1 : 0;
                }
                if (hits >= ell) m[e / 64] |= std::uint64_t{1} << (e % 64);
            }
            std::vector<Index> group{target + 1};
            for (auto p : pick) group.push_back(others[p] + 1);
            spoiled.push_back(std::move(m));
            members.push_back(std::move(group));
        });
        Mask acc(words, 0);
        std::vector<std::size_t> chosen;
        if (search_cover(spoiled, full, 0, r, acc, true, chosen)) {
            RvlObstruction ob{target + 1, {}};
            for (auto c : chosen) ob.groups.push_back(members[c]);
            return ob;
        }
    }
    return std::nullopt;
}

}  // namespace syncodes
