// One PASS/FAIL line per acceptance criterion. Usage: acceptance [criterion...]
#include <bitset>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "syncodes/burst.hpp"
#include "syncodes/codes.hpp"
#include "syncodes/errors.hpp"
#include "syncodes/sync.hpp"

using namespace syncodes;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail.str("");
            detail << "first failure: " << what;
        }
    }
};

std::string text(const std::string& raw) { return QaryString(raw, 2).to_text(); }

template <typename Decode>
bool decodes_to(const QaryString& x, Decode&& decode) {
    try {
        return decode() == x;
    } catch (const Error&) {
        return false;
    }
}

void unique_decoding(Outcome& out) {
    const CodeParams params{};  // n=8, q=2, k=1, insertions, deletions and substitutions
    const EditCode code(params);
    std::size_t trials = 0;
    for (const auto& x : oracle::strings(8, 2)) {
        const auto s = code.syndrome(x);
        for (const auto& raw : oracle::ball(x.raw(), 1, 2)) {
            ++trials;
            const QaryString y(raw, 2);
            out.require(decodes_to(x, [&] { return code.decode(y, s).value; }), text(x.raw()) + " via " + text(raw));
        }
    }
    if (out.pass) out.detail << trials << " (x, y) pairs decoded, syndrome " << code.colorer().spec().pair_bits() << " bits";
}

// Edges of the 1-deletion confusion graph on {0,1}^3, listed by hand.
const std::set<std::pair<std::string, std::string>> kThreeBitEdges = {
    {"000", "001"}, {"000", "010"}, {"000", "100"}, {"001", "010"}, {"001", "011"}, {"001", "100"}, {"001", "101"},
    {"010", "011"}, {"010", "100"}, {"010", "101"}, {"010", "110"}, {"011", "101"}, {"011", "110"}, {"011", "111"},
    {"100", "101"}, {"100", "110"}, {"101", "110"}, {"101", "111"}, {"110", "111"},
};

void properness(Outcome& out) {
    std::size_t edges_checked = 0;
    for (bool deletion : {true, false}) {
        for (std::size_t n = 3; n <= 10; ++n) {
            const auto model = deletion ? ChannelModel::deletions(1, 2) : ChannelModel::edits(1, 2);
            const TwoRoundColorer colorer{ColoringSpec(GraphView::confusion(n, model))};
            const auto all = oracle::strings(n, 2);
            std::map<std::string, std::set<std::string>> shadow;
            if (deletion)
                for (const auto& x : all) shadow[x.raw()] = oracle::single_deletions(x.raw());
            std::set<std::pair<std::string, std::string>> edges;
            for (std::size_t i = 0; i < all.size(); ++i) {
                const auto listed = colorer.spec().view().neighbors(all[i]);
                std::set<std::string> expected;
                for (std::size_t j = 0; j < all.size(); ++j) {
                    if (i == j) continue;
                    bool adjacent;
                    if (deletion) {
                        const auto& a = shadow[all[i].raw()];
                        const auto& b = shadow[all[j].raw()];
                        adjacent = std::any_of(a.begin(), a.end(), [&](const std::string& s) { return b.count(s) > 0; });
                    } else {
                        adjacent = oracle::distance(all[i], all[j]) <= 2;
                    }
                    if (adjacent) expected.insert(all[j].raw());
                }
                std::set<std::string> got;
                for (const auto& v : listed) got.insert(v.raw());
                out.require(got == expected, "neighbors of " + text(all[i].raw()) + " at n=" + std::to_string(n));
                for (const auto& v : expected) {
                    if (all[i].raw() >= v) continue;
                    edges.insert({all[i].raw(), v});
                    ++edges_checked;
                    out.require(colorer.color(all[i]) != colorer.color(QaryString(v, 2)),
                                "color clash " + text(all[i].raw()) + " ~ " + text(v));
                }
            }
            if (deletion && n == 3) {
                std::set<std::pair<std::string, std::string>> shown;
                for (const auto& [a, b] : edges) shown.insert({text(a), text(b)});
                out.require(shown == kThreeBitEdges, "n=3 deletion graph differs from the 19 hand-listed edges");
            }
        }
    }
    if (out.pass) out.detail << edges_checked << " edges properly colored; n=3 deletion graph has exactly the 19 hand-listed edges";
}

void redundancy_arithmetic(Outcome& out) {
    for (std::size_t n = 8; n <= 14; ++n) {
        CodeParams p;
        p.n = n;
        const EditCode code(p);
        const std::uint64_t delta = oracle::ipow((n + 3) * 3 + 1, 2) - 1;
        const std::uint64_t q1 = oracle::prime_after(delta * n);
        const unsigned b2 = oracle::ceil_log2(q1 * q1);
        const std::uint64_t q2 = oracle::prime_after(delta * b2);
        const unsigned expected = 2 * oracle::ceil_log2(q2);
        const unsigned measured = code.colorer().spec().pair_bits();
        out.require(code.colorer().spec().view().degree_bound() == delta, "degree bound at n=" + std::to_string(n));
        out.require(code.colorer().spec().round1().Q() == q1 && code.colorer().spec().round2().Q() == q2,
                    "family primes at n=" + std::to_string(n));
        out.require(measured == expected, "bits at n=" + std::to_string(n) + ": " + std::to_string(measured) + " vs " +
                                              std::to_string(expected));
        const double limit = 2 * std::log2(double(delta)) + 2 * std::log2(std::log2(double(q1) * double(q1))) + 6;
        out.require(measured <= limit, "bits above the slack limit at n=" + std::to_string(n));
        if (n == 8 || n == 14)
            out.detail << "n=" << n << ": " << measured << " bits <= " << limit << "; ";
    }
}

// Naive Definition-2 check: no F_i is covered by the union of r other sets.
bool naive_cover_free(const std::vector<std::set<Ground>>& sets, std::size_t r) {
    const std::size_t N = sets.size();
    std::function<bool(std::size_t, std::size_t, std::set<Ground>&, std::size_t)> covered =
        [&](std::size_t target, std::size_t from, std::set<Ground>& left, std::size_t depth) -> bool {
        if (left.empty()) return true;
        if (depth == r) return false;
        for (std::size_t j = from; j < N; ++j) {
            if (j == target) continue;
            std::set<Ground> rest;
            for (auto g : left)
                if (!sets[j].count(g)) rest.insert(g);
            if (covered(target, j + 1, rest, depth + 1)) return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < N; ++i) {
        std::set<Ground> left = sets[i];
        if (covered(i, 0, left, 0)) return false;
    }
    return true;
}

std::size_t divisors_up_to(std::uint64_t m, std::uint64_t A) {
    std::size_t c = 0;
    for (std::uint64_t a = 1; a <= A; ++a) c += m % a == 0 ? 1 : 0;
    return c;
}

void cover_free(Outcome& out) {
    const PolyFamily poly(5, 1, 25, 2);
    std::vector<std::set<Ground>> poly_sets;
    for (Index i = 1; i <= 25; ++i) {
        std::set<Ground> s;
        for (Ground g = 0; g < poly.ground_size(); ++g)
            if (poly.contains(i, g)) s.insert(g);
        poly_sets.push_back(s);
    }
    out.require(naive_cover_free(poly_sets, 2), "polynomial family Q=5 b=1 is not 2-cover-free");
    out.require(verify_cover_free(materialize(poly), 2), "library checker rejects the polynomial family");

    const DivisorFamily div(64, 2);
    std::vector<std::set<Ground>> div_sets;
    for (Index i = 1; i <= 64; ++i) {
        std::set<Ground> s;
        for (std::uint64_t a = 1; a <= div.modulus_range(); ++a) s.insert(div.encode(a, i % a));
        div_sets.push_back(s);
    }
    out.require(naive_cover_free(div_sets, 2), "divisor family N=64 is not 2-cover-free");
    out.require(verify_cover_free(materialize(div), 2), "library checker rejects the divisor family");

    std::size_t pairs = 0;
    for (std::uint64_t N = 3; N <= 128; ++N) {
        const DivisorFamily fam(N, 2);
        for (Index i = 1; i <= N; ++i) {
            for (Index j = i + 1; j <= N; ++j) {
                ++pairs;
                out.require(intersection_size(fam, i, j) == divisors_up_to(j - i, fam.modulus_range()),
                            "intersection of F_" + std::to_string(i) + " and F_" + std::to_string(j) + " at N=" +
                                std::to_string(N));
            }
        }
    }
    if (out.pass)
        out.detail << "poly Q=5 b=1 r=2 and divisor N=64 r=2 (A=" << div.modulus_range()
                   << ") cover-free; divisor-count identity on " << pairs << " pairs";
}

// Independent (r, v, ell) scan: groups of size <= v containing u, bitsets over the ground set.
bool naive_rvl_free(const RvlFamily& fam) {
    const std::uint64_t N = fam.size(), t = fam.ground_size();
    std::vector<std::vector<bool>> member(N + 1, std::vector<bool>(t + 1));
    for (Index u = 1; u <= N; ++u)
        for (Ground e = 1; e <= t; ++e) member[u][e] = fam.contains(u, e);
    for (Index u = 1; u <= N; ++u) {
        std::vector<std::vector<Index>> groups;
        std::vector<Index> others;
        for (Index w = 1; w <= N; ++w)
            if (w != u) others.push_back(w);
        std::function<void(std::size_t, std::vector<Index>&)> grow = [&](std::size_t from, std::vector<Index>& g) {
            groups.push_back(g);
            if (g.size() == fam.group_size()) return;
            for (std::size_t i = from; i < others.size(); ++i) {
                g.push_back(others[i]);
                grow(i + 1, g);
                g.pop_back();
            }
        };
        std::vector<Index> seed_group{u};
        grow(0, seed_group);
        // bad[g][e]: more than ell members of group g contain e.
        std::vector<std::vector<bool>> bad;
        for (const auto& g : groups) {
            std::vector<bool> row(t + 1);
            for (Ground e = 1; e <= t; ++e) {
                std::uint64_t c = 0;
                for (auto w : g) c += member[w][e] ? 1 : 0;
                row[e] = c > fam.ell();
            }
            bad.push_back(std::move(row));
        }
        std::vector<std::size_t> pick(fam.cover(), 0);
        std::function<bool(std::size_t, std::size_t)> obstructed = [&](std::size_t depth, std::size_t from) -> bool {
            if (depth == fam.cover()) {
                for (Ground e = 1; e <= t; ++e) {
                    if (!member[u][e]) continue;
                    bool blocked = false;
                    for (auto gi : pick) blocked = blocked || bad[gi][e];
                    if (!blocked) return false;
                }
                return true;
            }
            for (std::size_t gi = from; gi < groups.size(); ++gi) {
                pick[depth] = gi;
                if (obstructed(depth + 1, gi)) return true;
            }
            return false;
        };
        if (obstructed(0, 0)) return false;
    }
    return true;
}

void rvl_family(Outcome& out) {
    const std::uint64_t expected_t = static_cast<std::uint64_t>(std::ceil(6 * std::pow(2.0, 1.5) * 9 * 4));
    unsigned passing = 0;
    std::string failing;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RvlFamily fam(16, 2, 3, 2, seed);
        out.require(fam.ground_size() == expected_t, "ground size " + std::to_string(fam.ground_size()));
        const bool naive = naive_rvl_free(fam);
        const bool library = verify_cover_free(materialize(fam), 2, 3, 2);
        out.require(naive == library, "library and naive scans disagree at seed " + std::to_string(seed));
        if (naive) ++passing;
        else failing += " " + std::to_string(seed);
    }
    out.require(passing >= 9, std::to_string(passing) + " of 10 seeds obstruction-free");
    if (out.pass) {
        out.detail << "t=" << expected_t << "; " << passing << "/10 seeds obstruction-free";
        if (!failing.empty()) out.detail << " (failing:" << failing << ")";
    }
}

void list_decoding(Outcome& out) {
    CodeParams p;
    p.n = 6;
    p.ell = 2;
    const ListCode code(p);
    std::size_t trials = 0, longest = 0;
    for (const auto& x : oracle::strings(6, 2)) {
        const auto s = code.syndrome(x);
        for (const auto& raw : oracle::ball(x.raw(), 1, 2)) {
            ++trials;
            std::vector<QaryString> list;
            try {
                list = code.decode(QaryString(raw, 2), s);
            } catch (const Error&) {
            }
            longest = std::max(longest, list.size());
            out.require(std::find(list.begin(), list.end(), x) != list.end() && list.size() <= 2,
                        text(x.raw()) + " via " + text(raw));
        }
    }
    // Formula-level comparison of ground sizes.
    std::size_t crossover = 2;
    std::string trace;
    for (std::size_t n = 2; n <= 60; ++n) {
        const std::uint64_t rv = (n + 2) * 3 + 1;  // one-edit ball bound
        const std::uint64_t q_list = oracle::prime_after(rv * rv * n);
        const long double log_n = 2 * std::log2(static_cast<long double>(q_list));
        const auto t = static_cast<std::uint64_t>(
            std::ceil(6 * std::pow(static_cast<long double>(rv), 1.5L) * static_cast<long double>(rv * rv) * log_n));
        const std::uint64_t delta = oracle::ipow((n + 3) * 3 + 1, 2) - 1;
        const std::uint64_t q1 = oracle::prime_after(delta * n);
        const std::uint64_t q2 = oracle::prime_after(delta * oracle::ceil_log2(q1 * q1));
        const std::uint64_t unique_ground = q2 * q2;

        CodeParams pn;
        pn.n = n;
        pn.ell = 2;
        const LabelingSpec spec(HypergraphView(n, pn.model()), 2, 0);
        out.require(spec.family().ground_size() == t, "list ground size at n=" + std::to_string(n));
        out.require(EditCode(pn).range() == unique_ground, "unique ground size at n=" + std::to_string(n));
        if (t >= unique_ground) crossover = n + 1;
        if (n == 2 || n == 6 || n == 60) trace += " n=" + std::to_string(n) + ": " + std::to_string(t) + " vs " + std::to_string(unique_ground) + ";";
    }
    out.require(crossover <= 60, "no crossover below n=60");
    if (out.pass)
        out.detail << trials << " pairs, longest list " << longest << "; list ground < unique ground for all n in ["
                   << crossover << ", 60], crossover n0=" << crossover << ";" << trace;
}

void incremental_sync(Outcome& out) {
    const SyncCodebook book(8, 2);
    std::size_t runs = 0;
    for (const auto& x : oracle::strings(8, 2)) {
        for (const auto& raw : oracle::ball(x.raw(), 2, 2)) {
            const QaryString y(raw, 2);
            for (auto mode : {SyncMode::Naive, SyncMode::Fallback, SyncMode::Incremental}) {
                ++runs;
                bool ok = false;
                try {
                    ok = run_protocol(book, x, y, 1, 2, mode).outcome == x;
                } catch (const Error&) {
                }
                out.require(ok, to_string(mode) + " on " + text(x.raw()) + " / " + text(raw));
            }
        }
    }
    const unsigned conditional = book.conditional_bits(2, 1);
    const unsigned full = book.plain(2).bit_length();
    out.require(conditional < full, "conditional syndrome is not shorter");

    const auto code = greedy_code(8, 2, 3);
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            out.require(oracle::distance(code[i], code[j]) >= 3, "greedy code distance");
    for (const auto& c : code) {
        for (unsigned D = 1; D <= 3; ++D) {
            std::size_t lhs = 0;
            for (const auto& z : code) lhs += oracle::distance(c, z) <= D ? 1 : 0;
            const std::size_t rhs = oracle::ball(c.raw(), D - 1, 2).size();
            out.require(lhs <= rhs, "ball inequality at " + text(c.raw()) + " D=" + std::to_string(D));
            out.require(verify_ball_lemma(code, c, D, 3) == (lhs <= rhs), "library ball check disagrees");
        }
    }

    for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const auto cost = expected_cost(1, 2, p);
        out.require(cost.incremental <= cost.fallback + 1e-12, "incremental above fallback at p=" + std::to_string(p));
    }
    // With a=1, b=2 the half-way syndrome is already Phi_b, so both crossings sit at 0;
    // strict separation needs b >= a+2.
    const auto at_12 = cost_crossings(1, 2);
    const auto cross = cost_crossings(1, 4);
    auto bisect = [](auto&& gap) {
        double lo = 0, hi = 1;
        for (int it = 0; it < 200; ++it) {
            const double mid = (lo + hi) / 2;
            (gap(mid) < 0 ? lo : hi) = mid;
        }
        return lo;
    };
    const double p0 = bisect([](double p) { auto c = expected_cost(1, 4, p); return c.fallback - c.naive; });
    const double p1 = bisect([](double p) { auto c = expected_cost(1, 4, p); return c.incremental - c.naive; });
    out.require(std::abs(p0 - cross.fallback_vs_naive) < 1e-9 && std::abs(p1 - cross.incremental_vs_naive) < 1e-9,
                "crossings disagree with the cost curves");
    out.require(0 < cross.fallback_vs_naive && cross.fallback_vs_naive < cross.incremental_vs_naive &&
                    cross.incremental_vs_naive < 1,
                "crossings not ordered 0 < p0 < p1 < 1");
    for (int i = 0; i <= 100; ++i) {
        const auto c = expected_cost(1, 4, i / 100.0);
        out.require(c.incremental <= c.fallback + 1e-12, "ordering at a=1 b=4");
    }
    if (out.pass)
        out.detail << runs << " protocol runs recovered x; |Phi_2|1| = " << conditional << " < |Phi_2| = " << full
                   << "; ball inequality on " << code.size() << " codewords; crossings a=1,b=2: " << at_12.fallback_vs_naive
                   << "," << at_12.incremental_vs_naive << "; a=1,b=4: p0=" << cross.fallback_vs_naive
                   << " < p1=" << cross.incremental_vs_naive;
}

void burst_code(Outcome& out) {
    const BurstCode code({12, 3});
    std::size_t trials = 0;
    for (const auto& x : oracle::strings(12, 2)) {
        const auto p1 = code.phi1(x);
        const auto p2 = code.phi2(x);
        for (std::size_t len = 0; len <= 3; ++len) {
            for (std::size_t at = 0; at + len <= 12; ++at) {
                ++trials;
                const QaryString y(x.raw().substr(0, at) + x.raw().substr(at + len), 2);
                out.require(decodes_to(x, [&] { return code.decode(y, p1, p2); }),
                            text(x.raw()) + " burst " + std::to_string(len) + "@" + std::to_string(at));
            }
        }
    }
    const unsigned phi2_bits = code.colorer().spec().pair_bits();
    out.require(code.redundancy_bits() == 3 + phi2_bits, "redundancy is not 3 + |phi2|");
    if (out.pass) out.detail << trials << " bursts decoded; redundancy 3 + " << phi2_bits << " = " << code.redundancy_bits() << " bits";
}

void substring_edit_code(Outcome& out) {
    const SseCode code({32, 4, 1});
    std::mt19937_64 rng(20240101);
    std::size_t trials = 0;
    for (int xi = 0; xi < 50; ++xi) {
        std::string raw(32, '\0');
        for (auto& c : raw) c = static_cast<char>(rng() & 1);
        const QaryString x(raw, 2);
        const auto p1 = code.phi1(x);
        const auto p2 = code.phi2(x);
        for (int e = 0; e < 500; ++e) {
            const std::size_t at = rng() % 33;
            const std::size_t removed = std::min<std::size_t>(rng() % 5, 32 - at);
            std::string inserted(rng() % 5, '\0');
            for (auto& c : inserted) c = static_cast<char>(rng() & 1);
            const QaryString y(raw.substr(0, at) + inserted + raw.substr(at + removed), 2);
            ++trials;
            out.require(decodes_to(x, [&] { return code.decode(y, p1, p2); }),
                        text(raw) + " edit at " + std::to_string(at));
        }
    }

    // Erasure decoding, every pattern of <= 4 erasures, for every data length with m + 4 <= 12.
    std::size_t patterns = 0;
    for (std::size_t m = 1; m + 4 <= 12; ++m) {
        const RsCode rs(4, m, 4);
        for (int sample = 0; sample < 20; ++sample) {
            std::vector<Elem> word(m);
            for (auto& s : word) s = rng() & 15;
            const auto parity = rs.parity(word);
            word.insert(word.end(), parity.begin(), parity.end());
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m + 4)); ++mask) {
                if (std::popcount(mask) > 4) continue;
                ++patterns;
                auto damaged = word;
                for (std::size_t c = 0; c < word.size(); ++c)
                    if ((mask >> c) & 1) damaged[c] = rng() & 15;
                const auto fixed = rs.erasure_decode(damaged, mask);
                out.require(fixed && *fixed == word, "erasure pattern " + std::to_string(mask) + " at m=" + std::to_string(m));
            }
        }
    }

    const unsigned measured = code.redundancy_bits();
    const double gv = 2 * std::log2(32.0 * 25 * 16);  // log2((n (l+1)^2 2^l)^2 + 1), the +1 is negligible
    const double q1 = double(code.colorer().spec().round1().Q());
    const double limit = 2 * gv + 2 * std::log2(std::log2(q1 * q1)) + 6;
    out.require(measured == 16 + code.colorer().spec().pair_bits(), "redundancy is not 4l + |phi2|");
    out.require(std::abs(bounds_sse(32, 1, 4).gv - gv) < 1e-6, "GV formula");
    out.require(measured <= limit, "redundancy above 2 GV + slack");
    if (out.pass)
        out.detail << trials << " edits decoded; " << patterns << " erasure patterns; redundancy 16 + "
                   << code.colorer().spec().pair_bits() << " = " << measured << " bits, 2*GV = " << 2 * gv
                   << ", slack to limit " << limit - measured;
}

void protected_codeword(Outcome& out) {
    CodeParams p;
    p.n = 6;
    const ProtectedCode code(p);
    std::size_t trials = 0;
    for (const auto& x : oracle::strings(6, 2)) {
        const auto c = code.encode(x);
        out.require(c.size() == code.length(), "codeword length");
        for (const auto& raw : oracle::one_edit(c.raw(), 2)) {
            ++trials;
            const QaryString y(raw, 2);
            out.require(decodes_to(x, [&] { return code.decode(y); }), text(x.raw()) + " corrupted to " + text(raw));
        }
    }
    // Repetition sub-decoder against a scan of all q^r words, r = 3.
    std::size_t segments = 0;
    for (const auto& w : oracle::strings(3, 2)) {
        const auto rep = repeat_symbols(w, 3);
        for (const auto& raw : oracle::one_edit(rep.raw(), 2)) {
            ++segments;
            std::vector<std::string> matches;
            for (const auto& cand : oracle::strings(3, 2))
                if (oracle::distance(repeat_symbols(cand, 3).raw(), raw) <= 1) matches.push_back(cand.raw());
            out.require(matches.size() == 1 && matches[0] == w.raw(), "naive repetition scan at " + text(raw));
            out.require(decodes_to(w, [&] { return decode_repetition(QaryString(raw, 2), 3, 1); }),
                        "repetition decoder at " + text(raw));
        }
    }
    if (out.pass)
        out.detail << trials << " corruptions of length-" << code.length() << " codewords decoded; " << segments
                   << " repetition segments match the q^r scan";
}

void compression_comparison(Outcome& out) {
    const std::uint64_t N = 1 << 16, r = 16;
    const std::uint64_t q = oracle::prime_after(r * 16);
    const double exponent = 1.6 * 16 / std::log2(std::log(double(N)));
    const std::uint64_t A = r * static_cast<std::uint64_t>(std::ceil(std::exp2(exponent))) + 1;
    const auto poly = poly_family_params(N, r);
    const DivisorFamily divisor(N, r);
    out.require(poly.ground_size() == q * q, "polynomial ground size");
    out.require(divisor.ground_size() == A * A, "divisor ground size");
    out.require(divisor.ground_size() > poly.ground_size(), "divisor ground not larger");
    if (out.pass) out.detail << "divisor ground " << divisor.ground_size() << " > polynomial ground " << poly.ground_size();
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria = {
        {"unique decoding, n=8 k=1", unique_decoding},
        {"properness, n=3..10", properness},
        {"redundancy arithmetic, n=8..14", redundancy_arithmetic},
        {"cover-free oracles", cover_free},
        {"(r,v,ell) family seeds", rvl_family},
        {"list decoding, n=6 ell=2", list_decoding},
        {"incremental synchronization, n=8", incremental_sync},
        {"burst code, n=12 l=3", burst_code},
        {"substring-edit code, n=32 l=4", substring_edit_code},
        {"protected codeword, n=6", protected_codeword},
        {"ground-size comparison, N=2^16 r=16", compression_comparison},
    };
    std::vector<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.push_back(std::stoi(argv[i]));
    if (chosen.empty())
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) chosen.push_back(i);

    bool all = true;
    for (int id : chosen) {
        if (id < 1 || id > static_cast<int>(criteria.size())) {
            std::printf("criterion %d: FAIL (no such criterion)\n", id);
            all = false;
            continue;
        }
        Outcome out;
        try {
            criteria[id - 1].second(out);
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail.str("");
            out.detail << "exception: " << e.what();
        }
        std::printf("criterion %d: %s [%s] %s\n", id, out.pass ? "PASS" : "FAIL", criteria[id - 1].first,
                    out.detail.str().c_str());
        std::fflush(stdout);
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
