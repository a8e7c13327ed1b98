#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syncodes/burst.hpp"
#include "syncodes/codes.hpp"
#include "syncodes/errors.hpp"
#include "syncodes/sync.hpp"
#include "syncodes/wire.hpp"

using namespace syncodes;
using wire::json;

namespace {

enum Exit { kOk = 0, kUndecodable = 2, kInvariant = 3, kBadParams = 4 };

struct RunConfig {
    std::size_t n = 8;
    unsigned q = 2;
    unsigned k = 1;
    unsigned l = 0;
    std::uint64_t ell = 2;
    std::uint64_t seed = 0;
    std::string repertoire = "insdelsub";
    std::string mode = "edit";
    std::string x, y, edits;
    std::string syndrome_path, out_path, csv_path;
    unsigned a = 1, b = 2;
    std::vector<double> p = {0.3};
    unsigned trials = 200;
    std::string suite;
    std::string family = "poly";
    std::uint64_t Q = 5, fam_b = 1, fam_N = 0, r = 2, v = 3, t = 0;
    std::uint64_t budget = 50'000'000;
    std::size_t n_max = 0;
};

CodeParams code_params(const RunConfig& c) {
    CodeParams p;
    p.n = c.n;
    p.q = c.q;
    p.k = c.k;
    p.l = c.l;
    p.repertoire = wire::parse_repertoire(c.repertoire);
    p.ell = c.ell;
    p.seed = c.seed;
    return p;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

// Flags given explicitly must agree with the header.
void check_flag(const CLI::App& app, const std::string& flag, std::uint64_t given, std::uint64_t header) {
    if (app.count(flag) > 0 && given != header)
        throw InvalidInput("parameter mismatch: " + flag + " " + std::to_string(given) + " but the syndrome header has " +
                           std::to_string(header));
}

QaryString received_word(const RunConfig& c, unsigned q) {
    QaryString y = QaryString::parse(c.y, q);
    if (!c.edits.empty()) y = apply_edits(y, parse_edit_script(c.edits));
    return y;
}

int cmd_encode(const RunConfig& c) {
    if (c.mode == "edit") {
        const EditCode code(code_params(c));
        const auto x = QaryString::parse(c.x, c.q);
        write_text(c.out_path, wire::edit_document(code, code.syndrome(x)).dump(2) + "\n");
    } else if (c.mode == "list") {
        const ListCode code(code_params(c));
        const auto x = QaryString::parse(c.x, c.q);
        write_text(c.out_path, wire::list_document(code, code.syndrome(x)).dump(2) + "\n");
    } else if (c.mode == "burst") {
        const BurstCode code({c.n, c.l});
        const auto x = QaryString::parse(c.x, 2);
        if (x.size() != c.n) throw InvalidInput("x has length " + std::to_string(x.size()) + ", expected n");
        write_text(c.out_path, wire::burst_document(code, code.phi1(x), code.phi2(x)).dump(2) + "\n");
    } else if (c.mode == "sse") {
        const SseCode code({c.n, c.l, c.k});
        const auto x = QaryString::parse(c.x, 2);
        write_text(c.out_path, wire::sse_document(code, code.phi1(x), code.phi2(x)).dump(2) + "\n");
    } else {
        throw InvalidInput("unknown mode '" + c.mode + "' (edit, list, burst, sse)");
    }
    return kOk;
}

int report(const json& j) {
    std::cout << j.dump() << "\n";
    return kOk;
}

int cmd_decode(const RunConfig& c, const CLI::App& app) {
    const json doc = read_json(c.syndrome_path);
    const auto kind = wire::kind_of(doc);
    if (kind == "edit") {
        const CodeParams p = wire::code_params_of(doc);
        check_flag(app, "--n", c.n, p.n);
        check_flag(app, "--q", c.q, p.q);
        check_flag(app, "--k", c.k, p.k);
        const EditCode code(p);
        const auto r = code.decode(received_word(c, p.q), wire::read_edit(doc, code));
        return report({{"result", r.value.to_text()}, {"status", "ok"}, {"candidates_examined", r.candidates_examined}});
    }
    if (kind == "burst") {
        const BurstParams p = wire::burst_params_of(doc);
        check_flag(app, "--n", c.n, p.n);
        check_flag(app, "--l", c.l, p.l);
        const BurstCode code(p);
        const auto y = received_word(c, 2);
        const auto phi1 = wire::read_burst_phi1(doc, code);
        const auto pool = code.candidates(y, phi1);
        const auto x = code.decode(y, phi1, wire::read_burst_phi2(doc, code));
        return report({{"result", x.to_text()}, {"status", "ok"}, {"candidates_examined", pool.size()}});
    }
    if (kind == "sse") {
        const SseParams p = wire::sse_params_of(doc);
        check_flag(app, "--n", c.n, p.n);
        check_flag(app, "--l", c.l, p.l);
        check_flag(app, "--k", c.k, p.k);
        const SseCode code(p);
        const auto y = received_word(c, 2);
        const auto phi1 = wire::read_sse_phi1(doc, code);
        const auto pool = code.candidates(y, phi1);
        const auto x = code.decode(y, phi1, wire::read_sse_phi2(doc, code));
        return report({{"result", x.to_text()}, {"status", "ok"}, {"candidates_examined", pool.size()}});
    }
    if (kind == "list") throw InvalidInput("list syndromes are decoded with list-decode");
    throw InvalidInput("unknown document kind '" + kind + "'");
}

int cmd_list_decode(const RunConfig& c, const CLI::App& app) {
    const json doc = read_json(c.syndrome_path);
    const CodeParams p = wire::code_params_of(doc);
    check_flag(app, "--n", c.n, p.n);
    check_flag(app, "--k", c.k, p.k);
    check_flag(app, "--ell", c.ell, p.ell);
    const ListCode code(p);
    const auto list = code.decode(received_word(c, p.q), wire::read_list(doc, code));
    json result = json::array();
    for (const auto& z : list) result.push_back(z.to_text());
    std::cout << json{{"result", result}, {"status", list.empty() ? "undecodable" : "ok"}}.dump() << "\n";
    return list.empty() ? kUndecodable : kOk;
}

int cmd_protect_encode(const RunConfig& c) {
    const ProtectedCode code(code_params(c));
    write_text(c.out_path, code.encode(QaryString::parse(c.x, c.q)).to_text() + "\n");
    return kOk;
}

int cmd_protect_decode(const RunConfig& c) {
    const ProtectedCode code(code_params(c));
    return report({{"result", code.decode(received_word(c, c.q)).to_text()}, {"status", "ok"}});
}

json transcript_json(const SyncTranscript& t) {
    json messages = json::array();
    for (const auto& m : t.messages)
        messages.push_back({{"from", to_string(m.sender)}, {"kind", to_string(m.kind)}, {"bits", m.bits}});
    return {{"mode", to_string(t.mode)},
            {"messages", messages},
            {"alice_bits", t.alice_bits()},
            {"outcome", t.outcome ? json(t.outcome->to_text()) : json(nullptr)}};
}

int cmd_sync_sim(const RunConfig& c) {
    if (c.a < 1 || c.b <= c.a) throw InvalidInput("sync-sim needs 1 <= a < b");
    const SyncCodebook book(c.n, c.q);
    std::ostringstream csv;
    csv << "p,mode,mean_bits\n";
    json runs = json::array();
    bool all_recovered = true;
    for (double p : c.p) {
        const auto s = simulate_sync(book, c.a, c.b, p, c.trials, c.seed);
        all_recovered = all_recovered && s.recovered == s.trials;
        csv << p << ",naive," << s.mean_naive << "\n";
        csv << p << ",fallback," << s.mean_fallback << "\n";
        csv << p << ",incremental," << s.mean_incremental << "\n";
        csv << p << ",oracle," << s.oracle_reference << "\n";
        const auto curve = expected_cost(c.a, c.b, p);
        json sample = json::array();
        for (const auto& t : s.sample) sample.push_back(transcript_json(t));
        runs.push_back({{"p", p},
                        {"trials", s.trials},
                        {"recovered", s.recovered},
                        {"mean_bits", {{"naive", s.mean_naive}, {"fallback", s.mean_fallback}, {"incremental", s.mean_incremental}}},
                        {"oracle_reference_bits", s.oracle_reference},
                        {"expected_cost_log_n",
                         {{"naive", curve.naive}, {"fallback", curve.fallback}, {"incremental", curve.incremental}, {"oracle", curve.oracle}}},
                        {"first_trial", sample}});
    }
    const auto cross = cost_crossings(c.a, c.b);
    json doc = {{"n", c.n}, {"q", c.q}, {"a", c.a}, {"b", c.b}, {"seed", c.seed}, {"runs", runs},
                {"crossings", {{"fallback_vs_naive", cross.fallback_vs_naive}, {"incremental_vs_naive", cross.incremental_vs_naive}}}};
    write_text(c.out_path, doc.dump(2) + "\n");
    if (!c.csv_path.empty()) write_text(c.csv_path, csv.str());
    return all_recovered ? kOk : kInvariant;
}

struct SuiteLine {
    std::string name;
    bool pass;
    std::string detail;
};

int print_suite(const std::vector<SuiteLine>& lines) {
    bool ok = true;
    for (const auto& l : lines) {
        std::cout << l.name << ": " << (l.pass ? "PASS" : "FAIL") << " (" << l.detail << ")\n";
        ok = ok && l.pass;
    }
    return ok ? kOk : kInvariant;
}

std::vector<QaryString> budgeted_vertices(const RunConfig& c, unsigned q) {
    auto all = all_strings(c.n, q);
    if (all.size() > c.budget)
        throw SizeError("budget of " + std::to_string(c.budget) + " vertices is below the " + std::to_string(all.size()) +
                        " required; report incomplete");
    return all;
}

std::string join_indices(const std::vector<Index>& v) {
    std::string s;
    for (auto i : v) s += (s.empty() ? "" : " ") + std::to_string(i);
    return s;
}

int verify_coloring(const RunConfig& c) {
    const auto model = c.mode == "deletion" ? ChannelModel::deletions(c.k, c.q)
                                            : ChannelModel::edits(c.k, c.q, wire::parse_repertoire(c.repertoire));
    const TwoRoundColorer colorer{ColoringSpec(GraphView::confusion(c.n, model))};
    std::uint64_t edges = 0;
    std::string bad;
    for (const auto& x : budgeted_vertices(c, c.q)) {
        for (const auto& v : colorer.spec().view().neighbors(x)) {
            if (v < x) continue;
            ++edges;
            if (bad.empty() && colorer.color(x) == colorer.color(v)) bad = x.to_text() + " ~ " + v.to_text();
        }
    }
    return print_suite({{"properness", bad.empty(), bad.empty() ? "edges checked: " + std::to_string(edges) : "clash " + bad}});
}

int verify_cff(const RunConfig& c) {
    ExplicitFamily fam;
    std::string label;
    if (c.family == "poly") {
        std::uint64_t N = c.fam_N;
        if (N == 0) {
            N = 1;
            for (std::uint64_t i = 0; i <= c.fam_b; ++i) N *= c.Q;
        }
        fam = materialize(PolyFamily(c.Q, static_cast<unsigned>(c.fam_b), N, c.r));
        label = "poly Q=" + std::to_string(c.Q) + " b=" + std::to_string(c.fam_b) + " N=" + std::to_string(N);
    } else if (c.family == "divisor") {
        fam = materialize(DivisorFamily(c.fam_N, c.r));
        label = "divisor N=" + std::to_string(c.fam_N);
    } else {
        throw InvalidInput("unknown family '" + c.family + "' (poly or divisor)");
    }
    const auto obstruction = find_cover_obstruction(fam, c.r, c.budget);
    if (!obstruction) return print_suite({{"cover-free", true, label + " r=" + std::to_string(c.r)}});
    return print_suite({{"cover-free", false,
                         "F_" + std::to_string(obstruction->target) + " covered by {" + join_indices(obstruction->cover) + "}"}});
}

int verify_rvl(const RunConfig& c) {
    const std::uint64_t N = c.fam_N == 0 ? 16 : c.fam_N;
    const RvlFamily fam(N, c.r, c.v, c.ell, c.seed, c.t == 0 ? std::nullopt : std::optional<std::uint64_t>(c.t));
    const auto obstruction = find_rvl_obstruction(materialize(fam), c.r, c.v, c.ell, c.budget);
    const std::string label = "N=" + std::to_string(N) + " t=" + std::to_string(fam.ground_size()) +
                              " seed=" + std::to_string(c.seed);
    if (!obstruction) return print_suite({{"rvl-cover-free", true, label}});
    std::string groups;
    for (const auto& g : obstruction->groups) groups += " {" + join_indices(g) + "}";
    return print_suite({{"rvl-cover-free", false, label + "; F_" + std::to_string(obstruction->target) + " obstructed by" + groups}});
}

int verify_decode(const RunConfig& c) {
    const EditCode code(code_params(c));
    std::uint64_t trials = 0, failures = 0;
    std::string first;
    for (const auto& x : budgeted_vertices(c, c.q)) {
        const auto s = code.syndrome(x);
        for (const auto& y : channel_outputs(code.params().model(), x)) {
            ++trials;
            bool ok = false;
            try {
                ok = code.decode(y, s).value == x;
            } catch (const Error&) {
            }
            if (!ok && failures++ == 0) first = x.to_text() + " -> " + y.to_text();
        }
    }
    return print_suite({{"unique-decoding", failures == 0,
                         failures == 0 ? "round trips: " + std::to_string(trials) : "first failure " + first}});
}

int verify_list(const RunConfig& c) {
    const ListCode code(code_params(c));
    std::uint64_t trials = 0, failures = 0;
    std::size_t longest = 0;
    std::string first;
    for (const auto& x : budgeted_vertices(c, c.q)) {
        const auto s = code.syndrome(x);
        for (const auto& y : channel_outputs(code.params().model(), x)) {
            ++trials;
            const auto list = code.decode(y, s);
            longest = std::max(longest, list.size());
            const bool ok = list.size() <= c.ell && std::find(list.begin(), list.end(), x) != list.end();
            if (!ok && failures++ == 0) first = x.to_text() + " -> " + y.to_text();
        }
    }
    return print_suite({{"list-decoding", failures == 0,
                         failures == 0 ? "round trips: " + std::to_string(trials) + ", longest list " + std::to_string(longest)
                                       : "first failure " + first}});
}

int verify_burst(const RunConfig& c) {
    const BurstCode code({c.n, c.l});
    std::uint64_t trials = 0, failures = 0;
    for (const auto& x : budgeted_vertices(c, 2)) {
        const auto p1 = code.phi1(x);
        const auto p2 = code.phi2(x);
        for (const auto& y : channel_outputs(ChannelModel::burst_deletion(c.l), x)) {
            ++trials;
            try {
                failures += code.decode(y, p1, p2) == x ? 0 : 1;
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    return print_suite({{"burst-decoding", failures == 0,
                         std::to_string(trials) + " outputs, " + std::to_string(failures) + " failures, redundancy " +
                             std::to_string(code.redundancy_bits()) + " bits"}});
}

int verify_protect(const RunConfig& c) {
    const ProtectedCode code(code_params(c));
    const auto model = ChannelModel::edits(c.k, c.q, wire::parse_repertoire(c.repertoire));
    std::uint64_t trials = 0, failures = 0;
    for (const auto& x : budgeted_vertices(c, c.q)) {
        for (const auto& y : channel_outputs(model, code.encode(x))) {
            ++trials;
            try {
                failures += code.decode(y) == x ? 0 : 1;
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    return print_suite({{"protected-decoding", failures == 0,
                         std::to_string(trials) + " corruptions, " + std::to_string(failures) + " failures"}});
}

int verify_sync(const RunConfig& c) {
    const SyncCodebook book(c.n, c.q);
    std::uint64_t trials = 0, failures = 0;
    for (const auto& x : budgeted_vertices(c, c.q)) {
        for (const auto& y : ball(x, c.b)) {
            for (auto mode : {SyncMode::Naive, SyncMode::Fallback, SyncMode::Incremental}) {
                ++trials;
                try {
                    run_protocol(book, x, y, c.a, c.b, mode);
                } catch (const Error&) {
                    ++failures;
                }
            }
        }
    }
    return print_suite({{"sync-recovery", failures == 0,
                         std::to_string(trials) + " runs, " + std::to_string(failures) + " failures"}});
}

int cmd_verify(const RunConfig& c) {
    if (c.suite == "coloring") return verify_coloring(c);
    if (c.suite == "cff") return verify_cff(c);
    if (c.suite == "rvl") return verify_rvl(c);
    if (c.suite == "decode") return verify_decode(c);
    if (c.suite == "list") return verify_list(c);
    if (c.suite == "burst") return verify_burst(c);
    if (c.suite == "protect") return verify_protect(c);
    if (c.suite == "sync") return verify_sync(c);
    throw InvalidInput("unknown suite '" + c.suite + "'");
}

struct Measured {
    unsigned bits = 0;
    std::uint64_t round1_range = 1;
};

// Redundancy of the code the library would build, from its parameters alone.
Measured measured_redundancy(std::size_t n, unsigned k, unsigned l) {
    if (k == 0) return {};
    const SseParams sse{n, l, k};
    try {
        sse.validate();
        const SseCode code(sse);
        return {code.redundancy_bits(), code.colorer().spec().round1().ground_size()};
    } catch (const InvalidInput&) {
        CodeParams p;
        p.n = n;
        p.k = k;
        p.l = l;
        const EditCode code(p);
        return {code.bit_length(), code.colorer().spec().round1().ground_size()};
    }
}

int cmd_bounds(const RunConfig& c) {
    const std::size_t last = std::max(c.n, c.n_max);
    std::ostringstream csv;
    csv << "n,k,l,hamming,gv,measured,limit\n";
    bool ok = true;
    for (std::size_t n = c.n; n <= last; ++n) {
        const auto b = bounds_sse(n, c.k, c.l);
        const auto m = measured_redundancy(n, c.k, c.l);
        // Twice the existential bound plus the doubly logarithmic slack of the second round.
        const double limit =
            c.k == 0 ? 0.0 : 2.0 * b.gv + 2.0 * std::log2(std::log2(static_cast<double>(m.round1_range))) + 6.0;
        ok = ok && m.bits <= limit;
        csv << n << "," << c.k << "," << c.l << "," << b.hamming << "," << b.gv << "," << m.bits << "," << limit << "\n";
    }
    write_text(c.out_path, csv.str());
    return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Syndrome codes for synchronization channels"};
    app.require_subcommand(1);
    RunConfig c;

    auto code_opts = [&c](CLI::App* sub) {
        sub->add_option("--n", c.n, "block length");
        sub->add_option("--q", c.q, "alphabet size");
        sub->add_option("--k", c.k, "number of edits");
        sub->add_option("--l", c.l, "burst or substring length");
        sub->add_option("--ell", c.ell, "list size");
        sub->add_option("--seed", c.seed, "family seed");
        sub->add_option("--repertoire", c.repertoire, "insdelsub or insdel");
    };

    auto* encode = app.add_subcommand("encode", "write the syndrome document of x");
    code_opts(encode);
    encode->add_option("--mode", c.mode, "edit, list, burst or sse");
    encode->add_option("--x", c.x, "input string")->required();
    encode->add_option("--out", c.out_path, "output file (default stdout)");

    auto* decode = app.add_subcommand("decode", "recover x from y and a syndrome document");
    code_opts(decode);
    decode->add_option("--y", c.y, "received string")->required();
    decode->add_option("--edits", c.edits, "edit script applied to y first, e.g. d5;i3:1;s7:0");
    decode->add_option("--syndrome", c.syndrome_path, "syndrome document")->required();

    auto* list_decode = app.add_subcommand("list-decode", "list of candidates for y");
    code_opts(list_decode);
    list_decode->add_option("--y", c.y, "received string")->required();
    list_decode->add_option("--edits", c.edits, "edit script applied to y first");
    list_decode->add_option("--syndrome", c.syndrome_path, "list syndrome document")->required();

    auto* protect_encode = app.add_subcommand("protect-encode", "self-contained codeword for x");
    code_opts(protect_encode);
    protect_encode->add_option("--x", c.x, "input string")->required();
    protect_encode->add_option("--out", c.out_path, "output file (default stdout)");

    auto* protect_decode = app.add_subcommand("protect-decode", "recover x from a corrupted codeword");
    code_opts(protect_decode);
    protect_decode->add_option("--y", c.y, "received codeword")->required();
    protect_decode->add_option("--edits", c.edits, "edit script applied to y first");

    auto* sync_sim = app.add_subcommand("sync-sim", "simulate the synchronization protocols");
    sync_sim->add_option("--n", c.n, "block length");
    sync_sim->add_option("--q", c.q, "alphabet size");
    sync_sim->add_option("--a", c.a, "likely distance");
    sync_sim->add_option("--b", c.b, "worst-case distance");
    sync_sim->add_option("--p", c.p, "probability of distance b (repeatable)");
    sync_sim->add_option("--trials", c.trials, "trials per p");
    sync_sim->add_option("--seed", c.seed, "simulation seed");
    sync_sim->add_option("--out", c.out_path, "transcript JSON (default stdout)");
    sync_sim->add_option("--csv", c.csv_path, "aggregate CSV");

    auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    code_opts(verify);
    verify->add_option("--suite", c.suite, "coloring, cff, rvl, decode, list, burst, protect, sync")->required();
    verify->add_option("--mode", c.mode, "coloring graph: edit or deletion");
    verify->add_option("--family", c.family, "cff family: poly or divisor");
    verify->add_option("--Q", c.Q, "poly field size");
    verify->add_option("--b", c.fam_b, "poly degree, or sync worst-case distance");
    verify->add_option("--a", c.a, "sync likely distance");
    verify->add_option("--N", c.fam_N, "family size");
    verify->add_option("--r", c.r, "cover parameter");
    verify->add_option("--v", c.v, "group size");
    verify->add_option("--t", c.t, "override the rvl ground size");
    verify->add_option("--budget", c.budget, "work budget");

    auto* bounds = app.add_subcommand("bounds", "Hamming, GV and measured redundancy");
    bounds->add_option("--n", c.n, "block length (first of the sweep)");
    bounds->add_option("--n-max", c.n_max, "last block length of the sweep");
    bounds->add_option("--k", c.k, "number of substring edits");
    bounds->add_option("--l", c.l, "substring length");
    bounds->add_option("--out", c.out_path, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadParams;
    }

    try {
        if (*encode) return cmd_encode(c);
        if (*decode) return cmd_decode(c, *decode);
        if (*list_decode) return cmd_list_decode(c, *list_decode);
        if (*protect_encode) return cmd_protect_encode(c);
        if (*protect_decode) return cmd_protect_decode(c);
        if (*sync_sim) return cmd_sync_sim(c);
        if (*verify) {
            if (verify->count("--b") > 0 && c.suite == "sync") c.b = static_cast<unsigned>(c.fam_b);
            return cmd_verify(c);
        }
        if (*bounds) return cmd_bounds(c);
    } catch (const Undecodable& e) {
        std::cout << json{{"result", nullptr}, {"status", "undecodable"}, {"message", e.what()}}.dump() << "\n";
        return kUndecodable;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const FamilyFailure& e) {
        std::cerr << "family failure: " << e.what() << "\n";
        return kInvariant;
    } catch (const SizeError& e) {
        std::cerr << "incomplete: " << e.what() << "\n";
        return kBadParams;
    } catch (const InvalidInput& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return kBadParams;
    }
    return kBadParams;
}
