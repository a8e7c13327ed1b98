#include "syncodes/wire.hpp"

#include <algorithm>
#include <charconv>

#include "syncodes/errors.hpp"

namespace syncodes::wire {
namespace {

std::uint64_t parse_decimal(const std::string& text) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
        throw InvalidInput("not a decimal integer: '" + text + "'");
    return v;
}

json syndrome_json(const Syndrome& s) {
    return {{"value", std::to_string(s.value)}, {"range", std::to_string(s.range)}, {"bit_length", s.bit_length()}};
}

Syndrome syndrome_of(const json& j, std::uint64_t expected_range) {
    Syndrome s{parse_decimal(j.at("value").get<std::string>()), parse_decimal(j.at("range").get<std::string>())};
    if (s.range != expected_range)
        throw InvalidInput("syndrome range " + std::to_string(s.range) + " does not match the code's " +
                           std::to_string(expected_range));
    if (s.value >= s.range) throw InvalidInput("syndrome value out of range");
    return s;
}

void expect_kind(const json& doc, const std::string& kind) {
    if (kind_of(doc) != kind) throw InvalidInput("expected a '" + kind + "' document, got '" + kind_of(doc) + "'");
}

void expect_equal(const json& got, const json& want, const std::string& what) {
    if (got != want) throw InvalidInput(what + " mismatch: file has " + got.dump() + ", parameters give " + want.dump());
}

json coloring_families(const ColoringSpec& spec) {
    return json::array({describe(spec.round1()), describe(spec.round2())});
}

}  // namespace

std::string to_string(Repertoire rep) { return rep == Repertoire::InsDel ? "insdel" : "insdelsub"; }

Repertoire parse_repertoire(const std::string& text) {
    if (text == "insdelsub") return Repertoire::InsDelSub;
    if (text == "insdel") return Repertoire::InsDel;
    throw InvalidInput("unknown repertoire '" + text + "' (insdelsub or insdel)");
}

json describe(const PolyFamily& fam) {
    return {{"kind", "poly"}, {"N", fam.size()}, {"r", fam.cover()}, {"Q", fam.Q()}, {"b", fam.degree()}};
}

json describe(const RvlFamily& fam) {
    return {{"kind", "rvl"}, {"N", fam.size()}, {"r", fam.cover()}, {"v", fam.group_size()},
            {"ell", fam.ell()},  {"t", fam.ground_size()}, {"seed", fam.seed()}};
}

std::string to_hex(std::uint64_t value, unsigned bits) {
    static constexpr char digits[] = "0123456789abcdef";
    const unsigned nibbles = std::max(1u, (bits + 3) / 4);
    std::string out(nibbles, '0');
    for (unsigned i = 0; i < nibbles && i < 16; ++i) out[nibbles - 1 - i] = digits[(value >> (4 * i)) & 0xf];
    return out;
}

std::uint64_t parse_hex(const std::string& text) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
        throw InvalidInput("not a hex integer: '" + text + "'");
    return v;
}

std::string kind_of(const json& doc) {
    if (!doc.is_object() || !doc.contains("version") || !doc.contains("kind"))
        throw InvalidInput("not a syndrome document");
    if (doc.at("version").get<int>() != kVersion) throw InvalidInput("unsupported syndrome document version");
    return doc.at("kind").get<std::string>();
}

json edit_document(const EditCode& code, const Syndrome& s) {
    const auto& p = code.params();
    json params = {{"n", p.n}, {"q", p.q}, {"k", p.k}, {"l", p.l}, {"repertoire", to_string(p.repertoire)}};
    json families = p.k == 0 ? json::array() : coloring_families(code.colorer().spec());
    return {{"version", kVersion}, {"kind", "edit"}, {"params", params}, {"families", families},
            {"syndrome", syndrome_json(s)}};
}

json list_document(const ListCode& code, const ListSyndrome& s) {
    const auto& p = code.params();
    const auto& spec = code.labeler(s.seed).spec();
    json params = {{"n", p.n}, {"q", p.q}, {"k", p.k}, {"ell", p.ell}, {"seed", p.seed},
                   {"repertoire", to_string(p.repertoire)}};
    return {{"version", kVersion},
            {"kind", "list"},
            {"params", params},
            {"families", json::array({describe(spec.round1()), describe(spec.family())})},
            {"syndrome", syndrome_json(s.label)}};
}

json burst_document(const BurstCode& code, const std::vector<std::uint8_t>& phi1, const Syndrome& phi2) {
    const auto& p = code.params();
    return {{"version", kVersion},
            {"kind", "burst"},
            {"params", {{"n", p.n}, {"l", p.l}}},
            {"families", coloring_families(code.colorer().spec())},
            {"phi1", to_hex(pack_bits(phi1), p.l)},
            {"syndrome", syndrome_json(phi2)}};
}

json sse_document(const SseCode& code, const std::vector<Elem>& phi1, const Syndrome& phi2) {
    const auto& p = code.params();
    json symbols = json::array();
    for (Elem e : phi1) symbols.push_back(to_hex(e, p.l));
    return {{"version", kVersion},
            {"kind", "sse"},
            {"params", {{"n", p.n}, {"l", p.l}, {"k", p.k}}},
            {"families", coloring_families(code.colorer().spec())},
            {"phi1", symbols},
            {"syndrome", syndrome_json(phi2)}};
}

CodeParams code_params_of(const json& doc) {
    const auto kind = kind_of(doc);
    if (kind != "edit" && kind != "list") throw InvalidInput("document does not describe an edit or list code");
    const json& j = doc.at("params");
    CodeParams p;
    p.n = j.at("n").get<std::size_t>();
    p.q = j.at("q").get<unsigned>();
    p.k = j.at("k").get<unsigned>();
    p.l = j.value("l", 0u);
    p.repertoire = parse_repertoire(j.at("repertoire").get<std::string>());
    p.ell = j.value("ell", std::uint64_t{0});
    p.seed = j.value("seed", std::uint64_t{0});
    return p;
}

BurstParams burst_params_of(const json& doc) {
    expect_kind(doc, "burst");
    const json& j = doc.at("params");
    return {j.at("n").get<std::size_t>(), j.at("l").get<unsigned>()};
}

SseParams sse_params_of(const json& doc) {
    expect_kind(doc, "sse");
    const json& j = doc.at("params");
    return {j.at("n").get<std::size_t>(), j.at("l").get<unsigned>(), j.at("k").get<unsigned>()};
}

Syndrome read_edit(const json& doc, const EditCode& code) {
    expect_kind(doc, "edit");
    if (code.params().k > 0) expect_equal(doc.at("families"), coloring_families(code.colorer().spec()), "family");
    return syndrome_of(doc.at("syndrome"), code.range());
}

ListSyndrome read_list(const json& doc, const ListCode& code) {
    expect_kind(doc, "list");
    const json& fams = doc.at("families");
    if (!fams.is_array() || fams.size() != 2) throw InvalidInput("list document needs two family descriptors");
    const std::uint64_t seed = fams[1].at("seed").get<std::uint64_t>();
    const auto& spec = code.labeler(seed).spec();
    expect_equal(fams, json::array({describe(spec.round1()), describe(spec.family())}), "family");
    return {syndrome_of(doc.at("syndrome"), spec.range()), seed};
}

std::vector<std::uint8_t> read_burst_phi1(const json& doc, const BurstCode& code) {
    expect_kind(doc, "burst");
    const std::uint64_t packed = parse_hex(doc.at("phi1").get<std::string>());
    const unsigned l = code.params().l;
    if (l < 64 && (packed >> l) != 0) throw InvalidInput("phi1 has more than l bits");
    std::vector<std::uint8_t> bits(l);
    for (unsigned i = 0; i < l; ++i) bits[i] = static_cast<std::uint8_t>((packed >> i) & 1);
    return bits;
}

Syndrome read_burst_phi2(const json& doc, const BurstCode& code) {
    expect_kind(doc, "burst");
    expect_equal(doc.at("families"), coloring_families(code.colorer().spec()), "family");
    return syndrome_of(doc.at("syndrome"), code.colorer().spec().range());
}

std::vector<Elem> read_sse_phi1(const json& doc, const SseCode& code) {
    expect_kind(doc, "sse");
    std::vector<Elem> out;
    for (const auto& s : doc.at("phi1")) {
        const Elem e = parse_hex(s.get<std::string>());
        if (e >= code.rs().field().order()) throw InvalidInput("phi1 symbol outside the field");
        out.push_back(e);
    }
    if (out.size() != code.rs().parity_length()) throw InvalidInput("phi1 has the wrong number of symbols");
    return out;
}

Syndrome read_sse_phi2(const json& doc, const SseCode& code) {
    expect_kind(doc, "sse");
    expect_equal(doc.at("families"), coloring_families(code.colorer().spec()), "family");
    return syndrome_of(doc.at("syndrome"), code.colorer().spec().range());
}

}  // namespace syncodes::wire
