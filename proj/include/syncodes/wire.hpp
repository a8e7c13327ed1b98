#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "syncodes/burst.hpp"
#include "syncodes/codes.hpp"

// Self-describing syndrome documents: a JSON header plus the value as a decimal string.
namespace syncodes::wire {

using nlohmann::json;

inline constexpr int kVersion = 1;

std::string to_string(Repertoire rep);
Repertoire parse_repertoire(const std::string& text);

json describe(const PolyFamily& fam);
json describe(const RvlFamily& fam);

// Hex of the low `bits` bits, most significant nibble first.
std::string to_hex(std::uint64_t value, unsigned bits);
std::uint64_t parse_hex(const std::string& text);

json edit_document(const EditCode& code, const Syndrome& s);
json list_document(const ListCode& code, const ListSyndrome& s);
json burst_document(const BurstCode& code, const std::vector<std::uint8_t>& phi1, const Syndrome& phi2);
json sse_document(const SseCode& code, const std::vector<Elem>& phi1, const Syndrome& phi2);

// Document kind: "edit", "list", "burst" or "sse".
std::string kind_of(const json& doc);

CodeParams code_params_of(const json& doc);
BurstParams burst_params_of(const json& doc);
SseParams sse_params_of(const json& doc);

// Each reader recomputes the families from the header and throws InvalidInput on any mismatch.
Syndrome read_edit(const json& doc, const EditCode& code);
ListSyndrome read_list(const json& doc, const ListCode& code);
std::vector<std::uint8_t> read_burst_phi1(const json& doc, const BurstCode& code);
Syndrome read_burst_phi2(const json& doc, const BurstCode& code);
std::vector<Elem> read_sse_phi1(const json& doc, const SseCode& code);
Syndrome read_sse_phi2(const json& doc, const SseCode& code);

}  // namespace syncodes::wire
