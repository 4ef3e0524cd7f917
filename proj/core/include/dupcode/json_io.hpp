#pragma once

#include <string>

#include <json.hpp>

#include "dupcode/channel.hpp"
#include "dupcode/confusion_graph.hpp"
#include "dupcode/dup_codes.hpp"
#include "dupcode/protect.hpp"
#include "dupcode/run_algebra.hpp"

namespace dupcode {

using json = nlohmann::json;

std::string kind_name(DuplicationKind kind);
DuplicationKind kind_from_name(const std::string& name);

json to_json(const DuplicationEvent& e);
DuplicationEvent event_from_json(const json& j);

json to_json(const Transcript& t);
Transcript transcript_from_json(const json& j);

json to_json(const RunHash& h);
RunHash run_hash_from_json(const json& j);

json zeta_digest_json(const SubstHashParams& params, const std::vector<std::uint64_t>& residues);
json eta_digest_json(const IndelHashParams& params, const std::vector<std::uint64_t>& payload);

json to_json(const CodeLayout& layout);
CodeLayout layout_from_json(const json& j);

// Self-describing codeword container so a decoder needs no out-of-band
// agreement.
json codeword_container(const CodeLayout& layout, const Word& word);
std::pair<CodeLayout, Word> codeword_from_container(const json& j);

json to_json(const GvReport& report);

}  // namespace dupcode
