#include "dupcode/json_io.hpp"

namespace dupcode {

std::string kind_name(DuplicationKind kind) {
    return kind == DuplicationKind::Palindromic ? "pal" : "rc";
}

DuplicationKind kind_from_name(const std::string& name) {
    if (name == "rc") return DuplicationKind::ReverseComplement;
    if (name == "pal") return DuplicationKind::Palindromic;
    throw InvalidArgument("unknown duplication kind: " + name);
}

json to_json(const DuplicationEvent& e) {
    return json{{"kind", kind_name(e.kind)}, {"position", e.position}, {"length", e.length}};
}

DuplicationEvent event_from_json(const json& j) {
    return DuplicationEvent{kind_from_name(j.at("kind").get<std::string>()),
                            j.at("position").get<std::size_t>(),
                            j.at("length").get<std::size_t>()};
}

json to_json(const Transcript& t) {
    json arr = json::array();
    for (const auto& e : t) arr.push_back(to_json(e));
    return arr;
}

Transcript transcript_from_json(const json& j) {
    Transcript t;
    for (const auto& e : j) t.push_back(event_from_json(e));
    return t;
}

namespace {

std::string run_hash_mode_name(RunHashMode mode) {
    return mode == RunHashMode::VtT1 ? "vt-t1" : "full";
}

RunHashMode run_hash_mode_from_name(const std::string& name) {
    if (name == "vt-t1") return RunHashMode::VtT1;
    if (name == "full") return RunHashMode::Full;
    throw InvalidArgument("unknown run hash mode: " + name);
}

std::string eta_mode_name(EtaMode mode) {
    return mode == EtaMode::TenengoltsT1 ? "tenengolts-t1" : "full";
}

}  // namespace

json to_json(const RunHash& h) {
    return json{{"mode", run_hash_mode_name(h.mode)},
                {"t", h.t},
                {"length", h.length},
                {"payload", h.payload}};
}

RunHash run_hash_from_json(const json& j) {
    return RunHash{run_hash_mode_from_name(j.at("mode").get<std::string>()),
                   j.at("t").get<int>(), j.at("length").get<std::size_t>(),
                   j.at("payload").get<std::uint64_t>()};
}

json zeta_digest_json(const SubstHashParams& params, const std::vector<std::uint64_t>& residues) {
    return json{{"kind", "zeta"},
                {"params",
                 {{"t", params.t},
                  {"alphabet", params.alphabet},
                  {"length", params.length},
                  {"prime", params.prime}}},
                {"residues", residues}};
}

json eta_digest_json(const IndelHashParams& params, const std::vector<std::uint64_t>& payload) {
    return json{{"kind", "eta"},
                {"params",
                 {{"t", params.t},
                  {"mode", eta_mode_name(params.mode)},
                  {"alphabet", params.alphabet},
                  {"length", params.length}}},
                {"payload", payload}};
}

json to_json(const CodeLayout& layout) {
    return json{{"q", layout.params.q},
                {"n", layout.params.n},
                {"t", layout.params.t},
                {"construction", layout.params.construction == Construction::C1 ? "c1" : "c2"},
                {"protection",
                 layout.params.protection == Protection::InnerHash ? "inner-hash" : "repetition-only"},
                {"run_hash_mode", run_hash_mode_name(layout.params.run_hash_mode)},
                {"m1", layout.m1},
                {"m2", layout.m2},
                {"m", layout.m},
                {"vec_alphabet", layout.vec_alphabet},
                {"zeta_prime", layout.zeta_prime},
                {"residue_width", layout.residue_width},
                {"n1", layout.n1},
                {"eta_mode", eta_mode_name(layout.eta_mode)},
                {"eta_delta_width", layout.eta_delta_width},
                {"eta_len", layout.eta_len},
                {"n2", layout.n2},
                {"total_length", layout.total_length()}};
}

CodeLayout layout_from_json(const json& j) {
    CodeParams params;
    params.q = j.at("q").get<int>();
    params.n = j.at("n").get<std::size_t>();
    params.t = j.at("t").get<int>();
    params.construction =
        j.at("construction").get<std::string>() == "c1" ? Construction::C1 : Construction::C2;
    params.protection = j.at("protection").get<std::string>() == "inner-hash"
                            ? Protection::InnerHash
                            : Protection::RepetitionOnly;
    params.run_hash_mode = run_hash_mode_from_name(j.at("run_hash_mode").get<std::string>());
    CodeLayout layout = make_layout(params);
    // The stored geometry must agree with the derived one.
    if (to_json(layout) != j) throw InvalidArgument("layout fields are inconsistent");
    return layout;
}

json codeword_container(const CodeLayout& layout, const Word& word) {
    return json{{"mode", layout.params.construction == Construction::C1 ? "c1" : "c2"},
                {"layout", to_json(layout)},
                {"word", word.text()}};
}

std::pair<CodeLayout, Word> codeword_from_container(const json& j) {
    CodeLayout layout = layout_from_json(j.at("layout"));
    Word word = Word::from_text(j.at("word").get<std::string>(), layout.params.q);
    return {layout, word};
}

json to_json(const GvReport& report) {
    const char* mode = report.mode == VertexMode::AllWords
                           ? "all"
                           : (report.mode == VertexMode::RcdRoots ? "roots" : "custom");
    return json{{"n", report.n},
                {"q", report.q},
                {"mode", mode},
                {"vertex_count", report.vertex_count},
                {"per_k_max_neighborhood", report.per_k_max_neighborhood},
                {"max_degree", report.max_degree},
                {"alon_bound", report.alon_bound},
                {"code_size", report.code_size},
                {"redundancy", report.redundancy}};
}

}  // namespace dupcode
