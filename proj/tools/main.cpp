// Command-line front end: channel injection, construction encode/decode
// pipelines, confusion-graph reports, verification suites, and seeded fuzz
// campaigns. Exit codes: 0 success, 1 verification failures, 2 bad input.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dupcode/json_io.hpp"
#include "dupcode/rcd_root.hpp"
#include "dupcode/root_codec.hpp"
#include "dupcode/suites.hpp"

namespace {

using namespace dupcode;

constexpr const char* kVersion = "0.1.0";

std::uint64_t env_seed_or(std::uint64_t fallback) {
    if (const char* env = std::getenv("DUPCODE_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw InvalidArgument("DUPCODE_SEED is not a valid integer");
        }
    }
    return fallback;
}

std::vector<std::string> words_from(const std::vector<std::string>& args) {
    if (!args.empty()) return args;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

struct ChannelOptions {
    int q = 4;
    std::string kind = "rc";
    std::size_t k = 1;
    int t = 1;
    std::vector<std::size_t> positions;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string format = "text";
    std::vector<std::string> words;
};

int run_channel(const ChannelOptions& opt) {
    const DuplicationKind kind = kind_from_name(opt.kind);
    // Palindromic duplications never complement, so odd alphabets are fine
    // there; the reverse-complement kind needs the paired involution.
    const ComplementMap map = kind == DuplicationKind::Palindromic
                                  ? ComplementMap::identity(opt.q)
                                  : ComplementMap::paired(opt.q);
    const std::uint64_t seed = opt.seed_given ? opt.seed : env_seed_or(0);
    std::uint64_t trial = 0;
    for (const std::string& text : words_from(opt.words)) {
        const Word w = Word::from_text(text, opt.q);
        Word out(opt.q);
        Transcript transcript;
        if (!opt.positions.empty()) {
            out = w;
            for (std::size_t pos : opt.positions) {
                DuplicationEvent e{kind, pos, opt.k};
                out = apply(out, e, map);
                transcript.push_back(e);
            }
        } else {
            auto sampled = sample(w, opt.k, opt.t, map, kind, seed, trial++);
            out = sampled.word;
            transcript = sampled.transcript;
        }
        if (opt.format == "json") {
            json j{{"word", out.text()}, {"transcript", to_json(transcript)}, {"seed", seed}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << out.text() << "\n" << to_json(transcript).dump() << "\n";
        }
    }
    return 0;
}

struct CodecOptions {
    std::string code = "c1";
    int q = 4;
    std::size_t n = 32;
    int t = 1;
    std::string protection = "inner-hash";
    std::string run_hash = "";
    std::string format = "text";
    std::vector<std::string> words;
};

CodeLayout layout_from_options(const CodecOptions& opt) {
    CodeParams params;
    params.q = opt.q;
    params.n = opt.n;
    params.t = opt.t;
    params.construction = opt.code == "c2" ? Construction::C2 : Construction::C1;
    params.protection =
        opt.protection == "repetition-only" ? Protection::RepetitionOnly : Protection::InnerHash;
    if (!opt.run_hash.empty()) {
        params.run_hash_mode = opt.run_hash == "full" ? RunHashMode::Full : RunHashMode::VtT1;
    } else {
        params.run_hash_mode = opt.t == 1 ? RunHashMode::VtT1 : RunHashMode::Full;
    }
    return make_layout(params);
}

int run_encode(const CodecOptions& opt) {
    if (opt.code == "root") {
        const RootCodecParams params =
            RootCodecParams::make(opt.q, opt.n, ComplementMap::paired(opt.q));
        for (const std::string& text : words_from(opt.words))
            std::cout << encode(Word::from_text(text, opt.q), params).text() << "\n";
        return 0;
    }
    if (opt.code == "rll") {
        const RllParams params = RllParams::make(opt.q, opt.n);
        for (const std::string& text : words_from(opt.words))
            std::cout << rll_encode(Word::from_text(text, opt.q), params).text() << "\n";
        return 0;
    }
    const CodeLayout layout = layout_from_options(opt);
    for (const std::string& text : words_from(opt.words)) {
        const Word cw = c_encode(Word::from_text(text, opt.q), layout);
        std::cout << codeword_container(layout, cw).dump() << "\n";
    }
    return 0;
}

int run_decode(const CodecOptions& opt) {
    if (opt.code == "root") {
        const RootCodecParams params =
            RootCodecParams::make(opt.q, opt.n, ComplementMap::paired(opt.q));
        for (const std::string& text : words_from(opt.words))
            std::cout << decode(Word::from_text(text, opt.q), params).text() << "\n";
        return 0;
    }
    if (opt.code == "rll") {
        const RllParams params = RllParams::make(opt.q, opt.n);
        for (const std::string& text : words_from(opt.words))
            std::cout << rll_decode(Word::from_text(text, opt.q), params).text() << "\n";
        return 0;
    }
    // Construction codewords travel as self-describing containers.
    for (const std::string& text : words_from(opt.words)) {
        const auto [layout, word] = codeword_from_container(json::parse(text));
        std::cout << c_decode(word, layout).text() << "\n";
    }
    return 0;
}

struct GvOptions {
    int q = 2;
    std::size_t n = 6;
    std::string vertices = "all";
    std::string kind = "rc";
    std::uint64_t budget = std::uint64_t{1} << 20;
};

int run_gv(const GvOptions& opt) {
    GraphSpec spec = GraphSpec::make(
        opt.q, opt.n, opt.vertices == "roots" ? VertexMode::RcdRoots : VertexMode::AllWords,
        ComplementMap::paired(opt.q));
    spec.kind = kind_from_name(opt.kind);
    spec.budget = opt.budget;
    const GreedyResult result = greedy_code(spec);
    std::cout << to_json(result.report).dump(2) << "\n";
    return 0;
}

int report_exit(const suites::RunReport& report, const std::string& format) {
    json j = report.to_json();
    j["version"] = kVersion;
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << " ("
                  << report.trials << " checks, " << report.failures << " failures, "
                  << report.elapsed_ms << " ms)\n";
        for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"duplication-channel coding toolkit"};
    app.require_subcommand(1);

    ChannelOptions channel_opt;
    auto* channel = app.add_subcommand("channel", "apply duplications to words");
    channel->add_option("--q", channel_opt.q, "alphabet size");
    channel->add_option("--kind,--mode", channel_opt.kind, "rc|pal")
        ->check(CLI::IsMember({"rc", "pal"}));
    channel->add_option("--k", channel_opt.k, "duplication length");
    channel->add_option("--t", channel_opt.t, "number of duplications");
    channel->add_option("--pos", channel_opt.positions,
                        "explicit 1-based positions (comma-separated or repeated)")
        ->delimiter(',')
        ->allow_extra_args(false);
    channel->add_option("--seed", channel_opt.seed, "seed")->each([&](const std::string&) {
        channel_opt.seed_given = true;
    });
    channel->add_option("--format", channel_opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    channel->add_option("words", channel_opt.words, "input words (stdin if omitted)");

    CodecOptions encode_opt;
    auto* enc = app.add_subcommand("encode", "encode messages");
    enc->add_option("--code", encode_opt.code, "root|rll|c1|c2")
        ->check(CLI::IsMember({"root", "rll", "c1", "c2"}));
    enc->add_option("--q", encode_opt.q, "alphabet size");
    enc->add_option("--n", encode_opt.n, "block length");
    enc->add_option("--t", encode_opt.t, "duplication budget");
    enc->add_option("--protection", encode_opt.protection, "inner-hash|repetition-only")
        ->check(CLI::IsMember({"inner-hash", "repetition-only"}));
    enc->add_option("--run-hash", encode_opt.run_hash, "vt-t1|full")
        ->check(CLI::IsMember({"vt-t1", "full"}));
    enc->add_option("words", encode_opt.words, "messages (stdin if omitted)");

    CodecOptions decode_opt;
    auto* dec = app.add_subcommand("decode", "decode words or codeword containers");
    dec->add_option("--code", decode_opt.code, "root|rll|c1|c2")
        ->check(CLI::IsMember({"root", "rll", "c1", "c2"}));
    dec->add_option("--q", decode_opt.q, "alphabet size");
    dec->add_option("--n", decode_opt.n, "block length");
    dec->add_option("words", decode_opt.words, "inputs (stdin if omitted)");

    GvOptions gv_opt;
    auto* gv = app.add_subcommand("gv", "confusion-graph greedy code report");
    gv->add_option("--q", gv_opt.q, "alphabet size");
    gv->add_option("--n", gv_opt.n, "word length");
    gv->add_option("--vertices", gv_opt.vertices, "all|roots")
        ->check(CLI::IsMember({"all", "roots"}));
    gv->add_option("--kind,--mode", gv_opt.kind, "rc|pal")->check(CLI::IsMember({"rc", "pal"}));
    gv->add_option("--budget", gv_opt.budget, "ball-entry budget");

    std::string verify_suite;
    suites::SuiteOptions verify_opt;
    std::string verify_format = "json";
    int vq = 0, vt = 0;
    std::size_t vn = 0, vm = 0, vk = 0;
    std::uint64_t vtrials = 0;
    bool vseed_given = false;
    std::string vkind = "rc";
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", verify_suite, "suite name or 'all'")->required();
    verify->add_option("--q", vq, "alphabet size");
    verify->add_option("--n", vn, "length parameter");
    verify->add_option("--m", vm, "window parameter");
    verify->add_option("--k", vk, "duplication length");
    verify->add_option("--t", vt, "duplication count");
    verify->add_option("--trials", vtrials, "randomized trial count");
    verify->add_option("--seed", verify_opt.seed, "seed")->each([&](const std::string&) {
        vseed_given = true;
    });
    verify->add_option("--budget", verify_opt.budget, "enumeration budget");
    verify->add_flag("--exhaustive", "run the exhaustive sweep (the default for every suite)");
    verify->add_option("--mode,--kind", vkind, "rc|pal")->check(CLI::IsMember({"rc", "pal"}));
    verify->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string fuzz_code = "c1";
    int fq = 4, ft = 1;
    std::size_t fn = 32;
    std::string fprot = "inner-hash";
    std::string frh = "";
    std::uint64_t ftrials = 100;
    std::uint64_t fseed = 0;
    bool fseed_given = false;
    std::string fuzz_format = "json";
    auto* fuzz = app.add_subcommand("fuzz", "seeded end-to-end construction campaign");
    fuzz->add_option("--code", fuzz_code, "c1|c2")->check(CLI::IsMember({"c1", "c2"}));
    fuzz->add_option("--q", fq, "alphabet size");
    fuzz->add_option("--n", fn, "payload block length");
    fuzz->add_option("--t", ft, "duplication count");
    fuzz->add_option("--protection", fprot, "inner-hash|repetition-only")
        ->check(CLI::IsMember({"inner-hash", "repetition-only"}));
    fuzz->add_option("--run-hash", frh, "vt-t1|full")->check(CLI::IsMember({"vt-t1", "full"}));
    fuzz->add_option("--trials", ftrials, "trial count");
    fuzz->add_option("--seed", fseed, "seed")->each([&](const std::string&) {
        fseed_given = true;
    });
    fuzz->add_option("--format", fuzz_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* suites_cmd = app.add_subcommand("suites", "list verification suites");

    try {
        app.parse(argc, argv);

        if (channel->parsed()) return run_channel(channel_opt);
        if (enc->parsed()) return run_encode(encode_opt);
        if (dec->parsed()) return run_decode(decode_opt);
        if (gv->parsed()) return run_gv(gv_opt);
        if (suites_cmd->parsed()) {
            for (const auto& name : suites::suite_names()) std::cout << name << "\n";
            return 0;
        }
        if (verify->parsed()) {
            if (vq) verify_opt.q = vq;
            if (vn) verify_opt.n = vn;
            if (vm) verify_opt.m = vm;
            if (vk) verify_opt.k = vk;
            if (vt) verify_opt.t = vt;
            if (vtrials) verify_opt.trials = vtrials;
            if (!vseed_given) verify_opt.seed = env_seed_or(0);
            verify_opt.kind = kind_from_name(vkind);
            int worst = 0;
            if (verify_suite == "all") {
                for (const auto& name : suites::suite_names())
                    worst = std::max(worst, report_exit(suites::run_suite(name, verify_opt),
                                                        verify_format));
                return worst;
            }
            if (!suites::is_suite(verify_suite)) {
                std::cerr << "unknown suite: " << verify_suite << "\n";
                return 2;
            }
            return report_exit(suites::run_suite(verify_suite, verify_opt), verify_format);
        }
        if (fuzz->parsed()) {
            CodeParams params;
            params.q = fq;
            params.n = fn;
            params.t = ft;
            params.construction = fuzz_code == "c2" ? Construction::C2 : Construction::C1;
            params.protection =
                fprot == "repetition-only" ? Protection::RepetitionOnly : Protection::InnerHash;
            params.run_hash_mode = frh.empty() ? (ft == 1 ? RunHashMode::VtT1 : RunHashMode::Full)
                                               : (frh == "full" ? RunHashMode::Full
                                                                : RunHashMode::VtT1);
            if (!fseed_given) fseed = env_seed_or(0);
            const auto report =
                suites::fuzz_construction(make_layout(params), ftrials, fseed, true);
            return report_exit(report, fuzz_format);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const dupcode::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
