#include "dupcode/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "dupcode/confusion_graph.hpp"
#include "dupcode/numeric.hpp"
#include "dupcode/rcd_root.hpp"
#include "dupcode/root_codec.hpp"

namespace dupcode::suites {

namespace {

class Check {
public:
    explicit Check(RunReport& report) : report_(report) {}

    void expect(bool ok, const std::string& what) {
        ++report_.trials;
        if (!ok) fail_note(what);
    }

    // Cheap per-case accounting for hot loops: no string is built on the
    // passing path.
    void pass() { ++report_.trials; }
    void fail(const std::string& what) {
        ++report_.trials;
        fail_note(what);
    }

private:
    void fail_note(const std::string& what) {
        ++report_.failures;
        if (report_.notes.size() < 8) report_.notes.push_back(what);
    }

    RunReport& report_;
};

// Visits every word of the given length in lexicographic order.
template <typename Fn>
void for_each_word(int q, std::size_t n, Fn&& fn) {
    std::vector<Symbol> buf(n, 0);
    while (true) {
        fn(Word(q, buf));
        std::size_t pos = n;
        while (pos > 0 && buf[pos - 1] == q - 1) buf[--pos] = 0;
        if (pos == 0) break;
        ++buf[pos - 1];
    }
}

Word random_word(int q, std::size_t n, CounterRng& rng) {
    Word w(q);
    for (std::size_t i = 0; i < n; ++i) w.append(static_cast<Symbol>(rng.below(q)));
    return w;
}

// --- counterexample -------------------------------------------------------
// Two distinct words avoiding length-4 reverse-complement repeats collide
// after a single length-4 duplication.
RunReport s_counterexample(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "counterexample";
    r.parameters = {{"q", 2}};
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(2);
    const Word a = Word::from_text("000111000", 2);
    const Word b = Word::from_text("000111110", 2);
    const Word ya = apply(a, {DuplicationKind::ReverseComplement, 6, 4}, map);
    const Word yb = apply(b, {DuplicationKind::ReverseComplement, 3, 4}, map);
    const Word expected = Word::from_text("0001110001110", 2);
    chk.expect(ya == expected, "first word does not reach the collision target");
    chk.expect(yb == expected, "second word does not reach the collision target");
    chk.expect(ya == yb, "the two images differ");
    const RootParams rp{2, 9, 4, map};
    chk.expect(is_root(a, rp), "first word should satisfy the m=4 root constraint");
    chk.expect(is_root(b, rp), "second word should satisfy the m=4 root constraint");
    r.data["image"] = ya.text();
    (void)opts;
    return r;
}

// --- example1 --------------------------------------------------------------
// The collision pair under one length-two duplication and under two
// length-one duplications.
RunReport s_example1(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "example1";
    r.parameters = {{"q", 4}};
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(4);
    const Word a = Word::from_text("232301", 4);
    const Word b = Word::from_text("230101", 4);
    const Word target = Word::from_text("23230101", 4);
    const auto ball_a2 = ball(a, 2, 1, map);
    const auto ball_b2 = ball(b, 2, 1, map);
    chk.expect(ball_contains(ball_a2, target), "length-two ball of 232301 misses the target");
    chk.expect(ball_contains(ball_b2, target), "length-two ball of 230101 misses the target");
    const auto ball_a1 = ball(a, 1, 2, map);
    const auto ball_b1 = ball(b, 1, 2, map);
    chk.expect(ball_contains(ball_a1, target), "two length-one duplications miss from 232301");
    chk.expect(ball_contains(ball_b1, target), "two length-one duplications miss from 230101");
    r.data["target"] = target.text();
    (void)opts;
    return r;
}

// --- lemma7 ----------------------------------------------------------------
// Single length-one duplication ball and single insertion ball formulas
// against brute force.
RunReport s_lemma7(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "lemma7";
    const int q = opts.q.value_or(4);
    const std::size_t n_max = opts.n.value_or(6);
    r.parameters = {{"q", q}, {"n_max", n_max}};
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(q);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for_each_word(q, n, [&](const Word& w) {
            // Formula: one complemented copy of each symbol, inserted
            // right after it.
            std::set<Word> formula;
            for (std::size_t i = 1; i <= n; ++i) {
                Word y = w.subword(1, i);
                y.append(map(w[i - 1]));
                y.append(w.subword(i + 1, n));
                formula.insert(std::move(y));
            }
            // Brute force: all single insertions, filtered to those that
            // are duplication images.
            std::set<Word> brute;
            std::set<Word> insertions;
            for (std::size_t pos = 0; pos <= n; ++pos) {
                for (Symbol s = 0; s < q; ++s) {
                    Word y = w.subword(1, pos);
                    y.append(s);
                    y.append(w.subword(pos + 1, n));
                    insertions.insert(y);
                    bool dup_image = false;
                    for (std::size_t j = 1; j <= n && !dup_image; ++j) {
                        if (y[j] != map(y[j - 1])) continue;
                        Word z = y.subword(1, j);
                        z.append(y.subword(j + 2, n + 1));
                        dup_image = (z == w);
                    }
                    if (dup_image) brute.insert(std::move(y));
                }
            }
            const auto lib = ball(w, 1, 1, map);
            const std::set<Word> lib_set(lib.begin(), lib.end());
            chk.expect(lib_set == formula, "library ball differs from the formula at " + w.text());
            chk.expect(lib_set == brute, "library ball differs from brute force at " + w.text());

            // Insertion-ball law: a leading insertion for each symbol value
            // plus the non-repeating interior insertions.
            std::set<Word> ins_formula;
            for (Symbol s = 0; s < q; ++s) {
                Word y(q);
                y.append(s);
                y.append(w);
                ins_formula.insert(std::move(y));
            }
            for (std::size_t i = 1; i <= n; ++i) {
                for (Symbol s = 0; s < q; ++s) {
                    if (s == w[i - 1]) continue;
                    Word y = w.subword(1, i);
                    y.append(s);
                    y.append(w.subword(i + 1, n));
                    ins_formula.insert(std::move(y));
                }
            }
            chk.expect(insertions == ins_formula,
                       "insertion ball differs from the formula at " + w.text());
        });
    }
    return r;
}

// --- lemma5 ----------------------------------------------------------------
// Exhaustive root counts against the (q-1) q^(n-1) bound.
RunReport s_lemma5(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "lemma5";
    Check chk(r);
    struct Case {
        int q;
        std::size_t n;
        std::size_t m;
    };
    std::vector<Case> cases;
    if (opts.q || opts.n) {
        const int q = opts.q.value_or(2);
        const std::size_t n = opts.n.value_or(8);
        const std::size_t m =
            opts.m.value_or(ceil_log(static_cast<std::uint64_t>(q), n) + 1);
        cases.push_back({q, n, m});
    } else {
        cases.push_back({2, 8, 4});
        cases.push_back({2, 16, 5});
    }
    json out = json::array();
    for (const auto& c : cases) {
        const RootParams params{c.q, c.n, c.m, ComplementMap::paired(c.q)};
        const std::uint64_t count = count_roots(params, opts.budget);
        const std::uint64_t bound =
            static_cast<std::uint64_t>(c.q - 1) * pow_u64(static_cast<std::uint64_t>(c.q), c.n - 1);
        const bool bound_applies = c.m >= ceil_log(static_cast<std::uint64_t>(c.q), c.n) + 1;
        if (bound_applies)
            chk.expect(count >= bound, "root count below the bound at n=" + std::to_string(c.n));
        out.push_back({{"q", c.q},
                       {"n", c.n},
                       {"m", c.m},
                       {"count", count},
                       {"bound", bound},
                       {"bound_applies", bound_applies}});
    }
    r.parameters = {{"cases", cases.size()}};
    r.data["counts"] = out;
    return r;
}

// --- theorem1 --------------------------------------------------------------
// Every root of length 8 recovers from every disjoint duplication pattern.
RunReport s_theorem1(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "theorem1";
    const int q = opts.q.value_or(2);
    const std::size_t n = opts.n.value_or(8);
    const std::size_t m = opts.m.value_or(2);
    r.parameters = {{"q", q}, {"n", n}, {"m", m}, {"kind", kind_name(opts.kind)}};
    Check chk(r);
    const ComplementMap map =
        opts.kind == DuplicationKind::Palindromic ? ComplementMap::identity(q)
                                                  : ComplementMap::paired(q);
    const RootParams params{q, n, m, map};
    const std::vector<Word> roots = enumerate_roots(params, opts.budget);
    r.data["root_count"] = roots.size();

    // All disjoint position tuples for the given k and t come from a
    // simple recursive sweep.
    auto patterns_for = [&](std::size_t k, int t) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t next_min, int left) -> void {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = next_min; i + k - 1 <= n; ++i) {
                cur.push_back(i);
                self(self, i + k, left - 1);
                cur.pop_back();
            }
        };
        rec(rec, 1, t);
        return out;
    };

    std::uint64_t decodes = 0;
    std::vector<std::size_t> ks{3, 4};
    if (opts.k) ks = {*opts.k};
    const int t_max = opts.t.value_or(2);
    for (std::size_t k : ks) {
        if (k + 3 < 3 * m) continue;
        for (int t = 0; t <= t_max; ++t) {
            for (const auto& positions : patterns_for(k, t)) {
                for (const Word& x : roots) {
                    const Word y = apply_disjoint(x, DisjointPattern{k, positions}, map, opts.kind);
                    ++decodes;
                    if (decode_disjoint(y, params, k, t) == x) {
                        chk.pass();
                    } else {
                        chk.fail("disjoint decode failed for " + x.text());
                    }
                }
            }
        }
    }
    chk.expect(decodes > 0, "no decode cases were exercised");
    r.data["decodes"] = decodes;
    return r;
}

// --- theorem2 --------------------------------------------------------------
// Root codec: exhaustive roundtrip, root membership, one-symbol
// redundancy.
RunReport s_theorem2(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "theorem2";
    Check chk(r);
    struct Case {
        int q;
        std::size_t n_max;
    };
    std::vector<Case> cases;
    if (opts.q || opts.n) {
        cases.push_back({opts.q.value_or(2), opts.n.value_or(12)});
    } else {
        cases.push_back({2, 12});
        cases.push_back({4, 8});
    }
    std::uint64_t roundtrips = 0;
    for (const auto& c : cases) {
        for (std::size_t n = 2; n <= c.n_max; ++n) {
            const RootCodecParams params = RootCodecParams::make(c.q, n, ComplementMap::paired(c.q));
            const RootParams rp = params.root_params();
            for_each_word(c.q, n - 1, [&](const Word& x) {
                const Word y = encode(x, params);
                ++roundtrips;
                if (y.size() == n && is_root(y, rp) && decode(y, params) == x) {
                    chk.pass();
                } else {
                    chk.fail("roundtrip failure at q=" + std::to_string(c.q) +
                             " n=" + std::to_string(n) + " x=" + x.text());
                }
            });
        }
    }
    r.parameters = {{"cases", cases.size()}};
    r.data["roundtrips"] = roundtrips;
    return r;
}

// --- lemma6 ----------------------------------------------------------------
// Per-k neighborhood sizes against n(n-k+1)-1, plus the root-mode empty
// levels above the decodable threshold.
RunReport s_lemma6(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "lemma6";
    const int q = opts.q.value_or(2);
    const std::size_t n = opts.n.value_or(8);
    r.parameters = {{"q", q}, {"n", n}};
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(q);

    GraphSpec all = GraphSpec::make(q, n, VertexMode::AllWords, map);
    all.budget = opts.budget;
    std::vector<std::size_t> per_k(n, 0);
    for (const Word& x : vertex_set(all)) {
        bool ok = true;
        for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t size = neighborhood(x, k, all).size();
            per_k[k - 1] = std::max(per_k[k - 1], size);
            if (size > n * (n - k + 1) - 1) ok = false;
        }
        if (ok) {
            chk.pass();
        } else {
            chk.fail("a neighborhood of " + x.text() + " exceeded n(n-k+1)-1");
        }
    }
    r.data["per_k_max_neighborhood"] = per_k;

    GraphSpec roots = GraphSpec::make(q, n, VertexMode::RcdRoots, map);
    roots.budget = opts.budget;
    const std::size_t threshold = 3 * ceil_log(static_cast<std::uint64_t>(q), n);
    std::vector<std::size_t> root_per_k(n, 0);
    for (const Word& x : vertex_set(roots)) {
        bool ok = true;
        for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t size = neighborhood(x, k, roots).size();
            root_per_k[k - 1] = std::max(root_per_k[k - 1], size);
            if (k >= threshold && size != 0) ok = false;
        }
        if (ok) {
            chk.pass();
        } else {
            chk.fail("a root-mode neighborhood of " + x.text() +
                     " above the threshold is nonempty");
        }
    }
    r.data["root_per_k_max_neighborhood"] = root_per_k;
    r.data["empty_threshold"] = threshold;
    r.data["empty_range_vacuous"] = threshold > n;
    return r;
}

// --- theorem8 --------------------------------------------------------------
// Greedy code on roots: size against the quotient bound and exhaustive
// pairwise ball disjointness for every duplication length.
RunReport s_theorem8(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "theorem8";
    const int q = opts.q.value_or(2);
    const std::size_t n = opts.n.value_or(10);
    r.parameters = {{"q", q}, {"n", n}};
    Check chk(r);
    GraphSpec spec = GraphSpec::make(q, n, VertexMode::RcdRoots, ComplementMap::paired(q));
    spec.budget = opts.budget;
    const GreedyResult res = greedy_code(spec);
    r.data["report"] = dupcode::to_json(res.report);

    const std::size_t logq = ceil_log(static_cast<std::uint64_t>(q), n);
    const double quotient =
        static_cast<double>(q - 1) * std::pow(static_cast<double>(q), static_cast<double>(n - 1)) /
        (3.0 * static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(logq));
    r.data["gv_quotient"] = quotient;
    chk.expect(static_cast<double>(res.report.code_size) >= quotient,
               "greedy code smaller than the quotient bound");
    chk.expect(res.report.code_size >=
                   res.report.vertex_count / (res.report.max_degree + 1),
               "greedy code below the max-degree guarantee");

    // Shared-descendant scan: no two codewords may reach a common word by
    // one duplication of any length.
    bool disjoint = true;
    for (std::size_t k = 1; k <= n && disjoint; ++k) {
        std::map<Word, std::size_t> owner;
        for (std::size_t idx = 0; idx < res.code.size() && disjoint; ++idx) {
            for (const Word& y : ball(res.code[idx], k, 1, spec.map, spec.kind, spec.budget)) {
                auto [it, inserted] = owner.emplace(y, idx);
                if (!inserted && it->second != idx) disjoint = false;
            }
        }
    }
    chk.expect(disjoint, "two codewords share a single-duplication descendant");
    return r;
}

// --- lemma8 ----------------------------------------------------------------
// Signature invariance and the per-run error split under length-one
// duplications.
RunReport s_lemma8(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "lemma8";
    const int q = opts.q.value_or(4);
    const std::size_t n_max = opts.n.value_or(6);
    const std::uint64_t random_trials = opts.trials.value_or(10000);
    r.parameters = {{"q", q}, {"n_max", n_max}, {"random_trials", random_trials},
                    {"random_n", 32}};
    r.seed = opts.seed;
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(q);

    auto check_pair = [&](const Word& w, const Word& y, int t) {
        const RunDecomposition dw = decompose(w, map);
        const RunDecomposition dy = decompose(y, map);
        if (!(dw.signature == dy.signature) || dw.run_count() != dy.run_count()) return false;
        int total = 0;
        for (std::size_t i = 0; i < dw.run_count(); ++i) {
            if (dy.lengths[i] < dw.lengths[i]) return false;
            const int ti = static_cast<int>(dy.lengths[i] - dw.lengths[i]);
            total += ti;
            if (!ball_contains(ball(dw.runs[i], 1, ti, map), dy.runs[i])) return false;
        }
        return total == t;
    };

    const int t_max = opts.t.value_or(2);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for_each_word(q, n, [&](const Word& w) {
            for (int t = 1; t <= t_max; ++t) {
                for (const Word& y : ball(w, 1, t, map)) {
                    if (check_pair(w, y, t)) {
                        chk.pass();
                    } else {
                        chk.fail("invariance failed for " + w.text() + " -> " + y.text());
                    }
                }
            }
        });
    }

    for (std::uint64_t trial = 0; trial < random_trials; ++trial) {
        CounterRng rng(opts.seed, trial);
        const Word w = random_word(q, 32, rng);
        const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(t_max)));
        const auto sampled = sample(w, 1, t, map, DuplicationKind::ReverseComplement,
                                    opts.seed + 1, trial);
        if (check_pair(w, sampled.word, t)) {
            chk.pass();
        } else {
            chk.fail("invariance failed in randomized trial " + std::to_string(trial));
        }
    }
    return r;
}

// --- lemma9 ----------------------------------------------------------------
RunReport s_lemma9(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "lemma9";
    const int q = opts.q.value_or(4);
    const std::size_t n = opts.n.value_or(6);
    const std::size_t m = opts.m.value_or(4);
    r.parameters = {{"q", q}, {"n", n}, {"m", m}};
    Check chk(r);
    const std::uint64_t count = count_rll(n, m, q, opts.budget);
    const std::uint64_t qn = pow_u64(static_cast<std::uint64_t>(q), n);
    const std::uint64_t bound = qn - 2 * pow_u64(static_cast<std::uint64_t>(q), n - 1);
    const bool bound_applies = m >= ceil_log(static_cast<std::uint64_t>(q) / 2, n) + 1;
    if (bound_applies) chk.expect(count >= bound, "run-length-limited count below the bound");
    r.data["count"] = count;
    r.data["bound"] = bound;
    r.data["bound_applies"] = bound_applies;
    return r;
}

// --- example2 --------------------------------------------------------------
RunReport s_example2(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "example2";
    r.parameters = {{"q", 4}};
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(4);
    const Word x = Word::from_text("01123221001", 4);
    const RunDecomposition d = decompose(x, map);
    chk.expect(d.run_count() == 3, "expected exactly three runs");
    if (d.run_count() == 3) {
        chk.expect(d.runs[0] == Word::from_text("011", 4), "first run mismatch");
        chk.expect(d.runs[1] == Word::from_text("2322", 4), "second run mismatch");
        chk.expect(d.runs[2] == Word::from_text("1001", 4), "third run mismatch");
        chk.expect(d.signature == Word::from_text("021", 4), "signature mismatch");
        chk.expect(phi(d.runs[0], map) == 4, "phi of the first run is not 4");
        chk.expect(phi(d.runs[1], map) == 11, "phi of the second run is not 11");
        chk.expect(phi(d.runs[2], map) == 9, "phi of the third run is not 9");
        chk.expect(phi_inv(11, 2, map) == d.runs[1], "phi inverse mismatch");
    }
    const std::vector<std::uint64_t> expected{0, 0, 0, 0, 0, 0, 0, 0, 4, 11, 9};
    chk.expect(associated_vector(x, 11, map) == expected, "padded vector mismatch");
    (void)opts;
    return r;
}

// --- roundtrip-rll ---------------------------------------------------------
RunReport s_roundtrip_rll(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "roundtrip-rll";
    const int q = opts.q.value_or(4);
    const std::size_t n_max = opts.n.value_or(10);
    r.parameters = {{"q", q}, {"n_max", n_max}};
    Check chk(r);

    std::uint64_t roundtrips = 0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        const RllParams params = RllParams::make(q, n);
        for_each_word(q, n - 1, [&](const Word& x) {
            const Word y = rll_encode(x, params);
            ++roundtrips;
            if (y.size() == n && is_rll(y, params.m, params.map) && rll_decode(y, params) == x) {
                chk.pass();
            } else {
                chk.fail("roundtrip failure at n=" + std::to_string(n) + " x=" + x.text());
            }
        });
    }
    r.data["roundtrips"] = roundtrips;

    // The worked length-20 vector, hand-checked symbol by symbol.
    const RllParams p20 = RllParams::make(4, 20);
    const Word x20 = Word::from_text("0122222222233333333", 4);
    const Word y20 = rll_encode(x20, p20);
    chk.expect(y20 == Word::from_text("01213333003000000030", 4),
               "length-20 golden vector mismatch: got " + y20.text());
    chk.expect(rll_decode(y20, p20) == x20, "length-20 golden vector does not decode");
    r.data["golden_output"] = y20.text();
    return r;
}

// --- protect ----------------------------------------------------------------
RunReport s_protect(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "protect";
    r.parameters = {{"zeta", "N=8 Q=4 t=1"}, {"eta", "Q=4 N<=8"}, {"rep", "t<=2 len<=3 Q=4"}};
    Check chk(r);

    // Substitution checksum: exhaustive single-substitution recovery.
    {
        const SubstHashParams zp = SubstHashParams::make(1, 4, 8);
        for_each_word(4, 8, [&](const Word& msgw) {
            std::vector<std::uint64_t> msg;
            for (Symbol s : msgw.symbols()) msg.push_back(static_cast<std::uint64_t>(s));
            const auto digest = zeta_hash(msg, zp);
            for (std::size_t pos = 0; pos < 8; ++pos) {
                for (std::uint64_t sym = 0; sym < 4; ++sym) {
                    if (sym == msg[pos]) continue;
                    std::vector<std::uint64_t> bad = msg;
                    bad[pos] = sym;
                    if (zeta_decode(bad, digest, zp) == msg) {
                        chk.pass();
                    } else {
                        chk.fail("substitution decode failed for " + msgw.text());
                    }
                }
            }
        });

        // Kernel property: no sparse difference vector is invisible.
        const auto syndromes_of = [&](const std::vector<std::int64_t>& e) {
            std::vector<std::uint64_t> s(2, 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                const std::uint64_t mag =
                    e[i] >= 0 ? static_cast<std::uint64_t>(e[i]) % zp.prime
                              : zp.prime - (static_cast<std::uint64_t>(-e[i]) % zp.prime);
                const std::uint64_t node = i + 1;
                std::uint64_t term = mag;
                for (auto& sj : s) {
                    term = static_cast<std::uint64_t>(
                        (static_cast<unsigned __int128>(term) * node) % zp.prime);
                    sj = (sj + term) % zp.prime;
                }
            }
            return s;
        };
        std::vector<std::int64_t> e(8, 0);
        auto kernel_case = [&](std::size_t i, std::int64_t vi, std::size_t j, std::int64_t vj) {
            e.assign(8, 0);
            e[i] = vi;
            if (i != j) e[j] = vj;
            const auto s = syndromes_of(e);
            if (s[0] != 0 || s[1] != 0) {
                chk.pass();
            } else {
                chk.fail("a sparse difference vector has zero syndromes");
            }
        };
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::int64_t vi = -3; vi <= 3; ++vi) {
                if (vi == 0) continue;
                kernel_case(i, vi, i, 0);
                for (std::size_t j = i + 1; j < 8; ++j) {
                    for (std::int64_t vj = -3; vj <= 3; ++vj) {
                        if (vj != 0) kernel_case(i, vi, j, vj);
                    }
                }
            }
        }
    }

    // Nonbinary single-indel checksum: exhaustive insertions and deletions.
    for (std::size_t len = 1; len <= 8; ++len) {
        const IndelHashParams ep = IndelHashParams::tenengolts(4, len);
        for_each_word(4, len, [&](const Word& msgw) {
            std::vector<std::uint64_t> msg;
            for (Symbol s : msgw.symbols()) msg.push_back(static_cast<std::uint64_t>(s));
            const auto digest = eta_hash(msg, ep);
            bool ok = true;
            for (std::size_t pos = 0; pos <= len && ok; ++pos) {
                for (std::uint64_t sym = 0; sym < 4; ++sym) {
                    std::vector<std::uint64_t> ins = msg;
                    ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(pos), sym);
                    if (eta_decode(ins, digest, ep) != msg) ok = false;
                }
            }
            for (std::size_t pos = 0; pos < len && ok; ++pos) {
                std::vector<std::uint64_t> del = msg;
                del.erase(del.begin() + static_cast<std::ptrdiff_t>(pos));
                if (eta_decode(del, digest, ep) != msg) ok = false;
            }
            if (ok) {
                chk.pass();
            } else {
                chk.fail("a single indel failed to decode for " + msgw.text());
            }
        });
    }

    // Repetition code: exhaustive insertion patterns decode uniquely.
    for (int t = 1; t <= 2; ++t) {
        for (std::size_t len = 1; len <= 3; ++len) {
            for_each_word(4, len, [&](const Word& msg) {
                const Word code = rep_encode(msg, t);
                // Every word reachable by up to t insertions.
                std::set<Word> reachable{code};
                for (int step = 0; step < t; ++step) {
                    std::set<Word> next;
                    for (const Word& w : reachable) {
                        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                            for (Symbol s = 0; s < 4; ++s) {
                                Word y = w.subword(1, pos);
                                y.append(s);
                                y.append(w.subword(pos + 1, w.size()));
                                next.insert(std::move(y));
                            }
                        }
                        next.insert(w);
                    }
                    reachable.swap(next);
                }
                bool ok = true;
                for (const Word& y : reachable) {
                    if (!(rep_decode(y, t, len) == msg)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    chk.pass();
                } else {
                    chk.fail("an insertion pattern failed the repetition decode for " + msg.text());
                }
            });
        }
    }
    (void)opts;
    return r;
}

// --- construction1 / construction2 ------------------------------------------

CodeLayout layout_for(int q, std::size_t n, int t, Construction c, Protection prot,
                      RunHashMode rhm) {
    CodeParams params;
    params.q = q;
    params.n = n;
    params.t = t;
    params.construction = c;
    params.protection = prot;
    params.run_hash_mode = rhm;
    return make_layout(params);
}

RunReport s_construction1(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "construction1";
    const int q = opts.q.value_or(4);
    const std::uint64_t trials = opts.trials.value_or(1000);
    r.parameters = {{"q", q}, {"trials", trials}};
    r.seed = opts.seed;
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(q);

    // Exhaustive: every payload and every duplication position at n=8.
    {
        const CodeLayout layout =
            layout_for(q, 8, 1, Construction::C1, Protection::InnerHash, RunHashMode::VtT1);
        std::uint64_t decodes = 0;
        for_each_word(q, 7, [&](const Word& x) {
            const Word cw = c_encode(x, layout);
            for (std::size_t pos = 1; pos <= cw.size(); ++pos) {
                const Word y = apply(cw, {DuplicationKind::ReverseComplement, pos, 1}, map);
                ++decodes;
                if (c_decode(y, layout) == x) {
                    chk.pass();
                } else {
                    chk.fail("exhaustive sweep failed for payload " + x.text() + " at position " +
                             std::to_string(pos));
                }
            }
        });
        r.data["exhaustive_decodes"] = decodes;
    }

    // Randomized campaigns with per-trial window checks.
    json campaigns = json::array();
    json redundancy = json::array();
    for (std::size_t n : {std::size_t{32}, std::size_t{64}}) {
        for (int t : {1, 2}) {
            const Protection prot = (t == 1) ? Protection::InnerHash : Protection::RepetitionOnly;
            const CodeLayout layout = layout_for(q, n, t, Construction::C1, prot,
                                                 t == 1 ? RunHashMode::VtT1 : RunHashMode::Full);
            const RunReport fuzz = fuzz_construction(layout, trials, opts.seed, true);
            r.trials += fuzz.trials;
            r.failures += fuzz.failures;
            for (const auto& note : fuzz.notes) {
                if (r.notes.size() < 8) r.notes.push_back(note);
            }
            campaigns.push_back({{"n", n},
                                 {"t", t},
                                 {"protection", t == 1 ? "inner-hash" : "repetition-only"},
                                 {"trials", fuzz.trials},
                                 {"failures", fuzz.failures}});
            const std::size_t red = layout.total_length() - layout.message_length();
            redundancy.push_back({{"n", n},
                                  {"t", t},
                                  {"redundancy", red},
                                  {"leading_term", 2.0 * t * std::log(static_cast<double>(n)) /
                                                       std::log(static_cast<double>(q))}});
            if (t == 1) {
                // Order check with a fitted constant, pinned here.
                const double logq_n =
                    std::log(static_cast<double>(n)) / std::log(static_cast<double>(q));
                const double loglog = std::log(logq_n) / std::log(static_cast<double>(q));
                chk.expect(static_cast<double>(red) <= 2.0 * t * logq_n + 20.0 * loglog,
                           "measured redundancy exceeds the fitted order bound");
            }
        }
    }
    r.data["campaigns"] = campaigns;
    r.data["redundancy"] = redundancy;
    return r;
}

RunReport s_construction2(const SuiteOptions& opts) {
    RunReport r;
    r.suite = "construction2";
    const int q = opts.q.value_or(4);
    const std::uint64_t trials = opts.trials.value_or(1000);
    r.parameters = {{"q", q}, {"trials", trials}};
    r.seed = opts.seed;
    Check chk(r);
    const ComplementMap map = ComplementMap::paired(q);

    // Per-run recovery, exhaustive over runs of length up to 8.
    for (std::size_t len = 1; len <= 8; ++len) {
        for (Symbol first = 0; first < q; ++first) {
            const std::uint64_t combos = std::uint64_t{1} << (len - 1);
            for (std::uint64_t bits = 0; bits < combos; ++bits) {
                Word run(q);
                run.append(first);
                for (std::size_t i = 1; i < len; ++i)
                    run.append(((bits >> (i - 1)) & 1) ? first : map(first));
                const RunHash h = run_hash(run, 1, RunHashMode::VtT1, map);
                bool ok = run_recover(run, h, map) == run;
                for (std::size_t pos = 1; pos <= len && ok; ++pos) {
                    const Word z = apply(run, {DuplicationKind::ReverseComplement, pos, 1}, map);
                    if (!(run_recover(z, h, map) == run)) ok = false;
                }
                if (ok) {
                    chk.pass();
                } else {
                    chk.fail("per-run recovery failed for " + run.text());
                }
            }
        }
    }

    json campaigns = json::array();
    for (std::size_t n : {std::size_t{32}, std::size_t{64}}) {
        for (int t : {1, 2}) {
            const Protection prot = (t == 1) ? Protection::InnerHash : Protection::RepetitionOnly;
            const RunHashMode rhm = (t == 1) ? RunHashMode::VtT1 : RunHashMode::Full;
            const CodeLayout layout = layout_for(q, n, t, Construction::C2, prot, rhm);
            const RunReport fuzz = fuzz_construction(layout, trials, opts.seed, true);
            r.trials += fuzz.trials;
            r.failures += fuzz.failures;
            for (const auto& note : fuzz.notes) {
                if (r.notes.size() < 8) r.notes.push_back(note);
            }
            campaigns.push_back({{"n", n},
                                 {"t", t},
                                 {"run_hash_mode", t == 1 ? "vt-t1" : "full"},
                                 {"trials", fuzz.trials},
                                 {"failures", fuzz.failures}});
        }
    }
    r.data["campaigns"] = campaigns;
    return r;
}

using SuiteFn = RunReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg{
        {"counterexample", s_counterexample},
        {"example1", s_example1},
        {"lemma7", s_lemma7},
        {"lemma5", s_lemma5},
        {"theorem1", s_theorem1},
        {"theorem2", s_theorem2},
        {"lemma6", s_lemma6},
        {"theorem8", s_theorem8},
        {"lemma8", s_lemma8},
        {"lemma9", s_lemma9},
        {"example2", s_example2},
        {"roundtrip-rll", s_roundtrip_rll},
        {"protect", s_protect},
        {"construction1", s_construction1},
        {"construction2", s_construction2},
    };
    return reg;
}

}  // namespace

json RunReport::to_json() const {
    return json{{"command", command}, {"suite", suite},     {"parameters", parameters},
                {"trials", trials},   {"failures", failures}, {"data", data},
                {"seed", seed},       {"elapsed_ms", elapsed_ms}, {"notes", notes}};
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) return true;
    }
    return false;
}

RunReport run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        const auto start = std::chrono::steady_clock::now();
        RunReport report = fn(opts);
        report.seed = opts.seed;
        const auto stop = std::chrono::steady_clock::now();
        report.elapsed_ms =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() / 1000.0;
        return report;
    }
    throw InvalidArgument("unknown suite: " + name);
}

RunReport fuzz_construction(const CodeLayout& layout, std::uint64_t trials, std::uint64_t seed,
                            bool window_checks) {
    RunReport r;
    r.command = "fuzz";
    r.suite = layout.params.construction == Construction::C1 ? "construction1" : "construction2";
    r.parameters = {{"layout", dupcode::to_json(layout)}, {"trials", trials}};
    r.seed = seed;
    Check chk(r);
    const CodeParams& p = layout.params;
    const ComplementMap map = ComplementMap::paired(p.q);
    const RllParams rll{p.q, p.n, layout.m1, layout.m2, layout.m, map};

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        CounterRng rng(seed, 2 * trial);
        const Word x = random_word(p.q, layout.message_length(), rng);
        const Word cw = c_encode(x, layout);
        const auto corrupted = sample(cw, 1, p.t, map, DuplicationKind::ReverseComplement,
                                      seed, 2 * trial + 1);
        bool ok = true;
        std::string what;
        if (window_checks) {
            const Word payload = rll_encode(x, rll);
            const Word w1 = corrupted.word.subword(1, p.n + static_cast<std::size_t>(p.t));
            const RunDecomposition dp = decompose(payload, map);
            const RunDecomposition dw = decompose(w1, map);
            if (dw.run_count() != dp.run_count() || !(dw.signature == dp.signature)) {
                ok = false;
                what = "window run structure diverged";
            } else {
                const auto vec_payload = protected_vector(payload, layout, false);
                const auto vec_window = protected_vector(w1, layout, true);
                std::size_t distance = 0;
                for (std::size_t i = 0; i < vec_payload.size(); ++i) {
                    if (vec_payload[i] != vec_window[i]) ++distance;
                }
                if (distance > static_cast<std::size_t>(p.t)) {
                    ok = false;
                    what = "window vector drifted beyond t entries";
                }
            }
        }
        if (ok) {
            try {
                ok = (c_decode(corrupted.word, layout) == x);
                if (!ok) what = "decode returned a different payload";
            } catch (const Error& err) {
                ok = false;
                what = std::string("decode threw: ") + err.what();
            }
        }
        chk.expect(ok, "trial " + std::to_string(trial) + ": " + what);
    }
    return r;
}

}  // namespace dupcode::suites
