#include "dupcode/channel.hpp"

#include <algorithm>
#include <set>

#include "dupcode/numeric.hpp"

namespace dupcode {

namespace {

void check_event(const Word& w, const DuplicationEvent& e) {
    if (e.length < 1) throw InvalidArgument("duplication length must be at least 1");
    if (e.position < 1 || e.position + e.length - 1 > w.size())
        throw InvalidArgument("duplication position out of range");
}

Word duplicate_block(const Word& v, DuplicationKind kind, const ComplementMap& map) {
    return kind == DuplicationKind::Palindromic ? reversed(v) : reverse_complement(map, v);
}

}  // namespace

Word apply(const Word& w, const DuplicationEvent& e, const ComplementMap& map) {
    if (map.q() != w.q()) throw AlphabetMismatch("apply: alphabet mismatch");
    check_event(w, e);
    const std::size_t i = e.position;
    const std::size_t k = e.length;
    Word out = w.subword(1, i + k - 1);
    out.append(duplicate_block(w.subword(i, i + k - 1), e.kind, map));
    out.append(w.subword(i + k, w.size()));
    return out;
}

Word replay(const Word& w, const Transcript& events, const ComplementMap& map) {
    Word cur = w;
    for (const DuplicationEvent& e : events) cur = apply(cur, e, map);
    return cur;
}

Word apply_disjoint(const Word& w, const DisjointPattern& pattern, const ComplementMap& map,
                    DuplicationKind kind) {
    if (map.q() != w.q()) throw AlphabetMismatch("apply_disjoint: alphabet mismatch");
    const std::size_t k = pattern.length;
    const std::size_t n = w.size();
    if (k < 1) throw InvalidArgument("duplication length must be at least 1");
    for (std::size_t j = 0; j < pattern.positions.size(); ++j) {
        const std::size_t i = pattern.positions[j];
        if (i < 1 || i + k - 1 > n) throw InvalidArgument("pattern position out of range");
        if (j > 0 && i < pattern.positions[j - 1] + k)
            throw InvalidArgument("pattern positions overlap (gap below k)");
    }
    Word out(w.q());
    std::size_t cursor = 1;
    for (std::size_t i : pattern.positions) {
        out.append(w.subword(cursor, i + k - 1));
        out.append(duplicate_block(w.subword(i, i + k - 1), kind, map));
        cursor = i + k;
    }
    out.append(w.subword(cursor, n));
    return out;
}

std::vector<Word> ball(const Word& w, std::size_t k, int t, const ComplementMap& map,
                       DuplicationKind kind, std::uint64_t budget) {
    if (map.q() != w.q()) throw AlphabetMismatch("ball: alphabet mismatch");
    if (k < 1) throw InvalidArgument("duplication length must be at least 1");
    if (t < 0) throw InvalidArgument("radius must be nonnegative");
    std::set<Word> level{w};
    std::uint64_t produced = 0;
    for (int step = 0; step < t; ++step) {
        std::set<Word> next;
        for (const Word& x : level) {
            if (x.size() < k) continue;
            for (std::size_t i = 1; i + k - 1 <= x.size(); ++i) {
                next.insert(apply(x, DuplicationEvent{kind, i, k}, map));
                if (++produced > budget) throw BudgetExceeded("ball: budget exceeded");
            }
        }
        level.swap(next);
    }
    return std::vector<Word>(level.begin(), level.end());
}

bool ball_contains(const std::vector<Word>& sorted_ball, const Word& w) {
    return std::binary_search(sorted_ball.begin(), sorted_ball.end(), w);
}

SampleResult sample(const Word& w, std::size_t k, int t, const ComplementMap& map,
                    DuplicationKind kind, std::uint64_t seed, std::uint64_t trial) {
    if (t < 0) throw InvalidArgument("radius must be nonnegative");
    CounterRng rng(seed, trial);
    SampleResult out{w, {}};
    for (int step = 0; step < t; ++step) {
        if (out.word.size() < k) throw InvalidArgument("sample: word shorter than k");
        const std::size_t slots = out.word.size() - k + 1;
        DuplicationEvent e{kind, 1 + static_cast<std::size_t>(rng.below(slots)), k};
        out.word = apply(out.word, e, map);
        out.transcript.push_back(e);
    }
    return out;
}

}  // namespace dupcode
