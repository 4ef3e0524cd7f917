#include "dupcode/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "dupcode/numeric.hpp"

namespace dupcode {

namespace {

void check_q(int q) {
    if (q < 2) throw InvalidArgument("alphabet size must be at least 2");
}

void check_symbol(Symbol s, int q) {
    if (s < 0 || s >= q) {
        throw InvalidArgument("symbol " + std::to_string(s) + " outside [0, " +
                              std::to_string(q - 1) + "]");
    }
}

}  // namespace

Word::Word(int q) : q_(q) { check_q(q); }

Word::Word(int q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    check_q(q);
    for (Symbol s : symbols_) check_symbol(s, q_);
}

Word Word::from_text(std::string_view text, int q) {
    check_q(q);
    std::vector<Symbol> syms;
    if (q <= 10) {
        syms.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw InvalidArgument("invalid digit in word text");
            syms.push_back(c - '0');
        }
    } else if (!text.empty()) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view tok = text.substr(
                start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw InvalidArgument("invalid integer in word text");
            syms.push_back(value);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return Word(q, std::move(syms));
}

std::string Word::text() const {
    std::string out;
    if (q_ <= 10) {
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(symbols_[i]);
        }
    }
    return out;
}

Symbol Word::at1(std::size_t pos1) const {
    if (pos1 < 1 || pos1 > symbols_.size()) throw InvalidArgument("position out of range");
    return symbols_[pos1 - 1];
}

Word Word::subword(std::size_t first1, std::size_t last1) const {
    Word out(q_);
    if (first1 > last1) return out;
    if (first1 < 1 || last1 > symbols_.size()) throw InvalidArgument("subword range out of bounds");
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(first1 - 1),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(last1));
    return out;
}

Word& Word::append(Symbol s) {
    check_symbol(s, q_);
    symbols_.push_back(s);
    return *this;
}

Word& Word::append(const Word& other) {
    if (other.q_ != q_) throw AlphabetMismatch("cannot concatenate words over different alphabets");
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(w.q());
    for (Symbol s : w.symbols()) {
        h ^= static_cast<std::uint64_t>(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

ComplementMap::ComplementMap(int q, ComplementMode mode, std::vector<Symbol> table)
    : q_(q), mode_(mode), table_(std::move(table)) {}

ComplementMap ComplementMap::paired(int q) {
    check_q(q);
    if (q % 2 != 0) throw InvalidArgument("paired complement requires an even alphabet");
    std::vector<Symbol> table(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) table[static_cast<std::size_t>(a)] = (a % 2 == 0) ? a + 1 : a - 1;
    return ComplementMap(q, ComplementMode::Paired, std::move(table));
}

ComplementMap ComplementMap::identity(int q) {
    check_q(q);
    std::vector<Symbol> table(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) table[static_cast<std::size_t>(a)] = a;
    return ComplementMap(q, ComplementMode::Identity, std::move(table));
}

ComplementMap ComplementMap::custom(int q, std::vector<Symbol> table) {
    check_q(q);
    if (table.size() != static_cast<std::size_t>(q))
        throw InvalidArgument("complement table size must equal q");
    for (int a = 0; a < q; ++a) {
        Symbol image = table[static_cast<std::size_t>(a)];
        check_symbol(image, q);
        if (table[static_cast<std::size_t>(image)] != a)
            throw InvalidArgument("complement table is not an involution");
    }
    return ComplementMap(q, ComplementMode::Custom, std::move(table));
}

Symbol ComplementMap::operator()(Symbol a) const {
    check_symbol(a, q_);
    return table_[static_cast<std::size_t>(a)];
}

bool ComplementMap::fixed_point_free() const {
    for (int a = 0; a < q_; ++a) {
        if (table_[static_cast<std::size_t>(a)] == a) return false;
    }
    return true;
}

Word complement(const ComplementMap& map, const Word& w) {
    if (map.q() != w.q()) throw AlphabetMismatch("complement: alphabet mismatch");
    std::vector<Symbol> syms;
    syms.reserve(w.size());
    for (Symbol s : w.symbols()) syms.push_back(map(s));
    return Word(w.q(), std::move(syms));
}

Word reversed(const Word& w) {
    std::vector<Symbol> syms(w.symbols().rbegin(), w.symbols().rend());
    return Word(w.q(), std::move(syms));
}

Word reverse_complement(const ComplementMap& map, const Word& w) {
    if (map.q() != w.q()) throw AlphabetMismatch("reverse_complement: alphabet mismatch");
    std::vector<Symbol> syms;
    syms.reserve(w.size());
    for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) syms.push_back(map(*it));
    return Word(w.q(), std::move(syms));
}

Word rep(const RepWidth& width, std::uint64_t value) {
    check_q(width.q);
    if (!pow_at_most(static_cast<std::uint64_t>(width.q), width.m,
                     std::numeric_limits<std::uint64_t>::max()))
        throw Overflow("rep: q^m exceeds 64 bits");
    const std::uint64_t cap = pow_u64(static_cast<std::uint64_t>(width.q), width.m);
    if (value >= cap) throw InvalidArgument("rep: value out of range for the given width");
    std::vector<Symbol> syms(width.m, 0);
    for (std::size_t i = width.m; i-- > 0;) {
        syms[i] = static_cast<Symbol>(value % static_cast<std::uint64_t>(width.q));
        value /= static_cast<std::uint64_t>(width.q);
    }
    return Word(width.q, std::move(syms));
}

std::uint64_t rep_inv(const RepWidth& width, const Word& w) {
    if (w.q() != width.q) throw AlphabetMismatch("rep_inv: alphabet mismatch");
    if (w.size() != width.m) throw InvalidArgument("rep_inv: wrong width");
    std::uint64_t value = 0;
    for (Symbol s : w.symbols()) value = value * static_cast<std::uint64_t>(width.q) +
                                         static_cast<std::uint64_t>(s);
    return value;
}

}  // namespace dupcode
