#include "scopeaudit/textprep.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace scopeaudit {

namespace {

// Minimal UTF-8 decoding: returns the codepoint at position i and advances i.
// Invalid bytes decode as U+FFFD and advance by one.
char32_t decode_utf8(const std::string& s, std::size_t& i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) { ++i; return c; }
    int extra;
    char32_t cp;
    if ((c & 0xE0) == 0xC0) { extra = 1; cp = c & 0x1F; }
    else if ((c & 0xF0) == 0xE0) { extra = 2; cp = c & 0x0F; }
    else if ((c & 0xF8) == 0xF0) { extra = 3; cp = c & 0x07; }
    else { ++i; return 0xFFFD; }
    if (i + extra >= s.size()) { ++i; return 0xFFFD; }
    for (int k = 1; k <= extra; ++k) {
        unsigned char cc = static_cast<unsigned char>(s[i + k]);
        if ((cc & 0xC0) != 0x80) { ++i; return 0xFFFD; }
        cp = (cp << 6) | (cc & 0x3F);
    }
    i += extra + 1;
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) out.push_back(char(cp));
    else if (cp < 0x800) {
        out.push_back(char(0xC0 | (cp >> 6)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(char(0xE0 | (cp >> 12)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(char(0xF0 | (cp >> 18)));
        out.push_back(char(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    }
}

// Token characters: ASCII letters and digits, and non-ASCII codepoints other
// than common punctuation/symbol blocks. Hyphens and all ASCII punctuation
// split tokens.
bool is_token_char(char32_t cp) {
    if (cp < 0x80)
        return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    if (cp >= 0x00A1 && cp <= 0x00BF) return false;  // Latin-1 punctuation, (c), (r), degrees
    if (cp == 0x00D7 || cp == 0x00F7) return false;
    if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation: dashes, quotes
    if (cp == 0xFFFD) return false;
    return true;
}

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;  // Latin-1 letters
    return cp;
}

bool is_space_byte(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space_byte(s[b])) ++b;
    while (e > b && is_space_byte(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::string ascii_lower(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c += 0x20;
    return s;
}

bool starts_with_word(const std::string& lowered, const std::string& word) {
    if (lowered.size() < word.size() || lowered.compare(0, word.size(), word) != 0)
        return false;
    if (lowered.size() == word.size()) return true;
    char next = lowered[word.size()];
    return !((next >= 'a' && next <= 'z') || (next >= '0' && next <= '9'));
}

}  // namespace

StopwordList::StopwordList(std::vector<std::string> words) {
    for (auto& w : words) words_.insert(ascii_lower(std::move(w)));
}

const StopwordList& StopwordList::defaults() {
    static const StopwordList list{std::vector<std::string>{
#include "default_stopwords.inc"
    }};
    return list;
}

StopwordList StopwordList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopwords file: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) words.push_back(line);
    }
    if (words.empty()) throw std::runtime_error("stopwords file is empty: " + path);
    return StopwordList{std::move(words)};
}

const CleaningRules& CleaningRules::defaults() {
    static const CleaningRules rules{{
#include "default_headings.inc"
    }};
    return rules;
}

CleaningRules CleaningRules::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open headings file: " + path);
    CleaningRules rules;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = ascii_lower(trim(line));
        if (!line.empty()) rules.headings.push_back(line);
    }
    return rules;
}

std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool boundary = (c == '.' || c == '?' || c == '!' || c == ';' || c == ':') &&
                        (i + 1 == text.size() || is_space_byte(text[i + 1]));
        if (!boundary) continue;
        std::string seg = trim(text.substr(start, i - start + 1));
        if (!seg.empty()) sentences.push_back(std::move(seg));
        start = i + 1;
    }
    if (start < text.size()) {
        std::string seg = trim(text.substr(start));
        if (!seg.empty()) sentences.push_back(std::move(seg));
    }
    return sentences;
}

namespace {

std::string clean_abstract_once(const std::string& raw, const CleaningRules& rules) {
    std::vector<std::string> segs = split_sentences(raw);

    // Leading "abstract" token.
    if (!segs.empty()) {
        std::string lowered = ascii_lower(segs.front());
        if (starts_with_word(lowered, "abstract")) {
            std::size_t pos = 8;
            while (pos < segs.front().size() &&
                   (is_space_byte(segs.front()[pos]) || segs.front()[pos] == ':' ||
                    segs.front()[pos] == '.' || segs.front()[pos] == '-'))
                ++pos;
            segs.front() = trim(segs.front().substr(pos));
            if (segs.front().empty()) segs.erase(segs.begin());
        }
    }

    // Structured headings: a segment that is exactly "<heading>:".
    std::vector<std::string> kept;
    for (auto& seg : segs) {
        std::string lowered = ascii_lower(seg);
        bool heading = false;
        for (const auto& h : rules.headings) {
            if (lowered == h + ":") { heading = true; break; }
        }
        if (!heading) kept.push_back(std::move(seg));
    }

    // Trailing copyright sentences: first codepoint (c) or word "copyright".
    while (!kept.empty()) {
        const std::string& last = kept.back();
        bool copyright_seg = false;
        if (last.size() >= 2 && static_cast<unsigned char>(last[0]) == 0xC2 &&
            static_cast<unsigned char>(last[1]) == 0xA9)
            copyright_seg = true;
        else if (starts_with_word(ascii_lower(last), "copyright"))
            copyright_seg = true;
        if (!copyright_seg) break;
        kept.pop_back();
    }

    std::string out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (i) out.push_back(' ');
        out += kept[i];
    }
    return out;
}

}  // namespace

std::string clean_abstract(const std::string& raw, const CleaningRules& rules) {
    // Removing a heading or copyright segment can expose another; iterate to
    // a fixpoint so the operation is idempotent.
    std::string cur = raw;
    for (;;) {
        std::string next = clean_abstract_once(cur, rules);
        if (next == cur) return next;
        cur = std::move(next);
    }
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = decode_utf8(text, i);
        if (is_token_char(cp)) {
            encode_utf8(to_lower(cp), cur);
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::set<std::string> ngrams(const std::vector<std::string>& tokens, int nmax) {
    std::set<std::string> out;
    if (nmax < 1) return out;
    for (std::size_t start = 0; start < tokens.size(); ++start) {
        std::string gram;
        for (std::size_t len = 1; len <= std::size_t(nmax) && start + len <= tokens.size(); ++len) {
            if (len > 1) gram.push_back(' ');
            gram += tokens[start + len - 1];
            out.insert(gram);
        }
    }
    return out;
}

std::set<std::string> extract_terms(const std::string& title, const std::string& abstract,
                                    const StopwordList& stopwords, int nmax,
                                    const CleaningRules& rules) {
    std::vector<std::vector<std::string>> sentences;
    sentences.push_back(tokenize(title));  // title is one sentence
    for (const auto& sent : split_sentences(clean_abstract(abstract, rules)))
        sentences.push_back(tokenize(sent));

    std::set<std::string> terms;
    for (auto& tokens : sentences) {
        tokens.erase(std::remove_if(tokens.begin(), tokens.end(),
                                    [&](const std::string& t) { return stopwords.contains(t); }),
                     tokens.end());
        auto grams = ngrams(tokens, nmax);
        terms.merge(grams);
    }
    return terms;
}

}  // namespace scopeaudit
