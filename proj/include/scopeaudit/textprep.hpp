#pragma once

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace scopeaudit {

// Lowercased tokens dropped before n-gram formation.
class StopwordList {
public:
    StopwordList() = default;
    explicit StopwordList(std::vector<std::string> words);

    // The bundled 120-word default list.
    static const StopwordList& defaults();
    static StopwordList load(const std::string& path);
    static const StopwordList& none() {
        static const StopwordList empty;
        return empty;
    }

    bool contains(const std::string& token) const { return words_.count(token) > 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Rules applied by clean_abstract: sentence-initial structured headings to
// strip when followed by ':'.
struct CleaningRules {
    std::vector<std::string> headings;

    static const CleaningRules& defaults();
    static CleaningRules load(const std::string& path);
};

// Removes standardized structured-abstract headings, a leading "abstract"
// token, and trailing copyright sentences. Idempotent.
std::string clean_abstract(const std::string& raw,
                           const CleaningRules& rules = CleaningRules::defaults());

// Lowercased maximal runs of letters and digits; punctuation splits tokens.
std::vector<std::string> tokenize(const std::string& text);

// Sentence segments split at '.', '?', '!', ';', ':' followed by whitespace
// or end of text. Boundary punctuation stays with its sentence.
std::vector<std::string> split_sentences(const std::string& text);

// All contiguous 1..nmax-grams of the token sequence, joined by single spaces.
std::set<std::string> ngrams(const std::vector<std::string>& tokens, int nmax);

// Terms of an article: stopword-filtered 1..nmax-grams per sentence of the
// cleaned abstract, plus the title treated as one sentence.
std::set<std::string> extract_terms(const std::string& title,
                                    const std::string& abstract,
                                    const StopwordList& stopwords,
                                    int nmax = 3,
                                    const CleaningRules& rules = CleaningRules::defaults());

}  // namespace scopeaudit
