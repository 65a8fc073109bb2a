#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace scopeaudit {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pipeline configuration. Precedence: command-line flag > config file >
// built-in default (merged by the CLI).
struct Config {
    double threshold = 0.75;
    int rank_window = 5;
    int min_articles = 100;
    int ngram_max = 3;
    std::string stopwords_path;  // empty = bundled default list
    std::string headings_path;   // empty = bundled default rules
    int min_journals_per_term = 1;
    bool loo_recompute_idf = false;
    int workers = 1;

    void validate() const;  // throws ConfigError

    // Applies one key = value setting; throws ConfigError on unknown keys or
    // unparsable values.
    void apply(const std::string& key, const std::string& value);

    static Config from_file(const std::string& path);

    // Parses a key = value file ('#' comments, blank lines allowed).
    static std::map<std::string, std::string> parse_file(const std::string& path);
};

}  // namespace scopeaudit
