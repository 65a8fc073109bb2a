#include "scopeaudit/config.hpp"

#include <fstream>

namespace scopeaudit {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for '" + key + "': " + value);
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad number for '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "off" || value == "no") return false;
    throw ConfigError("bad boolean for '" + key + "': " + value);
}

}  // namespace

void Config::validate() const {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ConfigError("threshold must be in (0, 1]");
    if (rank_window < 1) throw ConfigError("rank_window must be >= 1");
    if (ngram_max < 1) throw ConfigError("ngram_max must be >= 1");
    if (min_articles < 0) throw ConfigError("min_articles must be >= 0");
    if (min_journals_per_term < 1) throw ConfigError("min_journals_per_term must be >= 1");
    if (workers < 1) throw ConfigError("workers must be >= 1");
}

void Config::apply(const std::string& key, const std::string& value) {
    if (key == "threshold") threshold = parse_double(key, value);
    else if (key == "rank_window") rank_window = parse_int(key, value);
    else if (key == "min_articles") min_articles = parse_int(key, value);
    else if (key == "ngram_max") ngram_max = parse_int(key, value);
    else if (key == "stopwords") stopwords_path = value;
    else if (key == "headings") headings_path = value;
    else if (key == "min_journals_per_term") min_journals_per_term = parse_int(key, value);
    else if (key == "loo_recompute_idf") loo_recompute_idf = parse_bool(key, value);
    else if (key == "workers") workers = parse_int(key, value);
    else throw ConfigError("unknown config key '" + key + "'");
}

std::map<std::string, std::string> Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::map<std::string, std::string> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return values;
}

Config Config::from_file(const std::string& path) {
    Config config;
    for (const auto& [key, value] : parse_file(path)) config.apply(key, value);
    config.validate();
    return config;
}

}  // namespace scopeaudit
