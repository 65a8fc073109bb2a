#include "scopeaudit/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fmt_util.hpp"

namespace scopeaudit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_line(const std::string& path, std::size_t lineno, const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw CorpusError(path + ":" + std::to_string(lineno) + ": malformed record");
    return j;
}

// Pulls a field, rethrowing type errors with file:line context.
template <typename T>
T field(const json& j, const char* key, const std::string& path, std::size_t lineno) {
    if (!j.contains(key))
        throw CorpusError(path + ":" + std::to_string(lineno) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw CorpusError(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
}

template <typename Fn>
void for_each_line(const std::string& path, Fn fn) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        fn(lineno, line);
    }
}

using detail::fmt_double;

}  // namespace

bool JournalRecord::in_field(int code) const {
    return std::binary_search(asjc_codes.begin(), asjc_codes.end(), code);
}

Corpus Corpus::load(const std::string& articles_path, const std::string& journals_path,
                    const std::string& registry_path, const LoadOptions& options,
                    LoadReport* report) {
    FieldRegistry registry;
    for_each_line(registry_path, [&](std::size_t lineno, const std::string& line) {
        json j = parse_line(registry_path, lineno, line);
        AsjcField f;
        f.code = field<int>(j, "code", registry_path, lineno);
        f.name = field<std::string>(j, "name", registry_path, lineno);
        registry.add(std::move(f));
    });

    std::vector<JournalRecord> journals;
    std::vector<ArticleRecord> articles;

    auto reject = [&](const std::string& message) {
        if (!options.lenient) throw CorpusError(message);
        if (report) report->dropped.push_back(message);
    };

    for_each_line(journals_path, [&](std::size_t lineno, const std::string& line) {
        std::string where = journals_path + ":" + std::to_string(lineno);
        json j;
        JournalRecord rec;
        try {
            j = parse_line(journals_path, lineno, line);
            rec.journal_id = field<std::string>(j, "journal_id", journals_path, lineno);
            rec.name = field<std::string>(j, "name", journals_path, lineno);
            rec.asjc_codes = field<std::vector<int>>(j, "asjc_codes", journals_path, lineno);
        } catch (const CorpusError& e) {
            reject(e.what());
            return;
        }
        std::sort(rec.asjc_codes.begin(), rec.asjc_codes.end());
        rec.asjc_codes.erase(std::unique(rec.asjc_codes.begin(), rec.asjc_codes.end()),
                             rec.asjc_codes.end());
        if (rec.journal_id.empty()) {
            reject(where + ": empty journal_id");
            return;
        }
        if (rec.asjc_codes.empty() || rec.asjc_codes.size() > 11) {
            reject(where + ": journal '" + rec.journal_id + "' has " +
                   std::to_string(rec.asjc_codes.size()) +
                   " field codes, outside the 1-11 bound");
            return;
        }
        for (int code : rec.asjc_codes) {
            if (!registry.contains(code)) {
                reject(where + ": journal '" + rec.journal_id + "' references unknown field code " +
                       std::to_string(code));
                return;
            }
        }
        journals.push_back(std::move(rec));
    });

    for_each_line(articles_path, [&](std::size_t lineno, const std::string& line) {
        std::string where = articles_path + ":" + std::to_string(lineno);
        ArticleRecord rec;
        try {
            json j = parse_line(articles_path, lineno, line);
            rec.article_id = field<std::string>(j, "article_id", articles_path, lineno);
            rec.journal_id = field<std::string>(j, "journal_id", articles_path, lineno);
            rec.title = field<std::string>(j, "title", articles_path, lineno);
            rec.abstract = field<std::string>(j, "abstract", articles_path, lineno);
            rec.year = field<int>(j, "year", articles_path, lineno);
        } catch (const CorpusError& e) {
            reject(e.what());
            return;
        }
        if (rec.article_id.empty()) { reject(where + ": empty article_id"); return; }
        if (rec.journal_id.empty()) { reject(where + ": empty journal_id"); return; }
        if (rec.title.empty()) {
            reject(where + ": article '" + rec.article_id + "' has an empty title");
            return;
        }
        if (rec.year < 1900 || rec.year > 2100) {
            reject(where + ": article '" + rec.article_id + "' has out-of-range year " +
                   std::to_string(rec.year));
            return;
        }
        articles.push_back(std::move(rec));
    });

    return build(std::move(articles), std::move(journals), std::move(registry), options, report);
}

Corpus Corpus::build(std::vector<ArticleRecord> articles, std::vector<JournalRecord> journals,
                     FieldRegistry registry, const LoadOptions& options, LoadReport* report) {
    auto reject = [&](const std::string& message) {
        if (!options.lenient) throw CorpusError(message);
        if (report) report->dropped.push_back(message);
    };

    std::sort(journals.begin(), journals.end(),
              [](const JournalRecord& a, const JournalRecord& b) {
                  return a.journal_id < b.journal_id;
              });
    std::set<std::string> journal_ids;
    std::vector<JournalRecord> kept_journals;
    for (auto& j : journals) {
        if (j.asjc_codes.empty() || j.asjc_codes.size() > 11) {
            reject("journal '" + j.journal_id + "' has " + std::to_string(j.asjc_codes.size()) +
                   " field codes, outside the 1-11 bound");
            continue;
        }
        bool bad_code = false;
        for (int code : j.asjc_codes) {
            if (!registry.contains(code)) {
                reject("journal '" + j.journal_id + "' references unknown field code " +
                       std::to_string(code));
                bad_code = true;
                break;
            }
        }
        if (bad_code) continue;
        if (!journal_ids.insert(j.journal_id).second) {
            reject("duplicate journal_id '" + j.journal_id + "'");
            continue;
        }
        kept_journals.push_back(std::move(j));
    }

    std::sort(articles.begin(), articles.end(),
              [](const ArticleRecord& a, const ArticleRecord& b) {
                  return a.article_id < b.article_id;
              });
    std::set<std::string> article_ids;
    std::vector<ArticleRecord> kept_articles;
    std::vector<std::string> unknown_journal_refs;
    for (auto& a : articles) {
        if (a.year < 1900 || a.year > 2100) {
            reject("article '" + a.article_id + "' has out-of-range year " +
                   std::to_string(a.year));
            continue;
        }
        if (!article_ids.insert(a.article_id).second) {
            reject("duplicate article_id '" + a.article_id + "'");
            continue;
        }
        if (!journal_ids.count(a.journal_id)) {
            if (options.lenient) {
                reject("article '" + a.article_id + "' references unknown journal '" +
                       a.journal_id + "'");
                continue;
            }
            unknown_journal_refs.push_back(a.article_id + " -> " + a.journal_id);
            continue;
        }
        kept_articles.push_back(std::move(a));
    }
    if (!unknown_journal_refs.empty()) {
        std::string msg = "articles reference unknown journals:";
        for (const auto& r : unknown_journal_refs) msg += " [" + r + "]";
        throw CorpusError(msg);
    }

    Corpus c;
    c.articles_ = std::move(kept_articles);
    c.journals_ = std::move(kept_journals);
    c.registry_ = std::move(registry);
    c.build_indices();
    return c;
}

void Corpus::build_indices() {
    for (const auto& j : journals_) {
        articles_by_journal_[j.journal_id];  // journals with no articles get an entry
        for (int code : j.asjc_codes) journals_by_field_[code].push_back(j.journal_id);
    }
    for (std::size_t i = 0; i < articles_.size(); ++i)
        articles_by_journal_[articles_[i].journal_id].push_back(i);
}

void Corpus::save(const std::string& articles_path, const std::string& journals_path,
                  const std::string& registry_path) const {
    std::ofstream arts(articles_path);
    if (!arts) throw CorpusError("cannot write file: " + articles_path);
    for (const auto& a : articles_) {
        ordered_json j{{"article_id", a.article_id}, {"journal_id", a.journal_id},
                       {"title", a.title},           {"abstract", a.abstract},
                       {"year", a.year}};
        arts << j.dump() << "\n";
    }
    std::ofstream jnls(journals_path);
    if (!jnls) throw CorpusError("cannot write file: " + journals_path);
    for (const auto& j : journals_) {
        ordered_json rec{{"journal_id", j.journal_id}, {"name", j.name},
                         {"asjc_codes", j.asjc_codes}};
        jnls << rec.dump() << "\n";
    }
    std::ofstream reg(registry_path);
    if (!reg) throw CorpusError("cannot write file: " + registry_path);
    for (const auto& [code, f] : registry_.fields()) {
        ordered_json rec{{"code", code}, {"name", f.name}};
        reg << rec.dump() << "\n";
    }
}

const JournalRecord* Corpus::find_journal(const std::string& journal_id) const {
    auto it = std::lower_bound(journals_.begin(), journals_.end(), journal_id,
                               [](const JournalRecord& j, const std::string& id) {
                                   return j.journal_id < id;
                               });
    if (it == journals_.end() || it->journal_id != journal_id) return nullptr;
    return &*it;
}

const JournalRecord& Corpus::journal(const std::string& journal_id) const {
    const JournalRecord* j = find_journal(journal_id);
    if (!j) throw CorpusError("unknown journal '" + journal_id + "'");
    return *j;
}

const std::vector<std::size_t>& Corpus::articles_of(const std::string& journal_id) const {
    auto it = articles_by_journal_.find(journal_id);
    if (it == articles_by_journal_.end()) throw CorpusError("unknown journal '" + journal_id + "'");
    return it->second;
}

std::size_t Corpus::article_count(const std::string& journal_id, std::optional<int> year) const {
    const auto& idx = articles_of(journal_id);
    if (!year) return idx.size();
    std::size_t n = 0;
    for (std::size_t i : idx)
        if (articles_[i].year == *year) ++n;
    return n;
}

const std::vector<std::string>& Corpus::journals_in_field(int field_code) const {
    static const std::vector<std::string> empty;
    auto it = journals_by_field_.find(field_code);
    return it == journals_by_field_.end() ? empty : it->second;
}

std::vector<int> Corpus::populated_fields() const {
    std::vector<int> codes;
    for (const auto& [code, members] : journals_by_field_)
        if (!members.empty()) codes.push_back(code);
    return codes;
}

FieldStats corpus_stats(const Corpus& corpus) {
    FieldStats stats;
    for (int code : corpus.populated_fields()) {
        FieldStatsRow row;
        row.field = code;
        for (const auto& jid : corpus.journals_in_field(code)) {
            ++row.journals;
            row.articles += corpus.article_count(jid);
        }
        row.articles_per_journal = double(row.articles) / double(row.journals);
        stats.rows.push_back(row);
    }
    if (stats.rows.empty()) return stats;

    auto fold = [&](auto get, double& mn, double& mx, double& mean) {
        double sum = 0;
        mn = mx = get(stats.rows.front());
        for (const auto& r : stats.rows) {
            double v = get(r);
            mn = std::min(mn, v);
            mx = std::max(mx, v);
            sum += v;
        }
        mean = sum / double(stats.rows.size());
    };
    fold([](const FieldStatsRow& r) { return double(r.journals); },
         stats.min_journals, stats.max_journals, stats.mean_journals);
    fold([](const FieldStatsRow& r) { return double(r.articles); },
         stats.min_articles, stats.max_articles, stats.mean_articles);
    fold([](const FieldStatsRow& r) { return r.articles_per_journal; },
         stats.min_apj, stats.max_apj, stats.mean_apj);
    for (const auto& r : stats.rows) {
        stats.total_journals += r.journals;
        stats.total_articles += r.articles;
    }
    return stats;
}

std::string stats_to_csv(const FieldStats& stats) {
    std::ostringstream out;
    out << "field,journals,articles,articles_per_journal\n";
    for (const auto& r : stats.rows)
        out << r.field << ',' << r.journals << ',' << r.articles << ','
            << fmt_double(r.articles_per_journal) << '\n';
    if (!stats.rows.empty()) {
        out << "min," << fmt_double(stats.min_journals) << ',' << fmt_double(stats.min_articles)
            << ',' << fmt_double(stats.min_apj) << '\n';
        out << "max," << fmt_double(stats.max_journals) << ',' << fmt_double(stats.max_articles)
            << ',' << fmt_double(stats.max_apj) << '\n';
        out << "mean," << fmt_double(stats.mean_journals) << ',' << fmt_double(stats.mean_articles)
            << ',' << fmt_double(stats.mean_apj) << '\n';
        out << "total," << stats.total_journals << ',' << stats.total_articles << ",\n";
    }
    return out.str();
}

std::string build_scopus_query(const FieldRegistry& registry, int field_code,
                               std::optional<int> year) {
    if (!registry.contains(field_code))
        throw RegistryError("unknown field code " + std::to_string(field_code));
    std::string q = "SUBJMAIN(" + std::to_string(field_code) + ") AND DOCTYPE(ar) AND SRCTYPE(j)";
    if (year) q += " AND PUBYEAR IS " + std::to_string(*year);
    return q;
}

}  // namespace scopeaudit
