#include "scopeaudit/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <thread>
#include <unordered_set>

namespace scopeaudit {

namespace {

// Static block partition; identical results for any worker count because
// every slot is written independently.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t k = std::min<std::size_t>(workers, n);
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < k; ++w) {
        std::size_t begin = n * w / k;
        std::size_t end = n * (w + 1) / k;
        threads.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

using StringCounts = std::unordered_map<std::string, std::uint32_t>;

StringCounts journal_term_counts(const Corpus& corpus, const std::string& journal_id,
                                 const TextPrepOptions& opts) {
    StringCounts counts;
    for (std::size_t idx : corpus.articles_of(journal_id)) {
        const ArticleRecord& a = corpus.articles()[idx];
        for (const auto& term :
             extract_terms(a.title, a.abstract, *opts.stopwords, opts.ngram_max, *opts.rules))
            ++counts[term];
    }
    return counts;
}

JournalTf to_journal_tf(std::string journal_id, const StringCounts& counts,
                        const TermDictionary& dict) {
    JournalTf tf;
    tf.journal_id = std::move(journal_id);
    tf.counts.reserve(counts.size());
    for (const auto& [term, n] : counts) tf.counts.emplace_back(dict.id(term), n);
    std::sort(tf.counts.begin(), tf.counts.end());
    return tf;
}

const JournalTf& find_tf(const std::vector<JournalTf>& tfs, const std::string& journal_id) {
    auto it = std::lower_bound(tfs.begin(), tfs.end(), journal_id,
                               [](const JournalTf& tf, const std::string& id) {
                                   return tf.journal_id < id;
                               });
    if (it == tfs.end() || it->journal_id != journal_id)
        throw VectorizeError("no TF table for journal '" + journal_id + "'");
    return *it;
}

// Shared centroid accumulation: member journals in ascending journal_id
// order, each term weighted count / f_j, then scaled by IDF.
SparseVector accumulate_field_vector(const Corpus& corpus,
                                     const std::vector<std::string>& members,
                                     const std::vector<JournalTf>& tfs, const IdfTable& idf) {
    std::unordered_map<TermId, double> tf_acc;
    for (const auto& jid : members) {
        double inv_fields = 1.0 / double(corpus.journal(jid).field_count());
        for (const auto& [term, count] : find_tf(tfs, jid).counts)
            tf_acc[term] += double(count) * inv_fields;
    }
    SparseVector v;
    v.entries.reserve(tf_acc.size());
    for (const auto& [term, tf] : tf_acc) {
        if (idf.pruned(term)) continue;
        double w = tf * idf.idf[term];
        if (w > 0) v.entries.emplace_back(term, w);
    }
    std::sort(v.entries.begin(), v.entries.end());
    return v;
}

}  // namespace

TermDictionary::TermDictionary(std::vector<std::string> sorted_terms)
    : terms_(std::move(sorted_terms)) {
    ids_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) ids_.emplace(terms_[i], TermId(i));
    if (ids_.size() != terms_.size())
        throw VectorizeError("dictionary terms are not unique");
}

TermId TermDictionary::id(const std::string& term) const {
    auto it = ids_.find(term);
    if (it == ids_.end()) throw VectorizeError("term not in dictionary: '" + term + "'");
    return it->second;
}

std::uint32_t JournalTf::count(TermId id) const {
    auto it = std::lower_bound(counts.begin(), counts.end(), id,
                               [](const auto& p, TermId t) { return p.first < t; });
    return (it != counts.end() && it->first == id) ? it->second : 0;
}

double SparseVector::norm() const {
    double ss = 0;
    for (const auto& [id, w] : entries) ss += w * w;
    return std::sqrt(ss);
}

double SparseVector::weight(TermId id) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), id,
                               [](const auto& p, TermId t) { return p.first < t; });
    return (it != entries.end() && it->first == id) ? it->second : 0.0;
}

TermDictionary build_dictionary(const Corpus& corpus, const TextPrepOptions& opts) {
    std::set<std::string> all;
    for (const auto& a : corpus.articles()) {
        auto terms = extract_terms(a.title, a.abstract, *opts.stopwords, opts.ngram_max, *opts.rules);
        all.merge(terms);
    }
    return TermDictionary{std::vector<std::string>(all.begin(), all.end())};
}

JournalTf journal_tf(const Corpus& corpus, const std::string& journal_id,
                     const TermDictionary& dict, const TextPrepOptions& opts) {
    corpus.journal(journal_id);  // throws on unknown journal
    return to_journal_tf(journal_id, journal_term_counts(corpus, journal_id, opts), dict);
}

IdfTable compute_idf(const std::vector<JournalTf>& tfs, std::size_t dict_size,
                     int min_journals_per_term) {
    if (tfs.empty()) throw VectorizeError("cannot compute IDF over an empty corpus");
    std::vector<std::uint32_t> journal_freq(dict_size, 0);
    for (const auto& tf : tfs)
        for (const auto& [term, count] : tf.counts) ++journal_freq[term];

    IdfTable table;
    table.journal_count = tfs.size();
    table.idf.resize(dict_size, IdfTable::kPruned);
    double n = double(tfs.size());
    for (std::size_t t = 0; t < dict_size; ++t) {
        if (journal_freq[t] == 0 || journal_freq[t] < std::uint32_t(min_journals_per_term))
            continue;
        table.idf[t] = std::log(n / double(journal_freq[t]));
    }
    return table;
}

IdfTable compute_idf_excluding(const std::vector<JournalTf>& tfs, std::size_t dict_size,
                               const std::string& exclude_journal_id,
                               int min_journals_per_term) {
    std::vector<JournalTf> rest;
    rest.reserve(tfs.size());
    for (const auto& tf : tfs)
        if (tf.journal_id != exclude_journal_id) rest.push_back(tf);
    return compute_idf(rest, dict_size, min_journals_per_term);
}

SparseVector journal_vector(const JournalTf& tf, const IdfTable& idf) {
    SparseVector v;
    v.entries.reserve(tf.counts.size());
    for (const auto& [term, count] : tf.counts) {
        if (term >= idf.idf.size()) throw VectorizeError("term id outside IDF table");
        if (idf.pruned(term)) continue;
        double w = double(count) * idf.idf[term];
        if (w > 0) v.entries.emplace_back(term, w);
    }
    return v;
}

SparseVector field_vector(const Corpus& corpus, int field_code,
                          const std::vector<JournalTf>& tfs, const IdfTable& idf) {
    const auto& members = corpus.journals_in_field(field_code);
    if (members.empty())
        throw VectorizeError("field " + std::to_string(field_code) + " has no member journals");
    return accumulate_field_vector(corpus, members, tfs, idf);
}

SparseVector loo_field_vector(const Corpus& corpus, int field_code,
                              const std::string& exclude_journal_id,
                              const std::vector<JournalTf>& tfs, const IdfTable& idf) {
    const auto& members = corpus.journals_in_field(field_code);
    auto it = std::find(members.begin(), members.end(), exclude_journal_id);
    if (it == members.end())
        throw VectorizeError("journal '" + exclude_journal_id + "' is not a member of field " +
                             std::to_string(field_code));
    std::vector<std::string> rest;
    rest.reserve(members.size() - 1);
    for (const auto& m : members)
        if (m != exclude_journal_id) rest.push_back(m);
    return accumulate_field_vector(corpus, rest, tfs, idf);
}

const JournalTf& VectorModel::tf_of(const std::string& journal_id) const {
    return find_tf(tfs, journal_id);
}

VectorModel build_model(const Corpus& corpus, const TextPrepOptions& opts,
                        int min_journals_per_term, int workers) {
    const auto& journals = corpus.journals();
    std::vector<StringCounts> raw(journals.size());
    parallel_for(journals.size(), workers, [&](std::size_t i) {
        raw[i] = journal_term_counts(corpus, journals[i].journal_id, opts);
    });

    std::unordered_set<std::string> term_set;
    for (const auto& counts : raw)
        for (const auto& [term, n] : counts) term_set.insert(term);
    std::vector<std::string> terms(term_set.begin(), term_set.end());
    std::sort(terms.begin(), terms.end());

    VectorModel model;
    model.corpus = &corpus;
    model.dict = TermDictionary{std::move(terms)};
    model.tfs.resize(journals.size());
    parallel_for(journals.size(), workers, [&](std::size_t i) {
        model.tfs[i] = to_journal_tf(journals[i].journal_id, raw[i], model.dict);
        raw[i] = StringCounts{};
    });

    model.idf = compute_idf(model.tfs, model.dict.size(), min_journals_per_term);
    for (const auto& tf : model.tfs)
        model.journal_vectors[tf.journal_id] = journal_vector(tf, model.idf);
    for (int code : corpus.populated_fields())
        model.field_vectors[code] = field_vector(corpus, code, model.tfs, model.idf);
    return model;
}

namespace {

constexpr char kStoreMagic[8] = {'S', 'A', 'V', 'S', 'T', 'R', '0', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    put_u32(out, std::uint32_t(v));
    put_u32(out, std::uint32_t(v >> 32));
}

void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

void put_str(std::ostream& out, const std::string& s) {
    put_u32(out, std::uint32_t(s.size()));
    out.write(s.data(), std::streamsize(s.size()));
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw VectorizeError("truncated vector store");
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
           (std::uint32_t(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
    std::uint64_t lo = get_u32(in);
    std::uint64_t hi = get_u32(in);
    return lo | (hi << 32);
}

double get_f64(std::istream& in) {
    std::uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

std::string get_str(std::istream& in) {
    std::uint32_t n = get_u32(in);
    std::string s(n, '\0');
    in.read(s.data(), std::streamsize(n));
    if (!in) throw VectorizeError("truncated vector store");
    return s;
}

}  // namespace

void save_vector_store(const std::string& path, const VectorModel& model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw VectorizeError("cannot write vector store: " + path);
    out.write(kStoreMagic, sizeof kStoreMagic);
    put_u32(out, std::uint32_t(model.dict.size()));
    for (std::size_t i = 0; i < model.dict.size(); ++i) put_str(out, model.dict.term(TermId(i)));
    put_u64(out, model.idf.journal_count);
    for (double v : model.idf.idf) put_f64(out, v);
    put_u32(out, std::uint32_t(model.tfs.size()));
    for (const auto& tf : model.tfs) {
        put_str(out, tf.journal_id);
        put_u32(out, std::uint32_t(tf.counts.size()));
        for (const auto& [term, count] : tf.counts) {
            put_u32(out, term);
            put_u32(out, count);
        }
    }
    if (!out) throw VectorizeError("failed writing vector store: " + path);
}

VectorModel load_vector_store(const std::string& path, const Corpus& corpus) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw VectorizeError("cannot open vector store: " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kStoreMagic, sizeof magic) != 0)
        throw VectorizeError("not a vector store (bad magic): " + path);

    VectorModel model;
    model.corpus = &corpus;
    std::uint32_t dict_size = get_u32(in);
    std::vector<std::string> terms(dict_size);
    for (auto& t : terms) t = get_str(in);
    model.dict = TermDictionary{std::move(terms)};
    model.idf.journal_count = get_u64(in);
    model.idf.idf.resize(dict_size);
    for (auto& v : model.idf.idf) v = get_f64(in);
    std::uint32_t journal_count = get_u32(in);
    model.tfs.resize(journal_count);
    for (auto& tf : model.tfs) {
        tf.journal_id = get_str(in);
        std::uint32_t n = get_u32(in);
        tf.counts.resize(n);
        for (auto& [term, count] : tf.counts) {
            term = get_u32(in);
            count = get_u32(in);
        }
    }

    if (model.tfs.size() != corpus.journals().size())
        throw VectorizeError("vector store does not match corpus (journal count differs)");
    for (std::size_t i = 0; i < model.tfs.size(); ++i)
        if (model.tfs[i].journal_id != corpus.journals()[i].journal_id)
            throw VectorizeError("vector store does not match corpus (journal '" +
                                 model.tfs[i].journal_id + "')");

    for (const auto& tf : model.tfs)
        model.journal_vectors[tf.journal_id] = journal_vector(tf, model.idf);
    for (int code : corpus.populated_fields())
        model.field_vectors[code] = field_vector(corpus, code, model.tfs, model.idf);
    return model;
}

}  // namespace scopeaudit
