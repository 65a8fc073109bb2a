#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace scopeaudit {

// Kind of an ASJC narrow field, derived from the 4-digit code alone.
enum class FieldKind { regular, all, misc, multidisciplinary };

const char* to_string(FieldKind k);

inline constexpr int kMultidisciplinaryCode = 1000;

struct AsjcField {
    int code = 0;  // 4-digit narrow field code
    std::string name;

    int broad_code() const { return code / 100; }
    FieldKind kind() const { return kind_of(code); }

    static FieldKind kind_of(int code);
};

class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The set of known ASJC narrow fields, keyed by code.
class FieldRegistry {
public:
    void add(AsjcField field);
    bool contains(int code) const { return fields_.count(code) > 0; }
    const AsjcField& at(int code) const;
    const std::map<int, AsjcField>& fields() const { return fields_; }
    std::size_t size() const { return fields_.size(); }

    // The full ASJC code table shipped with the tool.
    static const FieldRegistry& bundled();

private:
    std::map<int, AsjcField> fields_;
};

}  // namespace scopeaudit
