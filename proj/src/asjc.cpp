#include "scopeaudit/asjc.hpp"

namespace scopeaudit {

const char* to_string(FieldKind k) {
    switch (k) {
        case FieldKind::regular: return "regular";
        case FieldKind::all: return "all";
        case FieldKind::misc: return "misc";
        case FieldKind::multidisciplinary: return "multidisciplinary";
    }
    return "?";
}

FieldKind AsjcField::kind_of(int code) {
    if (code == kMultidisciplinaryCode) return FieldKind::multidisciplinary;
    if (code % 100 == 0) return FieldKind::all;
    if (code % 100 == 1) return FieldKind::misc;
    return FieldKind::regular;
}

void FieldRegistry::add(AsjcField field) {
    if (field.code < 1000 || field.code > 9999)
        throw RegistryError("field code must be 4 digits: " + std::to_string(field.code));
    fields_[field.code] = std::move(field);
}

const AsjcField& FieldRegistry::at(int code) const {
    auto it = fields_.find(code);
    if (it == fields_.end())
        throw RegistryError("unknown field code " + std::to_string(code));
    return it->second;
}

const FieldRegistry& FieldRegistry::bundled() {
    static const FieldRegistry registry = [] {
        struct Entry { int code; const char* name; };
        static const Entry table[] = {
#include "asjc_table.inc"
        };
        FieldRegistry r;
        for (const auto& e : table) r.add({e.code, e.name});
        return r;
    }();
    return registry;
}

}  // namespace scopeaudit
