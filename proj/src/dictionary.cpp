#include "haltkit/dictionary.hpp"

namespace haltkit {

const ProcDecl& Dictionary::entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw NameError("unknown procedure '" + name + "'");
    return it->second;
}

const Intrinsic& Dictionary::intrinsic(const std::string& name) const {
    auto it = intrinsics_.find(name);
    if (it == intrinsics_.end()) throw NameError("unknown intrinsic '" + name + "'");
    return it->second;
}

std::vector<std::string> Dictionary::entry_names() const {
    std::vector<std::string> names;
    names.reserve(entries_.size());
    for (const auto& [name, _] : entries_) names.push_back(name);
    return names;
}

std::vector<std::string> Dictionary::intrinsic_names() const {
    std::vector<std::string> names;
    names.reserve(intrinsics_.size());
    for (const auto& [name, _] : intrinsics_) names.push_back(name);
    return names;
}

Dictionary Dictionary::with_entry(ProcDecl decl) const {
    if (has_name(decl.name))
        throw NameError("duplicate name '" + decl.name + "'");
    Dictionary next = *this;
    next.entries_.emplace(decl.name, std::move(decl));
    return next;
}

Dictionary Dictionary::with_intrinsic(Intrinsic intr) const {
    if (has_name(intr.name))
        throw NameError("duplicate name '" + intr.name + "'");
    Dictionary next = *this;
    next.intrinsics_.emplace(intr.name, std::move(intr));
    return next;
}

} // namespace haltkit
