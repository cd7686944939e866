#include "mldeg/variables.hpp"
#include "mldeg/errors.hpp"

namespace mldeg {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw VariableMismatchError("empty variable name");
        auto [it, inserted] = index_.emplace(names_[i], i);
        (void)it;
        if (!inserted)
            throw VariableMismatchError("duplicate variable name: " + names_[i]);
    }
}

std::optional<std::size_t> VariableSet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t VariableSet::index_of(const std::string& name) const {
    auto idx = find(name);
    if (!idx) throw VariableMismatchError("unknown variable: " + name);
    return *idx;
}

VarSetPtr make_varset(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

VarSetPtr make_indexed_varset(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return make_varset(std::move(names));
}

std::string fresh_name(const VariableSet& taken, const std::string& base) {
    std::string name = base;
    while (taken.contains(name)) name += "_";
    return name;
}

} // namespace mldeg
