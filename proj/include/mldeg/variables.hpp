#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mldeg {

// An ordered list of distinct variable names.  The order is fixed at
// construction; every polynomial refers to exactly one VariableSet.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const;
    // Throws VariableMismatchError if the name is unknown.
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return find(name).has_value(); }

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }
    bool operator!=(const VariableSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VariableSet>;

VarSetPtr make_varset(std::vector<std::string> names);

// Convenience: {prefix0, prefix1, ..., prefix(n-1)}.
VarSetPtr make_indexed_varset(const std::string& prefix, std::size_t n);

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Picks a name not present in `taken`, starting from `base` and appending
// underscores as needed.
std::string fresh_name(const VariableSet& taken, const std::string& base);

} // namespace mldeg
