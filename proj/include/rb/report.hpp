#pragma once

#include <string>
#include <vector>

namespace rb {

struct CheckItem {
    std::string name;
    bool pass = true;
    std::string detail;
};

// Itemized pass/fail results; order of insertion is the report order.
struct Report {
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({name, pass, detail});
    }
    void merge(const Report& o, const std::string& prefix = "") {
        for (const auto& it : o.items) items.push_back({prefix + it.name, it.pass, it.detail});
    }
    bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return &it;
        return nullptr;
    }
};

}  // namespace rb
