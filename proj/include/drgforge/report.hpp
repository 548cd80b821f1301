#pragma once

#include <string>
#include <vector>

namespace drgforge {

struct CheckItem {
    std::string id;
    bool pass = false;
    std::string details;
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string id, bool pass, std::string details = {}) {
        items.push_back({std::move(id), pass, std::move(details)});
    }

    bool all_pass() const {
        for (const auto& item : items)
            if (!item.pass) return false;
        return true;
    }
};

}  // namespace drgforge
