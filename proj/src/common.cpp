#include "idem/common.hpp"

#include <algorithm>

namespace idem {

void canonicalize_family(std::vector<bits>& family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::string subset_label(const bits& b, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (int i : b.elements()) {
        if (!first) out += ",";
        out += names[i];
        first = false;
    }
    return out + "}";
}

}  // namespace idem
