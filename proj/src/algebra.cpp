#include "casimir/algebra.hpp"

namespace casimir {

std::string describe_element(const Element& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        std::string c = a[i].to_string();
        bool composite = c.find_first_of("+ ", 1) != std::string::npos;
        if (composite) c = "(" + c + ")";
        if (!out.empty()) out += " + ";
        out += c + "*x" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace casimir
