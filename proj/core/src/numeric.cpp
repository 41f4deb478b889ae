#include "mukai/numeric.hpp"

namespace mukai {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational literal: '" + text + "'");
    }
}

} // namespace mukai
