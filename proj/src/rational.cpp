#include "s2det/rational.hpp"

#include "s2det/error.hpp"

#include <cctype>

namespace s2det {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw FormatError("not a rational: \"" + text + "\"");
    Rat value;
    if (mpq_set_str(value.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw FormatError("not a rational: \"" + text + "\"");
    if (value.get_den() == 0)
        throw FormatError("zero denominator in rational: \"" + text + "\"");
    value.canonicalize();
    return value;
}

std::string rat_to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace s2det
