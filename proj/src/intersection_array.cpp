#include "drgforge/intersection_array.hpp"

#include <cctype>

#include "drgforge/errors.hpp"

namespace drgforge {

long long IntersectionArray::a(int i) const {
    const long long bi = (i < static_cast<int>(b.size())) ? b[i] : 0;
    const long long ci = (i >= 1 && i <= static_cast<int>(c.size())) ? c[i - 1] : 0;
    return k() - bi - ci;
}

Rat IntersectionArray::level_size(int i) const {
    Rat v = 1;
    for (int j = 0; j < i; ++j) v *= Rat(b[j], c[j]);
    return v;
}

Rat IntersectionArray::vertex_count() const {
    Rat total = 0;
    for (int i = 0; i <= diameter(); ++i) total += level_size(i);
    return total;
}

std::optional<std::string> IntersectionArray::validate() const {
    if (b.empty() || c.empty()) return "empty array";
    if (b.size() != c.size()) return "b and c sequences must have equal length D";
    if (c[0] != 1) return "c_1 = " + std::to_string(c[0]) + ", must be 1";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] <= 0) return "b_" + std::to_string(i) + " = " + std::to_string(b[i]) + " <= 0";
        if (c[i] <= 0)
            return "c_" + std::to_string(i + 1) + " = " + std::to_string(c[i]) + " <= 0";
    }
    for (int i = 1; i <= diameter(); ++i) {
        if (a(i) < 0)
            return "a_" + std::to_string(i) + " = " + std::to_string(a(i)) + " < 0";
    }
    for (int i = 1; i <= diameter(); ++i) {
        const Rat ki = level_size(i);
        if (!rat_is_integer(ki))
            return "k_" + std::to_string(i) + " = " + rat_to_string(ki) + " is not an integer";
    }
    return std::nullopt;
}

IntersectionArray IntersectionArray::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.size() < 5 || compact.front() != '{' || compact.back() != '}')
        throw ParseError("intersection array must look like {b0,...;c1,...}");
    compact = compact.substr(1, compact.size() - 2);
    const auto semi = compact.find(';');
    if (semi == std::string::npos) throw ParseError("missing ';' separator");

    auto parse_list = [](std::string_view part) {
        std::vector<long long> out;
        std::size_t pos = 0;
        while (pos < part.size()) {
            std::size_t next = part.find(',', pos);
            if (next == std::string_view::npos) next = part.size();
            const std::string token(part.substr(pos, next - pos));
            if (token.empty()) throw ParseError("empty entry in intersection array");
            try {
                std::size_t used = 0;
                const long long v = std::stoll(token, &used);
                if (used != token.size()) throw ParseError("bad integer '" + token + "'");
                out.push_back(v);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad integer '" + token + "'");
            } catch (const std::out_of_range&) {
                throw ParseError("integer out of range '" + token + "'");
            }
            pos = next + 1;
        }
        return out;
    };

    IntersectionArray arr;
    arr.b = parse_list(std::string_view(compact).substr(0, semi));
    arr.c = parse_list(std::string_view(compact).substr(semi + 1));
    if (arr.b.empty() || arr.c.empty()) throw ParseError("empty b or c sequence");
    if (arr.b.size() != arr.c.size())
        throw ParseError("b and c sequences must have equal length");
    return arr;
}

std::string IntersectionArray::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b[i]);
    }
    out += ";";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    out += "}";
    return out;
}

}  // namespace drgforge
