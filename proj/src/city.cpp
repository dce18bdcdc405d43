#include "tspga/city.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "tspga/error.hpp"

namespace tspga {
namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view field, double& out) {
    if (field.empty()) return false;
    if (field.front() == '+') field.remove_prefix(1);
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

void append_real(std::string& out, double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.append(buf.data(), ptr);
}

}  // namespace

CityList::CityList(std::vector<City> cities) : cities_(std::move(cities)) {
    if (cities_.empty()) throw ContractError("city list must not be empty");
    std::unordered_set<std::string_view> names;
    for (const auto& c : cities_) {
        if (c.name.empty()) throw ContractError("city name must not be empty");
        if (!std::isfinite(c.x) || !std::isfinite(c.y))
            throw ContractError("city '" + c.name + "' has a non-finite coordinate");
        if (!names.insert(c.name).second)
            throw ContractError("duplicate city name '" + c.name + "'");
    }
}

CityList CityList::prefix(std::size_t n) const {
    if (n == 0 || n > cities_.size())
        throw ContractError("prefix of " + std::to_string(n) + " cities requested from a list of " +
                            std::to_string(cities_.size()));
    return CityList({cities_.begin(), cities_.begin() + static_cast<std::ptrdiff_t>(n)});
}

CityList parse_cities(std::string_view text) {
    std::vector<City> cities;
    std::unordered_set<std::string> names;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const auto line = trim(raw);
        if (line.empty()) continue;

        std::array<std::string_view, 3> fields;
        std::size_t count = 0;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            if (count < fields.size()) fields[count] = trim(rest.substr(0, comma));
            ++count;
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (count != 3)
            throw ParseError("expected 3 fields (name,x,y), found " + std::to_string(count), line_no);

        City city{std::string(fields[0]), 0.0, 0.0};
        if (city.name.empty()) throw ParseError("empty city name", line_no);
        if (!parse_real(fields[1], city.x))
            throw ParseError("x coordinate '" + std::string(fields[1]) + "' is not a number", line_no);
        if (!parse_real(fields[2], city.y))
            throw ParseError("y coordinate '" + std::string(fields[2]) + "' is not a number", line_no);
        if (!names.insert(city.name).second)
            throw ParseError("duplicate city name '" + city.name + "'", line_no);
        cities.push_back(std::move(city));
    }
    if (cities.empty()) throw ParseError("no cities in input");
    return CityList(std::move(cities));
}

CityList load_cities(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open city file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cities(ss.str());
}

std::string to_csv(const CityList& cities) {
    std::string out;
    for (const auto& c : cities) {
        out += c.name;
        out += ',';
        append_real(out, c.x);
        out += ',';
        append_real(out, c.y);
        out += '\n';
    }
    return out;
}

}  // namespace tspga
