#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tspga {

/// A named point in the plane; one gene of a chromosome.
struct City {
    std::string name;
    double x = 0.0;
    double y = 0.0;
};

/// Ordered, non-empty set of cities with pairwise distinct names.
class CityList {
public:
    /// Throws ContractError if the cities violate the list invariants.
    explicit CityList(std::vector<City> cities);

    std::size_t size() const noexcept { return cities_.size(); }
    const City& operator[](std::size_t i) const { return cities_[i]; }
    std::span<const City> cities() const noexcept { return cities_; }

    /// The first `n` cities in file order.
    CityList prefix(std::size_t n) const;

    auto begin() const noexcept { return cities_.begin(); }
    auto end() const noexcept { return cities_.end(); }

private:
    std::vector<City> cities_;
};

/// Parses `name,x,y` lines (no header, blank lines skipped, fields trimmed).
/// Throws ParseError naming the offending line.
CityList parse_cities(std::string_view text);

CityList load_cities(const std::filesystem::path& path);

/// Writes cities back in the format accepted by parse_cities, with
/// shortest round-trip coordinates.
std::string to_csv(const CityList& cities);

/// Euclidean distance, always evaluated as sqrt(dx*dx + dy*dy).
inline double distance(const City& a, const City& b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace tspga
