#include "tspga/route.hpp"

#include <numeric>

#include "tspga/error.hpp"

namespace tspga {

bool is_permutation_of_n(std::span<const std::size_t> order, std::size_t n) noexcept {
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto idx : order) {
        if (idx >= n || seen[idx]) return false;
        seen[idx] = true;
    }
    return true;
}

double tour_length(std::span<const std::size_t> order, const CityList& cities) {
    if (!is_permutation_of_n(order, cities.size()))
        throw ContractError("route is not a permutation of 0.." + std::to_string(cities.size() - 1));
    double total = 0.0;
    for (std::size_t i = 1; i < order.size(); ++i)
        total += distance(cities[order[i - 1]], cities[order[i]]);
    total += distance(cities[order.back()], cities[order.front()]);
    return total;
}

Route make_route(Order order, const CityList& cities) {
    const double len = tour_length(order, cities);
    return Route{std::move(order), len};
}

Order identity_order(std::size_t n) {
    Order order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

}  // namespace tspga
