#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tspga/city.hpp"

namespace tspga {

using Order = std::vector<std::size_t>;

/// An individual: a visiting order over a CityList and its cached
/// closed-tour length (the fitness cost, lower is better).
struct Route {
    Order order;
    double length = 0.0;

    friend bool operator==(const Route&, const Route&) = default;
};

bool is_permutation_of_n(std::span<const std::size_t> order, std::size_t n) noexcept;

/// Closed-tour length: edges summed left to right, closing edge last.
/// Throws ContractError unless `order` is a permutation of 0..n-1.
double tour_length(std::span<const std::size_t> order, const CityList& cities);

/// Validates `order` and caches its length.
Route make_route(Order order, const CityList& cities);

/// Identity order 0..n-1.
Order identity_order(std::size_t n);

}  // namespace tspga
