#pragma once

#include <cstddef>

#include "tspga/city.hpp"
#include "tspga/route.hpp"

namespace tspga {

/// Largest instance the exhaustive search accepts.
inline constexpr std::size_t kBruteForceMaxCities = 12;

/// Exact optimum by enumeration of the (n-1)!/2 canonical tours: city 0
/// first and order[1] < order[n-1]. Among equal lengths the
/// lexicographically smallest order wins. Throws ContractError for n > 12.
///
/// Splits the search over (order[1], order[2]) prefixes with OpenMP; the
/// result is identical to brute_force_optimum_serial for any thread count.
Route brute_force_optimum(const CityList& cities);

/// Single-threaded reference enumeration in plain lexicographic order.
Route brute_force_optimum_serial(const CityList& cities);

}  // namespace tspga
