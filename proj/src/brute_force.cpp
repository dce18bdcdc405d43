#include "tspga/brute_force.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "tspga/error.hpp"

namespace tspga {
namespace {

void check_size(const CityList& cities) {
    if (cities.size() > kBruteForceMaxCities)
        throw ContractError("brute force refuses " + std::to_string(cities.size()) +
                            " cities (limit " + std::to_string(kBruteForceMaxCities) + ")");
}

// Flat distance cache; entries are the same values distance() yields, so
// sums in tour order match tour_length bit for bit.
class DistanceTable {
public:
    explicit DistanceTable(const CityList& cities) : n_(cities.size()), d_(n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) d_[i * n_ + j] = distance(cities[i], cities[j]);
    }

    double tour(const Order& order) const {
        double total = 0.0;
        for (std::size_t i = 1; i < order.size(); ++i) total += d_[order[i - 1] * n_ + order[i]];
        total += d_[order.back() * n_ + order.front()];
        return total;
    }

private:
    std::size_t n_;
    std::vector<double> d_;
};

struct Best {
    double length = std::numeric_limits<double>::infinity();
    Order order;

    void offer(double len, const Order& candidate) {
        if (len < length || (len == length && candidate < order)) {
            length = len;
            order = candidate;
        }
    }
};

Route trivial(const CityList& cities) {
    return make_route(identity_order(cities.size()), cities);
}

// Enumerates all canonical tours starting with `prefix`, in lexicographic order.
void scan_suffixes(const DistanceTable& table, Order order, std::size_t fixed, Best& best) {
    const std::size_t last = order.size() - 1;
    do {
        if (order[1] > order[last]) continue;
        best.offer(table.tour(order), order);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(fixed), order.end()));
}

}  // namespace

Route brute_force_optimum_serial(const CityList& cities) {
    check_size(cities);
    if (cities.size() <= 2) return trivial(cities);
    const DistanceTable table(cities);
    Best best;
    scan_suffixes(table, identity_order(cities.size()), 1, best);
    return Route{best.order, tour_length(best.order, cities)};
}

Route brute_force_optimum(const CityList& cities) {
    check_size(cities);
    const std::size_t n = cities.size();
    if (n <= 3) return brute_force_optimum_serial(cities);

    const DistanceTable table(cities);
    // One task per ordered pair (order[1], order[2]); tasks are in
    // lexicographic order, so a sequential reduction reproduces the serial tie-break.
    std::vector<std::pair<std::size_t, std::size_t>> prefixes;
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
            if (a != b) prefixes.emplace_back(a, b);

    std::vector<Best> partial(prefixes.size());
    const auto tasks = static_cast<std::ptrdiff_t>(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t t = 0; t < tasks; ++t) {
        const auto [a, b] = prefixes[static_cast<std::size_t>(t)];
        Order order{0, a, b};
        for (std::size_t c = 1; c < n; ++c)
            if (c != a && c != b) order.push_back(c);
        scan_suffixes(table, std::move(order), 3, partial[static_cast<std::size_t>(t)]);
    }

    Best best;
    for (const auto& p : partial)
        if (!p.order.empty()) best.offer(p.length, p.order);
    return Route{best.order, tour_length(best.order, cities)};
}

}  // namespace tspga
