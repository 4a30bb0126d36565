#include "edd/smith.hpp"

namespace edd {

std::vector<int> partial_multiplicities_at(const SmithDecomposition<Poly>& D, const Rational& lambda) {
    std::vector<int> orders;
    for (const Poly& f : D.invariant_factors) {
        const int k = root_order(f, lambda);
        if (k > 0) orders.push_back(k);
    }
    std::sort(orders.begin(), orders.end(), std::greater<int>());
    return orders;
}

}  // namespace edd
