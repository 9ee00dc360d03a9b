#include "plethy/gct.hpp"

#include <map>

#include "plethy/characters.hpp"
#include "plethy/error.hpp"
#include "plethy/symfunc.hpp"

namespace plethy {

std::optional<GctWitness> perorbit_occurs(const GctQuery& query, long long search_limit) {
    if (query.d < 1 || query.ell < 1) throw domain_error("perorbit_occurs: d and ell must be positive");
    const int size = query.ell * query.d;
    if (query.lambda.size() != size)
        throw domain_error("perorbit_occurs: |lambda| must equal ell*d");
    if (size > 10) throw resource_error("perorbit_occurs: ell*d > 10");

    const std::vector<Partition> candidates = enumerate_partitions(size, query.d);
    std::map<Partition, bool> in_plethysm;
    auto occurs_in_plethysm = [&](const Partition& mu) {
        auto it = in_plethysm.find(mu);
        if (it == in_plethysm.end())
            it = in_plethysm.emplace(mu, plethysm_coefficient(mu, query.d, query.ell) > 0).first;
        return it->second;
    };

    long long scanned = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        for (size_t j = i; j < candidates.size(); ++j) {
            if (++scanned > search_limit)
                throw resource_error("perorbit_occurs: pair scan exceeded the search limit");
            const Partition& mu = candidates[i];
            const Partition& nu = candidates[j];
            if (!occurs_in_plethysm(mu) || !occurs_in_plethysm(nu)) continue;
            const bool positive = (mu == nu) ? symmetric_kronecker(query.lambda, mu) > 0
                                             : kronecker(query.lambda, mu, nu) > 0;
            if (positive) return GctWitness{mu, nu};
        }
    }
    return std::nullopt;
}

}  // namespace plethy
