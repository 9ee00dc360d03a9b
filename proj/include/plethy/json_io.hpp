#ifndef PLETHY_JSON_IO_HPP
#define PLETHY_JSON_IO_HPP

#include <json.hpp>

#include "plethy/gct.hpp"
#include "plethy/partition.hpp"
#include "plethy/symfunc.hpp"
#include "plethy/tableaux.hpp"
#include "plethy/tensor.hpp"
#include "plethy/weintraub.hpp"

namespace plethy {

// Key order matters for byte-stable output, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// {"d":2,"q":4,"terms":[{"word":[1,2,1,2],"coef":"-1/2"},...]} with words in
/// lexicographic order and coefficients as exact fraction strings.
Json ket_to_json(const SparseKet& v);
SparseKet ket_from_json(const Json& j);

/// [["1","0"],["0","1"]] -- entries as exact fraction strings.
Json matrix_to_json(const RationalMatrix& a);

Json tableau_to_json(const Tableau& t);

/// {"k":..,"m":..,"terms":[{"lambda":[...],"mult":..},...]}
Json plethysm_to_json(int k, int m, const std::vector<std::pair<Partition, long long>>& terms);

/// The certificate/report shape used by the weintraub and sweep commands.
Json report_to_json(const VerificationReport& report);

Json gct_to_json(const std::optional<GctWitness>& witness);

}  // namespace plethy

#endif
