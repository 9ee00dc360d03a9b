#include "plethy/json_io.hpp"

#include "plethy/error.hpp"

namespace plethy {

Json partition_to_json(const Partition& lambda) {
    return Json(lambda.parts());
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw domain_error("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

Json ket_to_json(const SparseKet& v) {
    Json j;
    j["d"] = v.d();
    j["q"] = v.q();
    Json terms = Json::array();
    for (const auto& [word, coef] : v.terms()) {
        Json t;
        t["word"] = word;
        t["coef"] = rational_to_string(coef);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SparseKet ket_from_json(const Json& j) {
    if (!j.contains("d") || !j.contains("q") || !j.contains("terms"))
        throw domain_error("ket JSON must contain d, q, terms");
    SparseKet v(j.at("d").get<int>(), j.at("q").get<int>());
    for (const Json& t : j.at("terms"))
        v.add(t.at("word").get<std::vector<int>>(),
              rational_from_string(t.at("coef").get<std::string>()));
    return v;
}

Json matrix_to_json(const RationalMatrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.dim(); ++j) row.push_back(rational_to_string(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json tableau_to_json(const Tableau& t) {
    return Json(t.rows);
}

Json plethysm_to_json(int k, int m, const std::vector<std::pair<Partition, long long>>& terms) {
    Json j;
    j["k"] = k;
    j["m"] = m;
    Json arr = Json::array();
    for (const auto& [lambda, mult] : terms) {
        Json t;
        t["lambda"] = partition_to_json(lambda);
        t["mult"] = mult;
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["lambda"] = partition_to_json(report.lambda);
    j["k"] = report.k;
    j["n"] = report.n;
    j["d"] = report.d;
    j["status"] = to_string(report.status);
    if (report.certificate) {
        const Certificate& cert = *report.certificate;
        j["a"] = matrix_to_json(cert.a);
        j["arrangement"] = cert.arrangement;
        j["overlap"] = rational_to_string(cert.overlap);
        j["sum_of_squares"] = rational_to_string(cert.sum_of_squares);
    }
    j["oracle_multiplicity"] = report.oracle_multiplicity;
    if (!report.failure.empty()) j["failure"] = report.failure;
    return j;
}

Json gct_to_json(const std::optional<GctWitness>& witness) {
    Json j;
    j["occurs"] = witness.has_value();
    if (witness) {
        Json w;
        w["mu"] = partition_to_json(witness->mu);
        w["nu"] = partition_to_json(witness->nu);
        j["witness"] = std::move(w);
    }
    return j;
}

}  // namespace plethy
