#include "plethy/weintraub.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "plethy/error.hpp"

namespace plethy {

const char* to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::Verified: return "verified";
        case CaseStatus::Exhausted: return "exhausted";
        case CaseStatus::Failed: return "failed";
    }
    return "unknown";
}

std::vector<int> base_word(int k, int n) {
    std::vector<int> w;
    w.reserve(static_cast<size_t>(k) * n);
    for (int letter = 1; letter <= k; ++letter)
        for (int i = 0; i < n; ++i) w.push_back(letter);
    return w;
}

std::vector<std::vector<int>> arrangement_words(int k, int n) {
    if (k < 1 || n < 1) throw domain_error("arrangement_words: k and n must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> w = base_word(k, n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

PermutationMap canonical_pi(const std::vector<int>& arrangement, int k, int n) {
    const std::vector<int> base = base_word(k, n);
    std::vector<int> check = arrangement;
    std::sort(check.begin(), check.end());
    if (check != base)
        throw domain_error("canonical_pi: word is not a rearrangement of the base word");
    // i-th base position of a letter goes to the i-th arrangement position of
    // the same letter; with the base word grouped by letter this is the
    // lexicographically least image vector.
    std::vector<std::vector<int>> slots(static_cast<size_t>(k) + 1);
    for (int j = 0; j < static_cast<int>(arrangement.size()); ++j)
        slots[static_cast<size_t>(arrangement[static_cast<size_t>(j)])].push_back(j);
    std::vector<int> images(arrangement.size());
    std::vector<int> used(static_cast<size_t>(k) + 1, 0);
    for (size_t i = 0; i < base.size(); ++i) {
        const int letter = base[i];
        images[i] = slots[static_cast<size_t>(letter)][static_cast<size_t>(used[static_cast<size_t>(letter)]++)];
    }
    return PermutationMap(std::move(images));
}

PermutationMap interleave_sigma(int nk) {
    std::vector<int> images(static_cast<size_t>(2 * nk));
    for (int i = 0; i < nk; ++i) images[static_cast<size_t>(i)] = 2 * i;
    for (int i = 0; i < nk; ++i) images[static_cast<size_t>(nk + i)] = 2 * i + 1;
    return PermutationMap(std::move(images));
}

SparseKet phi_power_ket(int d, int n, int k) {
    SparseKet phi(d, 2 * n);
    for (int i = 1; i <= d; ++i)
        phi.add(std::vector<int>(static_cast<size_t>(2 * n), i), 1);
    SparseKet psi(d, 0);
    psi.add({}, 1);
    for (int copy = 0; copy < k; ++copy) psi = tensor(psi, phi);
    return psi;
}

namespace {

void check_case_parameters(const Partition& lambda, int k, int n, int d) {
    if (k < 1 || n < 1 || d < 1) throw domain_error("k, n, d must be positive");
    if (lambda.size() != k * n) throw domain_error("|lambda| must equal k*n");
    if (lambda.length() > k) throw domain_error("lambda must have at most k parts");
    if (k > d) throw domain_error("k must not exceed d");
}

}  // namespace

Rational sum_of_squares(const Partition& lambda, const RationalMatrix& a, const PermutationMap& pi,
                        int d, int k, int n) {
    check_case_parameters(lambda, k, n, d);
    if (a.dim() != d) throw domain_error("sum_of_squares: matrix dimension must be d");
    if (pi.degree() != k * n) throw domain_error("sum_of_squares: permutation degree must be nk");
    const SparseKet v_lambda = highest_weight_vector(lambda, d);
    Rational total = 0;
    std::vector<int> tuple(static_cast<size_t>(k), 1);
    std::vector<int> word(static_cast<size_t>(k) * n);
    for (;;) {
        for (int b = 0; b < k; ++b)
            for (int t = 0; t < n; ++t)
                word[static_cast<size_t>(b * n + t)] = tuple[static_cast<size_t>(b)];
        const Rational overlap = overlap_with_matrix(v_lambda, a, pi.apply_to_word(word));
        if (overlap != 0) total += overlap * overlap;
        int pos = k - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == d) {
            tuple[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<size_t>(pos)];
    }
    return total;
}

std::optional<Certificate> find_certificate(const Partition& lambda, int k, int n, int d,
                                            unsigned long long seed, int budget) {
    check_case_parameters(lambda, k, n, d);
    const SparseKet v_lambda = highest_weight_vector(lambda, d);
    const std::vector<std::vector<int>> words = arrangement_words(k, n);

    std::mt19937_64 rng(seed);
    // Raw modulo keeps the draw sequence identical across standard libraries.
    auto draw_entry = [&rng]() -> long { return static_cast<long>(rng() % 7) - 3; };

    for (int attempt = 1; attempt <= budget; ++attempt) {
        RationalMatrix a = RationalMatrix::identity(d);
        if (attempt > 1) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) a.at(i, j) = draw_entry();
            if (a.det() == 0) continue;  // rejected draw still consumes one attempt
        }
        for (const std::vector<int>& x : words) {
            const Rational overlap = overlap_with_matrix(v_lambda, a, x);
            if (overlap == 0) continue;
            Certificate cert;
            cert.lambda = lambda;
            cert.k = k;
            cert.n = n;
            cert.d = d;
            cert.a = a;
            cert.arrangement = x;
            cert.pi = canonical_pi(x, k, n);
            cert.overlap = overlap;
            cert.sum_of_squares = sum_of_squares(lambda, a, cert.pi, d, k, n);
            cert.attempts = attempt;
            if (cert.sum_of_squares < overlap * overlap)
                throw std::logic_error("find_certificate: sum of squares below its witnessed term");
            return cert;
        }
    }
    return std::nullopt;
}

VerificationReport verify_case(const Partition& lambda, int k, int n, int d,
                               unsigned long long seed, int budget, bool check_projector,
                               int degree_limit) {
    const auto t0 = std::chrono::steady_clock::now();
    check_case_parameters(lambda, k, n, d);
    if (2LL * k * n > degree_limit)
        throw resource_error("verify_case: 2kn exceeds the degree limit");

    VerificationReport report;
    report.lambda = lambda;
    report.k = k;
    report.n = n;
    report.d = d;
    report.certificate = find_certificate(lambda, k, n, d, seed, budget);
    report.oracle_multiplicity = plethysm_coefficient(scale(lambda, 2), k, 2 * n, degree_limit);

    if (!report.certificate) {
        report.status = CaseStatus::Exhausted;
    } else if (report.oracle_multiplicity < 1) {
        report.status = CaseStatus::Failed;
        report.failure = "certificate found but the oracle multiplicity is zero";
    } else {
        report.status = CaseStatus::Verified;
        if (check_projector && 2 * k * n <= 8) {
            const Certificate& cert = *report.certificate;
            const SparseKet w = permute(cert.pi.inverse(),
                                        apply_matrix(cert.a, highest_weight_vector(lambda, d)));
            const SparseKet v = permute(interleave_sigma(k * n), tensor(w, w));
            if (isotypic_project(scale(lambda, 2), v) != v) {
                report.status = CaseStatus::Failed;
                report.failure = "isotypic projector does not fix sigma(w (x) w)";
            } else if (inner(v, phi_power_ket(d, n, k)) != cert.sum_of_squares) {
                report.status = CaseStatus::Failed;
                report.failure = "inner product with phi^k disagrees with the lazy sum of squares";
            } else {
                report.projector_checked = true;
            }
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

std::vector<VerificationReport> sweep(int k_max, int n_max, int d_max, unsigned long long seed,
                                      int budget, bool check_projector, int degree_limit) {
    if (k_max < 1 || n_max < 1 || d_max < 1) throw domain_error("sweep: bounds must be positive");
    std::vector<VerificationReport> reports;
    for (int k = 1; k <= std::min(k_max, d_max); ++k)
        for (int d = k; d <= d_max; ++d)
            for (int n = 1; n <= n_max; ++n)
                for (const Partition& lambda : enumerate_partitions(k * n, k))
                    reports.push_back(
                        verify_case(lambda, k, n, d, seed, budget, check_projector, degree_limit));
    return reports;
}

}  // namespace plethy
