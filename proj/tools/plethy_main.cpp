// plethy: exact plethysm decompositions, symmetric-group character
// calculations, and highest-weight certificates, with table or JSON output.
//
// Exit codes: 0 success, 2 certificate search exhausted, 3 invalid input or
// resource guard, 4 internal cross-check failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "plethy/characters.hpp"
#include "plethy/error.hpp"
#include "plethy/gct.hpp"
#include "plethy/json_io.hpp"
#include "plethy/partition.hpp"
#include "plethy/symfunc.hpp"
#include "plethy/tableaux.hpp"
#include "plethy/weintraub.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExhausted = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitCrossCheck = 4;

struct Config {
    unsigned long long seed = 0;
    int budget = 64;
    int degree_limit = plethy::kDefaultDegreeLimit;
    std::string format = "table";
};

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw plethy::domain_error(std::string("malformed ") + what + ": '" + s + "'");
        }
        if (pos != tok.size() || v < 0)
            throw plethy::domain_error(std::string("malformed ") + what + ": '" + s + "'");
        out.push_back(v);
    }
    if (!s.empty() && s.back() == ',')
        throw plethy::domain_error(std::string("malformed ") + what + ": '" + s + "'");
    return out;
}

void emit(const plethy::Json& j) {
    std::cout << j.dump() << "\n";
}

void print_report_line(const plethy::VerificationReport& r) {
    std::cout << "k=" << r.k << " n=" << r.n << " d=" << r.d << " lambda=(" << r.lambda.to_string()
              << ") status=" << plethy::to_string(r.status);
    if (r.certificate) {
        std::cout << " arrangement=";
        for (int letter : r.certificate->arrangement) std::cout << letter;
        std::cout << " overlap=" << plethy::rational_to_string(r.certificate->overlap)
                  << " S=" << plethy::rational_to_string(r.certificate->sum_of_squares)
                  << " attempts=" << r.certificate->attempts;
    }
    std::cout << " mult(2lambda)=" << r.oracle_multiplicity;
    if (r.projector_checked) std::cout << " projector=ok";
    if (!r.failure.empty()) std::cout << " failure=\"" << r.failure << "\"";
    std::cout << " (" << r.elapsed_ms << " ms)\n";
}

int reports_exit_code(const std::vector<plethy::VerificationReport>& reports) {
    bool exhausted = false;
    for (const auto& r : reports) {
        if (r.status == plethy::CaseStatus::Failed) return kExitCrossCheck;
        if (r.status == plethy::CaseStatus::Exhausted) exhausted = true;
    }
    return exhausted ? kExitExhausted : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace plethy;

    CLI::App app{"plethy: exact plethysm decompositions and highest-weight certificates"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("PLETHYRS_DEGREE_LIMIT")) {
        try {
            cfg.degree_limit = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "invalid PLETHYRS_DEGREE_LIMIT: '" << env << "'\n";
            return kExitInvalid;
        }
        if (cfg.degree_limit < 1) {
            std::cerr << "invalid PLETHYRS_DEGREE_LIMIT: must be positive\n";
            return kExitInvalid;
        }
    }

    auto add_format = [&cfg](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
    };

    // plethysm
    int opt_k = 0, opt_m = 0;
    auto* cmd_plethysm = app.add_subcommand("plethysm", "Schur decomposition of h_k[h_m]");
    cmd_plethysm->add_option("-k", opt_k, "outer symmetric power")->required();
    cmd_plethysm->add_option("-m", opt_m, "inner symmetric power")->required();
    add_format(cmd_plethysm);

    // coefficient
    std::string opt_lambda;
    auto* cmd_coeff = app.add_subcommand("coefficient", "multiplicity of one Weyl module in h_k[h_m]");
    cmd_coeff->add_option("--lambda", opt_lambda, "partition, e.g. 4,2")->required();
    cmd_coeff->add_option("-k", opt_k, "outer symmetric power")->required();
    cmd_coeff->add_option("-m", opt_m, "inner symmetric power")->required();
    add_format(cmd_coeff);

    // kostka
    std::string opt_shape, opt_content;
    bool opt_list = false;
    auto* cmd_kostka = app.add_subcommand("kostka", "Kostka number / SSYT enumeration");
    cmd_kostka->add_option("--shape", opt_shape, "shape partition")->required();
    cmd_kostka->add_option("--content", opt_content, "content vector (zeros allowed)")->required();
    cmd_kostka->add_flag("--list", opt_list, "emit the tableaux as JSON row arrays");
    add_format(cmd_kostka);

    // character
    std::string opt_class;
    auto* cmd_character = app.add_subcommand("character", "symmetric group character chi^lambda(mu)");
    cmd_character->add_option("--lambda", opt_lambda, "shape partition")->required();
    cmd_character->add_option("--class", opt_class, "cycle type partition")->required();
    add_format(cmd_character);

    // kronecker
    std::string opt_mu, opt_nu;
    auto* cmd_kron = app.add_subcommand("kronecker", "Kronecker coefficient g(lambda,mu,nu)");
    cmd_kron->add_option("--lambda", opt_lambda)->required();
    cmd_kron->add_option("--mu", opt_mu)->required();
    cmd_kron->add_option("--nu", opt_nu)->required();
    add_format(cmd_kron);

    // weintraub
    int opt_n = 0, opt_d = 0;
    bool opt_check_projector = false;
    auto* cmd_wein = app.add_subcommand("weintraub", "certificate that 2*lambda occurs in Sym^k(Sym^2n)");
    cmd_wein->add_option("--lambda", opt_lambda, "partition of k*n with at most k parts")->required();
    cmd_wein->add_option("-k", opt_k)->required();
    cmd_wein->add_option("-n", opt_n)->required();
    cmd_wein->add_option("-d", opt_d)->required();
    cmd_wein->add_option("--seed", cfg.seed, "search seed")->capture_default_str();
    cmd_wein->add_option("--budget", cfg.budget, "matrices to try before giving up")->capture_default_str();
    cmd_wein->add_flag("--check-projector", opt_check_projector,
                       "cross-check isotypic membership exactly (2nk <= 8)");
    add_format(cmd_wein);

    // sweep
    int opt_kmax = 0, opt_nmax = 0, opt_dmax = 0;
    auto* cmd_sweep = app.add_subcommand("sweep", "verify every case k <= d <= dmax, n <= nmax");
    cmd_sweep->add_option("--kmax", opt_kmax)->required();
    cmd_sweep->add_option("--nmax", opt_nmax)->required();
    cmd_sweep->add_option("--dmax", opt_dmax)->required();
    cmd_sweep->add_option("--seed", cfg.seed)->capture_default_str();
    cmd_sweep->add_option("--budget", cfg.budget)->capture_default_str();
    cmd_sweep->add_flag("--check-projector", opt_check_projector,
                        "cross-check isotypic membership where 2nk <= 8");
    add_format(cmd_sweep);

    // gct-check
    int opt_ell = 0;
    auto* cmd_gct = app.add_subcommand("gct-check", "permanent-orbit occurrence criterion at toy scale");
    cmd_gct->add_option("--lambda", opt_lambda)->required();
    cmd_gct->add_option("--d", opt_d)->required();
    cmd_gct->add_option("--ell", opt_ell)->required();
    add_format(cmd_gct);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (cmd_plethysm->parsed()) {
            const auto terms = schur_decomposition(opt_k, opt_m, cfg.degree_limit);
            if (cfg.format == "json") {
                emit(plethysm_to_json(opt_k, opt_m, terms));
            } else {
                for (const auto& [lambda, mult] : terms)
                    std::cout << "(" << lambda.to_string() << ")  " << mult << "\n";
            }
        } else if (cmd_coeff->parsed()) {
            const Partition lambda = Partition::from_string(opt_lambda);
            const long long value = plethysm_coefficient(lambda, opt_k, opt_m, cfg.degree_limit);
            if (cfg.format == "json") {
                Json j;
                j["value"] = value;
                emit(j);
            } else {
                std::cout << value << "\n";
            }
        } else if (cmd_kostka->parsed()) {
            const Partition shape = Partition::from_string(opt_shape);
            const std::vector<int> content = parse_int_list(opt_content, "content");
            if (opt_list) {
                Json arr = Json::array();
                for (const Tableau& t : enumerate_ssyt(shape, content))
                    arr.push_back(tableau_to_json(t));
                if (cfg.format == "json") {
                    Json j;
                    j["value"] = static_cast<long long>(arr.size());
                    j["tableaux"] = std::move(arr);
                    emit(j);
                } else {
                    emit(arr);
                }
            } else {
                const long long value = kostka(shape, content);
                if (cfg.format == "json") {
                    Json j;
                    j["value"] = value;
                    emit(j);
                } else {
                    std::cout << value << "\n";
                }
            }
        } else if (cmd_character->parsed()) {
            const Partition lambda = Partition::from_string(opt_lambda);
            const CycleType mu = Partition::from_string(opt_class);
            const long long value = mn_character(lambda, mu);
            if (cfg.format == "json") {
                Json j;
                j["value"] = value;
                emit(j);
            } else {
                std::cout << value << "\n";
            }
        } else if (cmd_kron->parsed()) {
            const long long value = kronecker(Partition::from_string(opt_lambda),
                                              Partition::from_string(opt_mu),
                                              Partition::from_string(opt_nu));
            if (cfg.format == "json") {
                Json j;
                j["value"] = value;
                emit(j);
            } else {
                std::cout << value << "\n";
            }
        } else if (cmd_wein->parsed()) {
            const Partition lambda = Partition::from_string(opt_lambda);
            const VerificationReport report = verify_case(lambda, opt_k, opt_n, opt_d, cfg.seed,
                                                          cfg.budget, opt_check_projector,
                                                          cfg.degree_limit);
            if (cfg.format == "json") emit(report_to_json(report));
            else print_report_line(report);
            return reports_exit_code({report});
        } else if (cmd_sweep->parsed()) {
            const auto reports = sweep(opt_kmax, opt_nmax, opt_dmax, cfg.seed, cfg.budget,
                                       opt_check_projector, cfg.degree_limit);
            if (cfg.format == "json") {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r));
                emit(arr);
            } else {
                for (const auto& r : reports) print_report_line(r);
                int verified = 0, exhausted = 0, failed = 0;
                for (const auto& r : reports) {
                    if (r.status == CaseStatus::Verified) ++verified;
                    else if (r.status == CaseStatus::Exhausted) ++exhausted;
                    else ++failed;
                }
                std::cout << reports.size() << " cases: " << verified << " verified, " << exhausted
                          << " exhausted, " << failed << " failed\n";
            }
            return reports_exit_code(reports);
        } else if (cmd_gct->parsed()) {
            const GctQuery query{Partition::from_string(opt_lambda), opt_d, opt_ell};
            const auto witness = perorbit_occurs(query);
            if (cfg.format == "json") {
                emit(gct_to_json(witness));
            } else if (witness) {
                std::cout << "occurs: yes  witness mu=(" << witness->mu.to_string() << ") nu=("
                          << witness->nu.to_string() << ")\n";
            } else {
                std::cout << "occurs: no\n";
            }
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::logic_error& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return kExitCrossCheck;
    }
    return kExitOk;
}
