#include "plethy/rational.hpp"

#include "plethy/error.hpp"

namespace plethy {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational string");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw domain_error("malformed rational string: '" + s + "'");
    if (q.get_den() == 0)
        throw domain_error("zero denominator in rational string: '" + s + "'");
    q.canonicalize();
    return q;
}

Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return f;
}

Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace plethy
