#include "weil/rational.hpp"

#include <sstream>

namespace weil {

Rational rational_from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw validation_error("empty rational literal");
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (!(isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw validation_error("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw validation_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw validation_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::vector<Rational> rationals_from_csv(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rational_from_string(tok));
    return out;
}

} // namespace weil
