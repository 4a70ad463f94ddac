#include "powersum/symmetric_functions.hpp"

#include <algorithm>
#include <map>

namespace powersum {

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
    int da = a.total_degree();
    int db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(),
                                        b.exps.begin(), b.exps.end());
}

RegularDecomposition regular_decomposition(int k) {
    if (k < 1 || k > 12)
        throw std::invalid_argument("regular_decomposition: k must be in [1, 12]");

    // table[j] maps the exponent vector (a_1..a_j) to its coefficient in the
    // expansion of sigma_j. Built bottom-up from
    //   sigma_j = (1/j) * sum_{i=1..j} (-1)^{i-1} s_i sigma_{j-i}.
    std::vector<std::map<std::vector<int>, Rational>> table(static_cast<std::size_t>(k) + 1);
    table[0][{}] = 1;
    for (int j = 1; j <= k; ++j) {
        for (int i = 1; i <= j; ++i) {
            Rational factor(i % 2 == 1 ? 1 : -1, j);
            for (const auto& [exps, coeff] : table[j - i]) {
                std::vector<int> bumped = exps;
                bumped.resize(static_cast<std::size_t>(j), 0);
                bumped[i - 1] += 1;
                table[j][bumped] += factor * coeff;
            }
        }
    }

    RegularDecomposition dec;
    dec.degree = k;
    dec.terms.reserve(table[k].size());
    for (auto& [exps, coeff] : table[k]) {
        RegularMonomial term;
        term.coeff = std::move(coeff);
        term.exps.exps = exps;
        term.degree = k;
        if (term.coeff == 0 || !term.weight_consistent() || !term.sign_consistent())
            throw std::logic_error("regular_decomposition: internal invariant violated");
        dec.terms.push_back(std::move(term));
    }
    std::sort(dec.terms.begin(), dec.terms.end(),
              [](const RegularMonomial& a, const RegularMonomial& b) {
                  return graded_lex_less(a.exps, b.exps);
              });
    return dec;
}

}  // namespace powersum
