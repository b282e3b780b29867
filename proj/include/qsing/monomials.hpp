#pragma once

#include <vector>

#include "qsing/weights.hpp"

namespace qsing {

// Exponent vector of a monomial in the d variables.
using Exp = std::vector<int>;

int exp_degree(const Exp& a);
Exp exp_mul(const Exp& a, const Exp& b);
bool exp_divides(const Exp& a, const Exp& b);  // a | b componentwise
std::string exp_str(const Exp& a);             // "1" for the constant, "x1^2x3" otherwise

// Bigraded monomial bookkeeping for one group: counts of monomials per
// (degree, character), the sorted monomial bases behind the counts, and the
// minimal generators of the invariant subring up to the table degree.
//
// Counting is dynamic programming over the variables; bases are enumerated in
// ascending lexicographic order so every matrix built over them is
// reproducible byte for byte.
class MonomialTable {
  public:
    MonomialTable(WeightGroup g, int max_degree);

    const WeightGroup& group() const { return g_; }
    int max_degree() const { return max_degree_; }

    long count(int n, const Character& w) const;
    const std::vector<Exp>& basis(int n, const Character& w) const;
    // index of a in basis(n, w); -1 if absent
    int position(int n, const Character& w, const Exp& a) const;
    Character weight_of(const Exp& a) const;
    long total(int n) const;  // all characters together

    std::vector<long> covariant_hilbert(const Character& i, int nmax) const;

    // positive-degree invariant monomials not divisible by a smaller one;
    // these generate the invariant subring as an algebra
    const std::vector<Exp>& invariant_min_gens() const { return min_gens_; }
    int first_invariant_degree() const { return first_invariant_degree_; }
    // degree slack used when deciding whether a truncated computation saw
    // everything it needed to
    int default_margin() const { return 2 * first_invariant_degree_; }

  private:
    WeightGroup g_;
    int max_degree_;
    long nchars_;
    std::vector<std::vector<long>> counts_;            // [n][char index]
    std::vector<std::vector<std::vector<Exp>>> bases_; // [n][char index]
    std::vector<Exp> min_gens_;
    int first_invariant_degree_ = 1;

    void check_degree(int n) const;
};

} // namespace qsing
