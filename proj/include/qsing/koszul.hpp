#pragma once

#include <memory>
#include <vector>

#include "qsing/gmodule.hpp"
#include "qsing/monomials.hpp"

namespace qsing {

// The Koszul complex of the polynomial ring, split into (degree, character)
// cells. The p-th term has cell basis (J, alpha) with J an index subset of
// size p, wt(alpha) + wt(J) = chi and |alpha| + p = n; differentials contract
// one index at a time with alternating signs. Every matrix is exact and
// reproducible: subsets are ordered by mask value, monomials lexicographically.
class KoszulComplex {
  public:
    explicit KoszulComplex(std::shared_ptr<const MonomialTable> tab);

    const MonomialTable& table() const { return *tab_; }
    int dim_vars() const { return d_; }
    const std::vector<unsigned>& subsets(int p) const { return subsets_[p]; }
    Character mask_weight(unsigned mask) const;

    int cell_dim(int p, int n, const Character& chi) const;
    // differential on the (n, chi) cell: term p -> term p-1
    SparseMat delta(int p, int n, const Character& chi) const;

    // image of delta_p in character chi as a graded module (window [p, hi]);
    // its ambient is the chi-cell of the (p-1)-st term
    GradedModule image_module(int p, const Character& chi, int hi) const;

  private:
    std::shared_ptr<const MonomialTable> tab_;
    int d_;
    std::vector<std::vector<unsigned>> subsets_;  // by size

    std::vector<Summand> term_ambient(int p, const Character& chi) const;
};

} // namespace qsing
