#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qsing/monomials.hpp"
#include "qsing/sparse.hpp"
#include "qsing/weights.hpp"

namespace qsing {

// One summand of a monomial ambient space: the monomials of character chi,
// placed so that a monomial of degree |a| sits in internal degree |a| + shift.
struct Summand {
    Character chi;
    int shift = 0;
    bool operator==(const Summand&) const = default;
};

// Graded module over the invariant subring, presented inside a direct sum of
// monomial spaces. Three kinds:
//   Full    - the whole ambient (modules of covariants, graded free modules);
//             any degree the monomial table covers is available exactly.
//   Sub     - an action-stable subspace with explicit per-degree bases inside
//             a window [lo, hi]; degrees below lo are genuinely zero, degrees
//             above hi are unknown.
//   Residue - the simple module concentrated in degree zero with the trivial
//             action (admitted for resolving; it is not Cohen-Macaulay).
class GradedModule {
  public:
    enum class Kind { Full, Sub, Residue };

    static GradedModule full(std::shared_ptr<const MonomialTable> tab,
                             std::vector<Summand> ambient, std::string label);
    static GradedModule sub(std::shared_ptr<const MonomialTable> tab,
                            std::vector<Summand> ambient,
                            std::map<int, SparseMat> bases, int lo, int hi,
                            std::string label);
    static GradedModule residue(std::shared_ptr<const MonomialTable> tab,
                                std::string label);
    // the covariant module: monomials of character chi
    static GradedModule covariant(std::shared_ptr<const MonomialTable> tab,
                                  const Character& chi);
    // graded free module with generators in the listed degrees
    static GradedModule free_module(std::shared_ptr<const MonomialTable> tab,
                                    const std::vector<int>& gen_degrees,
                                    std::string label);

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const MonomialTable& table() const { return *tab_; }
    std::shared_ptr<const MonomialTable> table_ptr() const { return tab_; }
    const WeightGroup& group() const { return tab_->group(); }
    const std::vector<Summand>& ambient() const { return ambient_; }

    // trusted degree range: pieces are exact for lo <= n <= hi and zero below
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool degree_known(int n) const { return n < lo_ || n <= hi_; }

    int ambient_dim(int n) const;
    int piece_dim(int n) const;
    // module basis at degree n, rows in ambient coordinates (RREF)
    SparseMat piece_basis(int n) const;

    // multiplication by a monomial on the ambient, degree n to n + deg(mu)
    SparseMat ambient_act(const Exp& mu, int n) const;
    // the same action applied to a single ambient vector
    SVec ambient_act_apply(const Exp& mu, int n, const SVec& v) const;
    // multiplication on the module, piece coordinates to piece coordinates
    SparseMat act(const Exp& mu, int n) const;

    // express an ambient vector of degree n in piece coordinates
    SVec to_piece_coords(int n, const SVec& ambient_vec) const;

    bool mcm = false;        // carries a maximal Cohen-Macaulay tag
    bool projective = false; // graded free

  private:
    Kind kind_ = Kind::Full;
    std::shared_ptr<const MonomialTable> tab_;
    std::vector<Summand> ambient_;
    std::map<int, SparseMat> bases_;  // Sub only
    int lo_ = 0, hi_ = 0;
    std::string label_;
};

} // namespace qsing
