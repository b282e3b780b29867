#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsing/monomials.hpp"
#include "qsing/quiver.hpp"
#include "qsing/weights.hpp"

namespace qsing {

struct BasisElem {
    int src = 0, tgt = 0;  // vertex ids; the element is a morphism src -> tgt
    int grade = 0;
    std::string label;
};

// Rational combination of basis elements; structure constants here are always
// 0 or +-1, so integer coefficients suffice.
using ProdTerms = std::vector<std::pair<long, int>>;

// Finite-dimensional graded basic algebra with a fixed labeled basis and a
// sparse multiplication table. Products compose morphisms: mult(a, b) is
// "apply b, then a" and is zero unless tgt(b) == src(a).
struct FinDimAlgebra {
    std::string name;
    std::string group_spec;
    std::vector<std::string> vertex_labels;
    std::vector<Character> vertex_char;  // character part of each vertex
    std::vector<int> vertex_p;           // block row of each vertex (1..d)
    std::vector<BasisElem> basis;
    std::vector<char> through_trivial;   // element has a factorization through
                                         // a trivial-character vertex
    std::vector<int> vertex_idem;        // vertex id -> basis index
    std::map<std::pair<int, int>, ProdTerms> mult;

    int dim() const { return static_cast<int>(basis.size()); }
    int nvertices() const { return static_cast<int>(vertex_labels.size()); }
    const ProdTerms& product(int a, int b) const;
    long grade0_dim() const;
};

struct QuiverPresentation {
    Quiver quiver;
    std::vector<int> arrow_reps;  // basis index realizing each arrow
    long rad_dim = 0;
    long rad_sq_dim = 0;
};

struct GlobalDim {
    bool finite = true;
    int value = 0;  // the dimension, or the cap when !finite
    std::string str() const {
        return finite ? std::to_string(value)
                      : ">=" + std::to_string(value);
    }
};

// Path algebra of the folded quiver modulo commutativity, in character-split
// form: basis (p, chi, monomial of degree t <= d-p), morphism
// (p,chi) -> (p+t, chi + wt(mu)).
FinDimAlgebra build_skew_poly(const MonomialTable& tab);
// Its Koszul-dual partner: basis (p, chi, index subset J), morphism
// (p+|J|, chi + wt(J)) -> (p, chi); exterior signs, zero on overlap.
FinDimAlgebra build_skew_ext(const MonomialTable& tab);

// Quotient by the two-sided ideal of paths through trivial-character vertices.
FinDimAlgebra quotient_by_trivial_block(const FinDimAlgebra& a);
// Idempotent corner spanned by elements whose endpoints carry kept characters.
FinDimAlgebra corner(const FinDimAlgebra& a, const std::set<Character>& kept);

QuiverPresentation quiver_presentation(const FinDimAlgebra& a);
std::vector<std::vector<long>> cartan_matrix(const FinDimAlgebra& a);
GlobalDim global_dimension(const FinDimAlgebra& a, int cap);

// exhaustive below the stated budget of triples, deterministic sample above
bool check_associativity(const FinDimAlgebra& a, long budget = 30'000'000L);

std::string algebra_json(const FinDimAlgebra& a);

} // namespace qsing
