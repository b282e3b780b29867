#include "qsing/koszul.hpp"

#include <cassert>

#include "qsing/errors.hpp"

namespace qsing {

KoszulComplex::KoszulComplex(std::shared_ptr<const MonomialTable> tab)
    : tab_(std::move(tab)), d_(tab_->group().d) {
    subsets_.assign(d_ + 1, {});
    for (unsigned mask = 0; mask < (1u << d_); ++mask)
        subsets_[__builtin_popcount(mask)].push_back(mask);
}

Character KoszulComplex::mask_weight(unsigned mask) const {
    const WeightGroup& g = tab_->group();
    Character w = g.zero_char();
    for (int j = 0; j < d_; ++j)
        if (mask & (1u << j)) w = g.add(w, g.weights[j]);
    return w;
}

std::vector<Summand> KoszulComplex::term_ambient(int p,
                                                 const Character& chi) const {
    const WeightGroup& g = tab_->group();
    std::vector<Summand> amb;
    for (unsigned mask : subsets_[p])
        amb.push_back(Summand{g.sub(chi, mask_weight(mask)), p});
    return amb;
}

int KoszulComplex::cell_dim(int p, int n, const Character& chi) const {
    if (p < 0 || p > d_) return 0;
    const WeightGroup& g = tab_->group();
    long dim = 0;
    for (unsigned mask : subsets_[p])
        dim += tab_->count(n - p, g.sub(chi, mask_weight(mask)));
    return static_cast<int>(dim);
}

SparseMat KoszulComplex::delta(int p, int n, const Character& chi) const {
    assert(p >= 1 && p <= d_);
    const WeightGroup& g = tab_->group();
    SparseMat out(cell_dim(p - 1, n, chi));

    // offsets of the target blocks, indexed by subset of size p-1
    std::vector<int> offset(1u << d_, -1);
    int off = 0;
    for (unsigned mask : subsets_[p - 1]) {
        offset[mask] = off;
        off += static_cast<int>(tab_->count(n - p + 1, g.sub(chi, mask_weight(mask))));
    }

    for (unsigned mask : subsets_[p]) {
        Character alpha_chi = g.sub(chi, mask_weight(mask));
        for (const Exp& a : tab_->basis(n - p, alpha_chi)) {
            SVec row;
            int sign = 1;
            for (int j = 0; j < d_; ++j) {
                if (!(mask & (1u << j))) continue;
                unsigned rest = mask & ~(1u << j);
                Exp prod = a;
                prod[j] += 1;
                int pos = tab_->position(n - p + 1, g.sub(chi, mask_weight(rest)),
                                         prod);
                assert(pos >= 0);
                svec_axpy(row, Q(sign), svec_unit(offset[rest] + pos));
                sign = -sign;
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

GradedModule KoszulComplex::image_module(int p, const Character& chi,
                                         int hi) const {
    if (hi > tab_->max_degree())
        throw WindowTooLarge("image module window beyond the monomial table");
    std::map<int, SparseMat> bases;
    for (int n = p; n <= hi; ++n) {
        if (cell_dim(p, n, chi) == 0) continue;
        Echelon image = rref(delta(p, n, chi));
        if (image.rank() > 0) bases[n] = image.to_matrix();
    }
    auto m = GradedModule::sub(tab_, term_ambient(p - 1, chi), std::move(bases),
                               p, hi,
                               "Om" + std::to_string(p) + ":" + chi.str());
    m.mcm = true;
    return m;
}

} // namespace qsing
