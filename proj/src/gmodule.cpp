#include "qsing/gmodule.hpp"

#include <cassert>
#include <climits>

#include "qsing/errors.hpp"

namespace qsing {

GradedModule GradedModule::full(std::shared_ptr<const MonomialTable> tab,
                                std::vector<Summand> ambient,
                                std::string label) {
    GradedModule m;
    m.kind_ = Kind::Full;
    m.tab_ = std::move(tab);
    m.ambient_ = std::move(ambient);
    m.label_ = std::move(label);
    m.lo_ = INT_MAX;
    for (const auto& s : m.ambient_) m.lo_ = std::min(m.lo_, s.shift);
    if (m.ambient_.empty()) m.lo_ = 0;
    m.hi_ = m.tab_->max_degree();
    return m;
}

GradedModule GradedModule::sub(std::shared_ptr<const MonomialTable> tab,
                               std::vector<Summand> ambient,
                               std::map<int, SparseMat> bases, int lo, int hi,
                               std::string label) {
    GradedModule m;
    m.kind_ = Kind::Sub;
    m.tab_ = std::move(tab);
    m.ambient_ = std::move(ambient);
    m.bases_ = std::move(bases);
    m.lo_ = lo;
    m.hi_ = hi;
    m.label_ = std::move(label);
    return m;
}

GradedModule GradedModule::residue(std::shared_ptr<const MonomialTable> tab,
                                   std::string label) {
    GradedModule m;
    m.kind_ = Kind::Residue;
    m.tab_ = std::move(tab);
    m.ambient_ = {Summand{m.tab_->group().zero_char(), 0}};
    m.lo_ = 0;
    m.hi_ = INT_MAX;
    m.label_ = std::move(label);
    return m;
}

GradedModule GradedModule::covariant(std::shared_ptr<const MonomialTable> tab,
                                     const Character& chi) {
    auto m = full(std::move(tab), {Summand{chi, 0}}, "S:" + chi.str());
    m.mcm = true;
    return m;
}

GradedModule GradedModule::free_module(
    std::shared_ptr<const MonomialTable> tab,
    const std::vector<int>& gen_degrees, std::string label) {
    std::vector<Summand> amb;
    Character zero = tab->group().zero_char();
    for (int a : gen_degrees) amb.push_back(Summand{zero, a});
    auto m = full(std::move(tab), std::move(amb), std::move(label));
    m.mcm = true;
    m.projective = true;
    return m;
}

int GradedModule::ambient_dim(int n) const {
    long dim = 0;
    for (const auto& s : ambient_) dim += tab_->count(n - s.shift, s.chi);
    return static_cast<int>(dim);
}

int GradedModule::piece_dim(int n) const {
    switch (kind_) {
        case Kind::Full:
            return ambient_dim(n);
        case Kind::Residue:
            return n == 0 ? 1 : 0;
        case Kind::Sub: {
            if (n < lo_) return 0;
            if (n > hi_)
                throw WindowInsufficient("module " + label_ +
                                         " has no data at degree " +
                                         std::to_string(n));
            auto it = bases_.find(n);
            return it == bases_.end() ? 0 : it->second.nrows();
        }
    }
    return 0;
}

SparseMat GradedModule::piece_basis(int n) const {
    switch (kind_) {
        case Kind::Full:
            return SparseMat::identity(ambient_dim(n));
        case Kind::Residue:
            return SparseMat::identity(n == 0 ? 1 : 0);
        case Kind::Sub: {
            if (n < lo_) return SparseMat(ambient_dim(n));
            if (n > hi_)
                throw WindowInsufficient("module " + label_ +
                                         " has no data at degree " +
                                         std::to_string(n));
            auto it = bases_.find(n);
            return it == bases_.end() ? SparseMat(ambient_dim(n)) : it->second;
        }
    }
    return SparseMat(0);
}

SparseMat GradedModule::ambient_act(const Exp& mu, int n) const {
    assert(tab_->weight_of(mu) == tab_->group().zero_char());
    const int t = exp_degree(mu);
    SparseMat out(ambient_dim(n + t));
    int dst_off = 0;
    std::vector<int> offsets;
    for (const auto& s : ambient_) {
        offsets.push_back(dst_off);
        dst_off += static_cast<int>(tab_->count(n + t - s.shift, s.chi));
    }
    for (size_t k = 0; k < ambient_.size(); ++k) {
        const auto& s = ambient_[k];
        for (const Exp& a : tab_->basis(n - s.shift, s.chi)) {
            Exp prod = exp_mul(a, mu);
            int pos = tab_->position(n + t - s.shift, s.chi, prod);
            assert(pos >= 0);
            out.rows.push_back(svec_unit(offsets[k] + pos));
        }
    }
    return out;
}

SVec GradedModule::ambient_act_apply(const Exp& mu, int n,
                                     const SVec& v) const {
    assert(tab_->weight_of(mu) == tab_->group().zero_char());
    const int t = exp_degree(mu);
    std::vector<int> src_off, dst_off;
    int so = 0, do_ = 0;
    for (const auto& s : ambient_) {
        src_off.push_back(so);
        dst_off.push_back(do_);
        so += static_cast<int>(tab_->count(n - s.shift, s.chi));
        do_ += static_cast<int>(tab_->count(n + t - s.shift, s.chi));
    }
    SVec out;
    for (const auto& [col, c] : v) {
        size_t k = ambient_.size() - 1;
        while (src_off[k] > col) --k;
        const auto& s = ambient_[k];
        const Exp& a = tab_->basis(n - s.shift, s.chi)[col - src_off[k]];
        int pos = tab_->position(n + t - s.shift, s.chi, exp_mul(a, mu));
        assert(pos >= 0);
        svec_axpy(out, c, svec_unit(dst_off[k] + pos));
    }
    return out;
}

SVec GradedModule::to_piece_coords(int n, const SVec& ambient_vec) const {
    if (kind_ == Kind::Residue) return n == 0 ? ambient_vec : SVec{};
    if (kind_ == Kind::Full) return ambient_vec;
    SparseMat b = piece_basis(n);
    // rows are RREF: coordinates are read off at the pivot columns
    SVec out;
    SVec residual = ambient_vec;
    for (int r = 0; r < b.nrows(); ++r) {
        int pivot = b.rows[r].front().first;
        Q c = svec_get(residual, pivot);
        if (c != 0) {
            out.emplace_back(r, c);
            svec_axpy(residual, -c, b.rows[r]);
        }
    }
    if (!residual.empty())
        throw Error("vector not in module " + label_ + " at degree " +
                    std::to_string(n));
    return out;
}

SparseMat GradedModule::act(const Exp& mu, int n) const {
    const int t = exp_degree(mu);
    if (kind_ == Kind::Residue) {
        if (t == 0) return SparseMat::identity(piece_dim(n));
        SparseMat z(piece_dim(n + t));
        for (int r = 0; r < piece_dim(n); ++r) z.rows.push_back({});
        return z;
    }
    if (kind_ == Kind::Full) return ambient_act(mu, n);
    SparseMat b = piece_basis(n);
    SparseMat amb = ambient_act(mu, n);
    SparseMat out(piece_dim(n + t));
    for (int r = 0; r < b.nrows(); ++r)
        out.rows.push_back(to_piece_coords(n + t, amb.apply(b.rows[r])));
    return out;
}

} // namespace qsing
