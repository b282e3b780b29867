#include "qsing/resolve.hpp"

#include <algorithm>
#include <cassert>

#include "qsing/errors.hpp"

namespace qsing {

std::vector<int> Resolution::gen_degrees(int s) const {
    std::vector<int> out;
    for (const auto& g : steps.at(s).gens) out.push_back(g.degree);
    return out;
}

bool Resolution::conclusive_upto(int s) const {
    for (int k = 0; k <= s && k < static_cast<int>(steps.size()); ++k)
        if (!steps[k].conclusive) return false;
    return true;
}

long Resolution::betti(int s, int degree) const {
    if (s < 0 || s >= static_cast<int>(steps.size())) return 0;
    long n = 0;
    for (const auto& g : steps[s].gens) n += g.degree == degree;
    return n;
}

bool ExtTable::all_conclusive() const {
    for (const auto& [k, v] : entries)
        if (!v.conclusive) return false;
    return true;
}

long ExtTable::total_dim() const {
    long s = 0;
    for (const auto& [k, v] : entries) s += v.dim;
    return s;
}

Engine::Engine(WeightGroup g, EngineConfig cfg) {
    long maxm = 1;
    for (long m : g.factors) maxm = std::max(maxm, m);
    degmax_ = cfg.degmax > 0
                  ? cfg.degmax
                  : 3 * g.d * static_cast<int>(maxm);
    tab_ = std::make_shared<MonomialTable>(std::move(g),
                                           degmax_ + cfg.table_slack);
    margin_ = cfg.margin >= 0 ? cfg.margin : tab_->default_margin();
    koszul_ = std::make_unique<KoszulComplex>(tab_);
}

const GradedModule& Engine::covariant(const Character& chi) {
    std::lock_guard lock(mutex_);
    long idx = tab_->group().char_index(chi);
    auto it = covariants_.find(idx);
    if (it == covariants_.end()) {
        auto m = GradedModule::covariant(tab_, chi);
        // the trivial character carves out the invariants, a free module
        if (chi == tab_->group().zero_char()) m.projective = true;
        it = covariants_.emplace(idx, std::move(m)).first;
    }
    return it->second;
}

const GradedModule& Engine::residue() {
    std::lock_guard lock(mutex_);
    if (!residue_)
        residue_ = std::make_unique<GradedModule>(
            GradedModule::residue(tab_, "k"));
    return *residue_;
}

const GradedModule& Engine::koszul_image(int p, const Character& chi) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(p, tab_->group().char_index(chi));
    auto it = images_.find(key);
    if (it == images_.end())
        it = images_.emplace(key, koszul_->image_module(p, chi, degmax_))
                 .first;
    return it->second;
}

std::vector<ResGen> Engine::detect_generators(const GradedModule& cur,
                                              bool& conclusive) const {
    std::vector<ResGen> gens;
    conclusive = true;
    const int lo = cur.lo();
    const int hi = degmax_;
    if (lo > hi) return gens;
    // span at each degree of (submodule generated below) + (module piece);
    // generators are piece vectors extending the span generated from below
    std::map<int, Echelon> spans;
    for (int n = lo; n <= hi; ++n) {
        Echelon e(cur.ambient_dim(n));
        for (const Exp& g0 : tab_->invariant_min_gens()) {
            int t = exp_degree(g0);
            if (n - t < lo) continue;
            auto src = spans.find(n - t);
            if (src == spans.end() || src->second.rank() == 0) continue;
            SparseMat act = cur.ambient_act(g0, n - t);
            for (const auto& row : src->second.rows) e.insert(act.apply(row));
        }
        SparseMat basis = cur.piece_basis(n);
        for (const auto& row : basis.rows)
            if (e.insert(row)) {
                gens.push_back({n, row});
                if (n > hi - margin_) conclusive = false;
            }
        spans.emplace(n, std::move(e));
    }
    return gens;
}

GradedModule Engine::syzygy_module(const GradedModule& cur,
                                   const std::vector<ResGen>& gens,
                                   const std::string& label) const {
    std::vector<Summand> amb;
    Character zero = tab_->group().zero_char();
    int lo = degmax_ + 1;
    for (const auto& g : gens) {
        amb.push_back(Summand{zero, g.degree});
        lo = std::min(lo, g.degree);
    }
    std::map<int, SparseMat> bases;
    for (int n = lo; n <= degmax_; ++n) {
        SparseMat cover(cur.ambient_dim(n));
        for (const auto& g : gens)
            for (const Exp& mu : tab_->basis(n - g.degree, zero))
                cover.rows.push_back(
                    cur.ambient_act_apply(mu, g.degree, g.vec));
        SparseMat ker = kernel(cover);
        if (ker.nrows() > 0) bases[n] = std::move(ker);
    }
    return GradedModule::sub(tab_, std::move(amb), std::move(bases), lo,
                             degmax_, label);
}

void Engine::grow(Resolution& res) {
    int s = static_cast<int>(res.steps.size());
    ResStep step;
    step.gens = detect_generators(res.tail, step.conclusive);
    if (step.gens.empty()) {
        // an empty kernel is only trusted when the window reaches at least a
        // margin beyond the previous cover's generators
        if (s > 0) {
            int prev_top = 0;
            for (const auto& g : res.steps[s - 1].gens)
                prev_top = std::max(prev_top, g.degree);
            if (prev_top + margin_ > degmax_) step.conclusive = false;
        }
        res.terminated = true;
        res.steps.push_back(std::move(step));
        return;
    }
    GradedModule next = syzygy_module(
        res.tail, step.gens,
        res.module->label() + ":syz" + std::to_string(s + 1));
    res.steps.push_back(std::move(step));
    res.tail = std::move(next);
}

const Resolution& Engine::resolution(const GradedModule& m, int smax) {
    std::lock_guard lock(mutex_);
    auto it = resolutions_.find(m.label());
    if (it == resolutions_.end()) {
        Resolution res;
        res.module = &m;
        res.hi = degmax_;
        res.margin = margin_;
        if (m.kind() == GradedModule::Kind::Residue) {
            ResStep step0;
            step0.gens.push_back({0, svec_unit(0)});
            res.steps.push_back(std::move(step0));
            // first syzygy: the whole positive-degree part of the invariants
            std::map<int, SparseMat> bases;
            Character zero = tab_->group().zero_char();
            for (int n = 1; n <= degmax_; ++n) {
                long dim = tab_->count(n, zero);
                if (dim > 0)
                    bases[n] = SparseMat::identity(static_cast<int>(dim));
            }
            res.tail = GradedModule::sub(tab_, {Summand{zero, 0}},
                                         std::move(bases), 1, degmax_,
                                         m.label() + ":syz1");
        } else {
            res.tail = m;
        }
        it = resolutions_.emplace(m.label(), std::move(res)).first;
    }
    Resolution& res = it->second;
    while (!res.terminated && res.computed_steps() < smax) grow(res);
    return res;
}

Engine::Cochain Engine::cochain(const Resolution& res, int s,
                                const GradedModule& y, int i) const {
    Cochain c;
    if (s < 0 || s >= static_cast<int>(res.steps.size())) return c;
    for (const auto& g : res.steps[s].gens) {
        int dy = i + g.degree;
        c.offsets.push_back(c.total);
        if (!y.degree_known(dy)) {
            c.complete = false;
            c.dims.push_back(0);
        } else {
            c.dims.push_back(y.piece_dim(dy));
        }
        c.total += c.dims.back();
    }
    if (!res.steps[s].conclusive) c.complete = false;
    return c;
}

SparseMat Engine::dual_differential(const Resolution& res, int s,
                                    const GradedModule& y, int i,
                                    const Cochain& cfrom,
                                    const Cochain& cto) const {
    SparseMat d(cto.total);
    d.rows.assign(cfrom.total, SVec{});
    if (s >= static_cast<int>(res.steps.size())) return d;
    std::vector<int> prev_deg = res.gen_degrees(s - 1);
    Character zero = tab_->group().zero_char();
    for (size_t gi = 0; gi < res.steps[s].gens.size(); ++gi) {
        const auto& g = res.steps[s].gens[gi];
        if (cto.dims[gi] == 0) continue;
        // decode the generator vector over the free ambient of the previous
        // step: blocks (h, invariant monomial)
        std::vector<int> off(prev_deg.size() + 1, 0);
        for (size_t h = 0; h < prev_deg.size(); ++h)
            off[h + 1] =
                off[h] + static_cast<int>(tab_->count(g.degree - prev_deg[h],
                                                      zero));
        for (const auto& [col, coeff] : g.vec) {
            size_t h = prev_deg.size() - 1;
            while (off[h] > col) --h;
            if (cfrom.dims[h] == 0) continue;
            const Exp& mu =
                tab_->basis(g.degree - prev_deg[h], zero)[col - off[h]];
            int dy = i + prev_deg[h];
            SparseMat act = y.act(mu, dy);
            for (int r = 0; r < static_cast<int>(act.rows.size()); ++r) {
                for (const auto& [cc, vv] : act.rows[r]) {
                    svec_axpy(d.rows[cfrom.offsets[h] + r], coeff * vv,
                              svec_unit(cto.offsets[gi] + cc));
                }
            }
        }
    }
    return d;
}

CellValue Engine::ext_cell(const GradedModule& x, const GradedModule& y, int n,
                           int i) {
    assert(n >= 0);
    const Resolution& res = resolution(x, n + 1);
    CellValue v;
    v.conclusive = res.conclusive_upto(n + 1);
    Cochain cm = cochain(res, n - 1, y, i);
    Cochain cn = cochain(res, n, y, i);
    Cochain cp = cochain(res, n + 1, y, i);
    v.conclusive = v.conclusive && cm.complete && cn.complete && cp.complete;
    if (!res.terminated && res.computed_steps() < n + 1) v.conclusive = false;
    long r_in = 0, r_out = 0;
    if (n >= 1 && cn.total > 0 && cm.total > 0)
        r_in = rank(dual_differential(res, n, y, i, cm, cn));
    if (cn.total > 0 && cp.total > 0)
        r_out = rank(dual_differential(res, n + 1, y, i, cn, cp));
    v.dim = cn.total - r_in - r_out;
    assert(v.dim >= 0);
    return v;
}

CellValue Engine::stable_hom_cell(const GradedModule& x, const GradedModule& y,
                                  int i) {
    if (x.projective || y.projective) return {0, true};
    const Resolution& resx = resolution(x, 1);
    const Resolution& resy = resolution(y, 0);

    Cochain c0 = cochain(resx, 0, y, i);
    Cochain c1 = cochain(resx, 1, y, i);
    SparseMat hom = kernel(dual_differential(resx, 1, y, i, c0, c1));

    // maps through the projective cover of y
    GradedModule f0y = GradedModule::free_module(
        tab_, resy.gen_degrees(0), "F0(" + y.label() + ")");
    Cochain c0f = cochain(resx, 0, f0y, i);
    Cochain c1f = cochain(resx, 1, f0y, i);
    SparseMat homf = kernel(dual_differential(resx, 1, f0y, i, c0f, c1f));

    CellValue v;
    v.conclusive = resx.conclusive_upto(1) && c0.complete && c1.complete &&
                   c0f.complete && c1f.complete &&
                   resy.steps[0].conclusive;

    // post-compose with the cover map, block by block over the generators of
    // the resolution of x
    const auto& xgens = resx.steps[0].gens;
    const auto& ygens = resy.steps[0].gens;
    Character zero = tab_->group().zero_char();
    Echelon image(c0.total);
    for (const auto& row : homf.rows) {
        SVec mapped;
        for (const auto& [col, c] : row) {
            // locate the x-generator block
            size_t g = xgens.size() - 1;
            while (c0f.offsets[g] > col) --g;
            if (c0.dims[g] == 0) continue;
            int dy = i + xgens[g].degree;
            // decode the free-cover coordinate: (y-generator h, monomial)
            int local = col - c0f.offsets[g];
            std::vector<int> off(ygens.size() + 1, 0);
            for (size_t h = 0; h < ygens.size(); ++h)
                off[h + 1] = off[h] + static_cast<int>(tab_->count(
                                          dy - ygens[h].degree, zero));
            size_t h = ygens.size() - 1;
            while (off[h] > local) --h;
            const Exp& mu =
                tab_->basis(dy - ygens[h].degree, zero)[local - off[h]];
            SVec val = y.to_piece_coords(
                dy, y.ambient_act_apply(mu, ygens[h].degree, ygens[h].vec));
            for (auto& [cc, vv] : val) cc += c0.offsets[g];
            svec_axpy(mapped, c, val);
        }
        image.insert(std::move(mapped));
    }
    v.dim = hom.nrows() - image.rank();
    assert(v.dim >= 0);
    return v;
}

CellValue Engine::shifted_stable_hom(const GradedModule& x,
                                     const GradedModule& y, int n, int i) {
    if (n == 0) return stable_hom_cell(x, y, i);
    if (!x.mcm || !y.mcm)
        throw NotMCM("stable shifts require Cohen-Macaulay modules (" +
                     x.label() + ", " + y.label() + ")");
    if (x.projective || y.projective) return {0, true};
    if (n >= 1) return ext_cell(x, y, n, i);
    const int d = tab_->group().d;
    return ext_cell(y, x, d - 1 - n, -d - i);
}

ExtTable Engine::ext_dims(const GradedModule& x, const GradedModule& y,
                          int nmax, int tlo, int thi) {
    ExtTable t;
    const Resolution& res = resolution(x, nmax + 1);
    for (int i = tlo; i <= thi; ++i) {
        std::vector<Cochain> c;
        std::vector<long> ranks;  // ranks[s] = rank of D_s : C_{s-1} -> C_s
        for (int s = 0; s <= nmax + 1; ++s) c.push_back(cochain(res, s, y, i));
        ranks.assign(nmax + 2, 0);
        for (int s = 1; s <= nmax + 1; ++s) {
            if (s >= static_cast<int>(res.steps.size())) break;
            if (c[s - 1].total == 0 || c[s].total == 0) continue;
            ranks[s] = rank(dual_differential(res, s, y, i, c[s - 1], c[s]));
        }
        for (int n = 0; n <= nmax; ++n) {
            CellValue v;
            v.dim = c[n].total - ranks[n + 1] - (n >= 1 ? ranks[n] : 0);
            v.conclusive = res.conclusive_upto(n + 1) && c[n].complete &&
                           (n == 0 || c[n - 1].complete) && c[n + 1].complete;
            if (!res.terminated && res.computed_steps() < n + 1)
                v.conclusive = false;
            assert(v.dim >= 0);
            t.entries[{n, i}] = v;
        }
    }
    return t;
}

ExtTable Engine::stable_hom(const GradedModule& x, const GradedModule& y,
                            int tlo, int thi) {
    ExtTable t;
    for (int i = tlo; i <= thi; ++i)
        t.entries[{0, i}] = stable_hom_cell(x, y, i);
    return t;
}

} // namespace qsing
