#include "qsing/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include <json.hpp>

#include "qsing/errors.hpp"
#include "qsing/sparse.hpp"

namespace qsing {

namespace {

constexpr int dim_cap = 20000;

int popcount(unsigned m) { return __builtin_popcount(m); }

std::string subset_label(unsigned mask) {
    if (mask == 0) return "1";
    std::string s;
    for (int j = 0; mask >> j; ++j)
        if (mask & (1u << j)) s += "y" + std::to_string(j + 1);
    return s;
}

// parity of inversions when concatenating sorted index sets J1, J2
long merge_sign(unsigned j1, unsigned j2) {
    long inv = 0;
    for (int u = 0; j1 >> u; ++u) {
        if (!(j1 & (1u << u))) continue;
        for (int v = 0; v < u; ++v)
            if (j2 & (1u << v)) ++inv;
    }
    return inv % 2 == 0 ? 1 : -1;
}

struct VertexTable {
    const WeightGroup* g;
    int vid(int p, long chi_idx) const {
        return static_cast<int>((p - 1) * g->order + chi_idx);
    }
};

} // namespace

const ProdTerms& FinDimAlgebra::product(int a, int b) const {
    static const ProdTerms empty;
    auto it = mult.find({a, b});
    return it == mult.end() ? empty : it->second;
}

long FinDimAlgebra::grade0_dim() const {
    long n = 0;
    for (const auto& b : basis) n += b.grade == 0;
    return n;
}

FinDimAlgebra build_skew_poly(const MonomialTable& tab) {
    const WeightGroup& g = tab.group();
    const int d = g.d;
    if (tab.max_degree() < d - 1)
        throw WindowTooLarge("monomial table too small for path grades");
    if (d * g.order > dim_cap)
        throw CapExceeded("skew polynomial algebra has too many vertices");

    FinDimAlgebra a;
    a.name = "skew_poly";
    a.group_spec = g.spec_string();
    VertexTable vt{&g};
    for (int p = 1; p <= d; ++p)
        for (long i = 0; i < g.order; ++i) {
            a.vertex_labels.push_back(folded_vertex(p, g.char_of_index(i)));
            a.vertex_char.push_back(g.char_of_index(i));
            a.vertex_p.push_back(p);
        }

    std::map<std::tuple<int, long, Exp>, int> key;  // (p, chi, monomial)
    std::vector<std::tuple<int, long, Exp>> elems;
    for (int t = 0; t < d; ++t) {
        for (int p = 1; p + t <= d; ++p) {
            for (long i = 0; i < g.order; ++i) {
                for (long w = 0; w < g.order; ++w) {
                    for (const Exp& mu : tab.basis(t, g.char_of_index(w))) {
                        Character chi = g.char_of_index(i);
                        Character to = g.add(chi, g.char_of_index(w));
                        int id = static_cast<int>(a.basis.size());
                        a.basis.push_back({vt.vid(p, i),
                                           vt.vid(p + t, g.char_index(to)), t,
                                           exp_str(mu)});
                        key[{p, i, mu}] = id;
                        elems.emplace_back(p, i, mu);
                        // factorization through a trivial-character vertex:
                        // some submonomial nu of mu has chi + wt(nu) == 0
                        bool through = false;
                        Exp nu(mu.size(), 0);
                        auto scan = [&](auto&& self, size_t j) -> void {
                            if (through) return;
                            if (j == mu.size()) {
                                Character at = g.add(chi, tab.weight_of(nu));
                                if (at == g.zero_char()) through = true;
                                return;
                            }
                            for (nu[j] = 0; nu[j] <= mu[j]; ++nu[j])
                                self(self, j + 1);
                            nu[j] = 0;
                        };
                        scan(scan, 0);
                        a.through_trivial.push_back(through ? 1 : 0);
                    }
                }
            }
        }
        if (static_cast<long>(a.basis.size()) > dim_cap)
            throw CapExceeded("skew polynomial algebra dimension exceeds cap");
    }

    a.vertex_idem.assign(a.vertex_labels.size(), -1);
    for (int id = 0; id < a.dim(); ++id)
        if (a.basis[id].grade == 0) a.vertex_idem[a.basis[id].src] = id;

    for (int b1 = 0; b1 < a.dim(); ++b1) {
        const auto& [p1, i1, mu1] = elems[b1];
        int t1 = exp_degree(mu1);
        for (int b2 = 0; b2 < a.dim(); ++b2) {
            const auto& [p2, i2, mu2] = elems[b2];
            int t2 = exp_degree(mu2);
            // compose: b2 first, then b1; need tgt(b2) == src(b1)
            if (a.basis[b2].tgt != a.basis[b1].src) continue;
            if (p2 + t1 + t2 > d) continue;
            Exp prod = exp_mul(mu1, mu2);
            auto it = key.find({p2, i2, prod});
            assert(it != key.end());
            a.mult[{b1, b2}] = {{1, it->second}};
        }
    }
    return a;
}

FinDimAlgebra build_skew_ext(const MonomialTable& tab) {
    const WeightGroup& g = tab.group();
    const int d = g.d;
    if (d * g.order > dim_cap)
        throw CapExceeded("skew exterior algebra has too many vertices");

    FinDimAlgebra a;
    a.name = "skew_ext";
    a.group_spec = g.spec_string();
    VertexTable vt{&g};
    for (int p = 1; p <= d; ++p)
        for (long i = 0; i < g.order; ++i) {
            a.vertex_labels.push_back(folded_vertex(p, g.char_of_index(i)));
            a.vertex_char.push_back(g.char_of_index(i));
            a.vertex_p.push_back(p);
        }

    auto mask_weight = [&](unsigned mask) {
        Character w = g.zero_char();
        for (int j = 0; j < d; ++j)
            if (mask & (1u << j)) w = g.add(w, g.weights[j]);
        return w;
    };

    std::map<std::tuple<int, long, unsigned>, int> key;  // (p, chi, subset)
    std::vector<std::tuple<int, long, unsigned>> elems;
    for (int t = 0; t < d; ++t) {
        for (int p = 1; p + t <= d; ++p) {
            for (long i = 0; i < g.order; ++i) {
                for (unsigned mask = 0; mask < (1u << d); ++mask) {
                    if (popcount(mask) != t) continue;
                    Character chi = g.char_of_index(i);
                    Character from = g.add(chi, mask_weight(mask));
                    int id = static_cast<int>(a.basis.size());
                    a.basis.push_back({vt.vid(p + t, g.char_index(from)),
                                       vt.vid(p, i), t, subset_label(mask)});
                    key[{p, i, mask}] = id;
                    elems.emplace_back(p, i, mask);
                    bool through = false;
                    for (unsigned sub = mask;; sub = (sub - 1) & mask) {
                        if (g.add(chi, mask_weight(sub)) == g.zero_char()) {
                            through = true;
                            break;
                        }
                        if (sub == 0) break;
                    }
                    a.through_trivial.push_back(through ? 1 : 0);
                }
            }
        }
        if (static_cast<long>(a.basis.size()) > dim_cap)
            throw CapExceeded("skew exterior algebra dimension exceeds cap");
    }

    a.vertex_idem.assign(a.vertex_labels.size(), -1);
    for (int id = 0; id < a.dim(); ++id)
        if (a.basis[id].grade == 0) a.vertex_idem[a.basis[id].tgt] = id;

    for (int b1 = 0; b1 < a.dim(); ++b1) {
        const auto& [p1, i1, m1] = elems[b1];
        for (int b2 = 0; b2 < a.dim(); ++b2) {
            const auto& [p2, i2, m2] = elems[b2];
            if (a.basis[b2].tgt != a.basis[b1].src) continue;
            if (m1 & m2) continue;  // repeated index kills the product
            if (p1 + popcount(m1 | m2) > d) continue;
            auto it = key.find({p1, i1, m1 | m2});
            assert(it != key.end());
            a.mult[{b1, b2}] = {{merge_sign(m1, m2), it->second}};
        }
    }
    return a;
}

namespace {

// rebuild an algebra from a subset of kept vertices and basis elements
FinDimAlgebra restrict_algebra(const FinDimAlgebra& a, const std::string& name,
                               const std::vector<char>& keep_vertex,
                               const std::vector<char>& keep_elem) {
    FinDimAlgebra out;
    out.name = name;
    out.group_spec = a.group_spec;
    std::vector<int> vmap(a.nvertices(), -1);
    for (int v = 0; v < a.nvertices(); ++v) {
        if (!keep_vertex[v]) continue;
        vmap[v] = static_cast<int>(out.vertex_labels.size());
        out.vertex_labels.push_back(a.vertex_labels[v]);
        out.vertex_char.push_back(a.vertex_char[v]);
        out.vertex_p.push_back(a.vertex_p[v]);
    }
    std::vector<int> emap(a.dim(), -1);
    for (int e = 0; e < a.dim(); ++e) {
        if (!keep_elem[e]) continue;
        const auto& b = a.basis[e];
        assert(keep_vertex[b.src] && keep_vertex[b.tgt]);
        emap[e] = out.dim();
        out.basis.push_back({vmap[b.src], vmap[b.tgt], b.grade, b.label});
        out.through_trivial.push_back(a.through_trivial[e]);
    }
    out.vertex_idem.assign(out.vertex_labels.size(), -1);
    for (int v = 0; v < a.nvertices(); ++v)
        if (keep_vertex[v] && a.vertex_idem[v] >= 0 &&
            keep_elem[a.vertex_idem[v]])
            out.vertex_idem[vmap[v]] = emap[a.vertex_idem[v]];
    for (const auto& [pr, terms] : a.mult) {
        if (emap[pr.first] < 0 || emap[pr.second] < 0) continue;
        ProdTerms mapped;
        for (const auto& [c, k] : terms)
            if (emap[k] >= 0) mapped.emplace_back(c, emap[k]);
        if (!mapped.empty())
            out.mult[{emap[pr.first], emap[pr.second]}] = std::move(mapped);
    }
    return out;
}

} // namespace

FinDimAlgebra quotient_by_trivial_block(const FinDimAlgebra& a) {
    std::vector<char> keep_vertex(a.nvertices(), 0);
    Character zero{std::vector<long>(a.vertex_char.empty()
                                         ? 0
                                         : a.vertex_char[0].c.size(),
                                     0)};
    for (int v = 0; v < a.nvertices(); ++v)
        keep_vertex[v] = a.vertex_char[v] == zero ? 0 : 1;
    std::vector<char> keep_elem(a.dim(), 0);
    for (int e = 0; e < a.dim(); ++e) keep_elem[e] = a.through_trivial[e] ? 0 : 1;
    return restrict_algebra(a, a.name + "/<e>", keep_vertex, keep_elem);
}

FinDimAlgebra corner(const FinDimAlgebra& a, const std::set<Character>& kept) {
    std::vector<char> keep_vertex(a.nvertices(), 0);
    for (int v = 0; v < a.nvertices(); ++v)
        keep_vertex[v] = kept.count(a.vertex_char[v]) ? 1 : 0;
    std::vector<char> keep_elem(a.dim(), 0);
    for (int e = 0; e < a.dim(); ++e)
        keep_elem[e] =
            keep_vertex[a.basis[e].src] && keep_vertex[a.basis[e].tgt];
    return restrict_algebra(a, "e'(" + a.name + ")e'", keep_vertex, keep_elem);
}

QuiverPresentation quiver_presentation(const FinDimAlgebra& a) {
    QuiverPresentation out;
    out.quiver.name = "quiver(" + a.name + ")";
    out.quiver.group_spec = a.group_spec;
    out.quiver.vertices = a.vertex_labels;

    // component basis of the radical per (src, tgt) vertex pair
    std::map<std::pair<int, int>, std::vector<int>> comp;
    for (int e = 0; e < a.dim(); ++e)
        if (a.basis[e].grade > 0)
            comp[{a.basis[e].src, a.basis[e].tgt}].push_back(e);
    long rad = 0, radsq = 0;
    std::vector<std::pair<Arrow, int>> arrows;

    for (const auto& [st, elems] : comp) {
        rad += static_cast<long>(elems.size());
        std::map<int, int> local;  // basis index -> component coordinate
        for (size_t k = 0; k < elems.size(); ++k)
            local[elems[k]] = static_cast<int>(k);
        Echelon sq(static_cast<int>(elems.size()));
        // span of products of two radical elements landing in this component
        for (const auto& [pr, terms] : a.mult) {
            if (a.basis[pr.first].grade == 0 || a.basis[pr.second].grade == 0)
                continue;
            // product: apply pr.second then pr.first
            if (a.basis[pr.second].src != st.first ||
                a.basis[pr.first].tgt != st.second)
                continue;
            SVec v;
            for (const auto& [c, k] : terms) v.emplace_back(local.at(k), Q(c));
            std::sort(v.begin(), v.end());
            sq.insert(std::move(v));
        }
        radsq += sq.rank();
        for (size_t k = 0; k < elems.size(); ++k) {
            if (sq.insert(svec_unit(static_cast<int>(k)))) {
                arrows.emplace_back(
                    Arrow{a.vertex_labels[st.first], a.vertex_labels[st.second],
                          a.basis[elems[k]].label},
                    elems[k]);
            }
        }
    }
    out.rad_dim = rad;
    out.rad_sq_dim = radsq;
    std::sort(arrows.begin(), arrows.end());
    for (auto& [arr, rep] : arrows) {
        out.quiver.arrows.push_back(arr);
        out.arrow_reps.push_back(rep);
    }
    std::sort(out.quiver.vertices.begin(), out.quiver.vertices.end());
    return out;
}

std::vector<std::vector<long>> cartan_matrix(const FinDimAlgebra& a) {
    std::vector<std::vector<long>> c(
        a.nvertices(), std::vector<long>(a.nvertices(), 0));
    for (const auto& b : a.basis) c[b.tgt][b.src]++;
    return c;
}

GlobalDim global_dimension(const FinDimAlgebra& a, int cap) {
    // basis of each projective P_u = { b : src(b) == u }
    std::vector<std::vector<int>> proj(a.nvertices());
    std::vector<int> local(a.dim(), -1);
    for (int e = 0; e < a.dim(); ++e) {
        local[e] = static_cast<int>(proj[a.basis[e].src].size());
        proj[a.basis[e].src].push_back(e);
    }
    std::vector<int> radical;
    for (int e = 0; e < a.dim(); ++e)
        if (a.basis[e].grade > 0) radical.push_back(e);

    GlobalDim result;
    for (int v = 0; v < a.nvertices(); ++v) {
        // syzygy module of the vertex simple, as a submodule of a direct sum
        // of projectives; coordinates are pairs (summand, element of P_u)
        std::vector<int> summands = {v};
        auto coord_dim = [&]() {
            int n = 0;
            for (int u : summands) n += static_cast<int>(proj[u].size());
            return n;
        };
        auto offset = [&](int k) {
            int off = 0;
            for (int i = 0; i < k; ++i)
                off += static_cast<int>(proj[summands[i]].size());
            return off;
        };
        // first syzygy: the radical column of P_v
        SparseMat cur(coord_dim());
        for (int e : radical)
            if (a.basis[e].src == v) cur.rows.push_back(svec_unit(local[e]));
        int pd = 0;
        while (!cur.rows.empty()) {
            ++pd;
            if (pd > cap) {
                result.finite = false;
                result.value = cap;
                return result;
            }
            // act by a radical element on a module vector
            auto act = [&](int r, const SVec& m) {
                SVec out;
                for (const auto& [col, val] : m) {
                    // locate the summand of this coordinate
                    int k = 0, off = 0;
                    while (col >= off + static_cast<int>(proj[summands[k]].size())) {
                        off += static_cast<int>(proj[summands[k]].size());
                        ++k;
                    }
                    int e = proj[summands[k]][col - off];
                    for (const auto& [c, prod] : a.product(r, e))
                        svec_axpy(out, val * c, svec_unit(off + local[prod]));
                }
                return out;
            };
            // minimal generators: extend span(J * cur) by rows of cur,
            // projected to each target-vertex block in turn
            Echelon span(coord_dim());
            for (int r : radical)
                for (const auto& m : cur.rows) span.insert(act(r, m));
            std::vector<std::pair<int, SVec>> gens;  // (target vertex, vector)
            for (int u = 0; u < a.nvertices(); ++u) {
                for (const auto& m : cur.rows) {
                    SVec mu;
                    for (const auto& [col, val] : m) {
                        int k = 0, off = 0;
                        while (col >=
                               off + static_cast<int>(proj[summands[k]].size())) {
                            off += static_cast<int>(proj[summands[k]].size());
                            ++k;
                        }
                        int e = proj[summands[k]][col - off];
                        if (a.basis[e].tgt == u) mu.emplace_back(col, val);
                    }
                    if (!mu.empty() && span.insert(mu)) gens.emplace_back(u, mu);
                }
            }
            // next syzygy: kernel of the cover ⊕_g P_{u_g} -> cur
            std::vector<int> next_summands;
            for (const auto& [u, m] : gens) next_summands.push_back(u);
            SparseMat cover(coord_dim());
            for (const auto& [u, m] : gens)
                for (int e : proj[u]) cover.rows.push_back(act(e, m));
            SparseMat ker = kernel(cover);
            summands = std::move(next_summands);
            cur = SparseMat(coord_dim());
            cur.rows = ker.rows;
            cur.cols = coord_dim();
        }
        result.value = std::max(result.value, pd == 0 ? 0 : pd);
    }
    return result;
}

bool check_associativity(const FinDimAlgebra& a, long budget) {
    std::vector<std::vector<int>> by_src(a.nvertices()), by_tgt(a.nvertices());
    for (int e = 0; e < a.dim(); ++e) {
        by_src[a.basis[e].src].push_back(e);
        by_tgt[a.basis[e].tgt].push_back(e);
    }
    long total = 0;
    for (int j = 0; j < a.dim(); ++j)
        total += static_cast<long>(by_src[a.basis[j].tgt].size()) *
                 static_cast<long>(by_tgt[a.basis[j].src].size());
    long stride = std::max(1L, total / std::max(1L, budget));
    long seen = 0;
    for (int j = 0; j < a.dim(); ++j) {
        for (int i : by_src[a.basis[j].tgt]) {
            for (int k : by_tgt[a.basis[j].src]) {
                if (stride > 1 && (seen++ % stride)) continue;
                std::map<int, long> lhs, rhs;
                for (const auto& [c, r] : a.product(i, j))
                    for (const auto& [c2, s] : a.product(r, k))
                        lhs[s] += c * c2;
                for (const auto& [c, r] : a.product(j, k))
                    for (const auto& [c2, s] : a.product(i, r))
                        rhs[s] += c * c2;
                std::erase_if(lhs, [](const auto& p) { return p.second == 0; });
                std::erase_if(rhs, [](const auto& p) { return p.second == 0; });
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

std::string algebra_json(const FinDimAlgebra& a) {
    nlohmann::json j;
    j["name"] = a.name;
    j["group"] = a.group_spec;
    j["vertices"] = a.vertex_labels;
    j["dim"] = a.dim();
    j["basis"] = nlohmann::json::array();
    for (const auto& b : a.basis)
        j["basis"].push_back({{"label", b.label},
                              {"src", a.vertex_labels[b.src]},
                              {"tgt", a.vertex_labels[b.tgt]},
                              {"grade", b.grade}});
    j["mult"] = nlohmann::json::array();
    for (const auto& [pr, terms] : a.mult) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& [c, k] : terms) t.push_back({c, k});
        j["mult"].push_back({pr.first, pr.second, t});
    }
    return j.dump(2) + "\n";
}

} // namespace qsing
