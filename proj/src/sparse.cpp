#include "qsing/sparse.hpp"

#include <algorithm>
#include <cassert>

namespace qsing {

SVec svec_unit(int col, const Q& value) {
    SVec v;
    if (value != 0) v.emplace_back(col, value);
    return v;
}

bool svec_is_zero(const SVec& v) { return v.empty(); }

void svec_axpy(SVec& dst, const Q& c, const SVec& src) {
    if (c == 0 || src.empty()) return;
    SVec out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i++]));
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, c * src[j].second);
            ++j;
        } else {
            Q val = dst[i].second + c * src[j].second;
            if (val != 0) out.emplace_back(dst[i].first, std::move(val));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

void svec_scale(SVec& v, const Q& c) {
    if (c == 0) {
        v.clear();
        return;
    }
    for (auto& [col, val] : v) val *= c;
}

SVec svec_add(const SVec& a, const SVec& b) {
    SVec out = a;
    svec_axpy(out, Q(1), b);
    return out;
}

Q svec_get(const SVec& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != v.end() && it->first == col) return it->second;
    return Q(0);
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n);
    m.rows.reserve(n);
    for (int i = 0; i < n; ++i) m.rows.push_back(svec_unit(i));
    return m;
}

SVec SparseMat::apply(const SVec& v) const {
    SVec out;
    for (const auto& [r, c] : v) {
        assert(r >= 0 && r < nrows());
        svec_axpy(out, c, rows[r]);
    }
    return out;
}

SparseMat SparseMat::mul(const SparseMat& m) const {
    SparseMat out(m.cols);
    out.rows.reserve(rows.size());
    for (const auto& r : rows) out.rows.push_back(m.apply(r));
    return out;
}

SVec Echelon::reduce(SVec v) const {
    // Stored rows are mutually reduced (zero at each other's pivots), so a
    // single pass with one coefficient per row is a full reduction.
    for (size_t k = 0; k < rows.size(); ++k) {
        if (v.empty()) break;
        if (pivots[k] < v.front().first) continue;
        Q c = svec_get(v, pivots[k]);
        if (c != 0) svec_axpy(v, -c, rows[k]);
    }
    return v;
}

bool Echelon::insert(SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Q lead = v.front().second;
    svec_scale(v, Q(1) / lead);
    int pc = v.front().first;
    for (size_t k = 0; k < rows.size(); ++k) {
        Q c = svec_get(rows[k], pc);
        if (c != 0) svec_axpy(rows[k], -c, v);
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), pc);
    size_t idx = static_cast<size_t>(pos - pivots.begin());
    pivots.insert(pos, pc);
    rows.insert(rows.begin() + idx, std::move(v));
    return true;
}

std::optional<std::vector<Q>> Echelon::coords(const SVec& v) const {
    std::vector<Q> x(rows.size(), Q(0));
    for (size_t k = 0; k < rows.size(); ++k) x[k] = svec_get(v, pivots[k]);
    SVec r = v;
    for (size_t k = 0; k < rows.size(); ++k)
        if (x[k] != 0) svec_axpy(r, -x[k], rows[k]);
    if (!r.empty()) return std::nullopt;
    return x;
}

SparseMat Echelon::to_matrix() const {
    SparseMat m(cols);
    m.rows = rows;
    return m;
}

Echelon rref(const SparseMat& m) {
    Echelon e(m.cols);
    for (const auto& r : m.rows) e.insert(r);
    return e;
}

int rank(const SparseMat& m) { return rref(m).rank(); }

SparseMat kernel(const SparseMat& m) {
    // Row-reduce [M | I], pivoting only on M-columns and keeping the work rows
    // mutually reduced there; rows whose M-part vanishes carry kernel vectors
    // in their identity tail.
    const int n = m.nrows();
    const int off = m.cols;
    std::vector<SVec> work;
    std::vector<int> wpiv;
    Echelon ker(n);
    for (int r = 0; r < n; ++r) {
        SVec v = m.rows[r];
        v.emplace_back(off + r, Q(1));
        for (size_t k = 0; k < work.size(); ++k) {
            Q c = svec_get(v, wpiv[k]);
            if (c != 0) svec_axpy(v, -c, work[k]);
        }
        if (!v.empty() && v.front().first < off) {
            Q lead = v.front().second;
            svec_scale(v, Q(1) / lead);
            int pc = v.front().first;
            for (size_t k = 0; k < work.size(); ++k) {
                Q c = svec_get(work[k], pc);
                if (c != 0) svec_axpy(work[k], -c, v);
            }
            auto pos = std::lower_bound(wpiv.begin(), wpiv.end(), pc);
            size_t idx = static_cast<size_t>(pos - wpiv.begin());
            wpiv.insert(pos, pc);
            work.insert(work.begin() + idx, std::move(v));
        } else {
            SVec kv;
            kv.reserve(v.size());
            for (const auto& [col, val] : v) kv.emplace_back(col - off, val);
            ker.insert(std::move(kv));
        }
    }
    return ker.to_matrix();
}

} // namespace qsing
