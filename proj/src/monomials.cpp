#include "qsing/monomials.hpp"

#include <algorithm>
#include <string>

#include "qsing/errors.hpp"

namespace qsing {

int exp_degree(const Exp& a) {
    int n = 0;
    for (int e : a) n += e;
    return n;
}

Exp exp_mul(const Exp& a, const Exp& b) {
    Exp out = a;
    for (size_t j = 0; j < b.size(); ++j) out[j] += b[j];
    return out;
}

bool exp_divides(const Exp& a, const Exp& b) {
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

std::string exp_str(const Exp& a) {
    std::string s;
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        s += "x" + std::to_string(j + 1);
        if (a[j] > 1) s += "^" + std::to_string(a[j]);
    }
    return s.empty() ? "1" : s;
}

MonomialTable::MonomialTable(WeightGroup g, int max_degree)
    : g_(std::move(g)), max_degree_(max_degree), nchars_(g_.order) {
    if (max_degree_ < 0) throw WindowTooLarge("negative table degree");
    constexpr long cell_cap = 200'000'000L;
    if ((static_cast<long>(max_degree_) + 1) * nchars_ > cell_cap)
        throw WindowTooLarge("monomial table of " +
                             std::to_string((max_degree_ + 1) * nchars_) +
                             " cells exceeds the cap");

    // counts: one variable at a time; with variable j present,
    //   T(n, w) = T_without_j(n, w) + T(n-1, w - a_j)
    counts_.assign(max_degree_ + 1, std::vector<long>(nchars_, 0));
    counts_[0][g_.char_index(g_.zero_char())] = 1;
    for (int j = 0; j < g_.d; ++j) {
        const Character& aj = g_.weights[j];
        for (int n = 1; n <= max_degree_; ++n) {
            for (long w = 0; w < nchars_; ++w) {
                Character prev = g_.sub(g_.char_of_index(w), aj);
                counts_[n][w] += counts_[n - 1][g_.char_index(prev)];
            }
        }
    }

    // bases: enumerate all monomials of each degree in ascending lex order and
    // bucket them by character; within a bucket the order is therefore lex
    bases_.assign(max_degree_ + 1,
                  std::vector<std::vector<Exp>>(static_cast<size_t>(nchars_)));
    Exp a(static_cast<size_t>(g_.d), 0);
    auto enumerate = [&](auto&& self, int n, int remaining, int j) -> void {
        if (j == g_.d - 1) {
            a[j] = remaining;
            bases_[n][g_.char_index(weight_of(a))].push_back(a);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            a[j] = e;
            self(self, n, remaining - e, j + 1);
        }
        a[j] = 0;
    };
    for (int n = 0; n <= max_degree_; ++n) enumerate(enumerate, n, n, 0);

    // minimal invariant generators: an invariant monomial is minimal iff no
    // smaller positive-degree minimal invariant divides it
    const long zero_idx = g_.char_index(g_.zero_char());
    first_invariant_degree_ = max_degree_ + 1;
    for (int n = 1; n <= max_degree_; ++n) {
        if (counts_[n][zero_idx] > 0) {
            first_invariant_degree_ = n;
            break;
        }
    }
    if (first_invariant_degree_ > max_degree_)
        first_invariant_degree_ = std::max(1, max_degree_);
    for (int n = 1; n <= max_degree_; ++n) {
        for (const Exp& cand : bases_[n][zero_idx]) {
            bool minimal = true;
            for (const Exp& gmin : min_gens_) {
                if (exp_degree(gmin) < n && exp_divides(gmin, cand)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) min_gens_.push_back(cand);
        }
    }
}

void MonomialTable::check_degree(int n) const {
    if (n > max_degree_)
        throw WindowTooLarge("degree " + std::to_string(n) +
                             " beyond monomial table limit " +
                             std::to_string(max_degree_));
}

long MonomialTable::count(int n, const Character& w) const {
    if (n < 0) return 0;
    check_degree(n);
    return counts_[n][g_.char_index(w)];
}

static const std::vector<Exp> empty_basis;

const std::vector<Exp>& MonomialTable::basis(int n, const Character& w) const {
    if (n < 0) return empty_basis;
    check_degree(n);
    return bases_[n][g_.char_index(w)];
}

int MonomialTable::position(int n, const Character& w, const Exp& a) const {
    const auto& b = basis(n, w);
    auto it = std::lower_bound(b.begin(), b.end(), a);
    if (it != b.end() && *it == a) return static_cast<int>(it - b.begin());
    return -1;
}

Character MonomialTable::weight_of(const Exp& a) const {
    Character w = g_.zero_char();
    for (int j = 0; j < g_.d; ++j)
        for (size_t t = 0; t < w.c.size(); ++t)
            w.c[t] += static_cast<long>(a[j]) * g_.weights[j].c[t];
    return g_.reduce(std::move(w));
}

long MonomialTable::total(int n) const {
    if (n < 0) return 0;
    check_degree(n);
    long s = 0;
    for (long w = 0; w < nchars_; ++w) s += counts_[n][w];
    return s;
}

std::vector<long> MonomialTable::covariant_hilbert(const Character& i,
                                                   int nmax) const {
    check_degree(nmax);
    std::vector<long> dims(nmax + 1, 0);
    for (int n = 0; n <= nmax; ++n) dims[n] = count(n, i);
    return dims;
}

} // namespace qsing
