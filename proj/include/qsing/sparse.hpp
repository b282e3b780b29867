#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace qsing {

// All linear algebra in this project is exact over the rationals. Vectors are
// row vectors; a linear map from a space of dimension a to one of dimension b
// is an a-by-b matrix acting on the right (w = v * M).
using Q = mpq_class;

// Sparse row vector: (column, value) pairs, sorted by column, values nonzero.
using SVec = std::vector<std::pair<int, Q>>;

SVec svec_unit(int col, const Q& value = Q(1));
bool svec_is_zero(const SVec& v);
// dst += c * src
void svec_axpy(SVec& dst, const Q& c, const SVec& src);
void svec_scale(SVec& v, const Q& c);
SVec svec_add(const SVec& a, const SVec& b);
Q svec_get(const SVec& v, int col);

struct SparseMat {
    int cols = 0;
    std::vector<SVec> rows;

    SparseMat() = default;
    explicit SparseMat(int ncols) : cols(ncols) {}

    int nrows() const { return static_cast<int>(rows.size()); }
    static SparseMat identity(int n);

    // v * M  (v indexed by rows of M)
    SVec apply(const SVec& v) const;
    // this * M, composing row-space maps
    SparseMat mul(const SparseMat& m) const;

    bool operator==(const SparseMat& o) const = default;
};

// Incrementally maintained reduced row echelon span. Rows are kept fully
// reduced against each other and pivot-normalized, so the stored basis is the
// canonical RREF of the row space at every point.
struct Echelon {
    int cols = 0;
    std::vector<SVec> rows;   // sorted by pivot column
    std::vector<int> pivots;  // pivots[k] = leading column of rows[k]

    Echelon() = default;
    explicit Echelon(int ncols) : cols(ncols) {}

    int rank() const { return static_cast<int>(rows.size()); }
    // Reduce v against the span; returns the residual.
    SVec reduce(SVec v) const;
    // Insert v; returns true if the rank grew.
    bool insert(SVec v);
    // Coordinates of v in the stored basis, or nullopt if v is not in the span.
    std::optional<std::vector<Q>> coords(const SVec& v) const;
    SparseMat to_matrix() const;
};

Echelon rref(const SparseMat& m);
int rank(const SparseMat& m);
// Basis of { v : v * M = 0 }, returned as canonical RREF rows.
SparseMat kernel(const SparseMat& m);

} // namespace qsing
