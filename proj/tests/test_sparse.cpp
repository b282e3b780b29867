#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsing/sparse.hpp"

using namespace qsing;

static SVec vec(std::initializer_list<std::pair<int, int>> entries) {
    SVec v;
    for (auto [c, x] : entries)
        if (x != 0) v.emplace_back(c, Q(x));
    return v;
}

TEST_CASE("axpy merges and cancels") {
    SVec a = vec({{0, 1}, {2, 3}});
    svec_axpy(a, Q(2), vec({{1, 1}, {2, -1}}));
    CHECK(a == vec({{0, 1}, {1, 2}, {2, 1}}));
    svec_axpy(a, Q(-1), a);
    CHECK(a.empty());
}

TEST_CASE("echelon span and coords") {
    Echelon e(3);
    CHECK(e.insert(vec({{0, 1}, {1, 1}})));
    CHECK(e.insert(vec({{1, 2}})));
    CHECK_FALSE(e.insert(vec({{0, 3}, {1, 7}})));
    CHECK(e.rank() == 2);
    auto x = e.coords(vec({{0, 2}, {1, 5}}));
    REQUIRE(x.has_value());
    // rows are canonical: (1,0,0) and (0,1,0)
    CHECK((*x)[0] == Q(2));
    CHECK((*x)[1] == Q(5));
    CHECK_FALSE(e.coords(vec({{2, 1}})).has_value());
}

TEST_CASE("rref is canonical regardless of row order") {
    SparseMat m1(3), m2(3);
    m1.rows = {vec({{0, 2}, {1, 4}}), vec({{1, 1}, {2, 1}})};
    m2.rows = {vec({{1, 1}, {2, 1}}), vec({{0, 1}, {1, 2}})};
    CHECK(rref(m1).to_matrix() == rref(m2).to_matrix());
}

TEST_CASE("kernel of a rank-deficient map") {
    // rows: r0 = (1,0), r1 = (2,0), r2 = (0,1); kernel = span{2 r0 - r1},
    // normalized to leading coefficient 1
    SparseMat m(2);
    m.rows = {vec({{0, 1}}), vec({{0, 2}}), vec({{1, 1}})};
    SparseMat k = kernel(m);
    REQUIRE(k.nrows() == 1);
    SVec expect;
    expect.emplace_back(0, Q(1));
    expect.emplace_back(1, Q(-1, 2));
    CHECK(k.rows[0] == expect);
}

TEST_CASE("kernel composes to zero") {
    SparseMat m(3);
    m.rows = {vec({{0, 1}, {1, 2}}), vec({{0, 2}, {1, 4}}),
              vec({{1, 1}, {2, 1}}), vec({{0, 1}, {1, 1}, {2, -1}})};
    SparseMat k = kernel(m);
    CHECK(k.nrows() == 2);
    for (const auto& row : k.rows) CHECK(m.apply(row).empty());
}

TEST_CASE("rank and identity") {
    auto id = SparseMat::identity(4);
    CHECK(rank(id) == 4);
    CHECK(id.apply(vec({{2, 5}})) == vec({{2, 5}}));
}
