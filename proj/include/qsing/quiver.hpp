#pragma once

#include <string>
#include <vector>

#include "qsing/weights.hpp"

namespace qsing {

struct Arrow {
    std::string src, dst, label;
    bool operator==(const Arrow&) const = default;
    auto operator<=>(const Arrow&) const = default;
};

// Labeled multigraph. Kept normalized (vertices sorted and unique, arrows
// sorted as a multiset) so equality is multiset equality and serialization is
// byte-stable.
struct Quiver {
    std::string name;
    std::string group_spec;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    void normalize();
    bool has_vertex(const std::string& v) const;
    int out_degree(const std::string& v) const;
    int in_degree(const std::string& v) const;
    Quiver opposite() const;
    // partition of the vertex set into weakly connected components
    std::vector<std::vector<std::string>> components() const;

    bool operator==(const Quiver&) const = default;
};

std::string plain_vertex(const Character& chi);
std::string folded_vertex(int p, const Character& chi);

// vertex set = characters, arrows x_j : i -> i + a_j
Quiver mckay_quiver(const WeightGroup& g);
// vertex set = {1..d} x characters, arrows x_j : (p,i) -> (p+1, i+a_j)
Quiver folded_quiver(const WeightGroup& g);
// folded quiver with the trivial-character column removed
Quiver stable_folded_quiver(const WeightGroup& g);

// format is "dot" or "json"
std::string emit(const Quiver& q, const std::string& format);
Quiver parse_quiver_json(const std::string& text);

} // namespace qsing
