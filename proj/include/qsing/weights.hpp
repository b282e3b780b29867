#pragma once

#include <string>
#include <vector>

namespace qsing {

// Element of the character lattice ∏ Z/m_t, component-wise reduced.
struct Character {
    std::vector<long> c;

    bool operator==(const Character&) const = default;
    auto operator<=>(const Character&) const = default;
    std::string str() const;  // "2" for one factor, "1.0" for several
};

// A finite abelian group with a diagonal degree-1 action on d variables.
// The group is ∏ Z/m_t; column j records the character by which the group
// scales x_j. Always constructed through validate_group, which enforces that
// the columns are reduced and the action is faithful.
struct WeightGroup {
    std::vector<long> factors;       // invariant factors m_1..m_r, each >= 1
    int d = 0;                       // number of variables
    std::vector<Character> weights;  // d weight columns
    long order = 1;

    static constexpr long order_cap = 1'000'000;

    int rank() const { return static_cast<int>(factors.size()); }

    Character zero_char() const;
    Character reduce(Character a) const;
    Character add(const Character& a, const Character& b) const;
    Character neg(const Character& a) const;
    Character sub(const Character& a, const Character& b) const;

    // dense indexing of the character lattice, mixed radix
    long char_index(const Character& a) const;
    Character char_of_index(long idx) const;

    // exponent (mod lcm of the m_t) of the eigenvalue of group element g on
    // x_j; zero means the element fixes x_j
    long eigenvalue_exponent(long g_idx, int j) const;

    std::string spec_string() const;  // compact form, e.g. "m=5:a=1,2,2"
};

struct GroupSpec {
    std::vector<long> invariant_factors;
    std::vector<std::vector<long>> weights;  // d columns, each of length r
};

WeightGroup validate_group(const GroupSpec& spec);
// compact CLI form "m=5:a=1,2,2"; several factors: "m=2,4:a=1,0;0,1"
GroupSpec parse_group_string(const std::string& s);

bool is_special_linear(const WeightGroup& g);
bool is_small(const WeightGroup& g);
bool acts_freely_off_origin(const WeightGroup& g);

} // namespace qsing
