#include "qsing/weights.hpp"

#include <numeric>
#include <sstream>

#include "qsing/errors.hpp"

namespace qsing {

std::string Character::str() const {
    std::string s;
    for (size_t t = 0; t < c.size(); ++t) {
        if (t) s += '.';
        s += std::to_string(c[t]);
    }
    return s;
}

Character WeightGroup::zero_char() const {
    return Character{std::vector<long>(factors.size(), 0)};
}

Character WeightGroup::reduce(Character a) const {
    for (size_t t = 0; t < factors.size(); ++t) {
        a.c[t] %= factors[t];
        if (a.c[t] < 0) a.c[t] += factors[t];
    }
    return a;
}

Character WeightGroup::add(const Character& a, const Character& b) const {
    Character out = a;
    for (size_t t = 0; t < factors.size(); ++t) out.c[t] += b.c[t];
    return reduce(std::move(out));
}

Character WeightGroup::neg(const Character& a) const {
    Character out = a;
    for (auto& x : out.c) x = -x;
    return reduce(std::move(out));
}

Character WeightGroup::sub(const Character& a, const Character& b) const {
    return add(a, neg(b));
}

long WeightGroup::char_index(const Character& a) const {
    long idx = 0;
    for (size_t t = 0; t < factors.size(); ++t) idx = idx * factors[t] + a.c[t];
    return idx;
}

Character WeightGroup::char_of_index(long idx) const {
    Character a{std::vector<long>(factors.size(), 0)};
    for (size_t t = factors.size(); t-- > 0;) {
        a.c[t] = idx % factors[t];
        idx /= factors[t];
    }
    return a;
}

long WeightGroup::eigenvalue_exponent(long g_idx, int j) const {
    Character g = char_of_index(g_idx);
    long big = 1;
    for (long m : factors) big = std::lcm(big, m);
    long e = 0;
    for (size_t t = 0; t < factors.size(); ++t) {
        e = (e + g.c[t] * weights[j].c[t] % big * (big / factors[t])) % big;
    }
    return e;
}

std::string WeightGroup::spec_string() const {
    std::ostringstream os;
    os << "m=";
    for (size_t t = 0; t < factors.size(); ++t) {
        if (t) os << ',';
        os << factors[t];
    }
    os << ":a=";
    for (int j = 0; j < d; ++j) {
        if (j) os << (rank() > 1 ? ";" : ",");
        for (int t = 0; t < rank(); ++t) {
            if (t) os << ',';
            os << weights[j].c[t];
        }
    }
    return os.str();
}

namespace {

// Invokes fn once per non-identity group element with the vector of
// eigenvalue exponents (mod lcm of the factors) on the d variables; stops
// early when fn returns false. Avoids per-element allocation so the
// order-cap-sized groups stay cheap to scan.
template <class Fn>
void scan_nonidentity(const WeightGroup& g, Fn&& fn) {
    const size_t r = g.factors.size();
    long big = 1;
    for (long m : g.factors) big = std::lcm(big, m);
    std::vector<long> mult(r);
    for (size_t t = 0; t < r; ++t) mult[t] = big / g.factors[t];
    std::vector<long> gv(r, 0);
    std::vector<long> e(g.d, 0);
    for (long gi = 1; gi < g.order; ++gi) {
        for (size_t t = r; t-- > 0;) {
            if (++gv[t] < g.factors[t]) break;
            gv[t] = 0;
        }
        for (int j = 0; j < g.d; ++j) {
            long s = 0;
            for (size_t t = 0; t < r; ++t)
                s = (s + gv[t] * g.weights[j].c[t] % big * mult[t]) % big;
            e[j] = s;
        }
        if (!fn(e)) return;
    }
}

} // namespace

WeightGroup validate_group(const GroupSpec& spec) {
    if (spec.invariant_factors.empty())
        throw BadModulus("at least one invariant factor is required");
    for (long m : spec.invariant_factors)
        if (m < 1)
            throw BadModulus("invariant factor " + std::to_string(m) +
                             " is not a positive integer");
    if (spec.weights.empty()) throw Error("at least one variable is required");

    WeightGroup g;
    g.factors = spec.invariant_factors;
    g.d = static_cast<int>(spec.weights.size());
    g.order = 1;
    for (long m : g.factors) {
        g.order *= m;
        if (g.order > WeightGroup::order_cap)
            throw CapExceeded("group order exceeds cap " +
                              std::to_string(WeightGroup::order_cap));
    }
    for (const auto& col : spec.weights) {
        if (col.size() != g.factors.size())
            throw Error("weight column length does not match the number of "
                        "invariant factors");
        g.weights.push_back(g.reduce(Character{col}));
    }

    // Faithfulness: no group element other than the identity may act
    // trivially on every variable. A non-faithful presentation would silently
    // compute for the quotient group and corrupt every order-dependent count.
    bool faithful = true;
    scan_nonidentity(g, [&](const std::vector<long>& e) {
        for (long x : e)
            if (x != 0) return true;
        faithful = false;
        return false;
    });
    if (!faithful)
        throw NonFaithful(
            "weights generate a proper subgroup of the dual group; a "
            "non-identity element acts trivially");
    return g;
}

GroupSpec parse_group_string(const std::string& s) {
    // "m=5:a=1,2,2"  or  "m=2,4:a=1,0;0,1"
    auto fail = [&]() -> GroupSpec {
        throw UsageError("cannot parse group spec '" + s +
                         "' (expected m=...:a=...)");
    };
    auto split = [](const std::string& str, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : str) {
            if (ch == sep) {
                parts.push_back(cur);
                cur.clear();
            } else
                cur += ch;
        }
        parts.push_back(cur);
        return parts;
    };
    auto colon = s.find(':');
    if (colon == std::string::npos) return fail();
    std::string mpart = s.substr(0, colon), apart = s.substr(colon + 1);
    if (mpart.rfind("m=", 0) != 0 || apart.rfind("a=", 0) != 0) return fail();
    GroupSpec spec;
    try {
        for (const auto& tok : split(mpart.substr(2), ','))
            spec.invariant_factors.push_back(std::stol(tok));
        const size_t r = spec.invariant_factors.size();
        std::string body = apart.substr(2);
        std::vector<std::string> cols =
            r > 1 ? split(body, ';') : split(body, ',');
        for (const auto& cs : cols) {
            std::vector<long> col;
            for (const auto& tok : split(cs, ',')) col.push_back(std::stol(tok));
            if (col.size() != r) return fail();
            spec.weights.push_back(col);
        }
    } catch (const std::invalid_argument&) {
        return fail();
    } catch (const std::out_of_range&) {
        return fail();
    }
    return spec;
}

bool is_special_linear(const WeightGroup& g) {
    Character s = g.zero_char();
    for (const auto& a : g.weights) s = g.add(s, a);
    return s == g.zero_char();
}

bool is_small(const WeightGroup& g) {
    // small = no pseudo-reflection besides the identity; a diagonal element is
    // a pseudo-reflection iff it moves at most one variable
    bool small = true;
    scan_nonidentity(g, [&](const std::vector<long>& e) {
        int moved = 0;
        for (long x : e)
            if (x != 0) ++moved;
        if (moved <= 1) {
            small = false;
            return false;
        }
        return true;
    });
    return small;
}

bool acts_freely_off_origin(const WeightGroup& g) {
    bool free = true;
    scan_nonidentity(g, [&](const std::vector<long>& e) {
        for (long x : e)
            if (x == 0) {
                free = false;
                return false;
            }
        return true;
    });
    return free;
}

} // namespace qsing
