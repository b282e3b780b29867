#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qsing/gmodule.hpp"
#include "qsing/koszul.hpp"

namespace qsing {

// One minimal generator of a syzygy: its internal degree and its vector in
// the ambient coordinates of the module it generates (for step 0 the resolved
// module's own ambient, for step s >= 1 the free ambient of the previous
// cover, whose coordinates are pairs (generator, invariant monomial)).
struct ResGen {
    int degree = 0;
    SVec vec;
};

struct ResStep {
    std::vector<ResGen> gens;
    // no generator was found within the margin of the window top, so the
    // generator list is trusted to be complete
    bool conclusive = true;
};

// Truncated minimal graded free resolution. steps[s] describes F_s; the
// differential F_s -> F_{s-1} is read off the generator vectors of step s.
struct Resolution {
    const GradedModule* module = nullptr;
    int hi = 0;
    int margin = 0;
    bool terminated = false;  // a computed step had no generators
    std::vector<ResStep> steps;
    GradedModule tail;  // the syzygy left after the last computed step

    int computed_steps() const { return static_cast<int>(steps.size()) - 1; }
    std::vector<int> gen_degrees(int s) const;
    bool conclusive_upto(int s) const;
    // betti entry: number of generators of F_s in the given degree
    long betti(int s, int degree) const;
};

struct CellValue {
    long dim = 0;
    bool conclusive = true;
};

struct ExtTable {
    std::map<std::pair<int, int>, CellValue> entries;  // (n, twist) -> value
    bool all_conclusive() const;
    long total_dim() const;
};

struct EngineConfig {
    int degmax = 0;       // 0 = default 3 * d * max invariant factor
    int margin = -1;      // -1 = monomial-table default
    int table_slack = 30; // extra table degrees beyond degmax for twists
};

// Shared computation context for one group: monomial table, Koszul complex,
// canonical modules and their cached truncated resolutions. Cache access is
// serialized; heavy linear algebra runs outside the lock, so independent
// cells may be evaluated from several threads once the resolutions they need
// have been prewarmed.
class Engine {
  public:
    explicit Engine(WeightGroup g, EngineConfig cfg = {});

    const WeightGroup& group() const { return tab_->group(); }
    const MonomialTable& table() const { return *tab_; }
    std::shared_ptr<const MonomialTable> table_ptr() const { return tab_; }
    const KoszulComplex& koszul() const { return *koszul_; }
    int degmax() const { return degmax_; }
    int margin() const { return margin_; }

    const GradedModule& covariant(const Character& chi);
    const GradedModule& residue();
    const GradedModule& koszul_image(int p, const Character& chi);

    // truncated minimal resolution with at least smax steps (or terminated)
    const Resolution& resolution(const GradedModule& m, int smax);
    void prewarm(const GradedModule& m, int smax) { resolution(m, smax); }

    // dim Ext^n(X, Y(i))_0 from a minimal resolution of X; n = 0 gives
    // dim Hom^Z(X, Y(i))_0
    CellValue ext_cell(const GradedModule& x, const GradedModule& y, int n,
                       int i);
    // dim of Hom modulo maps factoring through projectives
    CellValue stable_hom_cell(const GradedModule& x, const GradedModule& y,
                              int i);
    // dim lhom(X, Y(i)[n]); n >= 1 through Ext, n <= -1 through the Serre
    // functor (-d)[d-1]; requires the Cohen-Macaulay tag on both modules
    CellValue shifted_stable_hom(const GradedModule& x, const GradedModule& y,
                                 int n, int i);

    ExtTable ext_dims(const GradedModule& x, const GradedModule& y, int nmax,
                      int tlo, int thi);
    ExtTable stable_hom(const GradedModule& x, const GradedModule& y, int tlo,
                        int thi);

  private:
    std::shared_ptr<const MonomialTable> tab_;
    std::unique_ptr<KoszulComplex> koszul_;
    int degmax_ = 0;
    int margin_ = 0;

    std::recursive_mutex mutex_;
    std::map<long, GradedModule> covariants_;
    std::map<std::pair<int, long>, GradedModule> images_;
    std::unique_ptr<GradedModule> residue_;
    std::map<std::string, Resolution> resolutions_;

    void grow(Resolution& res);
    std::vector<ResGen> detect_generators(const GradedModule& cur,
                                          bool& conclusive) const;
    GradedModule syzygy_module(const GradedModule& cur,
                               const std::vector<ResGen>& gens,
                               const std::string& label) const;

    struct Cochain {
        std::vector<int> offsets, dims;
        int total = 0;
        bool complete = true;
    };
    Cochain cochain(const Resolution& res, int s, const GradedModule& y,
                    int i) const;
    SparseMat dual_differential(const Resolution& res, int s,
                                const GradedModule& y, int i,
                                const Cochain& cfrom, const Cochain& cto) const;

    friend struct ExtWork;
};

} // namespace qsing
