#include "heckoid/obstruction.hpp"

#include <algorithm>

#include "heckoid/pieces.hpp"

namespace heckoid {

std::string MatchReport::str() const {
    if (present)
        return "PRESENT at " + std::to_string(subword_start) + " shape " +
               runseq_str(witness_shape) + " (certifies nothing)";
    return "ABSENT: certificate of nontriviality in " + group;
}

namespace {

// Shared engine: scan the maximal common subwords of (v) with the symmetrized
// set and test each one's run shape against the relaxed patterns. A subword
// of a maximal common subword w has the exact interior runs of S(w) with
// freely truncated boundary runs, which is precisely what relax_ends encodes;
// common subwords are closed under shrinking, so scanning maximal ones
// decides existence.
MatchReport scan(const CyclicWord& v, const SymmetrizedSet& set,
                 const std::vector<Pattern>& patterns, std::string group) {
    MatchReport report;
    report.group = std::move(group);
    std::vector<Pattern> relaxed;
    relaxed.reserve(patterns.size());
    for (const Pattern& p : patterns) relaxed.push_back(relax_ends(p));
    for (const CommonSubword& cs : relator_subwords_of(v, set)) {
        Word w = v.rep().rotated(static_cast<std::size_t>(cs.start))
                     .subword(0, static_cast<std::size_t>(cs.length));
        RunSeq shape = s_seq(w);
        for (const Pattern& p : relaxed) {
            if (match_linear(shape, p).matched) {
                report.present = true;
                report.subword_start = cs.start;
                report.subword_length = cs.length;
                report.witness_shape = shape;
                return report;
            }
        }
    }
    return report;
}

}  // namespace

MatchReport obstruction_link(const CyclicWord& v, const Slope& r) {
    if (v.size() == 0) throw std::domain_error("obstruction of the empty word");
    SRDecomp d = sr_decomposition(r);
    SymmetrizedSet set = build_symmetrized(u_word(r), 1);
    std::vector<Pattern> pats{pat_exact(d.s1) + pat_exact(d.s2) + pat_any(),
                              pat_any() + pat_exact(d.s2) + pat_exact(d.s1)};
    return scan(v, set, pats, "G(K(" + r.str() + "))");
}

MatchReport obstruction_heckoid(const CyclicWord& v, const HeckoidContext& ctx) {
    if (v.size() == 0) throw std::domain_error("obstruction of the empty word");
    Pattern s1s2 = pat_exact(ctx.decomp.s1) + pat_exact(ctx.decomp.s2);
    Pattern s2s1 = pat_exact(ctx.decomp.s2) + pat_exact(ctx.decomp.s1);
    std::vector<Pattern> pats{pat_repeat(2 * ctx.n() - 1, s1s2) + pat_any(),
                              pat_any() + pat_repeat(2 * ctx.n() - 1, s2s1)};
    return scan(v, ctx.symmetrized, pats,
                "Hecke(" + ctx.r().str() + ";" + std::to_string(ctx.n()) + ")");
}

std::optional<PowerDecomposition> power_decompose(const Word& w, const Word& base) {
    if (base.size() < 2) throw std::domain_error("power base must have length >= 2");
    std::optional<PowerDecomposition> best;
    auto consider = [&](const Word& rot) {
        std::size_t bl = rot.size();
        std::size_t matched = 0;
        while (matched < w.size() && w[matched] == rot[matched % bl]) ++matched;
        int d = static_cast<int>(matched / bl);
        if (d < 1) return;
        std::size_t rest = w.size() - static_cast<std::size_t>(d) * bl;
        if (rest >= bl) return;  // remainder not shorter than the base
        if (!best || d > best->d) {
            PowerDecomposition pd;
            pd.d = d;
            pd.v = rot;
            pd.remainder = w.subword(static_cast<std::size_t>(d) * bl, rest);
            pd.remainder_is_prefix =
                rest == 0 || pd.remainder.letters() == rot.letters().substr(0, rest);
            best = std::move(pd);
        }
    };
    for (const Word& orient : {base, invert(base)})
        for (std::size_t i = 0; i < orient.size(); ++i) consider(orient.rotated(i));
    return best;
}

}  // namespace heckoid
