#include "heckoid/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckoid {

bool SymmetrizedSet::contains(const std::string& w) const {
    return std::binary_search(elements.begin(), elements.end(), w);
}

SymmetrizedSet build_symmetrized(const Word& u, int n) {
    Word rel = (n == 1) ? u : power(u, n);
    SymmetrizedSet set;
    set.period = static_cast<int>(u.size());
    for (const Word& base : {rel, invert(rel)}) {
        const std::string& s = base.letters();
        for (std::size_t i = 0; i < s.size(); ++i)
            set.elements.push_back(s.substr(i) + s.substr(0, i));
    }
    std::sort(set.elements.begin(), set.elements.end());
    set.elements.erase(std::unique(set.elements.begin(), set.elements.end()),
                       set.elements.end());
    return set;
}

HeckoidContext build_context(const Slope& r_in, int n) {
    Slope r = r_in;
    bool mirrored = false;
    if (!r.is_infinity() && Slope(1, 2) < r && r < Slope(1, 1)) {
        r = mirror(r);
        mirrored = true;
    }
    HeckoidParams params(r, n);  // validates 0 < r < 1 and k >= 2

    HeckoidContext ctx{params, mirrored, u_word(r), power(u_word(r), n),
                       cs_of_slope(r),   sr_decomposition(r), {}, {}, {}, {}, {},
                       base_endpoints(r), {}};
    ctx.affix = affixes(ctx.decomp);
    IntervalPair hn = heckoid_intervals(params);
    ctx.i1n = hn.i1;
    ctx.i2n = hn.i2;
    IntervalPair hb = base_intervals(r);
    ctx.i1 = hb.i1;
    ctx.i2 = hb.i2;
    ctx.symmetrized = build_symmetrized(ctx.u_r, n);

    // Cross checks: relator length, run sequence <2n copies of (S1,S2)>, and
    // interval nesting.
    if (ctx.relator.size() != static_cast<std::size_t>(n) * ctx.u_r.size())
        throw std::runtime_error("relator length mismatch");
    RunSeq expect;
    for (int i = 0; i < 2 * n; ++i) {
        expect.insert(expect.end(), ctx.decomp.s1.begin(), ctx.decomp.s1.end());
        expect.insert(expect.end(), ctx.decomp.s2.begin(), ctx.decomp.s2.end());
    }
    if (!(cs_of_word(CyclicWord(ctx.relator)) == CyclicRunSeq{expect}))
        throw std::runtime_error("relator run sequence mismatch");
    if (!ctx.i1n.contains(ctx.hats.rhat1) || !ctx.i2n.contains(ctx.hats.rhat2) ||
        ctx.i1n.contains(r) || ctx.i2n.contains(r))
        throw std::runtime_error("interval nesting check failed");
    for (const std::string& e : ctx.symmetrized.elements)
        if (e.size() != ctx.relator.size())
            throw std::runtime_error("symmetrized element length mismatch");
    return ctx;
}

}  // namespace heckoid
