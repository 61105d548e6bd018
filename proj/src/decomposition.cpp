#include "heckoid/decomposition.hpp"

#include <stdexcept>

#include "heckoid/continued_fraction.hpp"

namespace heckoid {

namespace {

RunSeq copies(int count, int value) { return RunSeq(static_cast<std::size_t>(count), value); }

// t_i copies of (m+1), consecutive groups separated by a single m.
RunSeq phi(int m, const RunSeq& counts) {
    RunSeq out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out.push_back(m);
        out.insert(out.end(), static_cast<std::size_t>(counts[i]), m + 1);
    }
    return out;
}

// t_i copies of m, consecutive groups separated by a single m+1.
RunSeq psi(int m, const RunSeq& counts) {
    RunSeq out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out.push_back(m + 1);
        out.insert(out.end(), static_cast<std::size_t>(counts[i]), m);
    }
    return out;
}

SRDecomp decompose(const std::vector<std::int64_t>& t) {
    int m = static_cast<int>(t[0]);
    std::size_t k = t.size();
    if (k == 2)
        return {copies(1, m + 1), copies(static_cast<int>(t[1]) - 1, m), m};
    if (k == 3 && t[1] == 1)
        return {copies(static_cast<int>(t[2]), m + 1), copies(1, m), m};
    if (t[1] == 1) {
        SRDecomp inner = decompose({t.begin() + 2, t.end()});
        RunSeq s2{m};
        RunSeq mid = phi(m, inner.s2);
        s2.insert(s2.end(), mid.begin(), mid.end());
        s2.push_back(m);
        return {phi(m, inner.s1), std::move(s2), m};
    }
    std::vector<std::int64_t> rest(t.begin() + 1, t.end());
    rest[0] -= 1;
    SRDecomp inner = decompose(rest);
    RunSeq s1{m + 1};
    RunSeq mid = psi(m, inner.s2);
    s1.insert(s1.end(), mid.begin(), mid.end());
    s1.push_back(m + 1);
    return {std::move(s1), psi(m, inner.s1), m};
}

}  // namespace

SRDecomp sr_decomposition(const Slope& r) {
    if (!(Slope(0, 1) < r && r < Slope(1, 1)))
        throw std::domain_error("decomposition needs a slope strictly inside (0,1)");
    ContinuedFraction cf = cf_expand(r);
    if (cf.size() < 2)
        throw std::domain_error("slope " + r.str() + " has a one-term expansion");
    SRDecomp d = decompose(cf.terms);
    // Hard gate: <S1,S2,S1,S2> must reproduce the run sequence of the loop
    // word exactly (up to rotation).
    RunSeq cat;
    for (int rep = 0; rep < 2; ++rep) {
        cat.insert(cat.end(), d.s1.begin(), d.s1.end());
        cat.insert(cat.end(), d.s2.begin(), d.s2.end());
    }
    if (!(CyclicRunSeq{cat} == cs_of_slope(r)))
        throw std::runtime_error("block decomposition failed verification for r=" + r.str());
    return d;
}

Affixes affixes(const SRDecomp& d) {
    Affixes a;
    if (d.s1.size() > 1) {
        a.s1e.assign(d.s1.begin() + 1, d.s1.end());
        a.s1b.assign(d.s1.begin(), d.s1.end() - 1);
    }
    if (d.s2.size() > 1) {
        a.s2e.assign(d.s2.begin() + 1, d.s2.end());
        a.s2b.assign(d.s2.begin(), d.s2.end() - 1);
    }
    return a;
}

}  // namespace heckoid
