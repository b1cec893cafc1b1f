#pragma once

// Pseudo-Frobenius descent: counts and enumerates numerical semigroups by
// genus by walking almost symmetric semigroups of Frobenius number F from
// type F down to F-2g, two units of type per level. A state is just a PF
// set (it determines the semigroup in this regime) plus the multiplicity
// threaded from the previous step. Each step removes a symmetric pair
// {i, F-i} for i in [t+1, mult-1] and keeps the child when i + PF' avoids
// PF'; by default only the first floor(t/2) elements of PF' are probed,
// the full scan is available as a validation mode.

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gapset/bijection.hpp"
#include "gapset/semigroup.hpp"

namespace gapset {

/// Largest genus count_by_genus accepts; keeps F = 4g-1 within PfBits.
inline constexpr Int kMaxCountGenus = 30;

/// Compact set over [1, 127], the PF-set carrier of the descent.
struct PfBits {
    static constexpr Int kCapacity = 127;
    std::array<std::uint64_t, 2> words{};

    bool test(Int i) const { return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
    void set(Int i) { words[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(Int i) { words[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }

    Int count() const {
        return std::popcount(words[0]) + std::popcount(words[1]);
    }
    /// Largest set bit; -1 when empty.
    Int max() const {
        if (words[1]) return 127 - std::countl_zero(words[1]);
        if (words[0]) return 63 - std::countl_zero(words[0]);
        return -1;
    }
    /// Smallest set bit strictly above i; -1 when none.
    Int next_above(Int i) const {
        if (i < 63) {
            const std::uint64_t w = words[0] & (~std::uint64_t{0} << (i + 1));
            if (w) return std::countr_zero(w);
            i = 63;
        }
        if (i >= 127) return -1;
        const std::uint64_t hi = words[1] & (~std::uint64_t{0} << (i - 63));
        return hi ? 64 + std::countr_zero(hi) : -1;
    }

    std::string hex() const {
        char buf[33];
        std::snprintf(buf, sizeof buf, "%016llx%016llx",
                      static_cast<unsigned long long>(words[1]),
                      static_cast<unsigned long long>(words[0]));
        return buf;
    }
    static std::optional<PfBits> from_hex(const std::string& h) {
        if (h.size() != 32 || h.find_first_not_of("0123456789abcdef") != std::string::npos)
            return std::nullopt;
        PfBits b;
        b.words[1] = std::stoull(h.substr(0, 16), nullptr, 16);
        b.words[0] = std::stoull(h.substr(16, 16), nullptr, 16);
        return b;
    }

    friend bool operator==(const PfBits&, const PfBits&) = default;
    friend bool operator<(const PfBits& a, const PfBits& b) {
        if (a.words[1] != b.words[1]) return a.words[1] < b.words[1];
        return a.words[0] < b.words[0];
    }
};

inline PseudoFrobeniusSet to_pf_set(const PfBits& bits) {
    PseudoFrobeniusSet pf;
    for (Int e = bits.next_above(0); e >= 0; e = bits.next_above(e)) pf.elements.push_back(e);
    return pf;
}

inline PfBits pf_bits_from(const PseudoFrobeniusSet& pf) {
    PfBits b;
    for (Int e : pf.elements) {
        if (e < 1 || e > PfBits::kCapacity)
            throw DomainError("pseudo-Frobenius element out of descent range");
        b.set(e);
    }
    return b;
}

struct DescentState {
    PfBits pf;
    Int mult = 0;  // multiplicity of the current semigroup: the i of the previous step, F at the root
    friend bool operator==(const DescentState&, const DescentState&) = default;
    friend bool operator<(const DescentState& a, const DescentState& b) {
        if (!(a.pf == b.pf)) return a.pf < b.pf;
        return a.mult < b.mult;
    }
};

/// Root of a run with Frobenius number F: PF = {1..F}, the PF set of the
/// type-F semigroup {0} u [F+1, oo).
inline DescentState initial_state(Int frobenius) {
    if (frobenius < 1) throw DomainError("descent needs a positive Frobenius number");
    if (frobenius > PfBits::kCapacity)
        throw DomainError("Frobenius number exceeds descent capacity");
    DescentState st;
    for (Int x = 1; x <= frobenius; ++x) st.pf.set(x);
    st.mult = frobenius;
    return st;
}

namespace detail {

template <class Emit>
void expand_state(const DescentState& st, bool full_check, Emit&& emit) {
    const Int size = st.pf.count();
    if (size < 3) throw DomainError("descent state needs at least three PF elements");
    const Int frob = st.pf.max();
    const Int t = size - 2;
    if (2 * t < frob - 1) throw DomainError("descent step requires type >= (F-1)/2");
    const Int probe = full_check ? t : t / 2;
    for (Int i = t + 1; i < st.mult; ++i) {
        assert(2 * i > frob);  // i == F-i cannot happen in this regime
        PfBits child = st.pf;
        child.reset(i);
        child.reset(frob - i);
        bool ok = true;
        Int seen = 0;
        for (Int e = child.next_above(0); e >= 0 && seen < probe; e = child.next_above(e)) {
            ++seen;
            if (e + i > frob) break;  // later elements only grow
            if (child.test(e + i)) {
                ok = false;
                break;
            }
        }
        if (ok) emit(DescentState{child, i});
    }
}

}  // namespace detail

/// Children of a state: remove {i, F-i} for each i in [t+1, mult-1] and keep
/// the result when i + PF' misses PF'. With full_check off only the first
/// floor(t/2) elements of PF' are probed, mirroring the counting code this
/// descent reproduces; full_check probes all of PF'.
inline std::vector<DescentState> descent_step(const DescentState& st, bool full_check = false) {
    std::vector<DescentState> out;
    detail::expand_state(st, full_check, [&](const DescentState& child) { out.push_back(child); });
    return out;
}

/// Reference step on whole semigroups: adjoin i to an almost symmetric S and
/// keep the result when -i maps gaps outside and i + (PF(S) \ {i, F-i})
/// stays inside. descent_step must agree with this in the high-type regime.
inline std::optional<NumericalSemigroup> descent_step_general(const NumericalSemigroup& s, Int i) {
    if (s.genus() == 0 || s.frobenius() < 5)
        throw DomainError("reference step expects an almost symmetric semigroup with F >= 5");
    const Int frob = s.frobenius();
    const PseudoFrobeniusSet pf = pseudo_frobenius(s);
    const Int type = static_cast<Int>(pf.elements.size());
    if (type < 3 || (frob + type) % 2 != 0 || !is_almost_symmetric(s))
        throw DomainError("reference step expects an almost symmetric semigroup of type >= 3 with F+t even");
    // i = F would change the Frobenius number; it can only slip into the
    // stated range at the root state, where mult(S) = F+1
    if (i < type - 1 || i >= std::min(s.multiplicity(), frob))
        throw DomainError("adjoined element out of range");

    std::vector<Int> gaps;
    gaps.reserve(s.gaps().size() - 1);
    for (Int g : s.gaps())
        if (g != i) gaps.push_back(g);

    // condition: -i + gaps stays outside S' (negative values are outside for free)
    for (Int g : gaps) {
        const Int d = g - i;
        if (d < 0) continue;
        if (d == i || s.contains(d)) return std::nullopt;
    }
    // condition: i + (PF(S) \ {i, F-i}) lands in S'
    for (Int p : pf.elements) {
        if (p == i || p == frob - i) continue;
        const Int v = p + i;
        if (v != i && !s.contains(v)) return std::nullopt;
    }
    return from_gaps(std::move(gaps));
}

struct DescentOptions {
    int workers = 1;
    bool full_check = false;
    bool low_memory = false;          // depth-first, counts only
    std::string checkpoint_path;      // empty: no checkpointing
};

struct CountReport {
    Int frobenius = 0;
    Int first_level = 1;  // > 1 when resumed from a checkpoint
    std::vector<Int> counts;      // frontier size after each level, n_first_level..n_g
    std::vector<double> seconds;  // per level; empty in low-memory mode
};

struct Checkpoint {
    Int frobenius = 0;
    Int level = 0;
    std::vector<DescentState> states;
};

inline void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write checkpoint: " + tmp);
        out << "F=" << cp.frobenius << " level=" << cp.level << "\n";
        for (const auto& st : cp.states) out << st.pf.hex() << "," << st.mult << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot move checkpoint into place: " + path);
}

inline Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open checkpoint: " + path);
    Checkpoint cp;
    std::string line;
    long long frob = 0, level = 0;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "F=%lld level=%lld", &frob, &level) != 2)
        throw MalformedInputError("checkpoint header must be 'F=<int> level=<int>'");
    cp.frobenius = frob;
    cp.level = level;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw MalformedInputError("checkpoint line must be 'pf_bits_hex,mult'");
        auto bits = PfBits::from_hex(line.substr(0, comma));
        if (!bits) throw MalformedInputError("bad pf_bits_hex in checkpoint");
        DescentState st;
        st.pf = *bits;
        st.mult = std::stoll(line.substr(comma + 1));
        cp.states.push_back(st);
    }
    return cp;
}

namespace detail {

/// One breadth-first level. The frontier is split into contiguous blocks,
/// one per worker; the merged child list is sorted by (pf, mult), so the
/// result does not depend on the worker count.
inline std::vector<DescentState> expand_frontier(const std::vector<DescentState>& cur,
                                                 bool full_check, int workers) {
    std::vector<DescentState> next;
    if (workers <= 1 || cur.size() < 64) {
        for (const auto& st : cur) expand_state(st, full_check, [&](const DescentState& c) {
            next.push_back(c);
        });
    } else {
        const std::size_t n = cur.size();
        const std::size_t nblocks = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
        std::vector<std::vector<DescentState>> local(nblocks);
        std::vector<std::thread> pool;
        pool.reserve(nblocks);
        for (std::size_t b = 0; b < nblocks; ++b) {
            const std::size_t lo = n * b / nblocks;
            const std::size_t hi = n * (b + 1) / nblocks;
            pool.emplace_back([&, b, lo, hi] {
                for (std::size_t k = lo; k < hi; ++k)
                    expand_state(cur[k], full_check,
                                 [&](const DescentState& c) { local[b].push_back(c); });
            });
        }
        for (auto& th : pool) th.join();
        for (auto& blk : local) next.insert(next.end(), blk.begin(), blk.end());
    }
    std::sort(next.begin(), next.end());
    return next;
}

inline void dfs_count(const DescentState& st, Int level, Int g_max, bool full_check,
                      std::vector<Int>& counts) {
    expand_state(st, full_check, [&](const DescentState& child) {
        ++counts[static_cast<std::size_t>(level - 1)];
        if (level < g_max) dfs_count(child, level + 1, g_max, full_check, counts);
    });
}

inline CountReport run_descent(Int frobenius, Int levels, const DescentOptions& opts,
                               std::vector<DescentState>* final_frontier) {
    CountReport report;
    report.frobenius = frobenius;
    std::vector<DescentState> frontier{initial_state(frobenius)};
    Int start = 1;
    if (!opts.checkpoint_path.empty() && std::ifstream(opts.checkpoint_path).good()) {
        Checkpoint cp = load_checkpoint(opts.checkpoint_path);
        if (cp.frobenius != frobenius)
            throw DomainError("checkpoint was written for F=" + std::to_string(cp.frobenius));
        if (cp.level > levels) throw DomainError("checkpoint is past the requested level");
        frontier = std::move(cp.states);
        start = cp.level + 1;
        report.first_level = start;
    }
    for (Int j = start; j <= levels; ++j) {
        const auto t0 = std::chrono::steady_clock::now();
        frontier = expand_frontier(frontier, opts.full_check, opts.workers);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        report.counts.push_back(static_cast<Int>(frontier.size()));
        report.seconds.push_back(dt.count());
        if (!opts.checkpoint_path.empty())
            save_checkpoint(opts.checkpoint_path, Checkpoint{frobenius, j, frontier});
    }
    if (final_frontier) *final_frontier = std::move(frontier);
    return report;
}

}  // namespace detail

/// Runs g_max levels of descent at F = 4*g_max - 1. counts[j-1] is the
/// number of numerical semigroups of genus j. Deterministic for any worker
/// count.
inline CountReport count_by_genus(Int g_max, const DescentOptions& opts = {}) {
    if (g_max < 1 || g_max > kMaxCountGenus)
        throw DomainError("genus must be in [1, " + std::to_string(kMaxCountGenus) + "]");
    const Int frobenius = 4 * g_max - 1;
    if (opts.low_memory) {
        CountReport report;
        report.frobenius = frobenius;
        report.counts.assign(static_cast<std::size_t>(g_max), 0);
        detail::dfs_count(initial_state(frobenius), 1, g_max, opts.full_check, report.counts);
        return report;
    }
    return detail::run_descent(frobenius, g_max, opts, nullptr);
}

/// Final descent frontier mapped back to gap lists: the sorted gap lists of
/// all numerical semigroups of the given genus. `per_gaps` is invoked once
/// per semigroup in canonical order.
template <class PerGaps>
void enumerate_genus_gaps(Int genus, const DescentOptions& opts, PerGaps&& per_gaps) {
    if (genus < 1 || genus > kMaxCountGenus)
        throw DomainError("genus must be in [1, " + std::to_string(kMaxCountGenus) + "]");
    std::vector<DescentState> frontier;
    detail::run_descent(4 * genus - 1, genus, opts, &frontier);
    std::vector<std::vector<Int>> all;
    all.reserve(frontier.size());
    for (const auto& st : frontier)
        all.push_back(recover_from_pf(to_pf_set(st.pf), genus).gaps());
    std::sort(all.begin(), all.end());
    for (auto& gaps : all) per_gaps(gaps);
}

/// All numerical semigroups of the given genus, canonical order, length n_g.
inline std::vector<NumericalSemigroup> enumerate_genus(Int genus, const DescentOptions& opts = {}) {
    std::vector<NumericalSemigroup> out;
    enumerate_genus_gaps(genus, opts, [&](const std::vector<Int>& gaps) {
        out.push_back(from_gaps(gaps));
    });
    return out;
}

/// Almost symmetric semigroups with Frobenius number F and type t in the
/// high-type regime (t >= (F-1)/2, F-t even): descend g = (F-t)/2 levels at
/// F itself, then push each recovered source through the forward map.
inline std::vector<NumericalSemigroup> enumerate_almost_symmetric_high_type(
    Int frobenius, Int type, const DescentOptions& opts = {}) {
    if (frobenius < 1 || type < 0 || type > frobenius || 2 * type < frobenius - 1 ||
        (frobenius - type) % 2 != 0)
        throw DomainError("high-type enumeration needs 0 <= t <= F, t >= (F-1)/2 and F-t even");
    if (frobenius > PfBits::kCapacity)
        throw DomainError("Frobenius number exceeds descent capacity");
    const Int genus = (frobenius - type) / 2;
    std::vector<NumericalSemigroup> out;
    if (genus == 0) {
        std::vector<Int> gaps(static_cast<std::size_t>(frobenius));
        for (Int x = 1; x <= frobenius; ++x) gaps[static_cast<std::size_t>(x - 1)] = x;
        out.push_back(from_gaps(std::move(gaps)));
        return out;
    }
    std::vector<DescentState> frontier;
    detail::run_descent(frobenius, genus, opts, &frontier);
    out.reserve(frontier.size());
    for (const auto& st : frontier) {
        NumericalSemigroup source = recover_from_pf(to_pf_set(st.pf), genus);
        out.push_back(forward(source, frobenius).semigroup);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gapset
