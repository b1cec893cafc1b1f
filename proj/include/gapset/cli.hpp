#pragma once

// Command-line surface: counting (descent or tree oracle), enumeration,
// almost symmetric listings, the cross-validation suites, and a benchmark.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapset/bijection.hpp"
#include "gapset/descent.hpp"
#include "gapset/formats.hpp"
#include "gapset/ideals.hpp"
#include "gapset/oracle.hpp"
#include "gapset/semigroup.hpp"

namespace gapset::cli {

struct RunConfig {
    enum class Command { count, enumerate_genus, almost_symmetric, verify, bench };
    enum class Method { descent, tree, oracle };
    enum class Format { text, json, csv };

    Command command = Command::count;
    Int genus = 0;
    Int frobenius = 0;
    std::optional<Int> type;
    Method method = Method::descent;
    Format format = Format::text;
    int workers = 1;
    bool full_check = false;
    bool low_memory = false;
    std::string checkpoint;
    Int max_genus = 6;
    Int max_frobenius = 12;
};

namespace detail {

inline DescentOptions descent_options(const RunConfig& cfg) {
    DescentOptions opts;
    opts.workers = cfg.workers;
    opts.full_check = cfg.full_check;
    opts.low_memory = cfg.low_memory;
    opts.checkpoint_path = cfg.checkpoint;
    return opts;
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
    CountReport report;
    if (cfg.method == RunConfig::Method::tree) {
        auto counts = oracle::tree_count_by_genus(cfg.genus);
        report.counts = std::move(counts);
        report.frobenius = -1;
    } else {
        report = count_by_genus(cfg.genus, descent_options(cfg));
    }
    switch (cfg.format) {
        case RunConfig::Format::text:
            for (std::size_t k = 0; k < report.counts.size(); ++k)
                out << "n" << (report.first_level + static_cast<Int>(k)) << " = "
                    << report.counts[k] << "\n";
            break;
        case RunConfig::Format::json: {
            nlohmann::json j;
            if (report.frobenius >= 0) j["F"] = report.frobenius;
            j["counts"] = report.counts;
            out << j.dump() << "\n";
            break;
        }
        case RunConfig::Format::csv:
            out << "level,count,seconds\n";
            for (std::size_t k = 0; k < report.counts.size(); ++k) {
                out << (report.first_level + static_cast<Int>(k)) << "," << report.counts[k] << ",";
                if (k < report.seconds.size()) {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.6f", report.seconds[k]);
                    out << buf;
                }
                out << "\n";
            }
            break;
    }
    return 0;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    auto emit = [&](const NumericalSemigroup& s) {
        if (cfg.format == RunConfig::Format::json)
            out << semigroup_json(s).dump() << "\n";
        else
            out << render_gaps(s) << "\n";
    };
    if (cfg.method == RunConfig::Method::tree) {
        for (const auto& s : oracle::tree_enumerate_by_genus(cfg.genus)) emit(s);
    } else if (cfg.format == RunConfig::Format::text) {
        // streaming: gap lists go straight out, no semigroup objects built
        enumerate_genus_gaps(cfg.genus, descent_options(cfg), [&](const std::vector<Int>& gaps) {
            out << "gaps:" << join_ints(gaps) << "\n";
        });
    } else {
        enumerate_genus_gaps(cfg.genus, descent_options(cfg), [&](const std::vector<Int>& gaps) {
            out << semigroup_json(from_gaps(gaps)).dump() << "\n";
        });
    }
    return 0;
}

inline int cmd_almost_symmetric(const RunConfig& cfg, std::ostream& out) {
    const Int f = cfg.frobenius;
    std::vector<NumericalSemigroup> list;
    if (cfg.type) {
        const Int t = *cfg.type;
        if ((f - t) % 2 != 0)
            throw DomainError("no almost symmetric semigroup has F-t odd (F=" + std::to_string(f) +
                              ", t=" + std::to_string(t) + ")");
        if (t < 0 || t > f) throw DomainError("type must be in [0, F]");
        if (2 * t >= f - 1)
            list = enumerate_almost_symmetric_high_type(f, t, descent_options(cfg));
        else
            list = oracle::enumerate_as_by_frobenius(f, t);
    } else {
        list = oracle::enumerate_as_by_frobenius(f);
    }
    std::vector<std::vector<Int>> pf_sets;
    pf_sets.reserve(list.size());
    for (const auto& s : list) {
        if (cfg.format == RunConfig::Format::json)
            out << semigroup_json(s).dump() << "\n";
        else
            out << render_gaps(s) << "\n";
        pf_sets.push_back(pseudo_frobenius(s).elements);
    }
    std::sort(pf_sets.begin(), pf_sets.end());
    pf_sets.erase(std::unique(pf_sets.begin(), pf_sets.end()), pf_sets.end());
    if (cfg.format == RunConfig::Format::json) {
        nlohmann::json j;
        j["count"] = list.size();
        j["distinct_pf"] = pf_sets.size();
        out << j.dump() << "\n";
    } else {
        out << "count=" << list.size() << " distinct_pf=" << pf_sets.size() << "\n";
    }
    return 0;
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    std::vector<CountReport> runs;
    for (int w = 1; w <= cfg.workers; ++w) {
        RunConfig one = cfg;
        one.workers = w;
        one.checkpoint.clear();
        runs.push_back(count_by_genus(cfg.genus, descent_options(one)));
    }
    for (const auto& r : runs)
        if (r.counts != runs.front().counts) {
            out << "error: counts differ across worker counts\n";
            return 1;
        }
    out << "level,count";
    for (int w = 1; w <= cfg.workers; ++w) out << ",seconds_w" << w;
    if (cfg.workers > 1) out << ",speedup";
    out << "\n";
    char buf[32];
    for (std::size_t k = 0; k < runs.front().counts.size(); ++k) {
        out << (k + 1) << "," << runs.front().counts[k];
        for (const auto& r : runs) {
            std::snprintf(buf, sizeof buf, "%.6f", r.seconds[k]);
            out << "," << buf;
        }
        if (cfg.workers > 1) {
            const double base = runs.front().seconds[k];
            const double last = runs.back().seconds[k];
            std::snprintf(buf, sizeof buf, "%.3f", last > 0 ? base / last : 0.0);
            out << "," << buf;
        }
        out << "\n";
    }
    return 0;
}

// ---- verification suites -------------------------------------------------

using Counterexample = std::optional<std::string>;

inline Counterexample suite_representation(Int max_genus) {
    for (Int g = 0; g <= max_genus; ++g)
        for (const auto& s : oracle::tree_enumerate_by_genus(g)) {
            if (!(from_gaps(s.gaps()) == s)) return render_gaps(s) + " gap round trip";
            if (!(from_generators(minimal_generators(s)) == s))
                return render_gaps(s) + " generator round trip";
            if (g == 0) continue;
            const InvariantSummary v = invariants(s);
            if (v.frobenius > 2 * g - 1) return render_gaps(s) + " violates F <= 2g-1";
            if (2 * g < v.frobenius + v.type) return render_gaps(s) + " violates g >= (F+t)/2";
            if (2 * g < v.frobenius + 1 || g > v.frobenius)
                return render_gaps(s) + " violates (F+1)/2 <= g <= F";
            const auto pf = pseudo_frobenius(s).elements;
            if (pf.empty() || pf.back() != v.frobenius)
                return render_gaps(s) + " PF must be nonempty with max F";
            if ((v.type == 1) != (2 * g == v.frobenius + 1))
                return render_gaps(s) + " type 1 must mean symmetric";
        }
    return std::nullopt;
}

inline Counterexample suite_pf_oracle(Int max_genus, Int max_frobenius) {
    for (Int g = 1; g <= max_genus; ++g)
        for (const auto& s : oracle::tree_enumerate_by_genus(g))
            if (!(oracle::pf_bruteforce(s) == pseudo_frobenius(s)))
                return render_gaps(s);
    for (Int f = 1; f <= max_frobenius; ++f)
        for (const auto& s : oracle::enumerate_by_frobenius(f))
            if (!(oracle::pf_bruteforce(s) == pseudo_frobenius(s)))
                return render_gaps(s);
    return std::nullopt;
}

inline Counterexample suite_almost_symmetric_routes(Int max_frobenius) {
    for (Int f = 1; f <= max_frobenius; ++f)
        for (const auto& s : oracle::enumerate_by_frobenius(f))
            if (is_almost_symmetric(s) != is_almost_symmetric_definitional(s))
                return render_gaps(s);
    return std::nullopt;
}

inline Counterexample suite_canonical_ideal(Int max_frobenius) {
    const Int fs_top = std::min<Int>(10, max_frobenius);
    const Int f_top = std::min<Int>(25, max_frobenius + 5);
    for (Int fs = 1; fs <= fs_top; ++fs)
        for (const auto& s : oracle::enumerate_by_frobenius(fs))
            for (Int f = fs + 1; f <= f_top; ++f)
                if (gaps_of_shifted_canonical(s, f) !=
                    shifted_canonical(s, f - s.frobenius()).positive_gaps())
                    return render_gaps(s) + " at F=" + std::to_string(f);
    for (Int f = 1; f <= f_top; ++f)
        if (gaps_of_shifted_canonical(NumericalSemigroup{}, f) !=
            shifted_canonical(NumericalSemigroup{}, f + 1).positive_gaps())
            return "gaps: at F=" + std::to_string(f);
    return std::nullopt;
}

inline Counterexample suite_round_trip(Int max_genus) {
    for (Int g = 1; g <= max_genus; ++g)
        for (const auto& s : oracle::tree_enumerate_by_genus(g))
            for (Int f : {4 * g - 1, 4 * g, 4 * g + 1, 4 * g + 5}) {
                const ForwardImage img = forward(s, f);
                if (!img.bijective) return render_gaps(s) + " image not flagged bijective";
                if (!(inverse(img.semigroup) == s))
                    return render_gaps(s) + " at F=" + std::to_string(f);
                const InvariantSummary v = invariants(img.semigroup);
                if (v.frobenius != f || v.genus != f - g || v.type != f - 2 * g ||
                    v.multiplicity != f - s.frobenius() || v.depth != 2 ||
                    !is_almost_symmetric_definitional(img.semigroup))
                    return render_gaps(img.semigroup) + " bad image invariants";
                if (!(image_pf(s, f) == pseudo_frobenius(img.semigroup)))
                    return render_gaps(s) + " PF formula at F=" + std::to_string(f);
                const auto dual = star_dual(img.semigroup);
                if (!is_relative_ideal(dual.small_elements(), dual.bound(), img.semigroup))
                    return render_gaps(img.semigroup) + " star dual not an ideal";
            }
    return std::nullopt;
}

inline Counterexample suite_surjectivity(Int max_frobenius) {
    for (Int f = 1; f <= max_frobenius; ++f) {
        const auto all_as = oracle::enumerate_as_by_frobenius(f);
        if (f == 20) {
            std::vector<std::vector<Int>> pfs;
            for (const auto& s : all_as) pfs.push_back(pseudo_frobenius(s).elements);
            std::sort(pfs.begin(), pfs.end());
            pfs.erase(std::unique(pfs.begin(), pfs.end()), pfs.end());
            if (all_as.size() != 103 || pfs.size() != 62)
                return "F=20 expected 103 semigroups / 62 PF sets, got " +
                       std::to_string(all_as.size()) + "/" + std::to_string(pfs.size());
        }
        for (Int g = 0; 4 * g - 1 <= f && f - 2 * g >= 0; ++g) {
            std::vector<NumericalSemigroup> fwd;
            for (const auto& s : oracle::tree_enumerate_by_genus(g))
                fwd.push_back(forward(s, f).semigroup);
            std::sort(fwd.begin(), fwd.end());
            std::vector<NumericalSemigroup> orc;
            for (const auto& t : all_as)
                if (static_cast<Int>(pseudo_frobenius(t).elements.size()) == f - 2 * g)
                    orc.push_back(t);
            if (fwd != orc)
                return "image set mismatch at F=" + std::to_string(f) +
                       " t=" + std::to_string(f - 2 * g);
        }
    }
    return std::nullopt;
}

inline Counterexample suite_pf_uniqueness(Int max_frobenius) {
    for (Int f = 1; f <= max_frobenius; ++f)
        for (Int t = f; 2 * t >= f - 1 && t >= 0; t -= 2) {
            const Int g = (f - t) / 2;
            std::map<std::vector<Int>, NumericalSemigroup> seen;
            for (const auto& s : oracle::enumerate_as_by_frobenius(f, t)) {
                auto pf = pseudo_frobenius(s);
                auto [it, inserted] = seen.emplace(pf.elements, s);
                if (!inserted) return render_gaps(s) + " shares PF with " + render_gaps(it->second);
                if (!(recover_from_pf(pf, g) == inverse(s)))
                    return render_gaps(s) + " recover_from_pf mismatch";
                if (!(forward(recover_from_pf(pf, g), f).semigroup == s))
                    return render_gaps(s) + " recover does not invert the pipeline";
            }
        }
    return std::nullopt;
}

inline Counterexample suite_prefix_soundness(Int max_genus) {
    const Int g_max = std::min<Int>(max_genus, 12);
    if (g_max < 1) return std::nullopt;
    std::vector<DescentState> frontier{initial_state(4 * g_max - 1)};
    for (Int level = 1; level <= g_max; ++level) {
        std::vector<DescentState> next;
        for (const auto& st : frontier) {
            auto fast = descent_step(st, false);
            auto full = descent_step(st, true);
            if (fast != full) {
                std::string pf = join_ints(to_pf_set(st.pf).elements);
                return "prefix and full check disagree at pf={" + pf + "}";
            }
            next.insert(next.end(), fast.begin(), fast.end());
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

inline Counterexample suite_theorem_agreement(Int max_genus) {
    const Int g_max = std::min<Int>(max_genus, 8);
    if (g_max < 1) return std::nullopt;
    const Int f = 4 * g_max - 1;
    std::vector<DescentState> frontier{initial_state(f)};
    for (Int level = 1; level <= g_max; ++level) {
        std::vector<DescentState> next;
        for (const auto& st : frontier) {
            // rebuild the state's semigroup and apply the reference step
            const NumericalSemigroup t =
                forward(recover_from_pf(to_pf_set(st.pf), level - 1), f).semigroup;
            const Int type = static_cast<Int>(pseudo_frobenius(t).elements.size());
            std::vector<DescentState> ref;
            for (Int i = type - 1; i < std::min(t.multiplicity(), f); ++i)
                if (auto child = descent_step_general(t, i))
                    ref.push_back(DescentState{pf_bits_from(pseudo_frobenius(*child)), i});
            std::sort(ref.begin(), ref.end());
            auto mine = descent_step(st);
            std::sort(mine.begin(), mine.end());
            if (mine != ref)
                return "descent_step disagrees with the reference step at " + render_gaps(t);
            next.insert(next.end(), mine.begin(), mine.end());
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

inline Counterexample suite_descent_tree_counts(Int max_genus) {
    const Int g_max = std::min<Int>(max_genus, oracle::genus_ceiling());
    if (g_max < 1) return std::nullopt;
    const auto descent = count_by_genus(g_max).counts;
    const auto tree = oracle::tree_count_by_genus(g_max);
    if (descent != tree) return "count tables differ";
    return std::nullopt;
}

inline Counterexample suite_high_type_characterization(Int max_frobenius) {
    for (Int f = 2; f <= max_frobenius; ++f)
        for (const auto& s : oracle::enumerate_by_frobenius(f)) {
            const Int t = static_cast<Int>(pseudo_frobenius(s).elements.size());
            if (2 * t < f - 1 || (f - t) % 2 != 0) continue;
            if (almost_symmetric_via_star_dual(s) != is_almost_symmetric(s))
                return render_gaps(s);
        }
    return std::nullopt;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Int g = cfg.max_genus;
    const Int f = cfg.max_frobenius;
    if (g < 0 || g > oracle::genus_ceiling() || f < 0 || f > oracle::frobenius_ceiling())
        throw DomainError("verification bounds exceed the oracle ceilings");
    const std::pair<std::string, Counterexample> suites[] = {
        {"representation-round-trip", suite_representation(g)},
        {"pf-oracle-equivalence", suite_pf_oracle(g, f)},
        {"almost-symmetric-two-routes", suite_almost_symmetric_routes(f)},
        {"canonical-ideal-complement", suite_canonical_ideal(f)},
        {"bijection-round-trip", suite_round_trip(g)},
        {"surjectivity-counting", suite_surjectivity(std::min<Int>(f, 23))},
        {"pf-uniqueness", suite_pf_uniqueness(std::min<Int>(f, 23))},
        {"optimization-soundness", suite_prefix_soundness(g)},
        {"descent-theorem-agreement", suite_theorem_agreement(g)},
        {"descent-tree-counts", suite_descent_tree_counts(g)},
        {"high-type-characterization", suite_high_type_characterization(f)},
    };
    int failures = 0;
    for (const auto& [name, cex] : suites) {
        if (cex) {
            ++failures;
            out << "FAIL " << name << ": " << *cex << "\n";
        } else {
            out << "PASS " << name << "\n";
        }
    }
    return failures ? 1 : 0;
}

}  // namespace detail

/// Parses arguments (program name excluded) and runs the selected command.
/// Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"numerical semigroup counting and enumeration via pseudo-Frobenius descent"};
    app.require_subcommand(1);

    const std::map<std::string, RunConfig::Method> methods{
        {"descent", RunConfig::Method::descent},
        {"tree", RunConfig::Method::tree},
        {"oracle", RunConfig::Method::oracle}};
    const std::map<std::string, RunConfig::Format> formats{{"text", RunConfig::Format::text},
                                                           {"json", RunConfig::Format::json},
                                                           {"csv", RunConfig::Format::csv}};

    auto* count = app.add_subcommand("count", "count numerical semigroups of genus 1..g");
    count->add_option("--genus", cfg.genus, "largest genus to count")->required();
    count->add_option("--method", cfg.method, "descent (default) or tree")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    count->add_option("--format", cfg.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    count->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    count->add_flag("--full-check", cfg.full_check, "probe all of PF' instead of the first floor(t/2) elements");
    count->add_flag("--low-memory", cfg.low_memory, "depth-first counting, no frontier kept");
    count->add_option("--checkpoint", cfg.checkpoint, "checkpoint file to write/resume");

    auto* enumerate = app.add_subcommand("enumerate", "list all numerical semigroups of a genus");
    enumerate->add_option("--genus", cfg.genus, "genus to enumerate")->required();
    enumerate->add_option("--method", cfg.method, "descent (default) or tree")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    enumerate->add_option("--format", cfg.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    enumerate->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    enumerate->add_flag("--full-check", cfg.full_check, "probe all of PF'");

    auto* almost = app.add_subcommand("almost-symmetric",
                                      "list almost symmetric semigroups with a given Frobenius number");
    almost->add_option("--frobenius", cfg.frobenius, "Frobenius number")->required();
    Int type_arg = 0;
    auto* type_opt = almost->add_option("--type", type_arg, "restrict to this type");
    almost->add_option("--format", cfg.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    almost->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    almost->add_flag("--full-check", cfg.full_check, "probe all of PF'");

    auto* verify = app.add_subcommand("verify", "run the cross-validation suites");
    verify->add_option("--max-genus", cfg.max_genus, "genus bound for the suites (default 6)");
    verify->add_option("--max-frobenius", cfg.max_frobenius,
                       "Frobenius bound for the suites (default 12)");

    auto* bench = app.add_subcommand("bench", "time the counting pipeline per level");
    bench->add_option("--genus", cfg.genus, "largest genus to count")->required();
    bench->add_option("--workers", cfg.workers, "run with 1..workers threads")
        ->check(CLI::PositiveNumber);
    bench->add_flag("--full-check", cfg.full_check, "probe all of PF'");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (count->parsed()) {
            cfg.command = RunConfig::Command::count;
            if (cfg.method == RunConfig::Method::tree && cfg.genus > oracle::genus_ceiling())
                throw DomainError("genus exceeds the tree-oracle ceiling");
            return detail::cmd_count(cfg, out);
        }
        if (enumerate->parsed()) {
            cfg.command = RunConfig::Command::enumerate_genus;
            if (cfg.method == RunConfig::Method::tree && cfg.genus > oracle::genus_ceiling())
                throw DomainError("genus exceeds the tree-oracle ceiling");
            if (cfg.format == RunConfig::Format::csv)
                throw DomainError("enumerate supports text or json output");
            return detail::cmd_enumerate(cfg, out);
        }
        if (almost->parsed()) {
            cfg.command = RunConfig::Command::almost_symmetric;
            if (type_opt->count() > 0) cfg.type = type_arg;
            if (cfg.format == RunConfig::Format::csv)
                throw DomainError("almost-symmetric supports text or json output");
            return detail::cmd_almost_symmetric(cfg, out);
        }
        if (verify->parsed()) {
            cfg.command = RunConfig::Command::verify;
            return detail::cmd_verify(cfg, out);
        }
        cfg.command = RunConfig::Command::bench;
        return detail::cmd_bench(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedInputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotCofiniteError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gapset::cli
