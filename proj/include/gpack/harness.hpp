#ifndef GPACK_HARNESS_HPP
#define GPACK_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "gpack/conditions.hpp"
#include "gpack/generators.hpp"
#include "gpack/invariants.hpp"
#include "gpack/packing.hpp"
#include "gpack/swaps.hpp"

namespace gpack::harness {

using json = nlohmann::json;

// ---- worker pool -------------------------------------------------------------

inline int default_worker_count() {
    if (const char* env = std::getenv("GPACK_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// runs fn(0..count-1) on `workers` threads; caller owns result slots, so
// output order is input order regardless of scheduling
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    const int nthreads = int(std::min<std::size_t>(std::size_t(workers), count));
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(nthreads));
    for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// ---- report records ------------------------------------------------------------
//
// One JSON object per line. The first line of a report file is a header
// carrying the timestamp and total elapsed time; record lines contain only
// deterministic fields, so re-running a command with the same flags and
// seed reproduces the record block byte for byte.

inline constexpr int kReportSchemaVersion = 1;

struct ReportRecord {
    std::string id;
    long long n = 0;
    long long delta1 = 0, delta2 = 0, codeg1 = 0, adjcodeg2 = 0;
    std::string outcome; // packs | no | inconclusive
    std::optional<std::vector<int>> witness;
    std::uint64_t nodes = 0;
    std::map<std::string, bool> conditions;
    std::string g1_g6, g2_g6; // replayable instance dump
};

inline json to_json(const ReportRecord& r) {
    json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["delta1"] = r.delta1;
    j["delta2"] = r.delta2;
    j["codeg1"] = r.codeg1;
    j["adjcodeg2"] = r.adjcodeg2;
    j["outcome"] = r.outcome;
    if (r.witness) j["witness"] = *r.witness;
    j["nodes"] = r.nodes;
    if (!r.conditions.empty()) j["conditions"] = r.conditions;
    if (!r.g1_g6.empty()) j["g1"] = r.g1_g6;
    if (!r.g2_g6.empty()) j["g2"] = r.g2_g6;
    return j;
}

inline ReportRecord record_from_json(const json& j) {
    ReportRecord r;
    r.id = j.value("id", "");
    r.n = j.value("n", 0ll);
    r.delta1 = j.value("delta1", 0ll);
    r.delta2 = j.value("delta2", 0ll);
    r.codeg1 = j.value("codeg1", 0ll);
    r.adjcodeg2 = j.value("adjcodeg2", 0ll);
    r.outcome = j.value("outcome", "");
    if (j.contains("witness")) r.witness = j["witness"].get<std::vector<int>>();
    r.nodes = j.value("nodes", std::uint64_t(0));
    if (j.contains("conditions")) r.conditions = j["conditions"].get<std::map<std::string, bool>>();
    r.g1_g6 = j.value("g1", "");
    r.g2_g6 = j.value("g2", "");
    return r;
}

inline void write_report(std::ostream& os, const std::string& command,
                         const std::vector<ReportRecord>& records, double elapsed_ms) {
    json header;
    header["schema_version"] = kReportSchemaVersion;
    header["kind"] = "gpack-report";
    header["command"] = command;
    const auto now = std::chrono::system_clock::now();
    header["generated_at"] =
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    header["elapsed_ms"] = elapsed_ms;
    os << header.dump() << "\n";
    for (const auto& r : records) os << to_json(r).dump() << "\n";
}

inline std::vector<ReportRecord> read_report(std::istream& is) {
    std::vector<ReportRecord> out;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        if (first && j.value("kind", "") == "gpack-report") {
            first = false;
            continue;
        }
        first = false;
        out.push_back(record_from_json(j));
    }
    return out;
}

inline const std::vector<std::string>& report_csv_columns() {
    static const std::vector<std::string> cols = {
        "id",  "n",     "delta1",  "delta2",     "codeg1", "adjcodeg2",
        "outcome", "nodes", "witness", "conditions", "g1",     "g2"};
    return cols;
}

inline void write_report_csv(std::ostream& os, const std::vector<ReportRecord>& records) {
    const auto& cols = report_csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << cols[i] << (i + 1 < cols.size() ? "," : "\n");
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    for (const auto& r : records) {
        std::string witness;
        if (r.witness) {
            for (std::size_t i = 0; i < r.witness->size(); ++i)
                witness += (i ? " " : "") + std::to_string((*r.witness)[i]);
        }
        std::string conds;
        for (const auto& [k, v] : r.conditions) conds += k + "=" + (v ? "1" : "0") + ";";
        os << quote(r.id) << "," << r.n << "," << r.delta1 << "," << r.delta2 << "," << r.codeg1
           << "," << r.adjcodeg2 << "," << r.outcome << "," << r.nodes << "," << quote(witness)
           << "," << quote(conds) << "," << quote(r.g1_g6) << "," << quote(r.g2_g6) << "\n";
    }
}

// ---- graph6 line files -----------------------------------------------------------

inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

inline void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const auto& g : graphs) out << graph6_encode(g) << "\n";
}

// ---- instance statistics & packing runs -------------------------------------------

struct InstanceStats {
    long long n = 0;
    long long delta1 = 0, delta2 = 0, codeg1 = 0, adjcodeg2 = 0;
};

inline InstanceStats instance_stats(const Graph& g1, const Graph& g2) {
    InstanceStats st;
    st.n = g1.n();
    st.delta1 = max_degree(g1);
    st.delta2 = max_degree(g2);
    st.codeg1 = max_codegree(g1);
    st.adjcodeg2 = max_adjacent_codegree(g2);
    return st;
}

enum class Solver { exact, local_search, both };

inline ReportRecord run_pack(const std::string& id, const Graph& g1, const Graph& g2,
                             Solver solver, std::uint64_t budget, std::uint64_t max_steps,
                             std::uint64_t seed) {
    if (g1.n() != g2.n()) throw std::invalid_argument("run_pack: size mismatch");
    const InstanceStats st = instance_stats(g1, g2);
    ReportRecord rec;
    rec.id = id;
    rec.n = st.n;
    rec.delta1 = st.delta1;
    rec.delta2 = st.delta2;
    rec.codeg1 = st.codeg1;
    rec.adjcodeg2 = st.adjcodeg2;
    rec.g1_g6 = graph6_encode(g1);
    rec.g2_g6 = graph6_encode(g2);

    PackingResult res;
    if (solver == Solver::exact) {
        res = packs_exact(g1, g2, budget);
    } else if (solver == Solver::local_search) {
        res = local_search_pack(g1, g2, seed, max_steps);
    } else {
        res = local_search_pack(g1, g2, seed, max_steps);
        if (res.status != PackStatus::packed) {
            const std::uint64_t ls_nodes = res.nodes;
            res = packs_exact(g1, g2, budget);
            res.nodes += ls_nodes;
        }
    }
    rec.nodes = res.nodes;
    rec.outcome = res.status == PackStatus::packed
                      ? "packs"
                      : (res.status == PackStatus::no_packing ? "no" : "inconclusive");
    if (res.witness) rec.witness = res.witness->perm;
    return rec;
}

// ---- condition verification ---------------------------------------------------------

enum class ConditionKind { sauer_spencer, bec, corollary3 };

inline std::string condition_name(ConditionKind k) {
    switch (k) {
        case ConditionKind::sauer_spencer: return "sauer-spencer";
        case ConditionKind::bec: return "bec";
        case ConditionKind::corollary3: return "corollary3";
    }
    return "?";
}

inline ConditionKind condition_from_name(const std::string& s) {
    if (s == "sauer-spencer") return ConditionKind::sauer_spencer;
    if (s == "bec") return ConditionKind::bec;
    if (s == "corollary3") return ConditionKind::corollary3;
    throw std::invalid_argument("unknown condition: " + s);
}

inline bool condition_holds(ConditionKind kind, const InstanceStats& st) {
    switch (kind) {
        case ConditionKind::sauer_spencer:
            return sauer_spencer_applies(st.n, st.delta1, st.delta2);
        case ConditionKind::bec: return bec_condition(st.n, st.delta1, st.delta2);
        case ConditionKind::corollary3: {
            const int t = int(std::max(2ll, st.codeg1 + 1));
            return corollary3_applies(st.n, st.delta1, st.delta2, st.codeg1, t);
        }
    }
    return false;
}

struct VerifySummary {
    std::uint64_t pairs_examined = 0;   // candidate pairs looked at
    std::uint64_t satisfying = 0;       // pairs meeting the condition
    std::uint64_t packed = 0;
    std::uint64_t failures = 0;         // condition held but no packing: theorem violation
    std::uint64_t inconclusive = 0;
    std::vector<ReportRecord> failure_dumps;
};

// Exhaustive implication check over all labeled pairs on n vertices:
// condition(G1, G2) => packs. Any failure would contradict a theorem (or
// expose a solver bug) and is dumped as a replayable record.
inline VerifySummary verify_exhaustive(int n, ConditionKind kind,
                                       std::uint64_t budget = 100'000'000) {
    if (n < 0 || n > kEnumerationCap)
        throw std::invalid_argument("verify_exhaustive: n exceeds enumeration cap");
    const std::vector<Graph> graphs = enumerate_graphs(n);
    std::vector<InstanceStats> stats;
    stats.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        stats.push_back(instance_stats(graphs[i], graphs[i]));

    VerifySummary sum;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = 0; j < graphs.size(); ++j) {
            ++sum.pairs_examined;
            InstanceStats st;
            st.n = n;
            st.delta1 = stats[i].delta1;
            st.delta2 = stats[j].delta2;
            st.codeg1 = stats[i].codeg1;
            st.adjcodeg2 = stats[j].adjcodeg2;
            if (!condition_holds(kind, st)) continue;
            ++sum.satisfying;
            const PackingResult res = packs_exact(graphs[i], graphs[j], budget);
            if (res.status == PackStatus::packed) {
                ++sum.packed;
            } else {
                ReportRecord rec = run_pack("exhaustive-n" + std::to_string(n) + "-" +
                                                std::to_string(i) + "-" + std::to_string(j),
                                            graphs[i], graphs[j], Solver::exact, budget, 0, 0);
                if (res.status == PackStatus::inconclusive) {
                    ++sum.inconclusive;
                } else {
                    ++sum.failures;
                }
                sum.failure_dumps.push_back(std::move(rec));
            }
        }
    }
    return sum;
}

// Randomized implication check at sizes beyond the enumeration cap: sample
// bounded-degree pairs, keep those meeting the condition, solve exactly.
inline VerifySummary verify_sampled(ConditionKind kind, int n, std::uint64_t trials,
                                    std::uint64_t seed, std::uint64_t budget = 100'000'000,
                                    int workers = 1) {
    if (n < 1) throw std::invalid_argument("verify_sampled: n must be positive");
    if (trials < 1) throw std::invalid_argument("verify_sampled: trials must be >= 1");
    std::vector<std::uint64_t> trial_seeds(trials);
    SplitMix64 master(seed);
    for (auto& s : trial_seeds) s = master.next();

    struct Slot {
        bool satisfying = false;
        bool packed = false;
        bool inconclusive = false;
        std::optional<ReportRecord> dump;
    };
    std::vector<Slot> slots(trials);

    parallel_for(trials, workers, [&](std::size_t i) {
        SplitMix64 rng(trial_seeds[i]);
        // cap degrees so that condition-satisfying pairs are common
        const int cap = std::max(1, n / 2);
        const int d1 = int(rng.next_below(std::uint64_t(cap)) + 1);
        const int d2 = int(rng.next_below(std::uint64_t(cap)) + 1);
        const Graph g1 = random_bounded_degree(n, d1, rng.next());
        const Graph g2 = random_bounded_degree(n, d2, rng.next());
        const InstanceStats st = instance_stats(g1, g2);
        if (!condition_holds(kind, st)) return;
        slots[i].satisfying = true;
        const PackingResult res = packs_exact(g1, g2, budget);
        if (res.status == PackStatus::packed) {
            slots[i].packed = true;
        } else {
            slots[i].inconclusive = res.status == PackStatus::inconclusive;
            slots[i].dump = run_pack("sample-" + std::to_string(i), g1, g2, Solver::exact, budget,
                                     0, 0);
        }
    });

    VerifySummary sum;
    sum.pairs_examined = trials;
    for (auto& s : slots) {
        if (!s.satisfying) continue;
        ++sum.satisfying;
        if (s.packed) {
            ++sum.packed;
        } else if (s.inconclusive) {
            ++sum.inconclusive;
            sum.failure_dumps.push_back(std::move(*s.dump));
        } else {
            ++sum.failures;
            sum.failure_dumps.push_back(std::move(*s.dump));
        }
    }
    return sum;
}

// The corollary-3 scale experiment: n = 72, G2 = 36.K2 (Delta2 = 1), G1 a
// random K_{2,2}-free graph with hub degree exactly 35, so the corollary
// guarantees a packing (t = 2: 35 > 34 = 17*t*Delta2, 35+35 <= 73).
struct Corollary3ScaleSummary {
    std::uint64_t trials = 0;
    std::uint64_t condition_holds = 0;
    std::uint64_t exact_packed = 0;
    std::uint64_t exact_failures = 0;
    std::uint64_t local_packed = 0;
};

inline Corollary3ScaleSummary run_corollary3_scale(std::uint64_t trials, std::uint64_t seed,
                                                   bool run_exact, bool run_local,
                                                   std::uint64_t budget = 100'000'000,
                                                   std::uint64_t max_steps = 100'000,
                                                   int workers = 1) {
    const int n = 72, dmax = 35, t = 2;
    std::vector<std::uint64_t> trial_seeds(trials);
    SplitMix64 master(seed);
    for (auto& s : trial_seeds) s = master.next();

    struct Slot {
        bool cond = false;
        bool exact_ok = false;
        bool local_ok = false;
    };
    std::vector<Slot> slots(trials);
    const Graph g2 = matching(n);

    parallel_for(trials, workers, [&](std::size_t i) {
        const Graph g1 = random_k2t_free(n, dmax, t, trial_seeds[i]);
        const InstanceStats st = instance_stats(g1, g2);
        slots[i].cond = corollary3_applies(st.n, st.delta1, st.delta2, st.codeg1, t);
        if (run_exact) {
            const PackingResult res = packs_exact(g1, g2, budget);
            slots[i].exact_ok = res.packs();
        }
        if (run_local) {
            const PackingResult res = local_search_pack(g1, g2, trial_seeds[i], max_steps);
            slots[i].local_ok = res.packs();
        }
    });

    Corollary3ScaleSummary sum;
    sum.trials = trials;
    for (const auto& s : slots) {
        sum.condition_holds += s.cond;
        sum.exact_packed += s.exact_ok;
        if (run_exact && !s.exact_ok) ++sum.exact_failures;
        sum.local_packed += s.local_ok;
    }
    return sum;
}

// ---- equitable coloring ----------------------------------------------------------
//
// Packs G with a disjoint union of `colors` cliques of near-equal sizes and
// reads the color classes off the witness: vertices sharing a clique image
// are pairwise non-adjacent in G, and class sizes differ by at most one.

struct EquitableResult {
    PackStatus status = PackStatus::inconclusive;
    int colors = 0;
    std::vector<int> color_of;   // per vertex of G, when packed
    std::vector<int> class_sizes;
    bool degree_premise_holds = false; // Delta^2 >= 17 t n
    bool corollary_premises_hold = false;
};

inline bool validate_equitable(const Graph& g, const std::vector<int>& color_of, int colors) {
    if (int(color_of.size()) != g.n() || colors < 1) return false;
    std::vector<int> sizes(std::size_t(colors), 0);
    for (int c : color_of) {
        if (c < 0 || c >= colors) return false;
        ++sizes[std::size_t(c)];
    }
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*hi - *lo > 1) return false;
    for (const auto& [i, j] : g.edges()) {
        if (color_of[std::size_t(i)] == color_of[std::size_t(j)]) return false;
    }
    return true;
}

inline EquitableResult equitable_coloring(const Graph& g, int t, int colors = 0,
                                          Solver solver = Solver::exact,
                                          std::uint64_t budget = 100'000'000,
                                          std::uint64_t max_steps = 100'000,
                                          std::uint64_t seed = 0) {
    if (t < 2) throw std::invalid_argument("equitable_coloring: t must be >= 2");
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("equitable_coloring: empty graph");
    const long long delta = max_degree(g);
    EquitableResult out;
    out.colors = colors > 0 ? colors : int(std::max(delta, 1ll));
    if (out.colors > n) throw std::invalid_argument("equitable_coloring: more colors than vertices");

    out.degree_premise_holds = delta * delta >= 17ll * t * n;

    const int q = n / out.colors, r = n % out.colors;
    std::vector<int> sizes(std::size_t(out.colors), q);
    for (int c = 0; c < r; ++c) ++sizes[std::size_t(c)];
    const Graph cliques = disjoint_cliques(sizes);

    const InstanceStats st = instance_stats(g, cliques);
    out.corollary_premises_hold =
        corollary3_applies(st.n, st.delta1, st.delta2, st.codeg1, t);

    PackingResult res;
    if (solver == Solver::local_search) {
        res = local_search_pack(g, cliques, seed, max_steps);
    } else if (solver == Solver::both) {
        res = local_search_pack(g, cliques, seed, max_steps);
        if (res.status != PackStatus::packed) res = packs_exact(g, cliques, budget);
    } else {
        res = packs_exact(g, cliques, budget);
    }
    out.status = res.status;
    if (res.status != PackStatus::packed) return out;

    // clique block index of each red vertex
    std::vector<int> block(std::size_t(n), 0);
    {
        int v = 0;
        for (int c = 0; c < out.colors; ++c) {
            for (int k = 0; k < sizes[std::size_t(c)]; ++k) block[std::size_t(v++)] = c;
        }
    }
    const Labeling inv = res.witness->inverse();
    out.color_of.assign(std::size_t(n), 0);
    for (int x = 0; x < n; ++x)
        out.color_of[std::size_t(x)] = block[std::size_t(inv.perm[std::size_t(x)])];
    out.class_sizes = sizes;
    if (!validate_equitable(g, out.color_of, out.colors))
        throw std::logic_error("equitable_coloring: witness produced an invalid coloring");
    return out;
}

} // namespace gpack::harness

#endif
