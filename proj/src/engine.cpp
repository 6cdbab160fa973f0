#include "qlbm/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "qlbm/digital_lbm.hpp"
#include "qlbm/errors.hpp"

namespace qlbm {

GateStats& GateStats::operator+=(const GateStats& o) {
    selection_ry += o.selection_ry;
    selection_measurements += o.selection_measurements;
    pair_measurements += o.pair_measurements;
    ucry_applications += o.ucry_applications;
    streaming_shifts += o.streaming_shifts;
    rest_steps += o.rest_steps;
    return *this;
}

DensityField ShotEstimate::density() const {
    std::vector<double> vals(counts.size());
    const double scale = initial_mass / static_cast<double>(shots);
    for (std::size_t k = 0; k < counts.size(); ++k)
        vals[k] = static_cast<double>(counts[k]) * scale;
    return DensityField(grid, std::move(vals));
}

namespace {

constexpr std::uint64_t kEnsembleTasks = 64;

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::uint64_t draw_binomial(CounterRng& rng, std::uint64_t n, double p) {
    if (n == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    std::binomial_distribution<long long> dist(static_cast<long long>(n), p);
    return static_cast<std::uint64_t>(dist(rng));
}

int axis_count(const std::array<int, 3>& c) {
    return (c[0] != 0) + (c[1] != 0) + (c[2] != 0);
}

// Everything precomputable for a (rho0, u, set, steps) run: selection plan,
// per-pair collision angles and their half-angle factors, per-direction site
// permutations, the encoded register, and the compact sqrt(rho/mass) vector.
struct Context {
    const VelocitySet& set;
    LatticeGrid grid;
    unsigned steps;
    double mass;
    PairSelectionPlan plan;
    std::vector<CollisionAngles> angles;
    std::vector<std::vector<double>> cos_half;
    std::vector<std::vector<double>> sin_half;
    std::vector<std::vector<std::uint32_t>> dir_perm; // indexed by direction
    QuantumRegister encoded;
    std::vector<double> root;

    Context(const DensityField& rho0, const VelocityField& u, const VelocitySet& s,
            unsigned steps_)
        : set(s), grid(rho0.grid()), steps(steps_), mass(rho0.total_mass()),
          plan(build_pair_selection_plan(s)), encoded(QuantumRegister::encode(rho0)) {
        if (!(rho0.grid() == u.grid())) throw DomainError("density and velocity grids differ");
        check_velocity_constraint(u, s);
        const std::size_t sites = grid.size();
        for (std::size_t m = 0; m < set.pairs.size(); ++m) {
            angles.push_back(collision_angles(set, static_cast<int>(m), u));
            std::vector<double> ch(sites), sh(sites);
            for (std::size_t j = 0; j < sites; ++j) {
                ch[j] = std::cos(0.5 * angles[m].thetas[j]);
                sh[j] = std::sin(0.5 * angles[m].thetas[j]);
            }
            cos_half.push_back(std::move(ch));
            sin_half.push_back(std::move(sh));
        }
        dir_perm.resize(static_cast<std::size_t>(set.q));
        for (int i = 0; i < set.q; ++i)
            dir_perm[static_cast<std::size_t>(i)] =
                grid.shift_permutation(set.c[static_cast<std::size_t>(i)]);
        root.resize(sites);
        for (std::size_t k = 0; k < sites; ++k) root[k] = encoded.amplitude(k << 1);
    }
};

// Faithful statevector walk of one shot.
std::size_t shot_walk(const Context& ctx, CounterRng& rng, GateStats& stats) {
    QuantumRegister reg = ctx.encoded;
    const std::size_t pair_count = ctx.plan.pair_count();
    for (unsigned t = 0; t < ctx.steps; ++t) {
        std::size_t entry = pair_count; // all-ones suffix selects the last pair
        for (std::size_t m = 0; m < pair_count; ++m) {
            reg.apply_ry(0, ctx.plan.chain_angles[m]);
            ++stats.selection_ry;
            const auto rec = reg.measure(0, rng.uniform());
            ++stats.selection_measurements;
            reg.reset(0);
            if (rec.outcome == 0) {
                entry = m;
                break;
            }
        }
        if (entry == 0) {
            ++stats.rest_steps;
            continue;
        }
        const std::size_t pair = entry - 1;
        reg.apply_ucry(ctx.angles[pair].thetas);
        ++stats.ucry_applications;
        const auto rec = reg.measure(0, rng.uniform());
        ++stats.pair_measurements;
        reg.reset(0);
        const int dir = ctx.set.pairs[pair][rec.outcome == 0 ? 0 : 1];
        const auto& c = ctx.set.c[static_cast<std::size_t>(dir)];
        for (unsigned a = 0; a < 3; ++a) {
            if (c[a] != 0) {
                reg.apply_cyclic_shift(a, c[a]);
                ++stats.streaming_shifts;
            }
        }
    }
    return reg.sample(rng.uniform()) >> 1;
}

template <class Fn>
void run_workers(unsigned nthreads, Fn&& fn) {
    if (nthreads <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(fn, w);
    for (auto& th : pool) th.join();
}

// Per-shot driver shared by estimate_density and run_hybrid.
template <class ShotFn>
ShotEstimate sample_shots(const Context& ctx, std::uint64_t shots, std::uint64_t seed,
                          unsigned steps, const EngineOptions& opts, ShotFn&& shot_fn) {
    if (shots == 0) throw DomainError("at least one shot is required");
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(opts.threads), shots));
    const std::uint64_t chunk = std::max<std::uint64_t>(1, shots / (nthreads * 8ull) + 1);

    std::vector<std::vector<std::uint64_t>> counts(nthreads);
    std::vector<GateStats> stats(nthreads);
    std::atomic<std::uint64_t> next{0};

    run_workers(nthreads, [&](unsigned w) {
        counts[w].assign(ctx.grid.size(), 0);
        for (;;) {
            const std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= shots) break;
            const std::uint64_t hi = std::min(shots, lo + chunk);
            for (std::uint64_t s = lo; s < hi; ++s)
                ++counts[w][shot_fn(s, stats[w])];
        }
    });

    ShotEstimate est;
    est.grid = ctx.grid;
    est.counts.assign(ctx.grid.size(), 0);
    est.shots = shots;
    est.steps = steps;
    est.initial_mass = ctx.mass;
    est.seed = seed;
    for (unsigned w = 0; w < nthreads; ++w) {
        est.gates += stats[w];
        for (std::size_t k = 0; k < est.counts.size(); ++k) est.counts[k] += counts[w][k];
    }
    return est;
}

// ---------------------------------------------------------------------------
// Branch-tree ensemble walker. Works on compact site-length vectors: between
// steps the ancilla is deterministically |0>, so a state is fully described
// by its grid amplitudes. The UCRY + direction measurement + streaming of a
// pair branch maps a normalized vector g to
//   child_out[perm(j)] = factor_j g_j / sqrt(P_out),  factor = cos or sin of
// the half angle, P_out the branch probability; the rest branch is identity.
class EnsembleWalker {
public:
    EnsembleWalker(const Context& ctx, std::uint64_t max_live)
        : ctx_(ctx), max_live_(std::max<std::uint64_t>(max_live, 1)),
          counts_(ctx.grid.size(), 0), walk_a_(ctx.grid.size()), walk_b_(ctx.grid.size()),
          cdf_(ctx.grid.size()) {}

    void run_population(std::vector<double> g, std::uint64_t n, std::uint64_t key) {
        node(g, n, 0, key);
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }
    const GateStats& stats() const { return stats_; }
    GateStats& stats() { return stats_; }

private:
    using Vec = std::vector<double>;

    Vec acquire() {
        if (!pool_.empty()) {
            Vec v = std::move(pool_.back());
            pool_.pop_back();
            return v;
        }
        ++allocated_;
        return Vec(ctx_.grid.size());
    }
    void release(Vec&& v) { pool_.push_back(std::move(v)); }
    bool pool_exhausted() const { return allocated_ >= max_live_ && pool_.empty(); }

    void account_selection(std::uint64_t n, std::size_t entry) {
        const std::uint64_t stages = ctx_.plan.stages_for_entry(entry);
        stats_.selection_ry += n * stages;
        stats_.selection_measurements += n * stages;
    }

    void account_pair(std::uint64_t n, std::size_t pair, int outcome) {
        const int dir = ctx_.set.pairs[pair][outcome == 0 ? 0 : 1];
        stats_.streaming_shifts +=
            n * static_cast<std::uint64_t>(axis_count(ctx_.set.c[static_cast<std::size_t>(dir)]));
    }

    // P0/P1 for one pair given the current vector.
    std::pair<double, double> split_probability(const Vec& g, std::size_t pair) const {
        const auto& ch = ctx_.cos_half[pair];
        const auto& sh = ctx_.sin_half[pair];
        double p0 = 0.0, p1 = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double a = ch[j] * g[j];
            const double b = sh[j] * g[j];
            p0 += a * a;
            p1 += b * b;
        }
        return {p0, p1};
    }

    void build_child(const Vec& g, std::size_t pair, int outcome, double branch_p, Vec& out) {
        const auto& fac = outcome == 0 ? ctx_.cos_half[pair] : ctx_.sin_half[pair];
        const int dir = ctx_.set.pairs[pair][outcome == 0 ? 0 : 1];
        const auto& perm = ctx_.dir_perm[static_cast<std::size_t>(dir)];
        const double inv = 1.0 / std::sqrt(branch_p);
        for (std::size_t j = 0; j < g.size(); ++j) out[perm[j]] = fac[j] * g[j] * inv;
    }

    void sample_leaf(const Vec& g, std::uint64_t n, std::uint64_t key) {
        CounterRng rng(key);
        if (n == 1) {
            ++counts_[scan_sample(g, rng.uniform())];
            return;
        }
        double acc = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            acc += g[j] * g[j];
            cdf_[j] = acc;
        }
        for (std::uint64_t s = 0; s < n; ++s) {
            const double target = rng.uniform() * acc;
            const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
            const std::size_t site = std::min<std::size_t>(
                static_cast<std::size_t>(it - cdf_.begin()), g.size() - 1);
            ++counts_[site];
        }
    }

    static std::size_t scan_sample(const Vec& g, double u) {
        double norm = 0.0;
        for (double v : g) norm += v * v;
        const double target = u * norm;
        double acc = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            acc += g[j] * g[j];
            if (target < acc) return j;
        }
        return g.size() - 1;
    }

    // Single-shot tail: walk the remaining steps in place with the two
    // dedicated buffers; no pool pressure.
    void singleton_walk(Vec& g, unsigned depth, std::uint64_t key) {
        for (unsigned t = depth; t < ctx_.steps; ++t) {
            CounterRng rng(key);
            const double u = rng.uniform();
            double cum = 0.0;
            std::size_t entry = ctx_.plan.entries() - 1;
            for (std::size_t e = 0; e < ctx_.plan.entries(); ++e) {
                cum += ctx_.plan.branch_probability[e];
                if (u < cum) {
                    entry = e;
                    break;
                }
            }
            account_selection(1, entry);
            if (entry == 0) {
                ++stats_.rest_steps;
                key = child_key(key, 0);
                continue;
            }
            const std::size_t pair = entry - 1;
            const auto [p0, p1] = split_probability(g, pair);
            const int outcome = rng.uniform() * (p0 + p1) < p0 ? 0 : 1;
            ++stats_.ucry_applications;
            ++stats_.pair_measurements;
            account_pair(1, pair, outcome);
            build_child(g, pair, outcome, outcome == 0 ? p0 : p1, walk_b_);
            g.swap(walk_b_);
            key = child_key(key, 2 * entry + static_cast<std::uint64_t>(outcome));
        }
        sample_leaf(g, 1, key);
    }

    void node(Vec& g, std::uint64_t n, unsigned depth, std::uint64_t key) {
        if (depth == ctx_.steps) {
            sample_leaf(g, n, key);
            return;
        }
        if (n == 1) {
            singleton_walk(g, depth, key);
            return;
        }

        CounterRng rng(key);
        const std::size_t entries = ctx_.plan.entries();
        std::array<std::uint64_t, 8> alloc{};
        std::uint64_t remaining = n;
        double residual = 1.0;
        for (std::size_t e = 0; e + 1 < entries; ++e) {
            const double p = ctx_.plan.branch_probability[e];
            alloc[e] = draw_binomial(rng, remaining, residual > 0.0 ? p / residual : 1.0);
            remaining -= alloc[e];
            residual -= p;
        }
        alloc[entries - 1] = remaining;
        for (std::size_t e = 0; e < entries; ++e)
            if (alloc[e]) account_selection(alloc[e], e);
        stats_.rest_steps += alloc[0];

        for (std::size_t e = 1; e < entries; ++e) {
            const std::uint64_t nm = alloc[e];
            if (nm == 0) continue;
            const std::size_t pair = e - 1;
            const auto [p0, p1] = split_probability(g, pair);
            const double prob0 = p0 / (p0 + p1);
            const std::uint64_t n0 = draw_binomial(rng, nm, prob0);
            stats_.ucry_applications += nm;
            stats_.pair_measurements += nm;
            const std::uint64_t split[2] = {n0, nm - n0};
            const double branch_p[2] = {p0, p1};
            for (int outcome = 0; outcome < 2; ++outcome) {
                const std::uint64_t cnt = split[outcome];
                if (cnt == 0) continue;
                account_pair(cnt, pair, outcome);
                const std::uint64_t ck =
                    child_key(key, 2 * e + static_cast<std::uint64_t>(outcome));
                if (pool_exhausted()) {
                    // Memory guard: handle this subpopulation shot by shot.
                    for (std::uint64_t s = 0; s < cnt; ++s) {
                        build_child(g, pair, outcome, branch_p[outcome], walk_a_);
                        singleton_walk(walk_a_, depth + 1, child_key(ck, 64 + s));
                    }
                } else {
                    Vec child = acquire();
                    build_child(g, pair, outcome, branch_p[outcome], child);
                    node(child, cnt, depth + 1, ck);
                    release(std::move(child));
                }
            }
        }
        if (alloc[0]) node(g, alloc[0], depth + 1, child_key(key, 0));
    }

    const Context& ctx_;
    std::uint64_t max_live_;
    std::uint64_t allocated_ = 0;
    std::vector<Vec> pool_;
    std::vector<std::uint64_t> counts_;
    GateStats stats_;
    Vec walk_a_;
    Vec walk_b_;
    Vec cdf_;
};

// Exact expectation walker over the statevector path.
class BranchEnumerator {
public:
    BranchEnumerator(const Context& ctx) : ctx_(ctx), acc_(ctx.grid.size(), 0.0) {}

    void run() {
        if (ctx_.steps == 0) {
            accumulate(ctx_.encoded, 1.0);
            return;
        }
        chain_stage(QuantumRegister(ctx_.encoded), 1.0, 0, 0);
    }

    DensityField result() const {
        std::vector<double> vals(acc_.size());
        for (std::size_t k = 0; k < acc_.size(); ++k) vals[k] = acc_[k] * ctx_.mass;
        return DensityField(ctx_.grid, std::move(vals));
    }

private:
    void accumulate(const QuantumRegister& reg, double pabs) {
        for (std::size_t k = 0; k < acc_.size(); ++k) {
            const double a = reg.amplitude(2 * k);
            acc_[k] += pabs * a * a;
        }
    }

    void step_done(QuantumRegister reg, double pabs, unsigned depth) {
        if (depth + 1 == ctx_.steps) {
            accumulate(reg, pabs);
            return;
        }
        chain_stage(std::move(reg), pabs, 0, depth + 1);
    }

    void chain_stage(QuantumRegister reg, double pabs, std::size_t stage, unsigned depth) {
        const std::size_t pair_count = ctx_.plan.pair_count();
        if (pair_count == 0) { // resting population only
            step_done(std::move(reg), pabs, depth);
            return;
        }
        if (stage == pair_count) {
            pair_branch(std::move(reg), pabs, pair_count - 1, depth);
            return;
        }
        reg.apply_ry(0, ctx_.plan.chain_angles[stage]);
        const double p0 = reg.probability(0, 0);
        const double p1 = reg.probability(0, 1);
        if (p0 > 0.0) {
            QuantumRegister stopped = reg;
            stopped.project(0, 0);
            if (stage == 0)
                step_done(std::move(stopped), pabs * p0, depth);
            else
                pair_branch(std::move(stopped), pabs * p0, stage - 1, depth);
        }
        if (p1 > 0.0) {
            reg.project(0, 1);
            reg.reset(0);
            chain_stage(std::move(reg), pabs * p1, stage + 1, depth);
        }
    }

    void pair_branch(QuantumRegister reg, double pabs, std::size_t pair, unsigned depth) {
        reg.apply_ucry(ctx_.angles[pair].thetas);
        for (int outcome = 0; outcome < 2; ++outcome) {
            const double p = reg.probability(0, outcome);
            if (!(p > 0.0)) continue;
            QuantumRegister child = outcome == 0 ? reg : std::move(reg);
            child.project(0, outcome);
            child.reset(0);
            const int dir = ctx_.set.pairs[pair][outcome == 0 ? 0 : 1];
            const auto& c = ctx_.set.c[static_cast<std::size_t>(dir)];
            for (unsigned a = 0; a < 3; ++a)
                if (c[a] != 0) child.apply_cyclic_shift(a, c[a]);
            step_done(std::move(child), pabs * p, depth);
        }
    }

    const Context& ctx_;
    std::vector<double> acc_;
};

} // namespace

ShotResult run_shot(const DensityField& rho0, const VelocityField& u, const VelocitySet& set,
                    unsigned steps, CounterRng& rng) {
    Context ctx(rho0, u, set, steps);
    ShotResult res;
    res.site = shot_walk(ctx, rng, res.gates);
    return res;
}

ShotEstimate estimate_density(const DensityField& rho0, const VelocityField& u,
                              const VelocitySet& set, unsigned steps, std::uint64_t shots,
                              std::uint64_t seed, const EngineOptions& opts) {
    Context ctx(rho0, u, set, steps);
    return sample_shots(ctx, shots, seed, steps, opts,
                        [&ctx, seed](std::uint64_t s, GateStats& stats) {
                            CounterRng rng(stream_key(seed, stream::kShot, s));
                            return shot_walk(ctx, rng, stats);
                        });
}

ShotEstimate run_ensemble(const DensityField& rho0, const VelocityField& u,
                          const VelocitySet& set, unsigned steps, std::uint64_t shots,
                          std::uint64_t seed, const EngineOptions& opts) {
    if (shots == 0) throw DomainError("at least one shot is required");
    Context ctx(rho0, u, set, steps);

    const std::uint64_t tasks = std::min<std::uint64_t>(kEnsembleTasks, shots);
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(opts.threads), tasks));

    std::vector<std::vector<std::uint64_t>> counts(nthreads);
    std::vector<GateStats> stats(nthreads);
    std::atomic<std::uint64_t> next{0};

    run_workers(nthreads, [&](unsigned w) {
        EnsembleWalker walker(ctx, opts.max_live_nodes);
        for (;;) {
            const std::uint64_t task = next.fetch_add(1);
            if (task >= tasks) break;
            const std::uint64_t base = shots / tasks;
            const std::uint64_t n = base + (task < shots % tasks ? 1 : 0);
            if (n == 0) continue;
            walker.run_population(ctx.root, n, stream_key(seed, stream::kTree, task));
        }
        counts[w] = walker.counts();
        stats[w] = walker.stats();
    });

    ShotEstimate est;
    est.grid = ctx.grid;
    est.counts.assign(ctx.grid.size(), 0);
    est.shots = shots;
    est.steps = steps;
    est.initial_mass = ctx.mass;
    est.seed = seed;
    for (unsigned w = 0; w < nthreads; ++w) {
        est.gates += stats[w];
        for (std::size_t k = 0; k < est.counts.size(); ++k) est.counts[k] += counts[w][k];
    }
    return est;
}

DensityField enumerate_branches(const DensityField& rho0, const VelocityField& u,
                                const VelocitySet& set, unsigned steps,
                                std::uint64_t max_leaves) {
    Context ctx(rho0, u, set, steps);
    const double fan = static_cast<double>(2 * ctx.plan.pair_count() + 1);
    if (std::pow(fan, static_cast<double>(steps)) > static_cast<double>(max_leaves))
        throw DomainError("branch enumeration would exceed " + std::to_string(max_leaves) +
                          " leaves; reduce the step count");
    BranchEnumerator en(ctx);
    en.run();
    return en.result();
}

InstructionArray presample_instructions(const VelocitySet& set, unsigned steps,
                                        std::uint64_t shots, std::uint64_t seed) {
    if (steps == 0 || shots == 0) throw DomainError("instruction array needs steps, shots >= 1");
    const PairSelectionPlan plan = build_pair_selection_plan(set);
    InstructionArray arr;
    arr.steps = steps;
    arr.shots = shots;
    arr.cells.resize(static_cast<std::size_t>(steps) * shots);
    for (unsigned t = 0; t < steps; ++t) {
        for (std::uint64_t s = 0; s < shots; ++s) {
            CounterRng rng(stream_key(seed, stream::kInstructions, t, s));
            const double u = rng.uniform();
            double cum = 0.0;
            std::uint8_t cell = static_cast<std::uint8_t>(plan.entries() - 1);
            for (std::size_t e = 0; e < plan.entries(); ++e) {
                cum += plan.branch_probability[e];
                if (u < cum) {
                    cell = static_cast<std::uint8_t>(e);
                    break;
                }
            }
            arr.cells[static_cast<std::size_t>(t) * shots + s] = cell;
        }
    }
    return arr;
}

ShotEstimate run_hybrid(const DensityField& rho0, const VelocityField& u,
                        const VelocitySet& set, const InstructionArray& instructions,
                        std::uint64_t seed, const EngineOptions& opts) {
    Context ctx(rho0, u, set, instructions.steps);
    for (std::uint8_t cell : instructions.cells)
        if (cell >= ctx.plan.entries())
            throw DomainError("instruction entry out of range for this velocity set");

    return sample_shots(
        ctx, instructions.shots, seed, instructions.steps, opts,
        [&ctx, &instructions, seed](std::uint64_t s, GateStats& stats) {
            CounterRng rng(stream_key(seed, stream::kHybrid, s));
            QuantumRegister reg = ctx.encoded;
            for (unsigned t = 0; t < instructions.steps; ++t) {
                const std::uint8_t entry = instructions.cell(t, s);
                if (entry == 0) {
                    ++stats.rest_steps;
                    continue;
                }
                const std::size_t pair = entry - 1;
                reg.apply_ucry(ctx.angles[pair].thetas);
                ++stats.ucry_applications;
                const auto rec = reg.measure(0, rng.uniform());
                ++stats.pair_measurements;
                reg.reset(0);
                const int dir = ctx.set.pairs[pair][rec.outcome == 0 ? 0 : 1];
                const auto& c = ctx.set.c[static_cast<std::size_t>(dir)];
                for (unsigned a = 0; a < 3; ++a) {
                    if (c[a] != 0) {
                        reg.apply_cyclic_shift(a, c[a]);
                        ++stats.streaming_shifts;
                    }
                }
            }
            return reg.sample(rng.uniform()) >> 1;
        });
}

AccountingReport gate_accounting(const ShotEstimate& estimate, const VelocitySet& set,
                                 unsigned grid_qubits) {
    AccountingReport rep;
    const double step_shots =
        static_cast<double>(estimate.steps) * static_cast<double>(estimate.shots);
    rep.ucry_fraction_per_step =
        step_shots > 0.0 ? static_cast<double>(estimate.gates.ucry_applications) / step_shots : 0.0;
    rep.expected_ucry_fraction = 1.0 - set.w[0];
    rep.cnot_equivalents = estimate.gates.ucry_applications << grid_qubits;
    rep.selection_ry = estimate.gates.selection_ry;
    rep.selection_measurements = estimate.gates.selection_measurements;
    rep.pair_measurements = estimate.gates.pair_measurements;
    rep.mid_circuit_measurements = estimate.gates.mid_circuit_measurements();
    rep.streaming_shifts = estimate.gates.streaming_shifts;
    rep.rest_steps = estimate.gates.rest_steps;
    rep.ucry_applications = estimate.gates.ucry_applications;
    return rep;
}

} // namespace qlbm
