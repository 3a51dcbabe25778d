#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfar/rng.hpp"
#include "pfar/solve_result.hpp"

namespace pfar {

// Route-variable-only genotype: one block per flow, block i holding |paths(f_i)|
// bits with at most one set. Stored as the index of the set bit (kNone for an
// all-zero block); the bit-string form is recoverable via to_bit_string.
struct Chromosome {
  static constexpr std::int32_t kNone = -1;

  std::vector<std::int32_t> block;  // per flow: path index or kNone

  std::string to_bit_string(const PfarInstance& instance) const;

  // Parses concatenated per-flow blocks of '0'/'1'. A block with more than one set
  // bit is repaired to its lowest set bit.
  static Chromosome from_bit_string(const PfarInstance& instance, const std::string& bits);

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

struct GaConfig {
  int population_size = 100;
  double time_budget_secs = 10.0;
  double init_path_prob = 0.0001;      // the paper's 0.01% random-path seeding
  double mutation_path_prob = 0.0001;  // 0.01% chance to re-add a path after clearing
  double cr_start = 0.9;
  double mr_start = 0.1;
  std::uint64_t seed = 1;

  // > 0 switches the run to a virtual clock that advances this many seconds per
  // generation, making the whole run a pure function of (instance, config). Wall
  // clock termination cannot be byte-reproducible; this mode is.
  double virtual_tick_secs = 0.0;
};

struct Rates {
  double mr = 0.1;
  double cr = 0.9;
};

enum class GaTermination { BoundReached, TimeExhausted };

struct GaGenerationLog {
  std::int64_t best_fitness = 0;
  double mr = 0.1;
  double cr = 0.9;
  double elapsed_secs = 0.0;
};

struct GaStats {
  std::int64_t generations = 0;
  std::vector<std::int64_t> best_fitness_per_generation;  // entry 0 = initial population
  std::vector<GaGenerationLog> log;                       // parallel to the series above
  double elapsed_secs = 0.0;
  GaTermination terminated_by = GaTermination::TimeExhausted;
};

struct GaRun {
  SolveResult result;
  GaStats stats;
};

// Non-increasing priority order (ties by index), first enumerated path whose edges
// all have enough residual, else DROP. Always feasible.
RouteAssignment greedy_assign(const PfarInstance& instance);

Chromosome encode(const PfarInstance& instance, const RouteAssignment& assignment);

// population[0] is the greedy seed; the rest assign each flow a uniformly random
// path with probability init_path_prob, independently per flow.
std::vector<Chromosome> init_population(const PfarInstance& instance, const GaConfig& cfg,
                                        Rng& rng);

// Flows in index order: a chosen path that fits the running residuals earns
// +priority and commits its bandwidth; one that does not fit earns -priority and
// commits nothing; empty blocks contribute 0.
std::int64_t fitness(const PfarInstance& instance, const Chromosome& chromosome);

// Elitism (top PS*(1-CR), rounded down, at least 1) plus CS = PS - elites offspring
// from binary-tournament parents; floor(CS*MR) fresh offspring are then mutated.
std::vector<Chromosome> select_and_breed(const std::vector<Chromosome>& population,
                                         const std::vector<std::int64_t>& fitnesses,
                                         const PfarInstance& instance, const GaConfig& cfg,
                                         Rates rates, Rng& rng);

// Each flow block copied whole from one parent or the other with probability 1/2.
Chromosome crossover(const Chromosome& parent_a, const Chromosome& parent_b, Rng& rng);

// Clears one uniformly chosen flow's block, then re-adds a uniformly random path
// with probability mutation_path_prob.
Chromosome mutate(const Chromosome& chromosome, const PfarInstance& instance,
                  const GaConfig& cfg, Rng& rng);

// Linear in elapsed time: MR ramps from mr_start to 0.9 over the budget, CR = 1 - MR.
Rates adapt_rates(double elapsed_secs, const GaConfig& cfg);

// Runs generations until the best fitness reaches the sum of all priorities or the
// budget elapses. The returned assignment is the best individual with non-fitting
// placements downgraded to DROP, so it is always feasible.
GaRun run_ga(const PfarInstance& instance, const GaConfig& cfg);

}  // namespace pfar
