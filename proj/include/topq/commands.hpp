#ifndef TOPQ_COMMANDS_HPP
#define TOPQ_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "topq/binormal.hpp"
#include "topq/metrics.hpp"
#include "topq/plugin.hpp"
#include "topq/specfile.hpp"

// Command implementations behind the CLI, exposed as plain functions so they
// can be unit-tested and bound without spawning a process. All output is
// returned as the exact text the CLI writes.
namespace topq::cli {

enum class EvalMode { labels, posterior };

// Fits a classifier on the empirical score marginal of the CSV and returns
// the populated spec (not yet serialized).
ClassifierSpecFile run_fit(const std::string& csv_path, double alpha, QuantileChoice choice);

std::string run_eval(const std::string& csv_path, const ClassifierSpecFile& spec, EvalMode mode,
                     const CostParams& costs);

std::string run_binormal(const BinormalModel& model, double alpha, const CostParams& costs);

struct AlphaGrid {
    double start;
    double stop;
    int steps;

    // Parses "start:stop:steps"; requires 0 < start < stop < 1, steps >= 2.
    static AlphaGrid parse(const std::string& text);
    std::vector<double> points() const;
};

std::string run_sweep_binormal(const BinormalModel& model, const AlphaGrid& grid,
                               const CostParams& costs);

std::string run_sweep_csv(const std::string& csv_path, const AlphaGrid& grid,
                          const CostParams& costs, EvalMode mode);

struct VerifySummary {
    int trials = 0;
    int passed = 0;
    double worst_constrained_gap = 0.0;
    double worst_equality_gap = 0.0;
    int forced_atom_instances = 0;

    bool all_passed() const { return passed == trials; }
};

// Runs the theorem check on `trials` seeded random instances.
VerifySummary run_verify(std::uint64_t seed, int trials, int max_atoms);

std::string format_verify_summary(const VerifySummary& summary, std::uint64_t seed,
                                  int max_atoms);

}  // namespace topq::cli

#endif
