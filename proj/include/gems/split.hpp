#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gems/graph.hpp"

namespace gems {

enum class Setting { Imputation, NewIndividuals, NewQuestions };

const char* setting_name(Setting s);
Setting setting_from_name(const std::string& name);

struct Fractions {
  double train = 0.0;
  double val = 0.0;
  double test = 0.0;
};

// A deterministic partition of response edges into the observed set and the
// validation/test target sets, plus the node-level bucket memberships that
// produced it. Edge values are indices into graph.response_edges.
struct Split {
  Setting setting = Setting::Imputation;
  std::uint64_t seed = 0;

  std::vector<int> train_individuals, val_individuals, test_individuals;
  std::vector<std::string> train_questions, val_questions, test_questions;

  std::vector<int> observed_edges;
  std::vector<int> val_target_edges;
  std::vector<int> test_target_edges;
};

// Individual-level split for settings 1 and 2. When
// within_individual_observed_fraction > 0 each val/test individual keeps
// floor(f * count) observed edges (at least 1 when they have any); at 0.0
// val/test individuals contribute no observed edges at all.
Split split_individuals(const HeteroGraph& graph, Fractions fractions,
                        double within_individual_observed_fraction,
                        std::uint64_t seed);

// Question-level split for setting 3: all edges whose choice belongs to a
// val/test question become targets.
Split split_questions(const HeteroGraph& graph, Fractions fractions,
                      std::uint64_t seed);

std::string split_to_json(const Split& split);
Split split_from_json(const std::string& text);
void save_split(const Split& split, const std::string& path);
Split load_split(const std::string& path);

// round-half-up; the shared rounding rule for bucket and mask sizes.
std::size_t round_count(double x);

}  // namespace gems
