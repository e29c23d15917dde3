#include "gems/split.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gems/error.hpp"
#include "gems/rng.hpp"

namespace gems {

using nlohmann::json;

const char* setting_name(Setting s) {
  switch (s) {
    case Setting::Imputation: return "impute";
    case Setting::NewIndividuals: return "new-individuals";
    case Setting::NewQuestions: return "new-questions";
  }
  return "impute";
}

Setting setting_from_name(const std::string& name) {
  if (name == "impute") return Setting::Imputation;
  if (name == "new-individuals") return Setting::NewIndividuals;
  if (name == "new-questions") return Setting::NewQuestions;
  fail(Errc::BadConfig, "unknown setting '" + name + "'");
}

std::size_t round_count(double x) {
  return static_cast<std::size_t>(std::floor(x + 0.5));
}

namespace {

void check_fractions(Fractions f) {
  if (std::abs(f.train + f.val + f.test - 1.0) > 1e-9) {
    fail(Errc::BadConfig, "split fractions must sum to 1");
  }
  if (f.train <= 0 || f.val <= 0 || f.test <= 0) {
    fail(Errc::BadConfig, "split fractions must be positive");
  }
}

// Val and test take their rounded shares; train absorbs the remainder.
struct BucketSizes {
  std::size_t train, val, test;
};

BucketSizes bucket_sizes(std::size_t n, Fractions f, Errc too_small) {
  std::size_t n_val = round_count(f.val * static_cast<double>(n));
  std::size_t n_test = round_count(f.test * static_cast<double>(n));
  if (n_val == 0 || n_test == 0 || n_val + n_test >= n) {
    fail(too_small, "a split bucket would be empty (n=" + std::to_string(n) + ")");
  }
  return {n - n_val - n_test, n_val, n_test};
}

}  // namespace

Split split_individuals(const HeteroGraph& graph, Fractions fractions,
                        double within_individual_observed_fraction,
                        std::uint64_t seed) {
  check_fractions(fractions);
  if (within_individual_observed_fraction < 0.0 ||
      within_individual_observed_fraction >= 1.0) {
    fail(Errc::BadConfig, "within-individual observed fraction must be in [0, 1)");
  }
  const std::size_t n = static_cast<std::size_t>(graph.n_individuals);
  if (n < 3) fail(Errc::InsufficientIndividuals, "need at least 3 individuals");

  BucketSizes sizes = bucket_sizes(n, fractions, Errc::InsufficientIndividuals);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  StreamRng rng(seed, "split_individuals");
  rng.shuffle(order);

  Split split;
  split.setting = within_individual_observed_fraction > 0.0
                      ? Setting::Imputation
                      : Setting::NewIndividuals;
  split.seed = seed;
  split.val_individuals.assign(order.begin(), order.begin() + static_cast<long>(sizes.val));
  split.test_individuals.assign(order.begin() + static_cast<long>(sizes.val),
                                order.begin() + static_cast<long>(sizes.val + sizes.test));
  split.train_individuals.assign(order.begin() + static_cast<long>(sizes.val + sizes.test),
                                 order.end());
  std::sort(split.train_individuals.begin(), split.train_individuals.end());
  std::sort(split.val_individuals.begin(), split.val_individuals.end());
  std::sort(split.test_individuals.begin(), split.test_individuals.end());

  enum class Bucket { Train, Val, Test };
  std::vector<Bucket> bucket_of(n, Bucket::Train);
  for (int u : split.val_individuals) bucket_of[static_cast<std::size_t>(u)] = Bucket::Val;
  for (int u : split.test_individuals) bucket_of[static_cast<std::size_t>(u)] = Bucket::Test;

  const auto& by_individual = graph.response_edges_of_individual();
  for (std::size_t u = 0; u < n; ++u) {
    const auto& edges = by_individual[u];
    if (edges.empty()) continue;
    if (bucket_of[u] == Bucket::Train) {
      split.observed_edges.insert(split.observed_edges.end(), edges.begin(), edges.end());
      continue;
    }
    auto& targets = bucket_of[u] == Bucket::Val ? split.val_target_edges
                                                : split.test_target_edges;
    if (within_individual_observed_fraction == 0.0) {
      targets.insert(targets.end(), edges.begin(), edges.end());
      continue;
    }
    std::size_t n_obs = static_cast<std::size_t>(std::floor(
        within_individual_observed_fraction * static_cast<double>(edges.size())));
    if (n_obs == 0) n_obs = 1;
    std::vector<int> local = edges;
    StreamRng per_individual(seed, "within_individual", static_cast<std::uint64_t>(u));
    per_individual.shuffle(local);
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (i < n_obs) split.observed_edges.push_back(local[i]);
      else targets.push_back(local[i]);
    }
  }

  std::sort(split.observed_edges.begin(), split.observed_edges.end());
  std::sort(split.val_target_edges.begin(), split.val_target_edges.end());
  std::sort(split.test_target_edges.begin(), split.test_target_edges.end());
  return split;
}

Split split_questions(const HeteroGraph& graph, Fractions fractions,
                      std::uint64_t seed) {
  check_fractions(fractions);
  const std::size_t q = static_cast<std::size_t>(graph.catalog.question_count());
  if (q < 5) fail(Errc::InsufficientQuestions, "need at least 5 questions");

  BucketSizes sizes = bucket_sizes(q, fractions, Errc::InsufficientQuestions);

  std::vector<int> order(q);
  std::iota(order.begin(), order.end(), 0);
  StreamRng rng(seed, "split_questions");
  rng.shuffle(order);

  enum class Bucket { Train, Val, Test };
  std::vector<Bucket> bucket_of(q, Bucket::Train);
  for (std::size_t i = 0; i < sizes.val; ++i) {
    bucket_of[static_cast<std::size_t>(order[i])] = Bucket::Val;
  }
  for (std::size_t i = sizes.val; i < sizes.val + sizes.test; ++i) {
    bucket_of[static_cast<std::size_t>(order[i])] = Bucket::Test;
  }

  Split split;
  split.setting = Setting::NewQuestions;
  split.seed = seed;
  for (std::size_t i = 0; i < q; ++i) {
    const auto& id = graph.catalog.questions[i].question_id;
    switch (bucket_of[i]) {
      case Bucket::Train: split.train_questions.push_back(id); break;
      case Bucket::Val: split.val_questions.push_back(id); break;
      case Bucket::Test: split.test_questions.push_back(id); break;
    }
  }

  for (std::size_t e = 0; e < graph.response_edges.size(); ++e) {
    int choice = graph.response_edges[e].second;
    int question = graph.catalog.question_of_choice(choice);
    switch (bucket_of[static_cast<std::size_t>(question)]) {
      case Bucket::Train: split.observed_edges.push_back(static_cast<int>(e)); break;
      case Bucket::Val: split.val_target_edges.push_back(static_cast<int>(e)); break;
      case Bucket::Test: split.test_target_edges.push_back(static_cast<int>(e)); break;
    }
  }
  return split;
}

std::string split_to_json(const Split& split) {
  json doc;
  doc["setting"] = setting_name(split.setting);
  doc["seed"] = split.seed;
  doc["train_individuals"] = split.train_individuals;
  doc["val_individuals"] = split.val_individuals;
  doc["test_individuals"] = split.test_individuals;
  doc["train_questions"] = split.train_questions;
  doc["val_questions"] = split.val_questions;
  doc["test_questions"] = split.test_questions;
  doc["observed_edges"] = split.observed_edges;
  doc["val_target_edges"] = split.val_target_edges;
  doc["test_target_edges"] = split.test_target_edges;
  return doc.dump(2) + "\n";
}

Split split_from_json(const std::string& text) {
  json doc = json::parse(text);
  Split split;
  split.setting = setting_from_name(doc.at("setting").get<std::string>());
  split.seed = doc.at("seed").get<std::uint64_t>();
  split.train_individuals = doc.at("train_individuals").get<std::vector<int>>();
  split.val_individuals = doc.at("val_individuals").get<std::vector<int>>();
  split.test_individuals = doc.at("test_individuals").get<std::vector<int>>();
  split.train_questions = doc.at("train_questions").get<std::vector<std::string>>();
  split.val_questions = doc.at("val_questions").get<std::vector<std::string>>();
  split.test_questions = doc.at("test_questions").get<std::vector<std::string>>();
  split.observed_edges = doc.at("observed_edges").get<std::vector<int>>();
  split.val_target_edges = doc.at("val_target_edges").get<std::vector<int>>();
  split.test_target_edges = doc.at("test_target_edges").get<std::vector<int>>();
  return split;
}

void save_split(const Split& split, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::MissingArtifact, "cannot write " + path);
  out << split_to_json(split);
}

Split load_split(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MissingArtifact, "cannot read split artifact " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return split_from_json(buffer.str());
}

}  // namespace gems
