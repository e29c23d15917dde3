#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gems {

enum class NodeKind { Subgroup, Individual, Choice };

struct NodeRef {
  NodeKind kind;
  int index;
};

// The four directed relations of the two bidirectional edge types.
enum class Relation {
  IndividualToSubgroup,  // membership, individual -> subgroup
  SubgroupToIndividual,  // membership, subgroup -> individual
  IndividualToChoice,    // response, individual -> choice
  ChoiceToIndividual,    // response, choice -> individual
};

struct QuestionEntry {
  std::string question_id;
  // Choice node indices in ascending option-position order.
  std::vector<int> choice_node_indices;
  std::string question_text;
  std::vector<std::string> option_texts;  // aligned with choice_node_indices
};

class QuestionCatalog {
 public:
  std::vector<QuestionEntry> questions;

  int question_count() const { return static_cast<int>(questions.size()); }
  int question_of_choice(int choice_index) const {
    return choice_to_question_.at(static_cast<std::size_t>(choice_index));
  }
  // Position of the choice within its question's option list.
  int option_slot(int choice_index) const {
    return choice_to_slot_.at(static_cast<std::size_t>(choice_index));
  }
  int option_count(int question_index) const {
    return static_cast<int>(questions[static_cast<std::size_t>(question_index)]
                                .choice_node_indices.size());
  }

  void rebuild_choice_lookup(int n_choices);

 private:
  std::vector<int> choice_to_question_;
  std::vector<int> choice_to_slot_;
};

// Immutable heterogeneous graph over subgroup, individual, and choice nodes.
// Response edges keep their canonical construction order; that position is
// the edge's identity everywhere (splits, mask plans, serialized artifacts).
class HeteroGraph {
 public:
  int n_subgroups = 0;
  int n_individuals = 0;
  int n_choices = 0;

  std::vector<std::pair<int, int>> membership_edges;  // (individual, subgroup)
  std::vector<std::pair<int, int>> response_edges;    // (individual, choice)
  QuestionCatalog catalog;

  // id <-> dense index maps
  std::vector<std::string> individual_ids;
  std::vector<std::string> subgroup_ids;
  std::vector<std::string> choice_ids;
  std::unordered_map<std::string, int> individual_index;
  std::unordered_map<std::string, int> subgroup_index;
  std::unordered_map<std::string, int> choice_index;

  // Neighbor lookups (sorted ascending), exact transposes of the edge sets.
  const std::vector<std::vector<int>>& neighbors(Relation r) const;

  // Response edge indices grouped by individual, canonical order.
  const std::vector<std::vector<int>>& response_edges_of_individual() const {
    return edges_by_individual_;
  }

  void finalize();  // builds adjacency and per-individual indexes

 private:
  std::vector<std::vector<int>> adj_u2s_;  // subgroup -> individuals
  std::vector<std::vector<int>> adj_s2u_;  // individual -> subgroups
  std::vector<std::vector<int>> adj_u2c_;  // choice -> individuals
  std::vector<std::vector<int>> adj_c2u_;  // individual -> choices
  std::vector<std::vector<int>> edges_by_individual_;
};

struct ResponseRow {
  std::string individual_id;
  std::string question_id;
  std::string choice_id;
};

struct MembershipRow {
  std::string individual_id;
  std::string subgroup_id;
};

struct CatalogRow {
  std::string question_id;
  std::string choice_id;
  int option_position = 0;
  std::string question_text;
  std::string option_text;
};

// Constructs the graph with dense indices assigned by first-appearance order
// (responses scanned before memberships; choices in catalog order).
HeteroGraph build_graph(const std::vector<ResponseRow>& responses,
                        const std::vector<MembershipRow>& memberships,
                        const std::vector<CatalogRow>& catalog_rows);

// CSV ingestion per the documented dataset format.
std::vector<ResponseRow> read_responses_csv(const std::string& path);
std::vector<MembershipRow> read_memberships_csv(const std::string& path);
std::vector<CatalogRow> read_catalog_csv(const std::string& path);

// JSON artifact round trip (canonical: rebuilding from identical inputs is
// byte-identical).
std::string graph_to_json(const HeteroGraph& graph);
HeteroGraph graph_from_json(const std::string& text);
void save_graph(const HeteroGraph& graph, const std::string& path);
HeteroGraph load_graph(const std::string& path);

}  // namespace gems
