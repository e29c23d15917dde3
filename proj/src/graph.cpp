#include "gems/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gems/csv.hpp"
#include "gems/error.hpp"

namespace gems {

using nlohmann::json;

void QuestionCatalog::rebuild_choice_lookup(int n_choices) {
  choice_to_question_.assign(static_cast<std::size_t>(n_choices), -1);
  choice_to_slot_.assign(static_cast<std::size_t>(n_choices), -1);
  for (std::size_t q = 0; q < questions.size(); ++q) {
    const auto& indices = questions[q].choice_node_indices;
    for (std::size_t slot = 0; slot < indices.size(); ++slot) {
      int c = indices[slot];
      if (c < 0 || c >= n_choices) {
        fail(Errc::DimensionMismatch, "choice index out of range in catalog");
      }
      if (choice_to_question_[static_cast<std::size_t>(c)] != -1) {
        fail(Errc::DuplicateChoiceId,
             "choice node " + std::to_string(c) + " listed under two questions");
      }
      choice_to_question_[static_cast<std::size_t>(c)] = static_cast<int>(q);
      choice_to_slot_[static_cast<std::size_t>(c)] = static_cast<int>(slot);
    }
  }
  for (int c = 0; c < n_choices; ++c) {
    if (choice_to_question_[static_cast<std::size_t>(c)] == -1) {
      fail(Errc::UnknownChoice,
           "choice node " + std::to_string(c) + " belongs to no question");
    }
  }
}

const std::vector<std::vector<int>>& HeteroGraph::neighbors(Relation r) const {
  switch (r) {
    case Relation::IndividualToSubgroup: return adj_u2s_;
    case Relation::SubgroupToIndividual: return adj_s2u_;
    case Relation::IndividualToChoice: return adj_u2c_;
    case Relation::ChoiceToIndividual: return adj_c2u_;
  }
  return adj_u2s_;
}

void HeteroGraph::finalize() {
  catalog.rebuild_choice_lookup(n_choices);

  adj_u2s_.assign(static_cast<std::size_t>(n_subgroups), {});
  adj_s2u_.assign(static_cast<std::size_t>(n_individuals), {});
  adj_u2c_.assign(static_cast<std::size_t>(n_choices), {});
  adj_c2u_.assign(static_cast<std::size_t>(n_individuals), {});
  edges_by_individual_.assign(static_cast<std::size_t>(n_individuals), {});

  for (const auto& [u, s] : membership_edges) {
    if (u < 0 || u >= n_individuals || s < 0 || s >= n_subgroups) {
      fail(Errc::DimensionMismatch, "membership edge endpoint out of range");
    }
    adj_u2s_[static_cast<std::size_t>(s)].push_back(u);
    adj_s2u_[static_cast<std::size_t>(u)].push_back(s);
  }
  for (std::size_t e = 0; e < response_edges.size(); ++e) {
    const auto& [u, c] = response_edges[e];
    if (u < 0 || u >= n_individuals || c < 0 || c >= n_choices) {
      fail(Errc::DimensionMismatch, "response edge endpoint out of range");
    }
    adj_u2c_[static_cast<std::size_t>(c)].push_back(u);
    adj_c2u_[static_cast<std::size_t>(u)].push_back(c);
    edges_by_individual_[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
  }
  for (auto* adj : {&adj_u2s_, &adj_s2u_, &adj_u2c_, &adj_c2u_}) {
    for (auto& list : *adj) std::sort(list.begin(), list.end());
  }
}

HeteroGraph build_graph(const std::vector<ResponseRow>& responses,
                        const std::vector<MembershipRow>& memberships,
                        const std::vector<CatalogRow>& catalog_rows) {
  HeteroGraph graph;

  // Choices and questions come from the catalog, in file order per question
  // with options sorted by option_position.
  struct PendingQuestion {
    std::string question_text;
    std::vector<CatalogRow> options;
  };
  std::vector<std::string> question_order;
  std::unordered_map<std::string, PendingQuestion> pending;
  for (const auto& row : catalog_rows) {
    auto it = pending.find(row.question_id);
    if (it == pending.end()) {
      question_order.push_back(row.question_id);
      it = pending.emplace(row.question_id, PendingQuestion{}).first;
    }
    if (!row.question_text.empty()) it->second.question_text = row.question_text;
    it->second.options.push_back(row);
  }

  std::unordered_map<std::string, int> question_index;
  for (const auto& qid : question_order) {
    auto& pq = pending.at(qid);
    if (pq.options.size() < 2) {
      fail(Errc::SingleOptionQuestion,
           "question '" + qid + "' has " + std::to_string(pq.options.size()) +
               " option(s); at least 2 required");
    }
    std::stable_sort(pq.options.begin(), pq.options.end(),
                     [](const CatalogRow& a, const CatalogRow& b) {
                       return a.option_position < b.option_position;
                     });
    QuestionEntry entry;
    entry.question_id = qid;
    entry.question_text = pq.question_text;
    for (const auto& opt : pq.options) {
      if (graph.choice_index.count(opt.choice_id)) {
        fail(Errc::DuplicateChoiceId,
             "choice id '" + opt.choice_id + "' appears more than once in the catalog");
      }
      int c = static_cast<int>(graph.choice_ids.size());
      graph.choice_index.emplace(opt.choice_id, c);
      graph.choice_ids.push_back(opt.choice_id);
      entry.choice_node_indices.push_back(c);
      entry.option_texts.push_back(opt.option_text);
    }
    question_index.emplace(qid, static_cast<int>(graph.catalog.questions.size()));
    graph.catalog.questions.push_back(std::move(entry));
  }
  graph.n_choices = static_cast<int>(graph.choice_ids.size());

  auto individual_of = [&](const std::string& id) {
    auto [it, inserted] = graph.individual_index.try_emplace(
        id, static_cast<int>(graph.individual_ids.size()));
    if (inserted) graph.individual_ids.push_back(id);
    return it->second;
  };

  // Responses: first-appearance order defines individual indices.
  std::unordered_map<std::int64_t, int> answered;  // (individual, question) -> edge
  for (const auto& row : responses) {
    auto qit = question_index.find(row.question_id);
    if (qit == question_index.end()) {
      fail(Errc::UnknownChoice, "response references unknown question '" +
                                    row.question_id + "'");
    }
    auto cit = graph.choice_index.find(row.choice_id);
    if (cit == graph.choice_index.end()) {
      fail(Errc::UnknownChoice,
           "response references unknown choice '" + row.choice_id + "'");
    }
    // The choice must belong to the named question.
    const auto& entry = graph.catalog.questions[static_cast<std::size_t>(qit->second)];
    if (std::find(entry.choice_node_indices.begin(), entry.choice_node_indices.end(),
                  cit->second) == entry.choice_node_indices.end()) {
      fail(Errc::UnknownChoice, "choice '" + row.choice_id +
                                    "' does not belong to question '" +
                                    row.question_id + "'");
    }
    int u = individual_of(row.individual_id);
    std::int64_t key =
        static_cast<std::int64_t>(u) * static_cast<std::int64_t>(question_index.size()) +
        qit->second;
    if (!answered.emplace(key, static_cast<int>(graph.response_edges.size())).second) {
      fail(Errc::DuplicateResponse, "individual '" + row.individual_id +
                                        "' answered question '" + row.question_id +
                                        "' more than once");
    }
    graph.response_edges.emplace_back(u, cit->second);
  }

  // Memberships: may introduce individuals that never responded; duplicate
  // rows collapse to one edge (set semantics).
  std::unordered_map<std::int64_t, bool> seen_membership;
  for (const auto& row : memberships) {
    int u = individual_of(row.individual_id);
    auto [sit, inserted] = graph.subgroup_index.try_emplace(
        row.subgroup_id, static_cast<int>(graph.subgroup_ids.size()));
    if (inserted) graph.subgroup_ids.push_back(row.subgroup_id);
    int s = sit->second;
    std::int64_t key = static_cast<std::int64_t>(u) * (static_cast<std::int64_t>(1) << 32) + s;
    if (seen_membership.emplace(key, true).second) {
      graph.membership_edges.emplace_back(u, s);
    }
  }

  graph.n_individuals = static_cast<int>(graph.individual_ids.size());
  graph.n_subgroups = static_cast<int>(graph.subgroup_ids.size());
  graph.finalize();
  return graph;
}

namespace {

std::string required_field(const CsvTable& table, const std::string& path,
                           const std::string& name, int* column_out) {
  int col = table.column(name);
  if (col < 0) {
    fail(Errc::MalformedCsv, path + ": missing required column '" + name + "'");
  }
  *column_out = col;
  return name;
}

}  // namespace

std::vector<ResponseRow> read_responses_csv(const std::string& path) {
  CsvTable table = read_csv(path);
  int ci, cq, cc;
  required_field(table, path, "individual_id", &ci);
  required_field(table, path, "question_id", &cq);
  required_field(table, path, "choice_id", &cc);
  std::vector<ResponseRow> rows;
  rows.reserve(table.rows.size());
  for (const auto& r : table.rows) {
    rows.push_back({r[static_cast<std::size_t>(ci)], r[static_cast<std::size_t>(cq)],
                    r[static_cast<std::size_t>(cc)]});
  }
  return rows;
}

std::vector<MembershipRow> read_memberships_csv(const std::string& path) {
  CsvTable table = read_csv(path);
  int ci, cs;
  required_field(table, path, "individual_id", &ci);
  required_field(table, path, "subgroup_id", &cs);
  std::vector<MembershipRow> rows;
  rows.reserve(table.rows.size());
  for (const auto& r : table.rows) {
    rows.push_back({r[static_cast<std::size_t>(ci)], r[static_cast<std::size_t>(cs)]});
  }
  return rows;
}

std::vector<CatalogRow> read_catalog_csv(const std::string& path) {
  CsvTable table = read_csv(path);
  int cq, cc, cp;
  required_field(table, path, "question_id", &cq);
  required_field(table, path, "choice_id", &cc);
  required_field(table, path, "option_position", &cp);
  int ct = table.column("question_text");
  int co = table.column("option_text");
  std::vector<CatalogRow> rows;
  rows.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    CatalogRow row;
    row.question_id = r[static_cast<std::size_t>(cq)];
    row.choice_id = r[static_cast<std::size_t>(cc)];
    try {
      row.option_position = std::stoi(r[static_cast<std::size_t>(cp)]);
    } catch (const std::exception&) {
      fail(Errc::MalformedCsv, path + ": row " + std::to_string(i + 2) +
                                   ": option_position is not an integer");
    }
    if (ct >= 0) row.question_text = r[static_cast<std::size_t>(ct)];
    if (co >= 0) row.option_text = r[static_cast<std::size_t>(co)];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string graph_to_json(const HeteroGraph& graph) {
  json doc;
  doc["n_subgroups"] = graph.n_subgroups;
  doc["n_individuals"] = graph.n_individuals;
  doc["n_choices"] = graph.n_choices;
  doc["individual_ids"] = graph.individual_ids;
  doc["subgroup_ids"] = graph.subgroup_ids;
  doc["choice_ids"] = graph.choice_ids;
  json memberships = json::array();
  for (const auto& [u, s] : graph.membership_edges) memberships.push_back({u, s});
  doc["membership_edges"] = std::move(memberships);
  json responses = json::array();
  for (const auto& [u, c] : graph.response_edges) responses.push_back({u, c});
  doc["response_edges"] = std::move(responses);
  json questions = json::array();
  for (const auto& q : graph.catalog.questions) {
    json jq;
    jq["question_id"] = q.question_id;
    jq["choice_node_indices"] = q.choice_node_indices;
    jq["question_text"] = q.question_text;
    jq["option_texts"] = q.option_texts;
    questions.push_back(std::move(jq));
  }
  doc["questions"] = std::move(questions);
  return doc.dump(2) + "\n";
}

HeteroGraph graph_from_json(const std::string& text) {
  json doc = json::parse(text);
  HeteroGraph graph;
  graph.n_subgroups = doc.at("n_subgroups").get<int>();
  graph.n_individuals = doc.at("n_individuals").get<int>();
  graph.n_choices = doc.at("n_choices").get<int>();
  graph.individual_ids = doc.at("individual_ids").get<std::vector<std::string>>();
  graph.subgroup_ids = doc.at("subgroup_ids").get<std::vector<std::string>>();
  graph.choice_ids = doc.at("choice_ids").get<std::vector<std::string>>();
  for (const auto& e : doc.at("membership_edges")) {
    graph.membership_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  for (const auto& e : doc.at("response_edges")) {
    graph.response_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  for (const auto& jq : doc.at("questions")) {
    QuestionEntry q;
    q.question_id = jq.at("question_id").get<std::string>();
    q.choice_node_indices = jq.at("choice_node_indices").get<std::vector<int>>();
    q.question_text = jq.at("question_text").get<std::string>();
    q.option_texts = jq.at("option_texts").get<std::vector<std::string>>();
    graph.catalog.questions.push_back(std::move(q));
  }
  for (std::size_t i = 0; i < graph.individual_ids.size(); ++i) {
    graph.individual_index.emplace(graph.individual_ids[i], static_cast<int>(i));
  }
  for (std::size_t i = 0; i < graph.subgroup_ids.size(); ++i) {
    graph.subgroup_index.emplace(graph.subgroup_ids[i], static_cast<int>(i));
  }
  for (std::size_t i = 0; i < graph.choice_ids.size(); ++i) {
    graph.choice_index.emplace(graph.choice_ids[i], static_cast<int>(i));
  }
  graph.finalize();
  return graph;
}

void save_graph(const HeteroGraph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::MissingArtifact, "cannot write " + path);
  out << graph_to_json(graph);
}

HeteroGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MissingArtifact, "cannot read graph artifact " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str());
}

}  // namespace gems
