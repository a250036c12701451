#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlout/literal.hpp"
#include "dlout/theory.hpp"

namespace dlout {

// Atomic dependency graph: one vertex per letter of the theory (sorted, so
// vertex ids match CompiledTheory letter ids) and an edge x -> y whenever x
// occurs in the prerequisite and y in the consequent of some rule.
class DependencyGraph {
 public:
  DependencyGraph() = default;
  DependencyGraph(std::vector<std::string> letters,
                  std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& letter(std::size_t v) const { return letters_[v]; }
  // Vertex id of a letter, or vertex_count() if absent.
  std::size_t find(const std::string& letter) const;

  // Sorted, duplicate-free successor lists.
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_[v]; }
  std::vector<std::pair<std::string, std::string>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;

 private:
  std::vector<std::string> letters_;
  std::vector<std::vector<std::size_t>> out_;
};

DependencyGraph build_graph(const DefaultTheory& theory);

// Strongly connected components C_1..C_N such that no path leads from C_j to
// C_i when i < j. Among components that are free to go next, the one with
// the smallest member letter comes first.
struct SccDecomposition {
  // Vertex ids, ascending within each component.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  std::size_t tightness = 0;
};

SccDecomposition decompose(const DependencyGraph& graph);

// Reflexive-transitive reachability as one bit row per vertex.
class Reachability {
 public:
  explicit Reachability(const DependencyGraph& graph);

  bool reaches(std::size_t from, std::size_t to) const {
    return (rows_[from * words_ + to / 64] >> (to % 64)) & 1U;
  }

 private:
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Does some letter of S reach the letter of l (a letter reaches itself)?
bool influences(const DefaultTheory& theory, const LiteralSet& S, const Literal& l);
bool influences(const DependencyGraph& graph, const LiteralSet& S, const Literal& l);

// Size of the largest strongly connected component; 0 for a theory without
// letters.
std::size_t tightness(const DefaultTheory& theory);
bool is_acyclic(const DefaultTheory& theory);

// Graphviz rendering with one cluster per component.
std::string to_dot(const DependencyGraph& graph, const SccDecomposition& sccs);

}  // namespace dlout
