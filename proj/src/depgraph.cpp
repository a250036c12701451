#include "dlout/depgraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace dlout {

DependencyGraph::DependencyGraph(std::vector<std::string> letters,
                                 std::vector<std::pair<std::size_t, std::size_t>> edges)
    : letters_(std::move(letters)), out_(letters_.size()) {
  for (auto [from, to] : edges) out_[from].push_back(to);
  for (auto& succ : out_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
}

std::size_t DependencyGraph::find(const std::string& letter) const {
  auto it = std::lower_bound(letters_.begin(), letters_.end(), letter);
  if (it == letters_.end() || *it != letter) return letters_.size();
  return static_cast<std::size_t>(it - letters_.begin());
}

std::vector<std::pair<std::string, std::string>> DependencyGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t v = 0; v < out_.size(); ++v) {
    for (std::size_t w : out_[v]) out.emplace_back(letters_[v], letters_[w]);
  }
  return out;
}

std::size_t DependencyGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& succ : out_) n += succ.size();
  return n;
}

DependencyGraph build_graph(const DefaultTheory& theory) {
  std::vector<std::string> letters = theory.letters();
  auto id = [&](const std::string& letter) {
    return static_cast<std::size_t>(std::lower_bound(letters.begin(), letters.end(), letter) -
                                    letters.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& rule : theory.defaults()) {
    for (const auto& p : rule.prerequisite()) {
      for (const auto& c : rule.consequent()) edges.emplace_back(id(p.letter), id(c.letter));
    }
  }
  return DependencyGraph(std::move(letters), std::move(edges));
}

SccDecomposition decompose(const DependencyGraph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);

  // Tarjan.
  std::vector<std::size_t> index(n, unset), low(n, 0), raw_of(n, unset);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> raw;
  std::size_t counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w : graph.successors(v)) {
      if (index[w] == unset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        raw_of[w] = raw.size();
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      raw.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == unset) visit(v);
  }

  // Topological order of the condensation; ready components are taken by
  // smallest member (vertex ids follow letter order).
  std::vector<std::vector<std::size_t>> succ(raw.size());
  std::vector<std::size_t> indegree(raw.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : graph.successors(v)) {
      if (raw_of[v] != raw_of[w]) succ[raw_of[v]].push_back(raw_of[w]);
    }
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t c : s) ++indegree[c];
  }
  using Entry = std::pair<std::size_t, std::size_t>;  // (smallest member, raw id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < raw.size(); ++c) {
    if (indegree[c] == 0) ready.emplace(raw[c].front(), c);
  }
  SccDecomposition out;
  out.component_of.assign(n, 0);
  while (!ready.empty()) {
    std::size_t c = ready.top().second;
    ready.pop();
    for (std::size_t v : raw[c]) out.component_of[v] = out.components.size();
    out.tightness = std::max(out.tightness, raw[c].size());
    out.components.push_back(raw[c]);
    for (std::size_t d : succ[c]) {
      if (--indegree[d] == 0) ready.emplace(raw[d].front(), d);
    }
  }
  return out;
}

Reachability::Reachability(const DependencyGraph& graph)
    : words_((graph.vertex_count() + 63) / 64),
      rows_(graph.vertex_count() * ((graph.vertex_count() + 63) / 64), 0) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::uint64_t* row = rows_.data() + s * words_;
    queue.assign(1, s);
    row[s / 64] |= std::uint64_t{1} << (s % 64);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t w : graph.successors(queue[i])) {
        if (!((row[w / 64] >> (w % 64)) & 1U)) {
          row[w / 64] |= std::uint64_t{1} << (w % 64);
          queue.push_back(w);
        }
      }
    }
  }
}

bool influences(const DependencyGraph& graph, const LiteralSet& S, const Literal& l) {
  std::size_t target = graph.find(l.letter);
  if (target == graph.vertex_count()) {
    return std::any_of(S.begin(), S.end(), [&](const Literal& t) { return t.letter == l.letter; });
  }
  std::vector<std::uint8_t> seen(graph.vertex_count(), 0);
  std::vector<std::size_t> queue;
  for (const auto& t : S) {
    std::size_t v = graph.find(t.letter);
    if (v != graph.vertex_count() && !seen[v]) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (queue[i] == target) return true;
    for (std::size_t w : graph.successors(queue[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

bool influences(const DefaultTheory& theory, const LiteralSet& S, const Literal& l) {
  return influences(build_graph(theory), S, l);
}

std::size_t tightness(const DefaultTheory& theory) {
  return decompose(build_graph(theory)).tightness;
}

bool is_acyclic(const DefaultTheory& theory) { return tightness(theory) <= 1; }

std::string to_dot(const DependencyGraph& graph, const SccDecomposition& sccs) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream out;
  out << "digraph dependencies {\n";
  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    out << "  subgraph cluster_" << c + 1 << " {\n";
    out << "    label=\"C" << c + 1 << "\";\n";
    for (std::size_t v : sccs.components[c]) out << "    " << quote(graph.letter(v)) << ";\n";
    out << "  }\n";
  }
  for (const auto& [from, to] : graph.edges()) {
    out << "  " << quote(from) << " -> " << quote(to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dlout
