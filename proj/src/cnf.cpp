#include <cstdlib>
#include <iterator>
#include <random>
#include <sstream>

#include "dlout/errors.hpp"
#include "dlout/oracles.hpp"

namespace dlout {

namespace {

[[noreturn]] void dimacs_error(std::size_t line, const std::string& message) {
  throw ParseError(ParseErrorKind::syntax, line, 1, message);
}

}  // namespace

Cnf3 parse_dimacs(std::string_view text) {
  Cnf3 phi;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> pending;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      long n = -1;
      long m = -1;
      if (header || !(tokens >> format >> n >> m) || format != "cnf" || n < 0 || m < 0) {
        dimacs_error(line_no, "malformed problem line; expected 'p cnf <variables> <clauses>'");
      }
      header = true;
      phi.variable_count = static_cast<int>(n);
      declared_clauses = static_cast<std::size_t>(m);
      continue;
    }
    if (!header) dimacs_error(line_no, "clause before the 'p cnf' header");
    std::istringstream clause_tokens(line);
    std::string token;
    while (clause_tokens >> token) {
      char* end = nullptr;
      long value = std::strtol(token.c_str(), &end, 10);
      if (*end != '\0') dimacs_error(line_no, "invalid literal '" + token + "'");
      if (value == 0) {
        if (pending.empty()) dimacs_error(line_no, "empty clause");
        if (pending.size() > 3) dimacs_error(line_no, "clause with more than three literals");
        while (pending.size() < 3) pending.push_back(pending.back());
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (std::labs(value) > phi.variable_count) {
          dimacs_error(line_no, "variable " + std::to_string(std::labs(value)) +
                                    " exceeds the declared count");
        }
        pending.push_back(static_cast<int>(value));
      }
    }
  }
  if (!header) dimacs_error(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
  if (!pending.empty()) dimacs_error(line_no, "last clause is not terminated by 0");
  if (phi.clauses.size() != declared_clauses) {
    dimacs_error(line_no, "header declares " + std::to_string(declared_clauses) +
                              " clauses but " + std::to_string(phi.clauses.size()) +
                              " were given");
  }
  return phi;
}

Cnf3 parse_dimacs(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_dimacs(text);
}

std::string to_dimacs(const Cnf3& phi) {
  std::string out =
      "p cnf " + std::to_string(phi.variable_count) + " " + std::to_string(phi.clauses.size()) + "\n";
  for (const auto& clause : phi.clauses) {
    for (int t : clause) out += std::to_string(t) + " ";
    out += "0\n";
  }
  return out;
}

std::string variable_letter(int i) { return "x" + std::to_string(i); }

bool evaluate(const Cnf3& phi, const std::vector<bool>& assignment) {
  for (const auto& clause : phi.clauses) {
    bool satisfied = false;
    for (int t : clause) {
      bool value = assignment[static_cast<std::size_t>(std::abs(t) - 1)];
      if ((t > 0) == value) satisfied = true;
    }
    if (!satisfied) return false;
  }
  return true;
}

SatResult sat(const Cnf3& phi, int max_variables) {
  if (phi.variable_count > max_variables) {
    throw SizeGuardError("truth-table SAT is limited to " + std::to_string(max_variables) +
                         " variables; got " + std::to_string(phi.variable_count));
  }
  const int n = phi.variable_count;
  std::vector<bool> assignment(static_cast<std::size_t>(n));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (int i = 0; i < n; ++i) assignment[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
    if (!evaluate(phi, assignment)) continue;
    SatResult out;
    out.satisfiable = true;
    out.model = assignment;
    for (int i = 0; i < n; ++i) {
      out.model_literals.insert(Literal(variable_letter(i + 1), !assignment[static_cast<std::size_t>(i)]));
    }
    return out;
  }
  return {};
}

Cnf3 random_cnf(int variable_count, int clause_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Cnf3 phi;
  phi.variable_count = variable_count;
  for (int j = 0; j < clause_count; ++j) {
    std::array<int, 3> clause{};
    for (int& t : clause) {
      int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(variable_count));
      t = (rng() & 1U) ? -v : v;
    }
    phi.clauses.push_back(clause);
  }
  return phi;
}

}  // namespace dlout
