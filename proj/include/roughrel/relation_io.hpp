#ifndef ROUGHREL_RELATION_IO_HPP
#define ROUGHREL_RELATION_IO_HPP

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "roughrel/definable.hpp"
#include "roughrel/oracle.hpp"

namespace roughrel::io {

using json = nlohmann::ordered_json;

// Position-carrying parse failure; line and column are 1-based, 0 meaning
// "whole input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(format(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
           message;
  }

  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

}  // namespace detail

// Line-oriented relation format: one `universe:` line with distinct labels,
// any number of `pair: <label> <label>` lines, `#` comments. Line order does
// not matter and repeated pairs are idempotent.
inline Relation parse_relation(std::string_view text) {
  struct PairLine {
    detail::Token a;
    detail::Token b;
    std::size_t line;
  };

  std::vector<std::string> labels;
  std::size_t universe_line = 0;
  std::vector<PairLine> pair_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (!tokens.empty()) {
      const detail::Token& head = tokens[0];
      if (head.text == "universe:") {
        if (universe_line != 0)
          throw ParseError(line_no, head.column, "duplicate universe declaration");
        if (tokens.size() == 1)
          throw ParseError(line_no, head.column, "universe declaration has no elements");
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          for (const std::string& seen : labels)
            if (seen == tokens[i].text)
              throw ParseError(line_no, tokens[i].column,
                               "duplicate label '" + tokens[i].text + "'");
          labels.push_back(tokens[i].text);
        }
        universe_line = line_no;
      } else if (head.text == "pair:") {
        if (tokens.size() != 3)
          throw ParseError(line_no, head.column, "pair needs exactly two labels");
        pair_lines.push_back(PairLine{tokens[1], tokens[2], line_no});
      } else {
        throw ParseError(line_no, head.column,
                         "unrecognized directive '" + head.text + "'");
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (universe_line == 0) throw ParseError(0, 0, "missing universe declaration");

  UniverseRef u = make_universe(std::move(labels));
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(pair_lines.size());
  for (const PairLine& p : pair_lines) {
    auto x = u->index_of(p.a.text);
    if (!x) throw ParseError(p.line, p.a.column, "unknown label '" + p.a.text + "'");
    auto y = u->index_of(p.b.text);
    if (!y) throw ParseError(p.line, p.b.column, "unknown label '" + p.b.text + "'");
    pairs.emplace_back(*x, *y);
  }
  return Relation::from_pairs(std::move(u), pairs);
}

// Canonical text form: the universe line followed by pair lines in row-major
// order. Reparsing reproduces an equal relation.
inline std::string serialize_relation(const Relation& r) {
  std::ostringstream out;
  out << "universe:";
  for (const std::string& label : r.universe()->labels()) out << ' ' << label;
  out << '\n';
  for (auto [x, y] : r.pairs())
    out << "pair: " << r.universe()->label(x) << ' ' << r.universe()->label(y) << '\n';
  return out.str();
}

inline json subset_to_json(const Subset& s) {
  json arr = json::array();
  for (const std::string& label : s.member_labels()) arr.push_back(label);
  return arr;
}

inline Subset subset_from_json(const UniverseRef& u, const json& arr) {
  Bitset bits(u->size());
  for (const auto& item : arr) {
    auto idx = u->index_of(item.get<std::string>());
    if (!idx) throw std::invalid_argument("unknown label in subset: " + item.get<std::string>());
    bits.set(*idx);
  }
  return Subset(u, std::move(bits));
}

inline json pairs_to_json(const Relation& r) {
  json arr = json::array();
  for (auto [x, y] : r.pairs())
    arr.push_back(json::array({r.universe()->label(x), r.universe()->label(y)}));
  return arr;
}

inline json relation_to_json(const Relation& r) {
  json j;
  j["universe"] = r.universe()->labels();
  j["pairs"] = pairs_to_json(r);
  return j;
}

inline Relation relation_from_json(const json& j) {
  UniverseRef u = make_universe(j.at("universe").get<std::vector<std::string>>());
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& p : j.at("pairs")) {
    auto x = u->index_of(p.at(0).get<std::string>());
    auto y = u->index_of(p.at(1).get<std::string>());
    if (!x || !y) throw std::invalid_argument("unknown label in relation pair");
    pairs.emplace_back(*x, *y);
  }
  return Relation::from_pairs(std::move(u), pairs);
}

inline Relation pairs_from_json(const UniverseRef& u, const json& arr) {
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& p : arr) {
    auto x = u->index_of(p.at(0).get<std::string>());
    auto y = u->index_of(p.at(1).get<std::string>());
    if (!x || !y) throw std::invalid_argument("unknown label in relation pair");
    pairs.emplace_back(*x, *y);
  }
  return Relation::from_pairs(u, pairs);
}

inline json family_to_json(const SetFamily& family) {
  json sets = json::array();
  for (const Subset& s : family) sets.push_back(subset_to_json(s));
  json j;
  j["sets"] = std::move(sets);
  return j;
}

inline json partition_to_json(const Partition& p) {
  json blocks = json::array();
  for (const Subset& b : p.blocks()) blocks.push_back(subset_to_json(b));
  json j;
  j["blocks"] = std::move(blocks);
  return j;
}

inline json equivalence_report_to_json(const EquivalenceReport& report) {
  json j;
  j["equal"] = report.equal;
  j["reason"] = to_string(report.reason);
  if (report.witness) j["witness"] = subset_to_json(*report.witness);
  return j;
}

inline json failure_to_json(const oracle::Failure& failure) {
  json j;
  json rels = json::array();
  for (const Relation& r : failure.relations) rels.push_back(pairs_to_json(r));
  j["relations"] = std::move(rels);
  if (!failure.subsets.empty()) {
    json subs = json::array();
    for (const Subset& s : failure.subsets) subs.push_back(subset_to_json(s));
    j["subsets"] = std::move(subs);
  }
  if (!failure.note.empty()) j["note"] = failure.note;
  return j;
}

inline oracle::Failure failure_from_json(const UniverseRef& u, const json& j) {
  oracle::Failure f;
  for (const auto& rel : j.at("relations")) f.relations.push_back(pairs_from_json(u, rel));
  if (j.contains("subsets"))
    for (const auto& s : j.at("subsets")) f.subsets.push_back(subset_from_json(u, s));
  if (j.contains("note")) f.note = j.at("note").get<std::string>();
  return f;
}

inline json sweep_report_to_json(const oracle::SweepReport& report) {
  json j;
  j["claim_id"] = report.claim_id;
  j["mode"] = oracle::to_string(report.mode);
  j["universe_size"] = report.universe_size;
  j["trials"] = report.trials;
  json failures = json::array();
  for (const oracle::Failure& f : report.failures) failures.push_back(failure_to_json(f));
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = report.elapsed.count();
  return j;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Graphviz text for the relation's edges, with the blocks of the ts closure
// rendered as clusters.
inline std::string dot_graph(const Relation& r, const Partition& clusters) {
  std::ostringstream out;
  out << "digraph relation {\n";
  for (std::size_t i = 0; i < clusters.blocks().size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n";
    clusters.blocks()[i].bits().for_each([&](Element x) {
      out << "    \"" << detail::dot_escape(r.universe()->label(x)) << "\";\n";
    });
    out << "  }\n";
  }
  for (auto [x, y] : r.pairs())
    out << "  \"" << detail::dot_escape(r.universe()->label(x)) << "\" -> \""
        << detail::dot_escape(r.universe()->label(y)) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace roughrel::io

#endif  // ROUGHREL_RELATION_IO_HPP
