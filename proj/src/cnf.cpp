#include "wsat/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "wsat/rng.hpp"

namespace wsat {

Formula::Formula(uint32_t num_vars,
                 const std::vector<std::vector<Lit>>& clauses)
    : num_vars_(num_vars) {
  clause_off_.reserve(clauses.size() + 1);
  clause_off_.push_back(0);

  // Stamp array over literal codes, for O(1) duplicate/tautology checks.
  constexpr uint32_t kUnstamped = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> stamp(2 * static_cast<size_t>(num_vars), kUnstamped);

  uint32_t idx = 0;
  for (const auto& clause : clauses) {
    for (Lit l : clause) {
      if (l.var() >= num_vars)
        throw std::invalid_argument("variable " +
                                    std::to_string(l.var() + 1) +
                                    " out of range in clause " +
                                    std::to_string(idx) + " (num_vars=" +
                                    std::to_string(num_vars) + ")");
      if (stamp[l.negated().index()] == idx)
        throw std::invalid_argument("tautological clause " +
                                    std::to_string(idx) + " (contains both " +
                                    std::to_string(l.to_dimacs()) + " and " +
                                    std::to_string(-l.to_dimacs()) + ")");
      if (stamp[l.index()] == idx) continue;  // duplicate literal, drop
      stamp[l.index()] = idx;
      lits_.push_back(l);
    }
    clause_off_.push_back(static_cast<uint32_t>(lits_.size()));
    ++idx;
  }

  // Occurrence lists: counting pass, prefix sums, fill. Clause order makes
  // each list ascending.
  occ_off_.assign(2 * static_cast<size_t>(num_vars) + 1, 0);
  for (Lit l : lits_) ++occ_off_[l.index() + 1];
  for (size_t i = 1; i < occ_off_.size(); ++i) occ_off_[i] += occ_off_[i - 1];

  occ_.resize(lits_.size());
  std::vector<uint32_t> cursor(occ_off_.begin(), occ_off_.end() - 1);
  for (uint32_t c = 0; c < num_clauses(); ++c)
    for (Lit l : clause(c)) occ_[cursor[l.index()]++] = c;
}

Formula Formula::from_dimacs_ints(
    uint32_t num_vars, const std::vector<std::vector<int>>& clauses) {
  std::vector<std::vector<Lit>> converted;
  converted.reserve(clauses.size());
  for (const auto& clause : clauses) {
    std::vector<Lit> lits;
    lits.reserve(clause.size());
    for (int dlit : clause) {
      if (dlit == 0) throw std::invalid_argument("literal 0 inside clause");
      lits.push_back(Lit::from_dimacs(dlit));
    }
    converted.push_back(std::move(lits));
  }
  return Formula(num_vars, converted);
}

bool Formula::has_empty_clause() const {
  for (uint32_t c = 0; c < num_clauses(); ++c)
    if (clause(c).empty()) return true;
  return false;
}

namespace {

// Character-level DIMACS scanner over an in-memory buffer.
class DimacsScanner {
 public:
  explicit DimacsScanner(std::string text) : text_(std::move(text)) {}

  Formula parse() {
    skip_to_token();
    if (pos_ >= text_.size() || text_[pos_] != 'p')
      throw ParseError("missing 'p cnf' header");
    parse_header();

    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    while (true) {
      skip_to_token();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] == 'p') throw ParseError("duplicate 'p cnf' header");
      int64_t lit = parse_int();
      if (lit == 0) {
        if (current.empty())
          throw ParseError("empty clause " + std::to_string(clauses.size()) +
                           ": formula is trivially unsatisfiable");
        clauses.push_back(current);
        current.clear();
        continue;
      }
      int64_t v = lit < 0 ? -lit : lit;
      if (v > num_vars_)
        throw ParseError("variable " + std::to_string(v) +
                         " out of range (header declares " +
                         std::to_string(num_vars_) + " variables)");
      current.push_back(static_cast<int>(lit));
    }
    if (!current.empty()) throw ParseError("unterminated clause at end of input");
    if (clauses.size() != static_cast<size_t>(num_clauses_))
      throw ParseError("clause count mismatch: header declares " +
                       std::to_string(num_clauses_) + ", found " +
                       std::to_string(clauses.size()));
    try {
      return Formula::from_dimacs_ints(static_cast<uint32_t>(num_vars_),
                                       clauses);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

 private:
  // Advances past whitespace and comment lines to the next token start.
  void skip_to_token() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == 'c') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
        ++pos_;
      } else {
        return;
      }
    }
  }

  void parse_header() {
    ++pos_;  // 'p'
    skip_spaces();
    if (text_.compare(pos_, 3, "cnf") != 0)
      throw ParseError("malformed header: expected 'p cnf <vars> <clauses>'");
    pos_ += 3;
    skip_spaces();
    num_vars_ = parse_int();
    skip_spaces();
    num_clauses_ = parse_int();
    if (num_vars_ < 0 || num_clauses_ < 0)
      throw ParseError("negative count in 'p cnf' header");
    if (num_vars_ > std::numeric_limits<int32_t>::max())
      throw ParseError("variable count exceeds supported range");
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }

  int64_t parse_int() {
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
      throw ParseError("expected integer at offset " + std::to_string(pos_));
    int64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int32_t>::max())
        throw ParseError("integer overflow at offset " + std::to_string(pos_));
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string text_;
  size_t pos_ = 0;
  int64_t num_vars_ = 0;
  int64_t num_clauses_ = 0;
};

}  // namespace

Formula parse_dimacs(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return DimacsScanner(buf.str()).parse();
}

Formula parse_dimacs(const std::string& text) {
  return DimacsScanner(text).parse();
}

Formula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_dimacs(in);
}

void emit_dimacs(const Formula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (uint32_t c = 0; c < f.num_clauses(); ++c) {
    for (Lit l : f.clause(c)) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const Formula& f) {
  std::ostringstream out;
  emit_dimacs(f, out);
  return out.str();
}

Formula generate_uniform_ksat(uint32_t num_vars, uint32_t clause_width,
                              uint32_t num_clauses, uint64_t seed) {
  if (clause_width < 1) throw std::invalid_argument("clause width must be >= 1");
  if (clause_width > num_vars)
    throw std::invalid_argument("clause width " + std::to_string(clause_width) +
                                " exceeds variable count " +
                                std::to_string(num_vars));
  if (num_clauses < 1) throw std::invalid_argument("clause count must be >= 1");

  Rng rng(seed);
  std::vector<uint8_t> used(num_vars, 0);
  std::vector<Var> vars(clause_width);
  std::vector<std::vector<Lit>> clauses(num_clauses);
  for (auto& clause : clauses) {
    // Draw order per clause: the k variable draws (with rejections), then
    // the k polarity draws.
    for (uint32_t j = 0; j < clause_width; ++j) {
      Var v;
      do {
        v = rng.below(num_vars);
      } while (used[v]);
      used[v] = 1;
      vars[j] = v;
    }
    clause.reserve(clause_width);
    for (uint32_t j = 0; j < clause_width; ++j)
      clause.push_back(Lit::make(vars[j], (rng.next() & 1) != 0));
    for (Var v : vars) used[v] = 0;
  }
  return Formula(num_vars, clauses);
}

}  // namespace wsat
