#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsat {

// Variables are 0-based internally; DIMACS numbering (1-based, signed) is
// converted at the I/O boundary.
using Var = uint32_t;

// A literal packed as (variable << 1) | negated.
class Lit {
 public:
  Lit() = default;

  static Lit make(Var v, bool positive) {
    return Lit((v << 1) | (positive ? 0u : 1u));
  }

  // dlit must be nonzero; |dlit| gives the 1-based variable.
  static Lit from_dimacs(int dlit) {
    Var v = static_cast<Var>(dlit > 0 ? dlit : -dlit) - 1;
    return make(v, dlit > 0);
  }

  int to_dimacs() const {
    int v = static_cast<int>(var()) + 1;
    return positive() ? v : -v;
  }

  Var var() const { return code_ >> 1; }
  bool positive() const { return (code_ & 1) == 0; }
  Lit negated() const { return Lit(code_ ^ 1); }

  // Dense index for occurrence tables: 2*var + negated.
  uint32_t index() const { return code_; }

  bool operator==(const Lit&) const = default;

 private:
  explicit Lit(uint32_t code) : code_(code) {}
  uint32_t code_ = 0;
};

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable CNF formula: flattened clause storage plus, per literal, the
// ascending list of clause indices containing it. Safe to share across
// threads once constructed.
class Formula {
 public:
  // Validates variable ranges, silently drops duplicate literals within a
  // clause, and rejects tautological clauses. Empty clauses are representable
  // (the solver refuses them up front); the DIMACS parser rejects them.
  Formula(uint32_t num_vars, const std::vector<std::vector<Lit>>& clauses);

  // Convenience for building from DIMACS-style signed integers.
  static Formula from_dimacs_ints(uint32_t num_vars,
                                  const std::vector<std::vector<int>>& clauses);

  uint32_t num_vars() const { return num_vars_; }
  uint32_t num_clauses() const {
    return static_cast<uint32_t>(clause_off_.size() - 1);
  }
  double ratio() const {
    return num_vars_ == 0 ? 0.0
                          : static_cast<double>(num_clauses()) / num_vars_;
  }

  std::span<const Lit> clause(uint32_t c) const {
    return {lits_.data() + clause_off_[c], clause_off_[c + 1] - clause_off_[c]};
  }

  // Clause indices containing this exact literal, ascending.
  std::span<const uint32_t> occurrences(Lit l) const {
    return {occ_.data() + occ_off_[l.index()],
            occ_off_[l.index() + 1] - occ_off_[l.index()]};
  }

  bool has_empty_clause() const;

 private:
  uint32_t num_vars_ = 0;
  std::vector<uint32_t> clause_off_;  // num_clauses + 1 offsets into lits_
  std::vector<Lit> lits_;
  std::vector<uint32_t> occ_off_;  // 2 * num_vars + 1 offsets into occ_
  std::vector<uint32_t> occ_;
};

// Parses DIMACS CNF: optional 'c' comment lines, one 'p cnf <vars> <clauses>'
// header, zero-terminated clauses. Throws ParseError on malformed input,
// clause/header count mismatch, out-of-range variables, empty clauses
// (trivially unsatisfiable input), and tautological clauses.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);
Formula parse_dimacs_file(const std::string& path);

// Canonical DIMACS emission; parse_dimacs(emit_dimacs(f)) reproduces f, and
// a second emit is byte-identical.
void emit_dimacs(const Formula& f, std::ostream& out);
std::string emit_dimacs(const Formula& f);

// Uniform random k-SAT: m clauses, each over k distinct variables drawn
// uniformly without replacement (rejection sampling) with independent
// uniform polarities. Identical seeds give identical formulas.
Formula generate_uniform_ksat(uint32_t num_vars, uint32_t clause_width,
                              uint32_t num_clauses, uint64_t seed);

}  // namespace wsat
