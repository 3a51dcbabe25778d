#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfar/instance.hpp"

namespace pfar {

// Binary decision variables. Canonical names use 1-based indices so they read like
// the usual subscripts: a_1, r_1_2, e_1_2_4 (flow 1 over edge from node 2 to node 4).
struct IlpVariable {
  enum class Kind { Alpha, Rho, Epsilon };

  Kind kind = Kind::Alpha;
  std::int32_t flow = 0;   // 0-based flow index
  std::int32_t path = -1;  // 0-based path index (Rho only)
  Edge edge{};             // Epsilon only
  std::string name;
};

struct IlpTerm {
  std::int64_t coef = 0;
  std::int32_t var = 0;  // index into IlpProgram::variables
};

enum class Relation { LessEq, GreaterEq, Equal };

struct IlpConstraint {
  enum class Kind { AdmitOnePath, PathEdges, EdgeCapacity, UnusedEdgesZero };

  Kind kind = Kind::AdmitOnePath;
  std::string name;
  std::vector<IlpTerm> terms;
  Relation relation = Relation::Equal;
  std::int64_t rhs = 0;
};

struct IlpProgram {
  std::vector<IlpVariable> variables;
  std::vector<IlpTerm> objective;  // maximized
  std::vector<IlpConstraint> constraints;
  std::unordered_map<std::string, std::int32_t> var_index;

  std::size_t count_variables(IlpVariable::Kind kind) const;
  std::size_t count_constraints(IlpConstraint::Kind kind) const;
};

// 0/1 value per variable name; must be total over the program's variables.
using IlpSolutionValues = std::map<std::string, int>;

struct IlpCheck {
  bool ok = false;
  std::vector<std::string> violated;  // constraint names, plus "binary:<var>" entries
};

// The exact model: maximize sum of priority*alpha subject to
//   (i)   per flow:        sum_m rho_{i,m} = alpha_i
//   (ii)  per (flow,path): sum of the path's epsilon vars >= |path| * rho_{i,m}
//   (iii) per edge:        sum_i bandwidth_i * epsilon_{i,e} <= capacity(e)
//   (iv)  per flow:        epsilon vars of edges on none of the flow's paths sum to 0
// Epsilon variables are materialized for every (flow, edge) pair.
IlpProgram build_ilp(const PfarInstance& instance);

// CPLEX LP text: Maximize / Subject To / Binary / End. Every term is written as
// "<integer coefficient> <name>"; rows in (i),(ii),(iii),(iv) order, each group in
// flow/path/edge lexicographic order. Rows with no terms are omitted from the text.
std::string export_lp(const IlpProgram& program);

IlpCheck verify_ilp_values(const IlpProgram& program, const IlpSolutionValues& values);

// Algorithm: per flow, the path whose rho is 1, else DROP.
RouteAssignment decode_assignment(const PfarInstance& instance, const IlpSolutionValues& values);

// Inverse of decode_assignment: alpha from non-DROP, rho from the chosen index,
// epsilon exactly the chosen path's edges. Total over build_ilp's variables.
IlpSolutionValues encode_values(const PfarInstance& instance, const RouteAssignment& assignment);

// Parses "name value" lines (value 0 or 1); '#' lines and blank lines are skipped.
IlpSolutionValues parse_values_text(const std::string& text);

}  // namespace pfar
