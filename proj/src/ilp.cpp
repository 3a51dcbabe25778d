#include "pfar/ilp.hpp"

#include <algorithm>
#include <sstream>

namespace pfar {

namespace {

std::string alpha_name(std::size_t flow) { return "a_" + std::to_string(flow + 1); }

std::string rho_name(std::size_t flow, std::size_t path) {
  return "r_" + std::to_string(flow + 1) + "_" + std::to_string(path + 1);
}

std::string epsilon_name(std::size_t flow, Edge e) {
  return "e_" + std::to_string(flow + 1) + "_" + std::to_string(e.src + 1) + "_" +
         std::to_string(e.dst + 1);
}

}  // namespace

std::size_t IlpProgram::count_variables(IlpVariable::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(variables.begin(), variables.end(),
                    [kind](const IlpVariable& v) { return v.kind == kind; }));
}

std::size_t IlpProgram::count_constraints(IlpConstraint::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(constraints.begin(), constraints.end(),
                    [kind](const IlpConstraint& c) { return c.kind == kind; }));
}

IlpProgram build_ilp(const PfarInstance& instance) {
  instance.require_paths();

  const std::size_t flow_count = instance.flows.size();
  const auto& edges = instance.network.edges();

  IlpProgram program;

  // Variables: alphas, then rhos flow-major, then epsilons flow-major with edges in
  // lexicographic order. Epsilons exist for every (flow, edge) pair; edges on none
  // of the flow's paths are pinned to zero by the type-(iv) rows below.
  std::vector<std::int32_t> alpha_var(flow_count);
  std::vector<std::vector<std::int32_t>> rho_var(flow_count);
  std::vector<std::vector<std::int32_t>> eps_var(flow_count);

  auto add_var = [&program](IlpVariable v) {
    const auto index = static_cast<std::int32_t>(program.variables.size());
    program.var_index.emplace(v.name, index);
    program.variables.push_back(std::move(v));
    return index;
  };

  for (std::size_t i = 0; i < flow_count; ++i)
    alpha_var[i] = add_var({IlpVariable::Kind::Alpha, static_cast<std::int32_t>(i), -1, Edge{},
                            alpha_name(i)});
  for (std::size_t i = 0; i < flow_count; ++i) {
    rho_var[i].resize(instance.paths[i].size());
    for (std::size_t m = 0; m < instance.paths[i].size(); ++m)
      rho_var[i][m] = add_var({IlpVariable::Kind::Rho, static_cast<std::int32_t>(i),
                               static_cast<std::int32_t>(m), Edge{}, rho_name(i, m)});
  }
  for (std::size_t i = 0; i < flow_count; ++i) {
    eps_var[i].resize(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k)
      eps_var[i][k] = add_var({IlpVariable::Kind::Epsilon, static_cast<std::int32_t>(i), -1,
                               edges[k], epsilon_name(i, edges[k])});
  }

  for (std::size_t i = 0; i < flow_count; ++i)
    program.objective.push_back({instance.priority_of(i), alpha_var[i]});

  // (i) one (and only one) path when admitted: sum_m rho - alpha = 0.
  for (std::size_t i = 0; i < flow_count; ++i) {
    IlpConstraint c;
    c.kind = IlpConstraint::Kind::AdmitOnePath;
    c.name = "admit_" + std::to_string(i + 1);
    for (std::int32_t var : rho_var[i]) c.terms.push_back({1, var});
    c.terms.push_back({-1, alpha_var[i]});
    c.relation = Relation::Equal;
    c.rhs = 0;
    program.constraints.push_back(std::move(c));
  }

  // (ii) choosing a path forces all its edges: sum of path epsilons - |p|*rho >= 0.
  for (std::size_t i = 0; i < flow_count; ++i) {
    for (std::size_t m = 0; m < instance.paths[i].size(); ++m) {
      const Path& path = instance.paths[i][m];
      IlpConstraint c;
      c.kind = IlpConstraint::Kind::PathEdges;
      c.name = "route_" + std::to_string(i + 1) + "_" + std::to_string(m + 1);
      for (const Edge& e : path.edges)
        c.terms.push_back({1, eps_var[i][instance.network.edge_index(e)]});
      c.terms.push_back({-static_cast<std::int64_t>(path.length()), rho_var[i][m]});
      c.relation = Relation::GreaterEq;
      c.rhs = 0;
      program.constraints.push_back(std::move(c));
    }
  }

  // (iii) link capacity per edge: sum_i bandwidth_i * epsilon <= capacity.
  for (std::size_t k = 0; k < edges.size(); ++k) {
    IlpConstraint c;
    c.kind = IlpConstraint::Kind::EdgeCapacity;
    c.name = "cap_" + std::to_string(edges[k].src + 1) + "_" + std::to_string(edges[k].dst + 1);
    for (std::size_t i = 0; i < flow_count; ++i)
      c.terms.push_back({instance.flows[i].bandwidth, eps_var[i][k]});
    c.relation = Relation::LessEq;
    c.rhs = instance.network.capacity(k);
    program.constraints.push_back(std::move(c));
  }

  // (iv) edges on none of the flow's paths sum to zero; omitted when every edge is
  // covered by some path of the flow.
  for (std::size_t i = 0; i < flow_count; ++i) {
    std::vector<char> used(edges.size(), 0);
    for (const Path& path : instance.paths[i])
      for (const Edge& e : path.edges) used[instance.network.edge_index(e)] = 1;

    IlpConstraint c;
    c.kind = IlpConstraint::Kind::UnusedEdgesZero;
    c.name = "zero_" + std::to_string(i + 1);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (!used[k]) c.terms.push_back({1, eps_var[i][k]});
    if (c.terms.empty()) continue;
    c.relation = Relation::Equal;
    c.rhs = 0;
    program.constraints.push_back(std::move(c));
  }

  return program;
}

namespace {

void append_terms(std::string& out, const std::vector<IlpTerm>& terms,
                  const std::vector<IlpVariable>& variables) {
  bool first = true;
  for (const IlpTerm& t : terms) {
    const std::int64_t magnitude = t.coef < 0 ? -t.coef : t.coef;
    if (first) {
      if (t.coef < 0) out += "- ";
      first = false;
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    out += std::to_string(magnitude);
    out += ' ';
    out += variables[static_cast<std::size_t>(t.var)].name;
  }
}

}  // namespace

std::string export_lp(const IlpProgram& program) {
  std::string out;
  out += "Maximize\n obj: ";
  if (program.objective.empty()) {
    out += "0";
  } else {
    append_terms(out, program.objective, program.variables);
  }
  out += "\nSubject To\n";

  for (const IlpConstraint& c : program.constraints) {
    if (c.terms.empty()) continue;  // vacuous row, not representable in LP text
    out += ' ';
    out += c.name;
    out += ": ";
    append_terms(out, c.terms, program.variables);
    switch (c.relation) {
      case Relation::LessEq: out += " <= "; break;
      case Relation::GreaterEq: out += " >= "; break;
      case Relation::Equal: out += " = "; break;
    }
    out += std::to_string(c.rhs);
    out += '\n';
  }

  out += "Binary\n";
  for (const IlpVariable& v : program.variables) {
    out += ' ';
    out += v.name;
    out += '\n';
  }
  out += "End\n";
  return out;
}

namespace {

int value_of(const IlpProgram& program, const IlpSolutionValues& values,
             const std::string& name) {
  auto it = values.find(name);
  if (it == values.end())
    throw UnknownVariable("no value given for variable " + name);
  (void)program;
  return it->second;
}

}  // namespace

IlpCheck verify_ilp_values(const IlpProgram& program, const IlpSolutionValues& values) {
  for (const auto& [name, value] : values) {
    if (!program.var_index.contains(name))
      throw UnknownVariable("value given for unknown variable " + name);
    (void)value;
  }

  IlpCheck check;
  std::vector<int> val(program.variables.size(), 0);
  for (std::size_t v = 0; v < program.variables.size(); ++v) {
    val[v] = value_of(program, values, program.variables[v].name);
    if (val[v] != 0 && val[v] != 1)
      check.violated.push_back("binary:" + program.variables[v].name);
  }

  for (const IlpConstraint& c : program.constraints) {
    std::int64_t lhs = 0;
    for (const IlpTerm& t : c.terms) lhs += t.coef * val[static_cast<std::size_t>(t.var)];
    const bool ok = c.relation == Relation::LessEq      ? lhs <= c.rhs
                    : c.relation == Relation::GreaterEq ? lhs >= c.rhs
                                                        : lhs == c.rhs;
    if (!ok) check.violated.push_back(c.name);
  }

  check.ok = check.violated.empty();
  return check;
}

RouteAssignment decode_assignment(const PfarInstance& instance, const IlpSolutionValues& values) {
  instance.require_paths();

  RouteAssignment assignment = RouteAssignment::all_drop(instance.flows.size());
  for (std::size_t i = 0; i < instance.flows.size(); ++i) {
    for (std::size_t m = 0; m < instance.paths[i].size(); ++m) {
      auto it = values.find(rho_name(i, m));
      if (it == values.end())
        throw UnknownVariable("no value given for variable " + rho_name(i, m));
      if (it->second != 1) continue;
      if (!assignment.is_drop(i))
        throw MultiplePathsSelected("flow " + std::to_string(i + 1) +
                                    " has more than one selected path");
      assignment.choice[i] = static_cast<std::int32_t>(m);
    }
  }
  return assignment;
}

IlpSolutionValues encode_values(const PfarInstance& instance, const RouteAssignment& assignment) {
  instance.require_paths();
  if (assignment.choice.size() != instance.flows.size())
    throw AssignmentIncomplete("assignment does not cover all flows");

  IlpSolutionValues values;
  const auto& edges = instance.network.edges();
  for (std::size_t i = 0; i < instance.flows.size(); ++i) {
    const bool admitted = !assignment.is_drop(i);
    values[alpha_name(i)] = admitted ? 1 : 0;
    for (std::size_t m = 0; m < instance.paths[i].size(); ++m)
      values[rho_name(i, m)] =
          admitted && assignment.choice[i] == static_cast<std::int32_t>(m) ? 1 : 0;

    std::vector<char> on_path(edges.size(), 0);
    if (admitted) {
      const auto m = static_cast<std::size_t>(assignment.choice[i]);
      if (m >= instance.paths[i].size())
        throw Error("assignment references a path index with no stored path");
      for (const Edge& e : instance.paths[i][m].edges)
        on_path[instance.network.edge_index(e)] = 1;
    }
    for (std::size_t k = 0; k < edges.size(); ++k)
      values[epsilon_name(i, edges[k])] = on_path[k] ? 1 : 0;
  }
  return values;
}

IlpSolutionValues parse_values_text(const std::string& text) {
  IlpSolutionValues values;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name) || name.front() == '#') continue;
    long long value = 0;
    std::string extra;
    if (!(fields >> value) || (fields >> extra) || (value != 0 && value != 1))
      throw ParseError("values line " + std::to_string(line_no) + ": expected \"name 0|1\"");
    if (!values.emplace(name, static_cast<int>(value)).second)
      throw ParseError("values line " + std::to_string(line_no) + ": duplicate variable " + name);
  }
  return values;
}

}  // namespace pfar
