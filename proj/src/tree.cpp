#include "rcum/tree.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rcum/errors.hpp"

namespace rcum {

namespace {

constexpr double kProbSumTol = 1e-14;
constexpr double kMassTol = 1e-12;

std::string node_label(int t, int i) {
  return "(t=" + std::to_string(t) + ", node=" + std::to_string(i) + ")";
}

}  // namespace

void TreeModel::validate() const {
  if (depth < 0) throw ModelError("tree: negative depth");
  if (static_cast<int>(masses.size()) != depth + 1) {
    throw ModelError("tree: expected " + std::to_string(depth + 1) +
                     " levels of masses, got " + std::to_string(masses.size()));
  }
  if (static_cast<int>(transitions.size()) != depth) {
    throw ModelError("tree: expected " + std::to_string(depth) +
                     " levels of transitions");
  }
  if (payoffs.size() != masses.back().size()) {
    throw ModelError("tree: payoff count differs from terminal node count");
  }
  for (int t = 0; t <= depth; ++t) {
    if (masses[t].empty()) {
      throw ModelError("tree: empty level t=" + std::to_string(t));
    }
  }

  for (int t = 0; t < depth; ++t) {
    if (transitions[t].size() != masses[t].size()) {
      throw ModelError("tree: transition row count mismatch at t=" +
                       std::to_string(t));
    }
    for (int i = 0; i < nodes_at(t); ++i) {
      const auto& edges = transitions[t][i];
      if (edges.empty()) {
        throw ModelError("tree: node without children " + node_label(t, i));
      }
      double sum = 0.0;
      for (const TreeEdge& e : edges) {
        if (e.child < 0 || e.child >= nodes_at(t + 1)) {
          throw ModelError("tree: child index out of range at " +
                           node_label(t, i));
        }
        if (!(e.probability > 0.0)) {
          throw ModelError("tree: non-positive transition probability at " +
                           node_label(t, i));
        }
        sum += e.probability;
      }
      if (std::abs(sum - 1.0) > kProbSumTol) {
        throw ModelError("tree: transition probabilities sum to " +
                         std::to_string(sum) + " at " + node_label(t, i));
      }
    }
  }

  // Masses must propagate forward and carry total mass 1 at every level.
  std::vector<double> current = masses[0];
  for (int t = 0; t <= depth; ++t) {
    double total = 0.0;
    for (int i = 0; i < nodes_at(t); ++i) {
      if (masses[t][i] < 0.0) {
        throw ModelError("tree: negative mass at " + node_label(t, i));
      }
      if (std::abs(masses[t][i] - current[i]) > kMassTol) {
        throw ModelError("tree: stored mass inconsistent with transitions at " +
                         node_label(t, i));
      }
      total += masses[t][i];
    }
    if (std::abs(total - 1.0) > kMassTol) {
      throw ModelError("tree: level mass sums to " + std::to_string(total) +
                       " at t=" + std::to_string(t));
    }
    if (t == depth) break;
    std::vector<double> next(masses[t + 1].size(), 0.0);
    for (int i = 0; i < nodes_at(t); ++i) {
      for (const TreeEdge& e : transitions[t][i]) {
        next[e.child] += masses[t][i] * e.probability;
      }
    }
    current = std::move(next);
  }
}

TreeModel TreeModel::symmetric_binomial(int depth) {
  if (depth < 0) throw ModelError("symmetric_binomial: negative depth");
  TreeModel m;
  m.depth = depth;
  m.masses.resize(static_cast<std::size_t>(depth) + 1);
  m.transitions.resize(static_cast<std::size_t>(depth));
  const double half = 0.5;
  for (int t = 0; t <= depth; ++t) {
    m.masses[t].resize(static_cast<std::size_t>(t) + 1);
    // Node i at time t is the walk value 2i - t; mass C(t,i)/2^t.
    for (int i = 0; i <= t; ++i) {
      m.masses[t][i] =
          static_cast<double>(binomial(t, i)) * std::pow(half, t);
    }
    if (t == depth) break;
    m.transitions[t].resize(static_cast<std::size_t>(t) + 1);
    for (int i = 0; i <= t; ++i) {
      m.transitions[t][i] = {{i, half}, {i + 1, half}};
    }
  }
  m.payoffs.resize(static_cast<std::size_t>(depth) + 1);
  for (int i = 0; i <= depth; ++i) {
    m.payoffs[i] = static_cast<double>(2 * i - depth);
  }
  m.validate();
  return m;
}

const CumulantVector& CumulantTree::root() const {
  if (cumulants.empty() || cumulants[0].size() != 1) {
    throw ModelError("CumulantTree: root cumulants need a single level-0 node");
  }
  return cumulants[0][0];
}

CumulantTree tree_backward_induction(const TreeModel& model, int order,
                                     int max_order) {
  model.validate();
  if (order < 1) throw std::invalid_argument("tree_backward_induction: order < 1");
  if (order > max_order) {
    throw CapacityError("tree_backward_induction: order exceeds maximum");
  }

  CumulantTree ct;
  ct.order = order;
  ct.moments.resize(static_cast<std::size_t>(model.depth) + 1);
  ct.cumulants.resize(static_cast<std::size_t>(model.depth) + 1);

  // Terminal nodes carry the degenerate law of the payoff.
  const int leaves = model.nodes_at(model.depth);
  ct.moments[model.depth].resize(leaves);
  for (int i = 0; i < leaves; ++i) {
    MomentVector& m = ct.moments[model.depth][i];
    m.values.resize(static_cast<std::size_t>(order));
    double power = 1.0;
    for (int k = 1; k <= order; ++k) {
      power *= model.payoffs[i];
      m.values[k - 1] = power;
    }
  }

  for (int t = model.depth - 1; t >= 0; --t) {
    const int count = model.nodes_at(t);
    ct.moments[t].resize(count);
    for (int i = 0; i < count; ++i) {
      MomentVector& m = ct.moments[t][i];
      m.values.assign(static_cast<std::size_t>(order), 0.0);
      for (const TreeEdge& e : model.transitions[t][i]) {
        const MomentVector& child = ct.moments[t + 1][e.child];
        for (int k = 0; k < order; ++k) {
          m.values[k] += e.probability * child.values[k];
        }
      }
    }
  }

  for (int t = 0; t <= model.depth; ++t) {
    ct.cumulants[t].resize(ct.moments[t].size());
    for (std::size_t i = 0; i < ct.moments[t].size(); ++i) {
      ct.cumulants[t][i] =
          conditional_cumulants_from_moments(ct.moments[t][i], max_order);
    }
  }
  return ct;
}

std::vector<TreeScenario> enumerate_scenarios(const TreeModel& model,
                                              int start_time, int start_node,
                                              int end_time) {
  if (start_time < 0 || end_time > model.depth || start_time > end_time) {
    throw std::invalid_argument("enumerate_scenarios: bad time range");
  }
  if (start_node < 0 || start_node >= model.nodes_at(start_time)) {
    throw std::invalid_argument("enumerate_scenarios: bad start node");
  }

  std::vector<TreeScenario> out;
  std::vector<int> nodes;
  nodes.reserve(static_cast<std::size_t>(end_time - start_time) + 1);
  nodes.push_back(start_node);

  auto walk = [&](auto&& self, int t, int node, double prob) -> void {
    if (t == end_time) {
      if (out.size() >= kMaxEnumeratedPaths) {
        throw CapacityError("enumerate_scenarios: path budget exceeded");
      }
      out.push_back({prob, nodes});
      return;
    }
    for (const TreeEdge& e : model.transitions[t][node]) {
      nodes.push_back(e.child);
      self(self, t + 1, e.child, prob * e.probability);
      nodes.pop_back();
    }
  };
  walk(walk, start_time, start_node, 1.0);
  return out;
}

std::vector<std::pair<double, MultiPath>> tree_enumerate_paths(
    const TreeModel& model, const CumulantTree& ct) {
  std::vector<std::pair<double, MultiPath>> out;
  for (int r = 0; r < model.nodes_at(0); ++r) {
    const double mass = model.masses[0][r];
    for (const TreeScenario& sc :
         enumerate_scenarios(model, 0, r, model.depth)) {
      if (out.size() >= kMaxEnumeratedPaths) {
        throw CapacityError("tree_enumerate_paths: path budget exceeded");
      }
      MultiPath path;
      path.grid.resize(static_cast<std::size_t>(model.depth) + 1);
      for (int t = 0; t <= model.depth; ++t) {
        path.grid[t] = static_cast<double>(t);
      }
      path.components.assign(static_cast<std::size_t>(ct.order),
                             std::vector<double>(path.grid.size()));
      for (int t = 0; t <= model.depth; ++t) {
        const CumulantVector& k = ct.cumulants[t][sc.nodes[t]];
        for (int c = 0; c < ct.order; ++c) {
          path.components[c][t] = k.values[c];
        }
      }
      out.emplace_back(mass * sc.probability, std::move(path));
    }
  }
  return out;
}

namespace {

TreeModel tree_from_json(const nlohmann::json& j) {
  TreeModel m;
  try {
    m.depth = j.at("depth").get<int>();
    for (const auto& level : j.at("nodes")) {
      m.masses.push_back(level.get<std::vector<double>>());
    }
    for (const auto& level : j.at("transitions")) {
      std::vector<std::vector<TreeEdge>> rows;
      for (const auto& node : level) {
        std::vector<TreeEdge> edges;
        for (const auto& e : node) {
          if (!e.is_array() || e.size() != 2) {
            throw ParseError("tree json: edge must be [child, probability]");
          }
          edges.push_back({e[0].get<int>(), e[1].get<double>()});
        }
        rows.push_back(std::move(edges));
      }
      m.transitions.push_back(std::move(rows));
    }
    m.payoffs = j.at("payoffs").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree json: ") + e.what());
  }
  m.validate();
  return m;
}

}  // namespace

TreeModel TreeModel::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree json: ") + e.what());
  }
  return tree_from_json(j);
}

TreeModel TreeModel::from_json_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open tree file: " + filename);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string TreeModel::to_json_text() const {
  nlohmann::ordered_json j;
  j["depth"] = depth;
  j["nodes"] = masses;
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (const auto& level : transitions) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& edges : level) {
      nlohmann::ordered_json node = nlohmann::ordered_json::array();
      for (const TreeEdge& e : edges) {
        node.push_back({e.child, e.probability});
      }
      rows.push_back(std::move(node));
    }
    levels.push_back(std::move(rows));
  }
  j["transitions"] = std::move(levels);
  j["payoffs"] = payoffs;
  return j.dump(2);
}

}  // namespace rcum
