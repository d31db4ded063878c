#include "tbuchi/dot.hpp"

#include <sstream>
#include <unordered_map>

#include "tbuchi/dbm.hpp"
#include "tbuchi/zone_graph.hpp"

namespace tbuchi {

namespace {

std::string escaped(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string transition_label(const Tba& a, unsigned t_id) {
  const Transition& t = a.transition(t_id);
  std::ostringstream os;
  if (t.label)
    os << *t.label;
  else
    os << 't' << t_id;
  if (!t.guard.empty()) {
    os << " [";
    for (std::size_t i = 0; i < t.guard.size(); ++i) {
      if (i) os << " & ";
      const AtomicConstraint& c = t.guard[i];
      os << a.clock_name(c.clock) << rel_text(c.rel) << c.constant;
    }
    os << ']';
  }
  if (t.reset.any()) {
    os << " {";
    bool first = true;
    t.reset.for_each([&](ClockId c) {
      if (!first) os << ',';
      first = false;
      os << a.clock_name(c);
    });
    os << '}';
  }
  return os.str();
}

std::string clock_set_text(const Tba& a, ClockSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ClockId c) {
    if (!first) out += ',';
    first = false;
    out += a.clock_name(c);
  });
  out += '}';
  return out;
}

void emit_node(std::ostringstream& os, std::size_t id, const std::string& label,
               bool accepting) {
  os << "  n" << id << " [label=\"" << label << "\"";
  if (accepting) os << ", peripheries=2";
  os << "];\n";
}

}  // namespace

std::string render_dot_zg(const Tba& a, std::size_t max_nodes) {
  const int M = a.max_constant();
  std::ostringstream os;
  os << "digraph zg {\n  rankdir=LR;\n  node [shape=box];\n";

  std::unordered_map<ZgNode, std::size_t, ZgNodeHash> ids;
  std::vector<ZgNode> nodes;
  auto intern = [&](const ZgNode& n) {
    auto [it, fresh] = ids.try_emplace(n, nodes.size());
    if (fresh) {
      if (max_nodes != 0 && nodes.size() >= max_nodes) throw MaxNodesExceeded(max_nodes);
      nodes.push_back(n);
      emit_node(os, it->second,
                escaped(a.state_name(n.state)) + "\\n" + escaped(zone_text(n.zone, a)),
                a.accepting(n.state));
    }
    return it->second;
  };

  intern(zg_initial(a, M));
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    const ZgNode from = nodes[u];
    for (const auto& [t_id, target] : zg_successors(a, from, M)) {
      const std::size_t v = intern(target);
      os << "  n" << u << " -> n" << v << " [label=\"" << escaped(transition_label(a, t_id))
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_dot_gzg(const Tba& a, std::size_t max_nodes) {
  const int M = a.max_constant();
  std::ostringstream os;
  os << "digraph gzg {\n  rankdir=LR;\n  node [shape=box];\n";

  std::unordered_map<GzgNode, std::size_t, GzgNodeHash> ids;
  std::vector<GzgNode> nodes;
  auto intern = [&](const GzgNode& n) {
    auto [it, fresh] = ids.try_emplace(n, nodes.size());
    if (fresh) {
      if (max_nodes != 0 && nodes.size() >= max_nodes) throw MaxNodesExceeded(max_nodes);
      nodes.push_back(n);
      emit_node(os, it->second,
                escaped(a.state_name(n.state)) + "\\n" + escaped(zone_text(n.zone, a)) +
                    "\\n" + escaped(clock_set_text(a, n.guess)),
                a.accepting(n.state));
    }
    return it->second;
  };

  intern(gzg_initial(a, M));
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    const GzgNode from = nodes[u];
    for (const GzgEdge& e : gzg_successors(a, from, M)) {
      const std::size_t v = intern(e.target);
      if (e.transition < 0)
        os << "  n" << u << " -> n" << v << " [label=\"τ\", style=dashed];\n";
      else
        os << "  n" << u << " -> n" << v << " [label=\""
           << escaped(transition_label(a, static_cast<unsigned>(e.transition))) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tbuchi
