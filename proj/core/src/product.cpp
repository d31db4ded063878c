#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "tbuchi/automaton.hpp"

namespace tbuchi {

namespace {

struct PendingTransition {
  unsigned src;
  std::vector<unsigned> dst_locals;
  Guard guard;
  ClockSet reset;
  std::optional<std::string> label;
};

std::string joint_name(const std::vector<Tba>& ps, const std::vector<unsigned>& locals) {
  std::string name;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) name += '.';
    name += ps[i].state_name(locals[i]);
  }
  return name;
}

}  // namespace

Tba product(const std::vector<Tba>& processes, unsigned accepting_component) {
  if (processes.empty()) throw std::invalid_argument("product of no processes");
  if (accepting_component >= processes.size())
    throw std::invalid_argument("accepting component index out of range");

  Tba result;

  // Clocks are shared by name, in order of first appearance.
  std::vector<std::vector<ClockId>> clock_map(processes.size());
  for (size_t i = 0; i < processes.size(); ++i) {
    const Tba& p = processes[i];
    clock_map[i].resize(p.clock_count() + 1, 0);
    for (ClockId c = 1; c <= p.clock_count(); ++c) {
      const std::string& name = p.clock_name(c);
      auto global = result.clock_index(name);
      clock_map[i][c] = global ? *global : result.add_clock(name);
    }
  }

  // Which processes declare each synchronization label.
  std::map<std::string, std::vector<unsigned>> declarers;
  for (size_t i = 0; i < processes.size(); ++i) {
    std::set<std::string> seen;
    for (const Transition& t : processes[i].transitions())
      if (t.label && seen.insert(*t.label).second)
        declarers[*t.label].push_back(static_cast<unsigned>(i));
  }

  auto translate_guard = [&](unsigned proc, const Guard& g) {
    Guard out = g;
    for (auto& atom : out) atom.clock = clock_map[proc][atom.clock];
    return out;
  };
  auto translate_reset = [&](unsigned proc, ClockSet r) {
    ClockSet out;
    r.for_each([&](ClockId c) { out.add(clock_map[proc][c]); });
    return out;
  };

  // Breadth-first discovery of reachable location vectors; transitions are
  // recorded as they are found and added once all targets have indices.
  std::map<std::vector<unsigned>, unsigned> index_of;
  std::deque<std::vector<unsigned>> queue;
  std::vector<PendingTransition> pending;

  auto intern = [&](const std::vector<unsigned>& locals) {
    auto it = index_of.find(locals);
    if (it != index_of.end()) return it->second;
    unsigned idx = result.add_state(
        joint_name(processes, locals),
        processes[accepting_component].accepting(locals[accepting_component]));
    index_of.emplace(locals, idx);
    queue.push_back(locals);
    return idx;
  };

  std::vector<unsigned> init_locals;
  for (const Tba& p : processes) init_locals.push_back(p.init());
  result.set_init(intern(init_locals));

  while (!queue.empty()) {
    std::vector<unsigned> locals = queue.front();
    queue.pop_front();
    const unsigned src = index_of.at(locals);
    const size_t first_new = pending.size();

    for (size_t i = 0; i < processes.size(); ++i) {
      for (unsigned ti : processes[i].outgoing(locals[i])) {
        const Transition& t = processes[i].transition(ti);
        if (!t.label) {
          PendingTransition pt;
          pt.src = src;
          pt.dst_locals = locals;
          pt.dst_locals[i] = t.dst;
          pt.guard = translate_guard(i, t.guard);
          pt.reset = translate_reset(i, t.reset);
          pending.push_back(std::move(pt));
          continue;
        }
        const auto& ds = declarers.at(*t.label);
        if (ds.front() != i) continue;  // joint moves are emitted once

        // Enumerate one labeled transition per declaring process.
        std::vector<std::vector<unsigned>> choices(ds.size());
        bool feasible = true;
        for (size_t d = 0; d < ds.size(); ++d) {
          if (ds[d] == i) {
            choices[d] = {ti};
            continue;
          }
          for (unsigned tj : processes[ds[d]].outgoing(locals[ds[d]])) {
            if (processes[ds[d]].transition(tj).label == t.label) choices[d].push_back(tj);
          }
          if (choices[d].empty()) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;

        std::vector<size_t> pick(ds.size(), 0);
        while (true) {
          PendingTransition pt;
          pt.src = src;
          pt.dst_locals = locals;
          pt.label = t.label;
          for (size_t d = 0; d < ds.size(); ++d) {
            const unsigned proc = ds[d];
            const Transition& part = processes[proc].transition(choices[d][pick[d]]);
            pt.dst_locals[proc] = part.dst;
            Guard g = translate_guard(proc, part.guard);
            pt.guard.insert(pt.guard.end(), g.begin(), g.end());
            pt.reset |= translate_reset(proc, part.reset);
          }
          pending.push_back(std::move(pt));
          size_t d = ds.size();
          while (d > 0 && ++pick[d - 1] == choices[d - 1].size()) pick[--d] = 0;
          if (d == 0) break;
        }
      }
    }

    // Intern targets found from this source before moving on, keeping the
    // search breadth-first.
    for (size_t k = first_new; k < pending.size(); ++k) intern(pending[k].dst_locals);
  }

  for (auto& pt : pending)
    result.add_transition(Transition{pt.src, index_of.at(pt.dst_locals),
                                     std::move(pt.guard), pt.reset, std::move(pt.label)});
  return result;
}

}  // namespace tbuchi
