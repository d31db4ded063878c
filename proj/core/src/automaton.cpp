#include "tbuchi/automaton.hpp"

#include <sstream>
#include <stdexcept>

namespace tbuchi {

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::lt: return "<";
    case Rel::le: return "<=";
    case Rel::eq: return "=";
    case Rel::ge: return ">=";
    case Rel::gt: return ">";
  }
  return "?";
}

unsigned Tba::add_state(std::string name, bool accepting) {
  if (state_by_name_.count(name)) throw std::invalid_argument("duplicate state " + name);
  unsigned idx = state_count();
  state_by_name_.emplace(name, idx);
  state_names_.push_back(std::move(name));
  accepting_.push_back(accepting);
  outgoing_.emplace_back();
  return idx;
}

ClockId Tba::add_clock(std::string name) {
  if (clock_by_name_.count(name)) throw std::invalid_argument("duplicate clock " + name);
  if (clock_count() >= 31) throw std::invalid_argument("too many clocks");
  ClockId idx = clock_count() + 1;
  clock_by_name_.emplace(name, idx);
  clock_names_.push_back(std::move(name));
  return idx;
}

void Tba::set_init(unsigned state) {
  if (state >= state_count()) throw std::out_of_range("init state out of range");
  init_ = state;
}

unsigned Tba::add_transition(Transition t) {
  if (t.src >= state_count() || t.dst >= state_count())
    throw std::out_of_range("transition endpoint out of range");
  for (const auto& atom : t.guard) {
    if (atom.clock == 0 || atom.clock > clock_count())
      throw std::out_of_range("guard clock out of range");
    if (atom.constant < 0) throw std::invalid_argument("negative guard constant");
  }
  if (!t.reset.subset_of(all_clocks())) throw std::out_of_range("reset clock out of range");
  unsigned idx = transition_count();
  outgoing_[t.src].push_back(idx);
  transitions_.push_back(std::move(t));
  return idx;
}

std::optional<unsigned> Tba::state_index(const std::string& name) const {
  auto it = state_by_name_.find(name);
  if (it == state_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<ClockId> Tba::clock_index(const std::string& name) const {
  auto it = clock_by_name_.find(name);
  if (it == clock_by_name_.end()) return std::nullopt;
  return it->second;
}

unsigned Tba::init() const {
  if (!init_) throw std::logic_error("automaton has no initial state");
  return *init_;
}

int Tba::max_constant() const {
  int m = 0;
  for (const auto& t : transitions_)
    for (const auto& atom : t.guard)
      if (atom.constant > m) m = atom.constant;
  return m;
}

bool Tba::operator==(const Tba& o) const {
  return state_names_ == o.state_names_ && clock_names_ == o.clock_names_ &&
         accepting_ == o.accepting_ && init_ == o.init_ && transitions_ == o.transitions_;
}

std::string transition_text(const Tba& a, unsigned t_id) {
  const Transition& t = a.transition(t_id);
  std::ostringstream os;
  os << 't' << t_id << ": " << a.state_name(t.src) << " -> " << a.state_name(t.dst);
  if (t.label) os << " sync " << *t.label;
  if (!t.guard.empty()) {
    os << " when ";
    for (std::size_t i = 0; i < t.guard.size(); ++i) {
      if (i) os << " & ";
      os << a.clock_name(t.guard[i].clock) << rel_text(t.guard[i].rel) << t.guard[i].constant;
    }
  }
  if (t.reset.any()) {
    os << " reset {";
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

}  // namespace tbuchi
