#include "tbuchi/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace tbuchi {

namespace {

struct Line {
  unsigned no = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  unsigned no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{no, {}};
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

AtomicConstraint parse_atom(const Tba& a, const std::string& tok, unsigned line) {
  auto pos = tok.find_first_of("<>=");
  if (pos == std::string::npos || pos == 0)
    throw ParseError(line, "bad guard atom '" + tok + "'");
  std::string name = tok.substr(0, pos);
  Rel rel;
  size_t rest = pos + 1;
  switch (tok[pos]) {
    case '=': rel = Rel::eq; break;
    case '<':
      if (rest < tok.size() && tok[rest] == '=') { rel = Rel::le; ++rest; }
      else rel = Rel::lt;
      break;
    default:
      if (rest < tok.size() && tok[rest] == '=') { rel = Rel::ge; ++rest; }
      else rel = Rel::gt;
      break;
  }
  std::string num = tok.substr(rest);
  if (num.empty()) throw ParseError(line, "bad guard atom '" + tok + "'");
  for (char c : num)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, "bad constant in guard atom '" + tok + "'");
  auto clock = a.clock_index(name);
  if (!clock) throw ParseError(line, "unknown clock " + name);
  return AtomicConstraint{*clock, rel, std::stoi(num)};
}

Tba parse_tba_lines(const std::vector<Line>& lines) {
  Tba a;
  int section = 0;  // 0: clocks, 1: states, 2: transitions
  unsigned init_count = 0;
  for (const Line& line : lines) {
    const auto& toks = line.tokens;
    const std::string& kw = toks[0];
    try {
      if (kw == "clock") {
        if (section > 0)
          throw ParseError(line.no, "clock declarations must precede state declarations");
        if (toks.size() < 2) throw ParseError(line.no, "clock declaration needs a name");
        for (size_t i = 1; i < toks.size(); ++i) a.add_clock(toks[i]);
      } else if (kw == "state") {
        if (section > 1)
          throw ParseError(line.no, "state declarations must precede transitions");
        section = 1;
        if (toks.size() < 2) throw ParseError(line.no, "state declaration needs a name");
        bool init = false, accepting = false;
        for (size_t i = 2; i < toks.size(); ++i) {
          if (toks[i] == "init") init = true;
          else if (toks[i] == "accepting") accepting = true;
          else throw ParseError(line.no, "unknown state flag '" + toks[i] + "'");
        }
        unsigned s = a.add_state(toks[1], accepting);
        if (init) {
          if (++init_count > 1) throw ParseError(line.no, "multiple initial states");
          a.set_init(s);
        }
      } else if (kw == "trans") {
        section = 2;
        if (toks.size() < 4 || toks[2] != "->")
          throw ParseError(line.no, "transition syntax is: trans <src> -> <dst> ...");
        auto src = a.state_index(toks[1]);
        if (!src) throw ParseError(line.no, "unknown state " + toks[1]);
        auto dst = a.state_index(toks[3]);
        if (!dst) throw ParseError(line.no, "unknown state " + toks[3]);
        Transition t;
        t.src = *src;
        t.dst = *dst;
        size_t i = 4;
        while (i < toks.size()) {
          if (toks[i] == "sync") {
            if (t.label) throw ParseError(line.no, "duplicate sync clause");
            if (++i >= toks.size()) throw ParseError(line.no, "sync needs a label");
            t.label = toks[i++];
          } else if (toks[i] == "guard") {
            if (!t.guard.empty()) throw ParseError(line.no, "duplicate guard clause");
            ++i;
            while (true) {
              if (i >= toks.size()) throw ParseError(line.no, "guard needs an atom");
              t.guard.push_back(parse_atom(a, toks[i++], line.no));
              if (i < toks.size() && toks[i] == "&") ++i;
              else break;
            }
          } else if (toks[i] == "reset") {
            if (t.reset.any()) throw ParseError(line.no, "duplicate reset clause");
            ++i;
            size_t start = i;
            while (i < toks.size() && toks[i] != "sync" && toks[i] != "guard") {
              auto clock = a.clock_index(toks[i]);
              if (!clock) throw ParseError(line.no, "unknown clock " + toks[i]);
              t.reset.add(*clock);
              ++i;
            }
            if (i == start) throw ParseError(line.no, "reset needs a clock");
          } else {
            throw ParseError(line.no, "unexpected token '" + toks[i] + "' in transition");
          }
        }
        a.add_transition(std::move(t));
      } else {
        throw ParseError(line.no, "unexpected keyword '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line.no, e.what());
    }
  }
  if (a.state_count() == 0) throw ParseError(0, "no states declared");
  if (init_count == 0) throw ParseError(0, "no initial state");
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  return path.substr(0, slash);
}

Tba parse_network(const std::vector<Line>& lines, const std::string& base_dir) {
  std::vector<Tba> processes;
  std::optional<unsigned> accepting_component;
  size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const auto& toks = line.tokens;
    if (toks[0] == "system") {
      if (toks.size() != 2) throw ParseError(line.no, "system needs a name");
      ++i;
    } else if (toks[0] == "process") {
      if (toks.size() != 2) throw ParseError(line.no, "process needs a path or '{'");
      if (toks[1] == "{") {
        size_t start = ++i;
        while (i < lines.size() && lines[i].tokens != std::vector<std::string>{"}"}) ++i;
        if (i == lines.size()) throw ParseError(line.no, "unterminated process block");
        processes.push_back(
            parse_tba_lines({lines.begin() + start, lines.begin() + i}));
        ++i;  // skip '}'
      } else {
        std::string path = toks[1];
        if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
        processes.push_back(parse_tba_lines(tokenize(read_file(path))));
        ++i;
      }
    } else if (toks[0] == "accepting-component") {
      if (toks.size() != 2) throw ParseError(line.no, "accepting-component needs an index");
      try {
        accepting_component = std::stoul(toks[1]);
      } catch (const std::exception&) {
        throw ParseError(line.no, "bad accepting-component index '" + toks[1] + "'");
      }
      ++i;
    } else {
      throw ParseError(line.no, "unexpected keyword '" + toks[0] + "' in system file");
    }
  }
  if (processes.empty()) throw ParseError(0, "system declares no processes");
  if (!accepting_component) throw ParseError(0, "system needs an accepting-component");
  if (*accepting_component >= processes.size())
    throw ParseError(0, "accepting-component index out of range");
  return product(processes, *accepting_component);
}

}  // namespace

Tba parse_tba(const std::string& text) {
  auto lines = tokenize(text);
  if (!lines.empty() && lines[0].tokens[0] == "system") return parse_network(lines, ".");
  return parse_tba_lines(lines);
}

Tba parse_model_file(const std::string& path) {
  auto lines = tokenize(read_file(path));
  if (!lines.empty() && lines[0].tokens[0] == "system")
    return parse_network(lines, dirname_of(path));
  return parse_tba_lines(lines);
}

std::string render_tba(const Tba& a) {
  std::ostringstream out;
  if (a.clock_count() > 0) {
    out << "clock";
    for (ClockId c = 1; c <= a.clock_count(); ++c) out << ' ' << a.clock_name(c);
    out << '\n';
  }
  for (unsigned s = 0; s < a.state_count(); ++s) {
    out << "state " << a.state_name(s);
    if (a.has_init() && a.init() == s) out << " init";
    if (a.accepting(s)) out << " accepting";
    out << '\n';
  }
  for (const Transition& t : a.transitions()) {
    out << "trans " << a.state_name(t.src) << " -> " << a.state_name(t.dst);
    if (t.label) out << " sync " << *t.label;
    if (!t.guard.empty()) {
      out << " guard";
      for (size_t i = 0; i < t.guard.size(); ++i) {
        if (i) out << " &";
        out << ' ' << a.clock_name(t.guard[i].clock) << rel_text(t.guard[i].rel)
            << t.guard[i].constant;
      }
    }
    if (t.reset.any()) {
      out << " reset";
      t.reset.for_each([&](ClockId c) { out << ' ' << a.clock_name(c); });
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tbuchi
