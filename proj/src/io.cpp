#include "grpd/io.hpp"

#include <fstream>
#include <sstream>

namespace grpd {

namespace {

std::vector<std::string> split_lines(const std::string &text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Sequential reader over the lines, skipping blanks.
struct Cursor {
  const std::vector<std::string> &lines;
  size_t pos = 0;

  bool next(std::string &out) {
    while (pos < lines.size()) {
      const std::string &line = lines[pos++];
      if (line.find_first_not_of(" \t") == std::string::npos)
        continue;
      out = line;
      return true;
    }
    return false;
  }

  std::string require(const char *what) {
    std::string line;
    if (!next(line))
      throw Error(ErrorKind::ParseError,
                  std::string("unexpected end of input, expected ") + what);
    return line;
  }
};

std::vector<int> parse_row(const std::string &line, int count,
                           const char *what) {
  std::istringstream in(line);
  std::vector<int> row;
  int v;
  while (in >> v)
    row.push_back(v);
  if (!in.eof()) {
    std::string rest;
    in.clear();
    in >> rest;
    throw Error(ErrorKind::ParseError, std::string("bad token '") + rest +
                                           "' in " + what + " row");
  }
  if (static_cast<int>(row.size()) != count)
    throw Error(ErrorKind::ParseError,
                std::string(what) + " row has " + std::to_string(row.size()) +
                    " entries, expected " + std::to_string(count));
  return row;
}

void append_row(std::string &out, const std::vector<int> &row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(row[i]);
  }
  out += '\n';
}

bool starts_with(const std::string &line, const char *prefix) {
  return line.rfind(prefix, 0) == 0;
}

std::string strip_prefix(const std::string &line, size_t n) {
  size_t start = line.find_first_not_of(" \t", n);
  return start == std::string::npos ? std::string() : line.substr(start);
}

GroupPtr parse_group_block(Cursor &cur) {
  std::string head = cur.require("'order n'");
  std::istringstream in(head);
  std::string keyword;
  int n = 0;
  in >> keyword >> n;
  if (keyword != "order" || in.fail() || n < 1)
    throw Error(ErrorKind::ParseError, "expected 'order n', got '" + head +
                                           "'");
  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    auto row = parse_row(cur.require("table row"), n, "table");
    table.insert(table.end(), row.begin(), row.end());
  }
  std::string name;
  std::string line;
  size_t mark = cur.pos;
  if (cur.next(line)) {
    if (starts_with(line, "name")) {
      name = strip_prefix(line, 4);
    } else {
      cur.pos = mark; // not ours; leave it for the caller
    }
  }
  return FiniteGroup::make(n, std::move(table), std::move(name));
}

std::vector<int> parse_tagged_row(Cursor &cur, const char *tag, int count) {
  std::string line = cur.require(tag);
  if (!starts_with(line, tag))
    throw Error(ErrorKind::ParseError, std::string("expected '") + tag +
                                           "' line, got '" + line + "'");
  return parse_row(strip_prefix(line, std::string(tag).size()), count, tag);
}

void require_end(Cursor &cur) {
  std::string line;
  if (cur.next(line))
    throw Error(ErrorKind::ParseError, "trailing content: '" + line + "'");
}

void append_group(std::string &out, const GroupPtr &g) {
  out += "order " + std::to_string(g->order()) + '\n';
  const int n = g->order();
  std::vector<int> row(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      row[static_cast<size_t>(b)] = g->mul(a, b);
    append_row(out, row);
  }
  if (!g->name().empty())
    out += "name " + g->name() + '\n';
}

} // namespace

std::string group_to_text(const GroupPtr &g) {
  std::string out;
  append_group(out, g);
  return out;
}

GroupPtr group_from_text(const std::string &text) {
  auto lines = split_lines(text);
  Cursor cur{lines};
  GroupPtr g = parse_group_block(cur);
  require_end(cur);
  return g;
}

std::string rgraph_to_text(const ReflexiveGraph &g) {
  std::string out;
  append_group(out, g.carrier());
  out += "s:";
  for (int x = 0; x < g.carrier()->order(); ++x)
    out += ' ' + std::to_string(g.s()(x));
  out += "\nt:";
  for (int x = 0; x < g.carrier()->order(); ++x)
    out += ' ' + std::to_string(g.t()(x));
  out += '\n';
  return out;
}

ReflexiveGraph rgraph_from_text(const std::string &text) {
  auto lines = split_lines(text);
  Cursor cur{lines};
  GroupPtr g = parse_group_block(cur);
  auto smap = parse_tagged_row(cur, "s:", g->order());
  auto tmap = parse_tagged_row(cur, "t:", g->order());
  require_end(cur);
  return ReflexiveGraph::make(GroupHom::make(g, g, std::move(smap)),
                              GroupHom::make(g, g, std::move(tmap)));
}

std::string xmod_to_text(const CrossedModule &m) {
  std::string out;
  append_group(out, m.t_group());
  append_group(out, m.g_group());
  out += "d:";
  for (int tau = 0; tau < m.t_group()->order(); ++tau)
    out += ' ' + std::to_string(m.boundary()(tau));
  out += '\n';
  std::vector<int> row(static_cast<size_t>(m.t_group()->order()));
  for (int a = 0; a < m.g_group()->order(); ++a) {
    for (int tau = 0; tau < m.t_group()->order(); ++tau)
      row[static_cast<size_t>(tau)] = m.action().apply(a, tau);
    append_row(out, row);
  }
  return out;
}

CrossedModule xmod_from_text(const std::string &text) {
  auto lines = split_lines(text);
  Cursor cur{lines};
  GroupPtr t = parse_group_block(cur);
  GroupPtr g = parse_group_block(cur);
  auto dmap = parse_tagged_row(cur, "d:", t->order());
  std::vector<std::vector<int>> perms;
  perms.reserve(static_cast<size_t>(g->order()));
  for (int a = 0; a < g->order(); ++a)
    perms.push_back(parse_row(cur.require("action row"), t->order(),
                              "action"));
  require_end(cur);
  return CrossedModule::make(GroupHom::make(t, g, std::move(dmap)),
                             Action::make(g, t, std::move(perms)));
}

std::string classifier_to_text(const ReflexiveGraph &base, const Action &act) {
  std::string out = rgraph_to_text(base);
  for (int b = 0; b < base.carrier()->order(); ++b) {
    out += "a:";
    for (int x = 0; x < act.target()->order(); ++x)
      out += ' ' + std::to_string(act.apply(b, x));
    out += '\n';
  }
  return out;
}

FileKind detect_kind(const std::string &text) {
  for (const auto &line : split_lines(text)) {
    if (starts_with(line, "d:"))
      return FileKind::Xmod;
  }
  for (const auto &line : split_lines(text)) {
    if (starts_with(line, "s:"))
      return FileKind::RGraph;
  }
  return FileKind::Group;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::BadInput, "cannot write " + path);
  out << text;
}

} // namespace grpd
