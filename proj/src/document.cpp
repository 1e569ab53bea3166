#include "siso/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "siso/errors.hpp"

namespace siso {

namespace {

struct Tok {
  std::string s;
  int line = 0, col = 0;
};

[[noreturn]] void bad(const Tok& t, const std::string& msg) {
  fail(Errc::parse_error, "line " + std::to_string(t.line) + ", col " +
                              std::to_string(t.col) + ": " + msg);
}

[[noreturn]] void bad_line(int line, const std::string& msg) {
  fail(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::vector<Tok>> tokenize(const std::string& text) {
  std::vector<std::vector<Tok>> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Tok> line;
    for (size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      line.push_back({raw.substr(i, j - i), lineno, static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.empty()) out.push_back(std::move(line));
  }
  return out;
}

Rational parse_rational(const Tok& t, const std::string& text) {
  bool slash = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '-' && i == 0) continue;
    if (c == '/' && !slash && i > 0 && i + 1 < text.size()) {
      slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      bad(t, "bad number '" + text + "'");
  }
  if (text.empty() || text == "-") bad(t, "bad number '" + text + "'");
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    bad(t, "bad number '" + text + "'");
  }
}

Scalar parse_scalar(const Tok& t, std::int64_t field_d) {
  const std::string& s = t.s;
  size_t star = s.find("*sqrt(");
  if (star == std::string::npos) {
    if (s.find("sqrt") != std::string::npos) bad(t, "bad scalar '" + s + "'");
    return Scalar(parse_rational(t, s));
  }
  if (s.empty() || s.back() != ')') bad(t, "bad scalar '" + s + "'");
  std::string dpart = s.substr(star + 6, s.size() - 1 - (star + 6));
  if (dpart.empty()) bad(t, "bad scalar '" + s + "'");
  for (char c : dpart)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      bad(t, "bad scalar '" + s + "'");
  std::int64_t d = std::stoll(dpart);
  if (d != field_d) bad(t, "'" + s + "' is outside the declared field");
  std::string prefix = s.substr(0, star);
  std::string a = "0", b = prefix;
  for (size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      a = prefix.substr(0, i);
      b = prefix.substr(i + (prefix[i] == '+' ? 1 : 0));
      break;
    }
  }
  return Scalar::quadratic(parse_rational(t, a), parse_rational(t, b), d);
}

Point parse_point(const Tok& t, const MetricTree& tree, std::int64_t field_d) {
  const std::string& s = t.s;
  if (s.size() >= 2 && s[0] == 'v') {
    std::string id = s.substr(1);
    for (char c : id)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        bad(t, "bad point '" + s + "'");
    int v = std::stoi(id);
    if (v >= tree.vertex_count()) bad(t, "vertex " + id + " does not exist");
    return Point::vertex(v);
  }
  size_t atp = s.find('@');
  if (s.size() < 4 || s[0] != 'e' || atp == std::string::npos)
    bad(t, "bad point '" + s + "'");
  std::string id = s.substr(1, atp - 1);
  for (char c : id)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      bad(t, "bad point '" + s + "'");
  int e = std::stoi(id);
  if (e >= tree.edge_count()) bad(t, "edge " + id + " does not exist");
  Tok off{s.substr(atp + 1), t.line, t.col + static_cast<int>(atp) + 1};
  Scalar x = parse_scalar(off, field_d);
  if (x.sign() < 0 || tree.edge(e).len < x)
    bad(t, "offset in '" + s + "' leaves the edge");
  return Point::interior(tree, e, x);
}

int parse_int(const Tok& t) {
  for (char c : t.s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      bad(t, "expected a count, got '" + t.s + "'");
  return std::stoi(t.s);
}

struct Parser {
  std::vector<std::vector<Tok>> lines;
  size_t at = 0;
  std::int64_t field_d = 0;

  bool done() const { return at >= lines.size(); }
  const std::vector<Tok>& peek() const { return lines[at]; }
  const std::vector<Tok>& next() { return lines[at++]; }

  void want_block_open(const std::vector<Tok>& ln) {
    if (ln.size() != 3 || ln[2].s != "{")
      bad_line(ln[0].line, "expected '" + ln[0].s + " <name> {'");
  }

  void parse_field() {
    if (done() || peek()[0].s != "field")
      bad_line(done() ? 1 : peek()[0].line, "document must open with a field line");
    const auto& ln = next();
    if (ln.size() == 2 && ln[1].s == "rational") {
      field_d = 0;
      return;
    }
    if (ln.size() == 3 && ln[1].s == "quadratic") {
      field_d = parse_int(ln[2]);
      (void)Scalar::quadratic(Rational(0), Rational(1), field_d);
      return;
    }
    bad_line(ln[0].line, "expected 'field rational' or 'field quadratic <d>'");
  }

  MetricTree parse_component(std::string& name) {
    const auto& open = next();
    want_block_open(open);
    name = open[1].s;
    int nv = -1;
    std::vector<TreeEdge> edges;
    while (true) {
      if (done()) bad_line(open[0].line, "unterminated component block");
      const auto& ln = next();
      if (ln.size() == 1 && ln[0].s == "}") break;
      if (ln[0].s == "vertices" && ln.size() == 2 && nv < 0) {
        nv = parse_int(ln[1]);
      } else if (ln[0].s == "edge" && ln.size() == 4 && nv >= 0) {
        edges.push_back(
            {parse_int(ln[1]), parse_int(ln[2]), parse_scalar(ln[3], field_d)});
      } else {
        bad(ln[0], "expected 'vertices', 'edge' or '}'");
      }
    }
    if (nv < 0) bad_line(open[0].line, "component without a vertices line");
    return MetricTree(nv, std::move(edges));
  }

  int component_id(const Tok& t, const Forest& f) {
    for (int c = 0; c < f.size(); ++c)
      if (f.names[c] == t.s) return c;
    bad(t, "unknown component '" + t.s + "'");
  }

  Subtree parse_region(const std::vector<Tok>& ln, const Forest& f) {
    if (ln.size() < 3) bad(ln[0], "expected '" + ln[0].s + " <component> <points>'");
    int c = component_id(ln[1], f);
    std::vector<Point> pts;
    for (size_t i = 2; i < ln.size(); ++i)
      pts.push_back(parse_point(ln[i], f.tree(c), field_d));
    return Subtree::hull(f.tree(c), c, pts);
  }

  Letter parse_letter(const Forest& f) {
    const auto& open = next();
    want_block_open(open);
    std::string name = open[1].s;
    std::optional<Subtree> dom, im;
    std::vector<AnchorPair> anchors;
    while (true) {
      if (done()) bad_line(open[0].line, "unterminated letter block");
      const auto& ln = next();
      if (ln.size() == 1 && ln[0].s == "}") break;
      if (ln[0].s == "domain" && !dom && !im) {
        dom = parse_region(ln, f);
      } else if (ln[0].s == "image" && dom && !im) {
        im = parse_region(ln, f);
      } else if (ln[0].s == "map" && dom && im) {
        if (ln.size() != 4 || ln[2].s != "->")
          bad(ln[0], "expected 'map <point> -> <point>'");
        anchors.push_back({parse_point(ln[1], f.tree(dom->component()), field_d),
                           parse_point(ln[3], f.tree(im->component()), field_d)});
      } else {
        bad(ln[0], "expected domain, image, map lines in that order");
      }
    }
    if (!dom || !im) bad_line(open[0].line, "letter needs a domain and an image");
    return {std::move(name),
            PartialIso(f, std::move(*dom), std::move(*im), std::move(anchors))};
  }

  IntervalExchange parse_iet() {
    const auto& open = next();
    if (open.size() != 2 || open[1].s != "{")
      bad_line(open[0].line, "expected 'iet {'");
    IntervalExchange e;
    while (true) {
      if (done()) bad_line(open[0].line, "unterminated iet block");
      const auto& ln = next();
      if (ln.size() == 1 && ln[0].s == "}") break;
      if (ln[0].s == "lengths" && ln.size() > 1 && e.lengths.empty()) {
        for (size_t i = 1; i < ln.size(); ++i)
          e.lengths.push_back(parse_scalar(ln[i], field_d));
      } else if (ln[0].s == "permutation" && ln.size() > 1 && e.perm.empty()) {
        for (size_t i = 1; i < ln.size(); ++i) {
          int p = parse_int(ln[i]);
          if (p < 1) bad(ln[i], "permutation entries are 1-based");
          e.perm.push_back(p - 1);
        }
      } else {
        bad(ln[0], "expected 'lengths', 'permutation' or '}'");
      }
    }
    e.validate();
    return e;
  }
};

void note_field(std::int64_t& d, const Scalar& s) {
  if (s.rad() != 0) d = s.rad();
}

void note_point(std::int64_t& d, const Point& p) {
  if (!p.is_vertex()) note_field(d, p.offset());
}

std::string field_line(std::int64_t d) {
  return d == 0 ? "field rational\n" : "field quadratic " + std::to_string(d) + "\n";
}

std::string region_str(const std::string& keyword, const Forest& f,
                       const Subtree& sub) {
  std::string out = "  " + keyword + " " + f.names[sub.component()];
  for (const Point& p : sub.generators()) out += " " + p.str();
  return out + "\n";
}

}  // namespace

Document parse_document(const std::string& text) {
  Parser ps;
  ps.lines = tokenize(text);
  ps.parse_field();

  int rank = 0;
  if (!ps.done() && ps.peek()[0].s == "rank") {
    const auto& ln = ps.next();
    if (ln.size() != 2) bad_line(ln[0].line, "expected 'rank <n>'");
    rank = parse_int(ln[1]);
  }

  Forest f;
  std::vector<Letter> letters;
  std::optional<IntervalExchange> iet;
  while (!ps.done()) {
    const std::string& head = ps.peek()[0].s;
    if (head == "component") {
      if (!letters.empty())
        bad(ps.peek()[0], "components must precede letters");
      if (iet) bad(ps.peek()[0], "a document holds components or an iet, not both");
      std::string name;
      MetricTree t = ps.parse_component(name);
      for (const std::string& other : f.names)
        if (other == name) bad_line(ps.lines[ps.at - 1][0].line,
                                    "duplicate component '" + name + "'");
      f.trees.push_back(std::move(t));
      f.names.push_back(name);
    } else if (head == "letter") {
      if (iet) bad(ps.peek()[0], "a document holds letters or an iet, not both");
      if (f.size() == 0) bad(ps.peek()[0], "letter before any component");
      letters.push_back(ps.parse_letter(f));
    } else if (head == "iet") {
      if (f.size() > 0 || iet)
        bad(ps.peek()[0], "a document holds one iet block and nothing else");
      iet = ps.parse_iet();
    } else {
      bad(ps.peek()[0], "expected 'component', 'letter' or 'iet'");
    }
  }

  Document d;
  if (iet) {
    if (rank > 0) bad_line(1, "rank does not apply to an iet document");
    d.iet = std::move(iet);
    return d;
  }
  if (f.size() == 0) bad_line(1, "empty document");
  d.system.emplace(std::move(f), std::move(letters), rank);
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string emit_system(const System& s) {
  std::int64_t d = 0;
  const Forest& f = s.forest();
  for (const MetricTree& t : f.trees)
    for (const TreeEdge& e : t.edges()) note_field(d, e.len);
  for (int i = 0; i < s.letter_count(); ++i) {
    const PartialIso& iso = s.letter(i).iso;
    for (const Point& p : iso.dom().generators()) note_point(d, p);
    for (const Point& p : iso.im().generators()) note_point(d, p);
    for (const AnchorPair& a : iso.anchors()) {
      note_point(d, a.src);
      note_point(d, a.dst);
    }
  }

  std::string out = field_line(d);
  if (s.rank_hint() > 0) out += "rank " + std::to_string(s.rank_hint()) + "\n";
  for (int c = 0; c < f.size(); ++c) {
    const MetricTree& t = f.tree(c);
    out += "component " + f.names[c] + " {\n";
    out += "  vertices " + std::to_string(t.vertex_count()) + "\n";
    for (const TreeEdge& e : t.edges())
      out += "  edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
             e.len.str() + "\n";
    out += "}\n";
  }
  for (int i = 0; i < s.letter_count(); ++i) {
    const Letter& l = s.letter(i);
    out += "letter " + l.name + " {\n";
    out += region_str("domain", f, l.iso.dom());
    out += region_str("image", f, l.iso.im());
    for (const AnchorPair& a : l.iso.anchors())
      out += "  map " + a.src.str() + " -> " + a.dst.str() + "\n";
    out += "}\n";
  }
  return out;
}

std::string emit_iet(const IntervalExchange& e) {
  std::int64_t d = 0;
  for (const Scalar& x : e.lengths) note_field(d, x);
  std::string out = field_line(d);
  out += "iet {\n  lengths";
  for (const Scalar& x : e.lengths) out += " " + x.str();
  out += "\n  permutation";
  for (int p : e.perm) out += " " + std::to_string(p + 1);
  return out + "\n}\n";
}

std::string emit_document(const Document& d) {
  if (d.system) return emit_system(*d.system);
  require(d.iet.has_value(), Errc::usage_error, "document holds nothing");
  return emit_iet(*d.iet);
}

void write_document(const std::string& path, const Document& d) {
  std::ofstream out(path);
  require(out.good(), Errc::io_error, "cannot write " + path);
  out << emit_document(d);
  require(out.good(), Errc::io_error, "cannot write " + path);
}

System document_system(const Document& d) {
  if (d.system) return *d.system;
  require(d.iet.has_value(), Errc::usage_error, "document holds nothing");
  return iet_to_system(*d.iet);
}

}  // namespace siso
