#include "bmg/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace bmg {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

EdgeList parse_edge_list(std::string_view text) {
  Cursor in(text);
  EdgeList list;
  in.expect('<');
  list.n = in.integer();
  if (list.n < 0) in.fail("negative vertex count");
  in.expect('|');
  if (!in.peek('>')) {
    do {
      in.expect('[');
      Edge e;
      e.tail = in.integer();
      in.expect(',');
      e.head = in.integer();
      in.expect(']');
      list.edges.push_back(e);
      if (!in.peek(',')) break;
      in.expect(',');
    } while (true);
  }
  in.expect('>');
  if (!in.at_end()) in.fail("trailing characters");
  return list;
}

std::string format_edge_list(const EdgeList& list) {
  std::string s = "<" + std::to_string(list.n) + "|";
  for (std::size_t k = 0; k < list.edges.size(); ++k) {
    if (k) s += ',';
    s += "[" + std::to_string(list.edges[k].tail) + "," + std::to_string(list.edges[k].head) + "]";
  }
  return s + ">";
}

VertexSet parse_colors(std::string_view text, int n) {
  text = trim(text);
  if (text.starts_with("colors:")) text.remove_prefix(7);
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("colour sidecar needs a '|' between the two classes");
  if (n < 0 || n > ColoredDigraph::kMaxOrder) throw InvalidArgument("vertex count out of range");

  auto read_class = [n](std::string_view part) {
    VertexSet s;
    std::istringstream is{std::string(part)};
    std::string tok;
    while (is >> tok) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("bad vertex '" + tok + "' in colour sidecar");
      }
      if (v < 1 || v > n) throw InvalidArgument("colour sidecar vertex " + tok + " outside 1.." + std::to_string(n));
      if (s.contains(v)) throw InvalidArgument("vertex " + tok + " listed twice in colour sidecar");
      s.insert(v);
    }
    return s;
  };
  VertexSet first = read_class(text.substr(0, bar));
  VertexSet second = read_class(text.substr(bar + 1));
  if (first.intersects(second)) throw InvalidArgument("colour classes overlap");
  if ((first | second) != VertexSet::range(1, n)) throw InvalidArgument("colour classes do not cover 1..n");
  return second;
}

ColoredDigraph parse_graph(std::string_view text, std::string_view colors) {
  EdgeList list = parse_edge_list(text);
  if (list.n > ColoredDigraph::kMaxOrder) throw InvalidArgument("vertex count out of range");
  return ColoredDigraph(list.n, parse_colors(colors, list.n), list.edges);
}

VertexSet infer_coloring(const EdgeList& list) {
  if (list.n < 0 || list.n > ColoredDigraph::kMaxOrder) throw InvalidArgument("vertex count out of range");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(list.n) + 1);
  for (const Edge& e : list.edges) {
    if (e.tail < 1 || e.tail > list.n || e.head < 1 || e.head > list.n) {
      throw InvalidArgument("edge vertex outside 1.." + std::to_string(list.n));
    }
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> side(static_cast<std::size_t>(list.n) + 1, -1);
  VertexSet second;
  if (list.n == 0) return second;
  side[1] = 0;
  std::vector<Vertex> stack{1};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj[u]) {
      if (side[v] == -1) {
        side[v] = 1 - side[u];
        if (side[v] == 1) second.insert(v);
        stack.push_back(v);
      } else if (side[v] == side[u]) {
        throw InvalidArgument("edges are not bipartite");
      }
    }
  }
  for (Vertex v = 1; v <= list.n; ++v) {
    if (side[v] == -1) throw InvalidArgument("colouring is ambiguous for a disconnected graph; give a colors: line");
  }
  return second;
}

std::string to_text(const ColoredDigraph& g) { return format_edge_list({g.order(), g.edges()}); }

std::string colors_to_text(const ColoredDigraph& g) {
  std::string s = "colors:";
  for (Vertex v : g.color_class(Color::kFirst)) s += " " + std::to_string(v);
  s += " |";
  for (Vertex v : g.color_class(Color::kSecond)) s += " " + std::to_string(v);
  return s;
}

nlohmann::json graph_to_json(const ColoredDigraph& g) {
  nlohmann::json colors = nlohmann::json::array();
  for (Vertex v = 1; v <= g.order(); ++v) colors.push_back(static_cast<int>(g.color(v)));
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
  return {{"n", g.order()}, {"colors", colors}, {"edges", edges}};
}

ColoredDigraph graph_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 0 || n > ColoredDigraph::kMaxOrder) throw InvalidArgument("vertex count out of range");
    const auto& colors = j.at("colors");
    if (!colors.is_array() || colors.size() != static_cast<std::size_t>(n)) {
      throw ParseError("\"colors\" must list one colour per vertex");
    }
    VertexSet second;
    for (int v = 1; v <= n; ++v) {
      int c = colors[static_cast<std::size_t>(v - 1)].get<int>();
      if (c != 0 && c != 1) throw ParseError("colours must be 0 or 1");
      if (c == 1) second.insert(v);
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [tail, head] pair");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return ColoredDigraph(n, second, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  }
}

ColoredDigraph read_graph_document(std::string_view content) {
  std::string_view body = trim(content);
  if (body.starts_with("{")) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(ex.what());
    }
    return graph_from_json(j);
  }
  std::string graph_text;
  std::string colors_text;
  std::istringstream lines{std::string(body)};
  std::string line;
  while (std::getline(lines, line)) {
    std::string_view l = trim(line);
    if (l.empty() || l.starts_with("#")) continue;
    if (l.starts_with("colors:")) {
      colors_text = std::string(l);
    } else {
      graph_text += std::string(l);
    }
  }
  if (graph_text.empty()) throw ParseError("no graph found in input");
  if (!colors_text.empty()) return parse_graph(graph_text, colors_text);
  EdgeList list = parse_edge_list(graph_text);
  return ColoredDigraph(list.n, infer_coloring(list), list.edges);
}

std::string to_dot(const ColoredDigraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    os << "  " << v << " [shape=" << (g.color(v) == Color::kFirst ? "circle" : "box") << "];\n";
  }
  for (const Edge& e : g.edges()) {
    bool symmetric = g.has_edge(e.head, e.tail);
    if (symmetric && e.tail > e.head) continue;
    os << "  " << e.tail << " -> " << e.head;
    if (symmetric) os << " [dir=both, style=bold, color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bmg
