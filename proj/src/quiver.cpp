#include "replika/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "replika/errors.hpp"

namespace replika {

Quiver::Quiver(std::string name, int vertex_count, std::vector<Arrow> arrows)
    : name_(std::move(name)), n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ <= 0) throw InvalidArgument("quiver needs at least one vertex");
  std::set<std::string> labels;
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
      throw InvalidArgument("arrow " + a.label + " has an endpoint out of range");
    if (!labels.insert(a.label).second) throw InvalidArgument("duplicate arrow label " + a.label);
  }
  // Kahn's algorithm; leftover vertices sit on a cycle.
  std::vector<int> indeg(n_, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<int> stack;
  for (int v = 0; v < n_; ++v)
    if (!indeg[v]) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  if (seen != n_) throw CyclicQuiver("quiver " + name_ + " has an oriented cycle");
}

bool Quiver::is_dynkin() const {
  // Symmetrised Tits form 2I - (adjacency + adjacency^T); Sylvester's criterion
  // via fraction-free (Bareiss) elimination on leading minors.
  std::vector<std::vector<long long>> b(n_, std::vector<long long>(n_, 0));
  for (int i = 0; i < n_; ++i) b[i][i] = 2;
  for (const auto& a : arrows_) {
    b[a.source][a.target] -= 1;
    b[a.target][a.source] -= 1;
  }
  long long prev = 1;
  for (int k = 0; k < n_; ++k) {
    if (b[k][k] <= 0) return false;
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j) b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
    prev = b[k][k];
  }
  return true;
}

std::string Quiver::path_name(const Path& p) const {
  if (p.is_trivial()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (int a : p.arrows) s += arrows_[a].label;
  return s;
}

Quiver Quiver::linear_a(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({std::string(1, static_cast<char>('a' + i)), i, i + 1});
  return Quiver("A" + std::to_string(n), n, std::move(arrows));
}

Quiver Quiver::d4() { return Quiver("D4", 4, {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}}); }

Quiver Quiver::kronecker() { return Quiver("K2", 2, {{"a", 0, 1}, {"b", 0, 1}}); }

std::vector<Path> enumerate_paths(const Quiver& q) {
  std::vector<Path> out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<Path> frontier{Path{v, v, {}}};
    while (!frontier.empty()) {
      std::sort(frontier.begin(), frontier.end());
      out.insert(out.end(), frontier.begin(), frontier.end());
      std::vector<Path> next;
      for (const auto& p : frontier)
        for (int a = 0; a < static_cast<int>(q.arrows().size()); ++a)
          if (q.arrows()[a].source == p.target) {
            Path e = p;
            e.arrows.push_back(a);
            e.target = q.arrows()[a].target;
            next.push_back(std::move(e));
          }
      frontier = std::move(next);
    }
  }
  return out;
}

Quiver parse_quiver(std::istream& in) {
  std::string name;
  int n = -1;
  std::vector<Arrow> arrows;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string extra;
    if (kw == "quiver") {
      if (have_header) throw ParseError(lineno, "duplicate quiver line");
      if (!(ls >> name)) throw ParseError(lineno, "expected `quiver <name>`");
      have_header = true;
    } else if (kw == "vertices") {
      if (!have_header) throw ParseError(lineno, "expected `quiver <name>` first");
      if (n >= 0) throw ParseError(lineno, "duplicate vertices line");
      if (!(ls >> n) || n <= 0) throw ParseError(lineno, "expected `vertices <positive int>`");
    } else if (kw == "arrow") {
      if (n < 0) throw ParseError(lineno, "arrow before `vertices` line");
      Arrow a;
      int s = 0, t = 0;
      if (!(ls >> a.label >> s >> t)) throw ParseError(lineno, "expected `arrow <label> <src> <tgt>`");
      if (s < 1 || s > n || t < 1 || t > n) throw ParseError(lineno, "arrow endpoint out of range 1.." + std::to_string(n));
      for (const auto& b : arrows)
        if (b.label == a.label) throw ParseError(lineno, "duplicate arrow label " + a.label);
      a.source = s - 1;
      a.target = t - 1;
      arrows.push_back(std::move(a));
    } else {
      throw ParseError(lineno, "unknown keyword `" + kw + "`");
    }
    if (ls >> extra) throw ParseError(lineno, "trailing token `" + extra + "`");
  }
  if (!have_header) throw ParseError(lineno, "missing `quiver` line");
  if (n < 0) throw ParseError(lineno, "missing `vertices` line");
  return Quiver(name, n, std::move(arrows));
}

Quiver parse_quiver_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open quiver file " + path);
  return parse_quiver(f);
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream os;
  os << "quiver " << q.name() << "\nvertices " << q.vertex_count() << "\n";
  for (const auto& a : q.arrows()) os << "arrow " << a.label << " " << a.source + 1 << " " << a.target + 1 << "\n";
  return os.str();
}

}  // namespace replika
