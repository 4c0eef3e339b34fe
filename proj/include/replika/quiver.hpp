#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace replika {

struct Arrow {
  std::string label;
  int source = 0;  // 0-based
  int target = 0;
};

// A path in the quiver, composed left to right: "ab" is a followed by b.
// An empty arrow list is the trivial path e_source.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

class Quiver {
 public:
  // Throws CyclicQuiver on an oriented cycle, InvalidArgument on bad input.
  Quiver(std::string name, int vertex_count, std::vector<Arrow> arrows);

  const std::string& name() const { return name_; }
  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Positive definite Tits form, i.e. every connected component is ADE.
  bool is_dynkin() const;

  std::string path_name(const Path& p) const;

  // Linear orientation 1 -> 2 -> ... -> n with arrows a1, a2, ...
  static Quiver linear_a(int n);
  // D_4 with all arrows pointing into the branch vertex 1.
  static Quiver d4();
  static Quiver kronecker();

 private:
  std::string name_;
  int n_;
  std::vector<Arrow> arrows_;
};

// Every path including the trivial ones, in a fixed deterministic order:
// grouped by source vertex, then by length, then lexicographically.
std::vector<Path> enumerate_paths(const Quiver& q);

// Quiver file format: `quiver <name>`, `vertices <n>`, `arrow <label> <src> <tgt>`
// with 1-based vertices. Blank lines and `#` comments are ignored.
Quiver parse_quiver(std::istream& in);
Quiver parse_quiver_file(const std::string& path);
std::string format_quiver(const Quiver& q);

}  // namespace replika
