#include "replika/approximation.hpp"

#include <algorithm>
#include <map>

#include "replika/errors.hpp"
#include "replika/homology.hpp"

namespace replika {

namespace {

struct Component {
  int part;
  ModMorphism map;
};

bool in_span(const std::vector<Row>& rows, const Row& x, Prime p) {
  if (rows.empty()) return std::all_of(x.begin(), x.end(), [](Entry e) { return e == 0; });
  const int width = static_cast<int>(x.size());
  FpMatrix a = FpMatrix::from_rows(p, rows, width);
  return solve_linear(a, x).has_value();
}

// left: components X -> T_j; right: components T_j -> X.
std::vector<Component> minimalize(std::vector<Component> comps, const std::vector<FDModule>& t, bool left) {
  std::map<std::pair<int, int>, std::vector<ModMorphism>> homs;
  auto between = [&](int a, int b) -> const std::vector<ModMorphism>& {
    auto key = std::make_pair(a, b);
    auto it = homs.find(key);
    if (it == homs.end()) it = homs.emplace(key, hom_basis(t[a], t[b])).first;
    return it->second;
  };
  std::vector<char> alive(comps.size(), 1);
  for (int i = static_cast<int>(comps.size()) - 1; i >= 0; --i) {
    std::vector<Row> rows;
    const int j = comps[i].part;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (static_cast<int>(k) == i || !alive[k]) continue;
      if (left) {
        for (const auto& g : between(comps[k].part, j)) rows.push_back(compose(comps[k].map, g).flatten());
      } else {
        for (const auto& g : between(j, comps[k].part)) rows.push_back(compose(g, comps[k].map).flatten());
      }
    }
    if (in_span(rows, comps[i].map.flatten(), comps[i].map.source().prime())) alive[i] = 0;
  }
  std::vector<Component> out;
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (alive[k]) out.push_back(std::move(comps[k]));
  return out;
}

Approximation assemble_approx(const FDModule& x, const std::vector<Component>& comps, const std::vector<FDModule>& t,
                              bool left) {
  std::vector<FDModule> parts;
  std::vector<int> idx;
  std::vector<ModMorphism> maps;
  for (const auto& c : comps) {
    parts.push_back(t[c.part]);
    idx.push_back(c.part);
    maps.push_back(c.map);
  }
  DirectSum object = direct_sum(x.algebra(), parts);
  if (maps.empty()) {
    ModMorphism zero = left ? ModMorphism(x, object.module) : ModMorphism(object.module, x);
    return {std::move(object), std::move(idx), std::move(zero)};
  }
  ModMorphism map = left ? pair(maps, object) : copair(object, maps);
  return {std::move(object), std::move(idx), std::move(map)};
}

}  // namespace

Approximation minimal_left_approx(const FDModule& x, const std::vector<FDModule>& t) {
  std::vector<Component> comps;
  for (int j = 0; j < static_cast<int>(t.size()); ++j) {
    require_same_algebra(x, t[j]);
    for (auto& h : hom_basis(x, t[j])) comps.push_back({j, std::move(h)});
  }
  return assemble_approx(x, minimalize(std::move(comps), t, true), t, true);
}

Approximation minimal_right_approx(const FDModule& x, const std::vector<FDModule>& t) {
  std::vector<Component> comps;
  for (int j = 0; j < static_cast<int>(t.size()); ++j) {
    require_same_algebra(x, t[j]);
    for (auto& h : hom_basis(t[j], x)) comps.push_back({j, std::move(h)});
  }
  return assemble_approx(x, minimalize(std::move(comps), t, false), t, false);
}

bool is_faithful(const FDModule& m) {
  const auto& alg = *m.algebra();
  std::map<std::pair<int, int>, std::vector<Row>> blocks;
  for (int b = 0; b < alg.dim(); ++b) {
    const auto& e = alg.element(b);
    const auto& blk = m.block(b);
    blocks[{e.source, e.target}].push_back(Row(blk.entries().begin(), blk.entries().end()));
  }
  for (const auto& [key, rows] : blocks) {
    const int width = static_cast<int>(rows.front().size());
    if (width == 0) return false;
    if (rank(FpMatrix::from_rows(m.prime(), rows, width)) != static_cast<int>(rows.size())) return false;
  }
  return true;
}

bool in_gen(const std::vector<FDModule>& t, const FDModule& x) { return minimal_right_approx(x, t).map.is_surjective(); }

bool in_cogen(const std::vector<FDModule>& t, const FDModule& x) { return minimal_left_approx(x, t).map.is_injective(); }

}  // namespace replika
