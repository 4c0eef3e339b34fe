#include "replika/module.hpp"

#include <algorithm>
#include <numeric>

#include "replika/errors.hpp"

namespace replika {

namespace {

std::vector<int> prefix_offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size(), 0);
  for (std::size_t v = 1; v < dims.size(); ++v) off[v] = off[v - 1] + dims[v - 1];
  return off;
}

std::vector<FpMatrix> zero_blocks(const SCAlgebra& alg, const std::vector<int>& dims) {
  std::vector<FpMatrix> blocks;
  blocks.reserve(alg.dim());
  for (int b = 0; b < alg.dim(); ++b)
    blocks.emplace_back(alg.prime(), dims[alg.element(b).source], dims[alg.element(b).target]);
  return blocks;
}

}  // namespace

FDModule::FDModule(AlgebraPtr alg) {
  std::vector<int> dims(alg->vertex_count(), 0);
  auto blocks = zero_blocks(*alg, dims);
  auto d = std::make_shared<Data>();
  d->alg = std::move(alg);
  d->offsets = prefix_offsets(dims);
  d->dims = std::move(dims);
  d->blocks = std::move(blocks);
  data_ = std::move(d);
}

FDModule::FDModule(AlgebraPtr alg, std::vector<int> dims, std::vector<FpMatrix> blocks) {
  if (static_cast<int>(dims.size()) != alg->vertex_count())
    throw ShapeMismatch("dimension vector length does not match vertex count");
  if (static_cast<int>(blocks.size()) != alg->dim()) throw ShapeMismatch("one action block per basis element required");
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& e = alg->element(b);
    if (blocks[b].rows() != dims[e.source] || blocks[b].cols() != dims[e.target])
      throw ShapeMismatch("action block of " + alg->element_name(b) + " has wrong shape");
  }
  for (int v = 0; v < alg->vertex_count(); ++v) blocks[alg->idempotent(v)] = FpMatrix::identity(alg->prime(), dims[v]);
  auto d = std::make_shared<Data>();
  d->alg = std::move(alg);
  d->offsets = prefix_offsets(dims);
  d->total = std::accumulate(dims.begin(), dims.end(), 0);
  d->dims = std::move(dims);
  d->blocks = std::move(blocks);
  data_ = std::move(d);
}

FpMatrix FDModule::action(int b) const {
  const auto& e = algebra()->element(b);
  FpMatrix full(prime(), dim(), dim());
  full.paste(block(b), offset(e.source), offset(e.target));
  return full;
}

std::vector<int> FDModule::layer_support() const {
  std::vector<int> layers;
  for (int v = 0; v < algebra()->vertex_count(); ++v)
    if (dim_at(v) > 0) {
      int l = algebra()->vertex_layer(v);
      if (layers.empty() || layers.back() != l) layers.push_back(l);
    }
  return layers;
}

std::string FDModule::validate() const {
  const auto& alg = *algebra();
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (!(block(alg.idempotent(v)) == FpMatrix::identity(prime(), dim_at(v))))
      return "idempotent " + alg.vertex_name(v) + " does not act as identity";
  for (int x = 0; x < alg.dim(); ++x)
    for (int y = 0; y < alg.dim(); ++y) {
      if (alg.element(x).target != alg.element(y).source) continue;
      FpMatrix lhs = block(x) * block(y);
      auto t = alg.product(x, y);
      bool ok = t ? lhs == block(t->index).scaled(t->coefficient) : lhs.is_zero();
      if (!ok) return "action not multiplicative on " + alg.element_name(x) + " * " + alg.element_name(y);
    }
  return {};
}

void require_same_algebra(const FDModule& a, const FDModule& b) {
  if (a.algebra() != b.algebra())
    throw AlgebraMismatch("modules over different algebras: " + a.algebra()->id() + " vs " + b.algebra()->id());
}

ModMorphism::ModMorphism(FDModule source, FDModule target) : source_(std::move(source)), target_(std::move(target)) {
  require_same_algebra(source_, target_);
  for (int v = 0; v < source_.algebra()->vertex_count(); ++v)
    blocks_.emplace_back(source_.prime(), source_.dim_at(v), target_.dim_at(v));
}

ModMorphism::ModMorphism(FDModule source, FDModule target, std::vector<FpMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  require_same_algebra(source_, target_);
  if (static_cast<int>(blocks_.size()) != source_.algebra()->vertex_count())
    throw ShapeMismatch("morphism needs one block per vertex");
  for (int v = 0; v < static_cast<int>(blocks_.size()); ++v)
    if (blocks_[v].rows() != source_.dim_at(v) || blocks_[v].cols() != target_.dim_at(v))
      throw ShapeMismatch("morphism block has wrong shape");
}

ModMorphism ModMorphism::identity(const FDModule& m) {
  std::vector<FpMatrix> blocks;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v) blocks.push_back(FpMatrix::identity(m.prime(), m.dim_at(v)));
  return ModMorphism(m, m, std::move(blocks));
}

FpMatrix ModMorphism::matrix() const {
  FpMatrix full(source_.prime(), source_.dim(), target_.dim());
  for (int v = 0; v < static_cast<int>(blocks_.size()); ++v) full.paste(blocks_[v], source_.offset(v), target_.offset(v));
  return full;
}

bool ModMorphism::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const FpMatrix& b) { return b.is_zero(); });
}

bool ModMorphism::is_injective() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const FpMatrix& b) { return rank(b) == b.rows(); });
}

bool ModMorphism::is_surjective() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const FpMatrix& b) { return rank(b) == b.cols(); });
}

bool ModMorphism::is_isomorphism() const { return source_.dims() == target_.dims() && is_injective(); }

bool ModMorphism::is_homomorphism() const {
  const auto& alg = *source_.algebra();
  for (int b = 0; b < alg.dim(); ++b) {
    const auto& e = alg.element(b);
    if (!(source_.block(b) * blocks_[e.target] == blocks_[e.source] * target_.block(b))) return false;
  }
  return true;
}

Row ModMorphism::flatten() const {
  Row out;
  for (const auto& b : blocks_) out.insert(out.end(), b.entries().begin(), b.entries().end());
  return out;
}

ModMorphism ModMorphism::operator+(const ModMorphism& o) const {
  std::vector<FpMatrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + o.blocks_[v]);
  return ModMorphism(source_, target_, std::move(blocks));
}

ModMorphism ModMorphism::scaled(Entry s) const {
  std::vector<FpMatrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
  return ModMorphism(source_, target_, std::move(blocks));
}

ModMorphism compose(const ModMorphism& f, const ModMorphism& g) {
  if (f.target().dims() != g.source().dims()) throw ShapeMismatch("composition of incompatible morphisms");
  std::vector<FpMatrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(f.block(v) * g.block(v));
  return ModMorphism(f.source(), g.target(), std::move(blocks));
}

Subobject submodule(const FDModule& m, const std::vector<FpMatrix>& spans) {
  const auto& alg = m.algebra();
  std::vector<RowEchelon> bases;
  std::vector<int> dims;
  for (int v = 0; v < alg->vertex_count(); ++v) {
    if (spans[v].cols() != m.dim_at(v)) throw ShapeMismatch("span has wrong width");
    bases.push_back(row_space(spans[v]));
    dims.push_back(bases.back().rank());
  }
  std::vector<FpMatrix> blocks;
  blocks.reserve(alg->dim());
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& e = alg->element(b);
    FpMatrix images = bases[e.source].reduced * m.block(b);
    FpMatrix coords = images.select_cols(bases[e.target].pivots);
    if (!(coords * bases[e.target].reduced == images))
      throw InternalError("submodule span is not invariant under " + alg->element_name(b));
    blocks.push_back(std::move(coords));
  }
  FDModule sub(alg, dims, std::move(blocks));
  std::vector<FpMatrix> inc;
  for (auto& e : bases) inc.push_back(std::move(e.reduced));
  ModMorphism inclusion(sub, m, std::move(inc));
  return {std::move(sub), std::move(inclusion)};
}

Quotient quotient(const FDModule& m, const std::vector<FpMatrix>& spans) {
  const auto& alg = m.algebra();
  const Prime p = m.prime();
  std::vector<std::vector<int>> kept;
  std::vector<FpMatrix> proj;
  std::vector<int> dims;
  for (int v = 0; v < alg->vertex_count(); ++v) {
    if (spans[v].cols() != m.dim_at(v)) throw ShapeMismatch("span has wrong width");
    RowEchelon e = row_space(spans[v]);
    std::vector<char> pivot(m.dim_at(v), 0);
    for (int c : e.pivots) pivot[c] = 1;
    std::vector<int> free;
    for (int c = 0; c < m.dim_at(v); ++c)
      if (!pivot[c]) free.push_back(c);
    FpMatrix pi(p, m.dim_at(v), static_cast<int>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) pi(free[k], static_cast<int>(k)) = 1;
    for (int r = 0; r < e.rank(); ++r)
      for (std::size_t k = 0; k < free.size(); ++k) pi(e.pivots[r], static_cast<int>(k)) = p.neg(e.reduced(r, free[k]));
    dims.push_back(static_cast<int>(free.size()));
    kept.push_back(std::move(free));
    proj.push_back(std::move(pi));
  }
  std::vector<FpMatrix> blocks;
  blocks.reserve(alg->dim());
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& e = alg->element(b);
    blocks.push_back(m.block(b).select_rows(kept[e.source]) * proj[e.target]);
  }
  FDModule q(alg, dims, std::move(blocks));
  ModMorphism projection(m, q, std::move(proj));
  return {std::move(q), std::move(projection)};
}

Subobject kernel(const ModMorphism& f) {
  std::vector<FpMatrix> spans;
  for (const auto& b : f.blocks()) spans.push_back(kernel_basis(b));
  return submodule(f.source(), spans);
}

Quotient cokernel(const ModMorphism& f) { return quotient(f.target(), f.blocks()); }

Subobject image(const ModMorphism& f) { return submodule(f.target(), f.blocks()); }

int direct_sum_offset(const std::vector<FDModule>& parts, int k, int v) {
  int off = 0;
  for (int i = 0; i < k; ++i) off += parts[i].dim_at(v);
  return off;
}

DirectSum direct_sum(AlgebraPtr alg, const std::vector<FDModule>& parts) {
  const Prime p = alg->prime();
  const int nv = alg->vertex_count();
  for (const auto& part : parts)
    if (part.algebra() != alg) throw AlgebraMismatch("direct sum of modules over different algebras");
  std::vector<int> dims(nv, 0);
  for (const auto& part : parts)
    for (int v = 0; v < nv; ++v) dims[v] += part.dim_at(v);
  std::vector<FpMatrix> blocks = zero_blocks(*alg, dims);
  std::vector<std::vector<int>> offs(parts.size(), std::vector<int>(nv, 0));
  for (std::size_t k = 1; k < parts.size(); ++k)
    for (int v = 0; v < nv; ++v) offs[k][v] = offs[k - 1][v] + parts[k - 1].dim_at(v);
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& e = alg->element(b);
    for (std::size_t k = 0; k < parts.size(); ++k) blocks[b].paste(parts[k].block(b), offs[k][e.source], offs[k][e.target]);
  }
  FDModule sum(alg, dims, std::move(blocks));
  DirectSum out{sum, parts, {}, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<FpMatrix> inj, pr;
    for (int v = 0; v < nv; ++v) {
      FpMatrix i(p, parts[k].dim_at(v), dims[v]);
      for (int r = 0; r < parts[k].dim_at(v); ++r) i(r, offs[k][v] + r) = 1;
      pr.push_back(i.transpose());
      inj.push_back(std::move(i));
    }
    out.injections.emplace_back(parts[k], sum, std::move(inj));
    out.projections.emplace_back(sum, parts[k], std::move(pr));
  }
  return out;
}

ModMorphism assemble(const DirectSum& source, const DirectSum& target,
                     const std::vector<std::vector<std::optional<ModMorphism>>>& components) {
  const auto& alg = source.module.algebra();
  std::vector<FpMatrix> blocks;
  for (int v = 0; v < alg->vertex_count(); ++v) blocks.emplace_back(alg->prime(), source.module.dim_at(v), target.module.dim_at(v));
  for (std::size_t k = 0; k < components.size(); ++k)
    for (std::size_t l = 0; l < components[k].size(); ++l) {
      if (!components[k][l]) continue;
      for (int v = 0; v < alg->vertex_count(); ++v)
        blocks[v].paste(components[k][l]->block(v), direct_sum_offset(source.parts, static_cast<int>(k), v),
                        direct_sum_offset(target.parts, static_cast<int>(l), v));
    }
  return ModMorphism(source.module, target.module, std::move(blocks));
}

ModMorphism copair(const DirectSum& source, const std::vector<ModMorphism>& components) {
  if (components.size() != source.parts.size()) throw ShapeMismatch("one component per summand required");
  if (components.empty()) throw InvalidArgument("copair of an empty family needs a target");
  const FDModule& target = components.front().target();
  std::vector<FpMatrix> blocks;
  for (int v = 0; v < target.algebra()->vertex_count(); ++v) {
    FpMatrix b(target.prime(), 0, target.dim_at(v));
    for (const auto& c : components) b = FpMatrix::vstack(b, c.block(v));
    blocks.push_back(std::move(b));
  }
  return ModMorphism(source.module, target, std::move(blocks));
}

ModMorphism pair(const std::vector<ModMorphism>& components, const DirectSum& target) {
  if (components.size() != target.parts.size()) throw ShapeMismatch("one component per summand required");
  if (components.empty()) throw InvalidArgument("pair of an empty family needs a source");
  const FDModule& source = components.front().source();
  std::vector<FpMatrix> blocks;
  for (int v = 0; v < source.algebra()->vertex_count(); ++v) {
    FpMatrix b(source.prime(), source.dim_at(v), 0);
    for (const auto& c : components) b = FpMatrix::hstack(b, c.block(v));
    blocks.push_back(std::move(b));
  }
  return ModMorphism(source, target.module, std::move(blocks));
}

FDModule standard_module(const AlgebraPtr& alg, StandardKind kind, int vertex) {
  if (vertex < 0 || vertex >= alg->vertex_count()) throw InvalidArgument("vertex index out of range");
  const Prime p = alg->prime();
  const int nv = alg->vertex_count();
  if (kind == StandardKind::kSimple) {
    std::vector<int> dims(nv, 0);
    dims[vertex] = 1;
    return FDModule(alg, dims, zero_blocks(*alg, dims));
  }
  // local index of each basis element inside the vertex block it spans
  std::vector<int> local(alg->dim(), -1);
  std::vector<int> dims(nv, 0);
  if (kind == StandardKind::kProjective) {
    // e_v Lambda: basis elements with source v, living at their target.
    for (int b = 0; b < alg->dim(); ++b)
      if (alg->element(b).source == vertex) local[b] = dims[alg->element(b).target]++;
    auto blocks = zero_blocks(*alg, dims);
    for (int x = 0; x < alg->dim(); ++x) {
      if (local[x] < 0) continue;
      for (int c = 0; c < alg->dim(); ++c) {
        if (alg->element(c).source != alg->element(x).target) continue;
        if (auto t = alg->product(x, c)) blocks[c](local[x], local[t->index]) = p.add(blocks[c](local[x], local[t->index]), t->coefficient);
      }
    }
    return FDModule(alg, dims, std::move(blocks));
  }
  // D(Lambda e_v): dual basis phi_b for b with target v, living at source(b).
  for (int b = 0; b < alg->dim(); ++b)
    if (alg->element(b).target == vertex) local[b] = dims[alg->element(b).source]++;
  auto blocks = zero_blocks(*alg, dims);
  // (phi_b . a)(c) = phi_b(a c): entry [phi_b][phi_c] of a is the b-coefficient of a*c.
  for (int a = 0; a < alg->dim(); ++a)
    for (int c = 0; c < alg->dim(); ++c) {
      if (local[c] < 0) continue;
      if (auto t = alg->product(a, c); t && local[t->index] >= 0)
        blocks[a](local[t->index], local[c]) = p.add(blocks[a](local[t->index], local[c]), t->coefficient);
    }
  return FDModule(alg, dims, std::move(blocks));
}

FDModule regular_module(const AlgebraPtr& alg) {
  std::vector<FDModule> parts;
  for (int v = 0; v < alg->vertex_count(); ++v) parts.push_back(standard_module(alg, StandardKind::kProjective, v));
  return direct_sum(alg, parts).module;
}

FDModule relocate(const FDModule& m, const AlgebraPtr& target, int layer_offset) {
  const auto& src = *m.algebra();
  if (src.quiver().name() != target->quiver().name() || src.quiver_vertices() != target->quiver_vertices() ||
      src.path_basis().size() != target->path_basis().size() || !(src.prime() == target->prime()))
    throw AlgebraMismatch("relocation between algebras of different quivers or primes");
  const int n = src.quiver_vertices();
  std::vector<int> dims(target->vertex_count(), 0);
  for (int v = 0; v < src.vertex_count(); ++v) {
    if (!m.dim_at(v)) continue;
    int layer = src.vertex_layer(v) + layer_offset;
    if (layer < 0 || layer > target->level())
      throw BudgetExhausted("module support leaves layers 0.." + std::to_string(target->level()) + " of " + target->id());
    dims[layer * n + src.vertex_in_quiver(v)] = m.dim_at(v);
  }
  std::vector<FpMatrix> blocks = zero_blocks(*target, dims);
  for (int b = 0; b < target->dim(); ++b) {
    const auto& e = target->element(b);
    if (auto s = src.find(e.kind, e.path, e.layer - layer_offset)) blocks[b] = m.block(*s);
  }
  return FDModule(target, std::move(dims), std::move(blocks));
}

FDModule conjugate(const FDModule& m, const std::vector<FpMatrix>& basis_change) {
  const auto& alg = *m.algebra();
  std::vector<FpMatrix> inv;
  for (const auto& b : basis_change) {
    auto i = inverse(b);
    if (!i) throw InvalidArgument("basis change is not invertible");
    inv.push_back(*i);
  }
  std::vector<FpMatrix> blocks;
  for (int b = 0; b < alg.dim(); ++b) {
    const auto& e = alg.element(b);
    blocks.push_back(basis_change[e.source] * m.block(b) * inv[e.target]);
  }
  return FDModule(m.algebra(), m.dims(), std::move(blocks));
}

namespace {

nlohmann::json matrix_json(const FpMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.rows(); ++i) rows.push_back(std::vector<Entry>(a.row(i).begin(), a.row(i).end()));
  return rows;
}

}  // namespace

nlohmann::json to_json(const FDModule& m) {
  nlohmann::json actions = nlohmann::json::array();
  for (int b = 0; b < m.algebra()->dim(); ++b) actions.push_back(matrix_json(m.action(b)));
  return {{"dim", m.dim()}, {"algebra", m.algebra()->id()}, {"dims", m.dims()}, {"actions", actions}};
}

FDModule module_from_json(const AlgebraPtr& alg, const nlohmann::json& j) {
  if (j.at("algebra").get<std::string>() != alg->id())
    throw AlgebraMismatch("module belongs to " + j.at("algebra").get<std::string>() + ", not " + alg->id());
  auto dims = j.at("dims").get<std::vector<int>>();
  const auto& actions = j.at("actions");
  if (static_cast<int>(dims.size()) != alg->vertex_count() || static_cast<int>(actions.size()) != alg->dim())
    throw ShapeMismatch("module JSON does not match algebra shape");
  auto off = prefix_offsets(dims);
  const int total = std::accumulate(dims.begin(), dims.end(), 0);
  std::vector<FpMatrix> blocks;
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& e = alg->element(b);
    auto full = actions[b].get<std::vector<std::vector<long long>>>();
    if (static_cast<int>(full.size()) != total) throw ShapeMismatch("action matrix has wrong size");
    FpMatrix blk(alg->prime(), dims[e.source], dims[e.target]);
    for (int r = 0; r < total; ++r) {
      if (static_cast<int>(full[r].size()) != total) throw ShapeMismatch("action matrix has wrong size");
      for (int c = 0; c < total; ++c) {
        Entry x = alg->prime().reduce(full[r][c]);
        bool inside = r >= off[e.source] && r < off[e.source] + dims[e.source] && c >= off[e.target] &&
                      c < off[e.target] + dims[e.target];
        if (inside)
          blk(r - off[e.source], c - off[e.target]) = x;
        else if (x)
          throw InvalidArgument("action matrix not adapted to vertex idempotents");
      }
    }
    blocks.push_back(std::move(blk));
  }
  return FDModule(alg, std::move(dims), std::move(blocks));
}

nlohmann::json to_json(const ModMorphism& f) {
  return {{"source_dim", f.source().dim()}, {"target_dim", f.target().dim()}, {"matrix", matrix_json(f.matrix())}};
}

ModMorphism morphism_from_json(const FDModule& source, const FDModule& target, const nlohmann::json& j) {
  require_same_algebra(source, target);
  if (j.at("source_dim").get<int>() != source.dim() || j.at("target_dim").get<int>() != target.dim())
    throw ShapeMismatch("morphism JSON does not match its modules");
  auto full = j.at("matrix").get<std::vector<std::vector<long long>>>();
  if (static_cast<int>(full.size()) != source.dim()) throw ShapeMismatch("morphism matrix has wrong size");
  const Prime p = source.prime();
  const int nv = source.algebra()->vertex_count();
  std::vector<FpMatrix> blocks;
  for (int v = 0; v < nv; ++v) blocks.emplace_back(p, source.dim_at(v), target.dim_at(v));
  for (int r = 0; r < source.dim(); ++r) {
    if (static_cast<int>(full[r].size()) != target.dim()) throw ShapeMismatch("morphism matrix has wrong size");
    int u = 0;
    while (r >= source.offset(u) + source.dim_at(u)) ++u;
    for (int c = 0; c < target.dim(); ++c) {
      Entry x = p.reduce(full[r][c]);
      if (c >= target.offset(u) && c < target.offset(u) + target.dim_at(u))
        blocks[u](r - source.offset(u), c - target.offset(u)) = x;
      else if (x)
        throw InvalidArgument("morphism matrix not adapted to vertex idempotents");
    }
  }
  return ModMorphism(source, target, std::move(blocks));
}

}  // namespace replika
