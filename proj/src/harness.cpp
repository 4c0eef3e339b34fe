#include "replika/harness.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "replika/cluster.hpp"
#include "replika/decompose.hpp"
#include "replika/errors.hpp"
#include "replika/parallel.hpp"
#include "replika/tilting.hpp"

namespace replika::harness {

namespace {

using nlohmann::json;

AlgebraPtr make_algebra(const Quiver& q, int m, std::uint32_t prime) {
  return SCAlgebra::replicated(q, m, Prime(prime));
}

void require_level(const RunConfig& cfg) {
  if (cfg.m < 1) throw UsageError(cfg.command + " needs --m >= 1");
}

json header(const RunConfig& cfg, const Quiver& q, std::uint32_t prime) {
  return {{"command", cfg.command}, {"quiver", q.name()}, {"m", cfg.m}, {"prime", prime}};
}

json entry_json(const Catalog& c, int i) {
  const auto& e = c[i];
  json j{{"index", i}, {"dims", e.module.dims()}, {"pd", e.pd}};
  if (e.projective_injective) j["projective_injective"] = true;
  else j["degree"] = e.degree;
  return j;
}

std::vector<FDModule> modules(const Catalog& c, const std::vector<int>& idx) {
  std::vector<FDModule> out;
  for (int i : idx) out.push_back(c[i].module);
  return out;
}

int max_pd(const Catalog& c, const std::vector<int>& idx) {
  int pd = 0;
  for (int i : idx) pd = std::max(pd, c[i].pd);
  return pd;
}

struct ChainData {
  std::vector<int> t;
  std::vector<int> xs;
  ComplementChain chain;
  int tpd = 0;
};

std::vector<ChainData> all_chains(const Catalog& c) {
  auto almost = faithful_almost_complete(c);
  std::vector<std::optional<ChainData>> slots(almost.size());
  parallel_for(static_cast<int>(almost.size()), [&](int k) {
    const auto& t = almost[k];
    auto bf = brute_force_complements(c, t);
    auto chain = complement_chain(modules(c, t), c[bf.front()].module, false);
    auto xs = chain_indices(c, chain);
    auto sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != bf) throw InternalError("chain walk and complement scan disagree");
    slots[k] = ChainData{t, xs, std::move(chain), max_pd(c, t)};
  });
  std::vector<ChainData> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

json instance_json(const Catalog& c, const ChainData& d) {
  auto full = d.t;
  full.push_back(d.xs.front());
  json dims = json::array();
  for (int x : d.xs) dims.push_back(c[x].module.dims());
  return {{"tilting_id", module_id(c, full)}, {"dropped", c[d.xs.front()].module.dims()}, {"complements", dims}};
}

FDModule random_module(const AlgebraPtr& alg, std::mt19937_64& rng) {
  auto pick = [&](int count) {
    std::vector<FDModule> parts;
    for (int i = 0; i < count; ++i)
      parts.push_back(standard_module(alg, StandardKind::kProjective, static_cast<int>(rng() % alg->vertex_count())));
    return direct_sum(alg, parts).module;
  };
  FDModule p0 = pick(1 + static_cast<int>(rng() % 2));
  FDModule p1 = pick(1 + static_cast<int>(rng() % 2));
  ModMorphism f(p1, p0);
  for (const auto& b : hom_basis(p1, p0)) f = f + b.scaled(static_cast<Entry>(rng() % alg->prime().value()));
  return cokernel(f).module;
}

// ---- verification suites ----

Outcome verify_thm34(const Catalog& c, json rep) {
  const int m = c.level();
  auto chains = all_chains(c);
  int fwd = 0, back_ext = 0, back_hom = 0, end_bad = 0;
  json failures = json::array();
  for (const auto& d : chains) {
    const int n = static_cast<int>(d.xs.size());
    json v = json::array();
    bool f = false, be = false, bh = false;
    for (int i = 0; i < n; ++i) {
      if (c.hom(d.xs[i], d.xs[i]) != 1) {
        ++end_bad;
        v.push_back("dim End(X_" + std::to_string(i) + ") != 1");
      }
      for (int j = 0; j < n; ++j)
        for (int s = 0; s <= 2 * m + 1; ++s) {
          const int got = c.ext(s, d.xs[j], d.xs[i]), want = i + s == j ? 1 : 0;
          if (got == want) continue;
          (j >= i ? f : s > 0 ? be : bh) = true;
          v.push_back("dim Ext^" + std::to_string(s) + "(X_" + std::to_string(j) + ", X_" + std::to_string(i) +
                      ") = " + std::to_string(got));
        }
    }
    fwd += f;
    back_ext += be;
    back_hom += bh;
    if (!v.empty()) failures.push_back({{"instance", instance_json(c, d)}, {"violations", v}});
  }
  rep["instances"] = chains.size();
  rep["summary"] = {{"chains_violating_j_ge_i", fwd},
                    {"chains_violating_j_lt_i_ext", back_ext},
                    {"chains_violating_j_lt_i_hom", back_hom},
                    {"end_not_k", end_bad}};
  rep["failures"] = failures;
  return {rep, failures.empty(), ""};
}

Outcome verify_lemma37(const Catalog& c, json rep) {
  auto chains = all_chains(c);
  std::map<int, int> lengths;
  int ladder_bad = 0, length_bad = 0;
  json failures = json::array();
  for (const auto& d : chains) {
    auto r = mutation_team_check(c, d.xs);
    ++lengths[d.chain.t()];
    ladder_bad += !r.ladder;
    length_bad += !r.length;
    if (!r.ladder || !r.length) {
      json v = json::array();
      for (const auto& s : r.violations)
        if (s.rfind("deg", 0) == 0 || s.rfind("t =", 0) == 0 || s.find("members of degree") != std::string::npos)
          v.push_back(s);
      failures.push_back({{"instance", instance_json(c, d)}, {"violations", v}});
    }
  }
  json dist = json::object();
  for (auto [t, k] : lengths) dist[std::to_string(t)] = k;
  rep["instances"] = chains.size();
  rep["summary"] = {{"t_distribution", dist}, {"degree_rule_failures", ladder_bad}, {"length_failures", length_bad}};
  rep["failures"] = failures;
  return {rep, failures.empty(), ""};
}

Outcome verify_cor38(const Catalog& c, json rep) {
  const int m = c.level();
  auto chains = all_chains(c);
  std::map<int, int> sizes;
  json failures = json::array();
  for (const auto& d : chains) {
    int l = -1;
    bool prefix = true;
    for (int i = 0; i < static_cast<int>(d.xs.size()); ++i)
      if (c.in_left_part(d.xs[i])) {
        if (i != l + 1) prefix = false;
        l = i;
      }
    ++sizes[l];
    if (!prefix || l < m - 1 || l > m)
      failures.push_back({{"instance", instance_json(c, d)}, {"l", l}, {"prefix", prefix}});
  }
  json dist = json::object();
  for (auto [l, k] : sizes) dist[std::to_string(l)] = k;
  rep["instances"] = chains.size();
  rep["summary"] = {{"l_distribution", dist}};
  rep["failures"] = failures;
  return {rep, failures.empty(), ""};
}

Outcome verify_thm39(const Catalog& c, const ClusterModel& cm, json rep) {
  const int m = c.level();
  auto chains = all_chains(c);
  json failures = json::array();
  int transfer_chains = 0, teams = 0, skipped = 0, witnessed = 0;
  for (const auto& d : chains) {
    if (d.tpd <= m) {
      ++transfer_chains;
      json v = json::array();
      for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j)
          for (int l = 1; l <= m; ++l) {
            const int a = c.ext(l, d.xs[j], d.xs[i]);
            const int b = cm.ext(l, *cm.pi(c, d.xs[j]), *cm.pi(c, d.xs[i]));
            if (a != b)
              v.push_back("Ext^" + std::to_string(l) + "(X_" + std::to_string(j) + ", X_" + std::to_string(i) +
                          "): module " + std::to_string(a) + ", cluster " + std::to_string(b));
          }
      if (!v.empty()) failures.push_back({{"instance", instance_json(c, d)}, {"violations", v}});
    }
    int in_left = 0;
    for (int x : d.xs) in_left += c.in_left_part(x);
    if (in_left != m + 1) continue;
    std::vector<int> team(d.xs.begin(), d.xs.begin() + m + 1);
    ++teams;
    if (!has_team_pattern(c, team)) {
      ++skipped;
      failures.push_back({{"instance", instance_json(c, d)},
                          {"violations", {"team lacks the Ext pattern; witness search precondition fails"}}});
      continue;
    }
    if (find_mutation_witness(c, team)) ++witnessed;
    else failures.push_back({{"instance", instance_json(c, d)}, {"violations", {"no witness found"}}});
  }
  rep["instances"] = chains.size();
  rep["summary"] = {{"transfer_chains", transfer_chains},
                    {"teams", teams},
                    {"teams_without_pattern", skipped},
                    {"teams_witnessed", witnessed}};
  rep["failures"] = failures;
  return {rep, failures.empty(), ""};
}

Outcome verify_thm42(const Catalog& c, const ClusterModel& cm, json rep) {
  const int m = c.level();
  auto chains = all_chains(c);
  std::map<std::string, int> failed;
  json failures = json::array();
  int count = 0;
  for (const auto& d : chains) {
    if (d.tpd > m) continue;
    ++count;
    auto r = ar_angle(c, cm, d.t, d.xs);
    for (const auto& ch : r.checks)
      if (!ch.pass) ++failed[ch.name];
    if (!r.pass()) failures.push_back({{"instance", instance_json(c, d)}, {"report", r.to_json()}});
  }
  json summary = json::object();
  for (auto [k, v] : failed) summary[k] = v;
  rep["instances"] = count;
  rep["summary"] = {{"failed_checks", summary}};
  rep["failures"] = failures;
  return {rep, failures.empty(), ""};
}

Outcome verify_lemma31(const AlgebraPtr& alg, std::uint64_t seed, int samples, json rep) {
  auto w = RepetitiveWindow::around(alg);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<FDModule, FDModule>> pairs;
  for (int k = 0; k < samples; ++k) {
    auto x = random_module(alg, rng);
    auto y = random_module(alg, rng);
    pairs.emplace_back(x, y);
  }
  std::vector<json> results(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int k) {
    json v = json::array();
    for (int s = 1; s <= 3; ++s) {
      const int e = w.ext_dim(s, pairs[k].first, pairs[k].second);
      const int h = w.stable_hom_dim(pairs[k].first, w.omega(pairs[k].second, -s));
      if (e != h) v.push_back({{"s", s}, {"ext", e}, {"stable_hom", h}});
    }
    results[k] = v;
  });
  json failures = json::array();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!results[k].empty())
      failures.push_back({{"instance", {{"pair", k}, {"dims", {pairs[k].first.dims(), pairs[k].second.dims()}}}},
                          {"violations", results[k]}});
  rep["instances"] = pairs.size();
  rep["failures"] = failures;
  return {rep, failures.empty(), ""};
}

}  // namespace

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open quiver file " + path);
  return parse_quiver(in);
}

Outcome cmd_build(const RunConfig& cfg, const Quiver& q, std::uint32_t prime) {
  if (cfg.m < 0) throw UsageError("--m must be >= 0");
  auto alg = make_algebra(q, cfg.m, prime);
  json rep = header(cfg, q, prime);
  rep["dim"] = alg->dim();
  rep["basis_size"] = alg->dim();
  rep["simples"] = alg->vertex_count();
  rep["gldim"] = global_dimension(alg);
  rep["radical_length"] = alg->radical_length();
  rep["grothendieck_rank"] = grothendieck_rank(*alg);
  rep["dynkin"] = q.is_dynkin();
  return {rep, true, ""};
}

Outcome cmd_enumerate(const RunConfig& cfg, const Quiver& q, std::uint32_t prime) {
  require_level(cfg);
  auto alg = make_algebra(q, cfg.m, prime);
  Catalog c(alg, cfg.seed);
  auto graph = mutation_graph(c, cfg.pd_bound);
  json rep = header(cfg, q, prime);
  rep["catalog_size"] = c.size();
  json mods = json::array();
  for (const auto& r : graph.nodes) {
    json s = json::array();
    for (int i : r.summands) s.push_back(entry_json(c, i));
    mods.push_back({{"id", r.id}, {"pd", r.pd}, {"summands", s}});
  }
  rep["tilting"] = mods;
  rep["count"] = graph.nodes.size();
  rep["graph"] = {{"edges", graph.edges.size()}, {"connected", is_connected(graph)}};
  bool pass = true;
  if (cfg.pd_bound && *cfg.pd_bound == cfg.m) {
    ClusterModel cm(c.window().hereditary(), cfg.m);
    const auto cluster = cm.tilting_objects().size();
    rep["cluster_count"] = cluster;
    rep["match"] = cluster == graph.nodes.size();
    pass = cluster == graph.nodes.size();
  }
  return {rep, pass, to_dot(graph, c)};
}

Outcome cmd_complements(const RunConfig& cfg, const Quiver& q, std::uint32_t prime) {
  require_level(cfg);
  auto alg = make_algebra(q, cfg.m, prime);
  Catalog c(alg, cfg.seed);
  auto chains = all_chains(c);
  json rep = header(cfg, q, prime);
  json list = json::array();
  for (const auto& d : chains) {
    if (cfg.pd_bound && d.tpd > *cfg.pd_bound) continue;
    json base = json::array();
    for (int i : d.t) base.push_back(entry_json(c, i));
    json xs = json::array();
    for (int x : d.xs) xs.push_back(entry_json(c, x));
    json seqs = json::array();
    for (const auto& s : d.chain.sequences) {
      json mid = json::array();
      for (int k : s.middle) mid.push_back(d.t[k]);
      seqs.push_back({{"middle", mid}, {"f", to_json(s.f)}, {"g", to_json(s.g)}});
    }
    list.push_back({{"base", base}, {"base_pd", d.tpd}, {"t", d.chain.t()}, {"complements", xs}, {"sequences", seqs}});
  }
  rep["chains"] = list;
  rep["count"] = list.size();
  return {rep, true, ""};
}

Outcome cmd_mutate(const RunConfig& cfg, const Quiver& q, std::uint32_t prime) {
  require_level(cfg);
  if (cfg.tilting_id.empty()) throw UsageError("mutate needs --tilting-id");
  Direction dir;
  if (cfg.direction == "up") dir = Direction::kUp;
  else if (cfg.direction == "down") dir = Direction::kDown;
  else throw UsageError("--direction must be up or down");
  auto alg = make_algebra(q, cfg.m, prime);
  Catalog c(alg, cfg.seed);
  std::optional<TiltingRecord> rec;
  for (auto& r : enumerate_tilting(c))
    if (r.id == cfg.tilting_id) rec = r;
  if (!rec) throw UsageError("unknown tilting id " + cfg.tilting_id);
  if (cfg.summand < 0 || cfg.summand >= static_cast<int>(rec->summands.size()))
    throw UsageError("--summand out of range");
  const int x = rec->summands[cfg.summand];
  if (c[x].projective_injective) throw UsageError("summand " + std::to_string(cfg.summand) + " is projective-injective");
  std::vector<int> rest;
  for (int i : rec->summands)
    if (i != x) rest.push_back(i);
  json rep = header(cfg, q, prime);
  rep["from"] = rec->id;
  rep["summand"] = entry_json(c, x);
  rep["direction"] = cfg.direction;
  try {
    auto mu = mutate(modules(c, rest), c[x].module, dir);
    const int y = c.index_of(mu.complement);
    auto next = rest;
    next.push_back(y);
    auto nr = make_record(c, next);
    rep["to"] = nr.id;
    rep["complement"] = entry_json(c, y);
    rep["new_summand_index"] = std::find(nr.summands.begin(), nr.summands.end(), y) - nr.summands.begin();
    const auto& s = mu.sequence;
    json dump{{"left", to_json(s.f.source())},
              {"middle", to_json(s.f.target())},
              {"right", to_json(s.g.target())},
              {"f", to_json(s.f)},
              {"g", to_json(s.g)}};
    rep["exact"] = check_sequence(q, cfg.m, prime, dump);
    rep["sequence"] = dump;
    return {rep, rep["exact"].get<bool>(), ""};
  } catch (const SinkEnd& e) {
    rep["error"] = {{"kind", "SinkEnd"}, {"message", e.what()},
                    {"explanation", "the summand is the sink complement; there is no further mutation upward"}};
  } catch (const BongartzEnd& e) {
    rep["error"] = {{"kind", "BongartzEnd"}, {"message", e.what()},
                    {"explanation", "the summand is the Bongartz complement; there is no further mutation downward"}};
  }
  return {rep, false, ""};
}

Outcome cmd_verify(const RunConfig& cfg, const Quiver& q, std::uint32_t prime) {
  require_level(cfg);
  static const std::vector<std::string> targets{"thm34", "lemma37", "cor38", "thm39", "thm42", "lemma31"};
  if (std::find(targets.begin(), targets.end(), cfg.target) == targets.end())
    throw UsageError("unknown --target '" + cfg.target + "'");
  auto alg = make_algebra(q, cfg.m, prime);
  json rep = header(cfg, q, prime);
  rep["target"] = cfg.target;
  if (cfg.target == "lemma31") {
    rep["seed"] = cfg.seed;
    return verify_lemma31(alg, cfg.seed, cfg.samples, rep);
  }
  Catalog c(alg, cfg.seed);
  if (cfg.target == "thm34") return verify_thm34(c, rep);
  if (cfg.target == "lemma37") return verify_lemma37(c, rep);
  if (cfg.target == "cor38") return verify_cor38(c, rep);
  ClusterModel cm(c.window().hereditary(), cfg.m);
  if (cfg.target == "thm39") return verify_thm39(c, cm, rep);
  return verify_thm42(c, cm, rep);
}

Outcome cmd_cluster(const RunConfig& cfg, const Quiver& q, std::uint32_t prime) {
  require_level(cfg);
  auto a = make_algebra(q, 0, prime);
  ClusterModel cm(a, cfg.m);
  auto objs = cm.tilting_objects();
  json rep = header(cfg, q, prime);
  json stalks = json::array();
  for (const auto& x : cm.objects()) stalks.push_back(to_json(x));
  rep["objects"] = stalks;
  rep["object_count"] = cm.size();
  rep["tilting_objects"] = objs;
  rep["count"] = objs.size();
  return {rep, true, exchange_graph_dot(cm, objs)};
}

json dimensions_only(const json& report) {
  if (report.is_object()) {
    json out = json::object();
    for (auto it = report.begin(); it != report.end(); ++it) {
      if (it.key() == "matrix" || it.key() == "actions" || it.key() == "prime" || it.key() == "algebra") continue;
      out[it.key()] = dimensions_only(it.value());
    }
    return out;
  }
  if (report.is_array()) {
    json out = json::array();
    for (const auto& v : report) out.push_back(dimensions_only(v));
    return out;
  }
  return report;
}

bool check_sequence(const Quiver& q, int m, std::uint32_t prime, const json& dump) {
  auto alg = make_algebra(q, m, prime);
  auto left = module_from_json(alg, dump.at("left"));
  auto middle = module_from_json(alg, dump.at("middle"));
  auto right = module_from_json(alg, dump.at("right"));
  if (!left.validate().empty() || !middle.validate().empty() || !right.validate().empty()) return false;
  auto f = morphism_from_json(left, middle, dump.at("f"));
  auto g = morphism_from_json(middle, right, dump.at("g"));
  if (!f.is_homomorphism() || !g.is_homomorphism()) return false;
  if (!f.is_injective() || !g.is_surjective() || !compose(f, g).is_zero()) return false;
  return left.dim() + right.dim() == middle.dim();
}

namespace {

void render(const json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const auto& v = it.value();
    if (v.is_structured() && !v.empty() &&
        !(v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); }))) {
      os << indent << key << ":\n";
      render(v, indent + "  ", os);
    } else {
      os << indent << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

Outcome execute(const RunConfig& cfg) {
  Prime checked(cfg.prime);
  (void)checked;
  auto q = load_quiver(cfg.quiver_path);
  using Fn = Outcome (*)(const RunConfig&, const Quiver&, std::uint32_t);
  static const std::map<std::string, Fn> table{{"build", cmd_build},   {"enumerate", cmd_enumerate},
                                               {"complements", cmd_complements}, {"mutate", cmd_mutate},
                                               {"verify", cmd_verify}, {"cluster", cmd_cluster}};
  auto fn = table.find(cfg.command);
  if (fn == table.end()) throw UsageError("unknown command " + cfg.command);
  auto out = fn->second(cfg, q, cfg.prime);
  if (cfg.crosscheck) {
    Prime second(*cfg.crosscheck);
    (void)second;
    auto other = fn->second(cfg, q, *cfg.crosscheck);
    const bool agree = dimensions_only(out.report) == dimensions_only(other.report);
    out.report["crosscheck"] = {{"prime", *cfg.crosscheck}, {"agree", agree}};
    if (!agree) {
      out.report["crosscheck"]["other"] = dimensions_only(other.report);
      out.pass = false;
    }
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"replika: replicated algebras, tilting mutation and m-cluster categories"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  std::uint32_t cross = 0;
  int pd = -1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--quiver", cfg.quiver_path, "quiver file")->required();
    sub->add_option("--m", cfg.m, "level of the replicated algebra");
    sub->add_option("--prime", cfg.prime, "field characteristic");
    sub->add_option("--crosscheck", cross, "second prime to compare dimensions against");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--pd-bound", pd, "only summands of projective dimension at most this");
    sub->add_option("--out", cfg.out, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  };
  for (const char* name : {"build", "enumerate", "complements", "mutate", "verify", "cluster"}) {
    auto* sub = app.add_subcommand(name);
    common(sub);
    if (std::string(name) == "verify") {
      sub->add_option("--target", cfg.target, "thm34, lemma37, cor38, thm39, thm42 or lemma31")->required();
      sub->add_option("--samples", cfg.samples, "random pairs for lemma31");
    }
    if (std::string(name) == "mutate") {
      sub->add_option("--tilting-id", cfg.tilting_id, "id from enumerate")->required();
      sub->add_option("--summand", cfg.summand, "position of the summand to exchange");
      sub->add_option("--direction", cfg.direction, "up or down");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cross) cfg.crosscheck = cross;
  if (pd >= 0) cfg.pd_bound = pd;
  try {
    auto res = execute(cfg);
    if (cfg.out == "dot") {
      if (res.dot.empty()) throw UsageError("--out dot is only available for enumerate and cluster");
      out << res.dot;
    } else if (cfg.out == "text") {
      out << render_text(res.report);
    } else {
      out << res.report.dump(2) << "\n";
    }
    if (!res.pass) err << "verification failed\n";
    return res.pass ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const NotDynkin& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CyclicQuiver& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace replika::harness
