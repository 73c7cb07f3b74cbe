#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "fdim/dps.hpp"
#include "fdim/errors.hpp"
#include "fdim/fiber_graph.hpp"
#include "fdim/solver.hpp"

namespace fibdim::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidInput("cannot write '" + path + "'");
    f << content;
    if (!f.flush()) throw InvalidInput("cannot write '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::vector<Point> require_moves(const io::PointDocument& polytope,
                                 const std::string& moves_path) {
  if (!moves_path.empty()) {
    auto m = io::parse_point_document(read_file(moves_path)).moves;
    if (!m) throw InvalidInput("'" + moves_path + "' has no 'moves'");
    return *m;
  }
  if (!polytope.moves) throw InvalidInput("no moves given (use --moves or a 'moves' key)");
  return *polytope.moves;
}

std::string join_points(const std::vector<Point>& points) {
  std::string out;
  for (const auto& p : points) out += (out.empty() ? "" : " ") + to_string(p);
  return out;
}

struct Options {
  std::string method;
  std::string graph;
  std::vector<std::string> factors;
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  std::string apex_node;
  std::size_t dps_dim = 0;
  std::int64_t box = 2;
  std::size_t search_dim = 2;
  std::uint64_t budget = 2'000'000;
  std::size_t max_dim = kEmbeddingLimits.max_dim;
  std::uint64_t max_volume = kEmbeddingLimits.max_box_volume;
  std::size_t difference_cap = kDefaultDifferenceCap;
  std::string output;
  std::string graph_output;
  std::string embedding;
  std::string polytope;
  std::string moves;
  std::size_t size_cap = 8;

  GeometryLimits limits() const { return {max_dim, max_volume}; }
  Effort effort() const {
    Effort e;
    e.difference_cap = difference_cap;
    e.search_box = box;
    e.search_budget = budget;
    e.limits = limits();
    return e;
  }
};

io::LabeledGraph load_graph(const std::string& path) {
  if (path.empty()) throw InvalidInput("--graph is required");
  return io::parse_graph(read_file(path));
}

Embedding best_embedding(const Graph& g, const Options& o) {
  auto b = fdim_bracket(g, o.effort());
  if (!b.upper_certificate) throw InvalidInput("graph has no nodes");
  return std::move(*b.upper_certificate);
}

// Builds the embedding requested by `embed` and the labels of its nodes.
std::pair<Embedding, io::LabeledGraph> build_embedding(const Options& o, std::ostream& err) {
  const auto method = parse_embedding_method(o.method);
  if (!method) throw InvalidInput("unknown method '" + o.method + "'");

  switch (*method) {
    case EmbeddingMethod::cycle: {
      if (o.graph.empty()) {
        if (o.n < 3) throw InvalidInput("cycle needs --n >= 3 or --graph");
        auto lg = io::with_index_labels(graphs::cycle(o.n));
        return {embed_cycle(o.n), std::move(lg)};
      }
      auto lg = load_graph(o.graph);
      const std::size_t n = lg.graph.node_count();
      if (n < 3 || !is_isomorphic(lg.graph, graphs::cycle(n))) {
        throw InvalidInput("graph is not a cycle");
      }
      return {relabel(embed_cycle(n), lg.graph), std::move(lg)};
    }
    case EmbeddingMethod::complete_multipartite: {
      if (o.graph.empty()) {
        if (o.sizes.empty()) throw InvalidInput("complete-multipartite needs --sizes or --graph");
        Embedding e = embed_complete_multipartite(o.sizes);
        auto lg = io::with_index_labels(e.graph());
        return {std::move(e), std::move(lg)};
      }
      auto lg = load_graph(o.graph);
      auto parts = complete_multipartite_parts(lg.graph);
      if (!parts || parts->empty()) throw InvalidInput("graph is not complete multipartite");
      return {relabel(embed_complete_multipartite(*parts), lg.graph), std::move(lg)};
    }
    case EmbeddingMethod::product: {
      if (o.factors.empty()) throw InvalidInput("product needs --graph and one or more --factor");
      std::vector<io::LabeledGraph> graphs{load_graph(o.graph)};
      for (const auto& f : o.factors) graphs.push_back(load_graph(f));
      std::vector<Embedding> parts;
      for (const auto& lg : graphs) parts.push_back(best_embedding(lg.graph, o));
      Embedding e = embed_product(parts);
      std::vector<std::string> labels{""};
      for (const auto& lg : graphs) {
        std::vector<std::string> next;
        for (const auto& prefix : labels) {
          for (const auto& l : lg.labels) next.push_back(prefix.empty() ? l : prefix + ":" + l);
        }
        labels = std::move(next);
      }
      io::LabeledGraph lg{e.graph(), std::move(labels)};
      return {std::move(e), std::move(lg)};
    }
    default:
      break;
  }

  auto lg = load_graph(o.graph);
  const Graph& g = lg.graph;
  if (g.node_count() == 0) throw InvalidInput("graph has no nodes");
  switch (*method) {
    case EmbeddingMethod::simplex:
      return {embed_simplex(g), std::move(lg)};
    case EmbeddingMethod::chromatic: {
      Coloring c;
      try {
        c = color(g, ColoringMode::exact);
      } catch (const CapExceeded&) {
        err << "note: exact coloring capped, using greedy coloring\n";
        c = color(g, ColoringMode::greedy);
      }
      return {embed_chromatic(g, c), std::move(lg)};
    }
    case EmbeddingMethod::apex: {
      if (g.node_count() < 2) throw InvalidInput("apex needs two or more nodes");
      NodeId v = 0;
      if (!o.apex_node.empty()) {
        auto found = lg.find(o.apex_node);
        if (!found) throw InvalidInput("unknown node '" + o.apex_node + "'");
        v = *found;
      }
      const Embedding sub = best_embedding(remove_node(g, v), o);
      return {embed_apex(g, v, sub), std::move(lg)};
    }
    case EmbeddingMethod::difference: {
      auto cert = is_difference_graph(g, o.difference_cap);
      if (!cert) throw InvalidInput("graph is not a difference graph");
      return {embed_difference(g, cert->position, cert->dset), std::move(lg)};
    }
    case EmbeddingMethod::dps: {
      const std::size_t n = g.node_count();
      std::optional<DpsPointSet> dps;
      if (o.dps_dim == 0) {
        std::vector<Point> simplex(n, Point(n, 0));
        for (std::size_t i = 0; i < n; ++i) simplex[i][i] = 1;
        dps.emplace(std::move(simplex), GeometryLimits{n, ~std::uint64_t{0}});
      } else {
        dps = find_dps_point_set(n, o.dps_dim, o.box, o.budget);
        if (!dps) {
          throw InvalidInput("no " + std::to_string(n) + "-point DPS set in [0," +
                             std::to_string(o.box) + "]^" + std::to_string(o.dps_dim));
        }
      }
      return {embed_dps(g, *dps), std::move(lg)};
    }
    case EmbeddingMethod::exhaustive_search: {
      auto r = fdim_exact_search(g, o.search_dim, o.box, o.budget);
      if (r.status == ExactSearchResult::Status::budget_exceeded) {
        throw CapExceeded("exhaustive search exceeded its budget");
      }
      if (!r.embedding) {
        throw InvalidInput("no embedding in [0," + std::to_string(o.box) + "]^" +
                           std::to_string(o.search_dim) +
                           " (this does not rule out larger boxes)");
      }
      return {std::move(*r.embedding), std::move(lg)};
    }
    default:
      throw InvalidInput("unsupported method '" + o.method + "'");
  }
}

int cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
  auto [e, lg] = build_embedding(o, err);
  const auto doc = io::make_document(e, lg.labels);
  if (!o.graph_output.empty()) write_output(o.graph_output, io::write_edge_list(lg), out);
  write_output(o.output, io::serialize(doc), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto lg = load_graph(o.graph);
  if (o.embedding.empty()) throw InvalidInput("--embedding is required");
  const auto doc = io::parse_embedding_document(read_file(o.embedding));
  const auto check = io::verify_document(lg, doc, o.limits());
  if (!check.ok) {
    err << "verification failed: " << check.reason << "\n";
    return kVerificationFailed;
  }
  out << "ok: " << doc.method << " embedding in dimension " << doc.polytope.front().size()
      << "\n";
  return kOk;
}

int cmd_fdim(const Options& o, std::ostream& out, std::ostream&) {
  const auto lg = load_graph(o.graph);
  const auto b = fdim_bracket(lg.graph, o.effort());
  out << "lower=" << b.lower << " upper=" << b.upper << (b.exact() ? " exact" : " open")
      << "\n";
  out << "lower certificate: " << to_string(b.lower_certificate) << "\n";
  if (b.upper_certificate) {
    out << "upper certificate: " << to_string(b.upper_certificate->method())
        << " embedding in dimension " << b.upper_certificate->dimension() << "\n";
  }
  if (b.difference) {
    out << "difference set:";
    for (auto d : b.difference->dset) out << " " << d;
    out << "\n";
  }
  if (!o.output.empty() && b.upper_certificate) {
    write_output(o.output, io::serialize(io::make_document(*b.upper_certificate, lg.labels)),
                 out);
  }
  return kOk;
}

int cmd_fiber_graph(const Options& o, std::ostream& out, std::ostream&) {
  if (o.polytope.empty()) throw InvalidInput("--polytope is required");
  const auto pd = io::parse_point_document(read_file(o.polytope));
  if (pd.points.empty()) throw InvalidInput("polytope has no points");
  const LatticePolytope p(pd.points);
  const auto moves = symmetric_move_set(p.ambient_dim(), require_moves(pd, o.moves));
  write_output(o.output, io::to_dot(build_fiber_graph(p, moves, o.limits())), out);
  return kOk;
}

int cmd_markov(const Options& o, std::ostream& out, std::ostream&) {
  if (o.polytope.empty()) throw InvalidInput("--polytope is required");
  const auto pd = io::parse_point_document(read_file(o.polytope));
  if (pd.points.empty()) throw InvalidInput("polytope has no points");
  const LatticePolytope p(pd.points);
  const auto points = enumerate_lattice_points(p, o.limits());
  out << "points=" << points.size() << " dimension=" << dimension(p) << "\n";
  if (pd.moves || !o.moves.empty()) {
    const auto moves = symmetric_move_set(p.ambient_dim(), require_moves(pd, o.moves));
    const auto minimal = is_minimal(p, moves, o.limits());
    out << "minimal=" << (minimal.minimal ? "yes" : "no");
    if (!minimal.minimal) out << " unused: " << join_points(minimal.unused);
    out << "\n";
    out << "markov-basis=" << (is_markov_basis(p, moves, o.limits()) ? "yes" : "no") << "\n";
    const auto crit = check_bipartite_criterion(p, moves, o.limits());
    out << "bipartite=" << (crit.bipartite ? "yes" : "no")
        << " criterion=" << (crit.applies ? "applies" : "does-not-apply") << "\n";
  }
  const auto size = min_markov_basis_size(p, o.size_cap, o.limits());
  if (size) {
    out << "min-markov-basis-size=" << *size << "\n";
  } else {
    out << "min-markov-basis-size>" << o.size_cap << "\n";
  }
  return kOk;
}

int cmd_search_dps(const Options& o, std::ostream& out, std::ostream& err) {
  const auto dps = find_dps_point_set(o.n, o.dps_dim, o.box, o.budget);
  if (!dps) {
    err << "no " << o.n << "-point DPS set in [0," << o.box << "]^" << o.dps_dim << "\n";
    return kVerificationFailed;
  }
  write_output(o.output, io::serialize_points("points", dps->points()), out);
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiber graphs of lattice polytopes and fiber-dimension certificates", "fdim"};
  app.require_subcommand(1);
  Options o;

  auto add_limits = [&](CLI::App* c) {
    c->add_option("--max-dim", o.max_dim, "Largest ambient dimension to enumerate");
    c->add_option("--max-volume", o.max_volume, "Largest bounding-box volume to scan");
  };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Node budget for exhaustive searches");
    c->add_option("--max-box", o.box, "Side length of the search box [0,B]^d");
  };

  auto* embed = app.add_subcommand("embed", "Write an embedding document for a graph");
  embed->add_option("--method", o.method, "simplex, chromatic, product, apex, cycle, "
                                          "difference, complete-multipartite, dps, "
                                          "exhaustive-search")
      ->required();
  embed->add_option("--graph", o.graph, "Graph file (edge list or JSON)");
  embed->add_option("--factor", o.factors, "Further product factors");
  embed->add_option("--n", o.n, "Cycle length");
  embed->add_option("--sizes", o.sizes, "Part sizes")->delimiter(',');
  embed->add_option("--apex-node", o.apex_node, "Apex node label (default: first node)");
  embed->add_option("--dps-dim", o.dps_dim, "Search a DPS set in this dimension");
  embed->add_option("--search-dim", o.search_dim, "Dimension for exhaustive-search");
  embed->add_option("--difference-cap", o.difference_cap, "Node cap for difference search");
  embed->add_option("--write-graph", o.graph_output, "Also write the embedded graph");
  embed->add_option("-o,--output", o.output, "Output file (default: stdout)");
  add_search(embed);
  add_limits(embed);

  auto* verify = app.add_subcommand("verify", "Check an embedding document against a graph");
  verify->add_option("--graph", o.graph, "Graph file")->required();
  verify->add_option("--embedding", o.embedding, "Embedding document")->required();
  add_limits(verify);

  auto* fdim = app.add_subcommand("fdim", "Bracket the fiber dimension of a graph");
  fdim->add_option("--graph", o.graph, "Graph file")->required();
  fdim->add_option("--difference-cap", o.difference_cap, "Node cap for difference search");
  fdim->add_option("-o,--output", o.output, "Write the upper certificate here");
  add_search(fdim);
  add_limits(fdim);

  auto* fiber = app.add_subcommand("fiber-graph", "Emit F(P,M) as DOT");
  fiber->add_option("--polytope", o.polytope, "Document with a 'polytope' point list")
      ->required();
  fiber->add_option("--moves", o.moves, "Document with a 'moves' point list");
  fiber->add_option("-o,--output", o.output, "Output file (default: stdout)");
  add_limits(fiber);

  auto* markov = app.add_subcommand("markov", "Minimality, Markov and minimum-size checks");
  markov->add_option("--polytope", o.polytope, "Document with a 'polytope' point list")
      ->required();
  markov->add_option("--moves", o.moves, "Document with a 'moves' point list");
  markov->add_option("--size-cap", o.size_cap, "Largest Markov basis size to search");
  add_limits(markov);

  auto* dps = app.add_subcommand("search-dps", "Search a distinct pair-sum point set");
  dps->add_option("--n", o.n, "Number of points")->required();
  dps->add_option("--dim", o.dps_dim, "Dimension")->required();
  dps->add_option("--box", o.box, "Side length of [0,B]^d");
  dps->add_option("--budget", o.budget, "Search node budget");
  dps->add_option("-o,--output", o.output, "Output file (default: stdout)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*embed) return cmd_embed(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*fdim) return cmd_fdim(o, out, err);
    if (*fiber) return cmd_fiber_graph(o, out, err);
    if (*markov) return cmd_markov(o, out, err);
    if (*dps) return cmd_search_dps(o, out, err);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInvalidInput;
}

}  // namespace fibdim::cli
