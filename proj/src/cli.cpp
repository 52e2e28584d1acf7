#include "booklab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "booklab/analytic.hpp"
#include "booklab/books.hpp"
#include "booklab/constructions.hpp"
#include "booklab/error.hpp"
#include "booklab/kcg_io.hpp"
#include "booklab/parallel.hpp"
#include "booklab/quasi.hpp"
#include "booklab/rational.hpp"
#include "booklab/search.hpp"

namespace booklab::cli {

namespace {

using nlohmann::json;

json members_json(const VertexSet& s) { return json(s.members()); }

json big(const BigInt& v) {
  // exact integers as JSON numbers when they fit, strings otherwise
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max())) return v.convert_to<std::int64_t>();
  return v.str();
}

// Flag values as typed; rationals are parsed after CLI11 is done so the error names them.
struct Options {
  std::size_t threads = 0;
  std::string in, out, init, witness_out;
  std::string color = "blue";
  std::size_t k = 2, m = 1, n = 1, big_n = 0, part_size = 1, cap = 10, grid = 21;
  std::string p, c, gamma, theta, eps0;
  std::uint64_t seed = 1, budget = 1'000'000, probes = 1000, restarts = 32, node_budget = kDefaultNodeBudget;
  bool spectrum = false, max = false, exhaustive = false;
};

class Runner {
 public:
  Runner(std::ostream& out, const Options& o) : out_(out), o_(o) {}

  void emit(const json& line) { out_ << line.dump() << '\n'; }

  json config(const std::string& command) const {
    return json{{"command", command}, {"threads", worker_budget()}};
  }

  int gen_kpartite() {
    auto cfg = config("gen kpartite");
    cfg.update({{"k", o_.k}, {"part_size", o_.part_size}, {"out", o_.out}});
    emit(cfg);
    auto kp = balanced_kpartite(o_.k, o_.part_size);
    save(kp.coloring, o_.out);
    emit({{"n", kp.coloring.size()}, {"blue_edges", kp.coloring.edge_count(Color::Blue)}, {"out", o_.out}});
    return 0;
  }

  int gen_random() {
    const Rational p = parse_rational(o_.p);
    auto cfg = config("gen random");
    cfg.update({{"n", o_.n}, {"p", to_string(p)}, {"seed", o_.seed}, {"out", o_.out}});
    emit(cfg);
    auto g = random_coloring(o_.n, p, o_.seed);
    save(g, o_.out);
    emit({{"n", g.size()}, {"blue_edges", g.edge_count(Color::Blue)}, {"out", o_.out}});
    return 0;
  }

  int books() {
    const Color color = parse_color(o_.color);
    auto cfg = config("books");
    cfg.update({{"in", o_.in}, {"color", to_string(color)}, {"k", o_.k}, {"spectrum", o_.spectrum}, {"max", o_.max}});
    emit(cfg);
    const auto g = load(o_.in);
    if (o_.spectrum) {
      const auto s = spectrum(g, color, o_.k);
      for (const auto& [pages, spines] : s.histogram) emit({{"pages", pages}, {"spines", spines}});
      emit({{"color", to_string(color)},
            {"k", o_.k},
            {"total_spines", s.total_spines},
            {"page_sum", big(s.page_sum())},
            {"page_pair_sum", big(s.page_pair_sum())}});
    }
    if (o_.max) {
      const auto b = max_book(g, color, o_.k);
      emit({{"color", to_string(b.color)}, {"k", b.k}, {"spine", b.spine}, {"pages", b.pages}});
    }
    if (!o_.spectrum && !o_.max) {
      emit({{"color", to_string(color)}, {"k", o_.k}, {"cliques", count_cliques(g, color, o_.k)}});
    }
    return 0;
  }

  int many() {
    const Rational gamma = parse_rational(o_.gamma);
    const bool quasi_mode = !o_.p.empty();
    if (quasi_mode == !o_.c.empty()) throw DomainError("many-books takes exactly one of --c or --p");
    const auto params = quasi_mode ? ManyBooksParams::quasirandom(parse_rational(o_.p), gamma)
                                   : ManyBooksParams::standard(parse_rational(o_.c), gamma);
    auto cfg = config("many-books");
    cfg.update({{"in", o_.in}, {"k", o_.k}, {"gamma", to_string(gamma)}, {"mode", quasi_mode ? "quasirandom" : "standard"}});
    cfg[quasi_mode ? "p" : "c"] = to_string(quasi_mode ? params.p : params.c);
    emit(cfg);
    const auto r = many_books(load(o_.in), params, o_.k);
    json line{{"red_threshold", to_string(r.red_threshold)},
              {"blue_threshold", to_string(r.blue_threshold)},
              {"spine_floor", to_string(r.spine_floor)},
              {"red_qualifying", r.red_qualifying},
              {"blue_qualifying", r.blue_qualifying},
              {"verdict", r.verdict}};
    if (r.alternate) {
      line["alternate"] = {{"c", to_string(r.alternate->c)},
                           {"red_threshold", to_string(r.alternate->red_threshold)},
                           {"blue_threshold", to_string(r.alternate->blue_threshold)},
                           {"red_qualifying", r.alternate->red_qualifying},
                           {"blue_qualifying", r.alternate->blue_qualifying},
                           {"verdict", r.alternate->verdict}};
    }
    emit(line);
    return 0;
  }

  int ramsey() {
    auto cfg = config("ramsey");
    cfg.update({{"k", o_.k}, {"m", o_.m}, {"n", o_.n}, {"cap", o_.cap}, {"node_budget", o_.node_budget}});
    emit(cfg);
    const auto r = ramsey_number(o_.k, o_.m, o_.n, o_.cap, o_.node_budget);
    if (r.witness && !o_.witness_out.empty()) save(*r.witness, o_.witness_out);
    json line{{"lower", r.lower},
              {"nodes", r.stats.nodes},
              {"prunings", r.stats.prunings},
              {"classes_per_level", r.stats.classes_per_level}};
    if (r.witness) line["witness_vertices"] = r.witness->size();
    if (r.exact) {
      line["value"] = *r.exact;
      line["upper"] = *r.upper;
      emit(line);
      return 0;
    }
    line["upper"] = nullptr;
    line["status"] = r.stats.budget_exhausted ? "node budget exhausted" : "cap reached";
    emit(line);
    return 2;
  }

  int witness() {
    auto cfg = config("witness");
    cfg.update({{"N", o_.big_n}, {"k", o_.k}, {"m", o_.m}, {"n", o_.n}, {"budget", o_.budget}, {"seed", o_.seed},
                {"out", o_.out}, {"init", o_.init}});
    emit(cfg);
    std::optional<TwoColoring> initial;
    if (!o_.init.empty()) initial = load(o_.init);
    const auto r = witness_search(o_.big_n, o_.k, o_.m, o_.n, o_.budget, o_.seed, initial);
    if (r.coloring) save(*r.coloring, o_.out);
    emit({{"found", r.coloring.has_value()}, {"steps", r.steps}, {"best_objective", r.best_objective}});
    return 0;
  }

  int analytic_k1() {
    const Rational p = parse_rational(o_.p);
    auto cfg = config("analytic k1");
    cfg["p"] = to_string(p);
    emit(cfg);
    const double pd = to_double(p);
    json line{{"p", to_string(p)}, {"k1", analytic::threshold_k1(pd)}, {"k2", analytic::threshold_k2(pd)},
              {"cutoff", analytic::k1_cutoff<double>()}};
    if (pd < analytic::k1_cutoff<double>()) line["g"] = analytic::k1_margin_ratio(pd);
    emit(line);
    return 0;
  }

  int analytic_c1() {
    auto cfg = config("analytic c1");
    cfg["k"] = o_.k;
    emit(cfg);
    const auto r = analytic::threshold_c1(static_cast<int>(o_.k));
    emit({{"k", o_.k}, {"c1", r.c1}, {"root", r.root}, {"qualifies", r.qualifies}});
    return 0;
  }

  int analytic_min() {
    const Rational p = parse_rational(o_.p);
    analytic::MinimizeOptions opts;
    opts.resolution = static_cast<int>(o_.grid);
    if (!o_.eps0.empty()) opts.eps0 = to_double(parse_rational(o_.eps0));
    auto cfg = config("analytic min-F");
    cfg.update({{"p", to_string(p)}, {"k", o_.k}, {"grid", o_.grid}, {"eps0", o_.eps0.empty() ? json() : json(*opts.eps0)},
                {"seed", opts.seed}});
    emit(cfg);
    const auto r = analytic::minimize_extension_average(to_double(p), static_cast<int>(o_.k), opts);
    std::vector<double> argmin(r.argmin.data(), r.argmin.data() + r.argmin.size());
    emit({{"minimum", r.minimum},
          {"margin", r.margin()},
          {"argmin", argmin},
          {"grid_minimum", r.grid_minimum},
          {"resolution", r.resolution},
          {"refine_tolerance", r.refine_tolerance},
          {"restricted", r.eps0.has_value()},
          {"stochastic", r.stochastic},
          {"probes", r.probes},
          {"k1", r.k1},
          {"hypothesis_holds", r.hypothesis_holds}});
    return 0;
  }

  int quasi() {
    const Rational p = parse_rational(o_.p);
    const Rational theta = parse_rational(o_.theta);
    auto cfg = config("quasi");
    cfg.update({{"in", o_.in}, {"p", to_string(p)}, {"theta", to_string(theta)}, {"exhaustive", o_.exhaustive}});
    if (!o_.exhaustive) cfg.update({{"probes", o_.probes}, {"seed", o_.seed}});
    emit(cfg);
    const auto g = load(o_.in);
    const auto r = o_.exhaustive ? quasi_exhaustive(g, p, theta) : quasi_sampled(g, p, theta, o_.probes, o_.seed);
    emit({{"method", to_string(r.method)},
          {"verdict", to_string(r.verdict)},
          {"deviation", to_string(r.deviation)},
          {"limit", to_string(theta * static_cast<long long>(g.size() * g.size()))},
          {"x", members_json(r.x)},
          {"y", members_json(r.y)},
          {"probes", r.probes}});
    return 0;
  }

  int identity() {
    const Rational p = parse_rational(o_.p);
    auto cfg = config("identity");
    cfg.update({{"in", o_.in}, {"k", o_.k}, {"p", to_string(p)}});
    emit(cfg);
    const auto r = identity_check(load(o_.in), o_.k, p);
    emit({{"cliques_k", big(r.cliques_k)},
          {"cliques_k1", big(r.cliques_k1)},
          {"near_cliques_k2", big(r.near_cliques_k2)},
          {"e_direct", to_string(r.e_direct)},
          {"e_identity", to_string(r.e_identity)},
          {"equal", r.equal}});
    return 0;
  }

  int kdist() {
    auto cfg = config("kdist");
    cfg.update({{"in", o_.in}, {"k", o_.k}, {"restarts", o_.restarts}, {"seed", o_.seed}});
    emit(cfg);
    const auto r = kpartite_distance(load(o_.in), o_.k, o_.restarts, o_.seed);
    json parts = json::array();
    for (const auto& part : r.partition.parts) parts.push_back(members_json(part));
    emit({{"edits", r.edits}, {"partition", parts}});
    return 0;
  }

 private:
  std::ostream& out_;
  const Options& o_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"booklab: book-Ramsey experiments"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "worker threads (default: BOOKLAB_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto in_file = [&](CLI::App* sub) { sub->add_option("--in", o.in, "input coloring (kcg)")->required(); };

  auto* gen = app.add_subcommand("gen", "generate a coloring");
  gen->require_subcommand(1);
  auto* gen_kp = gen->add_subcommand("kpartite", "blue cliques on k equal blocks, red between");
  gen_kp->add_option("--k", o.k)->required();
  gen_kp->add_option("--part-size", o.part_size)->required();
  gen_kp->add_option("--out", o.out)->required();
  auto* gen_rand = gen->add_subcommand("random", "each edge blue with probability p");
  gen_rand->add_option("--n", o.n)->required();
  gen_rand->add_option("--p", o.p, "NUM/DEN")->required();
  gen_rand->add_option("--seed", o.seed);
  gen_rand->add_option("--out", o.out)->required();

  auto* books = app.add_subcommand("books", "monochromatic books");
  in_file(books);
  books->add_option("--color", o.color);
  books->add_option("--k", o.k)->required();
  books->add_flag("--spectrum", o.spectrum);
  books->add_flag("--max", o.max);

  auto* many = app.add_subcommand("many-books", "(c, gamma)-many books verdict");
  in_file(many);
  many->add_option("--k", o.k)->required();
  many->add_option("--c", o.c, "NUM/DEN");
  many->add_option("--p", o.p, "NUM/DEN (quasirandom thresholds)");
  many->add_option("--gamma", o.gamma, "NUM/DEN")->required();

  auto* ramsey = app.add_subcommand("ramsey", "exact r(B_m^(k), B_n^(k)) up to a cap");
  ramsey->add_option("--k", o.k)->required();
  ramsey->add_option("--m", o.m)->required();
  ramsey->add_option("--n", o.n)->required();
  ramsey->add_option("--cap", o.cap)->required();
  ramsey->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  ramsey->add_option("--node-budget", o.node_budget);
  ramsey->add_option("--witness-out", o.witness_out, "save the lower-bound witness (kcg)");

  auto* witness = app.add_subcommand("witness", "annealing search for a book-free coloring");
  witness->add_option("--N", o.big_n)->required();
  witness->add_option("--k", o.k)->required();
  witness->add_option("--m", o.m)->required();
  witness->add_option("--n", o.n)->required();
  witness->add_option("--budget", o.budget);
  witness->add_option("--seed", o.seed);
  witness->add_option("--out", o.out)->required();
  witness->add_option("--init", o.init, "start from this coloring (kcg)");

  auto* analytic = app.add_subcommand("analytic", "thresholds and the extension inequality");
  analytic->require_subcommand(1);
  auto* k1 = analytic->add_subcommand("k1", "k1(p) and k2(p)");
  k1->add_option("--p", o.p)->required();
  auto* c1 = analytic->add_subcommand("c1", "c1(k)");
  c1->add_option("--k", o.k)->required();
  auto* min_f = analytic->add_subcommand("min-F", "minimize the extension average");
  min_f->add_option("--p", o.p)->required();
  min_f->add_option("--k", o.k)->required();
  min_f->add_option("--eps0", o.eps0);
  min_f->add_option("--grid", o.grid);

  auto* quasi = app.add_subcommand("quasi", "(p, theta)-quasirandomness witnesses");
  in_file(quasi);
  quasi->add_option("--p", o.p)->required();
  quasi->add_option("--theta", o.theta)->required();
  auto* exhaustive = quasi->add_flag("--exhaustive", o.exhaustive);
  quasi->add_option("--probes", o.probes)->excludes(exhaustive);
  quasi->add_option("--seed", o.seed)->excludes(exhaustive);

  auto* identity = app.add_subcommand("identity", "exact clique-count identity");
  in_file(identity);
  identity->add_option("--k", o.k)->required();
  identity->add_option("--p", o.p)->required();

  auto* kdist = app.add_subcommand("kdist", "edit distance to balanced complete k-partite red");
  in_file(kdist);
  kdist->add_option("--k", o.k)->required();
  kdist->add_option("--restarts", o.restarts);
  kdist->add_option("--seed", o.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ExtrasError& e) {
    err << "error: unknown flag or argument: " << e.what() << '\n';
    return 1;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (o.threads > 0) set_worker_budget(o.threads);
  Runner runner(out, o);
  try {
    if (gen_kp->parsed()) return runner.gen_kpartite();
    if (gen_rand->parsed()) return runner.gen_random();
    if (books->parsed()) return runner.books();
    if (many->parsed()) return runner.many();
    if (ramsey->parsed()) return runner.ramsey();
    if (witness->parsed()) return runner.witness();
    if (k1->parsed()) return runner.analytic_k1();
    if (c1->parsed()) return runner.analytic_c1();
    if (min_f->parsed()) return runner.analytic_min();
    if (quasi->parsed()) return runner.quasi();
    if (identity->parsed()) return runner.identity();
    if (kdist->parsed()) return runner.kdist();
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    err << "error: bad input file: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no command given\n";
  return 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace booklab::cli
