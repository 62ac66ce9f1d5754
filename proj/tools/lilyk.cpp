#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lilyk/cores.hpp"
#include "lilyk/domination.hpp"
#include "lilyk/generators.hpp"
#include "lilyk/harness.hpp"
#include "lilyk/io.hpp"
#include "lilyk/kernels.hpp"
#include "lilyk/oracle.hpp"
#include "lilyk/wideness.hpp"

using namespace lilyk;

namespace {

enum Exit { kOk = 0, kDisagree = 1, kInput = 2, kGuard = 3 };

struct Globals {
  std::uint64_t seed = 0;
  std::size_t size_guard = 20;
  bool batch = false;
};

struct ProblemFlags {
  std::string problem = "rcdom";
  int r = 1, c = 1, lambda = 1, mu = 1;
  CLI::Option* problem_opt = nullptr;

  void add(CLI::App* app, bool with_problem = true) {
    if (with_problem)
      problem_opt = app->add_option("--problem,-p", problem,
                                    "rcdom|total|roman|scatter|lambdamu|perfectcode");
    app->add_option("--r,-r", r, "radius")->check(CLI::PositiveNumber);
    app->add_option("--c,-c", c, "multiplicity")->check(CLI::PositiveNumber);
    app->add_option("--lambda", lambda, "lower bound")->check(CLI::PositiveNumber);
    app->add_option("--mu", mu, "upper bound")->check(CLI::PositiveNumber);
  }
  ProblemParams params() const { return {r, c, lambda, mu}; }
};

// A graph comes either from a file or from a generator spec.
struct GraphSource {
  std::string path;
  std::string gen;
  bool relabel = false;

  void add(CLI::App* app) {
    app->add_option("input", path, "graph file ('-' for stdin)");
    app->add_option("--gen", gen, "generator spec, e.g. grid:4,3");
    app->add_flag("--relabel", relabel, "shuffle vertex ids (generator only)");
  }
  Graph load(const Globals& g) const {
    if (!gen.empty()) {
      auto spec = parse_generator(gen, g.seed);
      spec.relabel = relabel;
      return generate(spec);
    }
    if (path.empty()) throw InputError("need an input file or --gen");
    if (path == "-") return parse_graph(std::cin);
    return read_graph_file(path);
  }
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

std::string join(const VertexSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  return out.str();
}

KernelOptions kernel_options(const Globals& g) {
  KernelOptions k;
  k.core.batch = g.batch;
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernelization toolkit for distance-r domination problems"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "RNG seed for generators");
  app.add_option("--size-guard", globals.size_guard, "largest graph the exact solver accepts");
  app.add_flag("--experimental-batch", globals.batch,
               "remove several centres per lily while peeling");

  int exit_code = kOk;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string gen_spec, out_path;
  bool gen_relabel = false;
  gen->add_option("spec", gen_spec, "grid:w,h | degenerate:n,d | spider:count,legs,len | "
                                    "cycle:n | star:leaves")
      ->required();
  gen->add_flag("--relabel", gen_relabel);
  gen->add_option("-o,--output", out_path);
  gen->callback([&] {
    auto spec = parse_generator(gen_spec, globals.seed);
    spec.relabel = gen_relabel;
    emit(out_path, "c " + spec.str() + "\n" + serialize_graph(generate(spec)));
  });

  // approx
  auto* approx = app.add_subcommand("approx", "certified (r,c)-domination approximation");
  GraphSource approx_src;
  ProblemFlags approx_flags;
  approx_src.add(approx);
  approx_flags.add(approx, false);
  approx->callback([&] {
    Graph g = approx_src.load(globals);
    if (approx_flags.c == 1) {
      auto res = approx_dominating(g, all_vertices(g), approx_flags.r);
      std::cout << "dominators " << join(res.dominators) << "\nwitnesses " << join(res.witnesses)
                << "\nsize " << res.dominators.size() << "\nlower_bound " << res.witnesses.size()
                << "\ncertified_ratio " << res.certified_ratio.str() << '\n';
      return;
    }
    auto res = approx_rc_dominating(g, approx_flags.r, approx_flags.c);
    if (!res.feasible) {
      std::cout << "infeasible\n";
      return;
    }
    std::cout << "dominators " << join(res.dominators) << "\nsize " << res.dominators.size()
              << "\nstages";
    for (auto s : res.stage_sizes) std::cout << ' ' << s;
    std::cout << '\n';
  });

  // lily
  auto* lily = app.add_subcommand("lily", "find and verify a uniform water lily");
  GraphSource lily_src;
  lily_src.add(lily);
  LilyParams lp;
  lp.depth = 1;
  lp.radius = 2;
  lily->add_option("--depth", lp.depth)->check(CLI::PositiveNumber);
  lily->add_option("--radius", lp.radius)->check(CLI::PositiveNumber);
  lily->add_option("--adhesion", lp.adhesion)->check(CLI::PositiveNumber);
  lily->add_option("--min-centres", lp.min_centres);
  lily->add_flag("--signature", lp.use_signature, "require a shared pad signature");
  lily->callback([&] {
    Graph g = lily_src.load(globals);
    LilyFinder finder(g, lp);
    if (!finder.feasible()) {
      std::cout << "no (depth, adhesion)-dominating set exists\n";
      return;
    }
    auto labels = g.labels();
    auto found = finder.find(all_vertices(g), {}, labels);
    if (!found) {
      std::cout << "no lily found\n";
      return;
    }
    std::cout << "roots " << join(found->roots) << "\ncentres " << join(found->centres) << '\n';
    auto report = verify_lily(g, *found, labels);
    std::cout << report.str();
    if (!report.ok()) exit_code = kDisagree;
  });

  // core
  auto* core = app.add_subcommand("core", "compute a constraint or solution core");
  GraphSource core_src;
  ProblemFlags core_flags;
  core_src.add(core);
  core_flags.add(core);
  core->callback([&] {
    Graph g = core_src.load(globals);
    auto prep = prepare_bikernel(g, parse_problem(core_flags.problem), core_flags.params(),
                                 kernel_options(globals));
    if (prep.infeasible) {
      std::cout << "infeasible\n";
      return;
    }
    std::cout << "constraints " << join(prep.constraints) << "\ncandidates "
              << join(prep.candidates) << "\npeels " << prep.trace.size() << '\n';
  });

  // bikernel / kernel
  auto add_kernel_cmd = [&](const char* name, const char* help, bool plain) {
    auto* sub = app.add_subcommand(name, help);
    auto src = std::make_shared<GraphSource>();
    auto flags = std::make_shared<ProblemFlags>();
    auto k = std::make_shared<std::int64_t>(0);
    auto out = std::make_shared<std::string>();
    src->add(sub);
    flags->add(sub);
    sub->add_option("--k,-k", *k, "budget")->required();
    sub->add_option("-o,--output", *out);
    sub->callback([&, src, flags, k, out, plain] {
      Graph g = src->load(globals);
      auto problem = parse_problem(flags->problem);
      auto inst = plain ? kernelize(g, problem, flags->params(), *k, kernel_options(globals))
                        : emit_bikernel(prepare_bikernel(g, problem, flags->params(),
                                                         kernel_options(globals)),
                                        *k);
      emit(*out, serialize_instance(inst));
    });
  };
  add_kernel_cmd("bikernel", "annotated kernel", false);
  add_kernel_cmd("kernel", "plain kernel via gadgets", true);

  // multikernel
  auto* multi = app.add_subcommand("multikernel", "one kernel for several problems");
  GraphSource multi_src;
  ProblemFlags multi_flags;
  std::string family = "dom", multi_out;
  multi_src.add(multi);
  multi_flags.add(multi, false);
  multi->add_option("--family", family, "dom (dom/total/roman at radius r) or domind")
      ->check(CLI::IsMember({"dom", "domind"}));
  multi->add_option("-o,--output", multi_out);
  multi->callback([&] {
    Graph g = multi_src.load(globals);
    std::ostringstream head;
    AnnotatedInstance inst;
    if (family == "dom") {
      auto mk = multikernel_domination_family(g, multi_flags.r, kernel_options(globals));
      head << "c offsets dom " << mk.dom_offset << " total " << mk.total_offset << " roman "
           << mk.roman_offset << '\n';
      inst = plain_instance(mk.graph, Problem::rcdom, multi_flags.params(), 0);
      inst.origin = mk.origin;
      inst.offset = mk.dom_offset;
    } else {
      auto mk = multikernel_dom_ind(g, multi_flags.lambda, multi_flags.mu,
                                    kernel_options(globals));
      head << "c sigma " << mk.sigma << " offsets";
      for (auto [r, c] : mk.radius_offsets) head << ' ' << r << ':' << c;
      head << '\n';
      inst = plain_instance(mk.graph, Problem::rcdom, multi_flags.params(), 0);
      inst.origin = mk.origin;
    }
    emit(multi_out, head.str() + serialize_instance(inst));
  });

  // solve
  auto* solve = app.add_subcommand("solve", "exact optimum by exhaustive search");
  std::string solve_path;
  ProblemFlags solve_flags;
  solve->add_option("input", solve_path, "graph or instance file")->required();
  solve_flags.add(solve);
  solve->callback([&] {
    std::ifstream in(solve_path);
    if (!in) throw InputError("cannot open '" + solve_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto inst = parse_instance(buf.str());
    bool annotated = buf.str().find("\nproblem ") != std::string::npos;
    if (!annotated || solve_flags.problem_opt->count() > 0) {
      inst.problem = parse_problem(solve_flags.problem);
      inst.params = solve_flags.params();
    }
    OracleOptions opts{globals.size_guard};
    auto opt = annotated_optimum(inst, opts);
    std::cout << "optimum " << optimum_str(opt) << '\n';
    if (annotated)
      std::cout << "decision " << (decide(inst.problem, opt, inst.k) ? "yes" : "no") << '\n';
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check kernels against the exact solver");
  verify->require_subcommand(1);

  auto* vpipe = verify->add_subcommand("pipeline", "bikernel and kernel agreement over k");
  GraphSource vp_src;
  ProblemFlags vp_flags;
  std::int64_t k_lo = 0, k_hi = -1;
  bool kv = false;
  vp_src.add(vpipe);
  vp_flags.add(vpipe);
  vpipe->add_option("--k-lo", k_lo);
  vpipe->add_option("--k-hi", k_hi, "default: n");
  vpipe->add_flag("--kv", kv, "print key=value lines");
  vpipe->callback([&] {
    Graph g = vp_src.load(globals);
    HarnessOptions opts;
    opts.oracle.size_guard = globals.size_guard;
    opts.kernel = kernel_options(globals);
    auto rep = verify_pipeline(g, parse_problem(vp_flags.problem), vp_flags.params(), k_lo,
                               k_hi < 0 ? static_cast<std::int64_t>(g.size()) : k_hi, opts);
    std::cout << (kv ? rep.key_values() : rep.text());
    if (!rep.ok()) exit_code = kDisagree;
  });

  auto* vpeel = verify->add_subcommand("peel", "optimum after every core peel");
  GraphSource vpe_src;
  ProblemFlags vpe_flags;
  vpe_src.add(vpeel);
  vpe_flags.add(vpeel);
  vpeel->callback([&] {
    Graph g = vpe_src.load(globals);
    HarnessOptions opts;
    opts.oracle.size_guard = globals.size_guard;
    opts.kernel = kernel_options(globals);
    auto rep = verify_peel_safety(g, parse_problem(vpe_flags.problem), vpe_flags.params(), opts);
    std::cout << "optimum " << optimum_str(rep.original) << "\npeels " << rep.steps
              << "\nfailures " << rep.failures << '\n'
              << rep.detail;
    if (!rep.ok()) exit_code = kDisagree;
  });

  auto* vmulti = verify->add_subcommand("multikernel", "offset identities");
  GraphSource vm_src;
  ProblemFlags vm_flags;
  std::string vm_family = "dom";
  vm_src.add(vmulti);
  vm_flags.add(vmulti, false);
  vmulti->add_option("--family", vm_family)->check(CLI::IsMember({"dom", "domind"}));
  vmulti->callback([&] {
    Graph g = vm_src.load(globals);
    HarnessOptions opts;
    opts.oracle.size_guard = globals.size_guard;
    opts.kernel = kernel_options(globals);
    auto rep = vm_family == "dom"
                   ? verify_multikernel_family(g, vm_flags.r, opts)
                   : verify_multikernel_dom_ind(g, vm_flags.lambda, vm_flags.mu, opts);
    std::cout << rep.text();
    if (!rep.ok()) exit_code = kDisagree;
  });

  auto* vproj = verify->add_subcommand("projkernel", "projection kernel properties");
  GraphSource vpk_src;
  ProblemFlags vpk_flags;
  std::vector<Vertex> x_ids;
  vpk_src.add(vproj);
  vpk_flags.add(vproj, false);
  vproj->add_option("--x", x_ids, "vertex set X (default: all)");
  vproj->callback([&] {
    Graph g = vpk_src.load(globals);
    VertexSet x = x_ids.empty() ? all_vertices(g) : make_set(x_ids);
    for (Vertex v : x) g.check_vertex(v);
    auto kern = projection_kernel(g, x, vpk_flags.r, vpk_flags.c);
    auto check = verify_projection_kernel(g, x, kern.kept, vpk_flags.r, vpk_flags.c);
    std::cout << "kept " << kern.kept.size() << " of " << g.size() << "\ndistances "
              << (check.distances_preserved ? "ok" : "WRONG") << "\nprofiles "
              << (check.profiles_realized ? "ok" : "WRONG") << '\n'
              << check.detail;
    if (!check.ok()) exit_code = kDisagree;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kGuard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const InternalError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kDisagree;
  }
  return exit_code;
}
