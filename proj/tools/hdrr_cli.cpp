#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hdrr/catalog.hpp"
#include "hdrr/io.hpp"
#include "hdrr/ustcon.hpp"

namespace {

using namespace hdrr;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

io::json load_doc(const std::string& path) { return io::json::parse(slurp(path)); }

Instance load_instance(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".cnf")
    return io::parse_dimacs_cnf(slurp(path));
  auto [type, payload] = io::open_document(load_doc(path));
  if (type != "instance") throw io::ParseError("expected an instance document");
  return io::instance_from_json(payload);
}

RobustInstance load_robust(const std::string& path) {
  auto [type, payload] = io::open_document(load_doc(path));
  if (type != "robust-instance") throw io::ParseError("expected a robust instance document");
  return io::robust_from_json(payload);
}

QaeFormula load_qae(const std::string& path) {
  auto [type, payload] = io::open_document(load_doc(path));
  if (type != "qae") throw io::ParseError("expected a qae document");
  return io::qae_from_json(payload);
}

struct GlobalOpts {
  std::string measure = "symmetric";
  std::uint64_t cap = 1ull << 22;
  std::int64_t timeout_ms = 0;

  Measure parse_measure() const {
    auto m = measure_from_name(measure);
    if (!m) throw CLI::ValidationError("--measure must be symmetric or additions");
    return *m;
  }
  RobustOptions robust_options() const {
    RobustOptions o;
    o.budget.max_steps = cap;
    if (timeout_ms > 0) o.timeout = std::chrono::milliseconds(timeout_ms);
    return o;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Hamming distance recoverable robust decision problems"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--measure", g.measure, "distance measure: symmetric|additions");
  app.add_option("--cap", g.cap, "enumeration budget");
  app.add_option("--timeout", g.timeout_ms, "solver timeout in milliseconds");

  // solve
  auto* solve = app.add_subcommand("solve", "decide a robust instance");
  std::string solve_file, witness_out;
  solve->add_option("file", solve_file)->required();
  solve->add_option("--witness", witness_out, "write the witness tree as JSON");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "apply a catalog reduction");
  std::string reduce_entry, reduce_file, reduce_out = "-", table_out;
  reduce->add_option("--entry", reduce_entry)->required();
  reduce->add_option("file", reduce_file)->required();
  reduce->add_option("-o,--out", reduce_out);
  reduce->add_option("--table", table_out, "write the gadget table as JSON");

  // lift
  auto* lift = app.add_subcommand("lift", "lift a robust 3sat instance");
  std::string lift_entry, lift_file, lift_out = "-";
  lift->add_option("--entry", lift_entry)->required();
  lift->add_option("file", lift_file)->required();
  lift->add_option("-o,--out", lift_out);

  // scenarios
  auto* scen = app.add_subcommand("scenarios", "scenario utilities");
  auto* scen_count = scen->add_subcommand("count", "count encoded scenarios");
  auto* scen_expand = scen->add_subcommand("expand", "list active sets");
  std::string scen_file_c, scen_file_e;
  int scen_stage_c = 0, scen_stage_e = 0;
  scen_count->add_option("file", scen_file_c)->required();
  scen_count->add_option("--stage", scen_stage_c);
  scen_expand->add_option("file", scen_file_e)->required();
  scen_expand->add_option("--stage", scen_stage_e);

  // check
  auto* check = app.add_subcommand("check", "reduction property checks");
  auto* chk_pre = check->add_subcommand("preimage", "pre-image uniqueness");
  auto* chk_mod = check->add_subcommand("modularity", "removal modularity");
  auto* chk_sound = check->add_subcommand("soundness", "oracle equivalence sweep");
  std::string chk_entry, chk_file;
  std::int64_t chk_cap = 2;
  for (auto* c : {chk_pre, chk_mod}) {
    c->add_option("--entry", chk_entry)->required();
    c->add_option("file", chk_file)->required();
  }
  chk_sound->add_option("--entry", chk_entry)->required();
  chk_sound->add_option("--exhaustive-cap", chk_cap);

  // qae
  auto* qae = app.add_subcommand("qae", "quantified formula utilities");
  auto* qae_eval = qae->add_subcommand("eval", "evaluate exactly");
  auto* qae_reduce = qae->add_subcommand("reduce", "build the robust 3sat instance");
  std::string qae_file_e, qae_file_r, qae_enc = "xor", qae_out = "-";
  std::size_t qae_stages = 1;
  qae_eval->add_option("file", qae_file_e)->required();
  qae_reduce->add_option("file", qae_file_r)->required();
  qae_reduce->add_option("--encoding", qae_enc, "xor|gamma");
  qae_reduce->add_option("--stages", qae_stages);
  qae_reduce->add_option("-o,--out", qae_out);

  // export
  auto* exp = app.add_subcommand("export", "emit dot/qdimacs/json");
  std::string exp_format = "json", exp_file, exp_out = "-";
  exp->add_option("--format", exp_format, "dot|qdimacs|json");
  exp->add_option("file", exp_file)->required();
  exp->add_option("-o,--out", exp_out);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
  std::string gen_problem = "3sat", gen_out = "-";
  std::uint64_t gen_seed = 1;
  std::vector<std::int64_t> gen_size;
  gen_cmd->add_option("--problem", gen_problem,
                      "3sat | qae | graph family tag | robust-3sat");
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--size", gen_size, "family-specific size numbers");
  gen_cmd->add_option("-o,--out", gen_out);

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    RobustInstance ri = load_robust(solve_file);
    Measure m = g.parse_measure();
    for (auto& st : ri.stages)
      if (st.measure != m && app.count("--measure")) {
        // Caller overrides the serialized measure with doubled/halved budget
        // left untouched; instances carry their own budgets.
        st.measure = m;
      }
    RobustResult r = solve_robust(ri, g.robust_options());
    std::cout << (r.decision ? "YES" : "NO") << "\n";
    if (r.decision && !witness_out.empty())
      spit(witness_out, io::document("witness", io::to_json(*r.witness)).dump(2) + "\n");
    return r.decision ? kExitYes : kExitNo;
  }

  if (reduce->parsed()) {
    const CatalogEntry& entry = catalog::entry(reduce_entry);
    Reduced r = apply_reduction(entry, load_instance(reduce_file));
    spit(reduce_out, io::document("instance", io::to_json(r.target)).dump(2) + "\n");
    if (!table_out.empty())
      spit(table_out, io::document("gadget-table", io::to_json(r.table)).dump(2) + "\n");
    return kExitYes;
  }

  if (lift->parsed()) {
    const CatalogEntry& entry = catalog::entry(lift_entry);
    RobustInstance lifted = lift_to_robust(entry, load_robust(lift_file));
    spit(lift_out, io::document("robust-instance", io::to_json(lifted)).dump(2) + "\n");
    return kExitYes;
  }

  if (scen_count->parsed() || scen_expand->parsed()) {
    bool counting = scen_count->parsed();
    RobustInstance ri = load_robust(counting ? scen_file_c : scen_file_e);
    std::size_t stage = static_cast<std::size_t>(counting ? scen_stage_c : scen_stage_e);
    if (stage >= ri.stages.size()) throw CLI::ValidationError("stage out of range");
    if (counting) {
      std::cout << count_scenarios(ri.stages[stage].scenarios).str() << "\n";
    } else {
      for (const auto& a : expand(ri.stages[stage].scenarios, g.cap)) {
        io::json row = io::json::array();
        for (const auto& e : a) row.push_back(io::to_json(e));
        std::cout << row.dump() << "\n";
      }
    }
    return kExitYes;
  }

  if (chk_pre->parsed()) {
    const CatalogEntry& entry = catalog::entry(chk_entry);
    Reduced r = apply_reduction(entry, load_instance(chk_file));
    bool ok = check_preimage_uniqueness(r.table, r.target);
    std::cout << (ok ? "pass" : "fail") << "\n";
    return ok ? kExitYes : kExitNo;
  }
  if (chk_mod->parsed()) {
    const CatalogEntry& entry = catalog::entry(chk_entry);
    Instance src = load_instance(chk_file);
    bool ok = true;
    for (const auto& el : all_elements(src)) {
      if (!is_removable(src, el)) continue;
      if (!check_modularity(entry, src, el)) {
        ok = false;
        std::cout << "fail " << el.str() << "\n";
      }
    }
    std::cout << (ok ? "pass" : "fail") << "\n";
    return ok ? kExitYes : kExitNo;
  }
  if (chk_sound->parsed()) {
    const CatalogEntry& entry = catalog::entry(chk_entry);
    if (entry.source != Problem::ThreeSat)
      throw CLI::ValidationError("soundness sweep drives 3sat-source entries");
    std::size_t checked = 0;
    for (const auto& f :
         gen::all_3sat_formulas(static_cast<int>(chk_cap), static_cast<int>(chk_cap))) {
      bool src_yes = brute_solve(f).has_value();
      bool tgt_yes = brute_solve(apply_reduction(entry, f).target).has_value();
      if (src_yes != tgt_yes) {
        std::cout << "fail after " << checked << " instances\n";
        return kExitNo;
      }
      ++checked;
    }
    std::cout << "pass " << checked << " instances\n";
    return kExitYes;
  }

  if (qae_eval->parsed()) {
    bool value = eval_qbf(load_qae(qae_file_e));
    std::cout << (value ? "YES" : "NO") << "\n";
    return value ? kExitYes : kExitNo;
  }
  if (qae_reduce->parsed()) {
    QaeFormula f = load_qae(qae_file_r);
    QaeEncoding enc;
    if (qae_enc == "xor") enc = QaeEncoding::Xor;
    else if (qae_enc == "gamma") enc = QaeEncoding::Gamma;
    else throw CLI::ValidationError("--encoding must be xor or gamma");
    RobustInstance ri = reduce_qae_multistage(f, qae_stages, enc, g.parse_measure());
    spit(qae_out, io::document("robust-instance", io::to_json(ri)).dump(2) + "\n");
    return kExitYes;
  }

  if (exp->parsed()) {
    if (exp_format == "qdimacs") {
      spit(exp_out, io::emit_qdimacs(load_qae(exp_file)));
      return kExitYes;
    }
    if (exp_format == "dot") {
      spit(exp_out, io::emit_dot(load_instance(exp_file)));
      return kExitYes;
    }
    if (exp_format == "json") {
      auto doc = load_doc(exp_file);
      spit(exp_out, doc.dump(2) + "\n");
      return kExitYes;
    }
    throw CLI::ValidationError("--format must be dot, qdimacs or json");
  }

  if (gen_cmd->parsed()) {
    auto size_at = [&](std::size_t i, std::int64_t fallback) {
      return i < gen_size.size() ? gen_size[i] : fallback;
    };
    if (gen_problem == "3sat") {
      Instance inst = gen::random_3sat(gen_seed, static_cast<int>(size_at(0, 3)),
                                       static_cast<int>(size_at(1, 4)));
      spit(gen_out, io::document("instance", io::to_json(inst)).dump(2) + "\n");
      return kExitYes;
    }
    if (gen_problem == "qae") {
      std::vector<int> blocks;
      for (std::size_t i = 0; i < std::max<std::size_t>(3, gen_size.size() - 1); ++i)
        blocks.push_back(static_cast<int>(size_at(i, 1)));
      QaeFormula f = gen::random_qae(gen_seed, blocks,
                                     static_cast<int>(size_at(blocks.size(), 3)));
      spit(gen_out, io::document("qae", io::to_json(f)).dump(2) + "\n");
      return kExitYes;
    }
    if (gen_problem == "robust-3sat") {
      RobustInstance ri = gen::random_hdrr_3sat(
          gen_seed, static_cast<int>(size_at(0, 2)), static_cast<int>(size_at(1, 1)),
          static_cast<int>(size_at(2, 2)), static_cast<int>(size_at(3, 3)),
          g.parse_measure());
      spit(gen_out, io::document("robust-instance", io::to_json(ri)).dump(2) + "\n");
      return kExitYes;
    }
    if (gen_problem == "ustcon-uhc") {
      Instance src = gen::random_graph(gen_seed, Problem::UndirectedHamCycle,
                                       static_cast<int>(size_at(0, 4)),
                                       static_cast<int>(size_at(1, 60)));
      RobustInstance ri = reduce_uhc_to_robust_ustcon(src, g.parse_measure());
      spit(gen_out, io::document("robust-instance", io::to_json(ri)).dump(2) + "\n");
      return kExitYes;
    }
    auto family = problem_from_name(gen_problem);
    if (!family) throw CLI::ValidationError("unknown --problem tag");
    Instance inst = gen::random_graph(gen_seed, *family, static_cast<int>(size_at(0, 4)),
                                      static_cast<int>(size_at(1, 50)));
    if (inst.problem == Problem::VertexCover || inst.problem == Problem::DominatingSet ||
        inst.problem == Problem::IndependentSet || inst.problem == Problem::Clique ||
        inst.problem == Problem::FeedbackVertexSet)
      inst.params["k"] = size_at(2, inst.universe.size() / 2);
    spit(gen_out, io::document("instance", io::to_json(inst)).dump(2) + "\n");
    return kExitYes;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    return CLI::App{}.exit(e) == 0 ? kExitYes : kExitUsage;
  } catch (const hdrr::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const hdrr::TimeoutExceeded& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
