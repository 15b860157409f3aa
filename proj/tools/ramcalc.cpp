// Command-line front end.  Every command is a thin adapter: parse flags,
// call the library, print text or newline-delimited JSON.  Exit codes:
// 0 ok, 1 usage/parse, 2 domain, 3 falsified check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ramcalc/acceptance.hpp"
#include "ramcalc/json_io.hpp"

namespace {

using namespace ramcalc;

struct Opts {
  std::uint64_t p = 3;
  int qdeg = 1;
  int a = 0, b = 0;
  int da = 0, db = 0;
  std::string theorem;
  int max_mu = 3, max_deg = 3, trials = 50;
  std::uint64_t seed = 1;
  bool json = false;
  std::string expr, in_file;
};

FieldDesc base_field(const Opts& o) {
  return field_make(o.p, o.qdeg, o.a, o.b);
}

std::vector<std::string> inputs(const Opts& o) {
  if (o.expr.empty() == o.in_file.empty())
    throw std::invalid_argument("provide exactly one of --expr or --in");
  if (!o.expr.empty()) return {o.expr};
  std::ifstream in(o.in_file);
  if (!in) throw std::invalid_argument("cannot open " + o.in_file);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    lines.push_back(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
  }
  return lines;
}

void print_graded(const GradedForm& g) {
  std::cout << form_to_string(g.form) << " @ " << g.level;
}

int cmd_reduce(const Opts& o) {
  FieldDesc k = base_field(o);
  for (const std::string& line : inputs(o)) {
    ASCharacter c = make_character(parse_elem(k, line));
    if (o.json) {
      std::cout << character_to_json(c).dump() << "\n";
    } else {
      std::cout << to_surface_string(c.rep) << "  witness "
                << to_surface_string(c.witness) << "  "
                << classification_name(classify(c)) << "\n";
    }
  }
  return 0;
}

int cmd_conductor(const Opts& o) {
  FieldDesc k = base_field(o);
  for (const std::string& line : inputs(o)) {
    ConductorReport rep =
        conductor_report(make_character(parse_elem(k, line)));
    if (o.json) {
      std::cout << conductor_to_json(rep).dump() << "\n";
      continue;
    }
    std::cout << "swan " << rep.swan << "  dimtot " << rep.total_dim << "  "
              << classification_name(rep.classification);
    if (rep.char_form) {
      std::cout << "  char_form ";
      print_graded(*rep.char_form);
    }
    if (rep.refined_swan) {
      std::cout << "  rsw ";
      print_graded(*rep.refined_swan);
    }
    std::cout << "  cc(" << rep.cc.zero_section << ", " << rep.cc.divisor
              << ", " << rep.cc.direction << ")\n";
  }
  return 0;
}

int cmd_charform(const Opts& o) {
  FieldDesc k = base_field(o);
  for (const std::string& line : inputs(o)) {
    ASCharacter c = make_character(parse_elem(k, line));
    GradedForm cf = char_form(c), rs = refined_swan(c);
    if (o.json) {
      std::cout << ojson{{"char_form", form_to_json(cf)},
                         {"rsw", form_to_json(rs)}}
                       .dump()
                << "\n";
    } else {
      std::cout << "char_form ";
      print_graded(cf);
      std::cout << "  rsw ";
      print_graded(rs);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_basechange(const Opts& o) {
  FieldDesc k = base_field(o);
  ExtensionDesc ext = ext_make(k, o.da, o.db);
  for (const std::string& line : inputs(o)) {
    ASCharacter ct =
        transport(make_character(parse_elem(k, line)), ext);
    if (o.json) {
      std::cout << ojson{{"field", field_to_json(ext.top)},
                         {"image", to_surface_string(ct.rep)},
                         {"swan", swan(ct)},
                         {"dimtot", total_dim(ct)}}
                       .dump()
                << "\n";
    } else {
      std::cout << "image " << to_surface_string(ct.rep) << "  swan "
                << swan(ct) << "  dimtot " << total_dim(ct) << "\n";
    }
  }
  return 0;
}

int cmd_check(const Opts& o) {
  FieldDesc k = base_field(o);
  int rc = 0;
  for (const std::string& line : inputs(o)) {
    CheckReport r;
    if (o.theorem == "right") {
      r = check_thm_right(make_character(parse_elem(k, line)),
                          ext_make(k, o.da, o.db));
    } else if (o.theorem == "left") {
      ExtensionDesc ext = ext_make(k, o.da, o.db);
      r = check_thm_left(make_character(parse_elem(ext.top, line)), ext);
    } else if (o.theorem == "frobenius") {
      if (o.db != 0 && o.db != o.da)
        throw std::invalid_argument(
            "frobenius check runs along the diagonal: give --da n only");
      r = check_frobenius(make_character(parse_elem(k, line)), o.da);
    } else if (o.theorem == "theta") {
      r = check_theta(make_character(parse_elem(k, line)),
                      ext_make(k, o.da, o.db));
    } else {
      ExtensionDesc ext = ext_make(k, o.da, o.db);
      r = check_sigma(make_character(parse_elem(ext.top, line)), ext);
    }
    if (o.json) {
      std::cout << check_to_json(r).dump() << "\n";
    } else {
      std::cout << r.theorem << " " << check_status_name(r.status);
      auto dump_map = [](const char* name,
                         const std::map<std::string, long long>& m) {
        for (const auto& [key, v] : m)
          std::cout << "  " << name << "." << key << " " << v;
      };
      dump_map("lhs", r.lhs);
      dump_map("rhs", r.rhs);
      dump_map("bound", r.bound);
      dump_map("slack", r.slack);
      for (const auto& [key, v] : r.notes) std::cout << "  " << key << " " << v;
      std::cout << "\n";
    }
    if (r.status == CheckStatus::fail) rc = 3;
  }
  return rc;
}

int cmd_oracle(const Opts& o) {
  FieldDesc k = base_field(o);
  OracleBounds bounds{o.max_mu, o.max_deg, o.trials, o.seed};
  for (const std::string& line : inputs(o)) {
    OracleResult res =
        oracle_conductor(make_character(parse_elem(k, line)), bounds);
    if (o.json) {
      std::cout << oracle_to_json(res).dump() << "\n";
    } else {
      std::cout << "sw " << rat_to_string(res.sw_ratio) << " ceil "
                << res.sw_ceil << " (mu " << res.sw_witness.mu << ", curve "
                << res.sw_witness.curve << ")  dt "
                << rat_to_string(res.dt_ratio) << " ceil " << res.dt_ceil
                << " (mu " << res.dt_witness.mu << ", curve "
                << res.dt_witness.curve << ")  curves " << res.curves_tried
                << "\n";
    }
  }
  return 0;
}

int cmd_corpus(const Opts& o) {
  std::vector<CriterionResult> rs;
  if (o.json) {
    std::ostringstream sink;
    rs = run_acceptance(sink);
    for (const CriterionResult& r : rs)
      std::cout << ojson{{"id", r.id},
                         {"label", r.label},
                         {"passed", r.passed},
                         {"detail", r.detail}}
                       .dump()
                << "\n";
  } else {
    rs = run_acceptance(std::cout);
  }
  for (const CriterionResult& r : rs)
    if (!r.passed) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact calculator for wild ramification of degree-p cyclic covers over "
      "stacked Laurent fields"};
  app.require_subcommand(1);

  Opts o;
  auto add_field = [&](CLI::App* c) {
    c->add_option("--p", o.p, "residue characteristic (odd prime)");
    c->add_option("--qdeg", o.qdeg, "degree of the constant field over its prime field");
    c->add_option("--a", o.a, "x-root depth of the base field");
    c->add_option("--b", o.b, "y-root depth of the base field");
  };
  auto add_io = [&](CLI::App* c) {
    c->add_option("--expr", o.expr, "expression in x and y");
    c->add_option("--in", o.in_file, "file of expressions, one per line, # comments");
    c->add_flag("--json", o.json, "emit newline-delimited JSON");
  };
  auto add_ext = [&](CLI::App* c) {
    c->add_option("--da", o.da, "x-root depth increase");
    c->add_option("--db", o.db, "y-root depth increase");
  };

  int rc = 0;
  CLI::App* reduce =
      app.add_subcommand("reduce", "canonical representative and witness");
  add_field(reduce);
  add_io(reduce);
  reduce->callback([&] { rc = cmd_reduce(o); });

  CLI::App* conductor = app.add_subcommand(
      "conductor", "conductors, characteristic forms, cycle coefficients");
  add_field(conductor);
  add_io(conductor);
  conductor->callback([&] { rc = cmd_conductor(o); });

  CLI::App* charform = app.add_subcommand(
      "charform", "characteristic form and its logarithmic refinement");
  add_field(charform);
  add_io(charform);
  charform->callback([&] { rc = cmd_charform(o); });

  CLI::App* basechange = app.add_subcommand(
      "basechange", "transport a character to a deeper field");
  add_field(basechange);
  add_ext(basechange);
  add_io(basechange);
  basechange->callback([&] { rc = cmd_basechange(o); });

  CLI::App* check =
      app.add_subcommand("check", "verify one bound or diagram instance");
  add_field(check);
  add_ext(check);
  add_io(check);
  check
      ->add_option("--theorem", o.theorem,
                   "which statement to check: right, left, frobenius, theta, sigma")
      ->required()
      ->check(CLI::IsMember({"right", "left", "frobenius", "theta", "sigma"}));
  check->callback([&] { rc = cmd_check(o); });

  CLI::App* oracle = app.add_subcommand(
      "oracle", "recompute conductors by restriction to curves");
  add_field(oracle);
  add_io(oracle);
  oracle->add_option("--max-mu", o.max_mu, "largest contact order searched");
  oracle->add_option("--max-deg", o.max_deg, "largest curve degree searched");
  oracle->add_option("--trials", o.trials, "random curves tried");
  oracle->add_option("--seed", o.seed, "random seed");
  oracle->callback([&] { rc = cmd_oracle(o); });

  CLI::App* corpus = app.add_subcommand(
      "corpus", "run the release gate and print its verdict table");
  corpus->add_flag("--json", o.json, "emit one JSON verdict per criterion");
  corpus->callback([&] { rc = cmd_corpus(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
