#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "antiauto/classify.hpp"
#include "antiauto/constructions.hpp"
#include "antiauto/error.hpp"
#include "antiauto/io.hpp"
#include "antiauto/linear.hpp"
#include "antiauto/search.hpp"

namespace antiauto::cli {

namespace {

struct Config {
  std::string group;
  std::string mode = "anti";
  std::string format = "text";
  std::string method;
  std::string proposition;
  std::string input;
  std::uint64_t limit = 0;
  std::uint64_t max_order = 16;
  std::uint64_t budget = 0;
  unsigned jobs = 1;
};

SearchBudget make_budget(const Config& cfg) {
  SearchBudget b;
  b.jobs = cfg.jobs;
  if (cfg.budget != 0) {
    b.max_group_order = cfg.budget;
    b.max_existence_order = cfg.budget;
  }
  return b;
}

void print_verdict(std::ostream& out, const Config& cfg, const ClassificationVerdict& v) {
  if (cfg.format == "json") {
    out << verdict_to_json(v).dump() << '\n';
    return;
  }
  out << "status: " << to_string(v.status) << '\n';
  if (v.method) {
    out << "method: " << to_string(*v.method);
    for (std::size_t i = 0; i < v.components.size(); ++i)
      out << (i == 0 ? " (" : " + ") << to_string(v.components[i])
          << (i + 1 == v.components.size() ? ")" : "");
    out << '\n';
  }
  if (v.reason) out << "reason: " << to_string(*v.reason) << '\n';
  if (!v.budget_note.empty()) out << "note: " << v.budget_note << '\n';
  if (v.witness) out << "witness:\n" << map_to_pairs_text(*v.witness);
}

void print_map(std::ostream& out, const Config& cfg, const TableMap& f) {
  if (cfg.format == "json")
    out << map_to_json(f).dump() << '\n';
  else
    out << map_to_pairs_text(f);
}

int cmd_exists(const Config& cfg, std::ostream& out) {
  const auto g = parse_group(cfg.group);
  const auto budget = make_budget(cfg);
  const auto v = cfg.mode == "bianti" ? decide_biantiautomorphism(g, budget)
                                      : decide_antiautomorphism(g, budget);
  print_verdict(out, cfg, v);
  return v.status == Status::Unknown ? kUnknown : kOk;
}

int cmd_count(const Config& cfg, std::ostream& out) {
  const auto g = parse_group(cfg.group);
  const auto budget = make_budget(cfg);
  const std::uint64_t count = cfg.mode == "bianti"
                                  ? count_biantiautomorphisms_bruteforce(g, budget.enumeration)
                                  : count_antiautomorphisms(g, budget);
  if (cfg.format == "json") {
    Json j;
    j["group"] = format_group(g);
    j["mode"] = cfg.mode;
    j["count"] = count;
    out << j.dump() << '\n';
  } else {
    out << count << '\n';
  }
  return kOk;
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  const auto g = parse_group(cfg.group);
  auto budget = make_budget(cfg);
  budget.max_solutions = cfg.limit;
  bool first = true;
  for_each_antiautomorphism(
      g,
      [&](const TableMap& f) {
        if (cfg.format != "json" && !first) out << '\n';
        first = false;
        print_map(out, cfg, f);
        return true;
      },
      budget);
  return kOk;
}

TableMap construct(const AbelianGroup& g, const std::string& method) {
  const auto inapplicable = [&](const std::string& why) {
    return Error(ErrorKind::MethodInapplicable,
                 "method '" + method + "' does not apply to " + format_group(g) + ": " + why);
  };
  if (method == "negation") return negation_antiauto(g);
  if (method == "elementary2") {
    const bool all_two = std::all_of(g.moduli().begin(), g.moduli().end(),
                                     [](std::uint64_t d) { return d == 2; });
    if (!all_two || g.rank() < 2) throw inapplicable("needs Z_2^r with r >= 2");
    return elementary2_antiauto(static_cast<unsigned>(g.rank()));
  }
  if (method == "companion2") {
    if (!g.is_homogeneous() || g.rank() < 2 || !std::has_single_bit(g.modulus(0)))
      throw inapplicable("needs (Z_{2^m})^n with n >= 2");
    return homogeneous2_antiauto(static_cast<unsigned>(std::countr_zero(g.modulus(0))),
                                 static_cast<unsigned>(g.rank()), kMaxTableOrder);
  }
  if (method == "table") {
    if (g == AbelianGroup{2, 2}) return klein_antiauto();
    if (g == AbelianGroup{2, 2, 2}) return z2cubed_antiauto();
    if (g == AbelianGroup{2, 4}) return z2_z4_antiauto();
    throw inapplicable("explicit tables exist for 2,2 and 2,2,2 and 2,4");
  }
  if (method.rfind("multiplier:", 0) == 0) {
    if (!g.is_cyclic_form()) throw inapplicable("needs a cyclic group");
    const auto params = method.substr(std::string("multiplier:").size());
    const auto comma = params.find(',');
    std::uint64_t a = 0, b = 0;
    try {
      std::size_t used = 0;
      a = std::stoull(params.substr(0, comma), &used);
      if (used != params.substr(0, comma).size()) throw std::invalid_argument("a");
      if (comma != std::string::npos) {
        const auto rest = params.substr(comma + 1);
        b = std::stoull(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("b");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "expected multiplier:a[,b], got '" + method + "'");
    }
    return affine_antiauto(g.order(), a, b);
  }
  throw Error(ErrorKind::ParseError, "unknown construction method '" + method + "'");
}

int cmd_construct(const Config& cfg, std::ostream& out) {
  const auto g = parse_group(cfg.group);
  print_map(out, cfg, construct(g, cfg.method));
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto report = verify_paper(cfg.proposition, cfg.max_order, make_budget(cfg));
  if (cfg.format == "json") {
    out << report_to_json(report).dump() << '\n';
  } else {
    for (const auto& line : report.lines)
      out << to_string(line.outcome) << ' ' << line.subject << ": " << line.detail << '\n';
    out << report.proposition << " up to order " << report.max_order << ": "
        << report.count(Outcome::Pass) << " pass, " << report.count(Outcome::Fail) << " fail, "
        << report.count(Outcome::Skip) << " skip\n";
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_check(const Config& cfg, std::ostream& out, std::istream& in) {
  std::string text;
  if (cfg.input.empty() || cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw Error(ErrorKind::ParseError, "cannot read '" + cfg.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  const auto f = map_from_json_text(text);
  const bool bij = is_bijection(f);
  const bool anti = is_antimorphism(f);
  const bool lin = is_linear(f);
  const bool ok = bij && anti;
  if (cfg.format == "json") {
    Json j;
    j["group"] = format_group(f.group());
    j["bijection"] = bij;
    j["antimorphism"] = anti;
    j["antiautomorphism"] = ok;
    j["linear"] = lin;
    j["biantiautomorphism"] = ok && lin;
    out << j.dump() << '\n';
  } else {
    out << "group: " << format_group(f.group()) << '\n'
        << "bijection: " << (bij ? "yes" : "no") << '\n'
        << "antimorphism: " << (anti ? "yes" : "no") << '\n'
        << "antiautomorphism: " << (ok ? "yes" : "no") << '\n'
        << "linear: " << (lin ? "yes" : "no") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExceeded: return kUnknown;
    case ErrorKind::MethodInapplicable:
    case ErrorKind::NotIrreducible:
    case ErrorKind::RankTooSmall:
    case ErrorKind::NotOdd:
    case ErrorKind::NotCyclic:
    case ErrorKind::NonHomogeneousGroup: return kDataError;
    default: return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Antiautomorphisms of finite abelian groups"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Largest group order to search")
        ->check(CLI::PositiveNumber);
  };
  const auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "anti or bianti")->check(CLI::IsMember({"anti", "bianti"}));
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads for counting")->check(CLI::PositiveNumber);
  };

  auto* exists = app.add_subcommand("exists", "Decide whether an antiautomorphism exists");
  exists->add_option("group", cfg.group, "Moduli, e.g. 2,4")->required();
  add_mode(exists);
  add_format(exists);
  add_budget(exists);
  add_jobs(exists);

  auto* count = app.add_subcommand("count", "Count antiautomorphisms exactly");
  count->add_option("group", cfg.group, "Moduli, e.g. 2,2,2")->required();
  add_mode(count);
  add_format(count);
  add_budget(count);
  add_jobs(count);

  auto* enumerate = app.add_subcommand("enumerate", "List antiautomorphisms in lexicographic order");
  enumerate->add_option("group", cfg.group, "Moduli")->required();
  enumerate->add_option("--limit", cfg.limit, "Stop after K maps (0 = all)");
  add_format(enumerate);
  add_budget(enumerate);

  auto* construct_cmd = app.add_subcommand("construct", "Build one verified antiautomorphism");
  construct_cmd->add_option("group", cfg.group, "Moduli")->required();
  construct_cmd
      ->add_option("--method", cfg.method,
                   "negation | elementary2 | companion2 | table | multiplier:a[,b]")
      ->required();
  add_format(construct_cmd);

  auto* verify = app.add_subcommand("verify", "Check one statement over all small groups");
  verify->add_option("proposition", cfg.proposition, "Statement id")
      ->required()
      ->check(CLI::IsMember(supported_propositions()));
  verify->add_option("--max-order", cfg.max_order, "Largest group order")->check(CLI::PositiveNumber);
  add_format(verify);
  add_budget(verify);
  add_jobs(verify);

  auto* check = app.add_subcommand("check", "Verify a map given as JSON (file or stdin)");
  check->add_option("input", cfg.input, "JSON file, or - for stdin");
  add_format(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (exists->parsed()) return cmd_exists(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (construct_cmd->parsed()) return cmd_construct(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out, in);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace antiauto::cli
