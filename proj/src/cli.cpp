#include "ortho/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ortho/census.hpp"
#include "ortho/clifford.hpp"
#include "ortho/completion.hpp"
#include "ortho/octonion.hpp"
#include "ortho/vecio.hpp"

namespace ortho::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  std::string command;
  json input;
  std::string status;
  std::string result_key = "result";
  json result;
  std::optional<Int> n_squared;
  std::optional<std::string> reason;
  std::vector<std::string> body;  // text-mode lines
  int exit_code = kOk;
};

json to_json(const IntVector& v) { return json(std::vector<Int>(v.begin(), v.end())); }

json to_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

// Right-aligned columns; the output re-parses as a vector file.
std::vector<std::string> aligned(const std::vector<IntVector>& vs) {
  std::size_t width = 1;
  for (const auto& v : vs) {
    for (Int c : v) width = std::max(width, std::to_string(c).size());
  }
  std::vector<std::string> lines;
  for (const auto& v : vs) {
    std::string line;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      const std::string c = std::to_string(v[j]);
      line += std::string(width - c.size() + (j ? 1 : 0), ' ') + c;
    }
    lines.push_back(line);
  }
  return lines;
}

std::string gram_line(const std::vector<IntVector>& vs) {
  const IntMatrix g = IntMatrix(vs).gram();
  const Int n = g.at(0, 0);
  if (g.is_scalar(n)) return "gram: " + std::to_string(n) + "*I";
  return "gram: not a scalar matrix";
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json j;
    j["command"] = r.command;
    j["input"] = r.input;
    j["status"] = r.status;
    j[r.result_key] = r.result;
    j["n_squared"] = r.n_squared ? json(*r.n_squared) : json(nullptr);
    if (r.reason) j["reason"] = *r.reason;
    out << j.dump() << '\n';
    return;
  }
  out << "# " << r.command << ": " << r.status << '\n';
  if (r.n_squared) out << "# n_squared: " << *r.n_squared << '\n';
  if (r.reason) out << "# reason: " << *r.reason << '\n';
  for (const auto& line : r.body) out << line << '\n';
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded: return kBudget;
    default: return kUsage;
  }
}

std::vector<IntVector> gather_vectors(const std::string& file, const std::vector<std::string>& vecs) {
  std::vector<IntVector> out;
  if (!file.empty()) out = parse_vector_file(file);
  for (const auto& v : vecs) out.push_back(parse_vector_arg(v));
  if (out.empty()) throw Error(Errc::EmptyInput, "no input vectors; use --file or --vec");
  return out;
}

Report cmd_complete(const std::vector<IntVector>& input) {
  Report r;
  r.command = "complete";
  r.input = to_json(input);
  r.result_key = "added";
  const OrthoSet s = verify_ortho_set(input);
  r.n_squared = s.squared_norm();
  const CompletionResult c = complete(s);
  r.status = std::string(status_name(c.status));
  r.result = to_json(c.added);
  if (c.reason != CompletionReason::None) {
    r.reason = std::string(reason_name(c.reason)) + (c.detail.empty() ? "" : ": " + c.detail);
  }
  switch (c.status) {
    case CompletionStatus::Completed:
    case CompletionStatus::PartiallyExtended: {
      std::vector<IntVector> all = input;
      all.insert(all.end(), c.added.begin(), c.added.end());
      r.body = aligned(all);
      r.body.push_back("# " + gram_line(all));
      break;
    }
    case CompletionStatus::Impossible:
      r.exit_code = kImpossible;
      break;
    case CompletionStatus::NotSupported:
      r.exit_code = kUsage;
      break;
  }
  return r;
}

Report cmd_partner(const IntVector& v, const CensusBudget& budget) {
  Report r;
  r.command = "partner";
  r.input = to_json(v);
  r.n_squared = v.squared_norm();
  const auto w = find_partner(v, budget);
  if (!w) {
    r.status = "impossible";
    r.result = nullptr;
    r.reason = "no equal-norm orthogonal partner (exhaustive)";
    r.exit_code = kImpossible;
    return r;
  }
  r.status = "ok";
  r.result = to_json(*w);
  r.body = aligned({v, *w});
  return r;
}

Report cmd_enumerate(Int n, std::size_t d, const CensusBudget& budget) {
  Report r;
  r.command = "enumerate";
  r.input = {{"n", n}, {"dim", d}};
  r.n_squared = n;
  const auto reps = enumerate_reps(n, d, budget);
  r.status = "ok";
  r.result = to_json(reps);
  r.body = aligned(reps);
  r.body.push_back("# count: " + std::to_string(reps.size()));
  return r;
}

Report cmd_classify(Int n, const CensusBudget& budget, bool cross_check) {
  Report r;
  r.command = "classify";
  r.input = {{"n", n}};
  r.n_squared = n;
  ClassifyOptions options;
  options.budget = budget;
  options.cross_check = cross_check;
  const CensusReport c = classify_n_d3(n, options);
  json reps = json::array();
  for (const auto& rep : c.reps_canonical) {
    const CensusWitness& w = c.witnesses.at(rep);
    json entry;
    entry["rep"] = to_json(rep);
    entry["partner"] = w.partner ? to_json(*w.partner) : json(nullptr);
    entry["completion"] = w.completion ? to_json(std::vector<IntVector>{(*w.completion)[0], (*w.completion)[1]})
                                       : json(nullptr);
    reps.push_back(entry);
    std::string line = format_vector(rep) + "  # partner: " + (w.partner ? format_vector(*w.partner) : "none (exhaustive)");
    if (w.completion) line += "; basis: " + format_vector((*w.completion)[0]) + " / " + format_vector((*w.completion)[1]);
    r.body.push_back(line);
  }
  r.status = "ok";
  r.result = {{"reps", reps}, {"in_C3_12", c.in_c3_12}, {"in_C3_13", c.in_c3_13}, {"trivial", c.trivial}};
  r.body.push_back(std::string("# in_C3_12: ") + (c.in_c3_12 ? "true" : "false"));
  r.body.push_back(std::string("# in_C3_13: ") + (c.in_c3_13 ? "true" : "false"));
  r.body.push_back(std::string("# trivial: ") + (c.trivial ? "true" : "false"));
  return r;
}

Report cmd_diffset(Int limit, const CensusBudget& budget, unsigned threads) {
  Report r;
  r.command = "diffset";
  r.input = {{"limit", limit}};
  const auto set = difference_set_d3(limit, budget, threads);
  r.status = "ok";
  r.result = set;
  std::string line;
  for (Int n : set) line += (line.empty() ? "" : " ") + std::to_string(n);
  r.body.push_back(line);
  r.body.push_back("# count: " + std::to_string(set.size()));
  return r;
}

Report cmd_clifford_search(unsigned n) {
  Report r;
  r.command = "clifford-search";
  r.input = {{"n", n}};
  const auto v0 = search_max_v0(n);
  r.status = "ok";
  json members = json::array();
  for (const auto& v : v0) {
    members.push_back(to_string(v));
    r.body.push_back(to_string(v));
  }
  r.result = {{"cardinality", v0.size()}, {"dimension", std::size_t{1} << (n - 1)}, {"v0", members}};
  r.body.push_back("# cardinality: " + std::to_string(v0.size()));
  return r;
}

Report cmd_cross(const std::string& name, const std::vector<IntVector>& args, const std::vector<Int>& ks) {
  Report r;
  r.command = name;
  r.input = to_json(args);
  IntVector out = IntVector::zeros(1);
  const bool seven = name == "cross7";
  if (ks.empty()) {
    out = seven ? cross7(args[0], args[1]) : cross8_ternary(args[0], args[1], args[2]);
  } else {
    if (ks.size() != args.size()) throw Error(Errc::InvalidArgument, "give either no K or one K per vector");
    out = seven ? complete_d7_pair(args[0], args[1], ks[0], ks[1])
                : complete_d8_triple(args[0], args[1], args[2], ks[0], ks[1], ks[2]);
    r.n_squared = args[0].squared_norm();
  }
  r.status = "ok";
  r.result = to_json(out);
  r.body = aligned({out});
  if (!ks.empty()) {
    std::vector<IntVector> all = args;
    all.push_back(out);
    r.body.push_back("# " + gram_line(all));
  }
  return r;
}

Report cmd_verify(const std::vector<IntVector>& input) {
  Report r;
  r.command = "verify";
  r.input = to_json(input);
  try {
    const OrthoSet s = verify_ortho_set(input);
    r.status = "ok";
    r.n_squared = s.squared_norm();
    r.result = {{"size", s.size()}, {"dim", s.dim()}};
    r.body.push_back("# " + gram_line(input));
  } catch (const Error& e) {
    if (e.code() != Errc::NotOrthogonal && e.code() != Errc::NormMismatch) throw;
    r.status = "impossible";
    r.result = nullptr;
    r.reason = std::string(errc_name(e.code())) + ": " + e.what();
    r.exit_code = kImpossible;
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal-norm orthogonal extensions of integral vector sets", "ortho"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool as_json = false;
  std::optional<Int> budget;
  unsigned threads = 1;
  app.add_flag("--json", as_json, "Emit one JSON object instead of text");
  app.add_option("--budget", budget, "Largest squared norm searched by census commands")
      ->envname("ORTHO_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Census worker threads")->check(CLI::Range(1u, 256u));
  app.set_config("--config", "", "key=value file with the same options");

  std::string file;
  std::vector<std::string> vecs;
  auto* complete_cmd = app.add_subcommand("complete", "Extend an orthogonal equal-norm set");
  complete_cmd->add_option("--file", file, "Vector file")->check(CLI::ExistingFile);
  complete_cmd->add_option("--vec", vecs, "A vector such as \"4 5 6 7\" (repeatable)");

  std::string partner_vec;
  auto* partner_cmd = app.add_subcommand("partner", "Search an equal-norm orthogonal partner in Z^3");
  partner_cmd->add_option("--vec", partner_vec, "Vector of Z^3")->required();

  Int n = 0;
  std::size_t dim = 3;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Canonical representations of N as a sum of d squares");
  enumerate_cmd->add_option("--n", n, "Squared norm")->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--dim", dim, "Dimension")->check(CLI::Range(1, 8));

  bool cross_check = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify N against C3(1,2) and C3(1,3)");
  classify_cmd->add_option("--n", n, "Squared norm")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--cross-check", cross_check, "Also run the exhaustive basis search");

  Int limit = 0;
  auto* diffset_cmd = app.add_subcommand("diffset", "Non-trivial N < limit in C3(1,2) but not C3(1,3)");
  diffset_cmd->add_option("--limit", limit, "Exclusive upper bound")->required()->check(CLI::PositiveNumber);

  unsigned clifford_n = 0;
  auto* clifford_cmd = app.add_subcommand("clifford-search", "Maximum V0 for the even Clifford subalgebra E_n");
  clifford_cmd->add_option("--n", clifford_n, "n (3..12)")->required();

  std::string vs, ws, xs, ys, zs;
  std::vector<Int> ks;
  auto* cross7_cmd = app.add_subcommand("cross7", "Seven-dimensional cross product / pair completion");
  cross7_cmd->add_option("--v", vs, "First vector")->required();
  cross7_cmd->add_option("--w", ws, "Second vector")->required();
  cross7_cmd->add_option("--k", ks, "Divisors K1 K2; completes the pair when given")->expected(2);

  auto* cross8_cmd = app.add_subcommand("cross8", "Eight-dimensional ternary cross product / triple completion");
  cross8_cmd->add_option("--x", xs, "First vector")->required();
  cross8_cmd->add_option("--y", ys, "Second vector")->required();
  cross8_cmd->add_option("--z", zs, "Third vector")->required();
  cross8_cmd->add_option("--k", ks, "Divisors K1 K2 K3; completes the triple when given")->expected(3);

  auto* verify_cmd = app.add_subcommand("verify", "Check that a vector set is orthogonal with equal norms");
  verify_cmd->add_option("--file", file, "Vector file")->check(CLI::ExistingFile);
  verify_cmd->add_option("--vec", vecs, "A vector (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CensusBudget census_budget;
  if (budget) census_budget.max_norm = census_budget.max_probe_norm = *budget;

  std::string command = "ortho";
  try {
    Report r;
    if (*complete_cmd) {
      command = "complete";
      r = cmd_complete(gather_vectors(file, vecs));
    } else if (*partner_cmd) {
      command = "partner";
      r = cmd_partner(parse_vector_arg(partner_vec), census_budget);
    } else if (*enumerate_cmd) {
      command = "enumerate";
      r = cmd_enumerate(n, dim, census_budget);
    } else if (*classify_cmd) {
      command = "classify";
      r = cmd_classify(n, census_budget, cross_check);
    } else if (*diffset_cmd) {
      command = "diffset";
      r = cmd_diffset(limit, census_budget, threads);
    } else if (*clifford_cmd) {
      command = "clifford-search";
      r = cmd_clifford_search(clifford_n);
    } else if (*cross7_cmd) {
      command = "cross7";
      r = cmd_cross("cross7", {parse_vector_arg(vs), parse_vector_arg(ws)}, ks);
    } else if (*cross8_cmd) {
      command = "cross8";
      r = cmd_cross("cross8", {parse_vector_arg(xs), parse_vector_arg(ys), parse_vector_arg(zs)}, ks);
    } else if (*verify_cmd) {
      command = "verify";
      r = cmd_verify(gather_vectors(file, vecs));
    }
    emit(r, as_json, out);
    return r.exit_code;
  } catch (const Error& e) {
    const int code = exit_for(e.code());
    if (as_json) {
      Report r;
      r.command = command;
      r.input = nullptr;
      r.status = code == kBudget ? "budget_exceeded" : "error";
      r.result = nullptr;
      r.reason = std::string(errc_name(e.code())) + ": " + e.what();
      emit(r, true, out);
    }
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return code;
  }
}

}  // namespace ortho::cli
