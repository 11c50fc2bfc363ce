#include "nestsub/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nestsub/error.hpp"
#include "nestsub/families.hpp"
#include "nestsub/parse.hpp"
#include "nestsub/prs.hpp"
#include "nestsub/report.hpp"
#include "nestsub/sqfree.hpp"
#include "nestsub/subres_classic.hpp"
#include "nestsub/subres_nested.hpp"
#include "nestsub/subres_recursive.hpp"
#include "nestsub/subres_reduced.hpp"
#include "nestsub/verify.hpp"

namespace nestsub {

namespace {

using nlohmann::json;

struct Options {
  std::string f_text;
  std::string g_text;
  std::string rule = "subresultant";
  std::optional<int> k;
  std::optional<int> j;
  std::optional<int> tau;
  std::string format = "json";
  std::uint64_t seed = 42;
  int trials = 100;
  int max_deg = 8;
  bool strict_layout = false;
  int theorem = 2;
  std::string family;
  int depth = 3;
  long max_rec_cols = 400;
};

class Printer {
 public:
  Printer(std::ostream& out, bool text) : out_(out), text_(text) {}
  bool text() const { return text_; }
  void emit(const json& j) { out_ << j.dump(2) << "\n"; }
  std::ostream& stream() { return out_; }

 private:
  std::ostream& out_;
  bool text_;
};

std::string dims_text(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void print_matrix_text(std::ostream& out, const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).get_str();
    out << "]\n";
  }
}

Instance instance_from(const Options& o) {
  Poly f = parse_poly(o.f_text);
  Poly g = parse_poly(o.g_text);
  if (f.degree() < g.degree()) std::swap(f, g);
  return make_instance(std::move(f), std::move(g));
}

int require_k(const Options& o) {
  if (!o.k) throw Error(ErrorCode::IndexOutOfRange, "--k is required");
  return *o.k;
}

int require_j(const Options& o) {
  if (!o.j) throw Error(ErrorCode::IndexOutOfRange, "--j is required");
  return *o.j;
}

int cmd_prs(const Options& o, Printer& p) {
  const Poly f = parse_poly(o.f_text);
  const Poly g = parse_poly(o.g_text);
  const PrsStage s = prs(f, g, parse_division_rule(o.rule));
  if (p.text()) {
    for (std::size_t i = 0; i < s.length(); ++i) p.stream() << "P" << i + 1 << " = " << render(s.polys[i]) << "\n";
    p.stream() << (s.complete() ? "complete" : "incomplete") << "\n";
  } else {
    p.emit(to_json(s));
  }
  return kExitOk;
}

int cmd_rprs(const Options& o, Printer& p) {
  const Poly f = parse_poly(o.f_text);
  const Poly g = parse_poly(o.g_text);
  const RecursivePrs r = recursive_prs(f, g, parse_division_rule(o.rule));
  if (p.text()) {
    for (std::size_t k = 0; k < r.stages.size(); ++k) {
      const auto& s = r.stages[k];
      for (std::size_t i = 0; i < s.length(); ++i) {
        p.stream() << "P" << i + 1 << "^(" << k + 1 << ") = " << render(s.polys[i]) << "\n";
      }
    }
    p.stream() << "chain:";
    for (int d : r.chain) p.stream() << " " << d;
    p.stream() << "\n";
  } else {
    p.emit(to_json(r));
  }
  return kExitOk;
}

void emit_family_poly(Printer& p, const std::string& family, const Instance& inst, int k, int j,
                      const Mat& m, const Poly& s, std::optional<json> extra = std::nullopt) {
  if (p.text()) {
    p.stream() << family << " (k=" << k << ", j=" << j << ") matrix " << dims_text(m.rows(), m.cols())
               << "\n  " << render(s) << "\n";
    return;
  }
  json out{{"family", family},
           {"k", k},
           {"j", j},
           {"chain", std::vector<int>(inst.chain.values().begin(), inst.chain.values().end())},
           {"dims", {m.rows(), m.cols()}},
           {"poly", to_json(s)}};
  if (extra) out["constants"] = *extra;
  p.emit(out);
}

int cmd_subres(const Options& o, Printer& p) {
  const Poly f = parse_poly(o.f_text);
  const Poly g = parse_poly(o.g_text);
  std::vector<int> js;
  if (o.j) {
    js.push_back(*o.j);
  } else {
    for (int j = g.degree() - 1; j >= 0; --j) js.push_back(j);
  }
  json all = json::array();
  for (int j : js) {
    const Mat m = subres_matrix(f, g, j);
    const Poly s = determinant_polynomial(m, j);
    if (p.text()) {
      p.stream() << "S_" << j << " (" << dims_text(m.rows(), m.cols()) << ") = " << render(s) << "\n";
    } else {
      all.push_back({{"j", j}, {"dims", {m.rows(), m.cols()}}, {"poly", to_json(s)}});
    }
  }
  if (!p.text()) p.emit({{"family", "classic"}, {"subresultants", std::move(all)}});
  return kExitOk;
}

int cmd_recsubres(const Options& o, Printer& p) {
  const Instance inst = instance_from(o);
  const int k = require_k(o), j = require_j(o);
  inst.chain.require_index(k, j);
  const RecursiveSubresultants rec(inst.f, inst.g, inst.chain, o.strict_layout);
  const Mat m = rec.matrix(k, j);
  emit_family_poly(p, "recursive", inst, k, j, m, determinant_polynomial(m, j));
  return kExitOk;
}

int cmd_nested(const Options& o, Printer& p) {
  const Instance inst = instance_from(o);
  const int k = require_k(o), j = require_j(o);
  inst.chain.require_index(k, j);
  const NestedSubresultants nes(inst.f, inst.g, inst.chain);
  const Mat m = nes.matrix(k, j);
  std::optional<json> extra;
  if (k >= 2) {
    const Thm1Constants c = thm1_constants(inst.chain, k, j);
    extra = json{{"u_prev", c.u_prev}, {"u", c.u_kj}, {"b", c.b_kj}, {"r", c.r_kj}, {"R_prev", c.R_prev},
                 {"factor", to_json(c.predicted_factor)}};
  }
  emit_family_poly(p, "nested", inst, k, j, m, determinant_polynomial(m, j), extra);
  return kExitOk;
}

int cmd_reduced(const Options& o, Printer& p) {
  const Instance inst = instance_from(o);
  const int k = require_k(o), j = require_j(o);
  inst.chain.require_index(k, j);
  const ReducedSubresultants red(inst.f, inst.g, inst.chain);
  const Mat m = red.matrix(k, j);
  std::optional<json> extra;
  if (k >= 2) {
    const Thm2Constants c = thm2_constants(red, k, j);
    extra = json{{"J", c.J_kj},
                 {"I", c.I_kj},
                 {"B_hat", to_json(c.B_hat_kj)},
                 {"B_hat_prev", to_json(c.B_hat_prev)},
                 {"R_hat_prev", to_json(c.R_hat_prev)},
                 {"U_det", to_json(red.level(k).solver->determinant())},
                 {"factor", to_json(c.predicted_factor)}};
  }
  emit_family_poly(p, "reduced", inst, k, j, m, determinant_polynomial(m, j), extra);
  return kExitOk;
}

int cmd_matrix(const Options& o, Printer& p) {
  const std::string& fam = o.family.empty() ? std::string("reduced") : o.family;
  Mat m;
  int k = o.k.value_or(1);
  int j = o.j.value_or(0);
  if (fam == "sylvester") {
    m = sylvester_matrix(parse_poly(o.f_text), parse_poly(o.g_text));
  } else if (fam == "classic") {
    m = subres_matrix(parse_poly(o.f_text), parse_poly(o.g_text), require_j(o));
  } else {
    const Instance inst = instance_from(o);
    k = require_k(o);
    j = require_j(o);
    inst.chain.require_index(k, j);
    if (fam == "recursive") {
      m = RecursiveSubresultants(inst.f, inst.g, inst.chain, o.strict_layout).matrix(k, j);
    } else if (fam == "nested") {
      m = NestedSubresultants(inst.f, inst.g, inst.chain).matrix(k, j);
    } else if (fam == "reduced") {
      m = ReducedSubresultants(inst.f, inst.g, inst.chain).matrix(k, j);
    } else if (fam == "h") {
      m = ReducedSubresultants(inst.f, inst.g, inst.chain).h_matrix(k, j);
    } else {
      throw Error(ErrorCode::IndexOutOfRange, "unknown matrix family '" + fam + "'");
    }
  }
  if (o.tau) m = tau_selection(m, j, *o.tau);
  if (p.text()) {
    p.stream() << fam << " " << dims_text(m.rows(), m.cols()) << "\n";
    print_matrix_text(p.stream(), m);
    if (m.is_square()) p.stream() << "det = " << det(m).get_str() << "\n";
  } else {
    json out = to_json(m);
    out["family"] = fam;
    out["k"] = k;
    out["j"] = j;
    if (o.tau) out["tau"] = *o.tau;
    if (m.is_square()) out["det"] = to_json(det(m));
    p.emit(out);
  }
  return kExitOk;
}

int emit_reports(Printer& p, const std::vector<VerifyReport>& reports, json header) {
  int passed = 0, failed = 0, skipped = 0;
  std::map<std::string, int> reasons;
  json arr = json::array();
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: ++passed; break;
      case Status::Fail: ++failed; break;
      case Status::Skipped: ++skipped; ++reasons[r.reason]; break;
    }
    arr.push_back(to_json(r));
  }
  if (p.text()) {
    for (const auto& r : reports) {
      p.stream() << "theorem " << r.theorem << " k=" << r.k << " j=" << r.j << " factor="
                 << r.predicted_factor.get_str() << " " << to_string(r.status)
                 << (r.reason.empty() ? "" : " (" + r.reason + ")") << "\n";
    }
    p.stream() << "checks=" << reports.size() << " pass=" << passed << " fail=" << failed
               << " skipped=" << skipped << "\n";
  } else {
    header["checks"] = reports.size();
    header["pass"] = passed;
    header["fail"] = failed;
    header["skipped"] = skipped;
    header["skip_reasons"] = reasons;
    header["reports"] = std::move(arr);
    p.emit(header);
  }
  return failed > 0 ? kExitVerifyFailed : kExitOk;
}

int cmd_verify(const Options& o, Printer& p) {
  if (o.theorem < 0 || o.theorem > 2) throw Error(ErrorCode::IndexOutOfRange, "--theorem must be 0, 1 or 2");
  if (!o.f_text.empty()) {
    if (o.g_text.empty()) throw Error(ErrorCode::IndexOutOfRange, "verify needs two polynomials");
    const Instance inst = instance_from(o);
    std::vector<VerifyReport> reports;
    if (o.theorem == kProportionality) {
      reports.push_back(proportionality_check(inst));
    } else if (o.k && o.j) {
      reports.push_back(o.theorem == 1 ? verify_thm1(inst, *o.k, *o.j, o.strict_layout)
                                       : verify_thm2(inst, *o.k, *o.j));
    } else {
      const int lo = o.k.value_or(2);
      const int hi = o.k.value_or(o.theorem == 1 ? 2 : inst.chain.depth());
      reports = o.theorem == 1 ? verify_thm1_all(inst, lo, hi, o.strict_layout) : verify_thm2_all(inst, lo, hi);
    }
    return emit_reports(p, reports, {{"theorem", o.theorem}, {"f", o.f_text}, {"g", o.g_text}});
  }
  const SuiteSummary s = run_suite(o.theorem, o.trials, o.max_deg, o.seed);
  return emit_reports(p, s.reports,
                      {{"theorem", o.theorem}, {"trials", o.trials}, {"max_deg", o.max_deg}, {"seed", o.seed}});
}

int cmd_sqfree(const Options& o, Printer& p) {
  const Poly poly = parse_poly(o.f_text);
  const SquareFreeDecomposition d = sqfree(poly);
  if (p.text()) {
    p.stream() << d.constant.get_str();
    for (const auto& f : d.factors) p.stream() << " * (" << render(f.factor) << ")^" << f.multiplicity;
    p.stream() << "\n";
  } else {
    json out = to_json(d);
    out["input"] = to_json(poly);
    p.emit(out);
  }
  return kExitOk;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::size_t max_bits(const Mat& m) {
  std::size_t bits = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& v : m.row(r)) bits = std::max(bits, bit_length(v));
  return bits;
}

// Table of recursive vs reduced sizes for one instance; throws InvariantBreach
// if a constructed matrix disagrees with its size formula.
json bench_instance(const Instance& inst, long max_rec_cols, bool& size_claim) {
  using clock = std::chrono::steady_clock;
  const DegreeChain& chain = inst.chain;
  const long m_plus_n = chain.m() + chain.n();
  auto t0 = clock::now();
  const ReducedSubresultants red(inst.f, inst.g, chain);
  const double levels_ms = elapsed_ms(t0);
  const RecursiveSubresultants rec(inst.f, inst.g, chain);
  json records = json::array();
  for (int k = 1; k <= chain.depth(); ++k) {
    const int hi = k == 1 ? chain.n() - 1 : chain.j(k - 1) - 2;
    for (int j = hi; j >= 0; --j) {
      const Dims rd = rec_dims(chain, k, j);
      const Dims nd = reduced_dims(chain.m(), chain.n(), k, j);
      json rec_json{{"rows", rd.rows}, {"cols", rd.cols}, {"constructed", false}};
      if (rd.cols <= max_rec_cols) {
        auto t = clock::now();
        const Mat rm = rec.matrix(k, j);
        rec_json["construct_ms"] = elapsed_ms(t);
        if (static_cast<long>(rm.rows()) != rd.rows || static_cast<long>(rm.cols()) != rd.cols) {
          throw Error(ErrorCode::InvariantBreach, "recursive matrix size");
        }
        rec_json["constructed"] = true;
      }
      json red_json{{"rows", nd.rows}, {"cols", nd.cols}};
      try {
        auto t = clock::now();
        const Mat nm = red.matrix(k, j);
        red_json["construct_ms"] = elapsed_ms(t);
        if (static_cast<long>(nm.rows()) != nd.rows || static_cast<long>(nm.cols()) != nd.cols) {
          throw Error(ErrorCode::InvariantBreach, "reduced matrix size");
        }
        t = clock::now();
        const Poly s = determinant_polynomial(nm, j);
        red_json["det_ms"] = elapsed_ms(t);
        red_json["max_coeff_bits"] = max_bits(nm);
        red_json["subresultant_degree"] = s.degree();
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InvariantBreach) throw;
        red_json["skipped"] = reason_code(e);
      }
      if (nd.cols > m_plus_n) size_claim = false;
      records.push_back({{"k", k}, {"j", j}, {"recursive", rec_json}, {"reduced", red_json}});
    }
  }
  return {{"f", render(inst.f)},
          {"g", render(inst.g)},
          {"m", chain.m()},
          {"n", chain.n()},
          {"chain", std::vector<int>(chain.values().begin(), chain.values().end())},
          {"levels_ms", levels_ms},
          {"records", std::move(records)}};
}

int cmd_bench(const Options& o, Printer& p) {
  std::vector<Instance> instances;
  const std::string fam = o.family.empty() ? std::string("gcd-chain") : o.family;
  if (fam == "gcd-chain") {
    instances.push_back(gcd_chain_family(o.depth));
  } else if (fam == "random") {
    for (int t = 0; t < o.trials; ++t) {
      instances.push_back(random_gcd_chain_pair(derive_seed(o.seed, static_cast<std::uint64_t>(t)), o.max_deg));
    }
  } else if (fam == "input") {
    instances.push_back(instance_from(o));
  } else {
    throw Error(ErrorCode::IndexOutOfRange, "unknown bench family '" + fam + "'");
  }
  bool size_claim = true;
  json all = json::array();
  for (const auto& inst : instances) all.push_back(bench_instance(inst, o.max_rec_cols, size_claim));
  if (p.text()) {
    for (const auto& b : all) {
      p.stream() << "f = " << b["f"].get<std::string>() << "\ng = " << b["g"].get<std::string>() << "\n";
      p.stream() << "  k   j   recursive     reduced   det_ms\n";
      for (const auto& r : b["records"]) {
        auto shape = [](const json& m) {
          return std::to_string(m["rows"].get<long>()) + "x" + std::to_string(m["cols"].get<long>());
        };
        std::ostringstream line;
        line << std::setw(3) << r["k"].get<int>() << std::setw(4) << r["j"].get<int>() << std::setw(12)
             << shape(r["recursive"]) << std::setw(12) << shape(r["reduced"]) << "   ";
        if (r["reduced"].contains("det_ms")) line << std::fixed << std::setprecision(3) << r["reduced"]["det_ms"].get<double>();
        else if (r["reduced"].contains("skipped")) line << r["reduced"]["skipped"].get<std::string>();
        p.stream() << line.str() << "\n";
      }
    }
    p.stream() << "reduced cols <= m+n everywhere: " << (size_claim ? "yes" : "no") << "\n";
  } else {
    p.emit({{"family", fam}, {"depth", o.depth}, {"size_claim_holds", size_claim}, {"instances", std::move(all)}});
  }
  return size_claim ? kExitOk : kExitInvariant;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError: return kExitParse;
    case ErrorCode::SingularU: return kExitSingularU;
    case ErrorCode::InvariantBreach: return kExitInvariant;
    default: return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact recursive PRS and nested subresultant toolkit", "nestsub"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--rule", o.rule, "Division rule")
        ->check(CLI::IsMember({"euclidean", "primitive", "subresultant"}));
    sub->add_option("--k", o.k, "Stage index k");
    sub->add_option("--j", o.j, "Subresultant index j");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", o.seed, "Master seed");
    sub->add_option("--trials", o.trials, "Number of random trials")->check(CLI::PositiveNumber);
    sub->add_option("--max-deg", o.max_deg, "Maximum input degree")->check(CLI::Range(3, 30));
    sub->add_flag("--strict-layout", o.strict_layout, "Refuse recursive stages whose layout is unvalidated");
  };
  auto add_pair = [&](CLI::App* sub, bool required) {
    sub->add_option("f", o.f_text, "First polynomial, e.g. \"x^3 + 1\"")->required(required);
    sub->add_option("g", o.g_text, "Second polynomial")->required(required);
  };

  std::map<CLI::App*, int (*)(const Options&, Printer&)> handlers;
  auto make = [&](const char* name, const char* help, int (*fn)(const Options&, Printer&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    handlers[sub] = fn;
    return sub;
  };

  add_pair(make("prs", "Polynomial remainder sequence", cmd_prs), true);
  add_pair(make("rprs", "Recursive polynomial remainder sequence", cmd_rprs), true);
  add_pair(make("subres", "Classical subresultants", cmd_subres), true);
  add_pair(make("recsubres", "Recursive subresultant (k, j)", cmd_recsubres), true);
  add_pair(make("nested", "Nested subresultant (k, j)", cmd_nested), true);
  add_pair(make("reduced", "Reduced nested subresultant (k, j)", cmd_reduced), true);
  CLI::App* verify = make("verify", "Check the subresultant equivalences", cmd_verify);
  add_pair(verify, false);
  verify->add_option("--theorem", o.theorem, "1: nested vs recursive, 2: nested vs reduced, 0: PRS proportionality");
  CLI::App* sq = make("sqfree", "Square-free decomposition via the recursive PRS", cmd_sqfree);
  sq->add_option("p", o.f_text, "Polynomial")->required();
  CLI::App* bench = make("bench", "Recursive vs reduced matrix sizes and timings", cmd_bench);
  add_pair(bench, false);
  bench->add_option("--family", o.family, "gcd-chain | random | input");
  bench->add_option("--depth", o.depth, "Depth of the gcd-chain family")->check(CLI::Range(1, 6));
  bench->add_option("--max-rec-cols", o.max_rec_cols, "Construct recursive matrices up to this many columns");
  CLI::App* matrix = make("matrix", "Print one matrix of a subresultant family", cmd_matrix);
  add_pair(matrix, true);
  matrix->add_option("--family", o.family, "sylvester | classic | recursive | nested | reduced | h");
  matrix->add_option("--tau", o.tau, "Return the tau-selection instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  Printer printer(out, o.format == "text");
  for (auto* sub : app.get_subcommands()) {
    try {
      return handlers.at(sub)(o, printer);
    } catch (const CLI::Error& e) {
      err << e.what() << "\n";
      return kExitUsage;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return exit_code_for(e);
    }
  }
  return kExitUsage;
}

}  // namespace nestsub
