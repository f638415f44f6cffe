#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lk/named_vectors.hpp"
#include "lk/parse.hpp"
#include "lk/specht.hpp"
#include "lk/spectral.hpp"

namespace lk::cli {

using json = nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kGoldenMismatch = 2,
  kInputError = 3,
  kSizeGuard = 4,
  kPoleError = 5,
};

struct Config {
  std::string command;
  int n = 0;
  std::string l = "generic";
  std::string modulus;
  std::string case_label;
  std::string output = "json";
  std::string golden;
  std::string family;
  int size = 0;
  std::vector<int> rows, cols;
  bool gap_check = false;
  bool direct = false;
  bool recursive = false;
};

namespace detail {

inline json matrix_json(const std::vector<std::vector<std::string>>& m) { return json(m); }

template <class F>
json family_json(const LKMatrices<F>& L) {
  json out;
  json g = json::array(), e = json::array(), gi = json::array();
  for (const auto& M : L.G) g.push_back(M.strings());
  for (const auto& M : L.E) e.push_back(M.strings());
  for (const auto& M : L.Ginv) gi.push_back(M.strings());
  out["G"] = g;
  out["E"] = e;
  out["Ginv"] = gi;
  return out;
}

inline json report_json(const RelationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  return {{"checks", checks}, {"all_passed", rep.all_passed()}, {"failures", rep.failures()}};
}

inline void require_n(const Config& c, int lo) {
  if (c.n < lo) throw parse_error("--n must be at least " + std::to_string(lo));
}

inline json cmd_matrices(const Config& c) {
  require_n(c, 3);
  const auto s = parse_specialization(c.l, c.modulus);
  return with_field(s, [&](const auto& p) {
    json out = c.recursive ? family_json(build_matrices_recursive(c.n, p)) : family_json(build_matrices(c.n, p));
    out["n"] = c.n;
    out["spec"] = s.str();
    return out;
  });
}

inline json cmd_verify(const Config& c) {
  require_n(c, 3);
  const auto s = parse_specialization(c.l, c.modulus);
  return with_field(s, [&](const auto& p) {
    json out = report_json(verify_relations(build_matrices(c.n, p)));
    out["n"] = c.n;
    out["spec"] = s.str();
    return out;
  });
}

inline json cmd_sum_matrix(const Config& c) {
  require_n(c, 3);
  const auto s = parse_specialization(c.l, c.modulus);
  return with_field(s, [&](const auto& p) {
    const auto T = c.direct ? sum_matrix_direct(c.n, p) : t_matrix(c.n, p);
    return json{{"n", c.n}, {"spec", s.str()}, {"matrix", T.strings()}};
  });
}

inline json cmd_det(const Config& c) {
  require_n(c, 3);
  const auto s = parse_specialization(c.l, c.modulus);
  const auto d = det_T(c.n, s);
  return {{"n", c.n}, {"spec", s.str()}, {"det", to_string(d)}, {"zero", is_zero(d)}};
}

inline json locus_json(const LocusReport& rep) {
  json factors = json::array();
  std::string r3_sign = "none";
  for (const auto& f : rep.factors) {
    factors.push_back({{"factor", f.str()}, {"root", f.root().str()}, {"multiplicity", f.multiplicity}});
    if (f.k == 3) r3_sign = f.eps > 0 ? "l - r^3" : "l + r^3";
  }
  return {{"n", rep.n},
          {"factors", factors},
          {"residual", rep.residual.str()},
          {"residual_l_degree", rep.residual_l_degree()},
          {"l_denominator_power", rep.l_denominator_power},
          {"scalar", rep.scalar.str()},
          {"total_multiplicity", rep.total_multiplicity()},
          {"reconstructs", rep.reconstructs()},
          {"r3_factor_supported", r3_sign}};
}

inline json cmd_locus(const Config& c) {
  require_n(c, 3);
  return locus_json(reducibility_locus(c.n));
}

inline json cmd_kernel(const Config& c) {
  require_n(c, 3);
  const auto s = parse_specialization(c.l, c.modulus);
  const auto rep = kernel(c.n, s);
  return {{"n", rep.n}, {"spec", s.str()}, {"dim", rep.dim}, {"rank", rep.rank}, {"basis", rep.basis}};
}

inline json cmd_check_vectors(const Config& c) {
  require_n(c, 3);
  if (c.case_label.empty()) throw parse_error("--case is required");
  std::vector<NamedVector> vs;
  try {
    vs = named_vectors(c.n, c.case_label);
  } catch (const std::out_of_range& e) {
    throw parse_error(e.what());
  }
  json items = json::array();
  bool all = true;
  for (const auto& v : vs) {
    const auto m = check_membership_detail(v);
    all = all && m.in_kernel;
    json coords = json::array();
    for (const auto& x : v.dense()) coords.push_back(x.str());
    items.push_back({{"name", v.name}, {"spec", v.spec.str()}, {"coords", coords}, {"in_kernel", m.in_kernel}});
  }
  return {{"n", c.n}, {"case", c.case_label}, {"vectors", items}, {"all_in_kernel", all}};
}

inline json cmd_rank_witness(const Config& c) {
  require_n(c, 3);
  if (c.size < 1) throw parse_error("--size must be positive");
  const auto s = parse_specialization(c.l, c.modulus);
  json out = {{"n", c.n}, {"spec", s.str()}, {"size", c.size}};
  if (s.kind == Specialization::Kind::Generic) throw unsupported_error("rank-witness needs a specialized l");
  std::optional<RankWitness> w;
  try {
    w = rank_witness(c.n, s, c.size, c.rows, c.cols);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
  if (w) {
    out["found"] = true;
    out["rows"] = w->rows;
    out["cols"] = w->cols;
    out["det"] = w->det;
  } else {
    out["found"] = false;
  }
  return out;
}

inline json cmd_specht(const Config& c) {
  require_n(c, 1);
  if (c.n > 12) throw parse_error("specht supports n <= 12");
  json table = json::array();
  for (const auto& e : sym_dims(c.n)) table.push_back({{"partition", e.partition.parts}, {"dim", e.dim.get_str()}});
  json out = {{"n", c.n}, {"dims", table}};
  if (c.gap_check) {
    const auto g = dim_gap_report(c.n);
    json off = json::array();
    for (const auto& e : g.offenders) off.push_back({{"partition", e.partition.parts}, {"dim", e.dim.get_str()}});
    out["gap_check"] = {{"passed", g.passed}, {"offenders", off}};
  }
  if (!c.family.empty()) {
    const auto rep = verify_seed_matrices(parse_seed_family(c.family), c.n);
    out["seed_matrices"] = report_json(rep);
    out["seed_matrices"]["family"] = c.family;
  }
  return out;
}

inline json dispatch(const Config& c) {
  if (c.command == "matrices") return cmd_matrices(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "sum-matrix") return cmd_sum_matrix(c);
  if (c.command == "det") return cmd_det(c);
  if (c.command == "locus") return cmd_locus(c);
  if (c.command == "kernel") return cmd_kernel(c);
  if (c.command == "check-vectors") return cmd_check_vectors(c);
  if (c.command == "rank-witness") return cmd_rank_witness(c);
  if (c.command == "specht") return cmd_specht(c);
  throw parse_error("unknown command '" + c.command + "'");
}

inline void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) render_text(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

inline std::string one_line(std::string s) {
  const std::string dup = "pole: ";
  if (s.rfind(dup, 0) == 0) s.erase(0, dup.size());
  for (auto& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

}  // namespace detail

// Executes one configured command. Diagnostics are one line on err.
inline int run(const Config& c, std::ostream& out, std::ostream& err) {
  json result;
  try {
    result = detail::dispatch(c);
  } catch (const size_guard_error& e) {
    err << "error: size-guard: " << detail::one_line(e.what()) << "\n";
    return kSizeGuard;
  } catch (const pole_error& e) {
    err << "error: pole: " << detail::one_line(e.what()) << "\n";
    return kPoleError;
  } catch (const non_invertible_error& e) {
    err << "error: pole: " << detail::one_line(e.what()) << "\n";
    return kPoleError;
  } catch (const parse_error& e) {
    err << "error: parse: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  } catch (const unsupported_error& e) {
    err << "error: unsupported: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  } catch (const unknown_case_error& e) {
    err << "error: input: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: input: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: internal: " << detail::one_line(e.what()) << "\n";
    return kInternal;
  }

  if (c.output == "text")
    detail::render_text(result, "", out);
  else
    out << result.dump() << "\n";

  if (!c.golden.empty()) {
    std::ifstream in(c.golden);
    if (!in) {
      err << "error: input: cannot open golden file " << c.golden << "\n";
      return kInputError;
    }
    json expected;
    try {
      expected = json::parse(in);
    } catch (const std::exception& e) {
      err << "error: input: golden file is not valid JSON: " << detail::one_line(e.what()) << "\n";
      return kInputError;
    }
    if (expected != result) {
      const auto patch = json::diff(expected, result);
      const std::string where = patch.empty() ? "/" : patch.front().value("path", "/");
      err << "error: golden-mismatch: " << c.golden << " at " << (where.empty() ? "/" : where) << "\n";
      return kGoldenMismatch;
    }
  }
  return kOk;
}

// Parses argv into a Config and runs it.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Lawrence-Krammer representation toolkit"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s, bool spec) {
    s->add_option("--n", c.n, "number of strands")->required();
    if (spec) {
      s->add_option("--l", c.l, "l as a rational expression in r, or 'generic'");
      s->add_option("--modulus", c.modulus, "quotient modulus: cyclotomic:M or a polynomial in r");
    }
    s->add_option("--output", c.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--golden", c.golden, "fixture to compare against");
  };

  auto* m = app.add_subcommand("matrices", "dump nu(g_i), nu(e_i), nu(g_i)^-1");
  common(m, true);
  m->add_flag("--recursive", c.recursive, "use the recursive block builder");
  common(app.add_subcommand("verify", "check the defining relations"), true);
  auto* sm = app.add_subcommand("sum-matrix", "dump T(n)");
  common(sm, true);
  sm->add_flag("--direct", c.direct, "assemble from the direct coefficient rules");
  common(app.add_subcommand("det", "determinant of T(n)"), true);
  common(app.add_subcommand("locus", "reducibility locus in l"), false);
  common(app.add_subcommand("kernel", "kernel of T(n) at a specialization"), true);
  auto* cv = app.add_subcommand("check-vectors", "check named invariant vectors");
  common(cv, false);
  cv->add_option("--case", c.case_label, "one-dim, n-minus-1+, n-minus-1-, l=r, l=-r3, root-of-unity")->required();
  auto* rw = app.add_subcommand("rank-witness", "first invertible submatrix of T(n)");
  common(rw, true);
  rw->add_option("--size", c.size, "submatrix size")->required();
  rw->add_option("--rows", c.rows, "1-based row pool")->delimiter(',');
  rw->add_option("--cols", c.cols, "1-based column pool")->delimiter(',');
  auto* sp = app.add_subcommand("specht", "hook-length dimensions");
  common(sp, false);
  sp->add_flag("--gap-check", c.gap_check, "run the dimension gap check");
  sp->add_option("--family", c.family, "verify seed matrices M, N, P or Q")->check(CLI::IsMember({"M", "N", "P", "Q"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: parse: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  }
  c.command = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace lk::cli
