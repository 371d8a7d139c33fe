#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidcohom/character_oracle.hpp"
#include "braidcohom/combinatorics.hpp"
#include "braidcohom/errors.hpp"
#include "braidcohom/necklace.hpp"
#include "braidcohom/os_oracle.hpp"

namespace braidcohom::cli {

namespace {

constexpr int kCharacterCap = 10;
constexpr int kOsCap = 7;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string str(BigNat const &v) { return v.str(); }

std::string join(std::vector<BigNat> const &values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      s += ' ';
    s += values[i].str();
  }
  return s;
}

nlohmann::ordered_json to_json(BigNat const &v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return v.convert_to<std::uint64_t>();
  return v.str();
}

std::string zone_label(int n, int degree) {
  int back = n - 1 - degree;
  if (back == 0)
    return "i=n-1";
  if (back <= 2)
    return "i=n-" + std::to_string(back + 1);
  return "";
}

int residue_modulus(int q) {
  switch (q) {
  case 2:
    return 4;
  case 3:
    return 12;
  default:
    return 0;
  }
}

} // namespace

OutputFormat parse_format(std::string const &text) {
  if (text == "csv")
    return OutputFormat::csv;
  if (text == "json")
    return OutputFormat::json;
  if (text == "latex")
    return OutputFormat::latex;
  throw DomainError("unknown format '" + text + "' (expected csv, json or latex)");
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](Check const &c) { return c.passed; });
}

std::string RunReport::check_lines() const {
  std::string s;
  for (auto const &c : checks) {
    s += c.passed ? "PASS " : "FAIL ";
    s += c.name;
    if (!c.detail.empty())
      s += ": " + c.detail;
    s += '\n';
  }
  return s;
}

std::string RunReport::summary() const {
  std::ostringstream os;
  os << "command: " << command;
  for (auto const &[k, v] : parameters)
    os << " --" << k << ' ' << v;
  auto failed = std::count_if(checks.begin(), checks.end(), [](Check const &c) { return !c.passed; });
  os << "\nchecks: " << checks.size() - static_cast<std::size_t>(failed) << " passed, " << failed
     << " failed\nduration: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  return os.str();
}

std::string render_table(DimTable const &table, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
  case OutputFormat::csv:
    os << "degree,dimension\n";
    for (std::size_t i = 0; i < table.dims.size(); ++i)
      os << i << ',' << table.dims[i] << '\n';
    break;
  case OutputFormat::json: {
    nlohmann::ordered_json j;
    j["n"] = table.n;
    j["q"] = table.q;
    j["dims"] = nlohmann::ordered_json::array();
    for (auto const &d : table.dims)
      j["dims"].push_back(to_json(d));
    os << j.dump() << '\n';
    break;
  }
  case OutputFormat::latex: {
    int mod = residue_modulus(table.q);
    os << "% H^i(P_" << table.n << ")^G, G = S_" << table.n - table.q << " x S_" << table.q << '\n';
    os << "\\begin{tabular}{r" << (mod ? "c" : "") << "lr}\n\\hline\n$i$";
    if (mod)
      os << " & $i \\bmod " << mod << "$";
    os << " & zone & $\\dim H^i(P_{" << table.n << "})^{\\mathfrak{G}}$ \\\\\n\\hline\n";
    for (std::size_t i = 0; i < table.dims.size(); ++i) {
      int degree = static_cast<int>(i);
      os << degree;
      if (mod)
        os << " & " << degree % mod;
      auto zone = zone_label(table.n, degree);
      os << " & " << (zone.empty() ? "" : "$" + zone + "$") << " & " << table.dims[i] << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    break;
  }
  }
  return os.str();
}

std::string render_basis(int n, int q, int degree, std::vector<FullInvariantSet> const &sets,
                         OutputFormat format) {
  std::ostringstream os;
  switch (format) {
  case OutputFormat::csv:
    os << "index,label\n";
    for (std::size_t i = 0; i < sets.size(); ++i)
      os << i << ",\"" << sets[i].label() << "\"\n";
    break;
  case OutputFormat::json: {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["q"] = q;
    j["degree"] = degree;
    j["labels"] = nlohmann::ordered_json::array();
    for (auto const &s : sets)
      j["labels"].push_back(s.label());
    os << j.dump() << '\n';
    break;
  }
  case OutputFormat::latex:
    os << "\\begin{tabular}{rl}\n\\hline\n\\# & label \\\\\n\\hline\n";
    for (std::size_t i = 0; i < sets.size(); ++i)
      os << i << " & \\verb|" << sets[i].label() << "| \\\\\n";
    os << "\\hline\n\\end{tabular}\n";
    break;
  }
  return os.str();
}

namespace {

struct Options {
  int n = -1;
  int q = -1;
  int degree = -1;
  std::string format = "csv";
  std::string out_path;
  std::optional<int> n_max;
  int lambda_max = 24;
  std::optional<int> oracle_cap;
  std::string suite;
};

void require_table_params(int n, int q) {
  if (n < 2)
    throw UsageError("require n ≥ 2 (got n=" + std::to_string(n) + ")");
  if (q < 0 || n - q < q)
    throw UsageError("require n−q ≥ q (got n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
}

void emit(std::string const &payload, Options const &opt, std::ostream &out) {
  if (opt.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file)
    throw UsageError("cannot open --out file '" + opt.out_path + "'");
  file << payload;
}

int cap_or(Options const &opt, int fallback) { return opt.oracle_cap.value_or(fallback); }

void refuse_above(int n_max, int cap, std::string const &oracle) {
  if (n_max > cap)
    throw CapExceededError("refusing to run the " + oracle + " oracle at n=" + std::to_string(n_max) +
                             ": exceeds --oracle-cap=" + std::to_string(cap),
                           "--oracle-cap", cap);
}

// ---- verify suites ----

void suite_closed_forms(Options const &opt, RunReport &report) {
  int n_max = opt.n_max.value_or(14);
  std::vector<int> qs = opt.q >= 0 ? std::vector<int>{opt.q} : std::vector<int>{1, 2, 3};
  int cap = cap_or(opt, kCharacterCap);
  for (int q : qs) {
    if (q < 1 || q > 3)
      throw UsageError("closed forms exist only for q = 1, 2, 3");
    int n_min = q == 1 ? 3 : (q == 2 ? 6 : 8);
    for (int n = n_min; n <= n_max; ++n) {
      auto t = table(n, q);
      std::vector<int> mismatches;
      std::ostringstream detail;
      for (int i = 0; i < n; ++i) {
        auto printed = closed_form(q, n, i);
        if (printed != t.dims[static_cast<std::size_t>(i)]) {
          mismatches.push_back(i);
          detail << " i=" << i << " engine=" << t.dims[static_cast<std::size_t>(i)]
                 << " printed=" << printed;
        }
      }
      std::string name = "closed-forms q=" + std::to_string(q) + " n=" + std::to_string(n);
      if (q != 3) {
        report.checks.push_back({name, mismatches.empty(),
                                 mismatches.empty() ? "dims " + join(t.dims) : "mismatch" + detail.str()});
        continue;
      }
      // q = 3: mismatches are reported and the oracle decides
      if (mismatches.empty()) {
        report.checks.push_back({name, true, "dims " + join(t.dims)});
        continue;
      }
      if (n > cap) {
        report.checks.push_back(
          {name, true, "unadjudicated (n > --oracle-cap) printed-table mismatch" + detail.str()});
        continue;
      }
      bool agree = true;
      std::ostringstream verdict;
      for (int i : mismatches) {
        auto o = character::oracle_dim(n, q, i, {cap, character::EpsilonScope::rotations});
        verdict << " i=" << i << " oracle=" << o;
        agree = agree && o == t.dims[static_cast<std::size_t>(i)];
      }
      report.checks.push_back({name, agree, "printed-table mismatch" + detail.str() + ";" + verdict.str()});
    }
  }
}

void suite_necklace(Options const &opt, RunReport &report) {
  if (opt.lambda_max < 2)
    throw UsageError("--lambda-max must be at least 2");
  for (int part = 2; part <= opt.lambda_max; ++part) {
    bool ok = true;
    std::ostringstream detail;
    BigNat total = 0;
    for (int d = 0; d <= part; ++d) {
      auto closed = pi_count(part, d);
      auto cycles = enumerate_admissible_cycles(part, d);
      total += closed;
      if (closed != cycles.size()) {
        ok = false;
        detail << " d=" << d << " closed=" << closed << " enumerated=" << cycles.size();
      }
      for (auto const &c : cycles) {
        if (c.is_empty())
          continue;
        int mult = min_rotation_multiplicity(c);
        bool allowed = part == 2 || (part % 4 == 2 ? mult <= 2 : mult == 1);
        if (!allowed) {
          ok = false;
          detail << " d=" << d << " cycle " << c.to_string() << " has multiplicity " << mult;
        }
      }
    }
    if (part >= 3 && (pi_count(part, 0) != 0 || pi_count(part, part) != 0)) {
      ok = false;
      detail << " Π(λ,0) or Π(λ,λ) nonzero";
    }
    report.checks.push_back({"necklace λ=" + std::to_string(part), ok,
                             ok ? "Σ_d Π(λ,d) = " + str(total) : "mismatch" + detail.str()});
  }
}

void check_character(int n, int q, int cap, RunReport &report) {
  std::vector<BigNat> engine, oracle;
  bool cosets_ok = true;
  std::ostringstream detail;
  for (int i = 0; i < n; ++i) {
    engine.push_back(dim_invariant(n, q, i));
    oracle.push_back(character::oracle_dim(n, q, i, {cap, character::EpsilonScope::rotations}));
  }
  for (auto const &lambda : partitions(n)) {
    auto verdicts = character::oracle_cosets(lambda, q, {cap, character::EpsilonScope::rotations});
    std::set<FullInvariantSet> labels;
    for (auto const &v : verdicts) {
      auto chi = chi_from_delta(lambda, v.delta);
      labels.insert(chi);
      if (is_admissible(chi) != v.invariant) {
        cosets_ok = false;
        detail << " λ=" << lambda << " δ=" << v.delta.to_string() << " indicator=" << v.invariant;
      }
    }
    if (labels.size() != verdicts.size()) {
      cosets_ok = false;
      detail << " λ=" << lambda << " orbits=" << verdicts.size() << " labels=" << labels.size();
    }
  }
  std::string name = "oracle-character n=" + std::to_string(n) + " q=" + std::to_string(q);
  bool dims_ok = engine == oracle;
  report.checks.push_back({name, dims_ok && cosets_ok,
                           dims_ok ? "dims " + join(engine) + (cosets_ok ? "" : ";" + detail.str())
                                   : "engine " + join(engine) + " oracle " + join(oracle)});
}

void suite_oracle_character(Options const &opt, RunReport &report) {
  int n_max = opt.n_max.value_or(9);
  int cap = cap_or(opt, kCharacterCap);
  refuse_above(n_max, cap, "character");
  for (int n = 1; n <= n_max; ++n)
    for (int q = 0; q <= n / 2; ++q)
      check_character(n, q, cap, report);
}

void suite_oracle_os(Options const &opt, RunReport &report) {
  int n_max = opt.n_max.value_or(7);
  int cap = cap_or(opt, kOsCap);
  refuse_above(n_max, cap, "Orlik-Solomon");
  for (int n = 1; n <= n_max; ++n) {
    for (int q = 0; q <= std::min(3, n / 2); ++q) {
      std::vector<BigNat> engine, os_dims;
      for (int i = 0; i < n; ++i) {
        engine.push_back(dim_invariant(n, q, i));
        os_dims.push_back(os::invariant_dim(n, q, i, cap));
      }
      bool ok = engine == os_dims;
      report.checks.push_back({"oracle-os n=" + std::to_string(n) + " q=" + std::to_string(q), ok,
                               ok ? "dims " + join(engine)
                                  : "engine " + join(engine) + " os " + join(os_dims)});
    }
  }
}

void suite_stability(Options const &opt, RunReport &report) {
  int n_max = opt.n_max.value_or(14);
  for (int n = 4; n <= n_max; ++n) {
    for (int q = 0; n - q - 1 >= q + 1; ++q) {
      auto lo = table(n, q);
      auto hi = table(n, q + 1);
      bool ok = true;
      std::ostringstream detail;
      for (int i = 0; i <= n - q - 2; ++i) {
        auto const &a = lo.dims[static_cast<std::size_t>(i)];
        auto const &b = hi.dims[static_cast<std::size_t>(i)];
        if ((i <= q - 1 && a != b) || a > b) {
          ok = false;
          detail << " i=" << i << ' ' << a << " vs " << b;
        }
      }
      // the map itself, on explicit sets
      if (n <= 10) {
        for (int i = 0; i <= n - q - 2; ++i) {
          auto source = enumerate_admissible_sets(n, q, i);
          auto target = enumerate_admissible_sets(n, q + 1, i);
          std::set<FullInvariantSet> target_set(target.begin(), target.end());
          std::set<FullInvariantSet> image;
          for (auto const &s : source) {
            try {
              auto t = stability_map(s);
              if (!target_set.count(t)) {
                ok = false;
                detail << " i=" << i << " image of " << s.label() << " not admissible";
              }
              image.insert(std::move(t));
            } catch (DomainError const &e) {
              ok = false;
              detail << " i=" << i << ' ' << s.label() << ": " << e.what();
            }
          }
          if (image.size() != source.size()) {
            ok = false;
            detail << " i=" << i << " map not injective";
          }
          if (i <= q - 1 && image.size() != target.size()) {
            ok = false;
            detail << " i=" << i << " map not surjective";
          }
        }
      }
      report.checks.push_back({"stability n=" + std::to_string(n) + " q=" + std::to_string(q) + "->" +
                                 std::to_string(q + 1),
                               ok, ok ? "equal below " + std::to_string(q) + ", injective to " +
                                          std::to_string(n - q - 2)
                                      : "violation" + detail.str()});
    }
  }
}

void suite_cross(Options const &opt, RunReport &report) {
  int n_max = opt.n_max.value_or(7);
  int char_cap = cap_or(opt, kCharacterCap);
  int os_cap = cap_or(opt, kOsCap);
  for (int n = 1; n <= n_max; ++n) {
    for (int q = 0; q <= n / 2; ++q) {
      bool ok = true;
      std::ostringstream detail;
      std::vector<BigNat> engine;
      for (int i = 0; i < n; ++i) {
        auto e = dim_invariant(n, q, i);
        engine.push_back(e);
        BigNat enumerated = enumerate_admissible_sets(n, q, i).size();
        if (enumerated != e) {
          ok = false;
          detail << " i=" << i << " enumeration=" << enumerated;
        }
        if (n <= char_cap) {
          auto c = character::oracle_dim(n, q, i, {char_cap, character::EpsilonScope::rotations});
          if (c != e) {
            ok = false;
            detail << " i=" << i << " character=" << c;
          }
        }
        if (n <= os_cap && q <= 3) {
          auto o = os::invariant_dim(n, q, i, os_cap);
          if (o != e) {
            ok = false;
            detail << " i=" << i << " os=" << o;
          }
        }
      }
      std::string paths = "engine, enumeration";
      if (n <= char_cap)
        paths += ", character";
      if (n <= os_cap && q <= 3)
        paths += ", os";
      report.checks.push_back({"cross n=" + std::to_string(n) + " q=" + std::to_string(q), ok,
                               ok ? "dims " + join(engine) + " (" + paths + ")"
                                  : "engine " + join(engine) + detail.str()});
    }
  }
}

// ---- commands ----

int cmd_table(Options const &opt, RunReport &report, std::ostream &out) {
  require_table_params(opt.n, opt.q);
  auto format = parse_format(opt.format);
  auto t = table(opt.n, opt.q);
  emit(render_table(t, format), opt, out);
  report.checks.push_back({"dims[0] = 1", t.dims[0] == 1, ""});
  return 0;
}

int cmd_basis(Options const &opt, RunReport &report, std::ostream &out) {
  require_table_params(opt.n, opt.q);
  if (opt.degree < 0 || opt.degree > opt.n - 1)
    throw UsageError("require 0 ≤ degree ≤ n−1");
  auto format = parse_format(opt.format);
  auto sets = enumerate_admissible_sets(opt.n, opt.q, opt.degree);
  emit(render_basis(opt.n, opt.q, opt.degree, sets, format), opt, out);
  auto dim = dim_invariant(opt.n, opt.q, opt.degree);
  report.checks.push_back({"label count equals dimension", dim == sets.size(),
                           std::to_string(sets.size()) + " labels, dimension " + str(dim)});
  return 0;
}

int cmd_stability(Options const &opt, RunReport &report, std::ostream &out) {
  require_table_params(opt.n, opt.q);
  if (opt.n - opt.q - 1 < opt.q + 1)
    throw UsageError("require n−q−1 ≥ q+1 (got n=" + std::to_string(opt.n) + ", q=" +
                     std::to_string(opt.q) + ")");
  auto format = parse_format(opt.format);
  int n = opt.n, q = opt.q;
  auto lo = table(n, q);
  auto hi = table(n, q + 1);
  std::optional<int> first_unequal;
  bool equal_ok = true, injective_ok = true;
  for (int i = 0; i < n; ++i) {
    auto const &a = lo.dims[static_cast<std::size_t>(i)];
    auto const &b = hi.dims[static_cast<std::size_t>(i)];
    if (a != b && !first_unequal)
      first_unequal = i;
    if (i <= q - 1 && a != b)
      equal_ok = false;
    if (i <= n - q - 2 && a > b)
      injective_ok = false;
  }
  std::ostringstream os;
  if (format == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["q"] = q;
    j["dims_q"] = nlohmann::ordered_json::array();
    j["dims_q1"] = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
      j["dims_q"].push_back(to_json(lo.dims[static_cast<std::size_t>(i)]));
      j["dims_q1"].push_back(to_json(hi.dims[static_cast<std::size_t>(i)]));
    }
    j["bijective_through"] = q - 1;
    j["injective_through"] = n - q - 2;
    j["first_unequal_degree"] = first_unequal ? nlohmann::ordered_json(*first_unequal) : nlohmann::ordered_json();
    os << j.dump() << '\n';
  } else if (format == OutputFormat::csv) {
    os << "degree,dim_q" << q << ",dim_q" << q + 1 << ",range\n";
    for (int i = 0; i < n; ++i) {
      std::string range = i <= q - 1 ? "bijective" : (i <= n - q - 2 ? "injective" : "outside");
      os << i << ',' << lo.dims[static_cast<std::size_t>(i)] << ',' << hi.dims[static_cast<std::size_t>(i)]
         << ',' << range << '\n';
    }
  } else {
    os << "\\begin{tabular}{rrrl}\n\\hline\n$i$ & $q=" << q << "$ & $q=" << q + 1
       << "$ & range \\\\\n\\hline\n";
    for (int i = 0; i < n; ++i) {
      std::string range = i <= q - 1 ? "bijective" : (i <= n - q - 2 ? "injective" : "outside");
      os << i << " & " << lo.dims[static_cast<std::size_t>(i)] << " & "
         << hi.dims[static_cast<std::size_t>(i)] << " & " << range << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  }
  emit(os.str(), opt, out);
  report.checks.push_back({"equal in degrees 0.." + std::to_string(q - 1), equal_ok,
                           first_unequal ? "first unequal degree " + std::to_string(*first_unequal)
                                         : "equal in every degree"});
  report.checks.push_back({"pointwise ≤ in degrees 0.." + std::to_string(n - q - 2), injective_ok, ""});
  return 0;
}

int cmd_verify(Options const &opt, RunReport &report, std::ostream &out) {
  if (opt.suite == "closed-forms")
    suite_closed_forms(opt, report);
  else if (opt.suite == "necklace")
    suite_necklace(opt, report);
  else if (opt.suite == "oracle-character")
    suite_oracle_character(opt, report);
  else if (opt.suite == "oracle-os")
    suite_oracle_os(opt, report);
  else if (opt.suite == "stability")
    suite_stability(opt, report);
  else if (opt.suite == "cross")
    suite_cross(opt, report);
  else
    throw UsageError("unknown suite '" + opt.suite + "'");
  emit(report.check_lines(), opt, out);
  return 0;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Invariant cohomology of pure braid groups under S_{n-q} x S_q", "braidcohom"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&](CLI::App *sub, bool needs_nq) {
    auto *n = sub->add_option("--n", opt.n, "number of strands");
    auto *q = sub->add_option("--q", opt.q, "size of the second symmetric factor");
    if (needs_nq) {
      n->required();
      q->required();
    }
    sub->add_option("--format", opt.format, "csv, json or latex")
      ->check(CLI::IsMember({"csv", "json", "latex"}));
    sub->add_option("--out", opt.out_path, "write the output to this file");
  };

  auto *table_cmd = app.add_subcommand("table", "dimension of H^i for every degree");
  add_common(table_cmd, true);

  auto *basis_cmd = app.add_subcommand("basis", "basis labels in one degree");
  add_common(basis_cmd, true);
  basis_cmd->add_option("--degree", opt.degree, "cohomological degree")->required();

  auto *stability_cmd = app.add_subcommand("stability", "compare q and q+1 tables");
  add_common(stability_cmd, true);

  auto *verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", opt.suite, "closed-forms|necklace|oracle-character|oracle-os|stability|cross")
    ->required()
    ->check(CLI::IsMember({"closed-forms", "necklace", "oracle-character", "oracle-os", "stability", "cross"}));
  verify_cmd->add_option("--q", opt.q, "restrict closed-forms to one q");
  verify_cmd->add_option("--n-max", opt.n_max, "largest n checked");
  verify_cmd->add_option("--lambda-max", opt.lambda_max, "largest part size checked");
  verify_cmd->add_option("--oracle-cap", opt.oracle_cap, "largest n an oracle may run at");
  verify_cmd->add_option("--out", opt.out_path, "write the check lines to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const &e) {
    err << "usage error: " << e.what() << '\n';
    for (auto *sub : app.get_subcommands())
      err << sub->help();
    if (app.get_subcommands().empty())
      err << app.help();
    return 2;
  }

  RunReport report;
  auto *sub = app.get_subcommands().front();
  report.command = sub->get_name() + (opt.suite.empty() ? "" : " " + opt.suite);
  for (auto const *o : sub->get_options()) {
    if (o->count() > 0 && !o->get_lnames().empty())
      report.parameters.emplace_back(o->get_lnames().front(), o->as<std::string>());
  }

  auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (sub == table_cmd)
      status = cmd_table(opt, report, out);
    else if (sub == basis_cmd)
      status = cmd_basis(opt, report, out);
    else if (sub == stability_cmd)
      status = cmd_stability(opt, report, out);
    else
      status = cmd_verify(opt, report, out);
  } catch (UsageError const &e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (CapExceededError const &e) {
    err << "refused: " << e.what() << " (raise " << e.flag() << " to allow)\n";
    return 2;
  } catch (DomainError const &e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << report.summary();
  if (sub != verify_cmd && !report.passed())
    err << report.check_lines();
  if (status == 0 && !report.passed())
    status = 1;
  return status;
}

} // namespace braidcohom::cli
