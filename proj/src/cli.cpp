#include "divlat/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "divlat/doublechain.hpp"
#include "divlat/families.hpp"
#include "divlat/moebius.hpp"
#include "divlat/report.hpp"

namespace divlat::cli {

using nlohmann::json;

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const bool sign = token[0] == '-' || token[0] == '+';
    const bool digits = token.size() > (sign ? 1u : 0u) &&
                        std::all_of(token.begin() + (sign ? 1 : 0), token.end(),
                                    [](unsigned char c) { return std::isdigit(c) != 0; });
    if (!digits) throw Error(ErrorCode::ParseError, "not an integer: '" + token + "'");
    out.emplace_back(token[0] == '+' ? token.substr(1) : token);
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

namespace {

struct SetInput {
  std::vector<std::string> values;
  std::string file;
};

void add_set_input(CLI::App* cmd, SetInput& in) {
  cmd->add_option("values", in.values, "integers, or '-' to read them from stdin");
  cmd->add_option("--file", in.file, "file of whitespace/comma separated integers");
}

std::vector<Integer> read_set(const SetInput& in, std::istream& stdin_stream) {
  std::string text;
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw Error(ErrorCode::ParseError, "cannot read file '" + in.file + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  for (const auto& v : in.values) {
    if (v == "-") {
      std::ostringstream ss;
      ss << stdin_stream.rdbuf();
      text += ' ' + ss.str();
    } else {
      text += ' ' + v;
    }
  }
  auto xs = parse_integers(text);
  if (xs.empty()) throw Error(ErrorCode::EmptyInput, "no integers given");
  return xs;
}

DivisorPoset maybe_closed(const std::vector<Integer>& xs, bool close) {
  return close ? DivisorPoset(gcd_closure(xs)) : DivisorPoset(xs);
}

void print_report(const AnalysisReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report_to_json(r) << '\n';
  } else {
    out << report_to_text(r);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Divisor semilattices, Möbius functions and LCM matrix inertia", "divlat"};
  app.require_subcommand(1);

  // analyze
  SetInput analyze_in;
  bool analyze_json = false, analyze_close = false, analyze_verify = false;
  Index analyze_cap = 64;
  auto* analyze = app.add_subcommand("analyze", "full report for a set");
  add_set_input(analyze, analyze_in);
  analyze->add_flag("--json", analyze_json, "emit JSON");
  analyze->add_flag("--close", analyze_close, "analyse the GCD closure of a non-closed set");
  analyze->add_flag("--verify", analyze_verify, "run the oracle cross-checks for any n");
  analyze->add_option("--cap", analyze_cap, "largest n verified by default");

  // family
  std::string family_kind;
  std::string fam_p = "2", fam_q = "3", fam_r;
  std::string fam_primes;
  long fam_m = 2, fam_n = 12, fam_index = 1;
  bool family_json = false, family_verify = false;
  auto* family = app.add_subcommand("family", "generate and analyse a named family");
  family->add_option("kind", family_kind, "grid | squarefree | triple | cube | classical | figure1d | chain-leaves")
      ->required()
      ->check(CLI::IsMember({"grid", "squarefree", "triple", "cube", "classical", "figure1d", "chain-leaves"}));
  family->add_option("--p", fam_p, "first prime (grid)");
  family->add_option("--q", fam_q, "second prime (grid, triple)");
  family->add_option("--r", fam_r, "chain prime (triple)");
  family->add_option("--primes", fam_primes, "comma separated primes (squarefree, triple)");
  family->add_option("--m", fam_m, "size parameter m (grid, squarefree, triple, chain-leaves trunk)");
  family->add_option("--n", fam_n, "n for the classical set {1..n}");
  family->add_option("--index", fam_index, "which cube instance, 1..3");
  family->add_flag("--json", family_json, "emit JSON");
  family->add_flag("--verify", family_verify, "run the oracle cross-checks for any n");

  // mobius
  SetInput mobius_in;
  std::string mobius_column, mobius_method = "recursive";
  bool mobius_json = false, mobius_close = false;
  auto* mobius = app.add_subcommand("mobius", "Möbius function table or column");
  add_set_input(mobius, mobius_in);
  mobius->add_option("--column", mobius_column, "element x_i whose column mu(., x_i) is printed");
  mobius->add_option("--method", mobius_method, "recursive | closed | zeta")
      ->check(CLI::IsMember({"recursive", "closed", "zeta"}));
  mobius->add_flag("--json", mobius_json, "emit JSON");
  mobius->add_flag("--close", mobius_close, "use the GCD closure of the input");

  // dot
  SetInput dot_in;
  bool dot_close = false;
  auto* dot = app.add_subcommand("dot", "Hasse diagram in Graphviz DOT");
  add_set_input(dot, dot_in);
  dot->add_flag("--close", dot_close, "use the GCD closure of the input");

  // search
  Index search_n = 0;
  long search_max_prime = 7;
  std::vector<std::string> search_universes;
  bool search_json = false;
  auto* search = app.add_subcommand("search", "lower bound on the maximum i+ over GCD closed n-sets");
  search->add_option("--n", search_n, "set size")->required()->check(CLI::Range(1, 12));
  search->add_option("--max-prime", search_max_prime, "largest prime used by the default universes");
  search->add_option("--universe", search_universes, "explicit N values; searches subsets of divisors(N)");
  search->add_flag("--json", search_json, "emit JSON");

  // closure
  SetInput closure_in;
  bool closure_json = false;
  auto* closure = app.add_subcommand("closure", "smallest GCD closed superset");
  add_set_input(closure, closure_in);
  closure->add_flag("--json", closure_json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      ReportOptions opt{analyze_close, analyze_verify, analyze_cap};
      print_report(build_report(read_set(analyze_in, in), opt), analyze_json, out);
    } else if (*family) {
      DivisorPoset p = [&]() -> DivisorPoset {
        if (family_kind == "grid") return grid_family(Integer(fam_p), Integer(fam_q), fam_m);
        if (family_kind == "squarefree") {
          auto ps = fam_primes.empty() ? first_primes(static_cast<Index>(std::max(fam_m, 0L)))
                                       : parse_integers(fam_primes);
          return squarefree_pairs_family(ps);
        }
        if (family_kind == "triple") {
          if (fam_primes.empty() && fam_r.empty()) return triple_prime_family(fam_m);
          if (fam_primes.empty() || fam_r.empty()) {
            throw Error(ErrorCode::BadParams, "triple: give both --primes and --r, or neither");
          }
          return triple_prime_family(parse_integers(fam_primes), Integer(fam_q), Integer(fam_r), fam_m);
        }
        if (family_kind == "cube") {
          if (fam_index < 1 || fam_index > 3) throw Error(ErrorCode::BadParams, "cube: --index must be 1, 2 or 3");
          return cube_instances()[static_cast<Index>(fam_index - 1)];
        }
        if (family_kind == "classical") return classical_set(fam_n);
        if (family_kind == "chain-leaves") return chain_with_leaves(fam_m);
        return figure1d_instance();
      }();
      ReportOptions opt;
      opt.verify = family_verify;
      print_report(build_report(p.elements(), opt), family_json, out);
    } else if (*mobius) {
      const DivisorPoset p = maybe_closed(read_set(mobius_in, in), mobius_close);
      if (mobius_method == "closed") p.require_gcd_closed("closed-form Möbius");
      const auto table = [&] {
        return mobius_method == "zeta" ? mobius_via_zeta_inverse(p) : mobius_recursive(p);
      };
      if (!mobius_column.empty()) {
        const Index i = p.find(Integer(parse_integers(mobius_column).at(0)));
        if (i == npos) throw Error(ErrorCode::BadParams, "--column " + mobius_column + " is not in the set");
        std::map<Index, Integer> col;
        if (mobius_method == "closed") {
          col = mobius_closed_form(p, i);
        } else {
          col = table().column(i);
        }
        json j = json::object();
        for (Index k = 0; k <= i; ++k) {
          if (!p.leq(k, i)) continue;
          auto it = col.find(k);
          const Integer v = it == col.end() ? Integer(0) : it->second;
          if (mobius_json) {
            j[p.value(k).get_str()] = v.get_str();
          } else {
            out << "mu(" << p.value(k).get_str() << ", " << p.value(i).get_str() << ") = " << v.get_str() << '\n';
          }
        }
        if (mobius_json) {
          out << json{{"column", p.value(i).get_str()}, {"method", mobius_method}, {"values", j}}.dump(2) << '\n';
        }
      } else {
        if (mobius_method == "closed") {
          throw Error(ErrorCode::BadParams, "--method closed needs --column");
        }
        const MoebiusTable mu = table();
        if (mobius_json) {
          json rows = json::array();
          for (Index j = 0; j < p.size(); ++j) {
            json row = json::array();
            for (Index i = 0; i < p.size(); ++i) row.push_back(mu.at(j, i).get_str());
            rows.push_back(row);
          }
          out << json{{"elements", [&] {
                         json a = json::array();
                         for (const auto& x : p.elements()) a.push_back(x.get_str());
                         return a;
                       }()},
                      {"method", mobius_method},
                      {"mu", rows}}
                     .dump(2)
              << '\n';
        } else {
          for (Index j = 0; j < p.size(); ++j) {
            for (Index i = 0; i < p.size(); ++i) out << (i ? " " : "") << mu.at(j, i).get_str();
            out << '\n';
          }
        }
      }
    } else if (*dot) {
      out << to_dot(maybe_closed(read_set(dot_in, in), dot_close));
    } else if (*search) {
      std::vector<Integer> universes;
      for (const auto& u : search_universes) {
        for (auto& v : parse_integers(u)) universes.push_back(std::move(v));
      }
      if (universes.empty()) universes = default_universes(search_max_prime);
      const SearchResult res = search_max_iplus(search_n, universes);
      if (search_json) {
        json w = json::array();
        for (const auto& x : res.witness) w.push_back(x.get_str());
        json us = json::array();
        for (const auto& x : universes) us.push_back(x.get_str());
        out << json{{"n", res.n},
                    {"lower_bound", res.best_plus},
                    {"witness", w},
                    {"witness_inertia",
                     {{"plus", res.witness_inertia.plus},
                      {"minus", res.witness_inertia.minus},
                      {"zero", res.witness_inertia.zero}}},
                    {"universes", us},
                    {"candidates", res.candidates}}
                   .dump(2)
            << '\n';
      } else {
        out << "a_" << res.n << " >= " << res.best_plus << " (lower bound over " << res.candidates
            << " GCD closed sets)\n";
        out << "witness: {";
        for (Index k = 0; k < res.witness.size(); ++k) out << (k ? ", " : "") << res.witness[k].get_str();
        out << "} inertia " << res.witness_inertia << '\n';
      }
    } else if (*closure) {
      const auto xs = gcd_closure(read_set(closure_in, in));
      if (closure_json) {
        json a = json::array();
        for (const auto& x : xs) a.push_back(x.get_str());
        out << a.dump() << '\n';
      } else {
        for (Index k = 0; k < xs.size(); ++k) out << (k ? " " : "") << xs[k].get_str();
        out << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::NotGcdClosed ? kExitNotClosed : kExitUsage;
  }
  return kExitOk;
}

}  // namespace divlat::cli
