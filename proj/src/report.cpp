#include "divlat/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "divlat/doublechain.hpp"
#include "divlat/moebius.hpp"

namespace divlat {

using nlohmann::json;

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "zero";
}

namespace {

Sign parse_sign(const std::string& s) {
  if (s == "negative") return Sign::Negative;
  if (s == "positive") return Sign::Positive;
  if (s == "zero") return Sign::Zero;
  throw Error(ErrorCode::ParseError, "unknown sign '" + s + "'");
}

std::vector<Integer> values_of(const DivisorPoset& p, const IndexList& idx) {
  std::vector<Integer> out;
  out.reserve(idx.size());
  for (Index k : idx) out.push_back(p.value(k));
  return out;
}

json int_list(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

std::vector<Integer> parse_int_list(const json& a) {
  std::vector<Integer> out;
  for (const auto& s : a) out.emplace_back(s.get<std::string>());
  return out;
}

std::string join(const std::vector<Integer>& xs) {
  std::string s = "{";
  for (Index k = 0; k < xs.size(); ++k) {
    if (k) s += ", ";
    s += xs[k].get_str();
  }
  return s + "}";
}

}  // namespace

AnalysisReport build_report(std::span<const Integer> input, const ReportOptions& options) {
  AnalysisReport r;
  r.input.assign(input.begin(), input.end());
  const DivisorPoset given(input);
  r.input_gcd_closed = given.gcd_closed();
  if (!r.input_gcd_closed && !options.close) {
    throw Error(ErrorCode::NotGcdClosed,
                "input set is not GCD closed; rerun with --close to analyse its GCD closure");
  }
  r.closure_applied = !r.input_gcd_closed;
  const DivisorPoset p = r.closure_applied ? DivisorPoset(gcd_closure(given.elements())) : given;
  r.elements = p.elements();

  const PsiVector ps = psi(p);
  const MoebiusTable mu = mobius_recursive(p);
  for (Index i = 0; i < p.size(); ++i) {
    ElementRecord e;
    e.value = p.value(i);
    e.covers = values_of(p, p.lower_covers(i));
    e.generates_double_chain = generates_double_chain(p, i);
    e.mu_source = "recursive";
    if (e.generates_double_chain) {
      const ChainDecomposition d = decompose_chains(p, i);
      e.chain_a = values_of(p, d.chain_a);
      e.chain_b = values_of(p, d.chain_b);
      if (d.doubly_attached) e.doubly_attached = p.value(*d.doubly_attached);
      for (const auto& [k, eta] : d.eta) e.eta.emplace_back(p.value(k), eta);
      if (mobius_closed_form(p, i) != mu.column(i)) {
        throw std::logic_error("closed-form Möbius column disagrees at " + e.value.get_str());
      }
      e.mu_source = "closed-form";
    }
    e.psi = ps.values[i];
    e.sign = sign_of(e.psi);
    if (e.generates_double_chain && classify_psi_sign(p, i) != e.sign) {
      throw std::logic_error("structural Psi sign disagrees at " + e.value.get_str());
    }
    r.records.push_back(std::move(e));
  }

  r.determinant = determinant_via_psi(p);
  r.invertible = sgn(r.determinant) != 0;
  const auto structural = structural_inertia(p);
  r.double_chain_set = structural.has_value();
  if (structural) {
    r.inertia = *structural;
    r.inertia_method = "structural";
  } else {
    r.inertia = inertia_from_psi(p);
    r.inertia_method = "psi";
  }

  if (options.verify || p.size() <= options.verification_cap) {
    const ExactMatrix lcm = lcm_matrix(p);
    if (determinant_exact(lcm) != r.determinant) {
      throw std::logic_error("determinant via Psi disagrees with Bareiss elimination");
    }
    if (inertia_charpoly_oracle(lcm) != r.inertia) {
      throw std::logic_error("inertia disagrees with the characteristic polynomial oracle");
    }
    r.oracle_verified = true;
  }

  r.a_set = is_a_set(p);
  r.meet_tree = is_meet_tree(p);
  r.cube = is_cube(p);
  for (long k = 0; k < static_cast<long>(p.size()); ++k) {
    if (is_r_fold_gcd_closed(r.elements, k)) r.r_fold.push_back(k);
  }
  return r;
}

std::string report_to_json(const AnalysisReport& r, int indent) {
  json j;
  j["input"] = int_list(r.input);
  j["input_gcd_closed"] = r.input_gcd_closed;
  j["closure_applied"] = r.closure_applied;
  j["elements"] = int_list(r.elements);
  json recs = json::array();
  for (const auto& e : r.records) {
    json o;
    o["value"] = e.value.get_str();
    o["covers"] = int_list(e.covers);
    o["generates_double_chain"] = e.generates_double_chain;
    o["chain_a"] = int_list(e.chain_a);
    o["chain_b"] = int_list(e.chain_b);
    o["doubly_attached"] = e.doubly_attached ? json(e.doubly_attached->get_str()) : json(nullptr);
    json eta = json::array();
    for (const auto& [k, v] : e.eta) eta.push_back({k.get_str(), v});
    o["eta"] = eta;
    o["mu_source"] = e.mu_source;
    o["psi"] = to_string(e.psi);
    o["sign"] = to_string(e.sign);
    recs.push_back(o);
  }
  j["records"] = recs;
  j["determinant"] = to_string(r.determinant);
  j["invertible"] = r.invertible;
  j["inertia"] = {{"plus", r.inertia.plus},
                  {"minus", r.inertia.minus},
                  {"zero", r.inertia.zero},
                  {"method", r.inertia_method},
                  {"oracle_verified", r.oracle_verified}};
  j["classification"] = {{"a_set", r.a_set},
                         {"meet_tree", r.meet_tree},
                         {"double_chain_set", r.double_chain_set},
                         {"cube", r.cube},
                         {"r_fold", r.r_fold}};
  return j.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  try {
    AnalysisReport r;
    r.input = parse_int_list(j.at("input"));
    r.input_gcd_closed = j.at("input_gcd_closed").get<bool>();
    r.closure_applied = j.at("closure_applied").get<bool>();
    r.elements = parse_int_list(j.at("elements"));
    for (const auto& o : j.at("records")) {
      ElementRecord e;
      e.value = Integer(o.at("value").get<std::string>());
      e.covers = parse_int_list(o.at("covers"));
      e.generates_double_chain = o.at("generates_double_chain").get<bool>();
      e.chain_a = parse_int_list(o.at("chain_a"));
      e.chain_b = parse_int_list(o.at("chain_b"));
      if (!o.at("doubly_attached").is_null()) {
        e.doubly_attached = Integer(o.at("doubly_attached").get<std::string>());
      }
      for (const auto& pair : o.at("eta")) {
        e.eta.emplace_back(Integer(pair.at(0).get<std::string>()), pair.at(1).get<Index>());
      }
      e.mu_source = o.at("mu_source").get<std::string>();
      e.psi = parse_rational(o.at("psi").get<std::string>());
      e.sign = parse_sign(o.at("sign").get<std::string>());
      r.records.push_back(std::move(e));
    }
    r.determinant = parse_rational(j.at("determinant").get<std::string>());
    r.invertible = j.at("invertible").get<bool>();
    const auto& in = j.at("inertia");
    r.inertia = {in.at("plus").get<Index>(), in.at("minus").get<Index>(), in.at("zero").get<Index>()};
    r.inertia_method = in.at("method").get<std::string>();
    r.oracle_verified = in.at("oracle_verified").get<bool>();
    const auto& c = j.at("classification");
    r.a_set = c.at("a_set").get<bool>();
    r.meet_tree = c.at("meet_tree").get<bool>();
    r.double_chain_set = c.at("double_chain_set").get<bool>();
    r.cube = c.at("cube").get<bool>();
    r.r_fold = c.at("r_fold").get<std::vector<long>>();
    return r;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + ex.what());
  }
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input:        " << join(r.input) << (r.input_gcd_closed ? " (GCD closed)" : " (not GCD closed)")
     << '\n';
  if (r.closure_applied) os << "GCD closure:  " << join(r.elements) << '\n';
  os << "n:            " << r.elements.size() << "\n\n";
  std::size_t w = 7;
  for (const auto& e : r.records) w = std::max(w, e.value.get_str().size());
  const auto pad = [](std::string s, std::size_t width) {
    s.resize(std::max(s.size(), width), ' ');
    return s;
  };
  os << pad("element", w) << "  covers  double-chain  mu           psi\n";
  for (const auto& e : r.records) {
    os << pad(e.value.get_str(), w) << "  " << pad(std::to_string(e.covers.size()), 6) << "  "
       << pad(e.generates_double_chain ? "yes" : "no", 12) << "  " << pad(e.mu_source, 11) << "  "
       << to_string(e.psi) << " (" << to_string(e.sign) << ")\n";
    if (e.generates_double_chain && !(e.chain_a.empty() && e.chain_b.empty())) {
      os << "    A = " << join(e.chain_a) << ", B = " << join(e.chain_b);
      if (e.doubly_attached) os << ", doubly attached " << e.doubly_attached->get_str();
      os << ", eta:";
      for (const auto& [k, v] : e.eta) os << ' ' << k.get_str() << "->" << v;
      os << '\n';
    }
  }
  os << "\ndeterminant:  " << to_string(r.determinant) << (r.invertible ? "" : " (singular)") << '\n';
  os << "inertia:      " << r.inertia << " [" << r.inertia_method
     << (r.oracle_verified ? ", oracle-verified" : "") << "]\n";
  os << "A-set: " << (r.a_set ? "yes" : "no") << ", meet-tree: " << (r.meet_tree ? "yes" : "no")
     << ", double-chain set: " << (r.double_chain_set ? "yes" : "no")
     << ", cube: " << (r.cube ? "yes" : "no") << ", r-fold GCD closed for r in {";
  for (Index k = 0; k < r.r_fold.size(); ++k) os << (k ? ", " : "") << r.r_fold[k];
  os << "}\n";
  return os.str();
}

}  // namespace divlat
