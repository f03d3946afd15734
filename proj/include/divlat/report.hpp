#pragma once

// Analysis report aggregating structure, Möbius, Psi, determinant and
// inertia for one divisor set, with JSON and text renderings.

#include <optional>
#include <string>
#include <vector>

#include "divlat/exact.hpp"
#include "divlat/lattice.hpp"
#include "divlat/matrices.hpp"

namespace divlat {

struct ElementRecord {
  Integer value;
  std::vector<Integer> covers;
  bool generates_double_chain = false;
  std::vector<Integer> chain_a;
  std::vector<Integer> chain_b;
  std::optional<Integer> doubly_attached;
  /// (core element, eta) pairs, ascending by element.
  std::vector<std::pair<Integer, Index>> eta;
  std::string mu_source;  // "closed-form" or "recursive"
  Rational psi;
  Sign sign = Sign::Zero;

  friend bool operator==(const ElementRecord&, const ElementRecord&) = default;
};

struct AnalysisReport {
  std::vector<Integer> input;
  bool input_gcd_closed = false;
  bool closure_applied = false;
  std::vector<Integer> elements;  // the analysed (GCD closed) set
  std::vector<ElementRecord> records;
  Rational determinant;
  bool invertible = false;
  InertiaTriple inertia;
  std::string inertia_method;  // "structural" or "psi"
  bool oracle_verified = false;
  bool a_set = false;
  bool meet_tree = false;
  bool double_chain_set = false;
  bool cube = false;
  /// Fold counts r for which the set is r-fold GCD closed.
  std::vector<long> r_fold;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct ReportOptions {
  bool close = false;         // apply gcd_closure to non-closed input
  bool verify = false;        // force the oracle cross-checks for any n
  Index verification_cap = 64;
};

/// Throws NotGcdClosed when the input is not GCD closed and options.close is
/// false. Throws std::logic_error if any cross-check fails.
AnalysisReport build_report(std::span<const Integer> input, const ReportOptions& options = {});

std::string report_to_json(const AnalysisReport& r, int indent = 2);
AnalysisReport report_from_json(const std::string& text);
std::string report_to_text(const AnalysisReport& r);

std::string_view to_string(Sign s);

}  // namespace divlat
