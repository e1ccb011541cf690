#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/errors.hpp"

namespace axial {

/// Raised when market parameters violate their bounds. The message names
/// the violated bound.
class InvalidMarketError : public Error {
 public:
  explicit InvalidMarketError(const std::string& bound)
      : Error("invalid market parameters: requires " + bound) {}
};

/// Linear-city market: consumers spread uniformly over a line of the
/// given length, store A at `offset_a` from the left end, store B at
/// `offset_b` from the right end, transport priced per unit of distance.
struct MarketConfig {
  double line_length = 0;    // l
  double offset_a = 0;       // a: store A's distance from its end
  double offset_b = 0;       // b: store B's distance from its end
  double transport_cost = 0; // c: cost per unit of distance

  /// Length of the stretch between the stores that both compete for.
  /// Evaluated symmetrically in (a, b).
  double contested_length() const noexcept {
    return line_length - (offset_a + offset_b);
  }

  MarketConfig swapped() const noexcept {
    return MarketConfig{line_length, offset_b, offset_a, transport_cost};
  }

  void validate() const {
    if (!(line_length > 0)) throw InvalidMarketError("l > 0");
    if (!(transport_cost > 0)) throw InvalidMarketError("c > 0");
    if (!(offset_a >= 0)) throw InvalidMarketError("a >= 0");
    if (!(offset_b >= 0)) throw InvalidMarketError("b >= 0");
    if (!(offset_a + offset_b <= line_length)) throw InvalidMarketError("a + b <= l");
  }
};

struct PricePair {
  double price_a = 0;  // p1
  double price_b = 0;  // p2
};

/// How the contested segment splits at given prices. `share_a`/`share_b`
/// are the stretches each store wins beyond its captive hinterland;
/// quantities add the hinterlands back in.
struct DemandSplit {
  double share_a = 0;     // x
  double share_b = 0;     // y
  double quantity_a = 0;  // q1 = a + x
  double quantity_b = 0;  // q2 = b + y
};

/// One store has priced the other out of the whole contested segment.
/// The split formulas stop applying there, so this is an error state;
/// the note reports what a full capture would amount to.
class UndercutRegimeError : public Error {
 public:
  enum class Store { kA, kB };

  UndercutRegimeError(Store capturer, double captured_quantity, double rival_quantity)
      : Error(make_message(capturer, captured_quantity, rival_quantity)),
        capturer_(capturer),
        captured_quantity_(captured_quantity),
        rival_quantity_(rival_quantity) {}

  Store capturer() const noexcept { return capturer_; }
  double captured_quantity() const noexcept { return captured_quantity_; }
  double rival_quantity() const noexcept { return rival_quantity_; }

 private:
  static std::string make_message(Store capturer, double captured, double rival) {
    const char* name = capturer == Store::kA ? "A" : "B";
    const char* other = capturer == Store::kA ? "B" : "A";
    return std::string("undercut regime: store ") + name +
           " captures the entire contested segment (store " + name + " would sell " +
           std::to_string(captured) + ", store " + other + " only its hinterland " +
           std::to_string(rival) + ")";
  }

  Store capturer_;
  double captured_quantity_;
  double rival_quantity_;
};

/// The numeric solver ran out of iterations. Carries the last iterate.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(PricePair last, std::size_t iterations)
      : Error("best-response iteration did not converge after " + std::to_string(iterations) +
              " iterations (last prices " + std::to_string(last.price_a) + ", " +
              std::to_string(last.price_b) + ")"),
        last_(last),
        iterations_(iterations) {}

  PricePair last_prices() const noexcept { return last_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  PricePair last_;
  std::size_t iterations_;
};

namespace detail {

/// Splits the contested segment without any regime guard. The smaller
/// side is derived by subtraction from the exact total, so share_a +
/// share_b reproduces the contested length and quantity_a + quantity_b
/// reproduces the line length bit-for-bit, and swapping (a, b) together
/// with the prices swaps every field bit-for-bit.
inline DemandSplit split_unchecked(const MarketConfig& m, const PricePair& p) {
  const double segment = m.contested_length();
  const double lead = (p.price_b - p.price_a) / m.transport_cost;

  DemandSplit split;
  if (lead >= 0) {
    split.share_a = 0.5 * (segment + lead);
    split.share_b = segment - split.share_a;
  } else {
    split.share_b = 0.5 * (segment - lead);
    split.share_a = segment - split.share_b;
  }

  const double qa = m.offset_a + split.share_a;
  const double qb = m.offset_b + split.share_b;
  if (qa == qb) {
    split.quantity_a = 0.5 * m.line_length;
    split.quantity_b = split.quantity_a;
  } else if (qa > qb) {
    split.quantity_a = qa;
    split.quantity_b = m.line_length - qa;
  } else {
    split.quantity_b = qb;
    split.quantity_a = m.line_length - qb;
  }
  return split;
}

}  // namespace detail

/// Demand split at given prices, valid only while both no-undercut
/// conditions hold strictly: each price must stay below the rival's
/// price plus the transport cost across the contested segment.
inline DemandSplit demand_split(const MarketConfig& m, const PricePair& p) {
  m.validate();
  const double segment = m.contested_length();
  const double freight = m.transport_cost * segment;
  if (!(p.price_a < p.price_b + freight)) {
    // A priced itself out: B takes the whole middle.
    throw UndercutRegimeError(UndercutRegimeError::Store::kB, m.offset_b + segment, m.offset_a);
  }
  if (!(p.price_b < p.price_a + freight)) {
    throw UndercutRegimeError(UndercutRegimeError::Store::kA, m.offset_a + segment, m.offset_b);
  }
  return detail::split_unchecked(m, p);
}

/// Profits at given prices: price times quantity served.
inline std::pair<double, double> profits(const MarketConfig& m, const PricePair& p) {
  const auto split = demand_split(m, p);
  return {p.price_a * split.quantity_a, p.price_b * split.quantity_b};
}

/// Named validity conditions, stable strings for reports.
namespace violation {
inline constexpr const char* kEmptyContestedSegment = "empty_contested_segment";
inline constexpr const char* kUndercutPriceA = "undercut_condition_p1";
inline constexpr const char* kUndercutPriceB = "undercut_condition_p2";
inline constexpr const char* kNegativeQuantityA = "negative_quantity_q1";
inline constexpr const char* kNegativeQuantityB = "negative_quantity_q2";
}  // namespace violation

/// Duopoly outcome: prices, demand split, profits, and whether the
/// closed-form solution actually holds there. Invalid outcomes keep
/// their numbers and name every failed condition instead of erroring,
/// so parameter sweeps can map the whole space.
struct Equilibrium {
  PricePair prices;
  DemandSplit split;
  double profit_a = 0;  // pi1
  double profit_b = 0;  // pi2
  bool valid = true;
  std::vector<std::string> violations;
};

namespace detail {

inline Equilibrium outcome_at(const MarketConfig& m, const PricePair& p) {
  Equilibrium eq;
  eq.prices = p;
  eq.split = split_unchecked(m, p);
  eq.profit_a = p.price_a * eq.split.quantity_a;
  eq.profit_b = p.price_b * eq.split.quantity_b;

  const double segment = m.contested_length();
  const double freight = m.transport_cost * segment;
  if (!(m.offset_a + m.offset_b < m.line_length)) {
    eq.violations.push_back(violation::kEmptyContestedSegment);
  }
  if (!(p.price_a < p.price_b + freight)) {
    eq.violations.push_back(violation::kUndercutPriceA);
  }
  if (!(p.price_b < p.price_a + freight)) {
    eq.violations.push_back(violation::kUndercutPriceB);
  }
  if (!(eq.split.quantity_a >= 0)) eq.violations.push_back(violation::kNegativeQuantityA);
  if (!(eq.split.quantity_b >= 0)) eq.violations.push_back(violation::kNegativeQuantityB);
  eq.valid = eq.violations.empty();
  return eq;
}

}  // namespace detail

/// Closed-form duopoly equilibrium. Each store's price solves its own
/// first-order condition given the other's: the price ends up at
/// c * (l + (own_offset - rival_offset) / 3), splitting demand
/// accordingly. Validity is checked after the fact.
inline Equilibrium equilibrium(const MarketConfig& m) {
  m.validate();
  const double tilt = (m.offset_a - m.offset_b) / 3.0;
  const double tilt_b = (m.offset_b - m.offset_a) / 3.0;
  const PricePair prices{m.transport_cost * (m.line_length + tilt),
                         m.transport_cost * (m.line_length + tilt_b)};
  return detail::outcome_at(m, prices);
}

struct BestResponseOutcome {
  Equilibrium equilibrium;
  std::size_t iterations = 0;
};

/// Independent numeric route to the equilibrium: alternate analytic
/// best responses (each store re-prices against the rival's current
/// price) from p1 = p2 = c*l/2 until prices move less than `tol`.
inline BestResponseOutcome best_response_solve(const MarketConfig& m, double tol = 1e-9,
                                               std::size_t max_iterations = 1000) {
  m.validate();
  if (!(tol > 0)) throw InvalidMarketError("tol > 0");

  const double base_a = m.transport_cost * (m.line_length + m.offset_a - m.offset_b);
  const double base_b = m.transport_cost * (m.line_length + m.offset_b - m.offset_a);
  double price_a = m.transport_cost * m.line_length / 2.0;
  double price_b = price_a;

  for (std::size_t iteration = 1; iteration <= max_iterations; ++iteration) {
    const double next_a = 0.5 * (base_a + price_b);
    const double next_b = 0.5 * (base_b + next_a);
    const bool settled =
        std::abs(next_a - price_a) < tol && std::abs(next_b - price_b) < tol;
    price_a = next_a;
    price_b = next_b;
    if (settled) {
      return BestResponseOutcome{detail::outcome_at(m, PricePair{price_a, price_b}), iteration};
    }
  }
  throw NoConvergenceError(PricePair{price_a, price_b}, max_iterations);
}

/// Which market parameter a sweep varies.
enum class MarketParameter { kOffsetA, kOffsetB, kTransportCost, kLineLength };

inline const char* to_string(MarketParameter p) noexcept {
  switch (p) {
    case MarketParameter::kOffsetA: return "a";
    case MarketParameter::kOffsetB: return "b";
    case MarketParameter::kTransportCost: return "c";
    case MarketParameter::kLineLength: return "l";
  }
  return "?";
}

struct StaticsRow {
  double value = 0;                     // the varied parameter's value
  std::optional<Equilibrium> outcome;   // absent if the config is out of bounds
  std::string error;                    // bound violation, when absent
};

struct StaticsTable {
  MarketParameter parameter = MarketParameter::kOffsetA;
  std::vector<StaticsRow> rows;
};

/// One equilibrium per grid value of the chosen parameter. Rows whose
/// configuration violates a bound carry the bound instead of aborting
/// the sweep.
inline StaticsTable comparative_statics(const MarketConfig& base, MarketParameter parameter,
                                        const std::vector<double>& grid) {
  StaticsTable table;
  table.parameter = parameter;
  table.rows.reserve(grid.size());
  for (double value : grid) {
    MarketConfig m = base;
    switch (parameter) {
      case MarketParameter::kOffsetA: m.offset_a = value; break;
      case MarketParameter::kOffsetB: m.offset_b = value; break;
      case MarketParameter::kTransportCost: m.transport_cost = value; break;
      case MarketParameter::kLineLength: m.line_length = value; break;
    }
    StaticsRow row;
    row.value = value;
    try {
      row.outcome = equilibrium(m);
    } catch (const InvalidMarketError& e) {
      row.error = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace axial
