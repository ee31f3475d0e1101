#pragma once

#include <vector>

#include "fracdim/ifs.hpp"
#include "fracdim/sets.hpp"

namespace fracdim {

enum class CantorKind { Constant, BlocksProp37, Explicit };

/// Ratio rule k ↦ c_k with c_k in (0, 1/2), usable for 1 <= k <= horizon.
/// Explicit ratio lists repeat cyclically up to the horizon.
class CantorSpec {
 public:
  static CantorSpec constant(Scalar ratio, std::size_t horizon);
  static CantorSpec explicit_ratios(std::vector<Scalar> ratios, std::size_t horizon);
  /// c_k = 1/3 on [4^(n-1), 2·4^(n-1)), 1/9 on [2·4^(n-1), 4^n).
  static CantorSpec dyadic_blocks(std::size_t horizon);

  /// Throws HorizonExceeded for k = 0 or k > horizon.
  Scalar ratio(std::size_t k) const;

  CantorKind kind() const { return kind_; }
  std::size_t horizon() const { return horizon_; }
  /// Stored ratios: one for Constant, the list for Explicit, none for blocks.
  const std::vector<Scalar>& listed_ratios() const { return ratios_; }

  friend bool operator==(const CantorSpec&, const CantorSpec&) = default;

 private:
  CantorSpec(CantorKind kind, std::vector<Scalar> ratios, std::size_t horizon);

  CantorKind kind_;
  std::vector<Scalar> ratios_;
  std::size_t horizon_;
};

CantorSpec prop37_spec(std::size_t horizon);

/// Keeps the two outer λ-proportions of every interval. Throws
/// RatioOutOfRange unless 0 < λ < 1/2.
IntervalSet gen_step(const IntervalSet& c, const Scalar& lambda);

/// C^k_n: gen_step with c_{k+1}, ..., c_{k+n} applied to [0, 1].
IntervalSet cantor_prefractal(const CantorSpec& spec, std::size_t k, std::size_t n);

struct PiProduct {
  std::size_t k = 0;
  std::size_t n = 0;
  Scalar value = 1;  // c_{k+1} ··· c_{k+n}
};

PiProduct pi_product(const CantorSpec& spec, std::size_t k, std::size_t n);

/// π(k, 0), π(k, 1), ..., π(k, n_max), computed incrementally.
std::vector<Scalar> pi_products(const CantorSpec& spec, std::size_t k, std::size_t n_max);

struct BoxSequencePoint {
  std::size_t n = 0;
  double s = 0;  // n·log 2 / log(1/π(k, n))
};

std::vector<BoxSequencePoint> cantor_box_sequence(const CantorSpec& spec, std::size_t k,
                                                  std::size_t n_max);

/// Level k holds x ↦ c_k x and x ↦ c_k x + 1 − c_k. Constant specs give an
/// autonomous system; otherwise one level per index up to the horizon.
IndexedSystem cantor_to_ifs(const CantorSpec& spec);

}  // namespace fracdim
