#ifndef BIRAT_CLASSIFIER_HPP
#define BIRAT_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birat/fibration.hpp"

namespace birat {

struct SurfaceInvariants {
  std::optional<Int> q;
  std::optional<Int> p_g;
  std::optional<Int> K2;  // on a minimal model
  std::optional<Int> e;
  std::optional<Int> chi;
  std::map<Int, Int> plurigenera;  // n -> P_n
  bool minimal = false;
  std::optional<BdF> bdf_case;  // bielliptic type, when known
};

// Missing fields prevent a decision.
struct InsufficientData : DomainError {
  using DomainError::DomainError;
};

// The record contradicts the classification.
struct InconsistentRecord : DomainError {
  using DomainError::DomainError;
};

std::vector<std::string> consistency_check(const SurfaceInvariants& s);

bool castelnuovo_rational(Int q, Int P2);

enum class Kappa { MinusInfinity, Zero, One, Two };
enum class Subclass { Rational, IrrationalRuled, K3, Enriques, Abelian, Bielliptic, ProperlyElliptic, GeneralType };

const char* to_string(Kappa k);
const char* to_string(Subclass s);

struct Classification {
  Kappa kappa = Kappa::MinusInfinity;
  std::optional<Subclass> subclass;
  std::optional<Int> canonical_order;  // smallest n with nK trivial
  std::vector<Int> admissible_orders;  // bielliptic without a known type
};

Classification classify(const SurfaceInvariants& s);

// P_n on a surface with kappa = 0 whose nK is first trivial at n = order.
Int kappa_zero_plurigenus(Int order, Int n);

// P_n = chi + n(n-1)/2 K^2 on a minimal surface of general type, n >= 2.
Int general_type_plurigenus(Int chi, Int K2, Int n);

enum class Pluricanonical { BasePointFree, BirationalMorphism, Exception };

const char* to_string(Pluricanonical p);

// Behaviour of |nK| on a minimal surface of general type, n >= 3.
Pluricanonical pluricanonical_behavior(Int n, Int p_g, Int K2);

}  // namespace birat

#endif  // BIRAT_CLASSIFIER_HPP
