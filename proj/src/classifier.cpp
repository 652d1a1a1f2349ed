#include "birat/classifier.hpp"

#include <algorithm>

namespace birat {

const char* to_string(Kappa k) {
  switch (k) {
    case Kappa::MinusInfinity: return "-inf";
    case Kappa::Zero: return "0";
    case Kappa::One: return "1";
    case Kappa::Two: return "2";
  }
  return "?";
}

const char* to_string(Subclass s) {
  switch (s) {
    case Subclass::Rational: return "rational";
    case Subclass::IrrationalRuled: return "irrational ruled";
    case Subclass::K3: return "K3";
    case Subclass::Enriques: return "Enriques";
    case Subclass::Abelian: return "abelian";
    case Subclass::Bielliptic: return "bielliptic";
    case Subclass::ProperlyElliptic: return "properly elliptic";
    case Subclass::GeneralType: return "general type";
  }
  return "?";
}

const char* to_string(Pluricanonical p) {
  switch (p) {
    case Pluricanonical::BasePointFree: return "base point free";
    case Pluricanonical::BirationalMorphism: return "birational morphism";
    case Pluricanonical::Exception: return "exception";
  }
  return "?";
}

std::vector<std::string> consistency_check(const SurfaceInvariants& s) {
  std::vector<std::string> out;
  if (s.q && *s.q < 0) out.push_back("q < 0");
  if (s.p_g && *s.p_g < 0) out.push_back("p_g < 0");
  for (const auto& [n, p] : s.plurigenera) {
    if (n < 1) out.push_back("plurigenus index " + std::to_string(n) + " < 1");
    if (p < 0) out.push_back("P_" + std::to_string(n) + " < 0");
  }
  if (s.q && s.p_g && s.chi && *s.chi != 1 - *s.q + *s.p_g)
    out.push_back("chi = " + std::to_string(*s.chi) + " but 1 - q + p_g = " + std::to_string(1 - *s.q + *s.p_g));
  if (s.chi && s.K2 && s.e && 12 * *s.chi != *s.K2 + *s.e)
    out.push_back("Noether: 12 chi = " + std::to_string(12 * *s.chi) + " but K^2 + e = " + std::to_string(*s.K2 + *s.e));
  if (s.p_g) {
    auto it = s.plurigenera.find(1);
    if (it != s.plurigenera.end() && it->second != *s.p_g) out.push_back("P_1 differs from p_g");
  }
  // a non-zero section of mK gives injections H^0(mK) -> H^0(kmK)
  std::map<Int, Int> table = s.plurigenera;
  if (s.p_g) table.emplace(1, *s.p_g);
  for (const auto& [m, pm] : table)
    for (const auto& [n, pn] : table)
      if (m >= 1 && pm >= 1 && n > m && n % m == 0 && pn < pm)
        out.push_back("P_" + std::to_string(n) + " < P_" + std::to_string(m) + " although " + std::to_string(m) +
                      " divides " + std::to_string(n));
  return out;
}

bool castelnuovo_rational(Int q, Int P2) { return q == 0 && P2 == 0; }

Int kappa_zero_plurigenus(Int order, Int n) {
  if (order < 1 || n < 1) throw DomainError("order and n must be positive");
  return n % order == 0 ? 1 : 0;
}

Int general_type_plurigenus(Int chi, Int K2, Int n) {
  if (K2 < 1 || chi < 1) throw DomainError("minimal general type needs K^2 >= 1 and chi >= 1");
  if (n < 2) throw DomainError("the formula holds for n >= 2");
  return checked::add(chi, checked::mul(checked::mul(n, n - 1) / 2, K2));
}

Pluricanonical pluricanonical_behavior(Int n, Int p_g, Int K2) {
  if (n <= 2) throw DomainError("|nK| for n <= 2 depends on data the record does not carry");
  if (K2 < 1 || p_g < 0) throw DomainError("minimal general type needs K^2 >= 1");
  if (n >= 6) return Pluricanonical::BirationalMorphism;
  if (n == 5) return Pluricanonical::BasePointFree;
  if (p_g == 2 && K2 == 1) return Pluricanonical::Exception;
  if (n == 3 && p_g == 3 && K2 == 2) return Pluricanonical::Exception;
  return Pluricanonical::BirationalMorphism;
}

static Int need(const std::optional<Int>& v, const char* name, const char* clause) {
  if (!v) throw InsufficientData(std::string(name) + " is needed to decide " + clause);
  return *v;
}

static bool table_matches(const SurfaceInvariants& s, Int order) {
  for (const auto& [n, p] : s.plurigenera)
    if (p != kappa_zero_plurigenus(order, n)) return false;
  return true;
}

Classification classify(const SurfaceInvariants& s) {
  const auto violations = consistency_check(s);
  if (!violations.empty()) throw InconsistentRecord(violations.front());
  auto it = s.plurigenera.find(12);
  if (it == s.plurigenera.end()) throw InsufficientData("P_12 is needed for every clause");
  const Int p12 = it->second;
  Classification c;

  if (p12 == 0) {
    c.kappa = Kappa::MinusInfinity;
    const Int q = need(s.q, "q", "rational versus irrational ruled");
    // P_2 = 0 follows from P_12 = 0
    c.subclass = castelnuovo_rational(q, 0) ? Subclass::Rational : Subclass::IrrationalRuled;
    return c;
  }

  if (p12 == 1) {
    c.kappa = Kappa::Zero;
    if (s.minimal && s.K2 && *s.K2 != 0) throw InconsistentRecord("kappa = 0 but K^2 = " + std::to_string(*s.K2) + " on a minimal model");
    const Int pg = need(s.p_g, "p_g", "the kappa = 0 subclass");
    const Int q = need(s.q, "q", "the kappa = 0 subclass");
    if (pg == 1 && q == 1) throw InconsistentRecord("impossible case: kappa = 0 with p_g = q = 1 does not occur");
    if (s.bdf_case && !(pg == 0 && q == 1)) throw InconsistentRecord("a bielliptic type was given for a non-bielliptic record");
    if (pg == 1 && q == 0) {
      c.subclass = Subclass::K3;
      c.canonical_order = 1;
    } else if (pg == 0 && q == 0) {
      c.subclass = Subclass::Enriques;
      c.canonical_order = 2;
    } else if (pg == 1 && q == 2) {
      c.subclass = Subclass::Abelian;
      c.canonical_order = 1;
    } else if (pg == 0 && q == 1) {
      c.subclass = Subclass::Bielliptic;
      if (s.bdf_case) {
        c.canonical_order = bdf_minimal_power(BdFCase{*s.bdf_case});
      } else {
        for (Int o : {2, 3, 4, 6})
          if (table_matches(s, o)) c.admissible_orders.push_back(o);
        if (c.admissible_orders.empty()) throw InconsistentRecord("no bielliptic order fits the plurigenera");
        if (c.admissible_orders.size() == 1) c.canonical_order = c.admissible_orders.front();
      }
    } else {
      throw InconsistentRecord("impossible case: kappa = 0 with p_g = " + std::to_string(pg) + ", q = " + std::to_string(q));
    }
    if (c.canonical_order && !table_matches(s, *c.canonical_order))
      throw InconsistentRecord(std::string("plurigenera do not match nK trivial first at n = ") +
                               std::to_string(*c.canonical_order));
    return c;
  }

  if (!s.minimal) throw InsufficientData("P_12 >= 2 is decided by K^2 on a minimal model; the record is not minimal");
  const Int k2 = need(s.K2, "K^2", "kappa = 1 versus kappa = 2");
  if (k2 < 0) throw InconsistentRecord("K^2 < 0 on a minimal surface with P_12 >= 2");
  if (k2 == 0) {
    c.kappa = Kappa::One;
    c.subclass = Subclass::ProperlyElliptic;
    return c;
  }
  c.kappa = Kappa::Two;
  c.subclass = Subclass::GeneralType;
  if (s.chi) {
    if (*s.chi < 1) throw InconsistentRecord("chi < 1 on a minimal surface of general type");
    for (const auto& [n, p] : s.plurigenera)
      if (n >= 2 && p != general_type_plurigenus(*s.chi, k2, n))
        throw InconsistentRecord("P_" + std::to_string(n) + " = " + std::to_string(p) + " but chi + n(n-1)/2 K^2 = " +
                                 std::to_string(general_type_plurigenus(*s.chi, k2, n)));
  }
  return c;
}

}  // namespace birat
