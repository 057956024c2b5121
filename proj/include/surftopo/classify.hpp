#pragma once

// Homeomorphism classification of compact surfaces by (orientability,
// genus, boundary count), with the matching pi_1 presentations and H_1.

#include <algorithm>
#include <string>
#include <vector>

#include "surftopo/complex.hpp"
#include "surftopo/homology.hpp"
#include "surftopo/surface.hpp"

namespace surftopo {

/// Sigma(g,k) when orientable, U(g,k) otherwise (g >= 1 there).
struct SurfaceClass {
  bool orientable = true;
  int genus = 0;
  int boundary_count = 0;

  long long euler_characteristic() const {
    return orientable ? 2 - 2LL * genus - boundary_count : 2LL - genus - boundary_count;
  }

  bool is_valid() const { return genus >= 0 && boundary_count >= 0 && (orientable || genus >= 1); }

  bool operator==(const SurfaceClass&) const = default;
};

inline SurfaceClass sigma(int g, int k = 0) { return {true, g, k}; }
inline SurfaceClass u(int g, int k = 0) { return {false, g, k}; }

inline std::string to_string(const SurfaceClass& s) {
  return std::string(s.orientable ? "Sigma" : "U") + "(g=" + std::to_string(s.genus) +
         ",k=" + std::to_string(s.boundary_count) + ")";
}

/// Inverts chi = 2 - 2g - k (orientable) or chi = 2 - g - k.
inline SurfaceClass class_from_invariants(bool orientable, long long chi, long long k) {
  const long long twice_or_once = 2 - k - chi;
  if (orientable) {
    if (twice_or_once < 0 || twice_or_once % 2 != 0) {
      throw TopologyError(Errc::inconsistent_invariants,
                          "orientable surface with chi=" + std::to_string(chi) +
                              " and k=" + std::to_string(k) + " has no integral genus");
    }
    return sigma(static_cast<int>(twice_or_once / 2), static_cast<int>(k));
  }
  if (twice_or_once <= 0) {
    throw TopologyError(Errc::inconsistent_invariants,
                        "nonorientable surface with chi=" + std::to_string(chi) +
                            " and k=" + std::to_string(k) + " would have genus <= 0");
  }
  return u(static_cast<int>(twice_or_once), static_cast<int>(k));
}

inline SurfaceClass classify(const SurfaceComplex& c) {
  if (triangle_components(c).size() > 1) {
    throw TopologyError(Errc::not_connected,
                        "classify: complex has several components; split them first");
  }
  require_surface(c, "classify");
  const bool orientable = is_orientable(detail::propagate_orientation(c));
  const auto k = static_cast<long long>(detail::trace_boundary(c).size());
  return class_from_invariants(orientable, euler_characteristic(c), k);
}

inline bool homeomorphic(const SurfaceComplex& a, const SurfaceComplex& b) {
  return classify(a) == classify(b);
}

struct Letter {
  std::string symbol;
  int exponent = 1;

  bool operator==(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  bool operator==(const GroupPresentation&) const = default;
};

enum class PresentationForm {
  reduced,    // bordered surfaces emitted as free groups (one boundary generator eliminated)
  one_relator,  // keeps every c_i and the single surface relator
};

inline GroupPresentation fundamental_group(const SurfaceClass& s,
                                           PresentationForm form = PresentationForm::reduced) {
  GroupPresentation p;
  GroupWord relator;
  for (int i = 1; i <= s.genus; ++i) {
    const std::string a = "a" + std::to_string(i);
    if (s.orientable) {
      const std::string b = "b" + std::to_string(i);
      p.generators.push_back(a);
      p.generators.push_back(b);
      relator.insert(relator.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    } else {
      p.generators.push_back(a);
      relator.insert(relator.end(), {{a, 1}, {a, 1}});
    }
  }
  const bool reduce = form == PresentationForm::reduced && s.boundary_count > 0;
  const int kept = reduce ? s.boundary_count - 1 : s.boundary_count;
  for (int i = 1; i <= kept; ++i) p.generators.push_back("c" + std::to_string(i));
  if (!reduce) {
    for (int i = 1; i <= s.boundary_count; ++i) relator.push_back({"c" + std::to_string(i), 1});
    if (!relator.empty()) p.relators.push_back(std::move(relator));
  }
  return p;
}

/// `<a1,b1 | a1 b1 a1^-1 b1^-1>`; runs of one letter print as powers.
inline std::string to_string(const GroupPresentation& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) s += ",";
    s += p.generators[i];
  }
  if (!p.relators.empty()) s += " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) s += ", ";
    const GroupWord& w = p.relators[r];
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (i) s += " ";
      s += w[i].symbol;
      const long long power = static_cast<long long>(j - i) * w[i].exponent;
      if (power != 1) s += "^" + std::to_string(power);
      i = j;
    }
  }
  return s + ">";
}

/// Abelianization through the Smith normal form of the exponent-sum matrix.
inline HomologyGroup abelianize(const GroupPresentation& p) {
  IntegerMatrix m(p.generators.size(), p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const Letter& l : p.relators[r]) {
      auto it = std::find(p.generators.begin(), p.generators.end(), l.symbol);
      if (it == p.generators.end()) {
        throw TopologyError(Errc::syntax_error, "relator uses unknown generator " + l.symbol);
      }
      m(static_cast<std::size_t>(it - p.generators.begin()), r) += l.exponent;
    }
  }
  return cokernel(m);
}

inline HomologyGroup first_homology(const SurfaceClass& s) {
  HomologyGroup h;
  const int g = s.genus;
  const int k = s.boundary_count;
  if (s.orientable) {
    h.betti = static_cast<std::size_t>(k == 0 ? 2 * g : 2 * g + k - 1);
  } else if (k == 0) {
    h.betti = static_cast<std::size_t>(g - 1);
    h.torsion.push_back(2);
  } else {
    h.betti = static_cast<std::size_t>(g + k - 1);
  }
  return h;
}

}  // namespace surftopo
