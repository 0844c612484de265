// Vanishing-off subgroups V(chi), V(S|N), V(S) and the V-series; the
// subgroups U(S|N), U(S) and the U-chain; S-Camina elements, pairs and
// triples; generalised S-Camina pairs; VZ(S)-groups and scd(S).

#ifndef SUPERCHAR_VANISHING_HPP_
#define SUPERCHAR_VANISHING_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superchar/structure.hpp"

namespace superchar {

struct Condition {
  std::string name;
  bool value = false;
  std::string detail;
  // Recorded for the report only; not part of the agreement test.
  bool informational = false;
};

// One predicate evaluated through several characterizations. The first
// condition is the definition; `holds` is its value.
struct CaminaVerdict {
  std::string subject;
  bool holds = false;
  bool vacuous = false;
  std::vector<Condition> conditions;

  // Every non-informational condition has the same value as `holds`.
  bool agree() const;
  // "name=value" for each disagreeing condition.
  std::string disagreement() const;
  const Condition* find(const std::string& name) const;
};

// Caches the subgroups computed for one theory. Not thread-safe; the theory
// must outlive the analysis.
class Analysis {
 public:
  explicit Analysis(const SuperTheory& s);
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const SuperTheory& theory() const { return s_; }
  const GroupTable& group() const { return s_.group(); }

  const std::vector<Subgroup>& s_normal();
  const Subgroup& center();
  const Subgroup& commutator();  // [G,S]
  bool s_abelian() const { return is_s_abelian(s_); }
  const SeriesResult& lower();
  const SeriesResult& upper();
  std::optional<std::size_t> nilpotence_class();

  // {g : sigma(g) != 0} and the subgroup it generates.
  const ElementSet& nonvanishing(std::size_t part);
  const Subgroup& vanish_off(std::size_t part);
  // True when sigma vanishes on every element outside `n`.
  bool vanishes_off(std::size_t part, const ElementSet& n) const;

  const std::vector<std::size_t>& irr_over(const Subgroup& n);
  // V(S|N) from its generator definition; {1} when Irr(S|N) is empty.
  const Subgroup& v_rel(const Subgroup& n);
  // V(S|N) as the product of the V(chi), chi in Irr(S|N). Throws
  // InternalError when a partial product is not a subgroup.
  Subgroup v_rel_product(const Subgroup& n);
  const Subgroup& v_theory();
  const SeriesResult& v_series();

  // Product of the S-normal H with V(S|H) <= N.
  const Subgroup& u_rel(const Subgroup& n);
  // U(S|Z(S)), or G when the theory is S-abelian.
  const Subgroup& u_theory();
  SeriesResult u_chain(const Subgroup& n);

  const DeflatedTheory& deflated(const Subgroup& n);
  Analysis& deflated_analysis(const Subgroup& n);

  CaminaVerdict camina_element(Element g);
  CaminaVerdict s_gcp(const Subgroup& n);
  CaminaVerdict camina_pair(const Subgroup& n);
  // M <= N.
  CaminaVerdict camina_triple(const Subgroup& n, const Subgroup& m);
  CaminaVerdict vz();

  // Every sigma with g outside its kernel vanishes on G \ N.
  bool u_membership_rhs(const Subgroup& n, Element g);
  // nullopt when V(S|N) <= H fails.
  std::optional<CheckReport> u_quotient_check(const Subgroup& n, const Subgroup& h);
  CheckReport u_kernel_check(const Subgroup& n);
  CheckReport scd_check();

 private:
  struct Deflated {
    DeflatedTheory theory;
    std::unique_ptr<Analysis> analysis;
  };

  const SuperTheory& s_;
  std::optional<std::vector<Subgroup>> s_normal_;
  std::optional<Subgroup> center_, commutator_, v_theory_, u_theory_;
  std::optional<SeriesResult> lower_, upper_, v_series_;
  std::vector<std::optional<ElementSet>> nonvanishing_;
  std::vector<std::optional<Subgroup>> vanish_off_;
  std::unordered_map<ElementSet, std::vector<std::size_t>, ElementSetHash> irr_over_;
  std::unordered_map<ElementSet, Subgroup, ElementSetHash> v_rel_, u_rel_;
  std::unordered_map<ElementSet, std::unique_ptr<Deflated>, ElementSetHash> deflated_;
};

// Stand-alone forms of the Analysis queries.
Subgroup vanish_off(const SuperCharacter& sigma);
Subgroup v_rel(const SuperTheory& s, const Subgroup& n);
Subgroup v_theory(const SuperTheory& s);
SeriesResult v_series(const SuperTheory& s);
Subgroup u_rel(const SuperTheory& s, const Subgroup& n);
Subgroup u_theory(const SuperTheory& s);
SeriesResult u_chain(const SuperTheory& s, const Subgroup& n);
CaminaVerdict is_camina_element(const SuperTheory& s, Element g);
CaminaVerdict is_s_gcp(const SuperTheory& s, const Subgroup& n);
CaminaVerdict is_camina_pair(const SuperTheory& s, const Subgroup& n);
CaminaVerdict is_camina_triple(const SuperTheory& s, const Subgroup& n, const Subgroup& m);
CaminaVerdict is_vz(const SuperTheory& s);
// True when g in U(S|N) agrees with the character characterization.
bool u_membership_check(const SuperTheory& s, const Subgroup& n, Element g);
std::optional<CheckReport> u_quotient_check(const SuperTheory& s, const Subgroup& n, const Subgroup& h);
CheckReport u_kernel_check(const SuperTheory& s, const Subgroup& n);
CheckReport scd_check(const SuperTheory& s);

}  // namespace superchar

#endif  // SUPERCHAR_VANISHING_HPP_
