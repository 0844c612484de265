#include "superchar/vanishing.hpp"

#include <set>

#include "superchar/error.hpp"

namespace superchar {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string element_label(Element g) { return "g=" + std::to_string(g); }

}  // namespace

bool CaminaVerdict::agree() const {
  for (const auto& c : conditions)
    if (!c.informational && c.value != holds) return false;
  return true;
}

std::string CaminaVerdict::disagreement() const {
  std::string out;
  for (const auto& c : conditions) {
    if (c.informational || c.value == holds) continue;
    if (!out.empty()) out += ", ";
    out += c.name + "=" + yes_no(c.value);
    if (!c.detail.empty()) out += " (" + c.detail + ")";
  }
  return out;
}

const Condition* CaminaVerdict::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

Analysis::Analysis(const SuperTheory& s)
    : s_(s), nonvanishing_(s.size()), vanish_off_(s.size()) {}

const std::vector<Subgroup>& Analysis::s_normal() {
  if (!s_normal_) s_normal_ = s_normal_subgroups(s_);
  return *s_normal_;
}

const Subgroup& Analysis::center() {
  if (!center_) center_ = s_center(s_);
  return *center_;
}

const Subgroup& Analysis::commutator() {
  if (!commutator_) commutator_ = s_commutator(s_, Subgroup::whole(group()));
  return *commutator_;
}

const SeriesResult& Analysis::lower() {
  if (!lower_) lower_ = lower_series(s_);
  return *lower_;
}

const SeriesResult& Analysis::upper() {
  if (!upper_) upper_ = upper_series(s_);
  return *upper_;
}

std::optional<std::size_t> Analysis::nilpotence_class() { return upper().class_index; }

const ElementSet& Analysis::nonvanishing(std::size_t part) {
  auto& slot = nonvanishing_[part];
  if (!slot) {
    ElementSet set(group().order());
    const auto& y = s_.yparts();
    for (std::size_t b = 0; b < y.size(); ++b)
      if (!s_.sigma(part, b).is_zero())
        for (Element e : y.block(b)) set.insert(e);
    slot = std::move(set);
  }
  return *slot;
}

const Subgroup& Analysis::vanish_off(std::size_t part) {
  auto& slot = vanish_off_[part];
  if (!slot) slot = generated_subgroup(group(), nonvanishing(part));
  return *slot;
}

bool Analysis::vanishes_off(std::size_t part, const ElementSet& n) const {
  const auto& y = s_.yparts();
  for (std::size_t b = 0; b < y.size(); ++b) {
    if (n.contains(y.block(b).front())) continue;
    if (!s_.sigma(part, b).is_zero()) return false;
  }
  return true;
}

const std::vector<std::size_t>& Analysis::irr_over(const Subgroup& n) {
  auto it = irr_over_.find(n.members());
  if (it == irr_over_.end()) it = irr_over_.emplace(n.members(), superchar::irr_over(s_, n)).first;
  return it->second;
}

const Subgroup& Analysis::v_rel(const Subgroup& n) {
  if (auto it = v_rel_.find(n.members()); it != v_rel_.end()) return it->second;
  if (!is_s_normal(s_, n)) throw PreconditionError("V(S|N) needs an S-normal N");
  ElementSet gens(group().order());
  for (std::size_t part : irr_over(n)) gens |= nonvanishing(part);
  return v_rel_.emplace(n.members(), generated_subgroup(group(), gens)).first->second;
}

Subgroup Analysis::v_rel_product(const Subgroup& n) {
  Subgroup product = Subgroup::trivial(group());
  for (std::size_t part : irr_over(n)) {
    try {
      product = subgroup_product(group(), product, vanish_off(part));
    } catch (const PreconditionError& e) {
      throw InternalError(std::string("product of vanishing-off subgroups failed: ") + e.what());
    }
  }
  return product;
}

const Subgroup& Analysis::v_theory() {
  if (!v_theory_) v_theory_ = v_rel(commutator());
  return *v_theory_;
}

const SeriesResult& Analysis::v_series() {
  if (!v_series_) {
    std::vector<Subgroup> terms{v_theory()};
    while (true) {
      Subgroup next = s_commutator(s_, terms.back());
      if (next == terms.back()) break;
      terms.push_back(std::move(next));
    }
    SeriesResult r;
    r.kind = SeriesKind::v_series;
    r.stabilized = true;
    r.terms = std::move(terms);
    v_series_ = std::move(r);
  }
  return *v_series_;
}

const Subgroup& Analysis::u_rel(const Subgroup& n) {
  if (auto it = u_rel_.find(n.members()); it != u_rel_.end()) return it->second;
  if (!is_s_normal(s_, n)) throw PreconditionError("U(S|N) needs an S-normal N");
  Subgroup product = Subgroup::trivial(group());
  for (const auto& h : s_normal()) {
    if (!v_rel(h).contained_in(n)) continue;
    product = subgroup_product(group(), product, h);
  }
  return u_rel_.emplace(n.members(), std::move(product)).first->second;
}

const Subgroup& Analysis::u_theory() {
  if (!u_theory_) u_theory_ = s_abelian() ? Subgroup::whole(group()) : u_rel(center());
  return *u_theory_;
}

SeriesResult Analysis::u_chain(const Subgroup& n) {
  std::vector<Subgroup> terms{u_rel(n)};
  while (true) {
    Subgroup next = u_rel(terms.back());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  SeriesResult r;
  r.kind = SeriesKind::u_chain;
  r.stabilized = true;
  r.terms = std::move(terms);
  return r;
}

const DeflatedTheory& Analysis::deflated(const Subgroup& n) {
  deflated_analysis(n);
  return deflated_.at(n.members())->theory;
}

Analysis& Analysis::deflated_analysis(const Subgroup& n) {
  auto it = deflated_.find(n.members());
  if (it == deflated_.end()) {
    auto d = std::make_unique<Deflated>(Deflated{deflation(s_, n), nullptr});
    d->analysis = std::make_unique<Analysis>(d->theory.theory);
    it = deflated_.emplace(n.members(), std::move(d)).first;
  }
  return *it->second->analysis;
}

CaminaVerdict Analysis::camina_element(Element g) {
  const auto& grp = group();
  const auto& gs = commutator();
  CaminaVerdict v;
  v.subject = element_label(g);

  Condition c1{"chi-vanishes", true, {}};
  for (std::size_t part : irr_over(gs))
    if (!s_.sigma_at(part, g).is_zero()) {
      c1.value = false;
      c1.detail = "sigma_" + std::to_string(part) + "(g) = " + s_.sigma_at(part, g).to_string();
      break;
    }

  ElementSet cls = s_.s_class_set(g);
  ElementSet coset(grp.order());
  gs.members().for_each([&](Element z) { coset.insert(grp.mul(g, z)); });
  Condition c2{"coset", cls == coset, {}};
  if (!c2.value) c2.detail = "Cl_S(g) = " + describe(cls) + ", g[G,S] = " + describe(coset);

  Condition c3{"class-size", cls.size() == gs.order(), {}};
  if (!c3.value) c3.detail = std::to_string(cls.size()) + " vs " + std::to_string(gs.order());

  Condition c4{"transversal", true, {}};
  gs.members().for_each([&](Element z) {
    if (!c4.value) return;
    bool found = false;
    for (Element y : s_.s_class(g))
      if (grp.mul(grp.inv(g), y) == z) {
        found = true;
        break;
      }
    if (!found) {
      c4.value = false;
      c4.detail = "no y for z=" + std::to_string(z);
    }
  });

  v.holds = c1.value;
  v.conditions = {std::move(c1), std::move(c2), std::move(c3), std::move(c4)};
  return v;
}

CaminaVerdict Analysis::s_gcp(const Subgroup& n) {
  const auto& grp = group();
  const auto& gs = commutator();
  CaminaVerdict v;
  v.subject = "N=" + describe(n.members());
  v.vacuous = n.is_whole();
  ElementSet outside = n.members().complement();

  Condition c1{"camina-elements", true, {}};
  outside.for_each([&](Element g) {
    if (c1.value && !camina_element(g).holds) {
      c1.value = false;
      c1.detail = element_label(g) + " is not an S-Camina element";
    }
  });

  Condition c3{"class-size", true, {}};
  outside.for_each([&](Element g) {
    if (c3.value && s_.s_class(g).size() != gs.order()) {
      c3.value = false;
      c3.detail = element_label(g);
    }
  });

  Condition c4{"transversal", true, {}};
  outside.for_each([&](Element g) {
    if (!c4.value) return;
    ElementSet reached(grp.order());
    for (Element y : s_.s_class(g)) reached.insert(grp.mul(grp.inv(g), y));
    if (!gs.members().is_subset_of(reached)) {
      c4.value = false;
      c4.detail = element_label(g);
    }
  });

  Condition c5{"vanishing", true, {}};
  for (std::size_t part : irr_over(gs))
    if (!vanishes_off(part, n.members())) {
      c5.value = false;
      c5.detail = "sigma_" + std::to_string(part);
      break;
    }

  v.holds = c1.value;
  v.conditions.push_back(std::move(c1));
  if (gs.contained_in(n)) {
    bool d = is_delta_product(s_, gs, n);
    v.conditions.push_back({"delta-product", d, "S is a Delta-product over [G,S] and N"});
  }
  if (n.contained_in(gs)) {
    bool d = is_delta_product(s_, n, gs);
    v.conditions.push_back({"delta-product-literal", d, "S is a Delta-product over N and [G,S]", true});
  }
  v.conditions.push_back(std::move(c3));
  v.conditions.push_back(std::move(c4));
  v.conditions.push_back(std::move(c5));
  return v;
}

CaminaVerdict Analysis::camina_pair(const Subgroup& n) {
  const auto& grp = group();
  const auto& y = s_.yparts();
  CaminaVerdict v;
  v.subject = "N=" + describe(n.members());
  v.vacuous = n.is_whole();

  Condition c0{"coset", true, {}};
  for (std::size_t b = 0; b < y.size() && c0.value; ++b) {
    if (n.contains(y.block(b).front())) continue;
    ElementSet k = y.block_set(b);
    for (Element x : y.block(b)) {
      bool full = true;
      n.members().for_each([&](Element m) { full = full && k.contains(grp.mul(x, m)); });
      if (!full) {
        c0.value = false;
        c0.detail = "class " + describe(k) + " is not a union of N-cosets";
        break;
      }
    }
  }

  Condition c1{"star-product", is_star_product(s_, n), {}};
  const auto& vn = v_rel(n);
  Condition c3{"v-equals-n", vn == n, "V(S|N) = " + describe(vn.members())};

  Condition c2{"characters", true, {}};
  const auto& over = irr_over(n);
  for (std::size_t part : over)
    if (!vanishes_off(part, n.members())) {
      c2.value = false;
      c2.detail = "sigma_" + std::to_string(part) + " does not vanish off N";
      break;
    }
  if (c2.value)
    n.members().for_each([&](Element g) {
      if (!c2.value) return;
      bool some = false;
      for (std::size_t part : over) some = some || !s_.sigma_at(part, g).is_zero();
      if (!some) {
        c2.value = false;
        c2.detail = "every sigma in Irr(S|N) vanishes at " + element_label(g);
      }
    });
  if (n.is_trivial()) {
    c2.informational = true;
    c2.detail = "Irr(S|1) is empty";
  }

  v.holds = c0.value;
  v.conditions = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
  return v;
}

CaminaVerdict Analysis::camina_triple(const Subgroup& n, const Subgroup& m) {
  if (!m.contained_in(n)) throw PreconditionError("Camina triple needs M <= N");
  const auto& grp = group();
  const auto& y = s_.yparts();
  CaminaVerdict v;
  v.subject = "N=" + describe(n.members()) + " M=" + describe(m.members());
  v.vacuous = n.is_whole();
  ElementSet outside = n.members().complement();

  Condition c0{"coset", true, {}};
  for (std::size_t b = 0; b < y.size() && c0.value; ++b) {
    if (n.contains(y.block(b).front())) continue;
    ElementSet k = y.block_set(b);
    for (Element x : y.block(b)) {
      bool full = true;
      m.members().for_each([&](Element e) { full = full && k.contains(grp.mul(x, e)); });
      if (!full) {
        c0.value = false;
        c0.detail = "class " + describe(k) + " is not a union of M-cosets";
        break;
      }
    }
  }

  Condition c1{"delta-product", is_delta_product(s_, m, n), {}};

  const auto& d = deflated(m);
  Condition c2{"class-size", true, {}};
  outside.for_each([&](Element g) {
    if (!c2.value) return;
    std::size_t image = d.theory.s_class(d.quotient.projection[g]).size();
    if (s_.s_class(g).size() != image * m.order()) {
      c2.value = false;
      c2.detail = element_label(g) + ": " + std::to_string(s_.s_class(g).size()) + " vs " +
                  std::to_string(image) + "*" + std::to_string(m.order());
    }
  });

  Condition c3{"transversal", true, {}};
  outside.for_each([&](Element g) {
    if (!c3.value) return;
    ElementSet reached(grp.order());
    for (Element k : s_.s_class(g)) reached.insert(grp.mul(grp.inv(g), k));
    if (!m.members().is_subset_of(reached)) {
      c3.value = false;
      c3.detail = element_label(g);
    }
  });

  const auto& vm = v_rel(m);
  Condition c4{"v-below-n", vm.contained_in(n), "V(S|M) = " + describe(vm.members())};

  Condition c5{"vanishing", true, {}};
  for (std::size_t part : irr_over(m))
    if (!vanishes_off(part, n.members())) {
      c5.value = false;
      c5.detail = "sigma_" + std::to_string(part);
      break;
    }

  v.holds = c0.value;
  v.conditions = {std::move(c0), std::move(c1), std::move(c2), std::move(c3), std::move(c4), std::move(c5)};
  return v;
}

CaminaVerdict Analysis::vz() {
  const auto& grp = group();
  const auto& z = center();
  const auto& gs = commutator();
  const auto& vs = v_theory();
  CaminaVerdict v;
  v.subject = "theory";
  v.vacuous = s_abelian();

  Condition def{"definition", true, {}};
  for (std::size_t part : irr_over(gs))
    if (!vanishes_off(part, z.members())) {
      def.value = false;
      def.detail = "sigma_" + std::to_string(part) + " does not vanish off Z(S)";
      break;
    }
  v.holds = def.value;
  v.conditions.push_back(std::move(def));
  v.conditions.push_back({"v-below-z", vs.contained_in(z), "V(S) = " + describe(vs.members())});
  v.conditions.push_back({"sandwich", gs.contained_in(vs) && vs.contained_in(z), {}});
  if (!s_abelian()) {
    v.conditions.push_back({"z-equals-v", z == vs, {}});
    const auto& u = u_theory();
    v.conditions.push_back({"u-equals-commutator", u == gs, "U(S) = " + describe(u.members())});
  }
  if (gs.contained_in(z)) {
    v.conditions.push_back({"delta-product", is_delta_product(s_, gs, z), {}});
    const auto& d = deflated(gs);
    Condition size{"class-size", true, {}};
    Condition trans{"transversal", true, {}};
    z.members().complement().for_each([&](Element g) {
      std::size_t image = d.theory.s_class(d.quotient.projection[g]).size();
      if (size.value && s_.s_class(g).size() != image * gs.order()) {
        size.value = false;
        size.detail = element_label(g);
      }
      ElementSet reached(grp.order());
      for (Element k : s_.s_class(g)) reached.insert(grp.mul(grp.inv(g), k));
      if (trans.value && !gs.members().is_subset_of(reached)) {
        trans.value = false;
        trans.detail = element_label(g);
      }
    });
    v.conditions.push_back(std::move(size));
    v.conditions.push_back(std::move(trans));
  }
  return v;
}

bool Analysis::u_membership_rhs(const Subgroup& n, Element g) {
  for (std::size_t part = 0; part < s_.size(); ++part) {
    if (s_.kernel(part).contains(g)) continue;
    if (!vanishes_off(part, n.members())) return false;
  }
  return true;
}

std::optional<CheckReport> Analysis::u_quotient_check(const Subgroup& n, const Subgroup& h) {
  if (!v_rel(n).contained_in(h)) return std::nullopt;
  CheckReport report;
  const auto& uh = u_rel(h);
  auto& below = report.add("n-below-u");
  if (!n.contained_in(uh)) record_failure(below, "N is not contained in U(S|H) = " + describe(uh.members()));

  auto& q = deflated_analysis(n);
  const auto& d = deflated(n);
  Subgroup hbar = project(d.quotient, h);
  const auto& lhs = q.u_rel(hbar);
  ElementSet rhs = d.quotient.image(uh.members());
  auto& eq = report.add("quotient-identity");
  if (!(lhs.members() == rhs))
    record_failure(eq, "U(S^{G/N}|H/N) = " + describe(lhs.members()) + ", U(S|H)/N = " + describe(rhs));
  return report;
}

CheckReport Analysis::u_kernel_check(const Subgroup& n) {
  CheckReport report;
  auto& check = report.add("kernel-intersection");
  ElementSet meet = group().all();
  std::size_t used = 0;
  for (std::size_t part = 0; part < s_.size(); ++part) {
    if (vanish_off(part).contained_in(n)) continue;
    meet &= s_.kernel(part);
    ++used;
  }
  const auto& u = u_rel(n);
  if (!(meet == u.members()))
    record_failure(check, "U(S|N) = " + describe(u.members()) + ", intersection = " + describe(meet) +
                              (used == 0 ? " (empty family)" : ""));
  return report;
}

CheckReport Analysis::scd_check() {
  CheckReport report;
  const auto& z = center();
  const auto& gs = commutator();
  Rational index(static_cast<long>(group().order() / z.order()));

  auto& degree = report.add("degree");
  auto& restriction = report.add("center-modulus");
  auto& set = report.add("scd-set");
  std::set<Rational> predicted{Rational(1)};
  std::set<Rational> actual;
  for (std::size_t part = 0; part < s_.size(); ++part) actual.insert(s_.degree(part));

  for (std::size_t part : irr_over(gs)) {
    const Rational& d = s_.degree(part);
    Rational want = s_.norm_sq(part) * index;
    if (d * d != want)
      record_failure(degree, "sigma_" + std::to_string(part) + "(1)^2 = " + Rational(d * d).get_str() +
                                 ", ||X||^2 |G:Z(S)| = " + want.get_str());
    mpz_class root;
    mpz_class num = want.get_num();
    if (want.get_den() == 1 && mpz_perfect_square_p(num.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
      predicted.insert(Rational(root));
    } else {
      record_failure(set, "||X||^2 |G:Z(S)| = " + want.get_str() + " is not a square");
    }
    Cyclotomic top = Cyclotomic::from_rational(d * d);
    z.members().for_each([&](Element e) {
      Cyclotomic sq = hermitian_term(s_.sigma_at(part, e), s_.sigma_at(part, e));
      if (!(sq == top))
        record_failure(restriction, "|sigma_" + std::to_string(part) + "(" + std::to_string(e) + ")|^2 = " +
                                        sq.to_string());
    });
  }
  if (set.passed && predicted != actual) {
    std::string a, p;
    for (const auto& x : actual) a += (a.empty() ? "" : ",") + x.get_str();
    for (const auto& x : predicted) p += (p.empty() ? "" : ",") + x.get_str();
    record_failure(set, "scd(S) = {" + a + "}, predicted {" + p + "}");
  }
  return report;
}

Subgroup vanish_off(const SuperCharacter& sigma) {
  Analysis a(sigma.theory());
  return a.vanish_off(sigma.part());
}

Subgroup v_rel(const SuperTheory& s, const Subgroup& n) {
  Analysis a(s);
  return a.v_rel(n);
}

Subgroup v_theory(const SuperTheory& s) {
  Analysis a(s);
  return a.v_theory();
}

SeriesResult v_series(const SuperTheory& s) {
  Analysis a(s);
  return a.v_series();
}

Subgroup u_rel(const SuperTheory& s, const Subgroup& n) {
  Analysis a(s);
  return a.u_rel(n);
}

Subgroup u_theory(const SuperTheory& s) {
  Analysis a(s);
  return a.u_theory();
}

SeriesResult u_chain(const SuperTheory& s, const Subgroup& n) {
  Analysis a(s);
  return a.u_chain(n);
}

CaminaVerdict is_camina_element(const SuperTheory& s, Element g) {
  Analysis a(s);
  return a.camina_element(g);
}

CaminaVerdict is_s_gcp(const SuperTheory& s, const Subgroup& n) {
  if (!is_s_normal(s, n)) throw PreconditionError("S-GCP needs an S-normal N");
  Analysis a(s);
  return a.s_gcp(n);
}

CaminaVerdict is_camina_pair(const SuperTheory& s, const Subgroup& n) {
  if (!is_s_normal(s, n)) throw PreconditionError("Camina pair needs an S-normal N");
  Analysis a(s);
  return a.camina_pair(n);
}

CaminaVerdict is_camina_triple(const SuperTheory& s, const Subgroup& n, const Subgroup& m) {
  if (!is_s_normal(s, n) || !is_s_normal(s, m)) throw PreconditionError("Camina triple needs S-normal M, N");
  Analysis a(s);
  return a.camina_triple(n, m);
}

CaminaVerdict is_vz(const SuperTheory& s) {
  Analysis a(s);
  return a.vz();
}

bool u_membership_check(const SuperTheory& s, const Subgroup& n, Element g) {
  Analysis a(s);
  return a.u_membership_rhs(n, g) == a.u_rel(n).contains(g);
}

std::optional<CheckReport> u_quotient_check(const SuperTheory& s, const Subgroup& n, const Subgroup& h) {
  if (!is_s_normal(s, n) || !is_s_normal(s, h)) throw PreconditionError("U quotient check needs S-normal N, H");
  Analysis a(s);
  return a.u_quotient_check(n, h);
}

CheckReport u_kernel_check(const SuperTheory& s, const Subgroup& n) {
  Analysis a(s);
  return a.u_kernel_check(n);
}

CheckReport scd_check(const SuperTheory& s) {
  Analysis a(s);
  return a.scd_check();
}

}  // namespace superchar
