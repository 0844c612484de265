#include "superchar/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "superchar/error.hpp"

namespace superchar {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string set_label(const Subgroup& h) { return describe(h.members()); }

std::string n_scope(const Subgroup& n) { return "N=" + set_label(n); }

std::string pair_scope(const char* a, const Subgroup& x, const char* b, const Subgroup& y) {
  return std::string(a) + "=" + set_label(x) + " " + b + "=" + set_label(y);
}

// The term of index i (1-based for lower and V-series, 0-based for the
// upper series), holding at the limit past the end.
const Subgroup& term(const SeriesResult& r, std::size_t i) {
  return r.terms[std::min(i, r.terms.size() - 1)];
}

class Suite {
 public:
  explicit Suite(const SuperTheory& s) : s_(s), a_(s) {}

  std::vector<TheoremReport> run() {
    celt();
    corgcp();
    cp();
    vs();
    zeta();
    class_and_hyper();
    vsn();
    vseries();
    vterm();
    vzs();
    zs();
    vznilp();
    scd();
    unormal();
    irr();
    uorder();
    ugroup();
    ucorr();
    ucor();
    ugroupp();
    ucap();
    udelta();
    uchain();
    uquot();
    ukernel();
    final_theorem();
    sabelian_gcp();
    orthogonality();
    prop42();
    return order();
  }

 private:
  void emit(const std::string& id, std::string scope, Status status, std::string witness = {}) {
    out_.push_back(TheoremReport{id, std::move(scope), status, std::move(witness)});
  }

  void emit_check(const std::string& id, std::string scope, bool ok, std::string witness = {}) {
    emit(id, std::move(scope), ok ? Status::pass : Status::fail, ok ? std::string{} : std::move(witness));
  }

  void emit_verdict(const std::string& id, std::string scope, const CaminaVerdict& v) {
    if (!v.agree()) {
      emit(id, std::move(scope), Status::fail, "holds=" + yes_no(v.holds) + ": " + v.disagreement());
      return;
    }
    std::string note;
    for (const auto& c : v.conditions)
      if (c.informational && c.value != v.holds) note += "note: " + c.name + "=" + yes_no(c.value) + " ";
    if (!note.empty()) note.pop_back();
    emit(id, std::move(scope), v.vacuous ? Status::vacuous : Status::pass, note);
  }

  const std::vector<Subgroup>& normals() { return a_.s_normal(); }
  const GroupTable& group() const { return s_.group(); }
  bool nonabelian() const { return !a_.s_abelian(); }

  // (G,N) is a GCP.
  bool gcp(const Subgroup& n) {
    auto it = gcp_.find(n.members());
    if (it == gcp_.end()) it = gcp_.emplace(n.members(), a_.s_gcp(n).holds).first;
    return it->second;
  }

  void celt() {
    for (Element g = 0; g < group().order(); ++g) emit_verdict("T-celt", "g=" + std::to_string(g), a_.camina_element(g));
  }

  void corgcp() {
    for (const auto& n : normals()) {
      auto v = a_.s_gcp(n);
      gcp_[n.members()] = v.holds;
      emit_verdict("T-corgcp", n_scope(n), v);
    }
  }

  void cp() {
    const auto& gs = a_.commutator();
    for (const auto& n : normals()) {
      if (!gcp(n)) continue;
      std::string bad;
      if (!gs.contained_in(n)) bad += "[G,S] not in N; ";
      for (const auto& m : normals())
        if (n.contained_in(m) && !m.is_whole() && !gcp(m)) bad += "(G," + set_label(m) + ") not a GCP; ";
      for (const auto& k : normals()) {
        if (!k.contained_in(n)) continue;
        auto& sub = a_.deflated_analysis(k);
        Subgroup image = project(a_.deflated(k).quotient, n);
        if (!sub.s_gcp(image).holds) bad += "deflation by " + set_label(k) + " loses the GCP; ";
      }
      if (nonabelian() && !a_.center().contained_in(n)) bad += "Z(S) not in N; ";
      emit_check("L-cp", n_scope(n), bad.empty(), bad);
    }
  }

  void vs() {
    const auto& v = a_.v_theory();
    std::string bad;
    if (!gcp(v)) bad += "(G,V(S)) not a GCP; ";
    if (!a_.commutator().contained_in(v)) bad += "[G,S] not in V(S); ";
    if (nonabelian() && !a_.center().contained_in(v)) bad += "Z(S) not in V(S); ";
    ElementSet meet = group().all();
    for (const auto& n : normals()) {
      if (!gcp(n)) continue;
      meet &= n.members();
      if (!v.contained_in(n)) bad += "V(S) not in GCP " + set_label(n) + "; ";
    }
    if (!(meet == v.members())) bad += "intersection of GCPs is " + describe(meet) + "; ";
    emit_check("L-vs", "theory", bad.empty(), "V(S)=" + set_label(v) + ": " + bad);
  }

  void zeta() {
    const auto& up = a_.upper();
    const auto& gs = a_.commutator();
    const auto& v = a_.v_theory();
    for (std::size_t m = 1; m <= up.terms.size(); ++m) {
      if (gs.contained_in(term(up, m))) continue;
      const auto& next = term(up, m + 1);
      emit_check("T-zeta", "m=" + std::to_string(m), next.contained_in(v),
                 "zeta_" + std::to_string(m + 1) + "=" + set_label(next) + " V(S)=" + set_label(v));
    }
  }

  void class_and_hyper() {
    const auto& up = a_.upper();
    const auto& v = a_.v_theory();
    auto c = a_.nilpotence_class();
    if (c) {
      const auto& z = term(up, *c - 1);
      emit_check("C-class", "class=" + std::to_string(*c), z.contained_in(v),
                 "zeta_" + std::to_string(*c - 1) + "=" + set_label(z) + " V(S)=" + set_label(v));
      emit("C-hyper", "theory", Status::not_applicable, "S-nilpotent");
    } else {
      emit("C-class", "theory", Status::not_applicable, "not S-nilpotent");
      const auto& h = up.terms.back();
      emit_check("C-hyper", "theory", h.contained_in(v), "hypercenter=" + set_label(h) + " V(S)=" + set_label(v));
    }
  }

  void vsn() {
    const auto& v = a_.v_theory();
    for (const auto& n : normals()) {
      auto& sub = a_.deflated_analysis(n);
      if (sub.s_abelian()) continue;
      const auto& q = a_.deflated(n).quotient;
      std::string bad;
      if (!n.contained_in(v)) bad += "N not in V(S); ";
      ElementSet image = q.image(v.members());
      if (!sub.v_theory().members().is_subset_of(image))
        bad += "V(S^{G/N})=" + set_label(sub.v_theory()) + " not in " + describe(image) + "; ";
      emit_check("L-vsn", n_scope(n), bad.empty(), bad);
    }
  }

  void vseries() {
    const auto& low = a_.lower();
    const auto& vser = a_.v_series();
    std::size_t len = std::max(low.terms.size(), vser.terms.size()) + 1;
    // lower: terms[i-1] = gamma_i; v-series: terms[i-1] = V_i.
    auto gamma = [&](std::size_t i) -> const Subgroup& { return term(low, i - 1); };
    auto vi = [&](std::size_t i) -> const Subgroup& { return term(vser, i - 1); };

    std::string bad;
    for (std::size_t i = 1; i <= len; ++i) {
      if (!gamma(i + 1).contained_in(vi(i)) || !vi(i).contained_in(gamma(i)))
        bad += "i=" + std::to_string(i) + ": V_i=" + set_label(vi(i)) + "; ";
    }
    emit_check("T-vseries", "sandwich", bad.empty(), bad);

    for (std::size_t n = 1; n <= len; ++n) {
      if (!vi(n).proper_in(gamma(n))) continue;
      std::string why;
      for (std::size_t i = 1; i <= n; ++i)
        if (!vi(i).proper_in(gamma(i))) why += "V_" + std::to_string(i) + " = gamma_" + std::to_string(i) + "; ";
      const auto& vn = vi(n);
      if (!is_s_normal(s_, vn)) {
        why += "V_n not S-normal; ";
      } else {
        auto& sub = a_.deflated_analysis(vn);
        const auto& q = a_.deflated(vn).quotient;
        auto c = sub.nilpotence_class();
        if (c != n) why += "deflated class " + (c ? std::to_string(*c) : std::string("none")) + "; ";
        const auto& sv = sub.v_series();
        for (std::size_t i = 1; i <= n; ++i) {
          ElementSet want = q.image(vi(i).members());
          const auto& got = term(sv, i - 1);
          if (!(got.members() == want))
            why += "V_" + std::to_string(i) + " of the deflation is " + set_label(got) + ", image is " +
                   describe(want) + "; ";
        }
      }
      emit_check("T-vseries", "n=" + std::to_string(n), why.empty(), why);
    }
  }

  void vterm() {
    bool nilpotent = a_.nilpotence_class().has_value();
    bool ends = a_.v_series().terms.back().is_trivial();
    emit_check("C-vterm", "theory", nilpotent == ends,
               "S-nilpotent=" + yes_no(nilpotent) + " V-series ends at 1=" + yes_no(ends));
  }

  void vzs() {
    auto v = a_.vz();
    const char* names[] = {"definition", "v-below-z", "delta-product", "class-size", "transversal"};
    std::string bad;
    bool first = v.holds;
    for (const char* name : names) {
      const auto* c = v.find(name);
      if (c && c->value != first) bad += std::string(name) + "=" + yes_no(c->value) + "; ";
    }
    emit_check("L-vzs", a_.commutator().contained_in(a_.center()) ? "[G,S]<=Z(S)" : "theory", bad.empty(),
               "VZ=" + yes_no(first) + ": " + bad);
  }

  void zs() {
    auto v = a_.vz();
    const auto* c = v.find("sandwich");
    bool sandwich = c && c->value;
    emit_check("T-zs", "theory", sandwich == v.holds, "VZ=" + yes_no(v.holds) + " sandwich=" + yes_no(sandwich));
  }

  void vznilp() {
    bool vz = a_.vz().holds;
    if (!vz) return emit("T-vznilp", "theory", Status::not_applicable, "not a VZ(S)-group");
    if (!nonabelian()) return emit("T-vznilp", "theory", Status::not_applicable, "S-abelian, class 1");
    auto c = a_.nilpotence_class();
    emit_check("T-vznilp", "theory", c == 2u, "class " + (c ? std::to_string(*c) : std::string("none")));
  }

  void scd() {
    if (!a_.vz().holds || !nonabelian()) return emit("L-scd", "theory", Status::not_applicable);
    auto r = a_.scd_check();
    emit_check("L-scd", "theory", r.ok(), r.first_failure());
  }

  void unormal() {
    for (const auto& n : normals()) {
      const auto& u = a_.u_rel(n);
      emit_check("L-unormal", n_scope(n), is_s_normal(s_, u), "U(S|N)=" + set_label(u));
    }
  }

  void irr() {
    for (const auto& m : normals())
      for (const auto& n : normals()) {
        const auto& im = a_.irr_over(m);
        const auto& in = a_.irr_over(n);
        bool subset = std::includes(in.begin(), in.end(), im.begin(), im.end());
        emit_check("L-irr", pair_scope("M", m, "N", n), m.contained_in(n) == subset,
                   "M<=N=" + yes_no(m.contained_in(n)) + " Irr(S|M) in Irr(S|N)=" + yes_no(subset));
      }
  }

  void uorder() {
    for (const auto& h : normals())
      for (const auto& n : normals()) {
        if (!h.contained_in(n)) continue;
        const auto& uh = a_.u_rel(h);
        const auto& un = a_.u_rel(n);
        emit_check("L-uorder", pair_scope("H", h, "N", n), uh.contained_in(un),
                   "U(S|H)=" + set_label(uh) + " U(S|N)=" + set_label(un));
      }
  }

  void ugroup() {
    for (const auto& h : normals())
      for (const auto& n : normals()) {
        bool left = h.contained_in(a_.u_rel(n));
        bool right = a_.v_rel(h).contained_in(n);
        emit_check("L-ugroup", pair_scope("H", h, "N", n), left == right,
                   "H<=U(S|N)=" + yes_no(left) + " V(S|H)<=N=" + yes_no(right));
      }
  }

  void ucorr() {
    for (const auto& h : normals())
      for (const auto& n : normals()) {
        bool left = h.contained_in(a_.u_rel(n));
        bool right = is_delta_product(s_, h, n);
        std::string bad;
        if (left != right) bad += "H<=U(S|N)=" + yes_no(left) + " delta-product=" + yes_no(right) + "; ";
        if (h.contained_in(n)) {
          auto t = a_.camina_triple(n, h);
          if (!t.agree()) bad += "triple holds=" + yes_no(t.holds) + ": " + t.disagreement() + "; ";
        }
        emit_check("C-ucorr", pair_scope("H", h, "N", n), bad.empty(), bad);
      }
  }

  void ucor() {
    for (const auto& n : normals()) {
      bool fixed = a_.u_rel(n) == n;
      bool star = is_star_product(s_, n);
      std::string bad;
      if (fixed != star) bad += "N=U(S|N)=" + yes_no(fixed) + " star-product=" + yes_no(star) + "; ";
      auto p = a_.camina_pair(n);
      if (!p.agree()) bad += "pair holds=" + yes_no(p.holds) + ": " + p.disagreement() + "; ";
      emit_check("C-ucor", n_scope(n), bad.empty(), bad);
    }
  }

  bool irr_vanishes_off(const Subgroup& k, const Subgroup& n) {
    for (std::size_t part : a_.irr_over(k))
      if (!a_.vanishes_off(part, n.members())) return false;
    return true;
  }

  void ugroupp() {
    if (!nonabelian()) return emit("T-ugroupp", "theory", Status::not_applicable, "S-abelian");
    for (const auto& n : normals()) {
      const auto& u = a_.u_rel(n);
      std::string bad;
      if (!irr_vanishes_off(u, n)) bad += "Irr(S|U) does not vanish off N; ";
      for (const auto& k : normals())
        if (irr_vanishes_off(k, n) && !k.contained_in(u)) bad += "K=" + set_label(k) + " not in U; ";
      for (Element g = 0; g < group().order(); ++g)
        if (a_.u_membership_rhs(n, g) != u.contains(g)) bad += "membership differs at g=" + std::to_string(g) + "; ";
      emit_check("T-ugroupp", n_scope(n), bad.empty(), "U(S|N)=" + set_label(u) + ": " + bad);
    }
  }

  void ucap() {
    if (!nonabelian()) return emit("L-ucap", "theory", Status::not_applicable, "S-abelian");
    const auto& gs = a_.commutator();
    for (const auto& n : normals()) {
      const auto& u = a_.u_rel(n);
      if (n.is_whole()) {
        emit("L-ucap", n_scope(n), Status::not_applicable, "N=G gives U(S|G)=G");
        continue;
      }
      Subgroup cap = intersect(n, gs);
      emit_check("L-ucap", n_scope(n), u.contained_in(cap), "U(S|N)=" + set_label(u) + " N&[G,S]=" + set_label(cap));
    }
  }

  void udelta() {
    for (const auto& n : normals()) {
      if (n.is_trivial()) continue;
      bool exists = false;
      for (const auto& h : normals())
        if (!h.is_trivial() && h.contained_in(n) && is_delta_product(s_, h, n)) exists = true;
      bool nontrivial = !a_.u_rel(n).is_trivial();
      emit_check("T-udelta", n_scope(n), exists == nontrivial,
                 "delta-product over some H>1: " + yes_no(exists) + " U(S|N)>1: " + yes_no(nontrivial));
    }
  }

  void uchain() {
    for (const auto& n : normals()) {
      if (n.is_trivial() || n.is_whole()) continue;
      auto chain = a_.u_chain(n);
      bool nontrivial = !chain.terms.back().is_trivial();
      bool exists = false;
      for (const auto& h : normals())
        if (!h.is_trivial() && h.contained_in(n) && is_star_product(s_, h)) exists = true;
      emit_check("L-uchain", n_scope(n), exists == nontrivial,
                 "chain limit=" + set_label(chain.terms.back()) + " star-product below N: " + yes_no(exists));
    }
  }

  void uquot() {
    for (const auto& n : normals())
      for (const auto& h : normals()) {
        auto r = a_.u_quotient_check(n, h);
        if (!r) continue;
        emit_check("L-uquot", pair_scope("N", n, "H", h), r->ok(), r->first_failure());
      }
  }

  void ukernel() {
    for (const auto& n : normals()) {
      auto r = a_.u_kernel_check(n);
      emit_check("L-ukernel", n_scope(n), r.ok(), r.first_failure());
    }
  }

  void final_theorem() {
    if (!nonabelian()) return emit("T-final", "theory", Status::not_applicable, "S-abelian");
    auto v = a_.vz();
    std::string bad;
    for (const char* name : {"z-equals-v", "u-equals-commutator"}) {
      const auto* c = v.find(name);
      if (!c || c->value != v.holds) bad += std::string(name) + "=" + (c ? yes_no(c->value) : "missing") + "; ";
    }
    emit_check("T-final", "theory", bad.empty(), "VZ=" + yes_no(v.holds) + ": " + bad);
  }

  void sabelian_gcp() {
    bool abelian = a_.s_abelian();
    bool pair = gcp(Subgroup::trivial(group()));
    emit_check("L-sabelian-gcp", "theory", abelian == pair,
               "S-abelian=" + yes_no(abelian) + " (G,1) GCP=" + yes_no(pair));
  }

  void orthogonality() {
    auto rows = check_row_orthogonality(s_);
    emit_check("P-roworth", "theory", rows.ok(), rows.first_failure());
    Check cols{"column-orthogonality", true, {}};
    const auto& y = s_.yparts();
    for (std::size_t a = 0; a < y.size(); ++a)
      for (std::size_t b = 0; b < y.size(); ++b) {
        Element g = y.block(a).front(), h = y.block(b).front();
        auto c = check_column_orthogonality(s_, g, h);
        if (!c.passed) record_failure(cols, "g=" + std::to_string(g) + " h=" + std::to_string(h));
      }
    emit_check("P-colorth", "theory", cols.passed, cols.detail);
  }

  void prop42() {
    for (const auto& n : normals()) {
      const auto& v = a_.v_rel(n);
      std::string bad;
      if (!is_s_normal(s_, v)) bad += "V(S|N) not S-normal; ";
      try {
        Subgroup p = a_.v_rel_product(n);
        if (!(p == v)) bad += "product of V(chi) is " + set_label(p) + "; ";
      } catch (const InternalError& e) {
        bad += std::string(e.what()) + "; ";
      }
      if (!a_.irr_over(n).empty() && !n.contained_in(v)) bad += "N not in V(S|N); ";
      if (!bad.empty()) {
        emit("P-prop42", n_scope(n), Status::fail, "V(S|N)=" + set_label(v) + ": " + bad);
        continue;
      }
      // The generated reading of V(chi); note parts whose raw set is not closed.
      std::string note;
      for (std::size_t part : a_.irr_over(n))
        if (!(a_.nonvanishing(part) == a_.vanish_off(part).members()))
          note += "note: nonvanishing set of part " + std::to_string(part) + " is not a subgroup; ";
      emit("P-prop42", n_scope(n), Status::pass, note);
    }
  }

  // Stable order: by id position, then emission order; every id present.
  std::vector<TheoremReport> order() {
    const auto& ids = theorem_ids();
    std::vector<TheoremReport> sorted;
    sorted.reserve(out_.size() + ids.size());
    for (const auto& id : ids) {
      bool any = false;
      for (auto& r : out_)
        if (r.theorem_id == id) {
          sorted.push_back(std::move(r));
          any = true;
        }
      if (!any) sorted.push_back(TheoremReport{id, "theory", Status::not_applicable, "no applicable instance"});
    }
    return sorted;
  }

  const SuperTheory& s_;
  Analysis a_;
  std::unordered_map<ElementSet, bool, ElementSetHash> gcp_;
  std::vector<TheoremReport> out_;
};

struct GroupWork {
  GroupResult result;
  std::vector<SuperTheory> theories;
};

void add(CorpusSummary& sum, Status s) {
  switch (s) {
    case Status::pass: ++sum.pass; break;
    case Status::fail: ++sum.fail; break;
    case Status::vacuous: ++sum.vacuous; break;
    case Status::not_applicable: ++sum.na; break;
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    case Status::vacuous: return "vacuous";
  }
  return "unknown";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "T-celt",    "T-corgcp",  "L-cp",      "L-vs",       "T-zeta",    "C-class",   "C-hyper",
      "L-vsn",     "T-vseries", "C-vterm",   "L-vzs",      "T-zs",      "T-vznilp",  "L-scd",
      "L-unormal", "L-irr",     "L-uorder",  "L-ugroup",   "C-ucorr",   "C-ucor",    "T-ugroupp",
      "L-ucap",    "T-udelta",  "L-uchain",  "L-uquot",    "L-ukernel", "T-final",   "L-sabelian-gcp",
      "P-roworth", "P-colorth", "P-prop42"};
  return ids;
}

std::vector<TheoremReport> run_suite(const SuperTheory& s) { return Suite(s).run(); }

const std::vector<std::string>& default_catalog() {
  static const std::vector<std::string> names{"C2", "C3",   "C4", "C5", "C6", "C2xC2", "C8",
                                              "C2xC4", "C2^3", "S3", "D4", "Q8", "D5",   "D6",
                                              "A4", "C3xC3", "D8", "Q16", "S4"};
  return names;
}

CorpusSummary summarize(const std::vector<GroupResult>& groups) {
  CorpusSummary sum;
  for (const auto& g : groups)
    for (const auto& t : g.theories)
      for (const auto& r : t.reports) add(sum, r.status);
  return sum;
}

CorpusReport run_corpus(const std::vector<std::string>& specs, const CorpusOptions& opts) {
  unsigned jobs = std::max(1u, opts.jobs);
  std::vector<GroupWork> work;
  for (const auto& spec : specs) {
    GroupWork w;
    w.result.label = spec;
    GroupPtr g;
    try {
      g = load_group(spec);
      w.result.label = g->label();
      w.result.order = g->order();
      DixonOptions dixon = opts.dixon;
      auto table = dixon_character_table(g, dixon);
      if (opts.enumerate && table->num_classes() <= opts.max_irreducibles) {
        EnumerateOptions eo;
        eo.max_irreducibles = opts.max_irreducibles;
        eo.jobs = jobs;
        w.theories = enumerate_scts(table, eo);
      } else {
        w.theories.push_back(finest(table));
        if (g->order() > 1) {
          auto c = coarsest(table);
          if (!(c == w.theories.front())) w.theories.push_back(std::move(c));
        }
        if (opts.enumerate)
          w.result.notice = "enumeration skipped: " + std::to_string(table->num_classes()) +
                            " irreducibles exceed the limit of " + std::to_string(opts.max_irreducibles) +
                            "; finest and coarsest only";
      }
    } catch (const GuardError& e) {
      w.result.notice = std::string("skipped: ") + e.what();
    }
    w.result.theory_count = w.theories.size();
    w.result.theories.resize(w.theories.size());
    work.push_back(std::move(w));
  }

  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t gi = 0; gi < work.size(); ++gi)
    for (std::size_t ti = 0; ti < work[gi].theories.size(); ++ti) tasks.emplace_back(gi, ti);

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      auto [gi, ti] = tasks[k];
      const auto& s = work[gi].theories[ti];
      auto& out = work[gi].result.theories[ti];
      out.index = ti;
      out.xparts = s.xparts();
      out.yparts = s.yparts().blocks();
      try {
        out.reports = run_suite(s);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  CorpusReport report;
  for (auto& w : work) report.groups.push_back(std::move(w.result));
  report.summary = summarize(report.groups);
  return report;
}

}  // namespace superchar
