// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "algebras.hpp"
#include "oracles.hpp"
#include "pcx/error.hpp"
#include "pcx/flags.hpp"
#include "pcx/nongrad.hpp"
#include "pcx/report.hpp"
#include "random_objects.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace pcx;
using namespace testalg;
using namespace testrand;

namespace {

const std::string fixtures = PCX_FIXTURE_DIR;

// Records failures with a short reason; a criterion passes when none were recorded.
struct Tally {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("...");
  }
};

Job fixture(const std::string& name, std::optional<Field> F = std::nullopt) {
  return load_job(fixtures + "/" + name, F);
}

Job make_job(const AlgebraPtr& A, json args) {
  Job j;
  j.A = A;
  j.algebra = algebra_json(*A);
  j.args = std::move(args);
  return j;
}

// Runs a command and checks that its certificate verifies.
json run_verified(Tally& t, const std::string& cmd, const Job& job, const std::string& label) {
  const json r = run_command(cmd, job);
  t.expect(r.value("verdict", "") != "ERROR", label + ": " + cmd + " raised " + r.dump().substr(0, 200));
  if (r.value("verdict", "") != "ERROR")
    t.expect(verify_certificate(r).value("verdict", "") == "ACCEPTED", label + ": " + cmd + " certificate rejected");
  return r;
}

bool check_status(const json& r, const std::string& name, const std::string& status) {
  for (const auto& c : r.value("checks", json::array()))
    if (c.value("name", "") == name) return c.value("status", "") == status;
  return false;
}

ProjMap words_map(const AlgebraPtr& A, const ProjModule& P, const std::vector<std::vector<std::string>>& grid) {
  return map(A, P, P, grid);
}

bool same_graded(const Graded& X, const Graded& Y) {
  return X.period == Y.period && X.module == Y.module && X.degree == Y.degree && X.d == Y.d;
}

// ---- criterion 1

Tally criterion1() {
  Tally t;
  const std::vector<std::vector<std::string>> eps_qprime = {{"0", "0", "0", "0", "0"},
                                                            {"-alpha", "0", "0", "0", "0"},
                                                            {"0", "-alpha*gamma*beta", "0", "0", "0"},
                                                            {"-1", "-gamma*beta", "0", "0", "0"},
                                                            {"0", "-1", "-1", "alpha", "0"}};
  const std::vector<std::vector<std::string>> eps_q = {{"0", "0", "0", "0", "0"},
                                                       {"-alpha", "0", "0", "0", "0"},
                                                       {"0", "0", "alpha*gamma*beta", "0", "0"},
                                                       {"-1", "0", "0", "0", "0"},
                                                       {"0", "-1", "0", "alpha", "0"}};
  const std::vector<std::vector<std::string>> f_printed = {{"1", "gamma*beta", "0", "0", "0"},
                                                           {"0", "1", "1", "0", "0"},
                                                           {"0", "1", "0", "-alpha", "0"},
                                                           {"0", "0", "0", "1", "0"},
                                                           {"0", "0", "0", "0", "1"}};
  const std::vector<std::vector<std::string>> finv_printed = {{"1", "0", "-gamma*beta", "0", "0"},
                                                              {"0", "0", "1", "alpha", "0"},
                                                              {"0", "1", "-1", "-alpha", "0"},
                                                              {"0", "0", "0", "1", "0"},
                                                              {"0", "0", "0", "0", "1"}};
  for (Field F : {Field::rationals(), Field::prime(5)}) {
    const Job job = fixture("cycle3_relproj.toml", F);
    const json r = run_verified(t, "relproj-flag", job, F.name());
    if (r.value("verdict", "") == "ERROR") continue;
    const AlgebraPtr& A = job.A;
    const Graded Qp = graded_from_json(A, r["witnesses"]["objects"]["Qprime"]);
    const Graded Q = graded_from_json(A, r["witnesses"]["objects"]["Q"]);
    const ProjMap f = projmap_from_json(A, r["witnesses"]["maps"]["f"]);
    const ProjMap fi = projmap_from_json(A, r["witnesses"]["maps"]["f_inverse"]);
    const ProjModule QM = proj(A, {"1", "2", "2", "1", "2"});
    t.expect(Qp.module == QM, F.name() + ": Q' summands");
    if (Qp.module != QM) continue;
    const ProjMap eQp = words_map(A, QM, eps_qprime), eQ = words_map(A, QM, eps_q);
    const ProjMap fp = words_map(A, QM, f_printed), fip = words_map(A, QM, finv_printed);
    t.expect(Qp.d == eQp, F.name() + ": epsilon_Q' differs from the printed matrix");
    t.expect(Q.d == eQ, F.name() + ": epsilon_Q differs");
    t.expect(f == fp && fi == fip, F.name() + ": f or f^-1 differs from the printed matrices");
    t.expect(fip * eQ * fp == eQp, F.name() + ": f^-1 e_Q f != e_Q' with the printed matrices");
    t.expect(fp * fip == ProjMap::identity(A, QM) && fip * fp == ProjMap::identity(A, QM), F.name() + ": f f^-1 != 1");
    t.expect(check_status(r, "conjugation", "PASS"), F.name() + ": conjugation check");
    const json fl = run_verified(t, "flag", job, F.name());
    t.expect(fl.value("results", json::object()).value("epsilon_Qprime", json()) == json(eps_qprime) &&
                 fl["results"]["f"] == json(f_printed),
             F.name() + ": flag report does not embed epsilon_Q' and f");
  }
  return t;
}

// ---- criterion 2

Tally criterion2() {
  Tally t;
  for (Field F : {Field::prime(3), Field::prime(5), Field::rationals()}) {
    const std::string n = F.name();
    const Job two = fixture("cycle4_two.toml", F), lng = fixture("cycle4_long.toml", F);
    const json c1 = run_verified(t, "cycle-complex", two, n);
    t.expect(c1["results"]["sequence"]["display"] == "P2 -gamma*beta-> P4 -alpha*delta-> P2", n + ": cycle (ba, dc)");
    const json c2 = run_verified(t, "cycle-complex", lng, n);
    t.expect(c2["results"]["sequence"]["display"] == "P3 -beta*alpha*delta*gamma-> P3", n + ": cycle (cba)");
    const json s1 = run_verified(t, "splice", two, n);
    t.expect(s1["results"]["sequence"]["display"] == "P3 -gamma-> P4 -alpha*delta-> P2 -gamma*beta-> P4 -delta-> P1",
             n + ": five-term splice");
    const json s2 = run_verified(t, "splice", lng, n);
    t.expect(s2["results"]["sequence"]["display"] == "P1 -beta*alpha-> P3 -beta*alpha*delta*gamma-> P3 -gamma-> P4",
             n + ": four-term splice");
  }
  return t;
}

// ---- criterion 3

Tally criterion3() {
  Tally t;
  for (Field F : {Field::prime(3), Field::prime(5), Field::rationals()})
    for (const char* fx : {"cycle4_two.toml", "cycle4_long.toml"}) {
      const std::string label = F.name() + " " + fx;
      const json r = run_verified(t, "nongradable", fixture(fx, F), label);
      t.expect(r.value("verdict", "") == "NON_GRADABLE_OBJECT_EXISTS", label + ": verdict " + r.value("verdict", ""));
      t.expect(r.value("results", json::object()).value("end_dim_pattern", 0) == 1, label + ": dim End != 1");
      t.expect(check_status(r, "end_dim_pattern", "PASS"), label + ": End dimension not replayed");
    }
  return t;
}

// ---- criterion 4

Tally criterion4() {
  Tally t;
  for (Field F : {Field::prime(3), Field::prime(5)}) {
    const json r = run_verified(t, "sigma-square", fixture("sign_triangle.toml", F), F.name());
    const json& res = r["results"];
    t.expect(res["naturality"] == "UNSOLVABLE", F.name() + ": naturality not UNSOLVABLE");
    t.expect(res["naturality_search"]["exhaustive"] == true, F.name() + ": naturality not exhaustive");
    t.expect(res["cone_comparison"] == "NO", F.name() + ": cones not NO");
    t.expect(res["cone_search"]["exhaustive"] == true, F.name() + ": cone comparison not exhaustive");
    t.expect(check_status(r, "naturality", "PASS") && check_status(r, "strict_isomorphism", "PASS"),
             F.name() + ": exhaustion claims not replayed");
    t.expect(res["labels"].empty(), F.name() + ": unexpected degenerate label");
  }
  const json r = run_verified(t, "sigma-square", fixture("sign_triangle.toml", Field::prime(2)), "F2");
  const json& res = r["results"];
  t.expect(res["naturality"] == "SOLVABLE" && res["cone_comparison"] == "YES", "F2: not positive");
  t.expect(res["labels"] == json::array({"DEGENERATE_CHARACTERISTIC_2"}), "F2: degenerate label missing");
  return t;
}

// ---- criterion 5

Tally criterion5(std::size_t& pairs) {
  Tally t;
  pairs = 0;
  for (Field F : {Field::prime(3), Field::rationals()}) {
    Rng rng(500 + F.characteristic());
    const int per = F.is_rational() ? 6 : 34;
    for (const AlgebraPtr& A : suite_algebras(F))
      for (int n : {1, 2})
        for (int k = 0; k < per; ++k) {
          Job job = make_job(A, {{"left", "X"}, {"right", "Y"}, {"n", n}});
          job.objects.emplace("X", random_bounded(A, rng, 3, 3));
          job.objects.emplace("Y", random_bounded(A, rng, 3, 3));
          const json r = run_command("orbit-hom", job);
          ++pairs;
          t.expect(r.value("verdict", "") == "EQUAL", F.name() + " n=" + std::to_string(n) + ": " + r.dump().substr(0, 160));
          if (k % 8 == 0) t.expect(verify_certificate(r)["verdict"] == "ACCEPTED", "orbit-hom certificate rejected");
        }
  }
  t.expect(pairs >= 200, "fewer than 200 pairs");
  return t;
}

// ---- criterion 6

Tally criterion6(std::size_t& modules) {
  Tally t;
  modules = 0;
  const AlgebraPtr A = linear3(Field::prime(3));
  Rng rng(600);
  while (modules < 30) {
    const RepComplex M = random_dm(A, rng, 2);
    bool small = true;
    for (auto d : M.terms[0].dims) small = small && d <= 4;
    if (!small) continue;
    Job job = make_job(A, {{"dmodule", "M"}});
    job.dmodules.emplace("M", M);
    const json r = run_verified(t, "stalk-check", job, "A3 #" + std::to_string(modules));
    t.expect(r.value("verdict", "") == "HOLDS", "stalk-check #" + std::to_string(modules) + ": " + r.value("verdict", ""));
    ++modules;
  }
  const AlgebraPtr B = cycle3(Field::prime(3));
  Rng rng2(601);
  Job job = make_job(B, {{"dmodule", "M"}});
  job.dmodules.emplace("M", random_dm(B, rng2));
  const json r = run_command("stalk-check", job);
  t.expect(r.value("verdict", "") == "ERROR" && r["error"]["code"] == "NOT_HEREDITARY", "kG/(ba): NOT_HEREDITARY not raised");
  return t;
}

// ---- criterion 7

bool witnesses_verify(const Graded& X, const Minimization& m) {
  return is_minimal(m.min) && is_chain_map(X, m.min, m.f) && is_chain_map(m.min, X, m.g) &&
         m.f * m.g == ProjMap::identity(X.A, m.min.module) && has_degree(X, X, m.s, -1) &&
         homotopy_defect(X, X, m.g * m.f - ProjMap::identity(X.A, X.module), m.s).is_zero();
}

Tally criterion7(std::size_t& objects, std::size_t& compared) {
  Tally t;
  objects = compared = 0;
  auto square_zero = [&](const Graded& X, const std::string& what) {
    ++objects;
    t.expect((X.d * X.d).is_zero(), what + ": d^2 != 0");
  };
  for (Field F : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    Rng rng(700 + F.characteristic());
    for (const AlgebraPtr& A : suite_algebras(F)) {
      for (int k = 0; k < 10; ++k) {
        const Graded X = k % 2 ? Graded(random_relproj(A, rng)) : Graded(random_bounded(A, rng));
        square_zero(X, "random object");
        // cone of the identity
        const ProjMap id = ProjMap::identity(A, X.module);
        const Graded C = cone(X, X, id);
        square_zero(C, "cone of identity");
        const auto s = null_homotopy(C, C, ProjMap::identity(A, C.module));
        t.expect(s && homotopy_defect(C, C, ProjMap::identity(A, C.module), *s).is_zero(),
                 "cone of identity: no verified contraction");
        const Minimization mc = X.period == 0 ? minimize_bounded(C) : minimize(C);
        t.expect(mc.min.empty() && witnesses_verify(C, mc), "cone of identity does not minimize to zero");
        // suspension
        const Graded S = shift(X), S2 = shift(S);
        square_zero(S, "suspension");
        if (X.period == 1) t.expect(same_graded(S2, X), "Sigma^2 != id at n = 1");
        // minimization
        const Minimization m = X.period == 0 ? minimize_bounded(X) : minimize(X);
        square_zero(m.min, "minimal model");
        t.expect(witnesses_verify(X, m), "minimization witnesses fail");
        const Minimization m2 = X.period == 0 ? minimize_bounded(m.min) : minimize(m.min);
        t.expect(m2.steps == 0 && same_graded(m2.min, m.min), "minimization not idempotent");
      }
      if (F.is_rational()) continue;
      for (int k = 0; k < 40; ++k) {
        const Graded X = k % 2 ? Graded(random_relproj(A, rng)) : Graded(random_bounded(A, rng, 2, 2));
        const Graded Y = k % 2 ? Graded(random_relproj(A, rng)) : Graded(random_bounded(A, rng, 2, 2));
        if (map_coords(X, Y, -1).dim() > 12) continue;
        const ProjMap f = random_chain_map(X, Y, rng);
        const auto s = null_homotopy(X, Y, f);
        t.expect(!s || homotopy_defect(X, Y, f, *s).is_zero(), "null_homotopy witness fails");
        t.expect(s.has_value() == brute_force_homotopic(X, Y, f), "null_homotopy disagrees with brute force");
        ++compared;
      }
    }
  }
  t.expect(compared >= 100, "fewer than 100 brute-force comparisons");
  return t;
}

// ---- criterion 8

Tally criterion8(std::size_t& dms, std::size_t& relprojs) {
  Tally t;
  dms = relprojs = 0;
  for (Field F : {Field::prime(3), Field::prime(5)}) {
    Rng rng(800 + F.characteristic());
    for (const AlgebraPtr& A : suite_algebras(F)) {
      for (int k = 0; k < 9; ++k) {
        const RepComplex M = random_dm(A, rng);
        const FlagWitness w = flag_resolution(M);
        const RepComplex E = evaluate(w.flag);
        t.expect((w.flag.d * w.flag.d).is_zero(), "flag: d^2 != 0");
        t.expect(is_chain_map(E, M, {w.augmentation}) && quasi_iso(E, M, {w.augmentation}), "flag: not a quasi-isomorphism");
        t.expect(strictly_lower(w.flag, w.block), "flag: not strictly lower triangular");
        ++dms;
      }
      for (int k = 0; k < 9; ++k) {
        const PeriodicComplex P = random_relproj(A, rng);
        const RelProjFlag r = relproj_to_flag(P);
        t.expect(strictly_lower(r.Qprime, r.block), "relproj: Q' not strictly lower");
        const IsoK iso = iso_cn(r.Qprime, P);
        t.expect(iso.search.verdict == Verdict::Yes, "relproj: minimize(flag(P)) not isomorphic to minimize(P)");
        if (iso.search.witness)
          t.expect(is_chain_map(iso.mx.min, iso.my.min, *iso.search.witness) && iso.search.witness->is_invertible(),
                   "relproj: iso witness fails");
        ++relprojs;
      }
    }
  }
  t.expect(dms >= 50 && relprojs >= 50, "fewer than 50 samples");
  return t;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const std::string& title, const std::function<Tally(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    Tally t;
    try {
      t = body(note);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = t.failures.empty();
    all = all && ok;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " (" << t.checks << " checks"
              << (note.empty() ? "" : ", " + note) << ", " << buf << ")\n";
    for (const auto& f : t.failures) std::cout << "    " << f << "\n";
  };
  report(1, "relative projective (P2, alpha gamma beta): epsilon_Q' and f^-1 e_Q f over Q and F5",
         [](std::string&) { return criterion1(); });
  report(2, "cycle-complex and splice goldens", [](std::string&) { return criterion2(); });
  report(3, "non-gradability certificates with dim End = 1 over F3, F5, Q", [](std::string&) { return criterion3(); });
  report(4, "sign phenomenon: UNSOLVABLE and NO over F3, F5; degenerate positive over F2",
         [](std::string&) { return criterion4(); });
  report(5, "orbit-hom equality on random pairs, n in {1, 2}", [](std::string& note) {
    std::size_t pairs;
    Tally t = criterion5(pairs);
    note = std::to_string(pairs) + " pairs";
    return t;
  });
  report(6, "stalk-check on random differential modules over A3; NOT_HEREDITARY with relations", [](std::string& note) {
    std::size_t n;
    Tally t = criterion6(n);
    note = std::to_string(n) + " modules";
    return t;
  });
  report(7, "homotopy-algebra properties", [](std::string& note) {
    std::size_t objects, compared;
    Tally t = criterion7(objects, compared);
    note = std::to_string(objects) + " objects, " + std::to_string(compared) + " brute-force comparisons";
    return t;
  });
  report(8, "flag resolutions and relative projectives", [](std::string& note) {
    std::size_t dms, relprojs;
    Tally t = criterion8(dms, relprojs);
    note = std::to_string(dms) + " differential modules, " + std::to_string(relprojs) + " relative projectives";
    return t;
  });
  std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << "\n";
  return all ? 0 : 1;
}
