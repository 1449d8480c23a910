// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbiloop/twisted.hpp"
#include "random_cochains.hpp"

using namespace orbiloop;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

GradedBasisAlgebra synthetic() { return load_presentation(ORBILOOP_TEST_DATA "/synthetic_f3.json"); }

TwistedAlgebra circle_case(std::uint32_t p, std::size_t n) {
  const auto h = circle_model(p, 3);
  const auto g = make_cyclic(n);
  const auto a = abelian_make({1});
  return TwistedAlgebra::make(h, g, trivial_embedding(a, h), carrying_cocycle(g, a, 0));
}

std::vector<std::pair<std::uint32_t, std::size_t>> circle_cases() {
  std::vector<std::pair<std::uint32_t, std::size_t>> out;
  for (std::size_t n : {2, 3, 4, 5}) {
    for (std::uint32_t p : {2, 3, 5}) {
      if (std::gcd<std::size_t>(p, n) == 1) out.emplace_back(p, n);
    }
  }
  return out;
}

// Carrying cocycle with a -> [CP^l] + eps, A = Z/gcd(p, l+1).
TwistedAlgebra cpl_case(int l, std::uint32_t p, std::size_t n, const std::optional<Cochain2>& c = std::nullopt) {
  const auto h = cpl_minimal_model(l, p);
  const auto a = abelian_make({std::gcd(p, static_cast<std::uint32_t>(l + 1))});
  const auto g = make_cyclic(n);
  const auto phi = embedding_make(a, h, {h.parse_element("1+eps")});
  return TwistedAlgebra::make(h, g, phi, c ? *c : carrying_cocycle(g, a, 1));
}

struct CplCase {
  int l;
  std::uint32_t p;
  std::size_t n;
};
const std::vector<CplCase> kCplCases = {{1, 2, 3}, {1, 2, 5}, {2, 3, 2}, {2, 3, 4}, {5, 2, 3}, {5, 3, 2}};

std::string label(std::size_t n, std::uint32_t p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

// Untwisted tensor-product table entry, or nullopt on window overflow.
std::optional<TwistedElement> untwisted(const TwistedAlgebra& ta, TwistedKey u, TwistedKey v) {
  const auto& h = ta.base();
  const auto xy = try_multiply(h, h.basis_element(ta.base_of(u)), h.basis_element(ta.base_of(v)));
  if (!xy) return std::nullopt;
  TwistedElement out;
  for (const auto& [z, c] : *xy) out.add(ta.key(z, ta.group().mul(ta.group_of(u), ta.group_of(v))), c);
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::size_t entries = 0;
  for (const auto& [p, n] : circle_cases()) {
    const auto ta = circle_case(p, n);
    const auto one = ta.base().scalar(1);
    for (TwistedKey u = 0; u < ta.dim(); ++u) {
      for (TwistedKey v = 0; v < ta.dim(); ++v) {
        ++entries;
        const auto twisted = ta.try_product(TwistedElement(u, one), TwistedElement(v, one));
        if (twisted != untwisted(ta, u, v)) o.fail(label(n, p) + ": tables differ at " + ta.format_key(u) + ", " + ta.format_key(v));
      }
    }
    if (splitting_verdict(ta).summary() != "splits: true, witness: ξ ≡ 0") o.fail(label(n, p) + ": verdict");
  }
  o.detail = o.ok ? std::to_string(circle_cases().size()) + " cases, " + std::to_string(entries) + " table entries equal" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0;
  for (const auto& [l, p, n] : kCplCases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ta = cpl_case(l, p, n);
    const auto v = splitting_verdict(ta);
    const std::string name = "(l,p,n)=(" + std::to_string(l) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
    if (!v.splits || !v.checked_iso || !v.failures.empty()) o.fail(name + ": " + v.summary());
    // Independent re-check of the witness map on every basis pair.
    if (v.witness) {
      const auto f = f_xi_map(ta, cpl_case(l, p, n, Cochain2::zero(ta.group(), ta.coeff())), *v.witness);
      const auto s = f.check_multiplicative();
      if (!s.ok() || s.checked != ta.dim() * ta.dim() || !f.is_bijective()) o.fail(name + ": F_xi re-check");
    }
    // The carrying twist is genuinely nontrivial as a table: 1(x)g^{n-1} * 1(x)g = (1 + eps)(x)e.
    const auto one = ta.base().unit();
    const auto prod = ta.product(ta.basis_element(one, static_cast<Elem>(n - 1)), ta.basis_element(one, 1));
    if (prod.size() != 2) o.fail(name + ": expected (1+eps)(x)e from the wrap-around product");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, secs);
    if (secs >= 1.0) o.fail(name + ": exceeded 1 s");
  }
  if (o.ok) o.detail = "6 cases split with verified F_xi; slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(303);
  for (std::size_t n : {3, 5, 7}) {
    const auto g = make_cyclic(n);
    const auto a = abelian_make({2});
    if (h2_order(g, a, Method::linalg) != 1 || h2_order(g, a, Method::brute) != 1) {
      o.fail("C" + std::to_string(n) + ": h2_order != 1");
    }
    std::vector<Cochain2> cocycles = {carrying_cocycle(g, a, 1)};
    for (int t = 0; t < 5; ++t) cocycles.push_back(testing::random_cocycle(g, a, testing::cyclic_projections(g), rng));
    for (const auto& c : cocycles) {
      const auto v = splitting_verdict(cpl_case(1, 2, n, c));
      if (!v.splits || !v.checked_iso) o.fail("C" + std::to_string(n) + ": " + v.summary());
    }
  }
  if (o.ok) o.detail = "G in {C3, C5, C7}: |H^2| = 1 both methods; carrying + 5 random cocycles each split";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
      const auto g = make_cyclic(n);
      const auto a = abelian_make({m});
      const auto lin = h2_order(g, a, Method::linalg);
      const auto brute = h2_order(g, a, Method::brute);
      if (lin != std::gcd<std::size_t>(n, m) || brute != lin) {
        o.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + ": linalg " + std::to_string(lin) +
               ", brute " + std::to_string(brute));
      }
    }
  }
  if (o.ok) o.detail = "36 pairs (n, m), linalg = brute = gcd(n, m)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = make_cyclic(n);
    const auto a = abelian_make({static_cast<std::uint32_t>(n)});
    const auto c = carrying_cocycle(g, a, 1 % static_cast<AElem>(n));
    // k*c is a coboundary iff n | k, for k = 1..n.
    for (std::size_t k = 1; k <= n; ++k) {
      const bool cob = brute_force_cohomologous(c.times(static_cast<std::int64_t>(k)), Cochain2::zero(g, a)).has_value();
      if (cob != (k % n == 0)) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    if (class_order(c, Method::brute) != n) o.fail("n=" + std::to_string(n) + ": class_order");
  }
  if (o.ok) o.detail = "class order of the carrying cocycle is n for n = 1..6 (brute force)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(606);
  const auto h = cpl_minimal_model(1, 2);
  const auto g = make_cyclic(3);
  const auto a = abelian_make({2});
  const auto phi = embedding_make(a, h, {h.parse_element("1+eps")});
  int cocycles = 0;
  for (int t = 0; t < 50; ++t) {
    // Alternate uniform cochains with random cocycles so both sides of the equivalence occur.
    const auto c = t % 2 ? testing::random_cochain2(g, a, rng)
                         : testing::random_cocycle(g, a, testing::cyclic_projections(g), rng);
    const bool cocycle = is_cocycle(c).ok;
    cocycles += cocycle;
    const auto r = check_tqft(TwistedAlgebra::make_unchecked(h, g, phi, c));
    if (r.associativity != cocycle || r.checked_triples != 216) o.fail("trial " + std::to_string(t));
  }
  if (o.ok) o.detail = "50 cochains (" + std::to_string(cocycles) + " cocycles): associative iff cocycle";
  if (cocycles == 0 || cocycles == 50) o.fail("degenerate sample");
  return o;
}

struct Setting {
  std::string name;
  GradedBasisAlgebra h;
  FiniteGroup g;
  FiniteAbelianGroup a;
  std::vector<AlgebraElement> images;
  std::vector<testing::Projection> projections;
};

Outcome criterion7() {
  Outcome o;
  const auto syn = synthetic();
  const auto cp1 = cpl_minimal_model(1, 2);
  const auto cp2 = cpl_minimal_model(2, 3);
  const auto circ = circle_model(3, 2);
  const auto c2 = make_cyclic(2), c3 = make_cyclic(3), c4 = make_cyclic(4);
  const auto k4 = make_product(c2, c2);
  const auto c2c3 = make_product(c2, c3);
  const std::vector<Setting> settings = {
      {"F3[eps] C2", syn, c2, abelian_make({3}), {syn.parse_element("1+eps")}, testing::cyclic_projections(c2)},
      {"F3[eps] C3", syn, c3, abelian_make({3}), {syn.parse_element("1+eps")}, testing::cyclic_projections(c3)},
      {"F3[eps] C2xC2", syn, k4, abelian_make({3}), {syn.parse_element("1+eps")}, testing::product_projections(2, 2)},
      {"F3[eps] C2xC3", syn, c2c3, abelian_make({3}), {syn.parse_element("1+eps")}, testing::product_projections(2, 3)},
      {"CP1/F2 C3", cp1, c3, abelian_make({2}), {cp1.parse_element("1+eps")}, testing::cyclic_projections(c3)},
      {"CP1/F2 C4", cp1, c4, abelian_make({2}), {cp1.parse_element("1+eps")}, testing::cyclic_projections(c4)},
      {"CP2/F3 C2xC2", cp2, k4, abelian_make({3}), {cp2.parse_element("1+eps")}, testing::product_projections(2, 2)},
      {"S1/F3 C2", circ, c2, abelian_make({1}), {circ.unit_element()}, testing::cyclic_projections(c2)},
  };
  std::mt19937_64 rng(707);
  std::size_t nonzero_coproducts = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& s = settings[t % settings.size()];
    const auto phi = embedding_make(s.a, s.h, s.images);
    const auto c = testing::random_cocycle(s.g, s.a, s.projections, rng);
    const auto xi = testing::random_cochain1(s.g, s.a, rng);
    const auto src = TwistedAlgebra::make(s.h, s.g, phi, c + d1(xi));
    const auto dst = TwistedAlgebra::make(s.h, s.g, phi, c);
    const auto f = f_xi_map(src, dst, xi);
    const std::string where = "trial " + std::to_string(t) + " (" + s.name + ")";
    if (!f.is_bijective()) o.fail(where + ": not bijective");
    const auto mult = f.check_multiplicative();
    if (!mult.ok() || mult.checked == 0) o.fail(where + ": not multiplicative");
    const auto comult = f.check_comultiplicative();
    if (!comult.ok() || comult.checked != src.dim()) o.fail(where + ": not comultiplicative");
    if (!src.coproduct(src.unit_element()).empty()) ++nonzero_coproducts;
  }
  if (nonzero_coproducts == 0) o.fail("no trial exercised a nonzero coproduct");
  if (o.ok) {
    o.detail = "100 (c, xi) pairs over 8 settings; " + std::to_string(nonzero_coproducts) +
               " with nonzero coproduct";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto h = synthetic();
  const auto c0 = h.basis_element(*h.point_class());
  const Scalar chi(h.field(), h.euler_char());
  std::size_t triples = 0, nonzero = 0;
  for (BasisIndex i = 0; i < h.dim(); ++i) {
    for (BasisIndex j = 0; j < h.dim(); ++j) {
      for (BasisIndex k = 0; k < h.dim(); ++k) {
        ++triples;
        const auto x = h.basis_element(i), y = h.basis_element(j), z = h.basis_element(k);
        const AlgebraTensor lhs = base_coproduct(h, multiply(h, multiply(h, x, y), z));
        // Closed form: chi [c0] x (x) [c0] y z.
        AlgebraTensor closed;
        for (const auto& [a, u] : multiply(h, c0, x)) {
          for (const auto& [b, w] : multiply(h, c0, multiply(h, y, z))) closed.add({a, b}, chi * u * w);
        }
        // Split form: delta_1(x) y (x) delta_2(x) z.
        AlgebraTensor split;
        for (const auto& [pr, w] : base_coproduct(h, x)) {
          for (const auto& [a, u] : multiply(h, h.basis_element(pr.first), y)) {
            for (const auto& [b, v] : multiply(h, h.basis_element(pr.second), z)) split.add({a, b}, w * u * v);
          }
        }
        if (!(lhs == closed) || !(lhs == split)) {
          o.fail("triple (" + h.basis()[i].name + ", " + h.basis()[j].name + ", " + h.basis()[k].name + ")");
        }
        nonzero += !lhs.empty();
      }
    }
  }
  if (nonzero == 0) o.fail("identity only checked on zero tensors");
  if (o.ok) o.detail = std::to_string(triples) + " basis triples, " + std::to_string(nonzero) + " with nonzero δ(xyz)";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto h = cpl_minimal_model(1, 2);
  const auto g = make_cyclic(2);
  const auto a = abelian_make({2});
  const auto phi = embedding_make(a, h, {h.parse_element("1+eps")});
  const auto twisted = TwistedAlgebra::make(h, g, phi, carrying_cocycle(g, a, 1));
  const auto plain = TwistedAlgebra::make(h, g, phi, Cochain2::zero(g, a));
  const auto v = splitting_verdict(twisted);
  if (v.splits || v.obstruction_order != std::size_t{2}) o.fail("verdict: " + v.summary());
  if (brute_force_cohomologous(twisted.cocycle(), plain.cocycle())) o.fail("brute force found a witness");
  const auto u = twisted.basis_element(h.unit(), 1);
  const auto tw = twisted.product(u, u), pl = plain.product(u, u);
  if (tw == pl) o.fail("tables agree at (1⊗g, 1⊗g)");
  if (o.ok) {
    o.detail = v.summary() + "; (1⊗g)(1⊗g) = " + twisted.format(tw) + " vs untwisted " + plain.format(pl);
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t configs = 0;
  auto sweep = [&](const TwistedAlgebra& ta, const std::string& name) {
    ++configs;
    const auto r = check_tqft(ta);
    if (!r.passed()) o.fail(name + ": " + r.failures.front().axiom);
    if (!r.coassociativity || !r.frobenius) o.fail(name + ": coalgebra checks not run");
  };
  for (const auto& [p, n] : circle_cases()) sweep(circle_case(p, n), "circle " + label(n, p));
  for (const auto& [l, p, n] : kCplCases) sweep(cpl_case(l, p, n), "cpl " + std::to_string(l) + " " + label(n, p));
  for (std::size_t n : {3, 5, 7}) sweep(cpl_case(1, 2, n), "S2 C" + std::to_string(n));
  const auto syn = synthetic();
  const auto c2 = make_cyclic(2);
  const auto z3 = abelian_make({3});
  sweep(TwistedAlgebra::make(syn, c2, embedding_make(z3, syn, {syn.parse_element("1+eps")}), Cochain2::zero(c2, z3)),
        "synthetic");
  if (o.ok) o.detail = std::to_string(configs) + " configurations pass associativity, coassociativity, Frobenius";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "circle quotients: twisted table = untwisted table", 1.0, criterion1},
      {2, "CP^l quotients split with verified F_xi", 6.0, criterion2},
      {3, "spherical odd-order quotients: H^2 = 0 and split", 1.0, criterion3},
      {4, "|H^2(C_n; Z/m)| = gcd(n, m), methods agree", 5.0, criterion4},
      {5, "carrying class in H^2(C_n; Z/n) has order n", 10.0, criterion5},
      {6, "cocycle <=> associativity (50 random cochains)", 5.0, criterion6},
      {7, "F_xi bijective, multiplicative, comultiplicative (100 pairs)", 10.0, criterion7},
      {8, "coproduct identity delta(xyz) = delta_1(x)y (x) delta_2(x)z on the synthetic fixture", 1.0, criterion8},
      {9, "nontrivial torsion detected for C2, Z/2", 1.0, criterion9},
      {10, "TQFT axiom sweep", 10.0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget) + " s");
    failed += !o.ok;
    std::printf("[%s] criterion %d: %s (%.3f s) -- %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
