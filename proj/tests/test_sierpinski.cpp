#include <random>
#include <set>

#include "combinorm/errors.hpp"
#include "combinorm/norms.hpp"
#include "combinorm/sierpinski.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace combinorm;
using testing_support::random_rat;

namespace {

SierpinskiContext explicit_ctx(std::vector<Rat> v) { return SierpinskiContext(RationalInjection::from_values(std::move(v))); }

std::vector<Rat> distinct_values(std::mt19937_64& rng, std::size_t n) {
  std::set<Rat> seen;
  std::vector<Rat> out;
  while (out.size() < n) {
    Rat r = random_rat(rng, 100, 100);
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

// Brute force over every subset of the support that is increasing in f.
Rat brute_chain_norm(const std::vector<Rat>& f, const RatVector& x) {
  IdSet supp = x.support();
  Rat best;
  for (const auto& s : testing_support::all_subsets(supp)) {
    bool chain = true;
    for (std::size_t i = 1; i < s.size(); ++i) chain = chain && f[s[i - 1] - 1] < f[s[i] - 1];
    if (!chain) continue;
    Rat t;
    for (int v : s) t += x.get(v).abs();
    best = std::max(best, t);
  }
  return best;
}

}  // namespace

TEST_CASE("Sierpiński graphs") {
  CHECK(sierpinski_graph(explicit_ctx({1, 2, 3}), 3) == Graph::complete(3));
  CHECK(sierpinski_graph(explicit_ctx({3, 2, 1}), 3).edge_count() == 0);
  Graph g = sierpinski_graph(explicit_ctx({0, -1, 1}), 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
  CHECK_THROWS_AS(sierpinski_graph(explicit_ctx({0, -1, 1}), 4), InvalidArgument);
  CHECK_THROWS_AS(RationalInjection::from_values({1, Rat(2, 2)}), InvalidArgument);
}

TEST_CASE("rational enumerations") {
  auto sb = RationalInjection::stern_brocot().prefix(11);
  CHECK(sb == std::vector<Rat>{0, 1, -1, Rat(1, 2), Rat(-1, 2), 2, -2, Rat(1, 3), Rat(-1, 3), Rat(2, 3), Rat(-2, 3)});
  auto c = RationalInjection::cantor().prefix(11);
  CHECK(c == std::vector<Rat>{0, 1, -1, Rat(1, 2), Rat(-1, 2), 2, -2, Rat(1, 3), Rat(-1, 3), 3, -3});
  for (auto inj : {RationalInjection::stern_brocot(), RationalInjection::cantor()}) {
    auto vals = inj.prefix(20000);
    std::set<Rat> uniq(vals.begin(), vals.end());
    CHECK(uniq.size() == vals.size());
    CHECK_FALSE(inj.limit());
  }
  // Every rational with small height shows up early in the Stern–Brocot order.
  auto vals = RationalInjection::stern_brocot().prefix(4096);
  std::set<Rat> uniq(vals.begin(), vals.end());
  for (long p = -6; p <= 6; ++p) {
    for (long q = 1; q <= 6; ++q) CHECK(uniq.count(Rat(p, q)) == 1);
  }
}

TEST_CASE("chain norm examples") {
  RatVector ones;
  for (int i = 1; i <= 6; ++i) ones.set(i, 1);
  CHECK(chain_norm(explicit_ctx({1, 2, 3, 4, 5, 6}), ones) == 6);
  CHECK(chain_norm(explicit_ctx({0, -1, 1}), RatVector{{1, 1}, {2, 1}, {3, 1}}) == 2);
  CHECK(chain_norm(explicit_ctx({0, -1, 1}), RatVector{}) == 0);
}

TEST_CASE("chain norm equals the clique family norm") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial) % 12;
    auto f = distinct_values(rng, n);
    SierpinskiContext ctx = explicit_ctx(f);
    RatVector x;
    for (std::size_t i = 1; i <= n; ++i) x.set(static_cast<int>(i), random_rat(rng, 100, 100));
    Graph g = sierpinski_graph(ctx, n);
    Rat fast = chain_norm(ctx, x);
    CHECK(fast == norm(NormContext(cliques(g), g.vertices()), x));
    CHECK(fast == brute_chain_norm(f, x));
    CHECK(fast == chain_norm_quadratic(ctx, x));
  }
}

TEST_CASE("chain norm under truncation") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = distinct_values(rng, 20);
    SierpinskiContext ctx = explicit_ctx(f);
    RatVector x;
    for (int i = 1; i <= 10; ++i) x.set(i, random_rat(rng, 20, 9));
    RatVector padded = x;
    padded.set(15, 0);
    CHECK(chain_norm(ctx, padded) == chain_norm(ctx, x));
    RatVector wider = x;
    for (int i = 11; i <= 20; ++i) wider.set(i, random_rat(rng, 20, 9));
    CHECK(chain_norm(ctx, wider) >= chain_norm(ctx, x));
  }
}

TEST_CASE("embedding into a host") {
  SierpinskiContext host(RationalInjection::stern_brocot());
  auto inc = embed(host, explicit_ctx({1, 2, 3, 4, 5}), 5);
  for (std::size_t i = 1; i < inc.size(); ++i) {
    CHECK(inc[i - 1] < inc[i]);
    CHECK(host.injection().value(inc[i - 1]) < host.injection().value(inc[i]));
  }
  auto dec = embed(host, explicit_ctx({5, 4, 3, 2, 1}), 5);
  for (std::size_t i = 1; i < dec.size(); ++i) {
    CHECK(host.injection().value(dec[i - 1]) > host.injection().value(dec[i]));
  }

  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = distinct_values(rng, 8);
    SierpinskiContext guest = explicit_ctx(h);
    for (auto inj : {RationalInjection::stern_brocot(), RationalInjection::cantor()}) {
      SierpinskiContext hc(inj);
      auto image = embed(hc, guest, 8);
      for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
          CHECK(image[i] < image[j]);
          CHECK((h[i] < h[j]) == (hc.injection().value(image[i]) < hc.injection().value(image[j])));
        }
      }
    }
  }
  CHECK_THROWS_AS(embed(explicit_ctx({1, 2, 3}), explicit_ctx({3, 2, 1}), 2), HostExhausted);
}

TEST_CASE("Banach partition") {
  std::map<int, int> id;
  for (int k = 1; k <= 10; ++k) id[k] = k;
  auto p = banach_partition(id, id, 10);
  CHECK(p.a1.size() == 10);
  CHECK(p.b1.size() == 10);
  CHECK(p.undetermined_a.empty());

  std::map<int, int> shift;
  for (int k = 1; k <= 10; ++k) shift[k] = k + 1;
  auto s = banach_partition(shift, shift, 10);
  CHECK(s.a1 == IdSet{1, 3, 5, 7, 9});
  CHECK(s.a2 == IdSet{2, 4, 6, 8, 10});
  CHECK(s.b1 == IdSet{2, 4, 6, 8, 10});
  CHECK(s.b2 == IdSet{1, 3, 5, 7, 9});
  auto open = banach_partition(shift, shift, 10, {false});
  CHECK(open.undetermined_a.size() == 10);
  CHECK(open.a1.empty());

  auto empty = banach_partition({}, {}, 0);
  CHECK((empty.a1.empty() && empty.a2.empty() && empty.b1.empty() && empty.b2.empty()));
  CHECK_THROWS_AS(banach_partition({{1, 2}, {2, 2}}, {}, 3), InvalidArgument);

  // φ[A₁] = B₁ and ψ[B₂] = A₂ for random partial injections on the window.
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 12;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::map<int, int> phi, psi;
    std::bernoulli_distribution keep(0.8);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    for (int k = 1; k <= n; ++k) {
      if (keep(rng)) phi[k] = img[static_cast<std::size_t>(k - 1)];
    }
    std::shuffle(img.begin(), img.end(), rng);
    for (int k = 1; k <= n; ++k) {
      if (keep(rng)) psi[k] = img[static_cast<std::size_t>(k - 1)];
    }
    auto r = banach_partition(phi, psi, n);
    CHECK(r.a1.size() + r.a2.size() == static_cast<std::size_t>(n));
    CHECK(r.b1.size() + r.b2.size() == static_cast<std::size_t>(n));
    IdSet phi_a1, psi_b2;
    for (int a : r.a1) {
      if (phi.count(a)) phi_a1.push_back(phi[a]);
    }
    for (int b : r.b2) {
      if (psi.count(b)) psi_b2.push_back(psi[b]);
    }
    phi_a1 = make_set(phi_a1);
    CHECK(is_subset(phi_a1, r.b1));
    CHECK(is_subset(make_set(psi_b2), r.a2));
    // Every element of B₁ comes from A₁ unless it has no preimage at all.
    for (int b : r.b1) {
      bool has_pre = false;
      for (auto [k, v] : phi) has_pre = has_pre || v == b;
      if (has_pre) CHECK(std::binary_search(phi_a1.begin(), phi_a1.end(), b) == true);
    }
  }
}
