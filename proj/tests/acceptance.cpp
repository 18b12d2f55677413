// Acceptance suite: end-to-end checks of the worked covering example, the
// homology oracle for fundamental-group abelianizations, seeded property
// sweeps over random spaces, homs and covers, and non-T0 coherence. Each
// criterion prints one PASS/FAIL line; the process exits non-zero if any
// fail. All checks are exact integer comparisons; the stated time budgets
// are enforced.

#include <aspace/complex.hpp>
#include <aspace/covering.hpp>
#include <aspace/group.hpp>
#include <aspace/groupoid.hpp>
#include <aspace/space.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace aspace;

namespace {

struct acceptance_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw acceptance_failure(what);
}

struct CriterionResult {
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

CriterionResult run_criterion(const std::function<void()>& body,
                              double time_budget_seconds) {
  CriterionResult r;
  auto start = std::chrono::steady_clock::now();
  try {
    body();
    r.passed = true;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                  .count();
  if (r.passed && r.seconds > time_budget_seconds) {
    r.passed = false;
    r.detail = "exceeded the time budget of " + std::to_string(time_budget_seconds) +
               "s (took " + std::to_string(r.seconds) + "s)";
  }
  return r;
}

struct CircleSetup {
  FiniteSpace x = testutil::circle_model();
  SpanningTree tree{x, {{0, 2}, {1, 2}, {1, 3}}};
  Presentation pres = pi1_presentation(x, 0, tree);
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  GroupHom hom{pres, z6, {2}};
};

// ---- criterion 1: the worked example, end to end ---------------------------

void criterion_worked_example() {
  CircleSetup s;
  require(s.pres.generators == std::vector<Comparability>{{0, 3}},
          "presentation is not generated by a<d alone");
  require(s.pres.relators.empty(), "presentation is not free");

  auto functor = functor_from_tree_hom(s.tree, s.hom);
  require(functor.value(0, 3) == 2 && functor.value(0, 2) == 0 &&
              functor.value(1, 2) == 0 && functor.value(1, 3) == 0,
          "functor values differ from the worked example");

  auto cover = comma_cover(functor);
  require(cover.total.size() == 24, "cover does not have 24 points");
  auto comps = cover.total.connected_components();
  require(comps.size() == 2, "cover does not have exactly 2 components");
  require(comps[0].size() == 12 && comps[1].size() == 12,
          "components are not 12 points each");

  auto report = verify_covering(cover);
  require(report.ok(), "covering conditions failed: " +
                           (report.failures.empty() ? std::string("?")
                                                    : report.failures[0].message));

  SubSpace abc = SubSpace::of_labels(s.x, {"a", "b", "c"});
  require(restriction_is_product(cover, abc),
          "p^-1({a,b,c}) is not the literal product");

  SubSpace abd = SubSpace::of_labels(s.x, {"a", "b", "d"});
  require(!restriction_is_product(cover, abd),
          "p^-1({a,b,d}) unexpectedly is a literal product");
  auto search = find_trivializing_tree(s.hom, abd);
  require(search.status == TreeSearch::Status::found,
          "no tree found that trivializes the functor on {a,b,d}");
  require(is_trivial_on(functor_via_tree(*search.tree, s.hom), abd),
          "the found tree does not trivialize the functor on {a,b,d}");

  SubSpace whole(s.x, {0, 1, 2, 3});
  auto none = find_trivializing_tree(s.hom, whole);
  require(none.status == TreeSearch::Status::not_found,
          "a tree unexpectedly trivializes the functor on all of X");
}

// ---- criterion 2: the fundamental-group oracle on the circle ---------------

void criterion_circle_oracle() {
  CircleSetup s;
  HomologyGroup ab = abelianization(s.pres);
  require(ab.betti == 1 && ab.torsion.empty(), "abelianized pi1 is not Z");
  HomologyGroup h1 = homology(order_complex(s.x), 1);
  require(ab == h1, "abelianized pi1 differs from H1 of the order complex");
}

// ---- criteria 3 and 5: the seeded sweep -------------------------------------

void check_cover_for_hom(testutil::Rng& rng, const FiniteSpace& x,
                         const SpanningTree& tree, const Presentation& pres,
                         bool& constancy_matches) {
  int n = 1 + rng.below(6);
  FiniteGroup grp = FiniteGroup::cyclic(n);
  auto images = testutil::random_hom_images(rng, pres, n);
  GroupHom hom(pres, grp, images);
  GroupFunctor functor = functor_from_tree_hom(tree, hom);

  // functoriality on every composable triple
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b) {
      if (!x.leq(a, b)) continue;
      for (int c = 0; c < x.size(); ++c) {
        if (!x.leq(b, c)) continue;
        require(functor.value(a, c) ==
                    grp.mul(functor.value(b, c), functor.value(a, b)),
                "functoriality fails on a triple");
      }
    }

  // criterion 5: constant-identity iff every generator image is the identity
  bool all_identity = true;
  for (int v : images)
    if (v != grp.identity()) all_identity = false;
  SubSpace whole(x, [&] {
    std::vector<int> carrier(x.size());
    std::iota(carrier.begin(), carrier.end(), 0);
    return carrier;
  }());
  if (is_trivial_on(functor, whole) != all_identity) constancy_matches = false;

  Covering cover = comma_cover(functor);
  require(cover.total.size() == x.size() * n, "total space size is not |X|*n");
  require(verify_covering(cover).ok(), "covering conditions fail in the sweep");

  int image_size = static_cast<int>(subgroup_generated(grp, images).size());
  require(pi0_cover(cover, hom) == n / image_size,
          "component count is not n / |im|");

  // deck action: free, transitive on every fiber
  for (int g = 0; g < n; ++g) {
    PointMap deck = deck_transformation(cover, g);
    require(is_continuous(deck), "deck transformation is not continuous");
    bool fixes = false;
    for (int t = 0; t < cover.total.size(); ++t)
      if (deck(t) == t) fixes = true;
    require(fixes == (g == grp.identity()), "deck action is not free");
  }
  for (int p = 0; p < x.size(); ++p)
    for (int h = 0; h < n; ++h)
      for (int h2 = 0; h2 < n; ++h2) {
        int g = grp.mul(h2, grp.inv(h));
        require(deck_transformation(cover, g)(cover.point_index(p, h)) ==
                    cover.point_index(p, h2),
                "deck action is not transitive on a fiber");
      }

  // opposite comma space: order isomorphism over the base
  PointMap iso = opposite_comma_iso(cover);
  require(is_continuous(iso), "comma inversion is not continuous");
  std::vector<int> back(iso.assignment.size());
  for (size_t t = 0; t < iso.assignment.size(); ++t) back[iso.assignment[t]] = t;
  require(is_continuous(PointMap(iso.target, iso.source, back)),
          "comma inversion is not an order isomorphism");
  for (int t = 0; t < cover.total.size(); ++t)
    require(cover.base_of(iso(t)) == cover.base_of(t),
            "comma inversion does not commute with the projections");

  // triviality criterion agrees with the functor when its precondition holds
  std::vector<int> carrier;
  for (int p = 0; p < x.size(); ++p)
    if (rng.percent(60)) carrier.push_back(p);
  if (carrier.empty()) carrier.push_back(rng.below(x.size()));
  SubSpace a(x, carrier);
  try {
    bool via_loops = triviality_criterion(hom, a);
    require(via_loops == is_trivial_on(functor, a),
            "triviality criterion disagrees with the functor");
  } catch (const domain_error&) {
    // tree does not restrict to the subspace; outside the precondition
  }
}

bool sweep_constancy_matches = true;
bool sweep_ran = false;

void criterion_property_sweep() {
  testutil::Rng rng(987654321);
  sweep_constancy_matches = true;
  for (int trial = 0; trial < 200; ++trial) {
    FiniteSpace x = testutil::random_connected_poset(rng, 3 + rng.below(6));
    HomologyGroup h1 = homology(order_complex(x), 1);

    std::vector<HomologyGroup> abelianizations;
    for (int t = 0; t < 3; ++t) {
      SpanningTree tree = testutil::random_spanning_tree(rng, x);
      for (int b = 0; b < 2; ++b) {
        int basepoint = rng.below(x.size());
        Presentation pres = pi1_presentation(x, basepoint, tree);
        HomologyGroup ab = abelianization(pres);
        require(ab == h1, "abelianized pi1 differs from H1 in the sweep");
        abelianizations.push_back(ab);
      }
    }
    for (const auto& ab : abelianizations)
      require(ab == abelianizations.front(),
              "abelianization depends on the tree or basepoint");

    SpanningTree tree = testutil::random_spanning_tree(rng, x);
    Presentation pres = pi1_presentation(x, rng.below(x.size()), tree);
    for (int rep = 0; rep < 2; ++rep)
      check_cover_for_hom(rng, x, tree, pres, sweep_constancy_matches);
  }
  sweep_ran = true;
}

void criterion_constancy() {
  require(sweep_ran, "criterion 3 sweep did not run");
  require(sweep_constancy_matches,
          "a functor was constant-identity without all images being trivial, "
          "or vice versa");
}

// ---- criterion 4: n-fold covers of the circle -------------------------------

void criterion_circle_covers() {
  CircleSetup s;
  for (int n = 2; n <= 6; ++n) {
    FiniteGroup zn = FiniteGroup::cyclic(n);
    GroupHom hom(s.pres, zn, {1 % n});
    Covering cover = comma_cover(functor_from_tree_hom(s.tree, hom));
    require(cover.total.size() == 4 * n, "cover size is not 4n");
    require(pi0_cover(cover, hom) == 1, "epimorphic cover is not connected");
    auto comps = cover.total.connected_components();
    require(comps.size() == 1, "expected exactly one component");
    SubSpace comp(cover.total, comps.front());
    HomologyGroup h1 = homology_of_space(comp.induced(), 1)[1];
    require(h1.betti == 1 && h1.torsion.empty(),
            "an n-fold circle cover does not have H1 = Z");
  }
}

// ---- criterion 6: non-T0 coherence ------------------------------------------

void criterion_non_t0() {
  testutil::Rng rng(24681357);
  for (int trial = 0; trial < 50; ++trial) {
    FiniteSpace x = testutil::random_connected_preorder(rng, 3 + rng.below(6), true);
    auto q = kolmogorov_quotient(x);
    require(q.space.size() < x.size(), "preorder has no non-trivial class");

    HomologyGroup ab_x =
        abelianization(pi1_presentation(x, 0, extend_forest_to_tree(x, {})));
    HomologyGroup ab_q = abelianization(
        pi1_presentation(q.space, 0, extend_forest_to_tree(q.space, {})));
    require(ab_x == ab_q, "abelianized pi1 changes across the quotient");

    auto h_x = homology_of_space(x, 1);
    auto h_q = homology_of_space(q.space, 1);
    auto qq = kolmogorov_quotient(q.space);
    auto h_qq = homology_of_space(qq.space, 1);
    require(h_x[0] == h_q[0] && h_q[0] == h_qq[0],
            "H0 is not stable under re-quotienting");
    require(h_x[1] == h_q[1] && h_q[1] == h_qq[1],
            "H1 is not stable under re-quotienting");
  }
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* name;
    std::function<void()> body;
    double budget;
  };
  const double kNoBudget = 1e9;
  std::vector<Entry> criteria = {
      {1, "worked covering example, end to end", criterion_worked_example, 1.0},
      {2, "fundamental-group oracle on the circle model", criterion_circle_oracle,
       kNoBudget},
      {3, "seeded property sweep (200 posets)", criterion_property_sweep, 60.0},
      {4, "n-fold circle covers have H1 = Z", criterion_circle_covers, 5.0},
      {5, "constant functor iff trivial images (on the sweep)",
       criterion_constancy, kNoBudget},
      {6, "non-T0 coherence (50 preorders)", criterion_non_t0, kNoBudget},
  };

  bool all = true;
  for (const auto& c : criteria) {
    CriterionResult r = run_criterion(c.body, c.budget);
    std::printf("criterion %d (%s): %s [%.3fs]\n", c.number, c.name,
                r.passed ? "PASS" : "FAIL", r.seconds);
    if (!r.passed) {
      std::printf("  %s\n", r.detail.c_str());
      all = false;
    }
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
