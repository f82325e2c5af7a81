// Acceptance suite: one line per criterion, PASS/FAIL, with the pinned
// tolerances inline. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ksg/colorer.hpp"
#include "ksg/constructions.hpp"
#include "ksg/lp.hpp"
#include "ksg/randomness.hpp"
#include "ksg/reduction.hpp"

using namespace ksg;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] criterion %2d (%.2fs) %s%s%s\n", ok ? "PASS" : "FAIL", id, sec, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

long double vec_overlap(const Construction& c, int a, int b) {
    return overlap(c.vectors->vectors[a], c.vectors->vectors[b]);
}

}  // namespace

int main() {
    criterion(1, "clifton pipeline: 11 edges, omega 3, gadget, overlap 1/3, extended", [](std::string& d) {
        Construction c = build_clifton();
        bool edges_ok = c.graph.edges().size() == 11;
        bool omega_ok = maximal_cliques(c.graph).omega == 3;
        bool gadget_ok = is_gadget(c.graph, 0, 7).is_gadget();
        Scalar ov2 = overlap_sq(c.vectors->vectors[0], c.vectors->vectors[7]);
        bool overlap_ok = ov2.exact() && ov2.rat() == Rational(1, 9);
        bool ext_ok = is_extended_gadget(c.graph, 0, 7).is_extended_gadget;
        d = "edges=" + std::to_string(c.graph.edges().size());
        return edges_ok && omega_ok && gadget_ok && overlap_ok && ext_ok;
    });

    criterion(2, "exact LP: full and restricted clifton optimum both 3/2", [](std::string& d) {
        Construction c = build_clifton();
        std::vector<Rational> obj(8, Rational(0));
        obj[0] = Rational(1);
        obj[7] = Rational(1);
        LPResult full = lp_maximize(c.graph, obj);
        LPResult restr = restricted_lp_clifton();
        d = "full=" + full.optimum.to_string() + " restricted=" + restr.optimum.to_string();
        return full.status == LPStatus::Optimal && full.optimum == Rational(3, 2) &&
               restr.status == LPStatus::Optimal && restr.optimum == Rational(3, 2);
    });

    criterion(3, "randomness bounds: quantum 1/27, no-signaling 3/4, exact", [](std::string& d) {
        PairBounds pb = pair_bounds(build_clifton(), 0, 7);
        d = "q=" + (pb.quantum_prob.exact() ? pb.quantum_prob.rat().to_string() : std::string("inexact")) +
            " ns=" + pb.ns_upper.to_string();
        return pb.quantum_prob.exact() && pb.quantum_prob.rat() == Rational(1, 27) &&
               pb.ns_upper == Rational(3, 4);
    });

    criterion(4, "nested recursion: overlap k/(k+2) within 1e-9 and extended via exact LP, k=1..8",
              [](std::string& d) {
                  for (int k = 1; k <= 8; ++k) {
                      Construction c = build_nested_extended(k);
                      long double got = vec_overlap(c, c.distinguished[0], c.distinguished[1]);
                      if (fabsl(got - static_cast<long double>(k) / (k + 2)) > 1e-9L) {
                          d = "overlap off at k=" + std::to_string(k);
                          return false;
                      }
                      if (!is_extended_gadget(c.graph, c.distinguished[0], c.distinguished[1]).is_extended_gadget) {
                          d = "extended check failed at k=" + std::to_string(k);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "parametric gadgets at overlaps {0.1, 0.3, 1/sqrt2, 0.8, 0.95}", [](std::string& d) {
        for (long double ov : {0.1L, 0.3L, 0.70710678118654752440L, 0.8L, 0.95L}) {
            Construction c = build_gadget_pair(ov);
            for (auto [a, b] : c.graph.edges()) {
                if (vec_overlap(c, a, b) > 1e-9L) {
                    d = "orthogonality violated at overlap " + std::to_string((double)ov);
                    return false;
                }
            }
            if (fabsl(vec_overlap(c, c.distinguished[0], c.distinguished[1]) - ov) > 1e-9L) {
                d = "distinguished overlap off at " + std::to_string((double)ov);
                return false;
            }
            if (!is_gadget(c.graph, c.distinguished[0], c.distinguished[1]).is_gadget()) {
                d = "gadget check failed at " + std::to_string((double)ov);
                return false;
            }
        }
        return true;
    });

    criterion(6, "simplex frames d=2..10 within 1e-12; si(3) virtual LP bound 1 vs quantum 4/3",
              [](std::string& d) {
                  for (int dim = 2; dim <= 10; ++dim)
                      if (simplex_frame_residual(simplex_frame(dim)) > 1e-12L) {
                          d = "residual too large at d=" + std::to_string(dim);
                          return false;
                      }
                  SIRecord rec;
                  Construction si = build_si_simplex(3, BuildMode::Virtual, &rec);
                  std::vector<Rational> obj(si.graph.n(), Rational(0));
                  for (int i = 0; i <= 3; ++i) obj[i] = Rational(1);
                  LPResult lp = lp_maximize(si.graph, obj);
                  d = "lp=" + lp.optimum.to_string() + " quantum=" + rec.quantum_value.to_string();
                  return lp.status == LPStatus::Optimal && lp.optimum <= Rational(1) &&
                         rec.quantum_value == Rational(4, 3);
              });

    criterion(7, "40-vector set: faithful merge yields 40 rays; f(u1)=0 in every coloring",
              [](std::string& d) {
                  Construction c = build_state_dependent_40();
                  FaithfulVersion fv = faithful_version(*c.vectors);
                  int rays = fv.vectors.size();
                  bool merge_ok = rays == 40;
                  int u1 = fv.merge_map[0];
                  long long count = 0;
                  bool forced_zero = true;
                  for_each_coloring(fv.graph, [&](const Coloring& col) {
                      ++count;
                      if (col.values[u1]) forced_zero = false;
                      return true;
                  });
                  forced_zero = forced_zero && count > 0;
                  d = "rays=" + std::to_string(rays) +
                      " (the published list itself forces u19 = u31 = (0,1,-1), so only 39 rays are "
                      "distinct) colorings=" + std::to_string(count) +
                      " forced_zero=" + (forced_zero ? std::string("yes") : std::string("no"));
                  return merge_ok && forced_zero;
              });

    criterion(8, "KS synthesis at pi/6: uncolorable, omega 3, extract round-trips", [](std::string& d) {
        Construction ks = build_ks_from_gadget(build_clifton(), 3, 1);
        bool omega_ok = maximal_cliques(ks.graph).omega == 3;
        SolveResult r = solve(ks.graph);
        bool unsat = r.status == SolveStatus::Uncolorable;
        Graph core = make_vertex_critical(ks.graph);
        GadgetExtraction ex = extract_gadget(core);
        bool gadget_ok = is_gadget(ex.graph, ex.pair.first, ex.pair.second).is_gadget();
        d = "n=" + std::to_string(ks.graph.n()) + " case=" + ex.case_tag;
        return omega_ok && unsat && gadget_ok;
    });

    criterion(9, "pitowsky table {(0,0) feasible; rest infeasible} at overlaps 1/3 and 0.6",
              [](std::string& d) {
                  for (long double ov : {1.0L / 3, 0.6L}) {
                      Construction pit = build_pitowsky(ov, BuildMode::Virtual);
                      auto t = indeterminacy_table(pit.graph, pit.distinguished[0], pit.distinguished[1]);
                      if (!(t[0][0] && !t[0][1] && !t[1][0] && !t[1][1])) {
                          d = "table wrong at overlap " + std::to_string((double)ov);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "reduction equivalence: all connected graphs <=5 vertices with omega 3, K3, W5",
              [](std::string& d) {
                  int instances = 0;
                  for (int n = 3; n <= 5; ++n) {
                      int pairs = n * (n - 1) / 2;
                      for (int mask = 0; mask < (1 << pairs); ++mask) {
                          Graph g(n);
                          int bit = 0;
                          for (int i = 0; i < n; ++i)
                              for (int j = i + 1; j < n; ++j, ++bit)
                                  if (mask & (1 << bit)) g.add_edge(i, j);
                          if (maximal_cliques(g).omega != 3) continue;
                          std::vector<int> seen(n, 0);
                          std::vector<int> stack{0};
                          seen[0] = 1;
                          while (!stack.empty()) {
                              int v = stack.back();
                              stack.pop_back();
                              for (int u = 0; u < n; ++u)
                                  if (g.adjacent(u, v) && !seen[u]) {
                                      seen[u] = 1;
                                      stack.push_back(u);
                                  }
                          }
                          bool connected = true;
                          for (int v = 0; v < n; ++v) connected &= seen[v] == 1;
                          if (!connected) continue;
                          ++instances;
                          Reduction r = reduce(g, BuildMode::Virtual);
                          EquivalenceVerdict v = verify_equivalence(g, r);
                          if (!v.equivalent || (v.lift_checked && !v.lift_valid)) {
                              d = "equivalence failed on an instance with n=" + std::to_string(n);
                              return false;
                          }
                      }
                  }
                  // W5 (omega 3, not 3-colorable)
                  Graph w5(6);
                  for (int i = 0; i < 5; ++i) {
                      w5.add_edge(i, (i + 1) % 5);
                      w5.add_edge(i, 5);
                  }
                  EquivalenceVerdict vw = verify_equivalence(w5, reduce(w5, BuildMode::Virtual));
                  if (!vw.equivalent || vw.source_colorable) {
                      d = "W5 failed";
                      return false;
                  }
                  // expanded spot check on the triangle
                  Graph k3(3);
                  k3.add_edge(0, 1);
                  k3.add_edge(0, 2);
                  k3.add_edge(1, 2);
                  Reduction re = reduce(k3, BuildMode::Expanded);
                  bool fbd_free = find_forbidden(re.target, 3).empty();
                  EquivalenceVerdict ve = verify_equivalence(k3, re);
                  d = "instances=" + std::to_string(instances) +
                      " expanded_n=" + std::to_string(re.target.n());
                  return fbd_free && ve.equivalent && ve.lift_valid;
              });

    criterion(11, "forbidden detector: C4 at d=3, patterns (ii)/(iii) at d=4/5, clifton square-free",
              [](std::string& d) {
                  Graph c4(4);
                  c4.add_edge(0, 1);
                  c4.add_edge(1, 2);
                  c4.add_edge(2, 3);
                  c4.add_edge(0, 3);
                  if (find_forbidden(c4, 3).size() != 1) {
                      d = "C4 not flagged";
                      return false;
                  }
                  auto pattern = [](int dim) {
                      Graph g(4 + (dim - 3));
                      g.add_edge(0, 1);
                      g.add_edge(1, 2);
                      g.add_edge(2, 3);
                      g.add_edge(0, 3);
                      for (int a = 0; a < dim - 3; ++a) {
                          for (int v = 0; v < 4; ++v) g.add_edge(4 + a, v);
                          for (int b = 0; b < a; ++b) g.add_edge(4 + a, 4 + b);
                      }
                      return g;
                  };
                  if (find_forbidden(pattern(4), 4).empty()) {
                      d = "pattern (ii) not flagged";
                      return false;
                  }
                  if (find_forbidden(pattern(5), 5).empty()) {
                      d = "pattern (iii) not flagged";
                      return false;
                  }
                  if (!find_forbidden(build_clifton().graph, 3).empty()) {
                      d = "clifton flagged square-positive";
                      return false;
                  }
                  return true;
              });

    std::printf("%d/11 criteria passed\n", 11 - failures);
    if (failures) {
        std::printf("criterion 7's 40-ray clause fails on the published vector list itself:\n"
                    "its surrounding orthogonalities pin both u19 and u31 to the ray (0,1,-1),\n"
                    "leaving 39 distinct rays; the forced-zero property still holds and passes.\n");
    }
    return failures == 0 ? 0 : 1;
}
