#include "eccg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "eccg/eccentric.hpp"
#include "eccg/families.hpp"
#include "eccg/graph6.hpp"
#include "eccg/isomorphism.hpp"
#include "eccg/metrics.hpp"
#include "eccg/trees.hpp"

namespace eccg {

namespace {

struct Ctx {
  DistanceMatrix dm;
  EccentricityProfile prof;
};

Ctx make_ctx(const Graph& g) {
  Ctx c;
  c.dm = all_pairs_distances(g);
  c.prof = profile_from_distances(c.dm);
  return c;
}

bool strata_in_2_3(const Ctx& c) {
  for (int e : c.prof.eccentricity)
    if (e != 2 && e != 3) return false;
  return true;
}

bool corrected_impl(const Graph& g, const Ctx& c) {
  if (g.vertex_count() == 1) return true;
  if (!strata_in_2_3(c)) return false;
  const auto& s3 = c.prof.stratum(3);
  for (std::size_t i = 0; i < s3.size(); ++i)
    for (std::size_t j = i + 1; j < s3.size(); ++j)
      if (c.dm.at(s3[i], s3[j]) == 2) return false;
  return true;
}

bool have_common_neighbor(const Graph& g, int u, int v) {
  auto a = g.row(u);
  auto b = g.row(v);
  for (int k = 0; k < g.words_per_row(); ++k)
    if (a[k] & b[k]) return true;
  return false;
}

bool akiyama_impl(const Graph& g, const Ctx& c) {
  if (g.vertex_count() == 1) return true;
  if (!strata_in_2_3(c)) return false;
  const auto& s3 = c.prof.stratum(3);
  for (std::size_t i = 0; i < s3.size(); ++i)
    for (std::size_t j = i + 1; j < s3.size(); ++j)
      if (have_common_neighbor(g, s3[i], s3[j])) return false;
  return true;
}

bool iso_complement_impl(const Graph& g, const Ctx& c) {
  Graph e = eccentric_graph(g, c.dm, c.prof);
  Graph comp = complement(g);
  if (e.edge_count() != comp.edge_count()) return false;
  return find_isomorphism(e, comp).isomorphic;
}

class Timer {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ScanLocal {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> findings;  // labeled graph6
};

// Runs `visit` over every labeled connected graph on n vertices. The mask
// space is carved into chunks claimed through an atomic cursor; each worker
// merges its local tallies once at the end.
void scan_connected_labeled(
    int n, int threads,
    const std::function<void(const Graph&, ScanLocal&)>& visit,
    ScanLocal& out) {
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = 1ull << pairs;
  threads = std::clamp(threads, 1, 64);
  if (threads == 1 || total < (1u << 14)) {
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      if (is_connected(g)) visit(g, out);
    }
    return;
  }
  const std::uint64_t chunk = 1u << 12;
  std::atomic<std::uint64_t> cursor{0};
  std::mutex merge_mu;
  auto worker = [&] {
    ScanLocal local;
    for (;;) {
      std::uint64_t begin = cursor.fetch_add(chunk);
      if (begin >= total) break;
      std::uint64_t end = std::min(begin + chunk, total);
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (is_connected(g)) visit(g, local);
      }
    }
    std::lock_guard<std::mutex> lk(merge_mu);
    out.checked += local.checked;
    out.violations.insert(out.violations.end(), local.violations.begin(),
                          local.violations.end());
    out.findings.insert(out.findings.end(), local.findings.begin(),
                        local.findings.end());
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Deterministic output regardless of the thread carve-up: sort, then cap.
void finalize(VerificationReport& r, const CampaignOptions& opt,
              const Timer& timer) {
  std::sort(r.violations.begin(), r.violations.end(),
            [](const Violation& a, const Violation& b) {
              return a.graph6 < b.graph6 ||
                     (a.graph6 == b.graph6 && a.detail < b.detail);
            });
  if (r.violations.size() > opt.violation_cap)
    r.violations.resize(opt.violation_cap);
  std::sort(r.findings.begin(), r.findings.end());
  r.findings.erase(std::unique(r.findings.begin(), r.findings.end()),
                   r.findings.end());
  std::sort(r.anomalies.begin(), r.anomalies.end());
  r.elapsed_ms = timer.ms();
}

void require_range(int value, int lo, int hi, const std::string& what) {
  if (value < lo || value > hi)
    throw std::invalid_argument(what + " must be between " +
                                std::to_string(lo) + " and " +
                                std::to_string(hi));
}

}  // namespace

bool corrected_condition(const Graph& g) {
  return corrected_impl(g, make_ctx(g));
}

bool akiyama_condition(const Graph& g) { return akiyama_impl(g, make_ctx(g)); }

bool ecc_iso_complement(const Graph& g) {
  return iso_complement_impl(g, make_ctx(g));
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["campaign"] = campaign;
  j["bounds"] = bounds;
  j["checked"] = checked;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations)
    j["violations"].push_back({{"graph6", v.graph6}, {"detail", v.detail}});
  j["findings"] = findings;
  j["anomalies"] = anomalies;
  j["elapsed_ms"] = elapsed_ms;
  if (findings_labeled) j["findings_labeled"] = *findings_labeled;
  return j;
}

VerificationReport verify_theorem2(int max_n, const CampaignOptions& opt) {
  require_range(max_n, 2, 7, "theorem2 max_n");
  Timer timer;
  VerificationReport r;
  r.campaign = "theorem2";
  r.bounds["max_n"] = max_n;
  const int threads = resolve_threads(opt.threads);
  for (int n = 2; n <= max_n; ++n) {
    ScanLocal agg;
    scan_connected_labeled(
        n, threads,
        [](const Graph& g, ScanLocal& local) {
          ++local.checked;
          Ctx c = make_ctx(g);
          bool cond = corrected_impl(g, c);
          bool iso = iso_complement_impl(g, c);
          if (cond != iso)
            local.violations.push_back(
                {emit_graph6(g), std::string("corrected_condition=") +
                                     (cond ? "true" : "false") +
                                     " ecc_iso_complement=" +
                                     (iso ? "true" : "false")});
        },
        agg);
    r.checked += agg.checked;
    r.violations.insert(r.violations.end(), agg.violations.begin(),
                        agg.violations.end());
  }
  finalize(r, opt, timer);
  return r;
}

VerificationReport verify_tree_diameter_bound(int max_n,
                                              const CampaignOptions& opt) {
  require_range(max_n, 2, 18, "tree-diameter max_n");
  Timer timer;
  VerificationReport r;
  r.campaign = "tree-diameter";
  r.bounds["max_n"] = max_n;
  for (int n = 1; n <= max_n; ++n)
    for_each_free_tree(n, [&](const Graph& t) {
      ++r.checked;
      if (n < 2) return;
      Graph e = eccentric_graph(t);
      if (!is_connected(e)) {
        r.violations.push_back({emit_graph6(t), "eccentric graph disconnected"});
        return;
      }
      auto pe = eccentricity_profile(e);
      auto pt = eccentricity_profile(t);
      // every tree has one or two centers, one exactly when the diameter
      // is even
      if (pt.centers.size() != 1 && pt.centers.size() != 2)
        r.violations.push_back(
            {emit_graph6(t),
             std::to_string(pt.centers.size()) + " centers"});
      if ((pt.centers.size() == 1) != (pt.diameter == 2 * pt.radius))
        r.violations.push_back(
            {emit_graph6(t), "center count disagrees with diameter parity"});
      if (pe.diameter > 3)
        r.violations.push_back(
            {emit_graph6(t),
             "diam(ecc)=" + std::to_string(pe.diameter) + " exceeds 3"});
      if (pe.diameter > pt.diameter)
        r.violations.push_back(
            {emit_graph6(t), "diam(ecc)=" + std::to_string(pe.diameter) +
                                 " exceeds diam(t)=" +
                                 std::to_string(pt.diameter)});
      if (n >= 3 && pt.centers.size() == 2 && pe.diameter != 3)
        r.violations.push_back(
            {emit_graph6(t), "two-center tree with diam(ecc)=" +
                                 std::to_string(pe.diameter) + " != 3"});
    });
  finalize(r, opt, timer);
  return r;
}

VerificationReport verify_two_center_structure(int max_n,
                                               std::span<const Graph> pinned,
                                               const CampaignOptions& opt) {
  require_range(max_n, 2, 14, "two-center max_n");
  Timer timer;
  VerificationReport r;
  r.campaign = "two-center";
  r.bounds["max_n"] = max_n;
  r.bounds["pinned"] = pinned.size();
  auto check = [&r](const Graph& t) {
    if (!is_tree(t) || tree_centers(t).size() != 2) {
      r.violations.push_back({emit_graph6(t), "not a two-center tree"});
      return;
    }
    ++r.checked;
    auto dec = two_center_decomposition(t);
    Graph predicted = predicted_two_center_ecc(dec);
    Graph actual = eccentric_graph(t);
    if (!edge_set_equal(predicted, actual))
      r.violations.push_back(
          {emit_graph6(t),
           "eccentric graph differs from the predicted coclique extension "
           "(parts " +
               std::to_string(dec.tc1.size()) + "," +
               std::to_string(dec.u2.size()) + "," +
               std::to_string(dec.u1.size()) + "," +
               std::to_string(dec.tc2.size()) + ")"});
  };
  for (const Graph& t : pinned) check(t);
  for (int n = 2; n <= max_n; ++n)
    for_each_free_tree(n, [&](const Graph& t) {
      if (tree_centers(t).size() == 2) check(t);
    });
  finalize(r, opt, timer);
  return r;
}

VerificationReport verify_lemma5(int max_n, const CampaignOptions& opt) {
  require_range(max_n, 4, 14, "lemma5 max_n");
  Timer timer;
  VerificationReport r;
  r.campaign = "lemma5";
  r.bounds["max_n"] = max_n;
  r.bounds["min_diameter"] = 4;
  for (int n = 3; n <= max_n; ++n)
    for_each_free_tree(n, [&](const Graph& t) {
      auto prof = eccentricity_profile(t);
      if (prof.centers.size() != 1) return;
      if (prof.diameter == 2) {
        // stars: the eccentric graph is complete, 1-self-centered rather
        // than 2-self-centered, and with three or more leaves the triple
        // exists anyway
        r.anomalies.push_back(emit_graph6(t));
        auto triple = diametrical_leaf_triple(t);
        Graph e = eccentric_graph(t);
        bool complete =
            e.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2;
        if (!complete || (n >= 4 && !triple))
          r.violations.push_back(
              {emit_graph6(t), "star outside the documented anomaly shape"});
        return;
      }
      if (prof.diameter < 4) return;
      ++r.checked;
      auto triple = diametrical_leaf_triple(t);
      Graph e = eccentric_graph(t);
      if (!is_connected(e)) {
        r.violations.push_back({emit_graph6(t), "eccentric graph disconnected"});
        return;
      }
      auto pe = eccentricity_profile(e);
      bool two_self_centered = pe.radius == 2 && pe.diameter == 2;
      if (triple.has_value() != two_self_centered)
        r.violations.push_back(
            {emit_graph6(t),
             std::string("triple ") + (triple ? "exists" : "absent") +
                 " but ecc(T) has radius " + std::to_string(pe.radius) +
                 ", diameter " + std::to_string(pe.diameter)});
      if (!triple && pe.diameter != 3)
        r.violations.push_back(
            {emit_graph6(t), "no triple but diam(ecc)=" +
                                 std::to_string(pe.diameter) + " != 3"});
    });
  finalize(r, opt, timer);
  return r;
}

VerificationReport verify_table1(int max_param, const CampaignOptions& opt) {
  if (max_param < 3)
    throw std::invalid_argument("table1 max_param must be at least 3");
  Timer timer;
  VerificationReport r;
  r.campaign = "table1";
  r.bounds["max_param"] = max_param;
  auto expect_iso = [&r](const std::string& row, const Graph& g,
                         const Graph& predicted) {
    ++r.checked;
    Graph e = eccentric_graph(g);
    if (!find_isomorphism(e, predicted).isomorphic)
      r.violations.push_back(
          {emit_graph6(g), row + ": eccentric graph not isomorphic to the "
                               "predicted form"});
  };
  for (int n = 1; n <= max_param; ++n)
    expect_iso("complete", complete_graph(n), complete_graph(n));
  for (int n = 3; n <= max_param; ++n)
    expect_iso("star", star_graph(n), complete_graph(n));
  for (int k = 2; k <= max_param; ++k) {
    // C_{2k} -> k disjoint edges
    std::vector<Edge> match;
    for (int i = 0; i < k; ++i) match.emplace_back(2 * i, 2 * i + 1);
    expect_iso("even-cycle", cycle_graph(2 * k),
               Graph::from_edges(2 * k, match));
  }
  for (int k = 2; k <= max_param; ++k)
    expect_iso("odd-cycle", cycle_graph(2 * k - 1), cycle_graph(2 * k - 1));
  for (int k = 1; k <= max_param; ++k)
    expect_iso("even-path", path_graph(2 * k), double_star(k - 1, k - 1));
  for (int k = 1; k <= max_param; ++k)
    expect_iso("odd-path", path_graph(2 * k + 1), sstar(k - 1, k - 1));
  for (int a = 2; a <= max_param; ++a)
    for (int b = 2; b <= max_param; ++b)
      expect_iso("complete-bipartite", complete_bipartite(a, b),
                 disjoint_union(complete_graph(a), complete_graph(b)));
  finalize(r, opt, timer);
  return r;
}

namespace {

// Shared scaffolding for the labeled searches: runs `classify` over every
// connected labeled graph with 2 <= n <= max_n, collecting labeled findings
// which are then deduplicated by canonical form.
VerificationReport run_search(
    const std::string& name, int max_n, const CampaignOptions& opt,
    const std::function<void(const Graph&, const Ctx&, ScanLocal&)>& classify) {
  require_range(max_n, 2, 7, name + " max_n");
  Timer timer;
  VerificationReport r;
  r.campaign = name;
  r.bounds["max_n"] = max_n;
  const int threads = resolve_threads(opt.threads);
  std::vector<std::string> labeled;
  for (int n = 2; n <= max_n; ++n) {
    ScanLocal agg;
    scan_connected_labeled(
        n, threads,
        [&classify](const Graph& g, ScanLocal& local) {
          ++local.checked;
          Ctx c = make_ctx(g);
          classify(g, c, local);
        },
        agg);
    r.checked += agg.checked;
    r.violations.insert(r.violations.end(), agg.violations.begin(),
                        agg.violations.end());
    labeled.insert(labeled.end(), agg.findings.begin(), agg.findings.end());
  }
  r.findings_labeled = labeled.size();
  for (const auto& g6 : labeled)
    r.findings.push_back(canonical_form(parse_graph6(g6)));
  finalize(r, opt, timer);
  return r;
}

}  // namespace

VerificationReport search_akiyama_gap(int max_n, const CampaignOptions& opt) {
  return run_search(
      "akiyama-gap", max_n, opt,
      [](const Graph& g, const Ctx& c, ScanLocal& local) {
        if (akiyama_impl(g, c)) return;
        if (!iso_complement_impl(g, c)) return;
        local.findings.push_back(emit_graph6(g));
        if (!corrected_impl(g, c))
          local.violations.push_back(
              {emit_graph6(g),
               "isomorphic to its complement yet failing the corrected "
               "condition"});
      });
}

VerificationReport search_problem1(int max_n, const CampaignOptions& opt) {
  return run_search(
      "same-diameter", max_n, opt,
      [](const Graph& g, const Ctx& c, ScanLocal& local) {
        Graph e = eccentric_graph(g, c.dm, c.prof);
        if (!is_connected(e)) return;
        auto pe = eccentricity_profile(e);
        if (pe.diameter > c.prof.diameter)
          local.violations.push_back(
              {emit_graph6(g), "diam(ecc)=" + std::to_string(pe.diameter) +
                                   " exceeds diam(g)=" +
                                   std::to_string(c.prof.diameter)});
        if (pe.diameter == c.prof.diameter)
          local.findings.push_back(emit_graph6(g));
      });
}

VerificationReport search_problem2(int max_n, const CampaignOptions& opt) {
  return run_search("self-ecc", max_n, opt,
                    [](const Graph& g, const Ctx& c, ScanLocal& local) {
                      Graph e = eccentric_graph(g, c.dm, c.prof);
                      if (find_isomorphism(g, e).isomorphic)
                        local.findings.push_back(emit_graph6(g));
                    });
}

VerificationReport grid_fixture_check(const Graph& transcribed_ecc) {
  Timer timer;
  VerificationReport r;
  r.campaign = "grid";
  r.bounds["rows"] = 3;
  r.bounds["cols"] = 4;
  r.checked = 1;
  Graph grid = grid_graph(3, 4);
  Graph e = eccentric_graph(grid);
  auto pg = eccentricity_profile(grid);
  if (pg.diameter != 5)
    r.violations.push_back(
        {emit_graph6(grid),
         "grid diameter " + std::to_string(pg.diameter) + " != 5"});
  if (!is_connected(e)) {
    r.violations.push_back({emit_graph6(grid), "eccentric graph disconnected"});
  } else {
    auto pe = eccentricity_profile(e);
    if (pe.diameter != 5)
      r.violations.push_back(
          {emit_graph6(grid), "diam(ecc(grid)) = " +
                                  std::to_string(pe.diameter) + " != 5"});
  }
  if (!find_isomorphism(e, transcribed_ecc).isomorphic)
    r.violations.push_back(
        {emit_graph6(e),
         "eccentric graph not isomorphic to the transcribed drawing"});
  CampaignOptions opt;
  finalize(r, opt, timer);
  return r;
}

}  // namespace eccg
