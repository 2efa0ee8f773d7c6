#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "sqfree/error.hpp"
#include "sqfree/harness.hpp"
#include "sqfree/leaf.hpp"

namespace sqfree {
namespace {

class Recorder {
 public:
  Recorder(VerificationReport& report, const SimplicialComplex& complex) : report_(report), complex_(complex) {}

  /// Runs `body`, which returns (passed, detail). Budget overruns become skips.
  template <class Body>
  void run(std::string name, std::string instance, Json replay_extra, Body&& body) {
    CheckResult r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [passed, detail] = body();
      r.passed = passed;
      r.detail = std::move(detail);
    } catch (const BudgetExceeded& e) {
      r.skipped = true;
      r.passed = true;
      r.detail = std::string("skipped: ") + e.what();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.passed) {
      r.replay = Json::object();
      r.replay["complex"] = complex_to_json(complex_);
      r.replay["check"] = r.name;
      for (auto& [key, value] : replay_extra.items()) r.replay[key] = value;
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerificationReport& report_;
  const SimplicialComplex& complex_;
};

std::string set_text(const SimplicialComplex& c, VertexSet s) { return c.labels().format(s); }

std::vector<std::size_t> k_values(const VerifyOptions& options, std::size_t nu) {
  std::size_t lo = 1, hi = nu;
  if (options.k_range) {
    lo = std::max<std::size_t>(1, options.k_range->first);
    hi = std::min(nu, options.k_range->second);
  }
  std::vector<std::size_t> out;
  for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

void battery(VerificationReport& report, const SimplicialComplex& complex, const VerifyOptions& options) {
  Recorder rec(report, complex);
  const auto& labels = complex.labels();
  bool cm_forest = false;
  rec.run("cm-forest", "", Json::object(), [&] {
    cm_forest = is_cm_forest(complex);
    return std::pair{cm_forest, cm_forest ? std::string("grafted forest") : std::string("not a Cohen-Macaulay forest")};
  });
  if (!cm_forest) return;
  const auto cert = *is_grafted(complex);
  const std::size_t nu = matching_number(complex);
  const auto ks = k_values(options, nu);

  rec.run("grafting-certificate", "", Json::object(), [&] {
    return std::pair{cert.conditions.all(), "leaves " + format_sets(labels, cert.grafted_leaves) + " | base " +
                                                format_sets(labels, cert.base_facets)};
  });
  rec.run("matching-number", "", Json::object(), [&] {
    return std::pair{nu == cert.grafted_leaves.size(),
                     "nu = " + std::to_string(nu) + ", grafted leaves = " + std::to_string(cert.grafted_leaves.size())};
  });
  rec.run("grafted-leaves-good", "", Json::object(), [&] {
    const bool ok = std::all_of(cert.grafted_leaves.begin(), cert.grafted_leaves.end(),
                                [&](VertexSet f) { return is_good_leaf(complex, f).has_value(); });
    return std::pair{ok, std::string(ok ? "every grafted leaf is a good leaf" : "a grafted leaf is not good")};
  });
  rec.run("special-leaf-exists", "", Json::object(), [&] {
    const auto special = special_leaves(complex);
    const VertexSet found = find_special_leaf_grafted(complex, cert);
    const bool listed = std::find(special.begin(), special.end(), found) != special.end();
    return std::pair{!special.empty() && listed,
                     "special " + format_sets(labels, special) + "; constructed " + set_text(complex, found)};
  });

  std::vector<std::pair<std::size_t, long long>> g_values;
  for (std::size_t k : ks) {
    const std::string inst = "k=" + std::to_string(k);
    Json extra{{"k", k}};
    std::optional<DepthTheoremRow> row;
    rec.run("dimension-and-depth", inst, extra, [&] {
      const auto rep = verify_depth_theorem(complex, options.engine, {k});
      row = rep.rows.front();
      g_values.emplace_back(k, row->g);
      const bool ok = row->dim == row->expected && row->depth == row->expected && row->is_cm;
      return std::pair{ok, "expected " + std::to_string(row->expected) + ", dim " + std::to_string(row->dim) +
                               ", depth " + std::to_string(row->depth) + (row->is_cm ? ", CM" : ", not CM")};
    });
    if (row) {
      for (const auto& [leaf, depth] : row->special_leaf_depths) {
        Json ex{{"k", k}, {"leaf", labels.names_of(leaf)}};
        rec.run("depth-with-special-leaf", inst + " F=" + set_text(complex, leaf), ex, [&, d = depth, e = row->expected] {
          return std::pair{d == e, "depth " + std::to_string(d) + ", expected " + std::to_string(e)};
        });
      }
    }
  }
  if (!g_values.empty()) {
    rec.run("normalized-depth-nonincreasing", "", Json::object(), [&] {
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < g_values.size(); ++i) {
        if (i > 0 && g_values[i].first == g_values[i - 1].first + 1 && g_values[i].second > g_values[i - 1].second) ok = false;
        detail += (i ? " " : "") + std::string("g(") + std::to_string(g_values[i].first) + ")=" + std::to_string(g_values[i].second);
      }
      return std::pair{ok, detail};
    });
  }

  for (VertexSet leaf : leaves(complex)) {
    for (std::size_t k : ks) {
      Json extra{{"k", k}, {"leaf", labels.names_of(leaf)}};
      rec.run("colon-by-leaf", "k=" + std::to_string(k) + " F=" + set_text(complex, leaf), extra, [&] {
        const auto check = verify_colon_lemma(complex, leaf, k);
        return std::pair{check.holds(), "colon " + check.colon_side.format() + ", power " + check.power_side.format() +
                                            (check.remainder_cm_forest ? "" : ", remainder not CM forest")};
      });
    }
  }

  const MonomialIdeal ideal = facet_ideal(complex);
  for (VertexSet leaf : cert.grafted_leaves) {
    const VertexSet full = neighbor_intersection(cert, leaf);
    std::vector<VertexSet> samples{VertexSet{}};
    for (unsigned v : full) samples.push_back(VertexSet::singleton(v));
    if (full.size() > 1) samples.push_back(full);
    for (VertexSet a : samples) {
      Json extra{{"leaf", labels.names_of(leaf)}, {"A", labels.names_of(a)}};
      rec.run("contraction", "F=" + set_text(complex, leaf) + " A=" + set_text(complex, a), extra, [&] {
        const auto check = verify_contraction_lemma(complex, leaf, a);
        std::string detail = "contracted " + check.contracted.format();
        if (!check.colon_matches) detail += ", colon mismatch";
        if (!check.cm_forest) detail += ", not a CM forest";
        if (check.partition_matches && !*check.partition_matches) {
          detail += ", predicted leaves " + format_sets(labels, check.predicted_leaves) + " base " +
                    format_sets(labels, check.predicted_base);
        }
        return std::pair{check.holds(), detail};
      });
    }
    if (!full.empty() && !ideal.contains(full)) {
      Json extra{{"leaf", labels.names_of(leaf)}, {"m", labels.names_of(full)}};
      rec.run("colon-keeps-cm", "m=" + set_text(complex, full), extra, [&] {
        const bool ok = verify_colon_cm(ideal, full, options.engine);
        return std::pair{ok, std::string(ok ? "(I : m) is CM" : "(I : m) is not CM")};
      });
    }
  }
  const auto special = special_leaves(complex);
  if (!special.empty()) {
    for (std::size_t k : ks) {
      if (k < 2) continue;
      const VertexSet leaf = special.front();
      Json extra{{"k", k}, {"m", labels.names_of(leaf)}};
      rec.run("colon-keeps-cm", "k=" + std::to_string(k) + " m=" + set_text(complex, leaf), extra, [&] {
        const bool ok = verify_colon_cm(squarefree_power(ideal, k), leaf, options.engine);
        return std::pair{ok, std::string(ok ? "(I^[k] : x_F) is CM" : "(I^[k] : x_F) is not CM")};
      });
    }
  }
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::size_t VerificationReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.skipped; }));
}

Json VerificationReport::to_json() const {
  Json doc;
  doc["target"] = target;
  doc["passed"] = passed();
  doc["failures"] = failures();
  doc["skipped"] = skipped();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["name"] = c.name;
    item["instance"] = c.instance;
    item["status"] = c.skipped ? "skip" : (c.passed ? "pass" : "fail");
    item["detail"] = c.detail;
    if (!c.passed) item["replay"] = c.replay;
    list.push_back(std::move(item));
  }
  doc["checks"] = std::move(list);
  return doc;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << "target " << target << "\n";
  double total = 0;
  for (const auto& c : checks) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", c.seconds);
    total += c.seconds;
    out << (c.skipped ? "SKIP " : (c.passed ? "PASS " : "FAIL ")) << c.name;
    if (!c.instance.empty()) out << " [" << c.instance << "]";
    out << "  " << c.detail << "  (" << timing << ")\n";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3fs", total);
  out << checks.size() << " checks, " << failures() << " failed, " << skipped() << " skipped, " << timing << "\n";
  return out.str();
}

VerificationReport verify_all(const std::string& target, const SimplicialComplex& complex, const VerifyOptions& options) {
  VerificationReport report;
  report.target = target;
  battery(report, complex, options);
  return report;
}

VerificationReport verify_fixture(const Fixture& fixture, const VerifyOptions& options) {
  VerificationReport report;
  report.target = fixture.name;
  Recorder rec(report, fixture.complex);
  for (const auto& fact : fixture.facts) {
    rec.run("fact", fact.property, Json{{"fixture", fixture.name}}, [&] {
      const std::string actual = fact.evaluate(options.engine);
      return std::pair{actual == fact.expected, "expected " + fact.expected + ", got " + actual + " [" +
                                                    std::string(provenance_tag(fact.provenance)) + "]"};
    });
  }
  if (is_cm_forest(fixture.complex)) battery(report, fixture.complex, options);
  return report;
}

}  // namespace sqfree
