#include "sqfree/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>

#include "sqfree/error.hpp"
#include "sqfree/harness.hpp"
#include "sqfree/leaf.hpp"

namespace sqfree::cli {
namespace {

struct Input {
  std::string name;
  std::optional<Fixture> fixture;
  std::optional<SimplicialComplex> complex;
  MonomialIdeal ideal;
};

Input load_input(const std::string& source) {
  Input in;
  in.name = source;
  if (is_fixture_name(source)) {
    in.fixture = load_fixture(source);
    in.complex = in.fixture->complex;
    in.ideal = in.fixture->ideal;
    return in;
  }
  const Json doc = read_json_file(source);
  if (doc.contains("facets")) {
    in.complex = complex_from_json(doc);
    in.ideal = facet_ideal(*in.complex);
  } else if (doc.contains("generators")) {
    in.ideal = ideal_from_json(doc);
  } else {
    throw InvalidArgument("'" + source + "' holds neither \"facets\" nor \"generators\"");
  }
  return in;
}

const SimplicialComplex& require_complex(const Input& in) {
  if (!in.complex) throw InvalidArgument("'" + in.name + "' is an ideal; this command needs a complex");
  return *in.complex;
}

std::pair<std::size_t, std::size_t> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t k = std::stoul(text);
      return {k, k};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("--k-range expects K or A..B, got '" + text + "'");
  }
}

WhiskerMode parse_mode(const std::string& text) {
  if (text == "all" || text == "all-vertices") return WhiskerMode::kAllVertices;
  if (text == "block") return WhiskerMode::kBlock;
  throw InvalidArgument("--mode expects all or block, got '" + text + "'");
}

Json analysis_json(const SimplicialComplex& c) {
  const auto& labels = c.labels();
  auto names = [&](std::span<const VertexSet> sets) {
    Json out = Json::array();
    for (VertexSet s : sets) out.push_back(labels.names_of(s));
    return out;
  };
  Json doc;
  doc["complex"] = complex_to_json(c);
  const auto forest = is_forest(c);
  doc["is_forest"] = forest.has_value();
  doc["good_leaf_order"] = forest ? names(forest->order) : Json(nullptr);
  const auto all_leaves = leaves(c);
  std::vector<VertexSet> good, special, not_special;
  for (VertexSet l : all_leaves) {
    if (is_good_leaf(c, l)) good.push_back(l);
    (is_special_leaf(c, l) ? special : not_special).push_back(l);
  }
  doc["leaves"] = names(all_leaves);
  doc["good_leaves"] = names(good);
  doc["special_leaves"] = names(special);
  doc["leaves_not_special"] = names(not_special);
  const auto cert = is_grafted(c);
  doc["is_grafted"] = cert.has_value();
  if (cert) doc["grafting"] = {{"grafted_leaves", names(cert->grafted_leaves)}, {"base", names(cert->base_facets)}};
  doc["is_cm_forest"] = is_cm_forest(c);
  doc["components"] = connected_components(c).size();
  doc["matching_number"] = matching_number(c);
  return doc;
}

void print_analysis(const SimplicialComplex& c, std::ostream& out) {
  const auto& labels = c.labels();
  out << "complex: " << c.format() << "\n";
  out << "facets: " << c.facet_count() << ", vertices: " << c.vertices().size()
      << ", components: " << connected_components(c).size() << "\n";
  const auto forest = is_forest(c);
  out << "forest: " << (forest ? "yes" : "no") << "\n";
  const auto all_leaves = leaves(c);
  std::vector<VertexSet> good, special, not_special;
  for (VertexSet l : all_leaves) {
    if (is_good_leaf(c, l)) good.push_back(l);
    (is_special_leaf(c, l) ? special : not_special).push_back(l);
  }
  out << "leaves: " << format_sets(labels, all_leaves) << "\n";
  out << "good leaves: " << format_sets(labels, good) << "\n";
  out << "special leaves: " << format_sets(labels, special) << "\n";
  out << "leaves not special: " << format_sets(labels, not_special) << "\n";
  const auto cert = is_grafted(c);
  if (cert) {
    out << "grafted: yes; grafted leaves " << format_sets(labels, cert->grafted_leaves) << "; base "
        << format_sets(labels, cert->base_facets) << "\n";
  } else {
    out << "grafted: no\n";
  }
  out << "cohen-macaulay forest: " << (is_cm_forest(c) ? "yes" : "no") << "\n";
  out << "matching number: " << matching_number(c) << "\n";
}

void print_depth(const DepthReport& r, std::ostream& out) {
  out << "variables: " << r.n << "\n";
  out << "field: " << (r.field_char == 0 ? std::string("Q") : "GF(" + std::to_string(r.field_char) + ")") << "\n";
  out << "height: " << r.height << "\n";
  out << "krull dim: " << r.krull_dim << "\n";
  out << "proj dim: " << r.proj_dim << "\n";
  out << "depth: " << r.depth << "\n";
  out << "cohen-macaulay: " << (r.is_cm ? "yes" : "no") << "\n";
  if (r.reisner_cm) out << "reisner: " << (*r.reisner_cm ? "yes" : "no") << "\n";
  out << "unmixed: " << (r.is_unmixed ? "yes" : "no") << "\n";
  out << "minimal covers: " << format_sets(r.variables, r.min_covers) << "\n";
  for (const auto& e : r.betti) {
    out << "beta_{" << e.index << "," << r.variables.format(e.multidegree) << "} = " << e.rank << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-free powers of facet ideals of simplicial forests"};
  app.require_subcommand(1);

  bool json = false;
  std::string field_text = "q";
  unsigned threads = 1;

  std::string source;
  auto* analyze = app.add_subcommand("analyze", "Leaves, special leaves, forest and grafting structure");
  analyze->add_option("input", source, "Complex JSON file or fixture name")->required();
  analyze->add_flag("--json", json);

  std::size_t k = 1;
  auto* power = app.add_subcommand("power", "Emit the k-th square-free power as ideal JSON");
  power->add_option("input", source, "Complex or ideal JSON file, or fixture name")->required();
  power->add_option("--k", k, "Exponent")->required()->check(CLI::PositiveNumber);

  bool betti = false;
  bool check_fields = false;
  std::optional<std::size_t> depth_k;
  auto* depth = app.add_subcommand("depth", "Dimension, depth and Cohen-Macaulayness via Hochster's formula");
  depth->add_option("input", source, "Complex or ideal JSON file, or fixture name")->required();
  depth->add_option("--field", field_text, "q, or a prime below 256");
  depth->add_flag("--betti", betti, "Full graded Betti numbers");
  depth->add_option("--k", depth_k, "Use the k-th square-free power")->check(CLI::PositiveNumber);
  depth->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  depth->add_flag("--check-fields", check_fields, "Warn when Q, GF(2) and GF(3) disagree");
  depth->add_flag("--json", json);

  std::optional<std::uint64_t> seed;
  std::string k_range_text;
  GeneratorParams params;
  std::string mode_text = "all";
  auto add_generator_options = [&](CLI::App* sub) {
    sub->add_option("--base", params.base_facet_count, "Base facet count");
    sub->add_option("--max-size", params.max_facet_size, "Maximum base facet size");
    sub->add_option("--budget", params.vertex_budget, "Vertex budget");
    sub->add_option("--mode", mode_text, "Grafting mode: all or block");
  };
  auto* verify = app.add_subcommand("verify", "Replay the theorem battery on a fixture, file or random forest");
  verify->add_option("input", source, "Fixture name or complex JSON file");
  verify->add_option("--seed", seed, "Random grafted forest seed");
  verify->add_option("--k-range", k_range_text, "K or A..B");
  verify->add_option("--field", field_text, "q, or a prime below 256");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json);
  add_generator_options(verify);

  std::uint64_t random_seed = 1;
  auto* random = app.add_subcommand("random", "Emit a random grafted forest as complex JSON");
  random->add_option("--seed", random_seed, "Seed");
  add_generator_options(random);

  std::vector<std::string> argv_store{"sqfree"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    EngineOptions engine;
    engine.field = Field::parse(field_text);
    engine.threads = threads;

    if (analyze->parsed()) {
      const Input in = load_input(source);
      const auto& c = require_complex(in);
      if (json) out << analysis_json(c).dump(2) << "\n";
      else print_analysis(c, out);
      return kOk;
    }
    if (power->parsed()) {
      const Input in = load_input(source);
      out << ideal_to_json(squarefree_power(in.ideal, k)).dump(2) << "\n";
      return kOk;
    }
    if (depth->parsed()) {
      const Input in = load_input(source);
      engine.betti = betti;
      const MonomialIdeal ideal = depth_k ? squarefree_power(in.ideal, *depth_k) : in.ideal;
      if (ideal.variable_count() > engine.vertex_cap) {
        throw BudgetExceeded(std::to_string(ideal.variable_count()) + " variables exceed the engine cap of " +
                             std::to_string(engine.vertex_cap));
      }
      if (!json) out << "restrictions to examine: " << hochster_restrictions(ideal, engine.enumeration) << "\n";
      const DepthReport report = depth_report(ideal, engine);
      if (check_fields) {
        for (unsigned p : {0U, 2U, 3U}) {
          EngineOptions other = engine;
          other.field = p == 0 ? Field::rationals() : Field::prime(p);
          other.betti = false;
          const auto d = depth_report(ideal, other).depth;
          if (d != report.depth) {
            err << "warning: depth over " << other.field.name() << " is " << d << ", over " << engine.field.name()
                << " it is " << report.depth << "\n";
          }
        }
      }
      if (json) out << depth_report_to_json(report).dump(2) << "\n";
      else print_depth(report, out);
      return kOk;
    }
    if (verify->parsed()) {
      VerifyOptions options;
      options.engine = engine;
      if (!k_range_text.empty()) options.k_range = parse_k_range(k_range_text);
      VerificationReport report;
      if (seed) {
        if (!source.empty()) throw InvalidArgument("give either an input or --seed, not both");
        params.seed = *seed;
        params.whisker_mode = parse_mode(mode_text);
        const auto forest = random_grafted_forest(params);
        report = verify_all("seed " + std::to_string(*seed), forest.complex, options);
      } else if (source.empty()) {
        throw InvalidArgument("verify needs a fixture, a file or --seed");
      } else {
        const Input in = load_input(source);
        report = in.fixture ? verify_fixture(*in.fixture, options) : verify_all(source, require_complex(in), options);
      }
      if (json) out << report.to_json().dump(2) << "\n";
      else out << report.summary();
      return report.passed() ? kOk : kVerificationFailed;
    }
    if (random->parsed()) {
      params.seed = random_seed;
      params.whisker_mode = parse_mode(mode_text);
      out << complex_to_json(random_grafted_forest(params).complex).dump(2) << "\n";
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace sqfree::cli
