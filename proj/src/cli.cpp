#include "circord/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace circord {

namespace {

Json arrangement_json(const Arrangement& a) { return Json(a); }

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

Json factors_json(const std::vector<Integer>& f) {
  Json out = Json::array();
  for (const Integer& x : f) out.push_back(integer_to_json(x));
  return out;
}

void require_n(long long n, const char* what) {
  if (n < 2) throw InvalidInput(std::string(what) + " must be >= 2, got " + std::to_string(n));
}

}  // namespace

CommandResult cmd_enumerate(const FiniteGroup& g, int max_order) {
  const std::vector<Arrangement> orders = enumerate_circular_orders(g, max_order);
  CommandResult r;
  Json list = Json::array();
  std::optional<BarComplex> complex;
  if (g.order() <= kDefaultCohomologyBound) complex.emplace(g);
  for (const Arrangement& a : orders) {
    const InhomCircularOrder f = arrangement_to_inhom(g, a);
    Json item{{"arrangement", arrangement_json(a)}, {"minimal_generator", minimal_generator(g, f)}};
    item["class"] = complex ? class_to_json(class_of(*complex, f.cochain())) : Json(nullptr);
    list.push_back(item);
  }
  r.json = Json{{"group", g.name()}, {"order", g.order()}, {"count", orders.size()}, {"orderings", list}};
  if (complex) r.json["h2"] = Json{{"invariant_factors", factors_json(complex->integral_factors())}};
  std::ostringstream s;
  s << g.name() << ": " << orders.size() << " circular ordering" << (orders.size() == 1 ? "" : "s");
  for (const Json& item : list) {
    s << "\n  " << item["arrangement"].dump() << "  minimal generator " << item["minimal_generator"].get<int>();
    if (!item["class"].is_null()) s << "  class " << item["class"]["coordinates"].dump();
  }
  r.summary = s.str();
  return r;
}

CommandResult cmd_product_co(const FiniteGroup& g, long long n, int max_order) {
  require_n(n, "n");
  const std::vector<Arrangement> orders = enumerate_circular_orders(g, max_order);
  CommandResult r;
  r.json = Json{{"group", g.name()}, {"n", n}};
  bool yes = false;
  if (!orders.empty()) {
    const BarComplex complex(g);
    for (const Arrangement& a : orders) {
      const InhomCircularOrder f = arrangement_to_inhom(g, a);
      const DivisibilityResult d = n_divisibility(complex, f.cochain(), n);
      if (!d.divisible) continue;
      yes = true;
      r.json["witness"] = Json{{"ordering", arrangement_json(a)},
                               {"class", class_to_json(class_of(complex, f.cochain()))},
                               {"mu_class", class_to_json(*d.mu_class)}};
      break;
    }
  }
  r.json["circularly_orderable"] = yes;
  r.json["verdict"] = yes ? "yes" : "no";
  std::string check = "no direct cross-check (order above " + std::to_string(kProductSearchLimit) + ")";
  if (n * g.order() <= kProductSearchLimit) {
    const ProductGroup p = direct_product(g, cyclic_group(static_cast<int>(n)));
    const bool direct = !enumerate_circular_orders(p.group, kProductSearchLimit).empty();
    r.json["direct_search"] = Json{{"performed", true}, {"circularly_orderable", direct}, {"agrees", direct == yes}};
    if (direct != yes) r.status = kExitCheckFailed;
    check = direct == yes ? "direct search agrees" : "DIRECT SEARCH DISAGREES";
  } else {
    r.json["direct_search"] = Json{{"performed", false}};
  }
  r.summary = g.name() + " x Z/" + std::to_string(n) + ": " + (yes ? "circularly orderable" : "not circularly orderable") +
              " (" + check + ")";
  return r;
}

CommandResult cmd_obstruction(const FiniteGroup& g, long long max_n) {
  require_n(max_n, "max-n");
  const ObstructionSpectrum s = spectrum_finite(g);
  CommandResult r;
  Json table = Json::object();
  for (long long n = 2; n <= max_n; ++n) table[std::to_string(n)] = s.contains(n);
  r.json = Json{{"group", g.name()}, {"spectrum", spectrum_to_json(s)}, {"membership", table}};
  r.summary = "Ob(" + g.name() + ") = " + s.describe() + "; minimal elements " + join(s.minimal());
  return r;
}

CommandResult cmd_obstruction_torsion(const std::vector<long long>& orders, long long max_n) {
  require_n(max_n, "max-n");
  const ObstructionSpectrum s = spectrum_torsion_part(TorsionProfile{orders});
  CommandResult r;
  Json table = Json::object();
  for (long long n = 2; n <= max_n; ++n) table[std::to_string(n)] = s.contains(n);
  r.json = Json{{"torsion_orders", orders}, {"spectrum", spectrum_to_json(s)}, {"membership", table}};
  r.summary = "Ob_T = " + s.describe() + "; minimal elements " + join(s.minimal());
  return r;
}

CommandResult cmd_obstruction_exponent(long long e, bool not_left_orderable, long long max_n) {
  require_n(e, "exponent");
  require_n(max_n, "max-n");
  CommandResult r;
  Json table = Json::object();
  for (long long n = 2; n <= max_n; ++n) {
    const ExponentFacts f = exponent_facts(e, n, !not_left_orderable);
    table[std::to_string(n)] = Json{{"verdict", to_string(f.verdict)},
                                    {"member", f.member ? Json(*f.member) : Json(nullptr)}};
  }
  r.json = Json{{"exponent", e}, {"left_orderable", !not_left_orderable}, {"facts", table}};
  const ExponentFacts any = exponent_facts(e, e, !not_left_orderable);
  if (any.verdict == ExponentVerdict::SpectrumIsMultiples) {
    r.json["spectrum"] = spectrum_to_json(ObstructionSpectrum::generated_by({e}));
    r.summary = "Ob = " + std::to_string(e) + "N";
  } else {
    r.summary = "exponent " + std::to_string(e) + ": gcd(n, " + std::to_string(e) + ") = 1 excludes n" +
                (not_left_orderable ? "; " + std::to_string(e) + " is in Ob" : "");
  }
  return r;
}

CommandResult cmd_promislow(const PromislowDemoOptions& options) {
  const std::vector<CheckResult> checks = promislow_demo(options);
  CommandResult r;
  Json list = Json::array();
  std::ostringstream s;
  bool all = true;
  for (const CheckResult& c : checks) {
    all = all && c.passed;
    Json item{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) item["first_failure"] = c.detail;
    list.push_back(item);
    s << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)"
      << (c.passed ? "" : ": " + c.detail) << "\n";
  }
  r.json = Json{{"seed", options.seed},
                {"sample_radius", options.sample_radius},
                {"samples", options.samples},
                {"generators", {{"a", prom_to_json(prom_a())}, {"b", prom_to_json(prom_b())}}},
                {"checks", list},
                {"passed", all}};
  s << (all ? "all checks passed" : "some checks FAILED") << " (seed " << options.seed << ")";
  r.summary = s.str();
  r.status = all ? kExitOk : kExitCheckFailed;
  return r;
}

CommandResult cmd_extension(const Json& descriptor) {
  const CentralExtension e = extension_from_json(descriptor);
  CommandResult r;
  r.json = extension_to_json(e);
  r.json["identity"] = e.format(e.identity());
  r.json["is_ordering"] = e.is_ordering();
  std::ostringstream s;
  if (e.coefficients().is_integral()) {
    // Associativity on the coefficient box |a| <= 1, exhaustively.
    const int m = e.base().order();
    std::vector<ExtElement> box;
    for (int a = -1; a <= 1; ++a)
      for (int g = 0; g < m; ++g) box.push_back(e.make(a, g));
    bool assoc = true;
    for (const ExtElement& x : box)
      for (const ExtElement& y : box)
        for (const ExtElement& z : box) assoc = assoc && e.mul(e.mul(x, y), z) == e.mul(x, e.mul(y, z));
    r.json["associative_on_box"] = assoc;
    if (!assoc) r.status = kExitCheckFailed;
    s << "Z-extension of " << e.base().name() << (assoc ? "" : " (ASSOCIATIVITY FAILED)");
    if (e.is_ordering()) {
      const CofinalityReport c = is_cofinal_central(e, e.iota(1), 10);
      r.json["cofinality"] = Json{{"z", e.format(e.iota(1))},
                                  {"probe_bound", 10},
                                  {"cofinal_central", c.cofinal_central()},
                                  {"max_witness", c.max_witness}};
      if (!c.cofinal_central()) r.status = kExitCheckFailed;
      s << "; (1, id) cofinal and central on probes |a| <= 10: " << (c.cofinal_central() ? "yes" : "NO");
    }
  } else if (e.is_materialized()) {
    const FiniteGroup& big = e.materialized();
    Json names = Json::array();
    for (int i = 0; i < big.order(); ++i) names.push_back(e.format(e.element_at(i)));
    r.json["order"] = big.order();
    r.json["elements"] = names;
    r.json["is_cyclic"] = is_cyclic(big);
    s << "Z/" << e.coefficients().modulus << "-extension of " << e.base().name() << ": order " << big.order()
      << (is_cyclic(big) ? ", cyclic" : "");
  } else {
    r.json["order"] = e.coefficients().modulus * e.base().order();
    s << "Z/" << e.coefficients().modulus << "-extension of " << e.base().name() << " (not materialized)";
  }
  r.summary = s.str();
  return r;
}

CommandResult cmd_validate(const Json& ordering) {
  CommandResult r;
  try {
    const ParsedOrdering p = ordering_from_json(ordering);
    r.json = Json{{"valid", true},
                  {"arrangement", inhom_to_arrangement(p.order)},
                  {"inhom", p.order.cochain().rows()}};
    if (is_cyclic(p.group)) r.json["minimal_generator"] = minimal_generator(p.group, p.order);
    r.summary = "valid circular ordering on " + p.group.name() + ", arrangement " + r.json["arrangement"].dump();
  } catch (const OrderViolation& v) {
    const Violation& x = v.violation();
    r.status = kExitCheckFailed;
    r.json = Json{{"valid", false}, {"failure", to_string(x.kind)}, {"witness", x.witness}, {"detail", x.detail}};
    r.summary = "invalid: " + x.describe();
  }
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circular orderings, central extensions and obstruction spectra"};
  app.require_subcommand(1);
  bool json = false;
  std::string group = "trivial", file;
  long long n = 2, max_n = 12, exponent = 0, samples = 100000;
  int max_order = kDefaultEnumerationBound, radius = 5;
  std::uint64_t seed = kDefaultSeed;
  bool not_lo = false;
  std::vector<long long> torsion;

  auto add_common = [&](CLI::App* c) { c->add_flag("--json", json, "Print the JSON payload"); };
  auto add_group = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--group", group, "Group JSON file or a name such as Z/4 or Z/2xZ/2");
    if (required) o->required();
    c->add_option("--max-order", max_order, "Bound on the group order for enumeration");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List all circular orderings with their classes");
  add_group(enumerate, true);
  add_common(enumerate);

  auto* product = app.add_subcommand("product-co", "Decide whether G x Z/n is circularly orderable");
  add_group(product, true);
  product->add_option("--n", n, "The cyclic factor Z/n")->required();
  add_common(product);

  auto* obstruction = app.add_subcommand("obstruction", "Obstruction spectrum report");
  obstruction->add_option("--group", group, "Group JSON file or name");
  obstruction->add_option("--torsion-orders", torsion, "Torsion element orders")->delimiter(',');
  obstruction->add_option("--exponent", exponent, "Exponent of H^2(G; Z)");
  obstruction->add_flag("--not-lo", not_lo, "The group is not left orderable");
  obstruction->add_option("--max-n", max_n, "Largest n in the membership table");
  add_common(obstruction);

  auto* promislow = app.add_subcommand("promislow", "Run the Promislow group checks");
  promislow->add_option("mode", file, "Optional mode (demo)");
  promislow->add_option("--seed", seed, "Seed for the random quadruples");
  promislow->add_option("--radius", radius, "Radius of the sampling ball (at most 8)");
  promislow->add_option("--samples", samples, "Number of random quadruples");
  add_common(promislow);

  auto* extension = app.add_subcommand("extension", "Build a central extension from a descriptor");
  extension->add_option("--descriptor", file, "Extension descriptor JSON file")->required();
  add_common(extension);

  auto* validate = app.add_subcommand("validate", "Validate an ordering file");
  validate->add_option("--ordering", file, "Ordering JSON file")->required();
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    CommandResult r;
    if (*enumerate) {
      r = cmd_enumerate(load_group(group), max_order);
    } else if (*product) {
      r = cmd_product_co(load_group(group), n, max_order);
    } else if (*obstruction) {
      const int modes = static_cast<int>(obstruction->count("--group") > 0) +
                        static_cast<int>(!torsion.empty()) + static_cast<int>(exponent != 0);
      if (modes != 1) throw InvalidInput("obstruction: give exactly one of --group, --torsion-orders, --exponent");
      if (!torsion.empty())
        r = cmd_obstruction_torsion(torsion, max_n);
      else if (exponent != 0)
        r = cmd_obstruction_exponent(exponent, not_lo, max_n);
      else
        r = cmd_obstruction(load_group(group), max_n);
    } else if (*promislow) {
      if (!file.empty() && file != "demo") throw InvalidInput("promislow: unknown mode '" + file + "'");
      PromislowDemoOptions o;
      o.seed = seed;
      o.sample_radius = radius;
      o.samples = samples;
      r = cmd_promislow(o);
    } else if (*extension) {
      r = cmd_extension(read_json_file(file));
    } else if (*validate) {
      r = cmd_validate(read_json_file(file));
    }
    out << (json ? r.json.dump(2) : r.summary) << "\n";
    return r.status;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kExitBoundExceeded;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace circord
