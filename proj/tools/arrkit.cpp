// arrkit command-line front end. Every subcommand prints one JSON document
// on stdout. Exit codes: 0 success, 1 negative verdict (report still
// printed), 2 error, 3 resource cap hit (partial report printed).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "arrkit/accuracy/accuracy.hpp"
#include "arrkit/deformations/deformations.hpp"
#include "arrkit/error.hpp"
#include "arrkit/graphic/graph.hpp"
#include "arrkit/intermediate/intermediate.hpp"
#include "arrkit/io/fixtures.hpp"
#include "arrkit/io/forms.hpp"
#include "arrkit/io/json_io.hpp"
#include "arrkit/matfree/mat.hpp"
#include "arrkit/rootsys/root_system.hpp"

using namespace arrkit;

namespace {

enum Exit { kOk = 0, kNegative = 1, kError = 2, kCap = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Json parse_inline_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

int emit(const Json& j, int code = kOk) {
  std::cout << dump(j);
  return code;
}

struct Caps {
  std::size_t max_flats = 2'000'000;
  std::optional<std::size_t> max_rank;
  unsigned threads = 1;

  LatticeOptions lattice() const {
    LatticeOptions o;
    o.max_flats = max_flats;
    o.max_rank = max_rank;
    o.threads = threads;
    return o;
  }
};

RootSystem root_system(const std::string& type) { return RootSystem(RootSystemType::parse(type)); }

std::optional<PaperGraph> graph_fixture(const std::string& name) {
  if (name == "D") return std::nullopt;
  return parse_paper_graph(name);
}

// Where an arrangement comes from: exactly one of the sources.
struct ArrInput {
  std::string file, forms, forms_file, type, fixture;
  std::optional<std::size_t> dim;
  int cyclotomic = 0;

  void add(CLI::App* c) {
    c->add_option("--file", file, "arrangement JSON file");
    c->add_option("--forms", forms, "linear forms, ';'-separated");
    c->add_option("--forms-file", forms_file, "file with linear forms");
    c->add_option("--type", type, "Weyl arrangement of this type, e.g. B3");
    c->add_option("--fixture", fixture, "built-in fixture: D, G or G_prime");
    c->add_option("--dim", dim, "ambient dimension for --forms");
    c->add_option("--cyclotomic", cyclotomic, "parse forms over Q(zeta_r)");
  }

  Arrangement load() const {
    const int given = !file.empty() + !forms.empty() + !forms_file.empty() + !type.empty() + !fixture.empty();
    if (given != 1) throw InvalidInput("give exactly one of --file, --forms, --forms-file, --type, --fixture");
    if (!file.empty()) {
      const Json j = read_json(file);
      return arrangement_from_json(j.contains("arrangement") ? j.at("arrangement") : j);
    }
    const Field f = cyclotomic > 0 ? Field::cyclotomic(cyclotomic) : Field::rational();
    if (!forms.empty()) return parsed(forms, f);
    if (!forms_file.empty()) return parsed(read_file(forms_file), f);
    if (!type.empty()) return weyl_arrangement(root_system(type));
    if (auto g = graph_fixture(fixture)) return graphic_arrangement(paper_fixture(*g));
    return parse_linear_forms(arrangement_d_polynomial()).arrangement;
  }

  // Exponents that come with the source, when there is an obvious choice.
  std::optional<Exponents> natural_exponents() const {
    if (fixture.empty()) return std::nullopt;
    if (auto g = graph_fixture(fixture)) {
      const Graph gr = paper_fixture(*g);
      return exponents_from_elimination(gr, *perfect_elimination_order(gr));
    }
    return Exponents{1, 5, 5, 5, 5};
  }

 private:
  Arrangement parsed(const std::string& text, const Field& f) const {
    auto p = parse_linear_forms(text, dim, f);
    for (const auto& w : p.warnings) std::cerr << "warning: " << w << "\n";
    return std::move(p.arrangement);
  }
};

Exponents parse_exponents(const std::string& s) {
  Exponents e;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      e.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad exponent list '" + s + "'");
    }
  }
  return e;
}

Exponents exponents_for(const Arrangement& a, const ArrInput& in, const std::string& given, const Caps& caps) {
  if (!given.empty()) return parse_exponents(given);
  if (auto e = in.natural_exponents()) return *e;
  if (auto r = characteristic_polynomial(a, caps.lattice()).nonnegative_integer_roots()) return *r;
  throw InvalidInput("chi does not split over the nonnegative integers; pass --exponents");
}

Flat flat_from_text(const Arrangement& a, const std::string& text) {
  const auto forms = parse_linear_forms(text, a.dim(), a.field()).arrangement.normals();
  return make_flat(a, forms);
}

Ideal load_ideal(const RootSystem& rs, const std::string& file, const std::string& generators, bool full) {
  if (full + !file.empty() + !generators.empty() > 1) throw InvalidInput("give at most one of --ideal, --generators, --full");
  if (!file.empty()) return ideal_from_json(rs, read_json(file));
  if (!generators.empty()) {
    Json j = {{"generators", parse_inline_json(generators, "--generators")}};
    return ideal_from_json(rs, j);
  }
  return full ? full_ideal(rs) : Ideal{};
}

Json witnesses_json(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws)
    out.push_back({{"block", w.block},
                   {"q", w.q},
                   {"hyperplanes", w.hyperplanes},
                   {"flat", flat_to_json(w.flat)},
                   {"exponents", w.exponents}});
  return out;
}

int report_exit(const AccuracyReport& r) {
  switch (r.verdict) {
    case Verdict::Accurate: return kOk;
    case Verdict::NotAccurate: return kNegative;
    default: return kCap;
  }
}

AccuracyMode parse_mode(const std::string& m) {
  if (m == "exact") return AccuracyMode::Exact;
  if (m == "almost") return AccuracyMode::Almost;
  throw InvalidInput("mode must be exact or almost");
}

AccuracyStrategy parse_strategy(const std::string& s) {
  if (s == "witness") return AccuracyStrategy::WitnessFirst;
  if (s == "exhaustive") return AccuracyStrategy::Exhaustive;
  throw InvalidInput("strategy must be witness or exhaustive");
}

Graph load_graph(const std::string& file, const std::string& fixture) {
  if (file.empty() == fixture.empty()) throw InvalidInput("give exactly one of --file, --fixture");
  if (!file.empty()) return graph_from_json(read_json(file));
  return paper_fixture(parse_paper_graph(fixture));
}

Json label_json(const IntermediateLabel& x) { return {{"l", x.l}, {"r", x.r}, {"k", x.k}, {"name", x.to_string()}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arrkit: exact computations with hyperplane arrangements"};
  app.require_subcommand(1);
  Caps caps;
  app.add_option("--max-flats", caps.max_flats, "cap on intersection-lattice size")->capture_default_str();
  app.add_option("--max-rank", caps.max_rank, "build the lattice only up to this rank");
  app.add_option("--threads", caps.threads, "worker threads for lattice builds")->capture_default_str();

  std::function<int()> action;
  auto on = [&](CLI::App* c, std::function<int()> f) { c->callback([&action, f] { action = f; }); };

  // arr
  auto* arr = app.add_subcommand("arr", "arrangement basics")->require_subcommand(1);
  ArrInput arr_in;
  std::string flat_text;
  {
    auto* c = arr->add_subcommand("charpoly", "characteristic polynomial");
    arr_in.add(c);
    on(c, [&] {
      const auto a = arr_in.load();
      const auto chi = characteristic_polynomial(a, caps.lattice());
      const auto roots = chi.nonnegative_integer_roots();
      return emit({{"size", a.size()},
                   {"dim", a.dim()},
                   {"rank", a.rank()},
                   {"charpoly", poly_to_json(chi)},
                   {"roots", roots ? Json(*roots) : Json(nullptr)}});
    });
  }
  {
    auto* c = arr->add_subcommand("lattice", "intersection lattice summary");
    arr_in.add(c);
    on(c, [&] {
      const auto a = arr_in.load();
      const auto L = Lattice::build(a, caps.lattice());
      Json levels = Json::array();
      for (std::size_t r = 0; r <= L.top_rank(); ++r) {
        Json flats = Json::array();
        for (auto x : L.level(r)) {
          Json hs = Json::array();
          for (std::size_t h = 0; h < a.size(); ++h)
            if (L.contains(x)[h]) hs.push_back(h);
          flats.push_back({{"id", x}, {"hyperplanes", hs}, {"mobius", L.mobius(x)}});
        }
        levels.push_back({{"rank", r}, {"flats", flats}});
      }
      return emit({{"size", L.size()},
                   {"complete", L.complete()},
                   {"levels", levels},
                   {"charpoly", L.complete() ? poly_to_json(L.characteristic_polynomial()) : Json(nullptr)}});
    });
  }
  for (const char* name : {"restrict", "localize"}) {
    auto* c = arr->add_subcommand(name, std::string(name) + " at a flat");
    arr_in.add(c);
    c->add_option("--flat", flat_text, "forms cutting out the flat, ';'-separated")->required();
    const bool is_restrict = std::string(name) == "restrict";
    on(c, [&, is_restrict] {
      const auto a = arr_in.load();
      const auto x = flat_from_text(a, flat_text);
      return emit(arrangement_to_json(is_restrict ? restriction(a, x) : localization(a, x)));
    });
  }

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl arrangements")->require_subcommand(1);
  std::string type;
  {
    auto* c = weyl->add_subcommand("build", "Weyl arrangement of a type");
    c->add_option("--type", type, "A3, B4, E6, ...")->required();
    on(c, [&] { return emit(arrangement_to_json(weyl_arrangement(root_system(type)))); });
  }

  // ideal
  auto* ideal = app.add_subcommand("ideal", "ideals of the root poset")->require_subcommand(1);
  std::string ideal_file, generators;
  bool full = false;
  std::size_t max_ideals = 1'000'000;
  {
    auto* c = ideal->add_subcommand("enumerate", "all ideals of a type");
    c->add_option("--type", type)->required();
    c->add_option("--max-ideals", max_ideals)->capture_default_str();
    on(c, [&] {
      const auto rs = root_system(type);
      Json list = Json::array();
      for (const auto& I : enumerate_ideals(rs, max_ideals)) list.push_back(ideal_to_json(rs, I));
      return emit({{"type", rs.type().name()}, {"count", list.size()}, {"ideals", list}});
    });
  }
  {
    auto* c = ideal->add_subcommand("arrangement", "ideal arrangement {ker b : b in I}");
    c->add_option("--type", type)->required();
    c->add_option("--ideal", ideal_file, "ideal JSON file");
    c->add_option("--generators", generators, "JSON list of simple-coefficient vectors");
    c->add_flag("--full", full, "all positive roots");
    on(c, [&] {
      const auto rs = root_system(type);
      return emit(arrangement_to_json(ideal_arrangement(rs, load_ideal(rs, ideal_file, generators, full))));
    });
  }

  // mat
  auto* mat = app.add_subcommand("mat", "multiple addition theorem")->require_subcommand(1);
  ArrInput mat_in;
  std::string partition_text;
  bool use_hint = false;
  PartitionSearchOptions search_opts;
  // Certificate from --type (+ ideal; height partition) or from an
  // arrangement and an explicit --partition.
  auto mat_certificate = [&] {
    if (!mat_in.type.empty() && partition_text.empty()) {
      const auto rs = root_system(mat_in.type);
      const bool any_ideal = !ideal_file.empty() || !generators.empty();
      const auto I = load_ideal(rs, ideal_file, generators, !any_ideal);
      return certify_partition(ideal_arrangement(rs, I), root_height_partition(rs, I));
    }
    if (partition_text.empty()) throw InvalidInput("--partition is required unless --type is given");
    const auto blocks = parse_inline_json(partition_text, "--partition").get<std::vector<std::vector<std::size_t>>>();
    return certify_partition(mat_in.load(), blocks);
  };
  for (const char* name : {"certify", "witnesses"}) {
    auto* c = mat->add_subcommand(name, std::string(name) == "certify" ? "check a MAT partition"
                                                                        : "restriction witnesses from a MAT partition");
    mat_in.add(c);
    c->add_option("--ideal", ideal_file, "ideal JSON file (with --type)");
    c->add_option("--generators", generators, "ideal generators (with --type)");
    c->add_option("--partition", partition_text, "JSON blocks of hyperplane indices");
    const bool certify = std::string(name) == "certify";
    on(c, [&, certify] {
      const auto cert = mat_certificate();
      if (certify) return emit(certificate_to_json(cert), cert.valid() ? kOk : kNegative);
      if (!cert.valid()) return emit({{"certificate", certificate_to_json(cert)}, {"witnesses", nullptr}}, kNegative);
      return emit({{"exponents", cert.exponents}, {"witnesses", witnesses_json(accuracy_witnesses(cert, caps.lattice()))}});
    });
  }
  {
    auto* c = mat->add_subcommand("search", "search for a MAT partition");
    mat_in.add(c);
    c->add_option("--partition", partition_text, "try only this partition");
    c->add_option("--max-hyperplanes", search_opts.max_hyperplanes)->capture_default_str();
    c->add_option("--max-nodes", search_opts.max_nodes)->capture_default_str();
    c->add_flag("--hint-height", use_hint, "with --type, try the root-height partition only");
    on(c, [&] {
      search_opts.lattice = caps.lattice();
      std::optional<std::vector<std::vector<std::size_t>>> hint;
      Arrangement a;
      if (use_hint) {
        if (mat_in.type.empty()) throw InvalidInput("--hint-height needs --type");
        const auto rs = root_system(mat_in.type);
        a = ideal_arrangement(rs, full_ideal(rs));
        hint = root_height_partition(rs, full_ideal(rs));
      } else {
        a = mat_in.load();
        if (!partition_text.empty())
          hint = parse_inline_json(partition_text, "--partition").get<std::vector<std::vector<std::size_t>>>();
      }
      const auto r = search_mat_partition(a, hint, search_opts);
      Json j = {{"found", r.partition.has_value()}, {"conclusive", r.conclusive}, {"reason", r.reason}, {"nodes", r.nodes}};
      if (r.partition) {
        j["partition"] = *r.partition;
        j["certificate"] = certificate_to_json(certify_partition(a, *r.partition));
        return emit(j);
      }
      return emit(j, r.conclusive ? kNegative : kCap);
    });
  }

  // accuracy
  auto* acc = app.add_subcommand("accuracy", "accuracy of free arrangements")->require_subcommand(1);
  ArrInput acc_in;
  std::string exps_text, mode = "exact", strategy = "witness";
  std::size_t scan_d = 0;
  {
    auto* c = acc->add_subcommand("check", "accuracy report");
    acc_in.add(c);
    c->add_option("--exponents", exps_text, "comma-separated; default: roots of chi");
    c->add_option("--mode", mode, "exact or almost")->capture_default_str();
    c->add_option("--strategy", strategy, "witness or exhaustive")->capture_default_str();
    on(c, [&] {
      const auto a = acc_in.load();
      AccuracyOptions o;
      o.mode = parse_mode(mode);
      o.strategy = parse_strategy(strategy);
      o.lattice = caps.lattice();
      if (!exps_text.empty()) o.provenance = "exponents given on the command line";
      else if (acc_in.natural_exponents()) o.provenance = "exponents of the fixture";
      else o.provenance = "exponents read from the roots of chi";
      const auto r = check_accuracy(a, exponents_for(a, acc_in, exps_text, caps), o);
      return emit(report_to_json(r), report_exit(r));
    });
  }
  {
    auto* c = acc->add_subcommand("scan", "all flats of dimension d with the prefix exponents");
    acc_in.add(c);
    c->add_option("--exponents", exps_text, "comma-separated; default: roots of chi");
    c->add_option("-d,--dimension", scan_d, "flat dimension")->required();
    on(c, [&] {
      const auto a = acc_in.load();
      const auto e = exponents_for(a, acc_in, exps_text, caps);
      Json flats = Json::array();
      for (const auto& x : scan_unique_witnesses(a, e, scan_d, caps.lattice())) flats.push_back(flat_to_json(x));
      const Exponents prefix(e.begin(), e.begin() + static_cast<long>(std::min(scan_d, e.size())));
      return emit({{"d", scan_d}, {"exponents", prefix}, {"count", flats.size()}, {"flats", flats}});
    });
  }

  // deform
  auto* deform = app.add_subcommand("deform", "Shi, Catalan and ideal-Shi deformations")->require_subcommand(1);
  int level = 1;
  bool catalan = false, minus_simples = false, with_cert = false;
  auto deform_ideal = [&](const RootSystem& rs) {
    if (catalan && !ideal_file.empty()) throw InvalidInput("--catalan and --ideal are exclusive");
    return catalan ? full_ideal(rs) : load_ideal(rs, ideal_file, generators, false);
  };
  auto deform_common = [&](CLI::App* c) {
    c->add_option("--type", type)->required();
    c->add_option("-k", level, "deformation level")->capture_default_str();
    c->add_option("--ideal", ideal_file, "ideal JSON file");
    c->add_option("--generators", generators, "ideal generators");
    c->add_flag("--catalan", catalan, "use all positive roots");
  };
  {
    auto* c = deform->add_subcommand("build", "coned deformation");
    deform_common(c);
    c->add_flag("--minus-simples", minus_simples, "Shi^k without the simple-root k-shifts");
    c->add_flag("--certify", with_cert, "also print the MAT certificate");
    on(c, [&] {
      const auto rs = root_system(type);
      if (minus_simples) {
        std::vector<std::size_t> all(rs.rank());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        const auto d = build_shi_minus(rs, level, all);
        return emit({{"arrangement", arrangement_to_json(d.arrangement)},
                     {"exponents", shi_minus_exponents(rs, level, rs.rank())}});
      }
      const auto I = deform_ideal(rs);
      const auto d = build_ideal_shi(rs, level, I);
      Json j = {{"arrangement", arrangement_to_json(d.arrangement)}, {"exponents", ideal_shi_exponents(rs, level, I)}};
      if (!with_cert) return emit(j);
      const auto cert = shi_pipeline_certificate(rs, level, I);
      j["certificate"] = certificate_to_json(cert);
      return emit(j, cert.valid() ? kOk : kNegative);
    });
  }
  {
    auto* c = deform->add_subcommand("certify", "MAT certificate from Shi^k minus the simple shifts");
    deform_common(c);
    on(c, [&] {
      const auto rs = root_system(type);
      const auto cert = shi_pipeline_certificate(rs, level, deform_ideal(rs));
      return emit(certificate_to_json(cert), cert.valid() ? kOk : kNegative);
    });
  }
  {
    auto* c = deform->add_subcommand("witnesses", "accuracy report from the certificate");
    deform_common(c);
    on(c, [&] {
      const auto rs = root_system(type);
      const auto r = shi_accuracy_witnesses(rs, level, deform_ideal(rs), caps.lattice());
      return emit(report_to_json(r), report_exit(r));
    });
  }

  // graph
  auto* graph = app.add_subcommand("graph", "graphic arrangements")->require_subcommand(1);
  std::string graph_file, graph_fix;
  auto graph_common = [&](CLI::App* c) {
    c->add_option("--file", graph_file, "graph JSON file");
    c->add_option("--fixture", graph_fix, "G or G_prime");
  };
  {
    auto* c = graph->add_subcommand("build", "graphic arrangement");
    graph_common(c);
    on(c, [&] { return emit(arrangement_to_json(graphic_arrangement(load_graph(graph_file, graph_fix)))); });
  }
  {
    auto* c = graph->add_subcommand("accuracy", "accuracy of a chordal graph's arrangement");
    graph_common(c);
    c->add_option("--mode", mode, "exact or almost")->capture_default_str();
    on(c, [&] {
      const auto g = load_graph(graph_file, graph_fix);
      const auto order = perfect_elimination_order(g);
      if (!order) throw InvalidInput("graph is not chordal, so its arrangement is not free");
      AccuracyOptions o;
      o.mode = parse_mode(mode);
      o.lattice = caps.lattice();
      o.provenance = "exponents from a perfect elimination order";
      const auto r = check_accuracy(graphic_arrangement(g), exponents_from_elimination(g, *order), o);
      Json j = report_to_json(r);
      j["elimination_order"] = *order;
      return emit(j, report_exit(r));
    });
  }
  {
    auto* c = graph->add_subcommand("chromatic", "chromatic polynomial");
    graph_common(c);
    on(c, [&] {
      const auto p = chromatic_polynomial(load_graph(graph_file, graph_fix));
      const auto roots = p.nonnegative_integer_roots();
      return emit({{"chromatic", poly_to_json(p)}, {"roots", roots ? Json(*roots) : Json(nullptr)}});
    });
  }
  {
    auto* c = graph->add_subcommand("fixture", "built-in graphs");
    c->add_option("--which", graph_fix, "G or G_prime")->required();
    on(c, [&] {
      const auto which = parse_paper_graph(graph_fix);
      const auto g = paper_fixture(which);
      Json j = graph_to_json(g);
      j["name"] = to_string(which);
      j["checksum"] = graph_checksum(g);
      return emit(j);
    });
  }

  // inter
  auto* inter = app.add_subcommand("inter", "intermediate arrangements A^k_l(r)")->require_subcommand(1);
  IntermediateLabel label;
  bool symbolic = false, bruteforce = false, both = false;
  {
    auto* c = inter->add_subcommand("check", "accuracy of A^k_l(r)");
    c->add_option("--l", label.l)->required();
    c->add_option("--r", label.r)->required();
    c->add_option("--k", label.k)->required();
    auto* s = c->add_flag("--symbolic", symbolic, "restriction-table recursion only");
    auto* b = c->add_flag("--bruteforce", bruteforce, "lattice computation only (l, r <= 4)");
    auto* o = c->add_flag("--both", both, "both, and compare");
    s->excludes(b)->excludes(o);
    b->excludes(o);
    on(c, [&] {
      label.validate();
      const bool small = label.l <= 4 && label.r <= 4;
      const bool do_sym = symbolic || both || (!bruteforce && !symbolic);
      const bool do_bf = bruteforce || both || (!symbolic && small);
      Json rows = Json::array();
      for (const auto& row : table2_restriction_types(label))
        rows.push_back({{"class", to_string(row.cls)}, {"result", label_json(row.result)}});
      Json j = {{"label", label_json(label)},
                {"exponents", intermediate_exponents(label)},
                {"hyperplanes", label.hyperplane_count()},
                {"restrictions", rows},
                {"closed_form", closed_form_accuracy(label) ? "accurate" : "not_accurate"}};
      Verdict v = Verdict::Inconclusive;
      if (do_sym) {
        v = symbolic_accuracy(label);
        j["symbolic"] = to_string(v);
      }
      if (do_bf) {
        const auto r = bruteforce_cross_check(label, caps.lattice());
        j["bruteforce"] = report_to_json(r);
        if (do_sym && r.verdict != Verdict::Inconclusive && r.verdict != v) {
          j["agree"] = false;
          return emit(j, kError);
        }
        if (!do_sym) v = r.verdict;
        if (do_sym) j["agree"] = r.verdict == v;
        if (r.verdict == Verdict::Inconclusive) return emit(j, kCap);
      }
      j["verdict"] = to_string(v);
      return emit(j, v == Verdict::Accurate ? kOk : kNegative);
    });
  }
  {
    auto* c = inter->add_subcommand("localization-fixture", "A^1_l(r) accurate, a localization not");
    c->add_option("--l", label.l)->required();
    c->add_option("--r", label.r)->required();
    on(c, [&] {
      const auto rep = localization_fixture_check(label.l, label.r, caps.lattice());
      return emit({{"whole", label_json(rep.whole)},
                   {"local", label_json(rep.local)},
                   {"localization_size", rep.localization_size},
                   {"isomorphic", rep.isomorphic},
                   {"whole_verdict", to_string(rep.whole_report.verdict)},
                   {"local_verdict", to_string(rep.local_report.verdict)},
                   {"local_failing_dimension", rep.local_report.failing_dimension()
                                                   ? Json(*rep.local_report.failing_dimension())
                                                   : Json(nullptr)},
                   {"reproduced", rep.holds()}},
                  rep.holds() ? kOk : kNegative);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    std::cerr << "arrkit: " << e.what() << "\n";
    return emit({{"error", "cap_exceeded"},
                 {"message", e.what()},
                 {"produced", e.produced()},
                 {"completed_rank", e.completed_rank()}},
                kCap);
  } catch (const Error& e) {
    std::cerr << "arrkit: " << e.what() << "\n";
    return kError;
  } catch (const Json::exception& e) {
    std::cerr << "arrkit: bad JSON: " << e.what() << "\n";
    return kError;
  }
}
