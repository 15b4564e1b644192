// planeval: Hilbert functions, Poincaré series and topology recovery for
// collections of plane valuations.
//
//   planeval compute model.json --box 7 --emit poincare,generalized --out dir
//   planeval reconstruct series.json --out dir
//   planeval roundtrip model.json --box 12
//   planeval oracle-verify model.json --box 6

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "planeval/jet_oracle.hpp"
#include "planeval/model_io.hpp"
#include "planeval/reconstruct.hpp"
#include "planeval/series.hpp"
#include "planeval/sweep.hpp"

using namespace planeval;
namespace fs = std::filesystem;

namespace {

int exit_code(Error::Kind k) {
  switch (k) {
    case Error::Kind::parse: return 2;
    case Error::Kind::invariant: return 3;
    case Error::Kind::oracle_mismatch: return 4;
    case Error::Kind::inconclusive: return 5;
    case Error::Kind::verification: return 6;
  }
  return 1;
}

struct JobConfig {
  std::string input;
  std::string box;
  std::string out = ".";
  std::string emit = "hilbert,poincare,generalized,semigroup-series,semigroup-set";
  std::string reference;
  int qprec = 0;
  bool oracle = false;
  bool corrupt = false;
  bool inject_mismatch = false;
  bool dot = true;
};

Box parse_box(const std::string& text, int r) {
  if (text.empty()) throw parse_error("--box: required");
  std::vector<int> bounds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int b = std::stoi(item, &used);
      if (used != item.size() || b <= 0) throw std::invalid_argument(item);
      bounds.push_back(b);
    } catch (const std::exception&) {
      throw parse_error("--box: expected positive integers, got '" + item + "'");
    }
  }
  if (bounds.size() == 1) bounds.assign(r, bounds[0]);
  if (static_cast<int>(bounds.size()) != r)
    throw parse_error("--box: " + std::to_string(bounds.size()) + " bounds for " + std::to_string(r) + " valuations");
  return Box(bounds);
}

CollectionModel load_model(const std::string& path) {
  return model_from_json(parse_json_text(read_text_file(path), path));
}

void emit(const JobConfig& cfg, const std::string& name, const Json& doc) {
  fs::create_directories(cfg.out);
  const auto path = (fs::path(cfg.out) / name).string();
  write_text_file_atomic(path, dump_json(doc));
  std::cout << "wrote " << path << "\n";
}

Json semigroup_set_json(const SparseSeries& support_source) {
  Json members = Json::array();
  for (const auto& v : support_source.support()) members.push_back(v);
  return Json{{"vars", support_source.r()}, {"box", support_source.box().upper()}, {"members", members}};
}

int cmd_compute(const JobConfig& cfg) {
  const auto model = load_model(cfg.input);
  const Box box = parse_box(cfg.box, model.r());
  std::set<std::string> wanted;
  {
    std::stringstream ss(cfg.emit);
    std::string item;
    while (std::getline(ss, item, ',')) {
      static const std::set<std::string> known{"hilbert", "poincare", "generalized", "semigroup-series",
                                               "semigroup-set"};
      if (!known.count(item)) throw parse_error("--emit: unknown series '" + item + "'");
      wanted.insert(item);
    }
  }
  auto h = hilbert_table(model, box.grown(1));
  if (cfg.inject_mismatch) h.values.back() += 1;
  const auto bundle = series_from_table(h, box);
  if (cfg.oracle) {
    const auto oh = oracle_hilbert_table(model, box.grown(1));
    for (std::size_t k = 0; k < oh.box.size(); ++k)
      if (oh.values[k] != h.values[k])
        throw Error(Error::Kind::oracle_mismatch, "h" + to_string(oh.box.point(k)) + ": engine " +
                                                      std::to_string(h.values[k]) + ", oracle " +
                                                      std::to_string(oh.values[k]));
    const auto ob = series_from_table(oh, box);
    if (!(ob.semigroup == bundle.semigroup)) throw Error(Error::Kind::oracle_mismatch, "fiber classes differ");
    std::cout << "oracle: " << oh.box.size() << " values of h and " << box.size() << " fiber classes agree\n";
  }
  if (wanted.count("hilbert")) emit(cfg, "hilbert.json", series_to_json(bundle.hilbert));
  if (wanted.count("poincare")) emit(cfg, "poincare.json", series_to_json(bundle.poincare));
  if (wanted.count("generalized")) emit(cfg, "generalized.json", series_to_json(bundle.generalized));
  if (wanted.count("semigroup-series")) emit(cfg, "semigroup_series.json", series_to_json(bundle.semigroup));
  if (wanted.count("semigroup-set")) emit(cfg, "semigroup_set.json", semigroup_set_json(bundle.semigroup));
  return 0;
}

int cmd_reconstruct(const JobConfig& cfg) {
  const auto series = series_from_json(parse_json_text(read_text_file(cfg.input), cfg.input));
  ReconstructionReport rep;
  switch (series.ring()) {
    case Ring::q: rep = reconstruct_from_generalized(series, cfg.qprec); break;
    case Ring::L: rep = reconstruct_from_semigroup_series(series); break;
    case Ring::integer: rep = reconstruct_from_hilbert(series); break;
  }
  if (!cfg.reference.empty()) rep.isomorphic_to_reference = is_isomorphic(rep.model, load_model(cfg.reference));
  emit(cfg, "report.json", rep.to_json());
  if (!rep.success) {
    std::cerr << "planeval: forward verification failed (" << rep.residual << " coefficients differ)\n";
    return 6;
  }
  emit(cfg, "model.json", model_to_json(rep.model));
  if (cfg.dot) {
    const auto path = (fs::path(cfg.out) / "model.dot").string();
    write_text_file_atomic(path, export_dot(rep.model));
    std::cout << "wrote " << path << "\n";
  }
  std::cout << "recovered " << rep.model.canonical_form() << "\n";
  if (rep.isomorphic_to_reference && !*rep.isomorphic_to_reference) {
    std::cerr << "planeval: recovered model is not isomorphic to the reference\n";
    return 6;
  }
  return 0;
}

int cmd_roundtrip(const JobConfig& cfg) {
  const auto model = load_model(cfg.input);
  const Box box = parse_box(cfg.box, model.r());
  const auto rep = roundtrip(model, box, cfg.corrupt);
  emit(cfg, "roundtrip.json", rep.to_json());
  for (const auto* r : {&rep.from_generalized, &rep.from_semigroup, &rep.from_hilbert})
    std::cout << r->entry << ": " << (r->success && r->isomorphic_to_reference.value_or(false) ? "isomorphic" : "FAILED")
              << "\n";
  return rep.all_isomorphic() ? 0 : 6;
}

int cmd_oracle_verify(const JobConfig& cfg) {
  const auto model = load_model(cfg.input);
  const Box box = parse_box(cfg.box, model.r());
  auto h = hilbert_table(model, box.grown(1));
  if (cfg.inject_mismatch) h.values.back() += 1;
  const auto oh = oracle_hilbert_table(model, box.grown(1));
  std::size_t bad = 0;
  for (std::size_t k = 0; k < h.box.size(); ++k)
    if (h.values[k] != oh.values[k]) {
      if (++bad <= 10)
        std::cerr << "mismatch h" << to_string(h.box.point(k)) << ": engine " << h.values[k] << ", oracle "
                  << oh.values[k] << "\n";
    }
  const auto a = fiber_table(h, box);
  const auto b = fiber_table(oh, box);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k].p == b[k].p)) ++bad;
  std::cout << "checked " << h.box.size() << " values of h and " << a.size() << " fiber classes: " << bad
            << " mismatches\n";
  return bad ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planeval: invariants of collections of plane valuations"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto* compute = app.add_subcommand("compute", "compute series of a model on a box");
  compute->add_option("model", cfg.input, "model JSON")->required();
  compute->add_option("--box", cfg.box, "bound per coordinate (N or N1,N2,...)")->required();
  compute->add_option("--emit", cfg.emit, "comma list of hilbert,poincare,generalized,semigroup-series,semigroup-set");
  compute->add_flag("--oracle", cfg.oracle, "recompute every h and p_v with the jet-space oracle");
  compute->add_option("--out", cfg.out, "output directory");
  compute->add_flag("--inject-mismatch", cfg.inject_mismatch, "perturb one engine value (negative control for --oracle)");

  auto* recon = app.add_subcommand("reconstruct", "recover the topology from a series file");
  recon->add_option("series", cfg.input, "series JSON (ring q, L or int)")->required();
  recon->add_option("--qprec", cfg.qprec, "q-precision for projections (default: largest the box supports)")
      ->check(CLI::PositiveNumber);
  recon->add_option("--reference", cfg.reference, "model JSON to compare against");
  recon->add_option("--out", cfg.out, "output directory");

  auto* rt = app.add_subcommand("roundtrip", "reconstruct a model from its own P_g, P^_g and H");
  rt->add_option("model", cfg.input, "model JSON")->required();
  rt->add_option("--box", cfg.box, "bound per coordinate")->required();
  rt->add_flag("--corrupt", cfg.corrupt, "perturb the series first (negative control)");
  rt->add_option("--out", cfg.out, "output directory");

  auto* ov = app.add_subcommand("oracle-verify", "compare the engine with the jet-space oracle on a box");
  ov->add_option("model", cfg.input, "model JSON")->required();
  ov->add_option("--box", cfg.box, "bound per coordinate")->required();
  ov->add_flag("--inject-mismatch", cfg.inject_mismatch, "perturb one engine value (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*compute) return cmd_compute(cfg);
    if (*recon) return cmd_reconstruct(cfg);
    if (*rt) return cmd_roundtrip(cfg);
    if (*ov) return cmd_oracle_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "planeval: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "planeval: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
