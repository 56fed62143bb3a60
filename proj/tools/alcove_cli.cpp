#include "CLI11.hpp"
#include "json.hpp"

#include "alcove/localization.hpp"
#include "alcove/selftest.hpp"
#include "alcove/svg.hpp"
#include "alcove/textio.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace alcove;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string cartan_file;
  std::string v;
  std::string w;
  std::vector<std::string> words;
  std::vector<std::string> masks;
  std::string input_file;
  int bound = -1;
  std::string orientation = "base";
  std::string basis = "delta";
  bool delta_zero = false;
  std::string format;
  std::string output;
  std::optional<unsigned long long> seed;

  bool has_v = false;
  bool has_w = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  json data;
  in >> data;
  return data;
}

CartanDatum load_datum(const Options& opt) {
  if (!opt.cartan_file.empty()) {
    json data = read_json_file(opt.cartan_file);
    if (data.is_object() && data.contains("type"))
      return datum_from_type(data["type"].get<std::string>());
    if (data.is_object() && data.contains("matrix")) data = data["matrix"];
    if (!data.is_array()) throw Error("cartan file must hold a matrix");
    std::vector<std::vector<long long>> matrix;
    for (const auto& row : data)
      matrix.push_back(row.get<std::vector<long long>>());
    return datum_from_matrix(matrix);
  }
  if (opt.type.empty())
    throw UsageError("one of --type or --cartan-file is required");
  return datum_from_type(opt.type);
}

Basis load_basis(const Options& opt) {
  if (opt.basis == "delta") return Basis::kDelta;
  if (opt.basis == "alpha0") return Basis::kAlpha0;
  throw UsageError("--basis must be delta or alpha0");
}

Orientation load_orientation(const Options& opt) {
  if (opt.orientation == "base") return Orientation::kBase;
  if (opt.orientation == "trivial") return Orientation::kTrivialPositive;
  throw UsageError("--orientation must be base or trivial");
}

std::string require_format(const Options& opt, const std::string& fallback) {
  std::string f = opt.format.empty() ? fallback : opt.format;
  if (f != "json" && f != "text" && f != "svg")
    throw UsageError("--format must be json, text or svg");
  return f;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + opt.output);
  out << text;
}

std::string psi_string(const CartanDatum& d, RootPolynomial psi,
                       const Options& opt) {
  if (opt.delta_zero) psi = specialize_delta_zero(psi);
  return format_polynomial(d, psi, load_basis(opt));
}

json datum_json(const CartanDatum& d, const Options& opt) {
  if (!opt.type.empty()) return opt.type;
  json matrix = json::array();
  for (const auto& row : d.matrix()) matrix.push_back(row);
  return matrix;
}

// The walk description emitted by `walks` and accepted via --input-file.
std::pair<CartanDatum, Word> load_walk(const Options& opt) {
  if (!opt.input_file.empty()) {
    json data = read_json_file(opt.input_file);
    CartanDatum d = [&] {
      if (data["type"].is_string())
        return datum_from_type(data["type"].get<std::string>());
      std::vector<std::vector<long long>> matrix;
      for (const auto& row : data["type"])
        matrix.push_back(row.get<std::vector<long long>>());
      return datum_from_matrix(matrix);
    }();
    Word word = parse_word(data["word"].get<std::string>(), d.rank_affine());
    return {std::move(d), std::move(word)};
  }
  CartanDatum d = load_datum(opt);
  if (opt.words.size() != 1)
    throw UsageError("expected exactly one --word (or --input-file)");
  Word word = parse_word(opt.words[0], d.rank_affine());
  return {std::move(d), std::move(word)};
}

WeylElement element_from(const CartanDatum& d, const std::string& text) {
  return from_word(d, parse_word(text, d.rank_affine()));
}

const char* kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kPositiveCrossing: return "positive-crossing";
    case StepKind::kNegativeCrossing: return "negative-crossing";
    case StepKind::kPositiveFold: return "positive-fold";
    case StepKind::kNegativeFold: return "negative-fold";
  }
  return "";
}

const char* label_name(LabelKind kind) {
  switch (kind) {
    case LabelKind::kFreeFieldElement: return "free";
    case LabelKind::kForcedZero: return "zero";
    case LabelKind::kNonzeroFieldElement: return "nonzero";
  }
  return "";
}

json folded_json(const CartanDatum& d, const FoldedWalk& fw,
                 const Options& opt) {
  json steps = json::array();
  for (const FoldedStep& step : fw.steps) {
    steps.push_back({{"panel", step.panel_type},
                     {"fold", step.is_fold},
                     {"kind", kind_name(step.kind)},
                     {"hyperplane", format_root(d, step.hyperplane)},
                     {"label", label_name(step.label_kind)}});
  }
  Mask folds{fw.folds};
  return {{"type", datum_json(d, opt)},
          {"word", format_word(fw.type_word)},
          {"folds", format_mask(folds)},
          {"orientation",
           fw.orientation == Orientation::kBase ? "base" : "trivial"},
          {"steps", steps},
          {"end", format_word(reduced_word(fw.end))},
          {"positively_folded", is_positively_folded(fw)}};
}

int cmd_localize(const Options& opt) {
  CartanDatum d = load_datum(opt);
  if (!opt.has_v || !opt.has_w) throw UsageError("--v and --w are required");
  WeylElement v = element_from(d, opt.v);
  WeylElement w = element_from(d, opt.w);
  RootPolynomial psi = [&] {
    if (!opt.words.empty())
      return localize(v, w, parse_word(opt.words[0], d.rank_affine()));
    if (opt.seed) return localize(v, w, random_equivalent_word(w, 2, *opt.seed));
    return localize(v, w);
  }();
  std::string text = psi_string(d, psi, opt);
  if (require_format(opt, "json") == "text")
    emit(opt, text + "\n");
  else
    emit(opt, json{{"psi", text}}.dump() + "\n");
  return 0;
}

int cmd_class(const Options& opt) {
  CartanDatum d = load_datum(opt);
  if (!opt.has_v) throw UsageError("--v is required");
  int bound = opt.bound < 0 ? 3 : opt.bound;
  LocalizationClass cls = localization_class(element_from(d, opt.v), bound);
  std::string format = require_format(opt, "json");
  if (format == "svg") {
    Scene scene;
    scene.datum = &d;
    scene.window = bound / 2 + 1;
    for (const auto& [w, word] : cls.order)
      scene.labels.push_back(
          {w, psi_string(d, cls.entries.at(w), opt)});
    emit(opt, render_svg(scene));
    return 0;
  }
  if (format == "text") {
    std::string out;
    for (const auto& [w, word] : cls.order)
      out += format_word(word) + " : " +
             psi_string(d, cls.entries.at(w), opt) + "\n";
    emit(opt, out);
    return 0;
  }
  json entries = json::array();
  for (const auto& [w, word] : cls.order)
    entries.push_back({{"w", format_word(word)},
                       {"psi", psi_string(d, cls.entries.at(w), opt)}});
  emit(opt, json{{"type", datum_json(d, opt)},
                 {"v", opt.v},
                 {"bound", bound},
                 {"entries", entries}}
                .dump() +
            "\n");
  return 0;
}

int cmd_gkm_check(const Options& opt) {
  CartanDatum d = load_datum(opt);
  if (!opt.has_v || !opt.has_w) throw UsageError("--v and --w are required");
  WeylElement v = element_from(d, opt.v);
  WeylElement w = element_from(d, opt.w);
  long long level_bound = opt.bound < 0 ? 2 : opt.bound;
  int checked = 0;
  json failures = json::array();
  for (const FiniteRoot& mu : finite_roots(d)) {
    for (long long k = 0; k <= level_bound; ++k) {
      AffineRoot beta{mu, k};
      if (!is_positive(beta)) continue;
      ++checked;
      if (!gkm_check(v, w, beta)) failures.push_back(format_root(d, beta));
    }
  }
  json result{{"v", opt.v},
              {"w", opt.w},
              {"level_bound", level_bound},
              {"checked", checked},
              {"all_divisible", failures.empty()},
              {"failures", failures}};
  if (require_format(opt, "json") == "text")
    emit(opt, std::string(failures.empty() ? "divisible" : "NOT divisible") +
                  " (" + std::to_string(checked) + " roots checked)\n");
  else
    emit(opt, result.dump() + "\n");
  return 0;
}

int cmd_masks(const Options& opt) {
  CartanDatum d = load_datum(opt);
  if (!opt.has_v) throw UsageError("--v is required");
  WeylElement v = element_from(d, opt.v);
  Word word;
  if (!opt.words.empty())
    word = parse_word(opt.words[0], d.rank_affine());
  else if (opt.has_w)
    word = reduced_word(element_from(d, opt.w));
  else
    throw UsageError("--word or --w is required");
  Walk walk = walk_from_word(d, word);
  RootPolynomial psi(d.rank_affine());
  json entries = json::array();
  std::string text;
  for (const Mask& mask : enumerate_masks(walk, v)) {
    RootPolynomial product = mask_product(walk, mask);
    psi = psi + product;
    std::string ps = psi_string(d, product, opt);
    entries.push_back({{"mask", format_mask(mask)}, {"product", ps}});
    text += format_mask(mask) + " : " + ps + "\n";
  }
  if (require_format(opt, "json") == "text")
    emit(opt, text);
  else
    emit(opt, json{{"word", format_word(word)},
                   {"v", opt.v},
                   {"masks", entries},
                   {"psi", psi_string(d, psi, opt)}}
                  .dump() +
              "\n");
  return 0;
}

int cmd_walks(const Options& opt) {
  auto [d, word] = load_walk(opt);
  Walk walk = walk_from_word(d, word);
  json steps = json::array();
  std::string text;
  for (const Step& step : walk.steps) {
    std::string root = format_root(d, step.crossing_root);
    steps.push_back({{"panel", step.panel_type},
                     {"root", root},
                     {"forward", step.forward}});
    text += std::to_string(step.panel_type) + " : " + root +
            (step.forward ? " (forward)" : " (backward)") + "\n";
  }
  if (require_format(opt, "json") == "text") {
    emit(opt, text);
    return 0;
  }
  emit(opt, json{{"type", datum_json(d, opt)},
                 {"word", format_word(word)},
                 {"steps", steps},
                 {"end", format_word(reduced_word(walk.end))}}
                .dump() +
            "\n");
  return 0;
}

int cmd_fold(const Options& opt) {
  auto [d, word] = load_walk(opt);
  std::vector<int> folds(word.size(), 0);
  if (!opt.masks.empty()) {
    Mask mask = parse_mask(opt.masks[0]);
    if (mask.bits.size() != word.size())
      throw Error("fold mask length does not match the word");
    folds = mask.bits;
  }
  FoldedWalk fw =
      make_folded(d, WeylElement::identity(d), word, folds,
                  load_orientation(opt));
  if (require_format(opt, "json") == "text") {
    std::string text;
    for (const FoldedStep& step : fw.steps)
      text += std::string(kind_name(step.kind)) + " on " +
              format_root(d, step.hyperplane) + "\n";
    text += "end: " + format_word(reduced_word(fw.end)) + "\n";
    emit(opt, text);
    return 0;
  }
  emit(opt, folded_json(d, fw, opt).dump() + "\n");
  return 0;
}

int cmd_folded(const Options& opt) {
  auto [d, word] = load_walk(opt);
  if (!opt.has_v) throw UsageError("--v is required");
  WeylElement v = element_from(d, opt.v);
  auto walks = enumerate_positively_folded(d, word, v, load_orientation(opt));
  json entries = json::array();
  std::string text;
  for (const FoldedWalk& fw : walks) {
    json kinds = json::array();
    std::string line;
    for (const FoldedStep& step : fw.steps) {
      kinds.push_back(kind_name(step.kind));
      line += std::string(line.empty() ? "" : ", ") + kind_name(step.kind);
    }
    entries.push_back({{"folds", format_mask(Mask{fw.folds})},
                       {"kinds", kinds}});
    text += format_mask(Mask{fw.folds}) + " : " + line + "\n";
  }
  if (require_format(opt, "json") == "text")
    emit(opt, text);
  else
    emit(opt, json{{"word", format_word(word)},
                   {"v", opt.v},
                   {"count", walks.size()},
                   {"walks", entries}}
                  .dump() +
              "\n");
  return 0;
}

int cmd_count(const Options& opt) {
  auto [d, word] = load_walk(opt);
  if (!opt.has_v) throw UsageError("--v is required");
  std::string text =
      format_count_polynomial(point_count(d, word, element_from(d, opt.v)));
  if (require_format(opt, "json") == "text")
    emit(opt, text + "\n");
  else
    emit(opt, json{{"count", text}}.dump() + "\n");
  return 0;
}

int cmd_rpoly(const Options& opt) {
  CartanDatum d = load_datum(opt);
  if (!opt.has_v || !opt.has_w) throw UsageError("--v and --w are required");
  std::string text = format_count_polynomial(
      r_polynomial(element_from(d, opt.v), element_from(d, opt.w)));
  if (require_format(opt, "json") == "text")
    emit(opt, text + "\n");
  else
    emit(opt, json(text).dump() + "\n");
  return 0;
}

int cmd_render(const Options& opt) {
  CartanDatum d = [&] {
    if (!opt.input_file.empty()) return load_walk(opt).first;
    return load_datum(opt);
  }();
  Scene scene;
  scene.datum = &d;
  scene.window = opt.bound < 0 ? 2 : opt.bound;
  const char* palette[] = {"green", "gold", "purple"};
  std::vector<Word> words;
  if (!opt.input_file.empty()) {
    words.push_back(load_walk(opt).second);
  } else {
    for (const std::string& text : opt.words)
      words.push_back(parse_word(text, d.rank_affine()));
  }
  for (std::size_t t = 0; t < words.size(); ++t) {
    WalkLayer layer;
    layer.base = WeylElement::identity(d);
    layer.word = words[t];
    layer.orientation = load_orientation(opt);
    layer.color = palette[t % 3];
    if (t < opt.masks.size() && !opt.masks[t].empty()) {
      Mask mask = parse_mask(opt.masks[t]);
      if (mask.bits.size() != words[t].size())
        throw Error("fold mask length does not match the word");
      layer.folds = mask.bits;
    }
    scene.walks.push_back(std::move(layer));
  }
  emit(opt, render_svg(scene));
  return 0;
}

int cmd_selftest(const Options& opt) {
  std::ostringstream out;
  int failures = run_selftest(out);
  emit(opt, out.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact affine Weyl group combinatorics: alcove walks, "
               "equivariant localization and positively folded walks"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--type", opt.type,
                 "Builtin affine type label (A2~, C2~, G2~, A1~)");
  app.add_option("--cartan-file", opt.cartan_file,
                 "JSON file with an affine Cartan matrix");
  app.add_option("--v", opt.v, "Word for the element v, e.g. \"1 0\"")
      ->trigger_on_parse()
      ->each([&](const std::string&) { opt.has_v = true; });
  app.add_option("--w", opt.w, "Word for the element w")
      ->trigger_on_parse()
      ->each([&](const std::string&) { opt.has_w = true; });
  app.add_option("--word", opt.words, "Type word of a walk (repeatable)");
  app.add_option("--mask", opt.masks, "Binary mask like 1001 (repeatable)");
  app.add_option("--input-file", opt.input_file,
                 "JSON walk description as emitted by the walks subcommand");
  app.add_option("--bound", opt.bound,
                 "Length bound (class), level bound (gkm-check) or window "
                 "(render)");
  app.add_option("--orientation", opt.orientation, "base or trivial");
  app.add_option("--basis", opt.basis, "delta or alpha0");
  app.add_flag("--delta-zero", opt.delta_zero,
               "Specialize delta to 0 before printing");
  app.add_option("--format", opt.format, "json, text or svg");
  app.add_option("--output", opt.output, "Write output to a file");
  app.add_option("--seed", opt.seed,
                 "Seed for a random non-reduced word (localize)");

  int (*command)(const Options&) = nullptr;
  auto add = [&](const char* name, const char* help,
                 int (*fn)(const Options&)) {
    app.add_subcommand(name, help)->callback([&command, fn] { command = fn; });
  };
  add("localize", "Localization psi^v(w) of a Schubert class", cmd_localize);
  add("class", "psi^v on every alcove within a length bound", cmd_class);
  add("gkm-check", "Divisibility of psi^v(w) - psi^v(s_beta w)", cmd_gkm_check);
  add("masks", "Masks of a walk selecting v, with their products", cmd_masks);
  add("walks", "Step table of an alcove walk", cmd_walks);
  add("fold", "Fold selected steps of a walk", cmd_fold);
  add("folded", "All positively folded walks of a type ending at v",
      cmd_folded);
  add("count", "Point-count polynomial of positively folded walks", cmd_count);
  add("rpoly", "Kazhdan-Lusztig R-polynomial R_{v,w}(q)", cmd_rpoly);
  add("render", "SVG picture of the arrangement and walks", cmd_render);
  add("selftest", "Run the embedded acceptance sweeps", cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return command(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
