#include "alcove/svg.hpp"

#include "alcove/textio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <optional>
#include <set>

namespace alcove {

namespace {

struct Vec {
  double x = 0;
  double y = 0;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double c, Vec a) { return {c * a.x, c * a.y}; }
double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
double norm(Vec a) { return std::sqrt(dot(a, a)); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  if (std::strcmp(buf, "-0.000000") == 0) return "0.000000";
  return buf;
}

// SVG y grows downward; flip at output time only.
std::string xy(Vec p) { return fmt(p.x) + "," + fmt(-p.y); }

struct Box {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool empty = true;

  void add(Vec p) {
    if (empty) {
      x0 = x1 = p.x;
      y0 = y1 = p.y;
      empty = false;
      return;
    }
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  void pad(double m) {
    x0 -= m;
    x1 += m;
    y0 -= m;
    y1 += m;
  }
};

class Renderer {
 public:
  explicit Renderer(const Scene& scene)
      : scene_(scene), datum_(*scene.datum), emb_(datum_) {}

  std::string run();

 private:
  const Scene& scene_;
  const CartanDatum& datum_;
  PlaneEmbedding emb_;
  Box box_;
  std::string body_;

  Vec embed(const std::vector<Rational>& p) const {
    PlanePoint q = emb_.embed(p);
    return {q.x.to_double(emb_.surd()), q.y.to_double(emb_.surd())};
  }
  Vec centroid(const WeylElement& w) const { return embed(alcove_centroid(w)); }

  std::vector<FiniteRoot> positive_finite() const {
    std::vector<FiniteRoot> out;
    for (const FiniteRoot& mu : datum_.finite_roots())
      if (is_positive({mu, 0})) out.push_back(mu);
    return out;
  }
  // Direction covector of mu in the embedding: <p, mu> = dot(P, A).
  Vec covector(const FiniteRoot& mu) const {
    Vec a;
    for (int j = 1; j <= 2; ++j) {
      const PlanePoint& r = emb_.root(j);
      double c = static_cast<double>(Rational(mu.coords[j - 1]));
      a = a + c * Vec{r.x.to_double(emb_.surd()), r.y.to_double(emb_.surd())};
    }
    return a;
  }

  void compute_box();
  std::optional<std::pair<Vec, Vec>> clip_line(Vec a, double k) const;
  void draw_hyperplanes();
  void draw_labels();
  void draw_walks();
};

void Renderer::compute_box() {
  std::vector<FiniteRoot> positives = positive_finite();
  double win = scene_.window;
  // Corners of the window region |<p, mu>| <= window.
  for (std::size_t i = 0; i < positives.size(); ++i) {
    for (std::size_t j = i + 1; j < positives.size(); ++j) {
      Vec a = covector(positives[i]);
      Vec b = covector(positives[j]);
      double det = a.x * b.y - a.y * b.x;
      if (std::fabs(det) < 1e-12) continue;
      for (double ka : {-win, win}) {
        for (double kb : {-win, win}) {
          Vec p{(ka * b.y - kb * a.y) / det, (kb * a.x - ka * b.x) / det};
          bool inside = true;
          for (const FiniteRoot& mu : positives)
            if (std::fabs(dot(p, covector(mu))) > win + 1e-9) inside = false;
          if (inside) box_.add(p);
        }
      }
    }
  }
  for (const WalkLayer& layer : scene_.walks) {
    std::vector<int> folds = layer.folds;
    if (folds.empty()) folds.assign(layer.word.size(), 0);
    WeylElement cur = layer.base;
    for (std::size_t j = 0; j <= layer.word.size(); ++j) {
      for (const auto& v : alcove_vertices(cur)) box_.add(embed(v));
      if (j == layer.word.size()) break;
      if (!folds[j])
        cur = cur * WeylElement::simple_reflection(datum_, layer.word[j]);
    }
  }
  for (const AlcoveLabel& label : scene_.labels)
    for (const auto& v : alcove_vertices(label.w)) box_.add(embed(v));
  if (box_.empty) box_.add({0, 0});
  box_.pad(0.4);
}

std::optional<std::pair<Vec, Vec>> Renderer::clip_line(Vec a, double k) const {
  // Line dot(P, a) = k, clipped to the box.
  Vec p0 = (k / dot(a, a)) * a;
  Vec dir{-a.y, a.x};
  double t0 = -1e18, t1 = 1e18;
  auto narrow = [&](double start, double delta, double lo, double hi) {
    if (std::fabs(delta) < 1e-12) return start >= lo - 1e-9 && start <= hi + 1e-9;
    double u0 = (lo - start) / delta;
    double u1 = (hi - start) / delta;
    if (u0 > u1) std::swap(u0, u1);
    t0 = std::max(t0, u0);
    t1 = std::min(t1, u1);
    return true;
  };
  if (!narrow(p0.x, dir.x, box_.x0, box_.x1)) return std::nullopt;
  if (!narrow(p0.y, dir.y, box_.y0, box_.y1)) return std::nullopt;
  if (t0 >= t1) return std::nullopt;
  return std::make_pair(p0 + t0 * dir, p0 + t1 * dir);
}

void Renderer::draw_hyperplanes() {
  for (const FiniteRoot& mu : positive_finite()) {
    Vec a = covector(mu);
    for (int k = -scene_.window; k <= scene_.window; ++k) {
      auto seg = clip_line(a, k);
      if (!seg) continue;
      body_ += "<line x1=\"" + fmt(seg->first.x) + "\" y1=\"" +
               fmt(-seg->first.y) + "\" x2=\"" + fmt(seg->second.x) +
               "\" y2=\"" + fmt(-seg->second.y) +
               "\" stroke=\"gray\" stroke-width=\"0.01\"/>\n";
      // The wall <p, mu> = k carries the root with level -k.
      AffineRoot label = positive_representative({mu, -k});
      Vec dir = seg->second - seg->first;
      Vec pos = seg->second - (0.25 / norm(dir)) * dir;
      body_ += "<text x=\"" + fmt(pos.x) + "\" y=\"" + fmt(-pos.y) +
               "\" font-size=\"0.11\" fill=\"gray\">H(" +
               format_root(datum_, label) + ")</text>\n";
    }
  }
}

void Renderer::draw_labels() {
  for (const AlcoveLabel& label : scene_.labels) {
    Vec c = centroid(label.w);
    body_ += "<text x=\"" + fmt(c.x) + "\" y=\"" + fmt(-c.y) +
             "\" font-size=\"0.1\" text-anchor=\"middle\" fill=\"black\">" +
             label.text + "</text>\n";
  }
}

void Renderer::draw_walks() {
  for (const WalkLayer& layer : scene_.walks) {
    std::vector<int> folds = layer.folds;
    if (folds.empty()) folds.assign(layer.word.size(), 0);
    FoldedWalk fw = make_folded(datum_, layer.base, layer.word, folds,
                                layer.orientation);
    WeylElement cur = layer.base;
    for (std::size_t j = 0; j < layer.word.size(); ++j) {
      int i = layer.word[j];
      Vec c = centroid(cur);
      if (folds[j]) {
        std::string color = fw.steps[j].kind == StepKind::kPositiveFold
                                ? "deeppink"
                                : "orange";
        auto pv = panel_vertices(cur, i);
        Vec m = 0.5 * (embed(pv[0]) + embed(pv[1]));
        Vec out = m - c;
        Vec perp{-out.y, out.x};
        Vec p1 = c + 0.8 * out + 0.35 * perp;
        Vec p2 = c + 0.8 * out - 0.35 * perp;
        body_ += "<path d=\"M " + xy(c) + " C " + xy(p1) + " " + xy(p2) +
                 " " + xy(c) + "\" fill=\"none\" stroke=\"" + color +
                 "\" stroke-width=\"0.03\" marker-end=\"url(#arrow-" + color +
                 ")\"/>\n";
      } else {
        WeylElement next = cur * WeylElement::simple_reflection(datum_, i);
        Vec n = centroid(next);
        body_ += "<line x1=\"" + fmt(c.x) + "\" y1=\"" + fmt(-c.y) +
                 "\" x2=\"" + fmt(n.x) + "\" y2=\"" + fmt(-n.y) +
                 "\" stroke=\"" + layer.color +
                 "\" stroke-width=\"0.03\" marker-end=\"url(#arrow-" +
                 layer.color + ")\"/>\n";
        cur = next;
      }
    }
  }
}

std::string Renderer::run() {
  compute_box();
  draw_hyperplanes();
  draw_labels();
  draw_walks();

  std::set<std::string> colors;
  for (const WalkLayer& layer : scene_.walks) colors.insert(layer.color);
  colors.insert("deeppink");
  colors.insert("orange");

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         fmt(box_.x0) + " " + fmt(-box_.y1) + " " + fmt(box_.x1 - box_.x0) +
         " " + fmt(box_.y1 - box_.y0) + "\">\n<defs>\n";
  for (const std::string& color : colors) {
    out += "<marker id=\"arrow-" + color +
           "\" viewBox=\"0 0 4 4\" refX=\"3\" refY=\"2\" markerWidth=\"4\" "
           "markerHeight=\"4\" orient=\"auto\"><path d=\"M 0 0 L 4 2 L 0 4 "
           "z\" fill=\"" +
           color + "\"/></marker>\n";
  }
  out += "</defs>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render_svg(const Scene& scene) {
  if (scene.datum == nullptr) throw Error("scene has no Cartan datum");
  if (scene.datum->rank_finite() != 2)
    throw Error("only rank-2 affine types are renderable");
  return Renderer(scene).run();
}

}  // namespace alcove
