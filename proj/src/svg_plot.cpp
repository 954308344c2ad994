#include "seqchaos/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <vector>

#include "seqchaos/errors.hpp"

namespace seqchaos {

namespace {

std::string fixed(double v, int decimals) {
  if (v == 0) v = 0;  // no "-0.00"
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  std::string s(buf.data(), ptr);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string px(double v) { return fixed(v, 2); }

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

AxisRange padded_extent(double lo, double hi) {
  const double span = hi - lo;
  double pad = 0.02 * span;
  if (span <= 0) pad = lo != 0 ? 0.02 * std::abs(lo) : 1.0;
  return {lo - pad, hi + pad};
}

struct Frame {
  AxisRange x;
  AxisRange y;
  double left, right, top, bottom;

  double sx(double v) const { return left + (v - x.min) / (x.max - x.min) * (right - left); }
  double sy(double v) const { return bottom - (v - y.min) / (y.max - y.min) * (bottom - top); }
};

int tick_decimals(double step) {
  return std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9)));
}

void append_axes(std::string& svg, const Frame& f, const PlotSpec& spec) {
  svg += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<rect x=\"" + px(f.left) + "\" y=\"" + px(f.top) + "\" width=\"" + px(f.right - f.left) +
         "\" height=\"" + px(f.bottom - f.top) + "\"/>\n";
  std::string labels;
  const auto axis = [&](const AxisRange& r, bool horizontal) {
    const double step = nice_tick_step(r.max - r.min);
    const int decimals = tick_decimals(step);
    const auto first = static_cast<long long>(std::ceil(r.min / step - 1e-9));
    const auto last = static_cast<long long>(std::floor(r.max / step + 1e-9));
    for (long long i = first; i <= last; ++i) {
      const double v = static_cast<double>(i) * step;
      if (horizontal) {
        const std::string x = px(f.sx(v));
        svg += "<line x1=\"" + x + "\" y1=\"" + px(f.bottom) + "\" x2=\"" + x + "\" y2=\"" +
               px(f.bottom + 5) + "\"/>\n";
        labels += "<text x=\"" + x + "\" y=\"" + px(f.bottom + 18) +
                  "\" text-anchor=\"middle\">" + fixed(v, decimals) + "</text>\n";
      } else {
        const std::string y = px(f.sy(v));
        svg += "<line x1=\"" + px(f.left - 5) + "\" y1=\"" + y + "\" x2=\"" + px(f.left) +
               "\" y2=\"" + y + "\"/>\n";
        labels += "<text x=\"" + px(f.left - 8) + "\" y=\"" + px(f.sy(v) + 4) +
                  "\" text-anchor=\"end\">" + fixed(v, decimals) + "</text>\n";
      }
    }
  };
  axis(f.x, true);
  axis(f.y, false);
  svg += "</g>\n";
  svg += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  svg += labels;
  const double cx = (f.left + f.right) / 2;
  const double cy = (f.top + f.bottom) / 2;
  if (!spec.title.empty()) {
    svg += "<text x=\"" + px(cx) + "\" y=\"" + px(f.top / 2 + 5) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + escape(spec.title) + "</text>\n";
  }
  if (!spec.x_label.empty()) {
    svg += "<text x=\"" + px(cx) + "\" y=\"" + px(f.bottom + 40) + "\" text-anchor=\"middle\">" +
           escape(spec.x_label) + "</text>\n";
  }
  if (!spec.y_label.empty()) {
    svg += "<text x=\"" + px(16) + "\" y=\"" + px(cy) + "\" text-anchor=\"middle\" transform=\"rotate(-90 " +
           px(16) + " " + px(cy) + ")\">" + escape(spec.y_label) + "</text>\n";
  }
  svg += "</g>\n";
}

std::string document(const PlotSpec& spec, const Frame& frame, const std::string& body) {
  const std::string w = std::to_string(spec.width);
  const std::string h = std::to_string(spec.height);
  std::string svg;
  svg.reserve(body.size() + 4096);
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" +
         h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  if (!spec.title.empty()) svg += "<title>" + escape(spec.title) + "</title>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
  append_axes(svg, frame, spec);
  if (spec.diagonal) {
    const double lo = std::max(frame.x.min, frame.y.min);
    const double hi = std::min(frame.x.max, frame.y.max);
    if (lo < hi) {
      svg += "<line class=\"diagonal\" x1=\"" + px(frame.sx(lo)) + "\" y1=\"" + px(frame.sy(lo)) +
             "\" x2=\"" + px(frame.sx(hi)) + "\" y2=\"" + px(frame.sy(hi)) +
             "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
  }
  svg += body;
  svg += "</svg>\n";
  return svg;
}

bool inside(double v, const std::optional<AxisRange>& r) { return !r || (v >= r->min && v <= r->max); }

}  // namespace

void PlotSpec::validate() const {
  if (width <= 2 * margin || height <= 2 * margin) {
    throw Error("invalid plot spec: width and height must exceed twice the margin");
  }
  if (point_radius <= 0) throw Error("invalid plot spec: point radius must be positive");
  if (x_range && !(x_range->min < x_range->max)) throw Error("invalid plot spec: empty x range");
  if (y_range && !(y_range->min < y_range->max)) throw Error("invalid plot spec: empty y range");
}

double nice_tick_step(double span, int target) {
  if (!(span > 0) || !std::isfinite(span)) return 1;
  const double raw = span / target;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double fraction = raw / magnitude;
  double nice = 10;
  if (fraction <= 1) nice = 1;
  else if (fraction <= 2) nice = 2;
  else if (fraction <= 5) nice = 5;
  return nice * magnitude;
}

std::string render_scatter(const ScatterSet<double>& set, const PlotSpec& spec) {
  spec.validate();
  const Eigen::Index n = set.size();
  if (n == 0) throw EmptyData(set.source_label.empty() ? "scatter set" : set.source_label);

  const auto stride = static_cast<Eigen::Index>(
      (static_cast<std::size_t>(n) + kMaxPlotPoints - 1) / kMaxPlotPoints);
  std::vector<Eigen::Index> kept;
  kept.reserve(static_cast<std::size_t>(n / stride + 1));
  for (Eigen::Index i = 0; i < n; i += stride) {
    if (inside(set.points(i, 0), spec.x_range) && inside(set.points(i, 1), spec.y_range)) {
      kept.push_back(i);
    }
  }
  if (kept.empty()) throw EmptyData("plot window");

  double xlo = set.points(kept.front(), 0), xhi = xlo;
  double ylo = set.points(kept.front(), 1), yhi = ylo;
  for (const auto i : kept) {
    xlo = std::min(xlo, set.points(i, 0));
    xhi = std::max(xhi, set.points(i, 0));
    ylo = std::min(ylo, set.points(i, 1));
    yhi = std::max(yhi, set.points(i, 1));
  }
  if (spec.mode == PlotMode::stem) {
    ylo = std::min(ylo, 0.0);
    yhi = std::max(yhi, 0.0);
  }

  Frame f{spec.x_range.value_or(padded_extent(xlo, xhi)),
          spec.y_range.value_or(padded_extent(ylo, yhi)),
          static_cast<double>(spec.margin),
          static_cast<double>(spec.width - spec.margin),
          static_cast<double>(spec.margin),
          static_cast<double>(spec.height - spec.margin)};
  if (spec.mode == PlotMode::stem && !spec.y_range) f.y.min = std::min(0.0, ylo);

  std::string body;
  body.reserve(kept.size() * 64);
  if (spec.mode == PlotMode::scatter) {
    const std::string r = px(spec.point_radius);
    body += "<g class=\"points\" fill=\"black\" stroke=\"none\">\n";
    for (const auto i : kept) {
      body += "<circle cx=\"" + px(f.sx(set.points(i, 0))) + "\" cy=\"" + px(f.sy(set.points(i, 1))) +
              "\" r=\"" + r + "\"/>\n";
    }
  } else {
    const std::string base = px(f.sy(std::clamp(0.0, f.y.min, f.y.max)));
    body += "<g class=\"stems\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto i : kept) {
      const std::string x = px(f.sx(set.points(i, 0)));
      body += "<line class=\"stem\" x1=\"" + x + "\" y1=\"" + base + "\" x2=\"" + x + "\" y2=\"" +
              px(f.sy(set.points(i, 1))) + "\"/>\n";
    }
  }
  body += "</g>\n";
  return document(spec, f, body);
}

std::string render_spectrum(const Spectrum<double>& spectrum, const PlotSpec& spec,
                            SpectrumRange range) {
  const Eigen::Index n = spectrum.size();
  if (n == 0) throw EmptyData("spectrum");
  const Eigen::Index shown = range == SpectrumRange::half ? n / 2 + 1 : n;
  auto points = indexed_points(spectrum.amplitudes.head(shown), 0, "spectrum");
  PlotSpec stem_spec = spec;
  stem_spec.mode = PlotMode::stem;
  return render_scatter(points, stem_spec);
}

}  // namespace seqchaos
