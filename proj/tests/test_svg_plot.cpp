#include <doctest.h>

#include <fstream>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include "seqchaos/analysis.hpp"
#include "seqchaos/errors.hpp"
#include "seqchaos/spectrum.hpp"
#include "seqchaos/svg_plot.hpp"

using namespace seqchaos;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

ScatterSet<double> points(std::initializer_list<std::pair<double, double>> pts) {
  ScatterSet<double> s;
  s.points.resize(static_cast<Eigen::Index>(pts.size()), 2);
  Eigen::Index i = 0;
  for (const auto& [x, y] : pts) {
    s.points(i, 0) = x;
    s.points(i, 1) = y;
    ++i;
  }
  return s;
}

PlotSpec golden_spec() {
  PlotSpec spec;
  spec.width = 400;
  spec.height = 300;
  spec.margin = 50;
  spec.point_radius = 2;
  spec.title = "two points";
  spec.x_label = "x";
  spec.y_label = "y";
  return spec;
}

struct Stem {
  std::string y1, y2;
};

std::vector<Stem> stems(const std::string& svg) {
  static const std::regex re(R"re(<line class="stem" x1="[^"]+" y1="([^"]+)" x2="[^"]+" y2="([^"]+)"/>)re");
  std::vector<Stem> out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it) {
    out.push_back({(*it)[1], (*it)[2]});
  }
  return out;
}

}  // namespace

TEST_CASE("golden two-point scatter") {
  const auto svg = render_scatter(points({{0, 0}, {1, 1}}), golden_spec());
  std::ifstream in(SEQCHAOS_GOLDEN_DIR "/scatter_two_points.svg", std::ios::binary);
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(svg == golden.str());
}

TEST_CASE("determinism and one circle per point") {
  ScatterSet<double> s;
  s.points = Eigen::MatrixX2d::Random(777, 2);
  const auto a = render_scatter(s, PlotSpec{});
  const auto b = render_scatter(s, PlotSpec{});
  CHECK(a == b);
  CHECK(count_of(a, "<circle ") == 777);
  CHECK(a.starts_with("<?xml version=\"1.0\""));
  CHECK(a.find("viewBox=\"0 0 800 600\"") != std::string::npos);
}

TEST_CASE("single point is centred in the plot area") {
  const PlotSpec spec = golden_spec();
  const auto svg = render_scatter(points({{42, -7}}), spec);
  CHECK(count_of(svg, "<circle ") == 1);
  CHECK(svg.find("<circle cx=\"200.00\" cy=\"150.00\"") != std::string::npos);
}

TEST_CASE("axis override keeps only points inside the window") {
  PlotSpec spec;
  spec.x_range = AxisRange{1, 2};
  const auto svg = render_scatter(points({{0, 0}, {1, 1}, {1.5, 3}, {2, 2}, {3, 3}}), spec);
  CHECK(count_of(svg, "<circle ") == 3);
  spec.x_range = AxisRange{10, 20};
  CHECK_THROWS_AS(render_scatter(points({{0, 0}}), spec), EmptyData);
}

TEST_CASE("large scatter sets are thinned deterministically") {
  ScatterSet<double> s;
  s.points.resize(450'001, 2);
  for (Eigen::Index i = 0; i < s.size(); ++i) s.points.row(i) << i, i;
  const auto svg = render_scatter(s, PlotSpec{});
  CHECK(count_of(svg, "<circle ") == 150'001);  // stride ceil(450001 / 200000) = 3
}

TEST_CASE("diagonal reference line") {
  PlotSpec spec;
  spec.diagonal = true;
  CHECK(count_of(render_scatter(points({{1, 2}, {2, 3}}), spec), "class=\"diagonal\"") == 1);
}

TEST_CASE("spectrum stems") {
  const PlotSpec spec;
  SUBCASE("constant input") {
    const auto s = dft_amplitude(Eigen::VectorXd::Constant(20, 2.0));
    const auto st = stems(render_spectrum(s, spec, SpectrumRange::full));
    REQUIRE(st.size() == 20);
    CHECK(st[0].y1 != st[0].y2);
    for (std::size_t k = 1; k < st.size(); ++k) CHECK(st[k].y1 == st[k].y2);
  }
  SUBCASE("cosine input, half range") {
    Eigen::VectorXd x(64);
    for (Eigen::Index i = 0; i < 64; ++i) x[i] = std::cos(2 * std::numbers::pi * static_cast<double>(i) / 64);
    const auto st = stems(render_spectrum(dft_amplitude(x), spec, SpectrumRange::half));
    REQUIRE(st.size() == 33);
    for (std::size_t k = 0; k < st.size(); ++k) CHECK((st[k].y1 != st[k].y2) == (k == 1));
  }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(render_scatter(ScatterSet<double>{}, PlotSpec{}), EmptyData);
  PlotSpec narrow;
  narrow.width = 100;
  narrow.margin = 50;
  CHECK_THROWS_AS(render_scatter(points({{0, 0}}), narrow), Error);
  CHECK_THROWS_AS(render_spectrum(Spectrum<double>{}, PlotSpec{}), EmptyData);
}

TEST_CASE("nice tick steps") {
  CHECK(nice_tick_step(10) == doctest::Approx(2));
  CHECK(nice_tick_step(1) == doctest::Approx(0.2));
  CHECK(nice_tick_step(240) == doctest::Approx(50));
  CHECK(nice_tick_step(0.03) == doctest::Approx(0.01));
}
