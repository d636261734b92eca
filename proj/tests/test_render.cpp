#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "leaffun/render.hpp"
#include "reference_values.hpp"

namespace lf = leaffun;
namespace ref = leaffun_test_ref;

namespace {

constexpr auto kH = lf::LemniscateVariant::Horizontal;
constexpr auto kD = lf::LemniscateVariant::Diagonal;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field += ch;
    }
  }
  out.push_back(field);
  return out;
}

// Every vertex of every polyline in the SVG, mapped back to model
// coordinates (the canvas is the model plane with y negated).
std::vector<lf::PlanarPoint> svg_vertices(const std::string& svg) {
  std::vector<lf::PlanarPoint> pts;
  std::size_t pos = 0;
  while ((pos = svg.find("points=\"", pos)) != std::string::npos) {
    pos += 8;
    const std::size_t end = svg.find('"', pos);
    std::istringstream in(svg.substr(pos, end - pos));
    std::string pair;
    while (in >> pair) {
      const std::size_t comma = pair.find(',');
      pts.push_back({std::strtod(pair.substr(0, comma).c_str(), nullptr),
                     -std::strtod(pair.substr(comma + 1).c_str(), nullptr)});
    }
    pos = end;
  }
  return pts;
}

}  // namespace

TEST_CASE("fixed-point truncation keeps printed digits faithful",
          "[render]") {
  REQUIRE(lf::detail::format_truncated(0.777159420651966308, 5) == "0.77715");
  REQUIRE(lf::detail::format_truncated(0.9999999, 5) == "0.99999");
  REQUIRE(lf::detail::format_truncated(1.0, 5) == "1.00000");
  REQUIRE(lf::detail::format_truncated(2.42865064788758161, 5) == "2.42865");
  REQUIRE(lf::detail::format_truncated(-0.123456, 3) == "-0.123");
  REQUIRE(lf::detail::format_truncated(26.4223767178933883, 4) == "26.4223");
  REQUIRE(lf::detail::format_rounded(0.99999999, 5) == "1.00000");
}

TEST_CASE("angle and leaf tables print the expected digits", "[render]") {
  lf::TableSpec horizontal;
  const std::string table = lf::render_table(horizontal);
  const auto rows = lines_of(table);
  REQUIRE(rows.size() == 15);  // header plus l = 0.0 .. 1.3

  REQUIRE(tokens_of(rows[0]) ==
          std::vector<std::string>{"l", "theta_rad", "theta_deg", "sleaf2",
                                   "cleaf2"});
  REQUIRE(tokens_of(rows[1]) ==
          std::vector<std::string>{"0.0000", "0.00000", "0.0000", "0.00000",
                                   "1.00000"});
  REQUIRE(tokens_of(rows[6]) ==
          std::vector<std::string>{"0.5000", "0.46115", "26.4223", "0.49689",
                                   "0.77715"});
  REQUIRE(tokens_of(rows[14]) ==
          std::vector<std::string>{"1.3000", "0.78533", "44.9965", "0.99987",
                                   "0.01102"});

  SECTION("deterministic output") {
    REQUIRE(lf::render_table(horizontal) == table);
  }

  SECTION("diagonal variant swaps in the second angle") {
    lf::TableSpec diagonal;
    diagonal.kind = lf::TableKind::Diagonal;
    const auto drows = lines_of(lf::render_table(diagonal));
    REQUIRE(tokens_of(drows[0])[1] == "theta_bar_rad");
    REQUIRE(tokens_of(drows[11]) ==
            std::vector<std::string>{"1.0000", "0.48411", "27.7379", "0.90768",
                                     "0.31073"});
  }
}

TEST_CASE("constants table lists the half periods", "[render]") {
  lf::TableSpec spec;
  spec.kind = lf::TableKind::Constants;
  const auto rows = lines_of(lf::render_table(spec));
  REQUIRE(rows.size() == 11);  // header plus n = 1..10
  REQUIRE(tokens_of(rows[1]) == std::vector<std::string>{"1", "3.14159"});
  REQUIRE(tokens_of(rows[2]) == std::vector<std::string>{"2", "2.62205"});
  REQUIRE(tokens_of(rows[3]) == std::vector<std::string>{"3", "2.42865"});
  REQUIRE(tokens_of(rows[10]) == std::vector<std::string>{"10", "2.13534"});

  SECTION("order range is honoured") {
    spec.n_start = 4;
    spec.n_end = 6;
    REQUIRE(lines_of(lf::render_table(spec)).size() == 4);
  }
}

TEST_CASE("table spec validation", "[render]") {
  lf::TableSpec spec;
  spec.l_step = 0.0;
  REQUIRE_THROWS_AS(lf::render_table(spec), std::invalid_argument);
  spec.l_step = 0.1;
  spec.l_end = -1.0;
  REQUIRE_THROWS_AS(lf::render_table(spec), std::invalid_argument);
  spec.l_end = 1.3;
  spec.precision = 1;
  REQUIRE_THROWS_AS(lf::render_table(spec), std::invalid_argument);
  spec.precision = 5;
  spec.kind = lf::TableKind::Constants;
  spec.n_start = 0;
  REQUIRE_THROWS_AS(lf::render_table(spec), std::invalid_argument);
}

TEST_CASE("curve sampling runs the principal arc", "[render]") {
  REQUIRE_THROWS_AS(lf::sample_curve(kH, 1), std::invalid_argument);

  const auto rows = lf::sample_curve(kH, 100);
  REQUIRE(rows.size() == 100);
  REQUIRE(rows.front().x == 1.0);
  REQUIRE(rows.front().y == 0.0);
  REQUIRE(rows.back().x == 0.0);
  REQUIRE(rows.back().y == 0.0);

  const auto drows = lf::sample_curve(kD, 50);
  REQUIRE(drows.front().x == 0.0);
  REQUIRE(std::abs(drows.back().x - std::numbers::sqrt2 / 2) < 1e-14);
  REQUIRE(std::abs(drows.back().y - std::numbers::sqrt2 / 2) < 1e-14);

  SECTION("rows are internally consistent") {
    for (const auto& r : rows) {
      REQUIRE(std::abs(r.x * r.x + r.y * r.y - r.cleaf2 * r.cleaf2) < 1e-14);
      REQUIRE(std::abs(std::tan(r.theta) - r.sleaf2) < 1e-12);
      REQUIRE(std::abs(lf::implicit_residual(kH, {r.x, r.y})) < 1e-12);
    }
  }
}

TEST_CASE("curve CSV round-trips its samples", "[render]") {
  const auto rows = lf::sample_curve(kD, 14);
  const auto csv = lines_of(lf::curve_csv(rows));
  REQUIRE(csv.size() == 15);
  REQUIRE(csv[0] == "l,theta,x,y,sleaf2,cleaf2");
  REQUIRE(csv[1] == "0,0,0,0,0,1");

  for (std::size_t i = 1; i < csv.size(); ++i) {
    const auto fields = split_csv(csv[i]);
    REQUIRE(fields.size() == 6);
    const double l = std::strtod(fields[0].c_str(), nullptr);
    const double s = std::strtod(fields[4].c_str(), nullptr);
    // the emitted leaf column re-derives from the phase column alone
    REQUIRE(std::abs(s - lf::sleaf(lf::LeafOrder{2}, l).value) < 1e-12);
  }
}

TEST_CASE("curve SVG is self-contained and stays on the curve", "[render]") {
  const auto svg = lf::curve_svg(kH, lf::sample_curve(kH, 100));
  REQUIRE(svg.rfind("<svg xmlns", 0) == 0);
  REQUIRE(svg.find("viewBox=\"-1.1 -1.1 2.2 2.2\"") != std::string::npos);
  REQUIRE(svg.find("</svg>\n") != std::string::npos);
  REQUIRE(svg.find("href") == std::string::npos);
  REQUIRE(svg.find("url(") == std::string::npos);

  const auto pts = svg_vertices(svg);
  REQUIRE(pts.size() == 2 * 2 * 100);  // two leaves, arc + mirrored arc
  for (const auto& p : pts) {
    REQUIRE(std::abs(lf::implicit_residual(kH, p)) < 1e-6);
  }

  SECTION("diagonal pose likewise") {
    const auto dsvg = lf::curve_svg(kD, lf::sample_curve(kD, 60));
    for (const auto& p : svg_vertices(dsvg)) {
      REQUIRE(std::abs(lf::implicit_residual(kD, p)) < 1e-6);
    }
  }
}

TEST_CASE("frame CSV lists points, segments, and lengths", "[render]") {
  const auto f = lf::construction_frame(kH, 0.5);
  const auto csv = lines_of(lf::frame_csv(f));
  REQUIRE(csv[0] == "record,name,x1,y1,x2,y2");
  REQUIRE(csv.size() == 14);  // 5 points, 4 segments, 4 lengths

  int points = 0, segments = 0, lengths = 0;
  for (std::size_t i = 1; i < csv.size(); ++i) {
    const auto fields = split_csv(csv[i]);
    REQUIRE(fields.size() == 6);
    if (fields[0] == "point") ++points;
    if (fields[0] == "segment") ++segments;
    if (fields[0] == "length") ++lengths;
  }
  REQUIRE(points == 5);
  REQUIRE(segments == 4);
  REQUIRE(lengths == 4);

  SECTION("named values match the frame") {
    for (std::size_t i = 1; i < csv.size(); ++i) {
      const auto fields = split_csv(csv[i]);
      if (fields[0] == "point" && fields[1] == "B") {
        REQUIRE(std::strtod(fields[2].c_str(), nullptr) == 1.0);
        REQUIRE(std::abs(std::strtod(fields[3].c_str(), nullptr) -
                         ref::kGrid[5][5]) < 1e-11);
      }
      if (fields[0] == "length" && fields[1] == "OP") {
        REQUIRE(std::abs(std::strtod(fields[2].c_str(), nullptr) -
                         ref::kGrid[5][6]) < 1e-11);
      }
    }
  }
}

TEST_CASE("frame SVG draws the construction", "[render]") {
  const auto svg = lf::frame_svg(lf::construction_frame(kD, 0.5));
  std::size_t markers = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++markers;
    pos += 7;
  }
  REQUIRE(markers == 5);
  for (const char* label : {">O<", ">A<", ">B<", ">C<", ">P<"}) {
    REQUIRE(svg.find(label) != std::string::npos);
  }
  REQUIRE(svg.find("href") == std::string::npos);
}
