#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "orifold/emit.hpp"

namespace {

using namespace orifold;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

struct ObjData {
  std::vector<Vec3> vertices;
  std::size_t faces = 0;
};

ObjData parse_obj(const std::string& text) {
  ObjData d;
  for (const auto& line : lines_of(text)) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "v") {
      Vec3 v;
      in >> v.x >> v.y >> v.z;
      d.vertices.push_back(v);
    } else if (tag == "f") {
      ++d.faces;
    }
  }
  return d;
}

}  // namespace

TEST(FormatSig6, Digits) {
  EXPECT_EQ(format_sig6(0.0), "0.00000");
  EXPECT_EQ(format_sig6(1e-12), "0.00000");
  EXPECT_EQ(format_sig6(-1e-10), "0.00000");
  EXPECT_EQ(format_sig6(9.29760175829539), "9.29760");
  EXPECT_EQ(format_sig6(166.329631941278), "166.330");
  EXPECT_EQ(format_sig6(130.0), "130.000");
  EXPECT_EQ(format_sig6(0.0123456789), "0.0123457");
  EXPECT_EQ(format_sig6(-3.60040701334567), "-3.60041");
  EXPECT_EQ(format_sig6(1234567.0), "1234567");
}

TEST(SweepCsv, HeaderRowsAndPrecision) {
  const auto table = sweep(FoldParams{}, 130.0, 132.0, 1.0, {70.0});
  ASSERT_EQ(table.size(), 3u);
  const auto lines = lines_of(write_sweep_csv(table));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "beta_deg,theta_deg,h_mm,l_mm,w_mm");
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto cells = split(lines[k + 1]);
    ASSERT_EQ(cells.size(), 5u);
    const double values[] = {table[k].beta, table[k].theta, table[k].h, table[k].l, table[k].w};
    for (int c = 0; c < 5; ++c) {
      EXPECT_TRUE(orifold::test::rel_close(std::stod(cells[c]), values[c], 1e-5)) << cells[c];
    }
  }
}

TEST(SweepCsv, FlatHeightIsZero) {
  const auto lines = lines_of(write_sweep_csv(sweep(FoldParams{}, 175.0, 180.0, 5.0, {70.0})));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(split(lines[2])[2], "0.00000");
}

TEST(MeshObj, UnitCell) {
  FoldParams p;
  p.n = 1;
  p.m = 1;
  const std::string text = write_mesh_obj(folded_mesh(p, 130.0));
  const auto obj = parse_obj(text);
  EXPECT_EQ(obj.vertices.size(), 9u);
  EXPECT_EQ(obj.faces, 4u);
  EXPECT_NE(text.find("# units: mm"), std::string::npos);
  EXPECT_NE(text.find("f 1 "), std::string::npos);
}

TEST(MeshObj, FlatIsPlanar) {
  const auto obj = parse_obj(write_mesh_obj(folded_mesh(FoldParams{}, 180.0)));
  for (const auto& v : obj.vertices) EXPECT_EQ(v.z, obj.vertices.front().z);
}

TEST(MeshObj, ReparsedBoundingBoxMatchesDimensions) {
  const FoldParams p;
  const auto obj = parse_obj(write_mesh_obj(folded_mesh(p, 100.0)));
  Vec3 lo = obj.vertices.front(), hi = lo;
  for (const auto& v : obj.vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  const auto d = dimensions(p, 100.0);
  EXPECT_TRUE(orifold::test::rel_close(hi.x - lo.x, d.l, 1e-9));
  EXPECT_TRUE(orifold::test::rel_close(hi.y - lo.y, d.w, 1e-9));
  EXPECT_TRUE(orifold::test::rel_close(hi.z - lo.z, d.h, 1e-9));
}

TEST(CreaseSvg, PrototypeHolesAndViewBox) {
  const auto cp = crease_pattern(FoldParams{});
  const std::string svg = write_crease_svg(cp);
  EXPECT_EQ(count(svg, "<circle "), 96u);
  EXPECT_EQ(count(svg, "<path "), 48u);
  EXPECT_NE(svg.find("viewBox=\"0 0 " + detail::printf_string("%.4f", cp.length) + " " +
                     detail::printf_string("%.4f", cp.width) + "\""),
            std::string::npos);
  EXPECT_NE(svg.find("units: mm"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
}

TEST(CreaseSvg, UnitCellFacets) {
  FoldParams p;
  p.n = 1;
  p.m = 1;
  const std::string svg = write_crease_svg(crease_pattern(p));
  EXPECT_EQ(count(svg, "<path "), 4u);
  EXPECT_EQ(count(svg, "<circle "), 8u);
}

TEST(Emitters, Deterministic) {
  const FoldParams p;
  EXPECT_EQ(write_mesh_obj(folded_mesh(p, 110.0)), write_mesh_obj(folded_mesh(p, 110.0)));
  EXPECT_EQ(write_crease_svg(crease_pattern(p)), write_crease_svg(crease_pattern(p)));
  const auto t = sweep(p, 90.0, 180.0, 1.0, {45.0, 60.0, 70.0});
  EXPECT_EQ(write_sweep_csv(t), write_sweep_csv(t));
  const std::vector<double> angles{0.0, 30.0, 60.0, 90.0, 120.0};
  EXPECT_EQ(write_testbed_csv(simulate_testbed(TestbedConfig{}, ActuatorConfig{}, angles)),
            write_testbed_csv(simulate_testbed(TestbedConfig{}, ActuatorConfig{}, angles)));
}

TEST(TestbedCsv, OneRowPerLocation) {
  const auto maps = simulate_testbed(TestbedConfig{}, ActuatorConfig{}, {0.0, 120.0});
  const auto lines = lines_of(write_testbed_csv(maps));
  ASSERT_EQ(lines.size(), 17u);
  EXPECT_EQ(lines[0],
            "servo_deg,theta_deg,location,unit,connected,area_factor,force_n,height_mm,status");
  EXPECT_EQ(split(lines[1]).back(), "ok");
}

TEST(ActuationCsv, Fields) {
  const auto r = evaluate_actuation(ActuatorConfig{}, FoldParams{}, 0.0, MappingMode::Calibrated, 5.0);
  const auto lines = lines_of(write_actuation_csv(r));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1], "0.00000,calibrated,5.00000,130.000,0.00000,0.00000,9.62500,no");
}

TEST(Report, Sections) {
  ReportInputs in;
  in.config = SystemConfig{};
  in.sweep = sweep(FoldParams{}, 170.0, 180.0, 5.0, {70.0});
  in.force = ForceReport{130.0, LoadCase{}, vertical_force(LoadCase{}, FoldParams{}, 130.0)};
  in.testbed = simulate_testbed(TestbedConfig{}, ActuatorConfig{}, {0.0});
  in.latency.push_back({180.0, 5.0, 0.48});
  in.power.push_back({5.0, 9.625});
  in.power.push_back({8.4, 23.645});
  in.height = HeightReport{160.0, 10.0, 21.95};
  const std::string text = write_report(in);
  for (const char* s : {"[config]", "[sweep]", "[force]", "[testbed]", "[latency]", "[power]",
                        "[height]"}) {
    EXPECT_NE(text.find(s), std::string::npos) << s;
  }
  EXPECT_NE(text.find("5.0 V: 9.625 W (reference 9.625 W, deviation +0.00%)"), std::string::npos);
  EXPECT_NE(text.find("8.4 V: 23.645 W (reference 23.645 W, deviation +0.00%)"), std::string::npos);
  EXPECT_NE(text.find("rows: 3"), std::string::npos);
  EXPECT_EQ(text, write_report(in));
}
