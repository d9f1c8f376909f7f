#include "f4/tables.hpp"

namespace f4::tables {

namespace {

FieldScalar S(const char* text) { return FieldScalar::parse(text); }
OrbitLabel L(const char* text) { return OrbitLabel::parse(text); }

Point3 P(const char* x, const char* y, const char* z) { return Point3(S(x), S(y), S(z)); }
Point3 P(const char* factor, const char* x, const char* y, const char* z) {
  return P(x, y, z) * S(factor);
}

Quat Q(const char* a, const char* b, const char* c, const char* d) {
  return Quat(S(a), S(b), S(c), S(d));
}

// All sign choices of the nonzero entries of (a, b, c, d).
std::vector<Quat> signs(const Quat& base) {
  std::vector<Quat> out = {base};
  for (int i = 0; i < 4; ++i) {
    if (base[i].is_zero()) continue;
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      Quat q = out[k];
      q[i] = -q[i];
      out.push_back(q);
    }
  }
  return out;
}

std::vector<Quat> concat(std::initializer_list<std::vector<Quat>> parts) {
  std::vector<Quat> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Quat> with_real_sign(const std::vector<Quat>& qs, int sign) {
  std::vector<Quat> out;
  for (const Quat& q : qs) {
    if (q[0].sign() == sign) out.push_back(q);
  }
  return out;
}

FieldScalar r2() { return FieldScalar::sqrt2(); }
FieldScalar half() { return FieldScalar::fraction(1, 2); }

}  // namespace

std::array<std::array<SubsetName, 6>, 6> product_table() {
  using enum SubsetName;
  return {{
      {V0, Vplus, Vminus, V1, V2, V3},
      {Vplus, Vminus, V0, V3, V1, V2},
      {Vminus, V0, Vplus, V2, V3, V1},
      {V1, V2, V3, V0, Vplus, Vminus},
      {V2, V3, V1, Vminus, V0, Vplus},
      {V3, V1, V2, Vplus, Vminus, V0},
  }};
}

std::vector<FVectorRow> f_vectors() {
  return {
      {L("1,0,0,0"), {24, 96, 96, 24}, {{"octahedron", 24}}},
      {L("0,1,0,0"), {96, 288, 240, 48}, {{"cuboctahedron", 24}, {"cube", 24}}},
      {L("1,1,0,0"), {192, 384, 240, 48}, {{"truncated octahedron", 24}, {"cube", 24}}},
      {L("1,0,1,0"),
       {288, 864, 720, 144},
       {{"small rhombicuboctahedron", 24}, {"cuboctahedron", 24}, {"triangular prism", 96}}},
      {L("1,0,0,1"), {144, 576, 672, 240}, {{"octahedron", 48}, {"triangular prism", 192}}},
      {L("0,1,1,0"), {288, 576, 336, 48}, {{"truncated cube", 48}}},
      {L("1,1,1,0"),
       {576, 1152, 720, 144},
       {{"great rhombicuboctahedron", 24}, {"truncated cube", 24}, {"triangular prism", 96}}},
      {L("1,1,0,1"),
       {576, 1440, 1104, 240},
       {{"truncated octahedron", 24},
        {"small rhombicuboctahedron", 24},
        {"hexagonal prism", 96},
        {"triangular prism", 96}}},
      {L("1,1,1,1"),
       {1152, 2304, 1392, 240},
       {{"great rhombicuboctahedron", 48}, {"hexagonal prism", 192}}},
  };
}

std::vector<B4Row> b4_decompositions() {
  return {
      {L("0,0,0,1"), {L("0,1,0,0")}},
      {L("0,0,1,0"), {L("1,0,1,0")}},
      {L("0,0,1,1"), {L("1,1,1,0")}},
      {L("0,1,0,0"), {L("0,0,sqrt2,0"), L("sqrt2,0,0,1")}},
      {L("0,1,0,1"), {L("0,1,sqrt2,0"), L("sqrt2,1,0,1")}},
      {L("0,1,1,0"), {L("1,0,1+sqrt2,0"), L("1+sqrt2,0,1,1")}},
      {L("0,1,1,1"), {L("1,1,1+sqrt2,0"), L("1+sqrt2,1,1,1")}},
      {L("1,0,0,0"), {L("0,0,0,1"), L("sqrt2,0,0,0")}},
      {L("1,0,0,1"), {L("0,1,0,1"), L("sqrt2,1,0,0")}},
      {L("1,0,1,0"), {L("1,0,1,1"), L("1+sqrt2,0,1,0")}},
      {L("1,0,1,1"), {L("1,1,1,1"), L("1+sqrt2,1,1,0")}},
      {L("1,1,0,0"), {L("0,0,sqrt2,1"), L("sqrt2,0,0,2"), L("2sqrt2,0,0,1")}},
      {L("1,1,0,1"), {L("0,1,sqrt2,1"), L("sqrt2,1,0,2"), L("2sqrt2,1,0,1")}},
      {L("1,1,1,0"), {L("1,0,1+sqrt2,1"), L("1+sqrt2,0,1,2"), L("1+2sqrt2,0,1,1")}},
      {L("1,1,1,1"), {L("1,1,1+sqrt2,1"), L("1+sqrt2,1,1,2"), L("1+2sqrt2,1,1,1")}},
  };
}

std::vector<B3A1Row> b3a1_decompositions() {
  auto row = [](const char* f4, std::initializer_list<std::pair<const char*, const char*>> s) {
    B3A1Row out{L(f4), {}};
    for (auto [lab, h] : s) out.slices.push_back({L(lab), S(h)});
    return out;
  };
  return {
      row("0,0,0,1", {{"0,0,1", "1/sqrt2"}, {"0,1,0", "0"}}),
      row("0,0,1,0", {{"0,1,0", "sqrt2"}, {"0,1,1", "1/sqrt2"}, {"sqrt2,0,1", "0"}}),
      row("0,0,1,1",
          {{"0,1,1", "3/sqrt2"}, {"0,1,2", "sqrt2"}, {"0,2,1", "1/sqrt2"}, {"sqrt2,1,1", "0"}}),
      row("0,1,0,0",
          {{"0,sqrt2,0", "1"}, {"1,0,0", "3/2"}, {"1,0,sqrt2", "1/2"}, {"2,0,0", "0"}}),
      row("0,1,0,1", {{"0,sqrt2,1", "1+1/sqrt2"},
                      {"0,1+sqrt2,0", "1"},
                      {"1,0,1", "3/2+1/sqrt2"},
                      {"1,0,1+sqrt2", "1/2+1/sqrt2"},
                      {"1,1,sqrt2", "1/2"},
                      {"2,1,0", "0"}}),
      row("0,1,1,0", {{"0,1+sqrt2,0", "1+sqrt2"},
                      {"0,1+sqrt2,1", "1+1/sqrt2"},
                      {"1,1,0", "3/2+sqrt2"},
                      {"1,1,1+sqrt2", "1/2+1/sqrt2"},
                      {"1+sqrt2,0,1+sqrt2", "1/2"},
                      {"2+sqrt2,0,1", "0"}}),
      row("0,1,1,1", {{"0,1+sqrt2,1", "1+3/sqrt2"},
                      {"0,1+sqrt2,2", "1+sqrt2"},
                      {"0,2+sqrt2,1", "1+1/sqrt2"},
                      {"1,1,1", "3/2(1+sqrt2)"},
                      {"1,1,2+sqrt2", "1/2+sqrt2"},
                      {"1,2,1+sqrt2", "1/2+1/sqrt2"},
                      {"1+sqrt2,1,1+sqrt2", "1/2"},
                      {"2+sqrt2,1,1", "0"}}),
      row("1,0,0,0", {{"0,0,0", "1"}, {"0,0,sqrt2", "0"}, {"1,0,0", "1/2"}}),
      row("1,0,0,1", {{"0,0,1", "1+1/sqrt2"},
                      {"0,0,1+sqrt2", "1/sqrt2"},
                      {"0,1,sqrt2", "0"},
                      {"1,0,1", "1/2+1/sqrt2"},
                      {"1,1,0", "1/2"}}),
      row("1,0,1,0", {{"0,1,0", "1+sqrt2"},
                      {"0,1,1+sqrt2", "1/sqrt2"},
                      {"1,1,0", "1/2+sqrt2"},
                      {"1,1,1", "1/2+1/sqrt2"},
                      {"sqrt2,0,1+sqrt2", "0"},
                      {"1+sqrt2,0,1", "1/2"}}),
      row("1,0,1,1", {{"0,1,1", "1+3/sqrt2"},
                      {"0,1,2+sqrt2", "sqrt2"},
                      {"0,2,1+sqrt2", "1/sqrt2"},
                      {"1,1,1", "1/2+3/sqrt2"},
                      {"1,1,2", "1/2+sqrt2"},
                      {"1,2,1", "1/2+1/sqrt2"},
                      {"sqrt2,1,1+sqrt2", "0"},
                      {"1+sqrt2,1,1", "1/2"}}),
      row("1,1,0,0", {{"1,0,0", "5/2"},
                      {"1,0,2sqrt2", "1/2"},
                      {"1,sqrt2,0", "3/2"},
                      {"2,0,0", "2"},
                      {"2,0,sqrt2", "1"},
                      {"3,0,0", "1/2"}}),
      row("1,1,0,1", {{"1,0,1", "5/2+1/sqrt2"},
                      {"1,0,1+2sqrt2", "1/2+1/sqrt2"},
                      {"1,1,2sqrt2", "1/2"},
                      {"1,sqrt2,1", "3/2+1/sqrt2"},
                      {"1,1+sqrt2,0", "3/2"},
                      {"2,0,1", "2+1/sqrt2"},
                      {"2,0,1+sqrt2", "1+1/sqrt2"},
                      {"2,1,sqrt2", "1"},
                      {"3,1,0", "1/2"}}),
      row("1,1,1,0", {{"1,1,0", "5/2+sqrt2"},
                      {"1,1,1+2sqrt2", "1/2+1/sqrt2"},
                      {"1,1+sqrt2,0", "3/2+sqrt2"},
                      {"1,1+sqrt2,1", "3/2+1/sqrt2"},
                      {"2,1,0", "2+sqrt2"},
                      {"2,1,1+sqrt2", "1+1/sqrt2"},
                      {"1+sqrt2,0,1+2sqrt2", "1/2"},
                      {"2+sqrt2,0,1+sqrt2", "1"},
                      {"3+sqrt2,0,1", "1/2"}}),
      row("1,1,1,1", {{"1,1,1", "5/2+3/sqrt2"},
                      {"1,1,2(1+sqrt2)", "1/2+sqrt2"},
                      {"1,2,1+2sqrt2", "1/2+1/sqrt2"},
                      {"1,1+sqrt2,1", "3/2(1+sqrt2)"},
                      {"1,1+sqrt2,2", "3/2+sqrt2"},
                      {"1,2+sqrt2,1", "3/2+1/sqrt2"},
                      {"2,1,1", "2+3/sqrt2"},
                      {"2,1,2+sqrt2", "1+sqrt2"},
                      {"2,2,1+sqrt2", "1+1/sqrt2"},
                      {"1+sqrt2,1,1+2sqrt2", "1/2"},
                      {"2+sqrt2,1,1+sqrt2", "1"},
                      {"3+sqrt2,1,1", "1/2"}}),
  };
}

std::array<OrbitLabel, 3> b4_formula(const OrbitLabel& a) {
  const FieldScalar s = r2();
  return {OrbitLabel{s * a[0] + s * a[1] + a[2], a[3], a[2], a[1]},
          OrbitLabel{a[2], a[3], s * a[1] + a[2], a[0]},
          OrbitLabel{s * a[1] + a[2], a[3], a[2], a[0] + a[1]}};
}

std::vector<SliceFormula> b3a1_formula() {
  using A = const OrbitLabel&;
  const FieldScalar s = r2();
  const FieldScalar h = half();
  const FieldScalar is = FieldScalar(1) / s;
  std::vector<SliceFormula> out = {
      {[](A a) { return OrbitLabel{a[1], a[2], a[3]}; },
       [=](A a) { return a[0] + FieldScalar::fraction(3, 2) * a[1] + (2 * a[2] + a[3]) * is; }},
      {[=](A a) { return OrbitLabel{a[1], a[2], s * a[0] + s * a[1] + a[2] + a[3]}; },
       [=](A a) { return h * a[1] + (a[2] + a[3]) * is; }},
      {[=](A a) { return OrbitLabel{a[1], a[2] + a[3], s * a[0] + s * a[1] + a[2]}; },
       [=](A a) { return h * a[1] + a[2] * is; }},
      {[=](A a) { return OrbitLabel{a[1] + s * a[2], a[3], s * a[0] + s * a[1] + a[2]}; },
       [=](A a) { return h * a[1]; }},
      {[=](A a) { return OrbitLabel{a[0] + 2 * a[1] + s * a[2], a[3], a[2]}; },
       [=](A a) { return h * a[0]; }},
      {[](A a) { return OrbitLabel{a[0] + a[1], a[2], a[3]}; },
       [=](A a) { return h * a[0] + 3 * a[1] + 2 * s * a[2] + s * a[3]; }},
      {[=](A a) { return OrbitLabel{a[0] + a[1], a[2], s * a[1] + a[2] + a[3]}; },
       [=](A a) { return h * (a[0] + a[1] + s * a[2] + s * a[3]); }},
      {[=](A a) { return OrbitLabel{a[0] + a[1], a[2] + a[3], s * a[1] + a[2]}; },
       [=](A a) { return h * (a[0] + a[1] + s * a[2]); }},
      {[=](A a) { return OrbitLabel{h * (a[0] + a[1] + s * a[2]), a[3], s * a[1] + a[2]}; },
       [=](A a) { return h * (a[0] + a[1]); }},
      {[=](A a) { return OrbitLabel{a[0], s * a[1] + a[2], a[3]}; },
       [=](A a) { return h * a[0] + a[1] + (2 * a[2] + a[3]) * is; }},
      {[=](A a) { return OrbitLabel{a[0], s * a[1] + a[2] + a[3], a[2]}; },
       [=](A a) { return h * a[0] + a[1] + a[2] * is; }},
      {[=](A a) { return OrbitLabel{a[0], s * a[1] + a[2], a[2] + a[3]}; },
       [=](A a) { return h * (a[0] + 2 * a[1] + s * a[2] + s * a[3]); }},
  };
  // Sixth family: the height coefficients of a2, a3, a4 are doubled in print.
  out[5].corrected_height = [=](A a) {
    return h * a[0] + FieldScalar::fraction(3, 2) * a[1] + s * a[2] + is * a[3];
  };
  // Ninth family: the first label carries a stray factor 1/2 in print (unbalanced brackets).
  out[8].corrected_label = [=](A a) {
    return OrbitLabel{a[0] + a[1] + s * a[2], a[3], s * a[1] + a[2]};
  };
  return out;
}

std::vector<std::vector<Quat>> t_slices() {
  const auto cube = signs(Q("1/2", "1/2", "1/2", "1/2"));
  return {
      signs(Q("1", "0", "0", "0")),
      concat({signs(Q("0", "1", "0", "0")), signs(Q("0", "0", "1", "0")),
              signs(Q("0", "0", "0", "1"))}),
      with_real_sign(cube, 1),
      with_real_sign(cube, -1),
  };
}

std::vector<std::vector<Quat>> t_prime_slices() {
  const char* c = "1/sqrt2";
  const auto poles = concat(
      {signs(Q(c, c, "0", "0")), signs(Q(c, "0", c, "0")), signs(Q(c, "0", "0", c))});
  return {
      with_real_sign(poles, 1),
      with_real_sign(poles, -1),
      concat({signs(Q("0", c, c, "0")), signs(Q("0", "0", c, c)), signs(Q("0", c, "0", c))}),
  };
}

std::vector<OctahedronRow> octahedra_at_one() {
  std::vector<OctahedronRow> out;
  for (int i = 1; i <= 3; ++i) {
    for (int sign : {1, -1}) {
      OctahedronRow row;
      row.vertices.push_back(Quat::identity());
      row.vertices.push_back(Quat::unit(i) * FieldScalar(sign));
      for (int a : {1, -1}) {
        for (int b : {1, -1}) {
          Quat q(half(), 0, 0, 0);
          int k = 0;
          for (int j = 1; j <= 3; ++j) {
            q[j] = j == i ? half() * sign : half() * (k++ == 0 ? a : b);
          }
          row.vertices.push_back(q);
        }
      }
      row.center = Quat::identity() + Quat::unit(i) * FieldScalar(sign);
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<ScaleRow> dual_scales() {
  return {
      {L("1,0,0,0"), {}},
      {L("0,1,0,0"), {{0, S("2sqrt2/3")}}},
      {L("1,1,0,0"), {{0, S("3sqrt2/5")}}},
      {L("1,0,1,0"), {{3, S("(1+9sqrt2)/7")}, {0, S("(5-sqrt2)/2")}}},
      {L("1,0,0,1"), {{0, S("(2+sqrt2)/2")}, {3, S("(2+sqrt2)/2")}}},
      {L("0,1,1,0"), {}},
      {L("1,1,1,0"), {{0, S("3(1+3sqrt2)/17")}, {1, S("3(1+sqrt2)/(9+4sqrt2)")}}},
      {L("1,1,0,1"),
       {{3, S("(3+6sqrt2)/(2+3sqrt2)")},
        {0, S("(3+6sqrt2)/(5+sqrt2)")},
        {1, S("(3+6sqrt2)/(9+2sqrt2)")}}},
      {L("1,1,1,1"), {{1, S("(5+3sqrt2)/(9+6sqrt2)")}, {2, S("(5+3sqrt2)/(9+6sqrt2)")}}},
  };
}

std::vector<CellTable> dual_cells() {
  std::vector<CellTable> out;
  out.push_back({L("0,1,0,0"),
                 {{"w4", P("1", "0", "-1"), {}},
                  {"r3r4w4", P("-1", "1", "0"), {}},
                  {"r4r3w4", P("0", "-1", "1"), {}},
                  {"lambda w1", P("-2/3", "1", "1", "1"), {}},
                  {"lambda r1w1", P("2/3", "1", "1", "1"), {}}},
                 std::pair{Q("3", "1", "1", "1"), S("12")}});
  out.push_back({L("1,1,0,0"),
                 {{"w4", P("4", "0", "-2"), {}},
                  {"r3r4w4", P("0", "-2", "4"), {}},
                  {"r4r3w4", P("-2", "4", "0"), {}},
                  {"lambda w1", P("-6/5", "1", "1", "1"), {}}},
                 std::pair{Q("5", "1", "1", "1"), S("28")}});
  out.push_back({L("1,0,1,0"),
                 {{"lambda w4", P("(1+9sqrt2)/7", "1+sqrt2", "-1", "-1"), {}},
                  {"lambda r4w4", P("(1+9sqrt2)/7", "-1", "1+sqrt2", "1"), {}},
                  {"rho w1", P("(2-5sqrt2)/2", "1", "1", "0"), {}},
                  {"w2", P("1", "1-sqrt2", "1+sqrt2"), {}},
                  {"r2w2", P("1-sqrt2", "1", "-(1+sqrt2)"), {}}},
                 std::pair{Q("2+sqrt2", "1", "1", "0"), S("8+2sqrt2")}});
  out.push_back({L("1,0,0,1"),
                 {{"lambda w1", P("-1", "0", "0"), {}},
                  {"lambda w4", P("1", "0", "0"), {}},
                  {"w2", P("2sqrt2-3", "sqrt2-1", "1"), {}},
                  {"r2r3w2", P("2sqrt2-3", "1", "sqrt2-1"), P("2sqrt2-3", "1", "1-sqrt2")},
                  {"(r2r3)^2w2", P("2sqrt2-3", "sqrt2-1", "-1"), P("2sqrt2-3", "1-sqrt2", "-1")},
                  {"(r2r3)^3w2", P("2sqrt2-3", "-1", "sqrt2-1"), {}},
                  {"w3", P("3-2sqrt2", "1", "sqrt2-1"), {}},
                  {"r2r3w3", P("3-2sqrt2", "sqrt2-1", "-1"), {}},
                  {"(r2r3)^2w3", P("3-2sqrt2", "-1", "-(sqrt2-1)"), {}},
                  {"(r2r3)^3w3", P("3-2sqrt2", "-(sqrt2-1)", "1"), {}}},
                 {}});
  out.push_back({L("0,1,1,0"),
                 {{"w1", P("-(1+sqrt2)", "-(1+sqrt2)", "-1"), {}},
                  {"r1w1", P("1+sqrt2", "1", "1+sqrt2"), {}},
                  {"w4", P("1+sqrt2", "-1", "-(1+sqrt2)"), {}},
                  {"r4w4", P("-(1+sqrt2)", "1+sqrt2", "1"), {}}},
                 {}});
  out.push_back({L("1,1,1,0"),
                 {{"lambda w1", P("-3(8+7sqrt2)/17", "-3(8+7sqrt2)/17", "-3(6+sqrt2)/17"), {}},
                  {"rho w2", P("3/(9+4sqrt2)", "2+sqrt2", "2+sqrt2", "4+3sqrt2"),
                   P("3/(9+4sqrt2)", "2+sqrt2", "-sqrt2", "4+3sqrt2")},
                  {"w4", P("4+sqrt2", "-sqrt2", "-(2+sqrt2)"), {}},
                  {"r4w4", P("-(2+sqrt2)", "4+sqrt2", "sqrt2"), {}}},
                 {}});
  out.push_back({L("1,1,0,1"),
                 {{"rho w1", P("-3/(5+sqrt2)", "6+5sqrt2", "4+sqrt2", "4+sqrt2"), {}},
                  {"eta w2", P("6(1+2sqrt2)/(4+9sqrt2)", "1-sqrt2", "1", "1+sqrt2"), {}},
                  {"lambda w4",
                   P("12(1+2sqrt2)/(2+3sqrt2)", "0", "-6(1+2sqrt2)/(2+3sqrt2)"), {}},
                  {"w3", P("2-sqrt2", "4+sqrt2", "-2+sqrt2"), {}},
                  {"r3w3", P("4-sqrt2", "-(2+sqrt2)", "2+sqrt2"), {}}},
                 {}});
  out.push_back({L("1,1,1,1"),
                 {{"w1", P("-(4+sqrt2)", "-(2+sqrt2)", "-sqrt2"), {}},
                  {"w4", P("4+sqrt2", "-sqrt2", "-(2+sqrt2)"), {}},
                  {"rho w2", P("(5+3sqrt2)/(9+6sqrt2)", "sqrt2-2", "sqrt2-2", "sqrt2+4"), {}},
                  {"rho w3", P("(5+3sqrt2)/(9+6sqrt2)", "2-sqrt2", "sqrt2+4", "sqrt2-2"), {}}},
                 {}});
  return out;
}

std::vector<RadiusRow> dual_radii() {
  return {
      {L("1,0,1,0"), {{0, 2.536}, {1, 2.450}, {3, 2.774}}, 1e-3},
      {L("1,0,0,1"), {{0, 2.414}, {1, 2.449}, {2, 2.449}, {3, 2.414}}, 1e-3},
      {L("1,1,1,0"), {{0, 1.31}, {1, 1.21}, {3, 1.41}}, 1e-2},
  };
}

FieldScalar bipyramid_radius_ratio() { return S("3/(2sqrt2)"); }

Kite trapezohedron_kite() { return {S("16-10sqrt2"), S("80-56sqrt2"), 0.934, 1e-3}; }

std::vector<Erratum> errata() {
  return {
      {"24-cell face count in the worked count",
       "240 faces",
       "96 faces",
       "the same passage derives 96 triangles as |W(F4)| / |<r1,r2,r4>|; Euler with (24, 96, F, 24) "
       "forces F = 96"},
      {"generic B3 x A1 branching, sixth slice family, height",
       "a1/2 + 3a2 + 2sqrt2 a3 + sqrt2 a4",
       "a1/2 + 3a2/2 + sqrt2 a3 + a4/sqrt2",
       "the printed pair violates 2h^2 + |slice vector|^2 = |Lambda|^2"},
      {"generic B3 x A1 branching, ninth slice family, first label",
       "(a1 + a2 + sqrt2 a3)/2 with unbalanced brackets",
       "a1 + a2 + sqrt2 a3",
       "the printed pair violates 2h^2 + |slice vector|^2 = |Lambda|^2"},
      {"dual cell of (1,0,1,0), frame normalizer",
       "|w1 + w3| = sqrt(8 + 2sqrt2) for w1 + w3 = 2 + sqrt2 + e1 + e2",
       "|2 + sqrt2 + e1 + e2|^2 = 8 + 4sqrt2",
       "direct expansion of the printed quaternion"},
      {"dual cell of (1,0,0,1), rows r2r3w2 and (r2r3)^2w2",
       "(2sqrt2-3, 1, sqrt2-1) and (2sqrt2-3, sqrt2-1, -1)",
       "(2sqrt2-3, 1, 1-sqrt2) and (2sqrt2-3, 1-sqrt2, -1)",
       "the four printed w2 rows do not sum to a multiple of p1, so they are not an orbit of the "
       "fourfold rotation r2r3 about the p1 axis"},
      {"dual cell of (1,1,1,0), row rho w2",
       "3/(9+4sqrt2) [(2+sqrt2), (2+sqrt2), (4+3sqrt2)]",
       "3/(9+4sqrt2) [(2+sqrt2), -sqrt2, (4+3sqrt2)]",
       "with the scale fixed by the other three rows, the printed row lies off the hyperplane "
       "shared by all cell vertices (its squared length differs from that of rho w2)"},
      {"dual cell of (1,0,0,1), kite area",
       "0.934",
       "1.0420 in the true length unit (1.2208 in the unit of the printed coordinates)",
       "the kite sides reproduce exactly, the kites are planar, and no vertex choice from the "
       "printed rows yields 0.934; left as an open failure"},
  };
}

}  // namespace f4::tables
