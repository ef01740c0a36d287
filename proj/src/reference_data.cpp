#include "s4bell/reference_data.hpp"

#include <cctype>
#include <cmath>

#include "s4bell/errors.hpp"

namespace s4bell::reference {

namespace {

const double r2 = std::sqrt(2.0);
const double r3 = std::sqrt(3.0);
const double r6 = std::sqrt(6.0);
const double r8 = std::sqrt(8.0);

Eigen::Matrix3d mat3(double a, double b, double c, double d, double e, double f, double g, double h, double i) {
  Eigen::Matrix3d m;
  m << a, b, c, d, e, f, g, h, i;
  return m;
}

std::array<std::array<Eigen::Vector3d, 3>, 8> build_orbit_table() {
  std::array<std::array<Eigen::Vector3d, 3>, 8> x;
  x[0][0] = {r3 / 3, r3 / 3, -r3 / 3};
  x[0][1] = {r3 / 3, (1 - r3 / 3) / 2, (1 + r3 / 3) / 2};
  x[0][2] = {r3 / 3, -(1 + r3 / 3) / 2, -(1 - r3 / 3) / 2};

  x[1][0] = {(-3 * r2 - r3 - r6) / 9, (-3 + 5 * r3 - 2 * r6) / 18, (-1 - 2 * r2 + r3) / 6};
  x[1][1] = {(-r3 + 2 * r6) / 9, (9 - r3 - 2 * r6) / 18, -(1 + 2 * r2 + r3) / 6};
  x[1][2] = {(3 * r2 - r3 - r6) / 9, -(3 + 2 * r3 + r6) / 9, (1 - r2) / 3};

  x[2][0] = {(3 * r2 - r3 - r6) / 9, (3 + 5 * r3 - 2 * r6) / 18, (1 + 2 * r2 + r3) / 6};
  x[2][1] = {(-r3 + 2 * r6) / 9, -(9 + r3 + 2 * r6) / 18, (1 + 2 * r2 - r3) / 6};
  x[2][2] = {-(3 * r2 + r3 + r6) / 9, (3 - 2 * r3 - r6) / 9, (-1 + r2) / 3};

  x[3][0] = {(3 * r2 - r3 - r6) / 9, (3 - r3 + 4 * r6) / 18, (3 + r3) / 6};
  x[3][1] = {(-r3 + 2 * r6) / 9, (r3 + 2 * r6) / 9, -r3 / 3};
  x[3][2] = {-(3 * r2 + r3 + r6) / 9, (-3 - r3 + 4 * r6) / 18, (-3 + r3) / 6};

  x[4][0] = {(-r3 + 2 * r6) / 9, (9 - r3 - 2 * r6) / 18, (1 + 2 * r2 + r3) / 6};
  x[4][1] = {-(3 * r2 + r3 + r6) / 9, (-3 + 5 * r3 - 2 * r6) / 18, (1 + 2 * r2 - r3) / 6};
  x[4][2] = {(3 * r2 - r3 - r6) / 9, -(3 + 2 * r3 + r6) / 9, (-1 + r2) / 3};

  x[5][0] = {-(3 * r2 + r3 + r6) / 9, (-3 - r3 + 4 * r6) / 18, (3 - r3) / 6};
  x[5][1] = {(3 * r2 - r3 - r6) / 9, (3 - r3 + 4 * r6) / 18, -(3 + r3) / 6};
  x[5][2] = {(-r3 + 2 * r6) / 9, (r3 + 2 * r6) / 9, r3 / 3};

  x[6][0] = {(3 * r2 - r3 - r6) / 9, (3 + 5 * r3 - 2 * r6) / 18, -(1 + 2 * r2 + r3) / 6};
  x[6][1] = {(-r3 + 2 * r6) / 9, -(9 + r3 + 2 * r6) / 18, (-1 - 2 * r2 + r3) / 6};
  x[6][2] = {-(3 * r2 + r3 + r6) / 9, (3 - 2 * r3 - r6) / 9, (1 - r2) / 3};

  x[7][0] = {r3 / 3, -(1 + r3 / 3) / 2, (1 - r3 / 3) / 2};
  x[7][1] = {r3 / 3, (1 - r3 / 3) / 2, -(1 + r3 / 3) / 2};
  x[7][2] = {r3 / 3, r3 / 3, r3 / 3};
  return x;
}

constexpr std::string_view kExampleOneTerms =
    "1041 1150 1271 2042 2181 2252 3040 3180 3272 4030 4110 4220 "
    "5011 5160 5222 6051 6170 6282 7061 7112 7232 8031 8121 8262 "
    "1070 1140 1252 2051 2141 2280 3082 3171 3242 4011 4121 4232 "
    "5062 5120 5212 6072 6181 6250 7010 7131 7260 8022 8161 8230 "
    "1051 1172 1242 2082 2150 2240 3070 3141 3281 4022 4131 4212 "
    "5021 5110 5261 6080 6152 6271 7030 7162 7211 8060 8132 8220";

constexpr std::string_view kExampleTwoTerms =
    "1032 1120 1260 2011 2130 2262 3021 3161 3210 4071 4152 4280 "
    "5070 5181 5241 6012 6131 6222 7050 7140 7282 8042 8151 8272 "
    "1061 1130 1222 2060 2110 2231 3062 3112 3220 4050 4181 4272 "
    "5082 5142 5271 6032 6121 6211 7041 7180 7251 8052 8170 8240 "
    "1010 1111 1212 2020 2121 2222 3030 3131 3232 4040 4141 4242 "
    "5050 5151 5252 6060 6161 6262 7070 7171 7272 8080 8181 8282";

constexpr std::string_view kExampleThreeTerms =
    "1052 1170 1240 2080 2151 2241 3071 3142 3282 4021 4132 4211 "
    "5020 5112 5262 6081 6150 6272 7031 7160 7210 8061 8130 8222 "
    "1041 1150 1271 2042 2181 2252 3040 3180 3272 4030 4110 4220 "
    "5011 5160 5222 6051 6170 6282 7061 7112 7232 8031 8121 8262 "
    "1081 1182 1280 2072 2170 2271 3050 3152 3251 4062 4161 4260 "
    "5030 5132 5231 6042 6141 6240 7021 7122 7220 8012 8110 8211";

}  // namespace

const std::array<TranspositionMatrix, 6>& transposition_matrices() {
  static const std::array<TranspositionMatrix, 6> table{{
      {1, 2, mat3(1, 0, 0, 0, 1, 0, 0, 0, -1)},
      {1, 3, mat3(1, 0, 0, 0, -0.5, -r3 / 2, 0, -r3 / 2, 0.5)},
      {1, 4, mat3(-1.0 / 3, -r2 / 3, -r6 / 3, -r2 / 3, 5.0 / 6, -r3 / 6, -r6 / 3, -r3 / 6, 0.5)},
      {2, 3, mat3(1, 0, 0, 0, -0.5, r3 / 2, 0, r3 / 2, 0.5)},
      {2, 4, mat3(-1.0 / 3, -r2 / 3, r6 / 3, -r2 / 3, 5.0 / 6, r3 / 6, r6 / 3, r3 / 6, 0.5)},
      {3, 4, mat3(-1.0 / 3, r8 / 3, 0, r8 / 3, 1.0 / 3, 0, 0, 0, 1)},
  }};
  return table;
}

const Eigen::Matrix3d& transposition_matrix(int i, int j) {
  if (i > j) std::swap(i, j);
  for (const auto& t : transposition_matrices())
    if (t.i == i && t.j == j) return t.matrix;
  throw Error("no bundled matrix for transposition (" + std::to_string(i) + " " + std::to_string(j) + ")");
}

const Eigen::Matrix<double, 9, 9>& change_of_basis() {
  static const Eigen::Matrix<double, 9, 9> c = [] {
    const double s6 = 1 / r6, s3 = 1 / r3, s2 = 1 / r2;
    Eigen::Matrix<double, 9, 9> m;
    m << std::sqrt(2.0 / 3), 0, 0, 0, -s6, 0, 0, 0, -s6,  //
        0, -s6, 0, -s6, s3, 0, 0, 0, -s3,                 //
        0, 0, -s6, 0, 0, -s3, -s6, -s3, 0,                //
        0, s2, 0, -s2, 0, 0, 0, 0, 0,                     //
        0, 0, s2, 0, 0, 0, -s2, 0, 0,                     //
        0, 0, 0, 0, 0, s2, 0, -s2, 0,                     //
        0, s3, 0, s3, s6, 0, 0, 0, -s6,                   //
        0, 0, s3, 0, 0, -s6, s3, -s6, 0,                  //
        s3, 0, 0, 0, s3, 0, 0, 0, s3;
    return m;
  }();
  return c;
}

const Eigen::Vector3d& orbit_vector(const OrbitLabel& label) {
  static const auto table = build_orbit_table();
  if (label.basis < 1 || label.basis > 8 || label.outcome < 0 || label.outcome > 2)
    throw Error("orbit label out of range: " + to_string(label));
  return table[static_cast<std::size_t>(label.basis - 1)][static_cast<std::size_t>(label.outcome)];
}

const std::array<Eigen::Vector3d, 4>& tetrahedron_vertices() {
  static const std::array<Eigen::Vector3d, 4> v{{
      {-1.0 / 3, -r2 / 3, -r6 / 3},
      {-1.0 / 3, -r2 / 3, r6 / 3},
      {-1.0 / 3, r8 / 3, 0},
      {1, 0, 0},
  }};
  return v;
}

const std::array<Example, 3>& examples() {
  static const std::array<Example, 3> table{{
      {"I",
       "x01:x14,x01:x07,x01:x15",
       {7.40, 4.57, 4.12},
       16.09,
       16,
       {12960, 159408, 645408, 1729188, 3479760, 5424408, 6896016, 7261569, 6410016, 4866480, 3176496, 1758348,
        808704, 311040, 90720, 15876, 0, 0, 0, 0},
       kExampleOneTerms},
      {"II",
       "x01:x23,x01:x16,x01:x01",
       {5.21, 5.30, 8.00},
       18.51,
       18,
       {9720, 126576, 510480, 1514862, 3182904, 5374584, 7139664, 7822791, 6903648, 5058216, 3006000, 1506186,
        613800, 208008, 55584, 11673, 1656, 144, 0, 0},
       kExampleTwoTerms},
      {"III",
       "x01:x25,x01:x14,x01:x18",
       {3.35, 7.40, 6.63},
       17.38,
       16,
       {18360, 115596, 474696, 1445778, 3286224, 5510160, 7178976, 7670547, 6795936, 5012208, 3087504, 1567458,
        638280, 196812, 41400, 4761, 0, 0, 0, 0},
       kExampleThreeTerms},
  }};
  return table;
}

std::vector<ProbabilityTerm> parse_terms(std::string_view digits) {
  std::vector<ProbabilityTerm> terms;
  std::size_t pos = 0;
  while (pos < digits.size()) {
    if (std::isspace(static_cast<unsigned char>(digits[pos]))) {
      ++pos;
      continue;
    }
    if (pos + 4 > digits.size()) throw Error("truncated term list");
    int d[4];
    for (int k = 0; k < 4; ++k) {
      const char c = digits[pos + static_cast<std::size_t>(k)];
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("non-digit in term list");
      d[k] = c - '0';
    }
    terms.push_back({d[0], d[1], d[2], d[3]});
    pos += 4;
  }
  return terms;
}

const std::vector<WinningRow>& example_one_winning_table() {
  static const std::vector<WinningRow> rows{
      {1, 4, {"01", "10", "22"}}, {1, 5, {"01", "10", "22"}}, {1, 7, {"00", "12", "21"}},
      {2, 4, {"02", "11", "20"}}, {2, 5, {"01", "10", "22"}}, {2, 8, {"02", "11", "20"}},
      {3, 4, {"00", "11", "22"}}, {3, 7, {"00", "11", "22"}}, {3, 8, {"02", "10", "21"}},
      {4, 1, {"01", "10", "22"}}, {4, 2, {"02", "11", "20"}}, {4, 3, {"00", "11", "22"}},
      {5, 1, {"01", "10", "22"}}, {5, 2, {"01", "10", "22"}}, {5, 6, {"02", "10", "21"}},
      {6, 5, {"01", "12", "20"}}, {6, 7, {"02", "10", "21"}}, {6, 8, {"00", "11", "22"}},
      {7, 1, {"00", "12", "21"}}, {7, 3, {"00", "11", "22"}}, {7, 6, {"01", "12", "20"}},
      {8, 2, {"02", "11", "20"}}, {8, 3, {"01", "12", "20"}}, {8, 6, {"00", "11", "22"}},
  };
  return rows;
}

}  // namespace s4bell::reference
