#ifndef LRBT_TESTS_SUPPORT_EXAMPLE_SYSTEM_HPP
#define LRBT_TESTS_SUPPORT_EXAMPLE_SYSTEM_HPP

// 8th-order, 3-input, 2-output descriptor test system and reference values
// printed for it to 4 decimals. The system matrices themselves are given to
// 4 decimals only, so values recomputed from them differ from the reference
// values at the 1e-3 level in the directions sensitive to the slow pole
// near -0.0194.

#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "lrbt/model.hpp"

namespace lrbt::testing {

inline Eigen::MatrixXd from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline const Eigen::MatrixXd& example_E() {
  static const Eigen::MatrixXd m = from_rows({
      {0.1926, 0.6769, 0.3832, 0.2205, 0.3438, 0.3201, -0.1136, -0.1047},
      {0.6233, -0.2939, -0.0498, -0.148, 0.318, 0.2294, -0.0479, 0.2938},
      {0.3627, 0.3152, 0.3227, -0.1538, -0.6426, -0.3885, -0.1011, 0.1338},
      {-0.2109, -0.273, 0.2535, 0.6097, -0.2312, 0.0855, 0.1367, -0.1491},
      {-0.1163, -0.0004, -0.075, -0.5572, -0.3071, 0.5018, -0.1349, -0.4473},
      {-0.0921, 0.0343, 0.4109, -0.2228, 0.1765, 0.0255, 0.5661, -0.2781},
      {0.384, 0.1811, -0.5404, 0.2717, -0.0085, -0.1855, 0.0754, -0.6157},
      {0.0115, -0.0568, 0.0827, -0.3002, 0.3121, -0.5534, 0.2686, -0.1624}});
  return m;
}

inline const Eigen::MatrixXd& example_A() {
  static const Eigen::MatrixXd m = from_rows({
      {0.1862, -0.5917, -0.165, -0.9115, -0.7093, -0.2857, 0.3976, -0.2267},
      {-0.1292, 0.2346, 0.0235, 0.221, 0.0896, -0.0648, -0.1632, 0.1099},
      {-1.0098, -0.2598, -0.1364, -0.68, 1.6082, 1.1541, 0.0975, -0.2698},
      {-0.3744, -0.251, -0.0262, -1.0588, 0.2506, 0.2385, 0.1537, -0.1218},
      {0.3892, 0.4394, 0.3248, 1.4637, -0.2898, -0.5814, -0.3081, 0.5925},
      {0.3352, 0.4726, -0.7287, 1.347, -0.6593, -0.6707, -1.6304, 1.1902},
      {-0.4746, -0.4897, 0.9502, -1.1089, 0.2394, -0.66, 0.159, 0.7444},
      {0.3554, 0.4451, -0.8086, 1.0669, -0.2288, 1.0456, 0.1129, -0.2125}});
  return m;
}

inline const Eigen::MatrixXd& example_B() {
  static const Eigen::MatrixXd m = from_rows({
      {-1.7673, -0.5417, 1.4269},
      {1.2705, 0.2508, 0.6108},
      {-0.0455, -0.2633, 2.458},
      {0.2551, 0.3691, -0.8544},
      {0.3367, -0.3287, -0.0206},
      {0.5722, -0.9936, 0.7582},
      {-0.9008, 1.3205, -0.147},
      {0.6285, -0.7686, 0.4623}});
  return m;
}

inline const Eigen::MatrixXd& example_C() {
  static const Eigen::MatrixXd m = from_rows({
      {1.4466, -1.0413, -0.1511, -0.7822, 1.1399, 1.0843, 0.1865, 0.3566},
      {0.4855, 1.4606, 0.7186, 0.9876, 1.4261, 0.9412, -0.5588, 0.1842}});
  return m;
}

inline DescriptorSystem example_system() {
  return DescriptorSystem{example_E().cast<Complex>(), example_A().cast<Complex>(),
                          example_B().cast<Complex>(), example_C().cast<Complex>()};
}

inline const std::vector<Complex> kExampleAlphas{-2.3710, -1.1434};
inline const std::vector<Complex> kExampleBetas{-0.0195, -0.1543, -0.3513};

inline const std::vector<double> kReferenceHsv{24.3760, 6.4380, 4.6620, 0.5519,
                                               0.0985,  0.0677, 0.0309, 0.0035};
inline const std::vector<double> kReferenceRomHsv{24.5142, 7.6744, 4.6724};


inline const Eigen::MatrixXd& reference_zp() {
  static const Eigen::MatrixXd m = from_rows({
      {6.2341, 0.0},
      {-4.0565, 1.5122}});
  return m;
}

inline const Eigen::MatrixXd& reference_zq() {
  static const Eigen::MatrixXd m = from_rows({
      {0.2845, 0.0, 0.0},
      {-1.1603, 1.4257, 0.0},
      {1.0733, -1.9813, 0.8382}});
  return m;
}

inline const Eigen::MatrixXd& reference_interim_E() {
  static const Eigen::MatrixXd m = from_rows({
      {3.241, 5.9157, 2.3298, 4.6802, 11.5376, 23.5839},
      {2.3794, 4.3492, 0.6151, 1.1577, 3.5783, 7.3878},
      {1.6852, 3.069, 0.384, 0.7034, 1.7411, 3.6508},
      {-0.8992, -1.4181, -0.7641, -1.3203, 8.2411, 16.1562},
      {-0.8005, -1.2676, -0.8065, -1.491, 4.101, 7.9563},
      {-0.6781, -1.0716, -0.5696, -1.0573, 2.5235, 4.893}});
  return m;
}

inline const Eigen::MatrixXd& reference_interim_A() {
  static const Eigen::MatrixXd m = from_rows({
      {-1.251, -2.1715, -0.1693, -0.3418, -0.2364, -0.6261},
      {-0.947, -1.6157, -0.1198, -0.2544, 0.0908, 0.0539},
      {-0.7221, -1.2087, -0.0798, -0.186, 0.1503, 0.1965},
      {1.0834, 1.594, 0.3218, 0.6239, -0.9583, -2.025},
      {0.9774, 1.426, 0.2123, 0.4196, -0.4862, -1.1124},
      {0.8627, 1.2451, 0.1366, 0.2782, -0.2325, -0.6211}});
  return m;
}

inline const Eigen::MatrixXd& reference_interim_B() {
  static const Eigen::MatrixXd m = from_rows({
      {8.9354, 5.6931, 27.5919},
      {6.5887, 1.5782, 8.3933},
      {4.7178, 0.9902, 3.9778},
      {-3.2154, -2.1335, 20.498},
      {-2.8754, -2.1244, 10.2096},
      {-2.4704, -1.4871, 6.2158}});
  return m;
}

inline const Eigen::MatrixXd& reference_interim_C() {
  static const Eigen::MatrixXd m = from_rows({
      {1.3142, 2.2868, 0.2147, 0.4331, 0.4614, 1.086},
      {-1.1009, -1.6216, -0.3367, -0.6497, 1.119, 2.34}});
  return m;
}

inline const Eigen::MatrixXd& reference_lrcf_rom_A() {
  static const Eigen::MatrixXd m = from_rows({
      {-0.0805, -0.0068, -0.0286},
      {-0.0794, -0.4975, 0.079},
      {-0.0604, -0.0613, -0.0301}});
  return m;
}

inline const Eigen::MatrixXd& reference_lrcf_rom_B() {
  static const Eigen::MatrixXd m = from_rows({
      {0.3069, 0.039, 2.328},
      {-2.072, -0.6416, 0.5037},
      {0.2104, -0.8376, 0.1153}});
  return m;
}

inline const Eigen::MatrixXd& reference_lrcf_rom_C() {
  static const Eigen::MatrixXd m = from_rows({
      {0.7776, -1.5886, 0.3494},
      {1.1531, 1.4209, 0.1723}});
  return m;
}

inline const Eigen::MatrixXd& reference_rom_A() {
  static const Eigen::MatrixXd m = from_rows({
      {-0.0805, 0.0068, -0.0286},
      {0.0794, -0.4975, -0.079},
      {-0.0604, 0.0613, -0.0301}});
  return m;
}

inline const Eigen::MatrixXd& reference_rom_B() {
  static const Eigen::MatrixXd m = from_rows({
      {0.3069, 0.039, 2.328},
      {2.072, 0.6416, -0.5037},
      {0.2104, -0.8376, 0.1153}});
  return m;
}

inline const Eigen::MatrixXd& reference_rom_C() {
  static const Eigen::MatrixXd m = from_rows({
      {0.7776, 1.5886, 0.3494},
      {1.1531, -1.4209, 0.1723}});
  return m;
}

inline const Eigen::MatrixXd& reference_lrcf_Zp() {
  static const Eigen::MatrixXd m = from_rows({
      {-0.6466, -0.2227, -1.4898, 0.5659, -0.0238, 1.4611},
      {1.8516, 0.3883, -1.3579, -1.3736, -0.5432, 1.4384},
      {-0.3853, 0.9011, -1.0101, 0.1167, -0.4042, 0.5705},
      {0.167, -0.4723, 0.7534, 0.4572, 0.0921, -0.8769},
      {0.1037, 0.0536, 0.1489, 0.1199, 0.345, 0.4309},
      {-0.0334, -0.03, 0.0241, 0.2669, -0.2894, 0.3827},
      {-0.0098, -0.0708, -0.0433, -0.3417, 0.1094, -0.4951},
      {-0.017, 0.0287, -0.0414, -0.0351, 0.0017, -0.0638}});
  return m;
}

inline const Eigen::MatrixXd& reference_lrcf_Zq() {
  static const Eigen::MatrixXd m = from_rows({
      {-0.4407, -0.9953, -0.6352, -1.6598, 0.3442, -0.6511},
      {-3.6806, -1.3208, -2.8997, -0.8665, -0.4481, 0.2312},
      {0.093, -0.3181, 0.0484, -0.4378, 0.2807, 0.194},
      {3.2533, 1.1672, -1.0053, -0.0037, -0.3344, -0.1048},
      {2.1278, 0.3444, -0.7817, -0.5453, -0.0709, 0.1792},
      {0.0447, -0.046, 0.1297, -0.0841, -0.0628, -0.0457},
      {-0.8279, -0.217, 0.4058, 0.1195, -0.0289, -0.0589},
      {-0.2874, -0.0689, 0.1462, 0.049, -0.0216, -0.026}});
  return m;
}

}  // namespace lrbt::testing

#endif  // LRBT_TESTS_SUPPORT_EXAMPLE_SYSTEM_HPP
