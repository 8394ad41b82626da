#include "bcr/k7_data.hpp"

namespace bcr {

// figure coordinates in thousandths; s = (0,-2), t = (0,2)
const std::array<std::array<int, 2>, 7>& k7_vertices() {
  static const std::array<std::array<int, 2>, 7> v = {{
      {0, -2000},
      {0, 2000},
      {276, 32},
      {276, 672},
      {-333, -230},
      {-709, 320},
      {-333, 838},
  }};
  return v;
}

const std::vector<K7Curve>& k7_curves() {
  static const std::vector<K7Curve> c = {
      {4, 0, {{-333,-230}, {0,-2000}}},
      {0, 2, {{0,-2000}, {276,32}}},
      {2, 3, {{276,32}, {276,672}}},
      {3, 1, {{276,672}, {0,2000}}},
      {1, 6, {{0,2000}, {-333,838}}},
      {6, 5, {{-333,838}, {-709,320}}},
      {5, 4, {{-709,320}, {-333,-230}}},
      {4, 2, {{-333,-230}, {276,32}}},
      {2, 6, {{276,32}, {-333,838}}},
      {6, 4, {{-333,838}, {-333,-230}}},
      {4, 3, {{-333,-230}, {276,672}}},
      {3, 5, {{276,672}, {-709,320}}},
      {5, 2, {{-709,320}, {276,32}}},
      {6, 3, {{-333,838}, {276,672}}},
      {0, 5, {{0,-2000}, {-128,-1686}, {-245,-1399}, {-350,-1127}, {-444,-863}, {-528,-596}, {-599,-316}, {-660,-14}, {-709,320}}},
      {0, 6, {{0,-2000}, {-314,-1503}, {-618,-1020}, {-877,-565}, {-1058,-150}, {-1128,211}, {-1053,505}, {-799,718}, {-333,838}}},
      {5, 1, {{-709,320}, {-649,567}, {-586,792}, {-517,999}, {-440,1196}, {-353,1388}, {-252,1582}, {-135,1784}, {0,2000}}},
      {4, 1, {{-333,-230}, {-652,-118}, {-834,85}, {-897,359}, {-857,680}, {-730,1027}, {-534,1377}, {-285,1709}, {0,2000}}},
      {3, 0, {{276,672}, {420,434}, {477,131}, {467,-219}, {406,-597}, {311,-983}, {200,-1358}, {91,-1704}, {0,-2000}}},
      {1, 0, {{0,2000}, {359,1559}, {609,1077}, {752,564}, {793,35}, {734,-499}, {580,-1025}, {334,-1529}, {0,-2000}}},
      {1, 2, {{0,2000}, {142,1738}, {283,1470}, {409,1202}, {505,938}, {554,684}, {543,445}, {455,226}, {276,32}}},
  };
  return c;
}

}  // namespace bcr
