// Generated by gen_frozen.py (sympy); do not edit.
#pragma once

#include <vector>

#include "support/frozen_types.hpp"

namespace frozen {

inline const std::vector<UTerm> s5{{1, "3"}, {3, "-4"}, {5, "1"}};
inline const std::vector<UTerm> s10{{0, "-1"}, {2, "15"}, {4, "-35"}, {6, "28"}, {8, "-9"}, {10, "1"}};
inline const std::vector<UTerm> s25{{1, "13"}, {3, "-364"}, {5, "3003"}, {7, "-11440"}, {9, "24310"}, {11, "-31824"}, {13, "27132"}, {15, "-15504"}, {17, "5985"}, {19, "-1540"}, {21, "253"}, {23, "-24"}, {25, "1"}};
inline const std::vector<UTerm> s_neg7{{1, "-3"}, {3, "4"}, {5, "-1"}};
inline const std::vector<UTerm> t6{{0, "-2"}, {2, "9"}, {4, "-6"}, {6, "1"}};
inline const std::vector<UTerm> t15{{1, "-15"}, {3, "140"}, {5, "-378"}, {7, "450"}, {9, "-275"}, {11, "90"}, {13, "-15"}, {15, "1"}};
inline const std::vector<BTerm> x2{{0, 0, "2"}, {0, 2, "-1"}, {2, 0, "-2"}, {2, 1, "-1"}};
inline const std::vector<BTerm> x3{{0, 1, "3"}, {0, 3, "-1"}, {2, 0, "-1"}, {2, 1, "-2"}, {2, 2, "-1"}};
inline const std::vector<BTerm> x6{{0, 0, "2"}, {0, 2, "-9"}, {0, 4, "6"}, {0, 6, "-1"}, {2, 0, "-2"}, {2, 1, "-1"}, {2, 2, "4"}, {2, 3, "2"}, {2, 4, "-2"}, {2, 5, "-1"}};
inline const std::vector<BTerm> x12{{0, 0, "-2"}, {0, 2, "36"}, {0, 4, "-105"}, {0, 6, "112"}, {0, 8, "-54"}, {0, 10, "12"}, {0, 12, "-1"}, {2, 2, "-18"}, {2, 3, "-9"}, {2, 4, "48"}, {2, 5, "24"}, {2, 6, "-44"}, {2, 7, "-22"}, {2, 8, "16"}, {2, 9, "8"}, {2, 10, "-2"}, {2, 11, "-1"}};
inline const std::vector<BTerm> l1{{0, 0, "2"}, {0, 1, "-3"}, {0, 2, "-1"}, {0, 3, "1"}, {2, 0, "-2"}, {2, 1, "3"}, {2, 2, "-1"}};
inline const std::vector<BTerm> lp1{{0, 0, "2"}, {0, 1, "-1"}, {0, 2, "-1"}, {2, 0, "-1"}, {2, 1, "1"}};
inline const std::vector<BTerm> l2{{0, 0, "-2"}, {0, 1, "5"}, {0, 2, "4"}, {0, 3, "-5"}, {0, 4, "-1"}, {0, 5, "1"}, {2, 0, "8"}, {2, 1, "-14"}, {2, 2, "1"}, {2, 3, "6"}, {2, 4, "-2"}, {4, 0, "-4"}, {4, 1, "8"}, {4, 2, "-5"}, {4, 3, "1"}};
inline const std::vector<BTerm> lp2{{0, 0, "-2"}, {0, 1, "3"}, {0, 2, "4"}, {0, 3, "-1"}, {0, 4, "-1"}, {2, 0, "5"}, {2, 1, "-6"}, {2, 2, "-2"}, {2, 3, "2"}, {4, 0, "-2"}, {4, 1, "3"}, {4, 2, "-1"}};
inline const std::vector<BTerm> l3{{0, 0, "2"}, {0, 1, "-7"}, {0, 2, "-9"}, {0, 3, "14"}, {0, 4, "6"}, {0, 5, "-7"}, {0, 6, "-1"}, {0, 7, "1"}, {2, 0, "-18"}, {2, 1, "37"}, {2, 2, "10"}, {2, 3, "-40"}, {2, 4, "8"}, {2, 5, "9"}, {2, 6, "-3"}, {4, 0, "24"}, {4, 1, "-52"}, {4, 2, "22"}, {4, 3, "17"}, {4, 4, "-15"}, {4, 5, "3"}, {6, 0, "-8"}, {6, 1, "20"}, {6, 2, "-18"}, {6, 3, "7"}, {6, 4, "-1"}};
inline const std::vector<BTerm> lp3{{0, 0, "2"}, {0, 1, "-5"}, {0, 2, "-9"}, {0, 3, "5"}, {0, 4, "6"}, {0, 5, "-1"}, {0, 6, "-1"}, {2, 0, "-13"}, {2, 1, "19"}, {2, 2, "14"}, {2, 3, "-16"}, {2, 4, "-3"}, {2, 5, "3"}, {4, 0, "14"}, {4, 1, "-23"}, {4, 2, "2"}, {4, 3, "9"}, {4, 4, "-3"}, {6, 0, "-4"}, {6, 1, "8"}, {6, 2, "-5"}, {6, 3, "1"}};
inline const std::vector<BTerm> r3{{0, 0, "2"}, {0, 1, "-3"}, {0, 2, "-4"}, {0, 3, "1"}, {0, 4, "1"}, {2, 1, "2"}, {2, 2, "3"}, {2, 3, "1"}};
inline const std::vector<BTerm> rt4{{0, 0, "1"}, {0, 1, "2"}, {0, 2, "-3"}, {0, 3, "-1"}, {0, 4, "1"}, {2, 1, "-1"}, {2, 2, "1"}, {2, 3, "1"}};
inline const std::vector<BTerm> pull_f_x4{{0, 0, "-2"}, {0, 2, "16"}, {0, 4, "-20"}, {0, 6, "8"}, {0, 8, "-1"}, {2, 0, "16"}, {2, 1, "-16"}, {2, 2, "-60"}, {2, 3, "40"}, {2, 4, "40"}, {2, 5, "-24"}, {2, 6, "-7"}, {2, 7, "4"}, {4, 0, "-40"}, {4, 1, "60"}, {4, 2, "44"}, {4, 3, "-80"}, {4, 4, "6"}, {4, 5, "21"}, {4, 6, "-6"}, {6, 0, "32"}, {6, 1, "-64"}, {6, 2, "20"}, {6, 3, "28"}, {6, 4, "-21"}, {6, 5, "4"}, {8, 0, "-8"}, {8, 1, "20"}, {8, 2, "-18"}, {8, 3, "7"}, {8, 4, "-1"}};
inline const std::vector<BTerm> phi5{{0, 0, "-1"}, {0, 1, "-1"}, {0, 2, "1"}, {2, 0, "2"}, {2, 1, "-1"}};
inline const std::vector<BTerm> phi7{{0, 0, "1"}, {0, 1, "-2"}, {0, 2, "-1"}, {0, 3, "1"}, {2, 0, "-2"}, {2, 1, "3"}, {2, 2, "-1"}};
inline const std::vector<BTerm> phi11{{0, 0, "-1"}, {0, 1, "3"}, {0, 2, "3"}, {0, 3, "-4"}, {0, 4, "-1"}, {0, 5, "1"}, {2, 2, "-2"}, {2, 3, "3"}, {2, 4, "-1"}};
inline const std::vector<BTerm> phi13{{0, 0, "-1"}, {0, 1, "-3"}, {0, 2, "6"}, {0, 3, "4"}, {0, 4, "-5"}, {0, 5, "-1"}, {0, 6, "1"}, {2, 2, "-2"}, {2, 3, "-1"}, {2, 4, "3"}, {2, 5, "-1"}};
inline const std::vector<BTerm> phi17{{0, 0, "1"}, {0, 1, "4"}, {0, 2, "-10"}, {0, 3, "-10"}, {0, 4, "15"}, {0, 5, "6"}, {0, 6, "-7"}, {0, 7, "-1"}, {0, 8, "1"}, {2, 0, "-2"}, {2, 1, "-1"}, {2, 2, "7"}, {2, 3, "1"}, {2, 4, "-8"}, {2, 5, "1"}, {2, 6, "3"}, {2, 7, "-1"}};
inline const std::vector<BTerm> oracle_3_1{{0, 0, "1"}, {0, 1, "-1"}};
inline const std::vector<BTerm> oracle_7_3{{0, 0, "-1"}, {0, 1, "2"}, {0, 2, "1"}, {0, 3, "-1"}, {2, 0, "2"}, {2, 1, "-3"}, {2, 2, "1"}};
inline const std::vector<BTerm> oracle_9_5{{0, 0, "-1"}, {0, 1, "-2"}, {0, 2, "3"}, {0, 3, "1"}, {0, 4, "-1"}, {2, 0, "6"}, {2, 1, "-1"}, {2, 2, "-5"}, {2, 3, "2"}, {4, 0, "-4"}, {4, 1, "4"}, {4, 2, "-1"}};
inline const std::vector<BTerm> oracle_11_2{{0, 0, "1"}, {0, 1, "-3"}, {0, 2, "-3"}, {0, 3, "4"}, {0, 4, "1"}, {0, 5, "-1"}, {2, 0, "2"}, {2, 1, "7"}, {2, 2, "-10"}, {2, 3, "-5"}, {2, 4, "4"}, {4, 0, "-4"}, {4, 1, "8"}, {4, 2, "9"}, {4, 3, "-6"}, {6, 0, "-2"}, {6, 1, "-7"}, {6, 2, "4"}, {8, 0, "2"}, {8, 1, "-1"}};
inline const std::vector<BTerm> oracle_13_5{{0, 0, "1"}, {0, 1, "3"}, {0, 2, "-6"}, {0, 3, "-4"}, {0, 4, "5"}, {0, 5, "1"}, {0, 6, "-1"}, {2, 0, "2"}, {2, 1, "-11"}, {2, 2, "13"}, {2, 4, "-6"}, {2, 5, "2"}, {4, 0, "-2"}, {4, 1, "7"}, {4, 2, "-9"}, {4, 3, "5"}, {4, 4, "-1"}};

}  // namespace frozen

