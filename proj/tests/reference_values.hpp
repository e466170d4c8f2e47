#pragma once

// Reference values from tests/oracles/gen_reference.py (mpmath, 40 digits).

namespace alphakit::reference {

struct Pair {
  double x;
  double value;
};

inline constexpr Pair kGamma[] = {
    {0.001, 999.4237724845954453},
    {0.01, 99.432585119150601632},
    {0.1, 9.5135076986687312858},
    {0.25, 3.6256099082219083119},
    {0.5, 1.7724538509055160273},
    {0.75, 1.2254167024651776451},
    {1.0, 1.0},
    {1.25, 0.90640247705547707798},
    {1.5, 0.88622692545275801365},
    {1.75, 0.91906252684888323385},
    {2.0, 1.0},
    {2.5, 1.3293403881791370205},
    {3.0, 2.0},
    {3.7, 4.1706517837966040301},
    {5.0, 24.0},
    {7.5, 1871.2543057977883465},
    {10.0, 362880.0},
    {12.3, 83385367.899970000963},
    {15.0, 87178291200.0},
    {20.0, 121645100408832000.0},
    {25.5, 3.0867705405286967828e+24},
    {33.3, 7.4875775965226323274e+35},
    {40.0, 2.0397882081197443359e+46},
    {50.0, 6.0828186403426756087e+62},
    {64.5, 1.58299188153127684e+88},
    {80.0, 8.9461821307829752869e+116},
    {100.0, 9.3326215443944152682e+155},
    {120.5, 6.1002949740240058744e+197},
    {150.0, 3.808922637630569727e+260},
    {170.0, 4.2690680090047052749e+304},
};

inline constexpr Pair kLogGamma[] = {
    {171.5, 709.14316303092824227},
    {180.0, 753.05515623048410309},
    {199.9, 857.40411336432824381},
};

inline constexpr Pair kDigamma[] = {
    {0.01, -100.56088545786867242},
    {0.25, -4.2274535333762654081},
    {0.5, -1.9635100260214234794},
    {0.75, -1.0858608797864721696},
    {1.0, -0.57721566490153286061},
    {1.5, 0.036489973978576520559},
    {2.0, 0.42278433509846713939},
    {3.3, 1.0348224890596216863},
    {7.0, 1.8727843350984671394},
    {25.0, 3.1987425128519740085},
    {180.0, 5.1901765011039098988},
};

struct PCase {
  double alpha;
  int k;
  double x;
  double p;
  double p_prime;
};

inline constexpr PCase kP[] = {
    {-0.9, 1, 0.5, 1.3393401692638516906, 1.0534516276195263402},
    {-0.5, 1, 0.3, 1.0889331564394963429, 0.35431817631632430515},
    {-0.5, 3, 0.9, 0.65172829314746483037, 1.3412142008066501802},
    {0.5, 1, 0.99, 0.67272727272727273241, -0.57851239669421484156},
    {1.5, 2, 0.7, 0.20161834799241316663, -0.34131418390468068269},
    {2.5, 5, 0.25, 0.11194583190852045038, -0.2903594796554220523},
    {3.0, 1, 0.999, 0.25025025025000000022, -0.25050075000000000045},
    {-0.25, 10, 0.95, 0.17198460224615469145, 0.41568053096797986681},
    {0.3, 40, 0.8, 0.015851103954642190652, -0.0212628693320975233},
    {-0.7, 2, 0.9999, 2.3542591310774982178, 626.31145736382301328},
};

inline constexpr Pair kGRatio[] = {
    {-0.99, 32.274015041139213936},
    {-0.9, 3.642429629126853664},
    {-0.5, 1.180340599016096226},
    {-0.1, 1.0044485146533599543},
    {0.0, 1.0},
    {1.0, 1.2732395447351626862},
    {2.5, 2.588892485704220912},
};

inline constexpr double kEulerGamma = 0.5772156649015328606065121;
inline constexpr double kSqrtPi = 1.772453850905516027298167;

}  // namespace alphakit::reference
