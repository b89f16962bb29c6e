// closed_forms.hpp
// Known-good closed forms for the lifting-probability quantities computed by
// the exactdensity pipeline, as rational functions of the prime p.  These were
// transcribed independently of the solver and serve as regression fixtures:
// the pipeline must reproduce every one of them exactly (canonical equality of
// reduced rational functions), never the other way around.
//
// Naming: <quantity>_c1 / _c2 denote the congruence classes p = 1 mod 3 and
// p = 2 mod 3 respectively; quantities without a suffix are class-independent.

#pragma once

namespace locsol::golden {

// Local density rho(p) of sextic forms over Z_p whose curve y^3 = f(x,z) has a
// Q_p-point, for large p in each congruence class mod 3.
inline const char* rho_c1 =
    "(1296*p^57 + 3888*p^56 + 9072*p^55 + 16848*p^54 + 27648*p^53 + 39744*p^52"
    " + 53136*p^51 + 66483*p^50 + 80019*p^49 + 93141*p^48 + 107469*p^47"
    " + 120357*p^46 + 135567*p^45 + 148347*p^44 + 162918*p^43 + 176004*p^42"
    " + 190278*p^41 + 203459*p^40 + 218272*p^39 + 232083*p^38 + 243639*p^37"
    " + 255267*p^36 + 261719*p^35 + 264925*p^34 + 265302*p^33 + 261540*p^32"
    " + 254790*p^31 + 250736*p^30 + 241384*p^29 + 226503*p^28 + 214137*p^27"
    " + 195273*p^26 + 170793*p^25 + 151839*p^24 + 136215*p^23 + 118998*p^22"
    " + 105228*p^21 + 94860*p^20 + 80471*p^19 + 67048*p^18 + 52623*p^17"
    " + 40617*p^16 + 28773*p^15 + 19247*p^14 + 12109*p^13 + 7614*p^12"
    " + 3420*p^11 + 756*p^10 - 2248*p^9 - 4943*p^8 - 6300*p^7 - 6894*p^6"
    " - 5994*p^5 - 2448*p^4 - 648*p^3 + 324*p^2 + 1296*p + 1296)"
    " / (1296*(p^12 - p^11 + p^9 - p^8 + p^6 - p^4 + p^3 - p + 1)"
    "*(p^8 - p^6 + p^4 - p^2 + 1)*(p^6 + p^5 + p^4 + p^3 + p^2 + p + 1)"
    "*(p^4 + p^3 + p^2 + p + 1)^3*(p^4 - p^3 + p^2 - p + 1)"
    "*(p^2 + p + 1)*(p^2 + 1)*p^11)";

inline const char* rho_c2 =
    "(144*p^57 + 432*p^56 + 1008*p^55 + 1872*p^54 + 3168*p^53 + 4608*p^52"
    " + 6336*p^51 + 8011*p^50 + 9803*p^49 + 11357*p^48 + 13061*p^47"
    " + 14525*p^46 + 16295*p^45 + 17875*p^44 + 19654*p^43 + 21212*p^42"
    " + 23030*p^41 + 24563*p^40 + 26320*p^39 + 27771*p^38 + 29711*p^37"
    " + 30859*p^36 + 31135*p^35 + 31525*p^34 + 31510*p^33 + 29436*p^32"
    " + 28502*p^31 + 28616*p^30 + 26856*p^29 + 25087*p^28 + 25057*p^27"
    " + 23041*p^26 + 19921*p^25 + 18119*p^24 + 16287*p^23 + 13798*p^22"
    " + 12140*p^21 + 10844*p^20 + 9191*p^19 + 7480*p^18 + 5839*p^17"
    " + 4265*p^16 + 2909*p^15 + 1943*p^14 + 1109*p^13 + 590*p^12 + 604*p^11"
    " + 372*p^10 - 144*p^9 - 87*p^8 - 84*p^7 - 678*p^6 - 618*p^5 - 144*p^4"
    " - 168*p^3 - 156*p^2 + 144*p + 144)"
    " / (144*(p^12 - p^11 + p^9 - p^8 + p^6 - p^4 + p^3 - p + 1)"
    "*(p^8 - p^6 + p^4 - p^2 + 1)*(p^6 + p^5 + p^4 + p^3 + p^2 + p + 1)"
    "*(p^4 + p^3 + p^2 + p + 1)^3*(p^4 - p^3 + p^2 - p + 1)"
    "*(p^2 + p + 1)*(p^2 + 1)*p^11)";

// Density restricted to forms whose leading coefficient is a non-cube unit
// (no rational point above infinity mod p); p = 1 mod 3 only.
inline const char* rho_star_c1 =
    "(72*p^34 + 216*p^33 + 432*p^32 + 720*p^31 + 1008*p^30 + 1224*p^29"
    " + 1260*p^28 + 1296*p^27 + 1152*p^26 + 1080*p^25 + 1068*p^24 + 1032*p^23"
    " + 1104*p^22 + 1092*p^21 + 1116*p^20 + 1089*p^19 + 1104*p^18 + 1088*p^17"
    " + 1126*p^16 + 1149*p^15 + 1017*p^14 + 906*p^13 + 830*p^12 + 634*p^11"
    " + 360*p^10 + 441*p^9 + 378*p^8 + 194*p^7 + 280*p^6 + 327*p^5 + 93*p^4"
    " + 36*p^3 + 60*p^2 - 36*p - 72)"
    " / (72*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^7)";

// Solubility probability for forms whose reduction has factorization type
// (1^2 1^2 1^2): three distinct double roots; p = 1 mod 3 only.
inline const char* sigma_4_c1 =
    "(72*p^29 + 180*p^28 + 396*p^27 + 684*p^26 + 1044*p^25 + 1392*p^24"
    " + 1608*p^23 + 1824*p^22 + 1848*p^21 + 1872*p^20 + 1845*p^19 + 1860*p^18"
    " + 1844*p^17 + 1882*p^16 + 1905*p^15 + 1845*p^14 + 1878*p^13 + 2018*p^12"
    " + 2110*p^11 + 2124*p^10 + 2349*p^9 + 2214*p^8 + 1850*p^7 + 1504*p^6"
    " + 1119*p^5 + 525*p^4 + 216*p^3 + 96*p^2 - 36*p - 72)"
    " / (72*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + p + 1)*(p^2 + 1)*p^2)";

// As sigma_4 but with the leading coefficient constrained to be a non-cube.
inline const char* sigma_4_star_c1 =
    "(72*p^29 + 108*p^28 + 288*p^27 + 432*p^26 + 648*p^25 + 852*p^24"
    " + 960*p^23 + 1104*p^22 + 1092*p^21 + 1116*p^20 + 1089*p^19 + 1104*p^18"
    " + 1088*p^17 + 1126*p^16 + 1149*p^15 + 1089*p^14 + 1122*p^13 + 1262*p^12"
    " + 1354*p^11 + 1368*p^10 + 1593*p^9 + 1530*p^8 + 1202*p^7 + 1000*p^6"
    " + 759*p^5 + 309*p^4 + 108*p^3 + 60*p^2 - 36*p - 72)"
    " / (72*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^3)";

// Solubility probability for forms with a sextuple root (type (1^6)).
inline const char* sigma_5_c1 =
    "(819*p^50 + 2691*p^49 + 6309*p^48 + 12573*p^47 + 21573*p^46 + 32895*p^45"
    " + 45387*p^44 + 59238*p^43 + 73080*p^42 + 86742*p^41 + 100547*p^40"
    " + 114472*p^39 + 128439*p^38 + 141579*p^37 + 157131*p^36 + 169247*p^35"
    " + 184741*p^34 + 203094*p^33 + 219096*p^32 + 237726*p^31 + 261800*p^30"
    " + 276904*p^29 + 283923*p^28 + 291645*p^27 + 286281*p^26 + 267993*p^25"
    " + 254943*p^24 + 240039*p^23 + 222678*p^22 + 208152*p^21 + 198396*p^20"
    " + 183383*p^19 + 170848*p^18 + 156267*p^17 + 142677*p^16 + 128205*p^15"
    " + 115607*p^14 + 101365*p^13 + 86670*p^12 + 73512*p^11 + 57564*p^10"
    " + 39824*p^9 + 25201*p^8 + 13608*p^7 + 2430*p^6 - 2106*p^5 - 864*p^4"
    " - 1080*p^3 - 540*p^2 + 1296*p + 1296)"
    " / (1296*(p^12 - p^11 + p^9 - p^8 + p^6 - p^4 + p^3 - p + 1)"
    "*(p^8 - p^6 + p^4 - p^2 + 1)*(p^6 + p^5 + p^4 + p^3 + p^2 + p + 1)"
    "*(p^4 + p^3 + p^2 + p + 1)^3*(p^4 - p^3 + p^2 - p + 1)"
    "*(p^2 + p + 1)*(p^2 + 1)*p^4)";

inline const char* sigma_5_c2 =
    "(91*p^50 + 299*p^49 + 701*p^48 + 1397*p^47 + 2429*p^46 + 3767*p^45"
    " + 5347*p^44 + 6982*p^43 + 8684*p^42 + 10358*p^41 + 12035*p^40"
    " + 13648*p^39 + 15243*p^38 + 17183*p^37 + 18907*p^36 + 19903*p^35"
    " + 21877*p^34 + 23878*p^33 + 24684*p^32 + 26774*p^31 + 30344*p^30"
    " + 31608*p^29 + 32719*p^28 + 34705*p^27 + 34273*p^26 + 31873*p^25"
    " + 30647*p^24 + 28815*p^23 + 26470*p^22 + 24668*p^21 + 23516*p^20"
    " + 21719*p^19 + 20152*p^18 + 18367*p^17 + 16793*p^16 + 15005*p^15"
    " + 13607*p^14 + 11765*p^13 + 10094*p^12 + 8524*p^11 + 6708*p^10"
    " + 4464*p^9 + 3081*p^8 + 1788*p^7 + 330*p^6 - 186*p^5 - 168*p^3"
    " - 156*p^2 + 144*p + 144)"
    " / (144*(p^12 - p^11 + p^9 - p^8 + p^6 - p^4 + p^3 - p + 1)"
    "*(p^8 - p^6 + p^4 - p^2 + 1)*(p^6 + p^5 + p^4 + p^3 + p^2 + p + 1)"
    "*(p^4 + p^3 + p^2 + p + 1)^3*(p^4 - p^3 + p^2 - p + 1)"
    "*(p^2 + p + 1)*(p^2 + 1)*p^4)";

// Solubility probability when c_5, c_6 have valuation >= 3, v(c_4) = 2 and
// c_0..c_3 vary over p^2 Z_p (descent depth two below a quadruple root).
inline const char* mu_c1 =
    "(45*p^11 - 6*p^10 + 5*p^9 - 30*p^8 + 69*p^7 - 29*p^6 - 39*p^5 + 81*p^4"
    " - 120*p^3 + 60*p^2 + 108*p - 72) / (72*p^11)";

inline const char* mu_c2 =
    "((5*p^10 - 3*p^9 + 2*p^7 + 3*p^6 - 16*p^5 + 25*p^4 - 16*p^3 - 8*p^2"
    " + 20*p - 8)*(p + 1)) / (8*p^11)";

// Shallower variant: v(c_4) = 1, c_5, c_6 of valuation >= 2, c_0..c_3 in pZ_p.
inline const char* mu_prime_c1 =
    "(45*p^20 - 18*p^19 + 27*p^18 + 18*p^17 - 36*p^16 - 12*p^15 + 12*p^14"
    " + 36*p^12 - 27*p^11 - 6*p^10 + 5*p^9 - 30*p^8 + 69*p^7 - 29*p^6"
    " - 39*p^5 + 81*p^4 - 120*p^3 + 60*p^2 + 108*p - 72) / (72*p^20)";

inline const char* mu_prime_c2 =
    "(5*p^20 - 2*p^19 + 3*p^18 + 2*p^17 - 4*p^16 + 4*p^15 - 4*p^14 + 4*p^12"
    " - 3*p^11 + 2*p^10 - 3*p^9 + 2*p^8 + 5*p^7 - 13*p^6 + 9*p^5 + 9*p^4"
    " - 24*p^3 + 12*p^2 + 12*p - 8) / (8*p^20)";

// Solubility probability for forms with exactly one double root and no other
// rational root, conditioned on no liftable point away from the double root.
inline const char* lambda_c1 =
    "(72*p^28 + 144*p^27 + 288*p^26 + 504*p^25 + 744*p^24 + 888*p^23"
    " + 1068*p^22 + 1092*p^21 + 1116*p^20 + 1089*p^19 + 1104*p^18 + 1088*p^17"
    " + 1126*p^16 + 1149*p^15 + 1089*p^14 + 1122*p^13 + 1262*p^12 + 1354*p^11"
    " + 1368*p^10 + 1665*p^9 + 1566*p^8 + 1346*p^7 + 1144*p^6 + 903*p^5"
    " + 417*p^4 + 180*p^3 + 96*p^2 - 36*p - 72)"
    " / (72*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^2)";

// Monic analogue of sigma_5 entering the tau recursion (quintic-residual
// average over monic sextics with a deep sextuple-root descent).
inline const char* sigma_5_prime_c1 =
    "(91*p^30 + 246*p^29 + 478*p^28 + 850*p^27 + 1262*p^26 + 1680*p^25"
    " + 1902*p^24 + 2202*p^23 + 2242*p^22 + 2271*p^21 + 2243*p^20 + 2270*p^19"
    " + 2214*p^18 + 2185*p^17 + 2299*p^16 + 2142*p^15 + 2228*p^14 + 2570*p^13"
    " + 2512*p^12 + 2701*p^11 + 3300*p^10 + 2984*p^9 + 2348*p^8 + 2323*p^7"
    " + 1363*p^6 + 288*p^5 + 186*p^4 + 60*p^3 - 264*p^2 - 72*p + 144)"
    " / (144*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^3)";

inline const char* sigma_5_prime_c2 =
    "(91*p^30 + 246*p^29 + 478*p^28 + 850*p^27 + 1294*p^26 + 1792*p^25"
    " + 2206*p^24 + 2410*p^23 + 2578*p^22 + 2671*p^21 + 2635*p^20 + 2574*p^19"
    " + 2590*p^18 + 2769*p^17 + 2667*p^16 + 2286*p^15 + 2580*p^14 + 2826*p^13"
    " + 2160*p^12 + 2781*p^11 + 3852*p^10 + 3096*p^9 + 2628*p^8 + 3195*p^7"
    " + 1827*p^6 + 432*p^5 + 522*p^4 + 252*p^3 - 360*p^2 - 72*p + 144)"
    " / (144*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^3)";

// Deeper monic analogue of sigma_5 entering the theta recursion.
inline const char* sigma_5_prime_prime_c1 =
    "(819*p^43 + 2376*p^42 + 4599*p^41 + 7424*p^40 + 11091*p^39 + 14515*p^38"
    " + 16101*p^37 + 19341*p^36 + 19532*p^35 + 19542*p^34 + 20605*p^33"
    " + 21042*p^32 + 21969*p^31 + 25640*p^30 + 27075*p^29 + 25531*p^28"
    " + 26901*p^27 + 24399*p^26 + 18864*p^25 + 19800*p^24 + 18900*p^23"
    " + 16200*p^22 + 14580*p^21 + 14148*p^20 + 8478*p^19 + 6102*p^18"
    " + 3492*p^17 + 1476*p^16 + 378*p^15 + 378*p^14 - 324*p^13 + 468*p^12"
    " + 180*p^11 - 864*p^10 + 594*p^9 + 2052*p^8 + 684*p^7 + 3096*p^6"
    " + 4590*p^5 + 1674*p^4 + 648*p^3 + 1080*p^2 - 648*p - 1296)"
    " / (1296*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^16)";

inline const char* sigma_5_prime_prime_c2 =
    "(91*p^43 + 300*p^42 + 607*p^41 + 1024*p^40 + 1531*p^39 + 1903*p^38"
    " + 2329*p^37 + 2581*p^36 + 2404*p^35 + 2686*p^34 + 2725*p^33 + 2166*p^32"
    " + 2497*p^31 + 3216*p^30 + 2739*p^29 + 2943*p^28 + 3897*p^27 + 3279*p^26"
    " + 2544*p^25 + 2904*p^24 + 2676*p^23 + 1992*p^22 + 1908*p^21 + 1764*p^20"
    " + 1134*p^19 + 630*p^18 + 324*p^17 + 180*p^16 + 90*p^15 - 54*p^14"
    " - 36*p^13 + 180*p^12 - 108*p^11 - 288*p^10 + 162*p^9 + 180*p^8"
    " - 180*p^7 + 360*p^6 + 558*p^5 + 90*p^4 + 72*p^3 + 216*p^2 - 72*p - 144)"
    " / (144*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^16)";

// tau_i: lifting probabilities at a multiple root of a *monic* reduction,
// indexed by root multiplicity pattern; only the non-elementary ones are
// pinned here (tau_2 = 1/p etc. are asserted structurally in tests).
inline const char* tau_6_c1 =
    "((6*p^4 + 3*p^3 + 5*p^2 + 4*p + 4)*(3*p^3 + p^2 + 2*p + 2))"
    " / (9*(p^4 + p^3 + p^2 + p + 1)^2)";

inline const char* tau_6_c2 =
    "((6*p^4 + 3*p^3 + 3*p^2 + 4*p + 4)*(3*p^2 + 2)*(p + 1))"
    " / (9*(p^4 + p^3 + p^2 + p + 1)^2)";

inline const char* tau_7_c1 =
    "(72*p^16 - 48*p^15 + 12*p^14 + 36*p^12 - 27*p^11 - 6*p^10 + 5*p^9"
    " - 30*p^8 + 69*p^7 - 29*p^6 - 39*p^5 + 81*p^4 - 120*p^3 + 60*p^2"
    " + 108*p - 72) / (72*p^17)";

inline const char* tau_7_c2 =
    "(8*p^16 - 4*p^14 + 4*p^12 - 3*p^11 + 2*p^10 - 3*p^9 + 2*p^8 + 5*p^7"
    " - 13*p^6 + 9*p^5 + 9*p^4 - 24*p^3 + 12*p^2 + 12*p - 8) / (8*p^17)";

inline const char* tau_8_c1 =
    "(144*p^17 - 120*p^16 + 60*p^15 - 12*p^14 + 36*p^13 - 63*p^12 + 21*p^11"
    " + 11*p^10 - 35*p^9 + 99*p^8 - 98*p^7 - 10*p^6 + 120*p^5 - 201*p^4"
    " + 180*p^3 + 48*p^2 - 180*p + 72) / (72*p^18)";

inline const char* tau_8_c2 =
    "(16*p^17 - 8*p^16 - 4*p^15 + 4*p^14 + 4*p^13 - 7*p^12 + 5*p^11 - 5*p^10"
    " + 5*p^9 + 3*p^8 - 18*p^7 + 22*p^6 - 33*p^4 + 36*p^3 - 20*p + 8)"
    " / (8*p^18)";

inline const char* tau_9_c1 =
    "(144*p^44 + 336*p^43 + 600*p^42 + 936*p^41 + 1416*p^40 + 1704*p^39"
    " + 1968*p^38 + 2160*p^37 + 2328*p^36 + 2136*p^35 + 2280*p^34 + 2472*p^33"
    " + 2592*p^32 + 2784*p^31 + 3115*p^30 + 3030*p^29 + 2806*p^28 + 2650*p^27"
    " + 2366*p^26 + 2256*p^25 + 1998*p^24 + 1914*p^23 + 1642*p^22 + 1335*p^21"
    " + 827*p^20 + 566*p^19 + 246*p^18 + 25*p^17 - 29*p^16 + 6*p^15 - 52*p^14"
    " + 98*p^13 - 80*p^12 - 83*p^11 + 276*p^10 + 200*p^9 + 20*p^8 + 523*p^7"
    " + 259*p^6 - 288*p^5 - 54*p^4 + 12*p^3 - 264*p^2 - 72*p + 144)"
    " / (144*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^18)";

inline const char* tau_9_c2 =
    "(144*p^44 + 432*p^43 + 792*p^42 + 1224*p^41 + 1800*p^40 + 2184*p^39"
    " + 2352*p^38 + 2640*p^37 + 2712*p^36 + 2424*p^35 + 2472*p^34 + 2664*p^33"
    " + 2592*p^32 + 2880*p^31 + 3403*p^30 + 3414*p^29 + 3286*p^28 + 3226*p^27"
    " + 2878*p^26 + 2656*p^25 + 2494*p^24 + 2122*p^23 + 1786*p^22 + 1447*p^21"
    " + 835*p^20 + 390*p^19 + 238*p^18 + 129*p^17 - 45*p^16 - 138*p^15"
    " + 108*p^14 + 162*p^13 - 432*p^12 - 99*p^11 + 540*p^10 - 72*p^9"
    " - 180*p^8 + 819*p^7 + 243*p^6 - 432*p^5 + 90*p^4 + 108*p^3 - 360*p^2"
    " - 72*p + 144)"
    " / (144*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^18)";

// theta_i: lifting probabilities at a multiple root of an up-to-scaling
// reduction (leading coefficient averaged over all classes).
inline const char* theta_3_c1 =
    "((10*p^3 - p^2 + 3*p - 6)*(2*p^2 - 3*p + 3)*(p + 2)) / (36*p^6)";

inline const char* theta_3_c2 =
    "((2*p^3 + p^2 + p - 2)*(2*p^2 - 3*p + 2)*(p + 1)) / (4*p^6)";

inline const char* theta_4_c1 =
    "((76*p^6 - 14*p^5 + 43*p^4 - 90*p^3 + 21*p^2 - 36*p + 36)"
    "*(2*p^2 - 3*p + 3)*(p + 2)) / (216*p^9)";

inline const char* theta_4_c2 =
    "((4*p^6 + 2*p^5 + 3*p^4 - 2*p^3 - 3*p^2 - 4*p + 4)"
    "*(2*p^2 - 3*p + 2)*(p + 1)) / (8*p^9)";

inline const char* theta_6_c1 =
    "((5*p^4 + 3*p^3 + 6*p^2 + 4*p + 4)*(p^4 + 3*p^3 + 2*p + 2))"
    " / (9*(p^4 + p^3 + p^2 + p + 1)^2)";

inline const char* theta_6_c2 =
    "((3*p^4 + 3*p^3 + 6*p^2 + 4*p + 4)*(3*p^3 + 2)*(p + 1))"
    " / (9*(p^4 + p^3 + p^2 + p + 1)^2)";

inline const char* theta_7_c1 =
    "(2*p^8 + 4*p^7 - 6*p^6 + 3*p^5 + 2*p^4 - 4*p^3 + 2*p^2 + 9*p - 6)"
    " / (6*p^8)";

inline const char* theta_7_c2 =
    "(2*p^8 - 2*p^6 + p^5 + 2*p^4 - 4*p^3 + 2*p^2 + 3*p - 2) / (2*p^8)";

inline const char* theta_8_c1 =
    "(20*p^11 + 20*p^10 - 40*p^9 + 54*p^8 - 37*p^7 + 27*p^6 + 10*p^4 - 3*p^3"
    " + 21*p^2 - 72*p + 36) / (36*p^11)";

inline const char* theta_8_c2 =
    "(4*p^11 - 2*p^8 - p^7 + 7*p^6 - 4*p^5 - 6*p^4 + 13*p^3 - 3*p^2 - 8*p + 4)"
    " / (4*p^11)";

inline const char* theta_9_c1 =
    "(432*p^37 + 2160*p^36 + 3888*p^35 + 6264*p^34 + 9720*p^33 + 12528*p^32"
    " + 13392*p^31 + 16848*p^30 + 19440*p^29 + 21168*p^28 + 22842*p^27"
    " + 25920*p^26 + 24948*p^25 + 23004*p^24 + 22356*p^23 + 20907*p^22"
    " + 19548*p^21 + 19179*p^20 + 20276*p^19 + 19569*p^18 + 20185*p^17"
    " + 17433*p^16 + 16929*p^15 + 13646*p^14 + 10200*p^13 + 7753*p^12"
    " + 8118*p^11 + 5301*p^10 + 5336*p^9 + 6501*p^8 + 4741*p^7 + 1665*p^6"
    " + 2547*p^5 + 450*p^4 - 882*p^3 - 540*p^2 + 108*p - 648)"
    " / (1296*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^10)";

inline const char* theta_9_c2 =
    "(144*p^37 + 432*p^36 + 720*p^35 + 1080*p^34 + 1656*p^33 + 1872*p^32"
    " + 1872*p^31 + 2160*p^30 + 2448*p^29 + 2448*p^28 + 2826*p^27 + 3264*p^26"
    " + 3252*p^25 + 3036*p^24 + 2964*p^23 + 2803*p^22 + 2592*p^21 + 2515*p^20"
    " + 2644*p^19 + 2665*p^18 + 2389*p^17 + 2221*p^16 + 2041*p^15 + 1414*p^14"
    " + 976*p^13 + 817*p^12 + 474*p^11 + 229*p^10 + 480*p^9 + 453*p^8"
    " + 297*p^7 + 453*p^6 + 387*p^5 + 66*p^4 + 30*p^3 + 36*p^2 - 84*p - 72)"
    " / (144*(p^8 - p^6 + p^4 - p^2 + 1)*(p^4 + p^3 + p^2 + p + 1)^3"
    "*(p^4 - p^3 + p^2 - p + 1)*(p^2 + 1)*(p + 1)*p^10)";

// Exact local densities at the exceptional small primes (decimal-free).
inline const char* rho_p2_exact =
    "45948977725819217081/46164832540903014400";
inline const char* rho_p3_exact =
    "900175334869743731875930997281/908381960435133191895132960000";
inline const char* rho_p7_exact =
    "63104494755178622851603292623187277054743730183645677893972/"
    "64083174787206696882429945655801281538844149896400159815375";
inline const char* rho_p13_exact =
    "7877728357244577414025901931296747409682076255666526984515273526822853/"
    "7890643570620106747776737292792780623510727026420779539893772399701475";
inline const char* rho_p19_exact =
    "3122673715489206150449285868243361150392235799365815266879438393279346795671/"
    "3123410013311365155035964479837966797560851333614271490136481337080636454180";
inline const char* rho_p31_exact =
    "9196796457678318869139089936786462146535210039832850454297877482020635073857159758299/"
    "9196865061587843544830989041473808798913128587425995645857828572610918436035833907250";
inline const char* rho_p37_exact =
    "171128647900820194784458101787952920169924464886519055453844647154184805036447476640345735119/"
    "171128889636157060536894474187017088464271236509977199491208939449738127658679723715588944500";
inline const char* rho_p43_exact =
    "84000121343283090388653356431804100707331364779290664490547105768867844862712134447832720508750281/"
    "84000151671513555191647712567596101710800846209116830568013729377404991150901973105093039939237500";

}  // namespace locsol::golden
